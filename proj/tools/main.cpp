// triv - workbench CLI for LCD and formally self-dual codes over F_q and
// R = F_q + vF_q + v^2F_q (v^3 = v).
//
// Subcommands: analyze, construct, tables, gray, search, mds.
// Exit codes: 0 success, 1 unexpected failure, 2 parse error,
// 3 precondition violation, 4 internal oracle disagreement.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <triv/triv.hpp>

using namespace triv;

namespace {

struct GlobalOpts {
    unsigned long long budget = kDefaultBudget;
    unsigned workers = 1;
    std::string output = "human";
    bool extended = false;
};

void emit_report(const Report& rep, const GlobalOpts& g) {
    if (g.output != "human")
        std::cout << io::to_json(rep).dump(2) << "\n";
    else
        std::cout << io::human_report(rep);
}

std::string dir_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

int cmd_analyze(const std::string& file, const GlobalOpts& g) {
    auto lc = io::load_code_file(file);
    Report rep;
    rep.recipe = "analyze";
    rep.add_param("file", file);
    if (lc.over_ring())
        analyze_into(rep, std::get<RingCode>(lc.code), g.budget, g.workers);
    else {
        const FieldCode& C = std::get<FieldCode>(lc.code);
        if (C.k() == 0) {
            rep.note("EmptyCode: zero-dimensional code; distance undefined");
            rep.over_ring = false;
            rep.q = C.field()->q();
            rep.n = C.n();
            rep.k = 0;
            rep.lcd = TriState::yes;
            rep.self_dual = TriState::no;
            rep.fsd = TriState::no;
        } else {
            analyze_into(rep, C, g.budget, g.workers);
        }
    }
    emit_report(rep, g);
    return 0;
}

int cmd_construct(const std::vector<std::string>& tokens, const std::string& job_file,
                  const std::string& field_spec, const std::string& ring_spec,
                  const GlobalOpts& g) {
    std::vector<io::JobLine> lines;
    std::string base_dir = ".";
    if (!job_file.empty()) {
        std::ifstream in(job_file);
        if (!in) throw error(errc::parse_error, "cannot open " + job_file);
        lines = io::parse_job(in);
        base_dir = dir_of(job_file);
    } else {
        if (tokens.empty())
            throw error(errc::parse_error, "construct needs a recipe or --job file");
        io::JobLine jl;
        jl.recipe = tokens.front();
        for (size_t i = 1; i < tokens.size(); ++i) {
            auto eq = tokens[i].find('=');
            if (eq == std::string::npos)
                throw error(errc::parse_error, "'" + tokens[i] + "' is not key=value");
            jl.kv[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
        }
        if (!field_spec.empty()) jl.kv.emplace("field", field_spec);
        if (!ring_spec.empty()) jl.kv.emplace("ring", ring_spec);
        lines.push_back(jl);
    }
    bool first = true;
    for (const auto& jl : lines) {
        Report rep = io::run_job_line(jl, base_dir, g.budget, g.workers);
        if (g.output != "human") {
            std::cout << io::to_json(rep).dump(2) << "\n";
        } else {
            if (!first) std::cout << "\n";
            std::cout << io::human_report(rep);
        }
        first = false;
    }
    return 0;
}

int cmd_tables(int id, long long p, const GlobalOpts& g) {
    unsigned long long budget = g.budget;
    if (g.extended) budget = std::max(budget, 2'000'000'000ULL);
    auto cells = reproduce_table(id, p, budget, g.workers);
    if (g.output != "human") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : cells) arr.push_back(io::to_json(c));
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << "table " << id << " (published d in brackets)\n";
    std::cout << "  N   p  alpha beta   d        lcd  status\n";
    for (const auto& c : cells) {
        std::ostringstream row;
        row << "  " << c.cell.N << "  " << c.cell.p << "  " << c.cell.alpha << "  ";
        if (c.cell.beta >= 0)
            row << c.cell.beta;
        else
            row << "-";
        row << "  " << (c.d ? std::to_string(*c.d) : "?") << (c.exact ? "" : "~") << " ["
            << c.cell.d_published << "]  " << (c.lcd ? "lcd" : "NOT-lcd") << "  ";
        if (!c.feasible)
            row << "infeasible-at-budget";
        else if (c.match)
            row << "match";
        else {
            row << "MISMATCH; spectrum:";
            for (const auto& s : c.spectrum) {
                row << " (" << s.alpha;
                if (s.has_beta) row << "," << s.beta;
                row << ")->" << s.d;
            }
        }
        std::cout << row.str() << "\n";
    }
    return 0;
}

int cmd_gray(const std::string& file, const std::string& out, const GlobalOpts&) {
    auto lc = io::load_code_file(file);
    if (!lc.over_ring()) throw error(errc::parse_error, "gray expects a ring code file");
    FieldCode img = std::get<RingCode>(lc.code).gray_image();
    if (out.empty())
        io::write_field_code(std::cout, img);
    else {
        std::ofstream os(out);
        if (!os) throw error(errc::parse_error, "cannot open " + out);
        io::write_field_code(os, img);
    }
    return 0;
}

int cmd_search(const std::string& wm_file, const std::string& field_spec,
               const std::string& construction, const GlobalOpts& g) {
    WeighingMatrix W = io::load_weighing_file(wm_file);
    FieldPtr f = io::parse_field_spec(field_spec);
    bool ii = (construction == "ii");
    if (ii && !W.skew()) throw error(errc::not_skew, "construction (ii) needs a skew matrix");
    auto rows = table_search(W, f, ii, g.budget, g.workers);
    if (g.output != "human") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j;
            j["alpha"] = r.alpha;
            if (r.has_beta) j["beta"] = r.beta;
            j["d"] = r.d;
            j["d_exact"] = r.exact;
            j["lcd"] = r.lcd;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& r : rows) {
        std::cout << "alpha=" << r.alpha;
        if (r.has_beta) std::cout << " beta=" << r.beta;
        std::cout << " d=" << r.d << (r.exact ? "" : "~") << " lcd=" << (r.lcd ? "true" : "false")
                  << "\n";
    }
    return 0;
}

int cmd_mds(long long q, int mu, const GlobalOpts& g) {
    auto res = mds_lcd_generator(q, mu, g.budget);
    Report rep;
    rep.recipe = "mds";
    rep.add_param("q", std::to_string(q));
    rep.add_param("mu", std::to_string(mu));
    std::string gs;
    for (size_t i = 0; i < res.g.coeffs().size(); ++i)
        gs += (i ? "," : "") + std::to_string(res.g.coeffs()[i]);
    rep.add_param("g", gs);
    rep.expected_lcd = true;
    analyze_into(rep, res.code, g.budget, g.workers);
    check_expectations(rep);
    rep.note("singleton bound " + std::to_string(res.n - res.k + 1) +
             (res.mds ? " met with equality" : " NOT met"));
    emit_report(rep, g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for LCD and formally self-dual codes over F_q and F_q+vF_q+v^2F_q"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--budget", g.budget, "enumeration budget (projective codewords)");
    app.add_option("--workers", g.workers, "worker threads for enumeration");
    app.add_option("--output", g.output, "output format: human or json")
        ->check(CLI::IsMember({"human", "json", "structured"}));
    app.add_flag("--extended", g.extended, "allow long-running exact enumerations");

    std::string file, out, job_file, wm_file, field_spec, ring_spec, construction = "i";
    std::vector<std::string> tokens;
    long long q = 0, p_filter = 0;
    int mu = 0, table_id = 1;

    auto* analyze = app.add_subcommand("analyze", "analyze a code description file");
    analyze->fallthrough();
    analyze->add_option("file", file, "code file")->required();

    auto* construct = app.add_subcommand("construct", "run a construction recipe or job file");
    construct->fallthrough();
    construct->add_option("tokens", tokens, "recipe key=value ...");
    construct->add_option("--job", job_file, "job file, one construction per line");
    construct->add_option("--field", field_spec, "field spec for the recipe");
    construct->add_option("--ring", ring_spec, "ring spec for the recipe");

    auto* tables = app.add_subcommand("tables", "reproduce the published LCD code tables");
    tables->fallthrough();
    tables->add_option("id", table_id, "table number 1-4")->required()->check(CLI::Range(1, 4));
    tables->add_option("--p", p_filter, "restrict to one field characteristic");

    auto* gray = app.add_subcommand("gray", "emit the Gray image of a ring code");
    gray->fallthrough();
    gray->add_option("file", file, "ring code file")->required();
    gray->add_option("-o,--out", out, "output file (default stdout)");

    auto* search = app.add_subcommand("search", "sweep (alpha, beta) over a weighing matrix");
    search->fallthrough();
    search->add_option("--wm", wm_file, "weighing matrix file")->required();
    search->add_option("--field", field_spec, "field spec")->required();
    search->add_option("--construction", construction, "i or ii")
        ->check(CLI::IsMember({"i", "ii"}));

    auto* mds = app.add_subcommand("mds", "MDS LCD cyclic code of length q+1");
    mds->fallthrough();
    mds->add_option("q", q, "prime power")->required();
    mds->add_option("mu", mu, "defect parameter")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(file, g);
        if (*construct) return cmd_construct(tokens, job_file, field_spec, ring_spec, g);
        if (*tables) return cmd_tables(table_id, p_filter, g);
        if (*gray) return cmd_gray(file, out, g);
        if (*search) return cmd_search(wm_file, field_spec, construction, g);
        if (*mds) return cmd_mds(q, mu, g);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return errc_exit_class(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
