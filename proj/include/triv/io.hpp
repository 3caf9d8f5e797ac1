#pragma once

// Text formats and report serialization.
//   field spec        "p" or "p^r:c0,c1,...,cr" (low-to-high, monic; the
//                     trailing 1 may be omitted)
//   field element     integer index; negative values mean -(|t|)
//   ring element      "a+b*v+c*v^2" with zero terms omitted ("v", "2*v",
//                     "v^2", "1+2*v" all accepted; '*' optional)
//   matrix file       first line "rows cols", then entry rows
//   code file         line "field <spec>" or "ring <spec>", then a matrix
//   job file          one construction per line: recipe key=value ...
//   weighing file     plain integer matrix file with entries -1, 0, 1

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tables.hpp"

namespace triv {
namespace io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// field / ring specs

inline FieldPtr parse_field_spec(const std::string& s) {
    auto caret = s.find('^');
    try {
        if (caret == std::string::npos) return Field::make(std::stoll(s));
        auto colon = s.find(':');
        long long p = std::stoll(s.substr(0, caret));
        int r = std::stoi(s.substr(caret + 1, colon == std::string::npos ? std::string::npos
                                                                         : colon - caret - 1));
        if (colon == std::string::npos) return Field::make(p, r);  // bundled default or error
        std::vector<int> mod;
        std::stringstream ss(s.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) mod.push_back(std::stoi(tok));
        return Field::make(p, r, mod);
    } catch (const std::invalid_argument&) {
        throw error(errc::parse_error, "bad field spec '" + s + "'");
    } catch (const std::out_of_range&) {
        throw error(errc::parse_error, "bad field spec '" + s + "'");
    }
}

inline RingPtr parse_ring_spec(const std::string& s) { return Ring::make(parse_field_spec(s)); }

// ---------------------------------------------------------------------------
// element literals

inline uint16_t parse_field_elem(const FieldPtr& f, const std::string& s) {
    try {
        size_t pos = 0;
        long long t = std::stoll(s, &pos);
        if (pos != s.size()) throw error(errc::parse_error, "bad field element '" + s + "'");
        long long q = f->q();
        if (t >= 0) {
            if (t >= q) throw error(errc::parse_error, "element index out of range: " + s);
            return uint16_t(t);
        }
        if (-t >= q) throw error(errc::parse_error, "element index out of range: " + s);
        return f->neg(uint16_t(-t));
    } catch (const std::invalid_argument&) {
        throw error(errc::parse_error, "bad field element '" + s + "'");
    } catch (const std::out_of_range&) {
        throw error(errc::parse_error, "bad field element '" + s + "'");
    }
}

// "a+b*v+c*v^2"; also accepts bare "v"/"v^2" terms and implicit '*'
inline RTriple parse_ring_elem(const RingPtr& R, const std::string& s) {
    const FieldPtr& f = R->base();
    RTriple out = {0, 0, 0};
    std::string cur;
    std::vector<std::string> terms;
    for (char ch : s) {
        if (ch == '+') {
            if (!cur.empty()) terms.push_back(cur);
            cur.clear();
        } else if (!isspace((unsigned char)ch)) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) terms.push_back(cur);
    if (terms.empty()) throw error(errc::parse_error, "empty ring element");
    for (auto term : terms) {
        int slot = 0;
        auto vpos = term.find('v');
        std::string coeff = term;
        if (vpos != std::string::npos) {
            slot = (term.find("v^2") != std::string::npos) ? 2 : 1;
            coeff = term.substr(0, vpos);
            if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
            if (coeff.empty()) coeff = "1";
        }
        uint16_t c = parse_field_elem(f, coeff);
        out[size_t(slot)] = f->add(out[size_t(slot)], c);
    }
    return out;
}

inline std::string format_ring_elem(const RingPtr& R, const RTriple& x) {
    return to_string(*R, x);
}

// ---------------------------------------------------------------------------
// matrix files

inline std::vector<std::vector<std::string>> read_matrix_tokens(std::istream& in) {
    size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw error(errc::parse_error, "missing matrix header");
    std::vector<std::vector<std::string>> tok(rows, std::vector<std::string>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (!(in >> tok[i][j])) throw error(errc::parse_error, "matrix data truncated");
    return tok;
}

inline FieldMatrix parse_field_matrix(const FieldPtr& f, std::istream& in) {
    auto tok = read_matrix_tokens(in);
    FieldMatrix m(f, tok.size(), tok.empty() ? 0 : tok[0].size());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = parse_field_elem(f, tok[i][j]);
    return m;
}

inline RingMatrix parse_ring_matrix(const RingPtr& R, std::istream& in) {
    auto tok = read_matrix_tokens(in);
    RingMatrix m(R, tok.size(), tok.empty() ? 0 : tok[0].size());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = parse_ring_elem(R, tok[i][j]);
    return m;
}

inline int parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw error(errc::parse_error, "bad integer '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw error(errc::parse_error, "bad integer '" + s + "'");
    } catch (const std::out_of_range&) {
        throw error(errc::parse_error, "bad integer '" + s + "'");
    }
}

inline WeighingMatrix load_weighing(std::istream& in) {
    auto tok = read_matrix_tokens(in);
    const int n = int(tok.size());
    std::vector<std::vector<int>> grid(size_t(n), std::vector<int>(size_t(n), 0));
    for (int i = 0; i < n; ++i) {
        if (int(tok[size_t(i)].size()) != n) throw error(errc::parse_error, "weighing matrix must be square");
        for (int j = 0; j < n; ++j) grid[size_t(i)][size_t(j)] = parse_int(tok[size_t(i)][size_t(j)]);
    }
    long long k = 0;
    for (int t = 0; t < n; ++t) k += (long long)grid[0][size_t(t)] * grid[0][size_t(t)];
    return WeighingMatrix::validate(grid, int(k));
}

inline WeighingMatrix load_weighing_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open " + path);
    return load_weighing(in);
}

inline void write_weighing(std::ostream& out, const WeighingMatrix& W) {
    out << W.n() << " " << W.n() << "\n";
    for (int i = 0; i < W.n(); ++i) {
        for (int j = 0; j < W.n(); ++j) out << (j ? " " : "") << int(W.at(i, j));
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// code description files

struct LoadedCode {
    std::variant<FieldCode, RingCode> code;
    bool over_ring() const { return std::holds_alternative<RingCode>(code); }
};

inline LoadedCode load_code(std::istream& in) {
    std::string kind, spec;
    if (!(in >> kind >> spec)) throw error(errc::parse_error, "missing code header line");
    if (kind == "field") {
        FieldPtr f = parse_field_spec(spec);
        return {FieldCode::from_rows(parse_field_matrix(f, in))};
    }
    if (kind == "ring") {
        RingPtr R = parse_ring_spec(spec);
        return {RingCode::from_gen(R, parse_ring_matrix(R, in))};
    }
    throw error(errc::parse_error, "code header must start with 'field' or 'ring'");
}

inline LoadedCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open " + path);
    return load_code(in);
}

inline void write_field_code(std::ostream& out, const FieldCode& C) {
    out << "field " << C.field()->spec_string() << "\n";
    out << C.k() << " " << C.n() << "\n";
    for (size_t i = 0; i < C.k(); ++i) {
        for (size_t j = 0; j < C.n(); ++j) out << (j ? " " : "") << C.gen().at(i, j);
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// reports

inline json to_json(const Report& rep) {
    json j;
    j["recipe"] = rep.recipe;
    if (!rep.params.empty()) {
        json p = json::object();
        for (const auto& [k, v] : rep.params) p[k] = v;
        j["params"] = p;
    }
    j["over_ring"] = rep.over_ring;
    j["q"] = rep.q;
    j["n"] = rep.n;
    if (rep.over_ring) {
        j["log_q_card"] = rep.k;
        if (rep.free) j["free"] = *rep.free;
        if (rep.rank) j["rank"] = *rep.rank;
        j["component_k"] = rep.component_k;
        json cd = json::array();
        for (auto& d : rep.component_d) cd.push_back(d ? json(*d) : json(nullptr));
        j["component_d"] = cd;
        if (rep.d) {
            j["d_lee"] = *rep.d;
            j["d_lee_exact"] = rep.d_exact;
        }
        if (rep.d_hamming) {
            j["d_hamming"] = *rep.d_hamming;
            j["d_hamming_exact"] = rep.d_hamming_exact;
        }
        if (rep.gray) {
            json g;
            g["n"] = rep.gray->n;
            g["k"] = rep.gray->k;
            if (rep.gray->d) {
                g["d"] = *rep.gray->d;
                g["d_exact"] = rep.gray->d_exact;
            }
            g["formally_self_dual"] = tristate_name(rep.gray->fsd);
            j["gray"] = g;
        }
        if (rep.ggt_nonsingular) j["ggt_nonsingular"] = *rep.ggt_nonsingular;
    } else {
        j["k"] = rep.k;
        if (rep.d) {
            j["d"] = *rep.d;
            j["d_exact"] = rep.d_exact;
        }
        if (rep.hull) j["hull_dim"] = *rep.hull;
    }
    j["lcd"] = tristate_name(rep.lcd);
    j["self_dual"] = tristate_name(rep.self_dual);
    j["formally_self_dual"] = tristate_name(rep.fsd);
    if (rep.lambda_unit) j["lambda_unit"] = *rep.lambda_unit;
    if (rep.expected_lcd) j["expected_lcd"] = *rep.expected_lcd;
    if (rep.expected_self_dual) j["expected_self_dual"] = *rep.expected_self_dual;
    if (rep.expected_fsd) j["expected_fsd"] = *rep.expected_fsd;
    j["consistent"] = rep.consistent;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

inline std::string human_report(const Report& rep) {
    std::ostringstream os;
    os << rep.recipe;
    for (const auto& [k, v] : rep.params) os << " " << k << "=" << v;
    os << "\n";
    if (rep.over_ring) {
        os << "  [" << rep.n << ", |C| = " << rep.q << "^" << rep.k;
        if (rep.d) os << ", d_L = " << *rep.d << (rep.d_exact ? "" : " (bound)");
        os << "]_R over F_" << rep.q;
        if (rep.free && *rep.free) os << ", free of rank " << *rep.rank;
        os << "\n";
        os << "  components k = (" << rep.component_k[0] << ", " << rep.component_k[1] << ", "
           << rep.component_k[2] << ")";
        if (rep.d_hamming) os << ", d_H(R) = " << *rep.d_hamming;
        os << "\n";
        if (rep.gray) {
            os << "  gray image [" << rep.gray->n << ", " << rep.gray->k;
            if (rep.gray->d) os << ", " << *rep.gray->d << (rep.gray->d_exact ? "" : "~");
            os << "] over F_" << rep.q << ", fsd = " << tristate_name(rep.gray->fsd) << "\n";
        }
        if (rep.ggt_nonsingular)
            os << "  GG^t nonsingular: " << (*rep.ggt_nonsingular ? "true" : "false") << "\n";
    } else {
        os << "  [" << rep.n << ", " << rep.k;
        if (rep.d) os << ", " << *rep.d << (rep.d_exact ? "" : "~");
        os << "] over F_" << rep.q;
        if (rep.hull) os << ", hull = " << *rep.hull;
        os << "\n";
    }
    os << "  lcd = " << tristate_name(rep.lcd) << ", self_dual = " << tristate_name(rep.self_dual)
       << ", formally_self_dual = " << tristate_name(rep.fsd) << "\n";
    if (rep.lambda_unit) os << "  lambda_unit = " << (*rep.lambda_unit ? "true" : "false") << "\n";
    if (!rep.consistent) os << "  WARNING: verdicts deviate from the stated conclusion\n";
    for (const auto& nline : rep.notes) os << "  note: " << nline << "\n";
    return os.str();
}

inline json to_json(const CellResult& res) {
    json j;
    j["table"] = res.cell.table;
    j["N"] = res.cell.N;
    j["p"] = res.cell.p;
    j["alpha"] = res.cell.alpha;
    if (res.cell.beta >= 0) j["beta"] = res.cell.beta;
    j["d_published"] = res.cell.d_published;
    j["feasible"] = res.feasible;
    if (res.d) {
        j["d"] = *res.d;
        j["d_exact"] = res.exact;
    }
    j["lcd"] = res.lcd;
    j["match"] = res.match;
    if (!res.spectrum.empty()) {
        json sp = json::array();
        for (const auto& row : res.spectrum) {
            json r;
            r["alpha"] = row.alpha;
            if (row.has_beta) r["beta"] = row.beta;
            r["d"] = row.d;
            r["d_exact"] = row.exact;
            r["lcd"] = row.lcd;
            sp.push_back(r);
        }
        j["spectrum"] = sp;
    }
    return j;
}

// ---------------------------------------------------------------------------
// job files: one construction per line, "recipe key=value key=value ..."
// values: element literals, comma-separated element lists, @path for files

struct JobLine {
    std::string recipe;
    std::map<std::string, std::string> kv;
};

inline std::vector<JobLine> parse_job(std::istream& in) {
    std::vector<JobLine> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ss(line);
        std::string tok;
        JobLine jl;
        if (!(ss >> jl.recipe)) continue;
        while (ss >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw error(errc::parse_error, "job token '" + tok + "' is not key=value");
            jl.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        out.push_back(std::move(jl));
    }
    return out;
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

// job lines are resolved relative to the job file's directory
inline std::string resolve_path(const std::string& base_dir, const std::string& ref) {
    if (ref.empty() || ref[0] == '/') return ref;
    return base_dir.empty() ? ref : base_dir + "/" + ref;
}

inline Report run_job_line(const JobLine& jl, const std::string& base_dir,
                           unsigned long long budget, unsigned workers) {
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = jl.kv.find(key);
        if (it == jl.kv.end())
            throw error(errc::parse_error, jl.recipe + " needs parameter '" + key + "'");
        return it->second;
    };
    auto get = [&](const std::string& key, const std::string& def) -> std::string {
        auto it = jl.kv.find(key);
        return it == jl.kv.end() ? def : it->second;
    };
    auto load_wm = [&](const std::string& ref) {
        if (ref.size() > 1 && ref[0] == '@')
            return load_weighing_file(resolve_path(base_dir, ref.substr(1)));
        throw error(errc::parse_error, "weighing matrix parameter must be @path");
    };
    unsigned long long jb;
    try {
        jb = std::stoull(get("budget", std::to_string(budget)));
    } catch (const std::exception&) {
        throw error(errc::parse_error, "bad budget value");
    }

    if (jl.recipe == "weighing_code") {
        FieldPtr f = parse_field_spec(need("field"));
        return weighing_code(f, parse_field_elem(f, need("alpha")), load_wm(need("w")), jb,
                             workers);
    }
    if (jl.recipe == "skew_weighing_code") {
        FieldPtr f = parse_field_spec(need("field"));
        return skew_weighing_code(f, parse_field_elem(f, need("alpha")),
                                  parse_field_elem(f, need("beta")), load_wm(need("w")), jb,
                                  workers);
    }
    if (jl.recipe == "double_circulant") {
        if (jl.kv.count("ring")) {
            RingPtr R = parse_ring_spec(need("ring"));
            std::vector<RTriple> row;
            for (const auto& t : split_list(need("first_row"))) row.push_back(parse_ring_elem(R, t));
            return double_circulant(R, parse_ring_elem(R, need("lambda")), row, jb, workers);
        }
        FieldPtr f = parse_field_spec(need("field"));
        std::vector<uint16_t> row;
        for (const auto& t : split_list(need("first_row"))) row.push_back(parse_field_elem(f, t));
        return double_circulant(f, parse_field_elem(f, need("lambda")), row, jb, workers);
    }
    if (jl.recipe == "bordered_circulant") {
        RingPtr R = parse_ring_spec(need("ring"));
        std::vector<RTriple> row;
        for (const auto& t : split_list(need("first_row"))) row.push_back(parse_ring_elem(R, t));
        return bordered_circulant(R, parse_ring_elem(R, need("alpha")),
                                  parse_ring_elem(R, need("omega")),
                                  parse_ring_elem(R, need("lambda")), row, jb, workers);
    }
    if (jl.recipe == "symmetric_code") {
        RingPtr R = parse_ring_spec(need("ring"));
        std::string ref = need("matrix");
        if (ref.empty() || ref[0] != '@')
            throw error(errc::parse_error, "matrix parameter must be @path");
        std::ifstream in(resolve_path(base_dir, ref.substr(1)));
        if (!in) throw error(errc::parse_error, "cannot open " + ref.substr(1));
        return symmetric_code(R, parse_ring_matrix(R, in), jb, workers);
    }
    if (jl.recipe == "lift") {
        RingPtr R = parse_ring_spec(need("ring"));
        std::string ref = need("code");
        if (ref.empty() || ref[0] != '@')
            throw error(errc::parse_error, "code parameter must be @path");
        auto lc = load_code_file(resolve_path(base_dir, ref.substr(1)));
        if (lc.over_ring()) throw error(errc::parse_error, "lift expects a field code");
        return lift_report(R, std::get<FieldCode>(lc.code), jb, workers);
    }
    if (jl.recipe == "lcd_expand") {
        FieldPtr f = parse_field_spec(need("field"));
        std::string ref = need("p_matrix");
        if (ref.empty() || ref[0] != '@')
            throw error(errc::parse_error, "p_matrix parameter must be @path");
        std::ifstream in(resolve_path(base_dir, ref.substr(1)));
        if (!in) throw error(errc::parse_error, "cannot open " + ref.substr(1));
        FieldMatrix P = parse_field_matrix(f, in);
        std::string cs = need("case");
        ExpandCase ec = cs == "i" ? ExpandCase::i : cs == "ii" ? ExpandCase::ii : ExpandCase::iii;
        return lcd_expand(f, P, ec, jb, workers);
    }
    if (jl.recipe == "selfdual_to_lcd") {
        FieldPtr f = parse_field_spec(need("field"));
        std::string ref = need("p_matrix");
        if (ref.empty() || ref[0] != '@')
            throw error(errc::parse_error, "p_matrix parameter must be @path");
        std::ifstream in(resolve_path(base_dir, ref.substr(1)));
        if (!in) throw error(errc::parse_error, "cannot open " + ref.substr(1));
        auto [entry, rep] = selfdual_to_lcd_bound(f, parse_field_matrix(f, in), jb, workers);
        Report r = rep;
        r.note("bound: LCD[" + std::to_string(entry.n) + "," + std::to_string(entry.k) + "]_" +
               std::to_string(entry.q) + " >= " + std::to_string(entry.d_lower) +
               " (singleton " + std::to_string(entry.singleton) + ")");
        return r;
    }
    if (jl.recipe == "mds") {
        auto res = mds_lcd_generator(parse_int(need("q")), parse_int(need("mu")), jb);
        Report rep;
        rep.recipe = "mds";
        rep.add_param("q", need("q"));
        rep.add_param("mu", need("mu"));
        std::string gs;
        for (size_t i = 0; i < res.g.coeffs().size(); ++i)
            gs += (i ? "," : "") + std::to_string(res.g.coeffs()[i]);
        rep.add_param("g", gs);
        rep.expected_lcd = true;
        analyze_into(rep, res.code, jb, workers);
        check_expectations(rep);
        return rep;
    }
    throw error(errc::parse_error, "unknown recipe '" + jl.recipe + "'");
}

}  // namespace io
}  // namespace triv
