#pragma once

// Linear codes over F_q and over R: duals, hulls, LCD / self-dual / formally
// self-dual predicates, exact minimum distance and weight enumeration,
// MacWilliams transform, Gray images.
//
// Distance and weight enumeration run over projective messages (one
// representative per scalar class, leading nonzero digit fixed to 1).
// Messages are visited by ascending support size; since the stored basis is
// in reduced row echelon form, a codeword's weight is at least its message's
// support size, so the scan can stop once the best weight found is at most
// the next support size. The visit order is deterministic, so truncated
// bounds are reproducible.

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "matrix.hpp"

namespace triv {

using boost::multiprecision::cpp_int;

struct DistanceResult {
    size_t d = 0;
    bool exact = false;
};

struct WeightDistribution {
    std::vector<cpp_int> counts;  // A_0 .. A_n
    bool exact = true;

    size_t n() const { return counts.empty() ? 0 : counts.size() - 1; }
    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
        return a.counts == b.counts;
    }
    cpp_int total() const {
        cpp_int s = 0;
        for (const auto& c : counts) s += c;
        return s;
    }
    size_t min_nonzero_weight() const {
        for (size_t w = 1; w < counts.size(); ++w)
            if (counts[w] != 0) return w;
        return 0;
    }
};

constexpr unsigned long long kDefaultBudget = 100'000'000ULL;  // projective codewords

namespace detail {

constexpr unsigned long long kCountCap = std::numeric_limits<unsigned long long>::max() / 4;

// 1 + q + ... + q^{k-1}, saturating
inline unsigned long long projective_count(long long q, size_t k) {
    unsigned long long total = 0, term = 1;
    for (size_t i = 0; i < k; ++i) {
        if (total > kCountCap - term) return kCountCap;
        total += term;
        if (term > kCountCap / (unsigned long long)(q)) return kCountCap;
        term *= (unsigned long long)(q);
    }
    return total;
}

inline unsigned long long power_count(long long q, size_t k) {
    unsigned long long total = 1;
    for (size_t i = 0; i < k; ++i) {
        if (total > kCountCap / (unsigned long long)(q)) return kCountCap;
        total *= (unsigned long long)(q);
    }
    return total;
}

// Scaled generator rows and a byte-sized addition table for the hot loops.
struct EnumContext {
    size_t k = 0, n = 0;
    long long q = 0;
    std::vector<uint8_t> add;     // q x q
    std::vector<uint8_t> srows;   // [row i][scalar t] -> n bytes, t in 0..q-1
    const uint8_t* srow(size_t i, uint16_t t) const {
        return srows.data() + ((i * size_t(q)) + t) * n;
    }

    EnumContext(const FieldMatrix& gen) {
        const Field& F = *gen.field();
        q = F.q();
        if (q > 255) throw error(errc::field_too_large, "enumeration supports q <= 255");
        k = gen.rows();
        n = gen.cols();
        add.resize(size_t(q) * q);
        for (long long a = 0; a < q; ++a)
            for (long long b = 0; b < q; ++b)
                add[size_t(a) * q + b] = uint8_t(F.add(uint16_t(a), uint16_t(b)));
        srows.assign(k * size_t(q) * n, 0);
        for (size_t i = 0; i < k; ++i)
            for (long long t = 0; t < q; ++t) {
                uint8_t* dst = srows.data() + ((i * size_t(q)) + t) * n;
                const uint16_t* mrow = F.mul_row(uint16_t(t));
                for (size_t j = 0; j < n; ++j) dst[j] = uint8_t(mrow[gen.at(i, j)]);
            }
    }
};

// Enumerate all projective messages of exact support size j whose smallest
// support position is `first` (digit there fixed to 1, remaining digits in
// 1..q-1, remaining positions > first in lexicographic order). Sink receives
// the codeword buffer for each visited message; returning false aborts.
template <typename Sink>
bool enumerate_support_first(const EnumContext& cx, size_t j, size_t first, Sink&& sink) {
    if (j == 0 || first + j > cx.k) return true;
    std::vector<std::vector<uint8_t>> partial(j + 1);
    for (auto& b : partial) b.assign(cx.n, 0);
    std::copy(cx.srow(first, 1), cx.srow(first, 1) + cx.n, partial[1].begin());
    if (j == 1) return sink(partial[1].data());
    auto rec = [&](auto&& self, size_t level, size_t start) -> bool {
        const size_t remain = j - level - 1;  // positions still to choose after this one
        for (size_t p = start; p + remain < cx.k; ++p) {
            for (uint16_t t = 1; t < cx.q; ++t) {
                const uint8_t* sr = cx.srow(p, t);
                const uint8_t* src = partial[level].data();
                uint8_t* dst = partial[level + 1].data();
                for (size_t m = 0; m < cx.n; ++m) dst[m] = cx.add[size_t(src[m]) * cx.q + sr[m]];
                if (level + 1 == j) {
                    if (!sink(partial[j].data())) return false;
                } else if (!self(self, level + 1, p + 1)) {
                    return false;
                }
            }
        }
        return true;
    };
    return rec(rec, 1, first + 1);
}

inline size_t weight_of(const uint8_t* w, size_t n) {
    size_t c = 0;
    for (size_t j = 0; j < n; ++j) c += (w[j] != 0);
    return c;
}

}  // namespace detail

// A linear [n, k] code over F_q held as its canonical RREF basis.
class FieldCode {
  public:
    FieldCode() = default;

    // Row-reduces and keeps a basis; accepts rank-deficient input.
    static FieldCode from_rows(const FieldMatrix& raw) {
        auto rr = raw.rref();
        FieldCode c;
        c.f_ = raw.field();
        c.n_ = raw.cols();
        c.k_ = rr.rank;
        c.gen_ = FieldMatrix(c.f_, rr.rank, raw.cols());
        for (size_t i = 0; i < rr.rank; ++i)
            for (size_t j = 0; j < raw.cols(); ++j) c.gen_.at(i, j) = rr.m.at(i, j);
        return c;
    }

    const FieldPtr& field() const { return f_; }
    size_t n() const { return n_; }
    size_t k() const { return k_; }
    const FieldMatrix& gen() const { return gen_; }

    FieldCode dual() const { return from_rows(gen_.nullspace()); }

    bool contains(const std::vector<uint16_t>& word) const {
        if (word.size() != n_) throw error(errc::shape_mismatch, "word length mismatch");
        std::vector<uint16_t> w = word;
        auto rr = gen_.rref();  // gen_ is already rref; pivots recomputed cheaply
        for (size_t i = 0; i < k_; ++i) {
            uint16_t fac = w[rr.pivots[i]];
            if (!fac) continue;
            const uint16_t* mrow = f_->mul_row(fac);
            for (size_t j = 0; j < n_; ++j) w[j] = f_->sub(w[j], mrow[gen_.at(i, j)]);
        }
        for (auto x : w)
            if (x) return false;
        return true;
    }

    // RREF bases are canonical, so row-space equality is basis equality.
    friend bool operator==(const FieldCode& a, const FieldCode& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.gen_ == b.gen_;
    }

  private:
    FieldPtr f_;
    FieldMatrix gen_;
    size_t n_ = 0, k_ = 0;
};

// ---------------------------------------------------------------------------
// distance / weight enumeration

inline DistanceResult min_distance(const FieldCode& C, unsigned long long budget = kDefaultBudget,
                                   unsigned workers = 1) {
    if (C.k() == 0) throw error(errc::empty_code, "zero-dimensional code has no distance");
    detail::EnumContext cx(C.gen());
    const size_t k = C.k(), n = C.n();
    const unsigned long long total = detail::projective_count(cx.q, k);

    if (total <= budget) {
        // complete levels, parallelizable by first support position
        std::atomic<size_t> best{n + 1};
        for (size_t j = 1; j <= k; ++j) {
            if (best.load() <= j) break;  // heavier messages cannot improve the minimum
            std::atomic<size_t> next{0};
            auto worker = [&]() {
                for (;;) {
                    size_t first = next.fetch_add(1);
                    if (first + j > k) break;
                    size_t local = best.load(std::memory_order_relaxed);
                    detail::enumerate_support_first(cx, j, first, [&](const uint8_t* w) {
                        size_t wt = detail::weight_of(w, n);
                        if (wt < local) {
                            local = wt;
                            size_t cur = best.load(std::memory_order_relaxed);
                            while (wt < cur && !best.compare_exchange_weak(cur, wt)) {
                            }
                        }
                        return true;
                    });
                }
            };
            unsigned nw = std::max(1u, workers);
            if (nw == 1)
                worker();
            else {
                std::vector<std::thread> ts;
                for (unsigned i = 0; i < nw; ++i) ts.emplace_back(worker);
                for (auto& t : ts) t.join();
            }
        }
        return {best.load(), true};
    }

    // Beyond-budget totals run single-threaded so the visited prefix is
    // deterministic. The scan is still exact if the support-size termination
    // proof fires before the budget runs out; only a budget truncation
    // downgrades the result to an upper bound.
    size_t best = n + 1;
    unsigned long long visited = 0;
    bool truncated = false;
    for (size_t j = 1; j <= k && !truncated; ++j) {
        if (best <= j) return {best, true};
        for (size_t first = 0; first + j <= k && !truncated; ++first) {
            detail::enumerate_support_first(cx, j, first, [&](const uint8_t* w) {
                best = std::min(best, detail::weight_of(w, n));
                if (++visited >= budget) {
                    truncated = true;
                    return false;
                }
                return true;
            });
        }
    }
    if (!truncated) return {best, true};  // all support sizes enumerated

    // seeded information-set re-encodings tighten the truncated bound
    std::mt19937 rng(0x741u ^ unsigned(n * 131 + k));
    for (int round = 0; round < 8; ++round) {
        std::vector<size_t> perm(n);
        for (size_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        FieldMatrix g(C.field(), k, n);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < n; ++j) g.at(i, j) = C.gen().at(i, perm[j]);
        auto rr = g.rref();
        for (size_t i = 0; i < rr.rank; ++i) {
            size_t wt = 0;
            for (size_t j = 0; j < n; ++j) wt += (rr.m.at(i, j) != 0);
            best = std::min(best, wt);
        }
    }
    return {best, false};
}

// Counts over all q^k codewords; scalar classes contribute (q-1) each.
inline WeightDistribution weight_distribution(const FieldCode& C,
                                              unsigned long long budget = kDefaultBudget,
                                              unsigned workers = 1) {
    const size_t k = C.k(), n = C.n();
    WeightDistribution W;
    W.counts.assign(n + 1, 0);
    W.counts[0] = 1;
    if (k == 0) return W;
    detail::EnumContext cx(C.gen());
    if (detail::power_count(cx.q, k) > budget)
        throw error(errc::budget_exceeded, "q^k exceeds enumeration budget");

    unsigned nw = std::max(1u, workers);
    std::vector<std::vector<unsigned long long>> acc(nw,
                                                     std::vector<unsigned long long>(n + 1, 0));
    for (size_t j = 1; j <= k; ++j) {
        std::atomic<size_t> next{0};
        auto worker = [&](unsigned wi) {
            for (;;) {
                size_t first = next.fetch_add(1);
                if (first + j > k) break;
                detail::enumerate_support_first(cx, j, first, [&](const uint8_t* w) {
                    acc[wi][detail::weight_of(w, n)] += 1;
                    return true;
                });
            }
        };
        if (nw == 1)
            worker(0);
        else {
            std::vector<std::thread> ts;
            for (unsigned i = 0; i < nw; ++i) ts.emplace_back(worker, i);
            for (auto& t : ts) t.join();
        }
    }
    const unsigned long long classsize = (unsigned long long)(cx.q - 1);
    for (auto& a : acc)
        for (size_t w = 1; w <= n; ++w) W.counts[w] += cpp_int(a[w]) * classsize;
    W.exact = true;
    return W;
}

// W_{C^perp} from W_C via the q-ary MacWilliams transform.
inline WeightDistribution macwilliams(const WeightDistribution& W, size_t n, size_t k,
                                      long long q) {
    if (!W.exact) throw error(errc::non_integral_result, "transform needs an exact distribution");
    if (W.counts.size() != n + 1) throw error(errc::shape_mismatch, "distribution length mismatch");
    std::vector<std::vector<cpp_int>> binom(n + 1, std::vector<cpp_int>(n + 1, 0));
    for (size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    cpp_int card = 1;
    for (size_t i = 0; i < k; ++i) card *= q;
    std::vector<cpp_int> qm1pow(n + 1);
    qm1pow[0] = 1;
    for (size_t i = 1; i <= n; ++i) qm1pow[i] = qm1pow[i - 1] * (q - 1);

    WeightDistribution out;
    out.counts.assign(n + 1, 0);
    for (size_t w = 0; w <= n; ++w) {
        cpp_int s = 0;
        for (size_t u = 0; u <= n; ++u) {
            if (W.counts[u] == 0) continue;
            // Krawtchouk K_w(u) = sum_j (-1)^j C(u,j) C(n-u, w-j) (q-1)^{w-j}
            cpp_int kr = 0;
            for (size_t j = 0; j <= std::min(w, u); ++j) {
                cpp_int term = binom[u][j] * binom[n - u][w - j] * qm1pow[w - j];
                kr += (j % 2 == 0) ? term : -term;
            }
            s += W.counts[u] * kr;
        }
        if (s < 0 || s % card != 0)
            throw error(errc::non_integral_result,
                        "input was not a valid weight distribution");
        out.counts[w] = s / card;
    }
    out.exact = true;
    return out;
}

// dim(C ∩ C^perp), computed two independent ways that must agree.
inline size_t hull_dim(const FieldCode& C) {
    const size_t k = C.k(), n = C.n();
    if (k == 0) return 0;
    // (a) k - rank(G G^t)
    size_t ra = (C.gen() * C.gen().transpose()).rank();
    size_t hull_a = k - ra;
    // (b) dim C + dim C⊥ - dim(C + C⊥) = n - rank([G; H])
    FieldCode D = C.dual();
    size_t hull_b;
    if (D.k() == 0)
        hull_b = 0;
    else
        hull_b = n - FieldMatrix::vstack(C.gen(), D.gen()).rank();
    if (hull_a != hull_b)
        throw error(errc::internal_oracle_disagreement,
                    "hull dimension oracles disagree: " + std::to_string(hull_a) + " vs " +
                        std::to_string(hull_b));
    return hull_a;
}

inline bool is_lcd(const FieldCode& C) { return hull_dim(C) == 0; }

inline bool is_self_orthogonal(const FieldCode& C) {
    if (C.k() == 0) return true;
    return (C.gen() * C.gen().transpose()).is_zero();
}

inline bool is_self_dual(const FieldCode& C) {
    return is_self_orthogonal(C) && 2 * C.k() == C.n();
}

inline bool is_formally_self_dual(const FieldCode& C,
                                  unsigned long long budget = kDefaultBudget) {
    WeightDistribution W = weight_distribution(C, budget);
    return W == macwilliams(W, C.n(), C.k(), C.field()->q());
}

// ---------------------------------------------------------------------------
// codes over R

class RingCode {
  public:
    RingCode() = default;

    static RingCode from_gen(const RingPtr& R, const RingMatrix& gen) {
        RingCode c;
        c.R_ = R;
        c.n_ = gen.cols();
        auto s = gen.crt_split();
        for (int i = 0; i < 3; ++i) c.comp_[i] = FieldCode::from_rows(s[i]);
        c.user_gen_ = gen;
        c.build_canonical_gen();
        return c;
    }

    static RingCode from_components(const RingPtr& R, const FieldCode& c1, const FieldCode& c2,
                                    const FieldCode& c3) {
        if (c1.n() != c2.n() || c2.n() != c3.n())
            throw error(errc::length_mismatch, "component lengths differ");
        RingCode c;
        c.R_ = R;
        c.n_ = c1.n();
        c.comp_ = {c1, c2, c3};
        c.build_canonical_gen();
        return c;
    }

    const RingPtr& ring() const { return R_; }
    size_t n() const { return n_; }
    const std::array<FieldCode, 3>& components() const { return comp_; }
    const RingMatrix& gen() const { return gen_; }
    const std::optional<RingMatrix>& user_gen() const { return user_gen_; }

    size_t log_q_card() const { return comp_[0].k() + comp_[1].k() + comp_[2].k(); }
    cpp_int card() const {
        cpp_int c = 1;
        for (size_t i = 0; i < log_q_card(); ++i) c *= R_->q();
        return c;
    }
    bool free() const { return comp_[0].k() == comp_[1].k() && comp_[1].k() == comp_[2].k(); }
    size_t rank() const {
        if (!free()) throw error(errc::shape_mismatch, "rank is defined for free codes only");
        return comp_[0].k();
    }

    RingCode dual() const {
        return from_components(R_, comp_[0].dual(), comp_[1].dual(), comp_[2].dual());
    }

    // [3n, k1+k2+k3] code over F_q generated by the block-diagonal of the
    // component bases (the Gray image under the block-grouped map).
    FieldCode gray_image() const {
        const FieldPtr& f = R_->base();
        size_t K = log_q_card();
        FieldMatrix g(f, K, 3 * n_);
        size_t r = 0;
        for (int b = 0; b < 3; ++b)
            for (size_t i = 0; i < comp_[b].k(); ++i, ++r)
                for (size_t j = 0; j < n_; ++j) g.at(r, size_t(b) * n_ + j) = comp_[b].gen().at(i, j);
        return FieldCode::from_rows(g);
    }

    friend bool operator==(const RingCode& a, const RingCode& b) {
        return a.n_ == b.n_ && a.comp_[0] == b.comp_[0] && a.comp_[1] == b.comp_[1] &&
               a.comp_[2] == b.comp_[2];
    }

    // true iff the supplied generator's rows form a free R-basis
    bool user_gen_free() const {
        if (!user_gen_) return false;
        auto s = user_gen_->crt_split();
        for (int i = 0; i < 3; ++i)
            if (s[i].rank() != user_gen_->rows()) return false;
        return true;
    }

  private:
    void build_canonical_gen() {
        auto etas = R_->idempotents();
        std::vector<RingMatrix> parts;
        for (int i = 0; i < 3; ++i)
            if (comp_[i].k() > 0)
                parts.push_back(RingMatrix::embed(R_, comp_[i].gen()).scaled(etas[i]));
        if (parts.empty()) {
            gen_ = RingMatrix(R_, 0, n_);
            return;
        }
        gen_ = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) gen_ = RingMatrix::vstack(gen_, parts[i]);
    }

    RingPtr R_;
    size_t n_ = 0;
    std::array<FieldCode, 3> comp_;
    RingMatrix gen_;
    std::optional<RingMatrix> user_gen_;
};

// LCD over R: componentwise verdict, cross-checked against nonsingularity of
// G G^t whenever the supplied generator is a free presentation.
inline bool rcode_is_lcd(const RingCode& C) {
    bool comp_verdict = is_lcd(C.components()[0]) && is_lcd(C.components()[1]) &&
                        is_lcd(C.components()[2]);
    if (C.user_gen_free()) {
        const RingMatrix& G = *C.user_gen();
        bool ggt_verdict = (G * G.transpose()).nonsingular();
        if (ggt_verdict != comp_verdict)
            throw error(errc::internal_oracle_disagreement,
                        "componentwise and GG^t LCD verdicts disagree");
    }
    return comp_verdict;
}

inline bool rcode_is_self_dual(const RingCode& C) {
    return is_self_dual(C.components()[0]) && is_self_dual(C.components()[1]) &&
           is_self_dual(C.components()[2]);
}

// minimum Lee distance = minimum Hamming distance of the Gray image
inline DistanceResult rcode_min_lee(const RingCode& C,
                                    unsigned long long budget = kDefaultBudget,
                                    unsigned workers = 1) {
    return min_distance(C.gray_image(), budget, workers);
}

// minimum Hamming distance over R (count of nonzero R-coordinates), by joint
// enumeration of component support masks
inline DistanceResult rcode_min_hamming(const RingCode& C,
                                        unsigned long long budget = kDefaultBudget) {
    if (C.n() > 64) throw error(errc::shape_mismatch, "ring Hamming distance limited to n <= 64");
    if (C.log_q_card() == 0) throw error(errc::empty_code, "zero code has no distance");
    unsigned long long card = detail::power_count(C.ring()->q(), C.log_q_card());
    if (card > budget) throw error(errc::budget_exceeded, "|C| exceeds enumeration budget");

    // distinct support masks per component (support is scalar-invariant)
    std::array<std::vector<uint64_t>, 3> masks;
    for (int b = 0; b < 3; ++b) {
        const FieldCode& comp = C.components()[b];
        std::vector<uint64_t> ms = {0};
        if (comp.k() > 0) {
            detail::EnumContext cx(comp.gen());
            for (size_t j = 1; j <= comp.k(); ++j)
                for (size_t first = 0; first + j <= comp.k(); ++first)
                    detail::enumerate_support_first(cx, j, first, [&](const uint8_t* w) {
                        uint64_t m = 0;
                        for (size_t t = 0; t < comp.n(); ++t)
                            if (w[t]) m |= (uint64_t(1) << t);
                        ms.push_back(m);
                        return true;
                    });
        }
        std::sort(ms.begin(), ms.end());
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        masks[b] = std::move(ms);
    }
    auto popcount = [](uint64_t x) { return size_t(__builtin_popcountll(x)); };
    for (int b = 0; b < 3; ++b)
        std::sort(masks[b].begin(), masks[b].end(),
                  [&](uint64_t a, uint64_t bb) { return popcount(a) < popcount(bb); });
    size_t best = C.n() + 1;
    for (uint64_t m1 : masks[0]) {
        if (popcount(m1) >= best) break;
        for (uint64_t m2 : masks[1]) {
            uint64_t m12 = m1 | m2;
            if (popcount(m12) >= best) continue;
            for (uint64_t m3 : masks[2]) {
                uint64_t m = m12 | m3;
                if (m == 0) continue;
                best = std::min(best, popcount(m));
            }
        }
    }
    return {best, true};
}

// Lee weight distribution of C: the component distributions convolve, since
// the Gray image is the direct product of the components.
inline WeightDistribution rcode_lee_distribution(const RingCode& C,
                                                 unsigned long long budget = kDefaultBudget) {
    std::array<WeightDistribution, 3> W;
    for (int b = 0; b < 3; ++b) W[b] = weight_distribution(C.components()[b], budget);
    WeightDistribution out;
    out.counts.assign(3 * C.n() + 1, 0);
    std::vector<cpp_int> tmp(2 * C.n() + 1, 0);
    for (size_t i = 0; i <= C.n(); ++i)
        for (size_t j = 0; j <= C.n(); ++j) tmp[i + j] += W[0].counts[i] * W[1].counts[j];
    for (size_t i = 0; i <= 2 * C.n(); ++i)
        for (size_t j = 0; j <= C.n(); ++j) out.counts[i + j] += tmp[i] * W[2].counts[j];
    out.exact = true;
    return out;
}

// Formal self-duality over R on Lee/Gray weight enumerators.
inline bool rcode_is_fsd(const RingCode& C, unsigned long long budget = kDefaultBudget) {
    return rcode_lee_distribution(C, budget) == rcode_lee_distribution(C.dual(), budget);
}

// lift of a field code: components all equal C (free, rank k)
inline RingCode lift_to_R(const RingPtr& R, const FieldCode& C) {
    if (!R->base()->same(*C.field()))
        throw error(errc::mixed_fields, "lift requires the ring over the same field");
    return RingCode::from_gen(R, RingMatrix::embed(R, C.gen()));
}

}  // namespace triv
