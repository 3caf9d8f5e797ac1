#pragma once

// Weighing, Hadamard and conference matrices: validation, the Paley
// constructions from the quadratic character, skew doubling, and the
// deterministic circulant / two-circulant searches that provide the small
// seed matrices. Entries stay integers (-1, 0, 1) until a construction maps
// them into a field.

#include <cstdint>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace triv {

class WeighingMatrix {
  public:
    int n() const { return n_; }
    int k() const { return k_; }
    bool symmetric() const { return symmetric_; }
    bool skew() const { return skew_; }
    int at(int i, int j) const { return e_[size_t(i) * n_ + j]; }
    const std::vector<int8_t>& entries() const { return e_; }

    // Constructs only if W W^t = k I_n holds over the integers.
    static WeighingMatrix validate(const std::vector<std::vector<int>>& grid, int k) {
        const int n = int(grid.size());
        for (const auto& row : grid)
            if (int(row.size()) != n)
                throw error(errc::not_weighing, "grid is not square");
        for (const auto& row : grid)
            for (int x : row)
                if (x < -1 || x > 1)
                    throw error(errc::not_weighing, "entries must be in {-1, 0, 1}");
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long long s = 0;
                for (int t = 0; t < n; ++t) s += (long long)grid[i][t] * grid[j][t];
                long long want = (i == j) ? k : 0;
                if (s != want)
                    throw error(errc::not_weighing,
                                "W W^t fails at (" + std::to_string(i) + "," + std::to_string(j) +
                                    "): " + std::to_string(s) + " != " + std::to_string(want));
            }
        WeighingMatrix w;
        w.n_ = n;
        w.k_ = k;
        w.e_.resize(size_t(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w.e_[size_t(i) * n + j] = int8_t(grid[i][j]);
        w.symmetric_ = true;
        w.skew_ = true;
        for (int i = 0; i < n && (w.symmetric_ || w.skew_); ++i)
            for (int j = 0; j < n; ++j) {
                if (w.at(i, j) != w.at(j, i)) w.symmetric_ = false;
                if (w.at(i, j) != -w.at(j, i)) w.skew_ = false;
            }
        return w;
    }

    // -1 maps to p-1
    FieldMatrix map_into(const FieldPtr& f) const {
        FieldMatrix m(f, size_t(n_), size_t(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                int v = at(i, j);
                m.at(size_t(i), size_t(j)) = (v >= 0) ? uint16_t(v) : f->neg(uint16_t(-v));
            }
        return m;
    }

    std::vector<std::vector<int>> grid() const {
        std::vector<std::vector<int>> g(size_t(n_), std::vector<int>(size_t(n_), 0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) g[size_t(i)][size_t(j)] = at(i, j);
        return g;
    }

  private:
    int n_ = 0, k_ = 0;
    bool symmetric_ = false, skew_ = false;
    std::vector<int8_t> e_;
};

namespace detail {

// Paley core over F_q: b_ij = eta(e_j - e_i) with the deterministic element
// enumeration e_0, e_1, ... (index order; prime fields get 0..p-1).
inline std::vector<std::vector<int>> paley_core(const FieldPtr& f) {
    const int q = int(f->q());
    std::vector<std::vector<int>> core(size_t(q), std::vector<int>(size_t(q), 0));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            core[size_t(i)][size_t(j)] = f->character(f->sub(uint16_t(j), uint16_t(i)));
    return core;
}

inline FieldPtr field_for_prime_power(long long q) {
    long long p = 0;
    int r = 0;
    for (long long cand = 2; cand <= q; ++cand)
        if (q % cand == 0) {
            p = cand;
            long long v = q;
            while (v % p == 0) {
                v /= p;
                ++r;
            }
            if (v != 1) throw error(errc::parse_error, "q is not a prime power");
            break;
        }
    if (p == 0) throw error(errc::parse_error, "q must be >= 2");
    return Field::make_auto(p, r);
}

}  // namespace detail

// Hadamard matrix of order q+1 for q = 3 mod 4: all-ones first row/column,
// core diagonal -1, off-diagonal quadratic characters.
inline WeighingMatrix paley_hadamard(long long q) {
    if (q % 4 != 3) throw error(errc::wrong_residue_class, "paley_hadamard needs q = 3 mod 4");
    FieldPtr f = detail::field_for_prime_power(q);
    auto core = detail::paley_core(f);
    const int n = int(q) + 1;
    std::vector<std::vector<int>> h(size_t(n), std::vector<int>(size_t(n), 1));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) h[size_t(i)][size_t(j)] = (i == j) ? -1 : core[size_t(i - 1)][size_t(j - 1)];
    return WeighingMatrix::validate(h, n);
}

// symmetric conference matrix W_{q+1, q} for q = 1 mod 4
inline WeighingMatrix paley_conference(long long q) {
    if (q % 4 != 1) throw error(errc::wrong_residue_class, "paley_conference needs q = 1 mod 4");
    FieldPtr f = detail::field_for_prime_power(q);
    auto core = detail::paley_core(f);
    const int n = int(q) + 1;
    std::vector<std::vector<int>> w(size_t(n), std::vector<int>(size_t(n), 0));
    for (int j = 1; j < n; ++j) w[0][size_t(j)] = 1;
    for (int i = 1; i < n; ++i) {
        w[size_t(i)][0] = 1;
        for (int j = 1; j < n; ++j) w[size_t(i)][size_t(j)] = core[size_t(i - 1)][size_t(j - 1)];
    }
    auto W = WeighingMatrix::validate(w, int(q));
    if (!W.symmetric())
        throw error(errc::internal_oracle_disagreement, "paley conference must be symmetric");
    return W;
}

// skew conference matrix W_{q+1, q} for q = 3 mod 4: +1 border row, -1 border
// column, quadratic-character core with zero diagonal
inline WeighingMatrix paley_skew_conference(long long q) {
    if (q % 4 != 3)
        throw error(errc::wrong_residue_class, "paley_skew_conference needs q = 3 mod 4");
    FieldPtr f = detail::field_for_prime_power(q);
    auto core = detail::paley_core(f);
    const int n = int(q) + 1;
    std::vector<std::vector<int>> w(size_t(n), std::vector<int>(size_t(n), 0));
    for (int j = 1; j < n; ++j) w[0][size_t(j)] = 1;
    for (int i = 1; i < n; ++i) {
        w[size_t(i)][0] = -1;
        for (int j = 1; j < n; ++j) w[size_t(i)][size_t(j)] = core[size_t(i - 1)][size_t(j - 1)];
    }
    auto W = WeighingMatrix::validate(w, int(q));
    if (!W.skew())
        throw error(errc::internal_oracle_disagreement, "paley skew conference must be skew");
    return W;
}

// Skew W(2n, 2k+1) from skew W(n, k) via the block form [[W, W+I], [W-I, -W]].
// (For skew W the blocks satisfy both the orthogonality and the skewness
// conditions; the variant with repeated W in the diagonal blocks does not.)
inline WeighingMatrix skew_double(const WeighingMatrix& W) {
    if (!W.skew()) throw error(errc::not_skew, "skew_double needs a skew input");
    const int n = W.n();
    std::vector<std::vector<int>> d(size_t(2 * n), std::vector<int>(size_t(2 * n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int w = W.at(i, j);
            int eye = (i == j) ? 1 : 0;
            d[size_t(i)][size_t(j)] = w;
            d[size_t(i)][size_t(n + j)] = w + eye;
            d[size_t(n + i)][size_t(j)] = w - eye;
            d[size_t(n + i)][size_t(n + j)] = -w;
        }
    auto out = WeighingMatrix::validate(d, 2 * W.k() + 1);
    if (!out.skew()) throw error(errc::internal_oracle_disagreement, "double lost skewness");
    return out;
}

namespace detail {

inline std::vector<std::vector<int>> circulant(const std::vector<int>& row) {
    const int n = int(row.size());
    std::vector<std::vector<int>> m(size_t(n), std::vector<int>(size_t(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[size_t(i)][size_t(j)] = row[size_t(((j - i) % n + n) % n)];
    return m;
}

inline bool circulant_weighing_row(const std::vector<int>& row, int k) {
    const int n = int(row.size());
    for (int s = 0; s < n; ++s) {
        long long acc = 0;
        for (int i = 0; i < n; ++i) acc += (long long)row[size_t(i)] * row[size_t((i + s) % n)];
        if (acc != (s == 0 ? k : 0)) return false;
    }
    return true;
}

// first rows in lexicographic order over digits (-1, 0, 1)
template <typename Visit>
void scan_rows(int n, Visit&& visit) {
    std::vector<int> row(size_t(n), -1);
    for (;;) {
        if (!visit(row)) return;
        int i = n - 1;
        while (i >= 0 && row[size_t(i)] == 1) row[size_t(i--)] = -1;
        if (i < 0) return;
        ++row[size_t(i)];
    }
}

}  // namespace detail

// Exhaustive scan over circulant first rows in {-1,0,1}^n; first matrix (in
// lexicographic row order) that validates as a skew weighing matrix. No skew
// weighing matrix of odd order exists (a real skew matrix of odd order is
// singular, but W W^t = kI needs det W != 0), so odd n with k > 0 always
// comes back empty.
inline std::optional<WeighingMatrix> find_skew_circulant(int n, int k) {
    if (n > 16) throw error(errc::parse_error, "circulant scan limited to n <= 16");
    std::optional<WeighingMatrix> found;
    detail::scan_rows(n, [&](const std::vector<int>& row) {
        // skew prefilter: zero diagonal and row[n-s] = -row[s]
        if (row[0] != 0) return true;
        for (int s = 1; s < n; ++s)
            if (row[size_t(n - s)] != -row[size_t(s)]) return true;
        if (!detail::circulant_weighing_row(row, k)) return true;
        auto W = WeighingMatrix::validate(detail::circulant(row), k);
        if (W.skew()) {
            found = W;
            return false;
        }
        return true;
    });
    return found;
}

// general circulant weighing matrix search, lexicographic-first
inline std::optional<WeighingMatrix> find_circulant(int n, int k) {
    if (n > 16) throw error(errc::parse_error, "circulant scan limited to n <= 16");
    std::optional<WeighingMatrix> found;
    detail::scan_rows(n, [&](const std::vector<int>& row) {
        int wt = 0;
        for (int x : row) wt += (x != 0);
        if (wt != k) return true;
        if (!detail::circulant_weighing_row(row, k)) return true;
        found = WeighingMatrix::validate(detail::circulant(row), k);
        return false;
    });
    return found;
}

// Skew weighing matrix of even order n as [[A, B], [-B^t, A^t]] with A a skew
// circulant and B a circulant of order n/2 (blocks commute, so the weighing
// condition reduces to autocorrelations). Lexicographic-first over (A, B).
inline std::optional<WeighingMatrix> find_skew_two_circulant(int n, int k) {
    if (n % 2 != 0) throw error(errc::parse_error, "two-circulant form needs even order");
    const int m = n / 2;
    if (m > 16) throw error(errc::parse_error, "two-circulant scan limited to n <= 32");
    std::optional<WeighingMatrix> found;
    detail::scan_rows(m, [&](const std::vector<int>& arow) {
        if (arow[0] != 0) return true;
        for (int s = 1; s < m; ++s)
            if (arow[size_t(m - s)] != -arow[size_t(s)]) return true;
        detail::scan_rows(m, [&](const std::vector<int>& brow) {
            for (int s = 0; s < m; ++s) {
                long long acc = 0;
                for (int i = 0; i < m; ++i)
                    acc += (long long)arow[size_t(i)] * arow[size_t((i + s) % m)] +
                           (long long)brow[size_t(i)] * brow[size_t((i + s) % m)];
                if (acc != (s == 0 ? k : 0)) return true;
            }
            auto A = detail::circulant(arow);
            auto B = detail::circulant(brow);
            std::vector<std::vector<int>> w(size_t(n), std::vector<int>(size_t(n), 0));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    w[size_t(i)][size_t(j)] = A[size_t(i)][size_t(j)];
                    w[size_t(i)][size_t(m + j)] = B[size_t(i)][size_t(j)];
                    w[size_t(m + i)][size_t(j)] = -B[size_t(j)][size_t(i)];
                    w[size_t(m + i)][size_t(m + j)] = A[size_t(j)][size_t(i)];
                }
            auto W = WeighingMatrix::validate(w, k);
            if (W.skew()) {
                found = W;
                return false;
            }
            return true;
        });
        return !found.has_value();
    });
    return found;
}

}  // namespace triv
