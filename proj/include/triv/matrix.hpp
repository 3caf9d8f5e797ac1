#pragma once

// Exact dense linear algebra over F_q and over R. Deterministic row
// reduction: leftmost pivot column, first nonzero row below, pivot scaled
// to 1 and eliminated above and below.

#include <cstdint>
#include <vector>

#include "ring.hpp"

namespace triv {

class FieldMatrix {
  public:
    FieldMatrix() = default;
    FieldMatrix(FieldPtr f, size_t rows, size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FieldMatrix identity(FieldPtr f, size_t n) {
        FieldMatrix m(std::move(f), n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static FieldMatrix from_rows(FieldPtr f, const std::vector<std::vector<uint16_t>>& rows) {
        FieldMatrix m(std::move(f), rows.size(), rows.empty() ? 0 : rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw error(errc::shape_mismatch, "ragged rows");
            for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    uint16_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    uint16_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    const uint16_t* row(size_t i) const { return a_.data() + i * cols_; }

    friend bool operator==(const FieldMatrix& x, const FieldMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.f_->same(*y.f_) && x.a_ == y.a_;
    }

    FieldMatrix transpose() const {
        FieldMatrix t(f_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    FieldMatrix operator*(const FieldMatrix& o) const {
        if (cols_ != o.rows_ || !f_->same(*o.f_))
            throw error(errc::shape_mismatch, "matmul shape/field mismatch");
        FieldMatrix r(f_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t t = 0; t < cols_; ++t) {
                uint16_t x = at(i, t);
                if (!x) continue;
                const uint16_t* mrow = f_->mul_row(x);
                for (size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = f_->add(r.at(i, j), mrow[o.at(t, j)]);
            }
        return r;
    }

    FieldMatrix scaled(uint16_t s) const {
        FieldMatrix r = *this;
        for (auto& x : r.a_) x = f_->mul(x, s);
        return r;
    }

    static FieldMatrix vstack(const FieldMatrix& top, const FieldMatrix& bottom) {
        if (top.cols_ != bottom.cols_ || !top.f_->same(*bottom.f_))
            throw error(errc::shape_mismatch, "vstack mismatch");
        FieldMatrix r(top.f_, top.rows_ + bottom.rows_, top.cols_);
        std::copy(top.a_.begin(), top.a_.end(), r.a_.begin());
        std::copy(bottom.a_.begin(), bottom.a_.end(), r.a_.begin() + long(top.a_.size()));
        return r;
    }

    static FieldMatrix hstack(const FieldMatrix& left, const FieldMatrix& right) {
        if (left.rows_ != right.rows_ || !left.f_->same(*right.f_))
            throw error(errc::shape_mismatch, "hstack mismatch");
        FieldMatrix r(left.f_, left.rows_, left.cols_ + right.cols_);
        for (size_t i = 0; i < left.rows_; ++i) {
            for (size_t j = 0; j < left.cols_; ++j) r.at(i, j) = left.at(i, j);
            for (size_t j = 0; j < right.cols_; ++j) r.at(i, left.cols_ + j) = right.at(i, j);
        }
        return r;
    }

    struct Rref;
    Rref rref() const;

    size_t rank() const;

    uint16_t det() const {
        if (rows_ != cols_) throw error(errc::non_square, "determinant of non-square matrix");
        FieldMatrix m = *this;
        uint16_t d = 1;
        for (size_t c = 0; c < cols_; ++c) {
            size_t pr = c;
            while (pr < rows_ && m.at(pr, c) == 0) ++pr;
            if (pr == rows_) return 0;
            if (pr != c) {
                for (size_t j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(c, j));
                d = f_->neg(d);
            }
            d = f_->mul(d, m.at(c, c));
            uint16_t inv = f_->inv(m.at(c, c));
            for (size_t i = c + 1; i < rows_; ++i) {
                uint16_t fac = f_->mul(m.at(i, c), inv);
                if (!fac) continue;
                const uint16_t* mrow = f_->mul_row(fac);
                for (size_t j = c; j < cols_; ++j)
                    m.at(i, j) = f_->sub(m.at(i, j), mrow[m.at(c, j)]);
            }
        }
        return d;
    }

    // rows span {x : M x^t = 0}; count = cols - rank
    FieldMatrix nullspace() const;

    bool is_zero() const {
        for (auto x : a_)
            if (x) return false;
        return true;
    }

  private:
    FieldPtr f_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint16_t> a_;
};

struct FieldMatrix::Rref {
    FieldMatrix m;
    size_t rank = 0;
    std::vector<size_t> pivots;
};

inline FieldMatrix::Rref FieldMatrix::rref() const {
    Rref res{*this, 0, {}};
    FieldMatrix& m = res.m;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t pr = r;
        while (pr < rows_ && m.at(pr, c) == 0) ++pr;
        if (pr == rows_) continue;
        if (pr != r)
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(r, j));
        uint16_t inv = f_->inv(m.at(r, c));
        for (size_t j = 0; j < cols_; ++j) m.at(r, j) = f_->mul(m.at(r, j), inv);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint16_t fac = m.at(i, c);
            if (!fac) continue;
            const uint16_t* mrow = f_->mul_row(fac);
            for (size_t j = 0; j < cols_; ++j) m.at(i, j) = f_->sub(m.at(i, j), mrow[m.at(r, j)]);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

inline size_t FieldMatrix::rank() const { return rref().rank; }

inline FieldMatrix FieldMatrix::nullspace() const {
    Rref rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    FieldMatrix basis(f_, cols_ - rr.rank, cols_);
    size_t bi = 0;
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        basis.at(bi, c) = 1;
        for (size_t i = 0; i < rr.rank; ++i) basis.at(bi, rr.pivots[i]) = f_->neg(rr.m.at(i, c));
        ++bi;
    }
    return basis;
}

class RingMatrix {
  public:
    RingMatrix() = default;
    RingMatrix(RingPtr R, size_t rows, size_t cols)
        : R_(std::move(R)), rows_(rows), cols_(cols), a_(rows * cols, RTriple{0, 0, 0}) {}

    static RingMatrix identity(RingPtr R, size_t n) {
        RingMatrix m(std::move(R), n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = {1, 0, 0};
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const RingPtr& ring() const { return R_; }

    RTriple& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const RTriple& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const RingMatrix& x, const RingMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.R_->same(*y.R_) && x.a_ == y.a_;
    }

    RingMatrix transpose() const {
        RingMatrix t(R_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RingMatrix operator*(const RingMatrix& o) const {
        if (cols_ != o.rows_ || !R_->same(*o.R_))
            throw error(errc::shape_mismatch, "matmul shape/ring mismatch");
        RingMatrix r(R_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < o.cols_; ++j) {
                RTriple acc{0, 0, 0};
                for (size_t t = 0; t < cols_; ++t)
                    acc = R_->add(acc, R_->mul(at(i, t), o.at(t, j)));
                r.at(i, j) = acc;
            }
        return r;
    }

    static RingMatrix vstack(const RingMatrix& top, const RingMatrix& bottom) {
        if (top.cols_ != bottom.cols_ || !top.R_->same(*bottom.R_))
            throw error(errc::shape_mismatch, "vstack mismatch");
        RingMatrix r(top.R_, top.rows_ + bottom.rows_, top.cols_);
        std::copy(top.a_.begin(), top.a_.end(), r.a_.begin());
        std::copy(bottom.a_.begin(), bottom.a_.end(), r.a_.begin() + long(top.a_.size()));
        return r;
    }

    static RingMatrix hstack(const RingMatrix& left, const RingMatrix& right) {
        if (left.rows_ != right.rows_ || !left.R_->same(*right.R_))
            throw error(errc::shape_mismatch, "hstack mismatch");
        RingMatrix r(left.R_, left.rows_, left.cols_ + right.cols_);
        for (size_t i = 0; i < left.rows_; ++i) {
            for (size_t j = 0; j < left.cols_; ++j) r.at(i, j) = left.at(i, j);
            for (size_t j = 0; j < right.cols_; ++j) r.at(i, left.cols_ + j) = right.at(i, j);
        }
        return r;
    }

    // entrywise CRT evaluation at v = 0, 1, -1
    std::array<FieldMatrix, 3> crt_split() const {
        std::array<FieldMatrix, 3> out = {FieldMatrix(R_->base(), rows_, cols_),
                                          FieldMatrix(R_->base(), rows_, cols_),
                                          FieldMatrix(R_->base(), rows_, cols_)};
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                auto c = R_->to_crt(at(i, j));
                out[0].at(i, j) = c[0];
                out[1].at(i, j) = c[1];
                out[2].at(i, j) = c[2];
            }
        return out;
    }

    static RingMatrix crt_join(const RingPtr& R, const std::array<FieldMatrix, 3>& m) {
        RingMatrix r(R, m[0].rows(), m[0].cols());
        for (size_t i = 0; i < r.rows_; ++i)
            for (size_t j = 0; j < r.cols_; ++j)
                r.at(i, j) = R->from_crt({m[0].at(i, j), m[1].at(i, j), m[2].at(i, j)});
        return r;
    }

    // det is a unit <=> all three CRT component determinants are nonzero
    bool nonsingular() const {
        if (rows_ != cols_) throw error(errc::non_square, "nonsingularity of non-square matrix");
        auto s = crt_split();
        return s[0].det() != 0 && s[1].det() != 0 && s[2].det() != 0;
    }

    RingElem det() const {
        if (rows_ != cols_) throw error(errc::non_square, "determinant of non-square matrix");
        auto s = crt_split();
        return {R_, R_->from_crt({s[0].det(), s[1].det(), s[2].det()})};
    }

    // embed a field matrix (entries a -> a + 0v + 0v^2)
    static RingMatrix embed(const RingPtr& R, const FieldMatrix& m) {
        RingMatrix r(R, m.rows(), m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = {m.at(i, j), 0, 0};
        return r;
    }

    RingMatrix scaled(const RTriple& s) const {
        RingMatrix r = *this;
        for (auto& x : r.a_) x = R_->mul(x, s);
        return r;
    }

  private:
    RingPtr R_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<RTriple> a_;
};

// Row i+1 is row i shifted right by one, wrapped entry multiplied by lambda.
// lambda is not restricted to units: several published double-circulant
// examples use zero divisors, and downstream verdicts come from the checkers
// rather than from any hypothesis on lambda.
inline FieldMatrix lambda_circulant(const FieldPtr& f, uint16_t lambda,
                                    const std::vector<uint16_t>& first_row) {
    const size_t n = first_row.size();
    FieldMatrix m(f, n, n);
    for (size_t j = 0; j < n; ++j) m.at(0, j) = first_row[j];
    for (size_t i = 1; i < n; ++i) {
        m.at(i, 0) = f->mul(lambda, m.at(i - 1, n - 1));
        for (size_t j = 1; j < n; ++j) m.at(i, j) = m.at(i - 1, j - 1);
    }
    return m;
}

inline RingMatrix lambda_circulant(const RingPtr& R, const RTriple& lambda,
                                   const std::vector<RTriple>& first_row) {
    const size_t n = first_row.size();
    RingMatrix m(R, n, n);
    for (size_t j = 0; j < n; ++j) m.at(0, j) = first_row[j];
    for (size_t i = 1; i < n; ++i) {
        m.at(i, 0) = R->mul(lambda, m.at(i - 1, n - 1));
        for (size_t j = 1; j < n; ++j) m.at(i, j) = m.at(i - 1, j - 1);
    }
    return m;
}

// S_lambda: M is lambda-circulant  <=>  M * S = S * M. Right multiplication
// by S shifts a row vector one place right, scaling the wrapped entry by
// lambda, and S^n = lambda * I.
inline FieldMatrix lambda_shift(const FieldPtr& f, uint16_t lambda, size_t n) {
    FieldMatrix s(f, n, n);
    for (size_t i = 0; i + 1 < n; ++i) s.at(i, i + 1) = 1;
    s.at(n - 1, 0) = lambda;
    return s;
}

}  // namespace triv
