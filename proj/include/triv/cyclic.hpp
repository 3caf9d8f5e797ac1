#pragma once

// Polynomial arithmetic over F_q, cyclic codes over F_q and R, the
// self-reciprocal LCD criterion, and the MDS LCD cyclic construction built
// from an element of order q+1 in F_{q^2}.

#include <string>
#include <vector>

#include "code.hpp"

namespace triv {

// Coefficients low..high with no trailing zeros; the zero polynomial has an
// empty coefficient vector and degree -1.
class Poly {
  public:
    Poly() = default;
    Poly(FieldPtr f, std::vector<uint16_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        trim();
    }
    static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
    static Poly one(FieldPtr f) { return Poly(std::move(f), {1}); }
    static Poly x(FieldPtr f) { return Poly(std::move(f), {0, 1}); }

    // x^n - 1
    static Poly xn_minus_1(const FieldPtr& f, size_t n) {
        std::vector<uint16_t> c(n + 1, 0);
        c[0] = f->neg(1);
        c[n] = 1;
        return Poly(f, std::move(c));
    }

    const FieldPtr& field() const { return f_; }
    const std::vector<uint16_t>& coeffs() const { return c_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint16_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint16_t lead() const { return c_.empty() ? 0 : c_.back(); }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.f_->same(*b.f_) && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check(a, b);
        std::vector<uint16_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_->add(a.coeff(i), b.coeff(i));
        return Poly(a.f_, std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        check(a, b);
        std::vector<uint16_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_->sub(a.coeff(i), b.coeff(i));
        return Poly(a.f_, std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return zero(a.f_);
        std::vector<uint16_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            const uint16_t* mrow = a.f_->mul_row(a.c_[i]);
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = a.f_->add(c[i + j], mrow[b.c_[j]]);
        }
        return Poly(a.f_, std::move(c));
    }

    Poly scaled(uint16_t s) const {
        std::vector<uint16_t> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(c_[i], s);
        return Poly(f_, std::move(c));
    }

    // (quotient, remainder) with deg rem < deg divisor
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        check(a, b);
        if (b.is_zero()) throw error(errc::division_by_zero_poly, "division by zero polynomial");
        std::vector<uint16_t> rem = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {zero(a.f_), a};
        std::vector<uint16_t> quo(a.degree() - db + 1, 0);
        uint16_t leadinv = a.f_->inv(b.lead());
        for (int i = a.degree(); i >= db; --i) {
            uint16_t cf = rem[size_t(i)];
            if (!cf) continue;
            uint16_t qc = a.f_->mul(cf, leadinv);
            quo[size_t(i - db)] = qc;
            const uint16_t* mrow = a.f_->mul_row(qc);
            for (int j = 0; j <= db; ++j)
                rem[size_t(i - db + j)] = a.f_->sub(rem[size_t(i - db + j)], mrow[b.c_[size_t(j)]]);
        }
        return {Poly(a.f_, std::move(quo)), Poly(a.f_, std::move(rem))};
    }

    static Poly gcd(Poly a, Poly b) {
        check(a, b);
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = b;
            b = r;
        }
        if (!a.is_zero()) a = a.scaled(a.f_->inv(a.lead()));  // monic
        return a;
    }

    uint16_t eval(uint16_t x) const {
        uint16_t acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
        return acc;
    }

    bool divides(const Poly& other) const { return divmod(other, *this).second.is_zero(); }

    Poly monic() const {
        if (is_zero()) throw error(errc::zero_polynomial, "monic of zero polynomial");
        return scaled(f_->inv(lead()));
    }

  private:
    static void check(const Poly& a, const Poly& b) {
        if (!a.f_ || !b.f_ || !a.f_->same(*b.f_))
            throw error(errc::mixed_fields, "polynomials over different fields");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    FieldPtr f_;
    std::vector<uint16_t> c_;
};

// h*(x) = x^{deg h} h(1/x): plain coefficient reversal; degree drops if h(0)=0
inline Poly reciprocal(const Poly& h) {
    if (h.is_zero()) throw error(errc::zero_polynomial, "reciprocal of zero polynomial");
    std::vector<uint16_t> c(h.coeffs().rbegin(), h.coeffs().rend());
    return Poly(h.field(), std::move(c));
}

// strict equality h = h*
inline bool is_self_reciprocal(const Poly& h) { return h == reciprocal(h); }

// h* = c h for some nonzero scalar c (same ideal; the predicate the LCD
// criterion actually depends on)
inline bool is_self_reciprocal_scalar(const Poly& h) {
    Poly r = reciprocal(h);
    if (r.degree() != h.degree()) return false;
    uint16_t c = h.field()->mul(r.lead(), h.field()->inv(h.lead()));
    return r == h.scaled(c);
}

// [n, n - deg f] cyclic code generated by f (f must divide x^n - 1)
inline FieldCode cyclic_code(const Poly& f, size_t n) {
    if (f.is_zero()) throw error(errc::zero_polynomial, "zero generator polynomial");
    const FieldPtr& F = f.field();
    Poly xn1 = Poly::xn_minus_1(F, n);
    if (!f.divides(xn1)) throw error(errc::not_a_divisor, "f does not divide x^n - 1");
    int deg = f.degree();
    size_t k = n - size_t(deg);
    FieldMatrix g(F, k, n);
    for (size_t s = 0; s < k; ++s)
        for (int i = 0; i <= deg; ++i) g.at(s, (size_t(i) + s) % n) = f.coeff(size_t(i));
    return FieldCode::from_rows(g);
}

// monic h* with x^n - 1 = f h; generates the dual of <f>
inline Poly cyclic_dual_generator(const Poly& f, size_t n) {
    const FieldPtr& F = f.field();
    Poly xn1 = Poly::xn_minus_1(F, n);
    auto [h, rem] = Poly::divmod(xn1, f);
    if (!rem.is_zero()) throw error(errc::not_a_divisor, "f does not divide x^n - 1");
    return reciprocal(h).monic();
}

// LCD verdict for the cyclic code <f>. The hull is the ground truth; where
// the classical criterion applies (gcd(n, q) = 1) the scalar-normalized
// self-reciprocal test must agree with it.
inline bool cyclic_is_lcd(const Poly& f, size_t n) {
    FieldCode C = cyclic_code(f, n);
    bool lcd;
    if (C.k() == 0)
        lcd = true;  // zero code, trivial hull
    else
        lcd = (hull_dim(C) == 0);
    long long q = f.field()->q();
    bool coprime = [&] {
        long long a = (long long)n, b = q;
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a == 1;
    }();
    if (coprime && C.k() > 0) {
        bool predicted = is_self_reciprocal_scalar(f);
        if (predicted != lcd)
            throw error(errc::internal_oracle_disagreement,
                        "self-reciprocal criterion disagrees with hull for gcd(n,q)=1");
    }
    return lcd;
}

// all monic divisors of x^n - 1 over F_q, found by exhaustive scan
inline std::vector<Poly> divisors_of_xn_minus_1(const FieldPtr& f, size_t n) {
    Poly xn1 = Poly::xn_minus_1(f, n);
    std::vector<Poly> out;
    out.push_back(Poly::one(f));
    const long long q = f->q();
    for (size_t d = 1; d <= n; ++d) {
        // monic candidates of degree d in index order of the low coefficients
        unsigned long long count = 1;
        for (size_t i = 0; i < d; ++i) count *= (unsigned long long)q;
        for (unsigned long long t = 0; t < count; ++t) {
            std::vector<uint16_t> c(d + 1, 0);
            unsigned long long v = t;
            for (size_t i = 0; i < d; ++i) {
                c[i] = uint16_t(v % (unsigned long long)q);
                v /= (unsigned long long)q;
            }
            c[d] = 1;
            Poly cand(f, std::move(c));
            if (cand.divides(xn1)) out.push_back(cand);
        }
    }
    return out;
}

// cyclic code over R with components <f1>, <f2>, <f3>
inline RingCode r_cyclic_code(const RingPtr& R, const Poly& f1, const Poly& f2, const Poly& f3,
                              size_t n) {
    FieldCode c1 = cyclic_code(f1, n), c2 = cyclic_code(f2, n), c3 = cyclic_code(f3, n);
    RingCode C = RingCode::from_components(R, c1, c2, c3);
    // |C| = q^{3n - deg f1 - deg f2 - deg f3}
    size_t expo = 3 * n - size_t(f1.degree()) - size_t(f2.degree()) - size_t(f3.degree());
    if (C.log_q_card() != expo)
        throw error(errc::internal_oracle_disagreement, "cyclic cardinality mismatch");
    return C;
}

struct MdsLcdResult {
    Poly g;
    FieldCode code;
    size_t n = 0, k = 0, d = 0;
    bool mds = false;
};

namespace detail {

// embedding of `small` into `big` (same characteristic, r_small | r_big),
// determined by the first root of small's modulus in big; returns the image
// of every small element, indexed by small's element index
inline std::vector<uint16_t> subfield_embedding(const FieldPtr& small, const FieldPtr& big) {
    if (small->p() != big->p() || big->r() % small->r() != 0)
        throw error(errc::mixed_fields, "no subfield embedding");
    const long long p = small->p();
    std::vector<uint16_t> img(size_t(small->q()), 0);
    if (small->r() == 1) {
        for (long long a = 0; a < p; ++a) {
            uint16_t acc = 0;
            for (long long i = 0; i < a; ++i) acc = big->add(acc, 1);
            img[size_t(a)] = acc;
        }
        return img;
    }
    // find a root of small's modulus inside big
    const auto& mod = small->modulus();
    uint16_t root = 0;
    bool found = false;
    for (long long x = 0; x < big->q() && !found; ++x) {
        uint16_t acc = 0;
        for (size_t i = mod.size(); i-- > 0;) {
            acc = big->mul(acc, uint16_t(x));
            uint16_t cterm = 0;
            for (int t = 0; t < mod[i]; ++t) cterm = big->add(cterm, 1);
            acc = big->add(acc, cterm);
        }
        if (acc == 0) {
            root = uint16_t(x);
            found = true;
        }
    }
    if (!found) throw error(errc::internal_oracle_disagreement, "modulus has no root upstairs");
    for (long long a = 0; a < small->q(); ++a) {
        auto digits = small->coeffs(uint16_t(a));
        uint16_t acc = 0;
        for (size_t i = digits.size(); i-- > 0;) {
            acc = big->mul(acc, root);
            uint16_t cterm = 0;
            for (int t = 0; t < digits[i]; ++t) cterm = big->add(cterm, 1);
            acc = big->add(acc, cterm);
        }
        img[size_t(a)] = acc;
    }
    return img;
}

}  // namespace detail

// MDS LCD cyclic code of length q+1 from a self-reciprocal generator whose
// roots are consecutive powers of an element of order q+1 in F_{q^2}.
// Odd q: g = prod_{i=-mu..mu} (x - a^i), code [q+1, q-2mu, 2mu+2].
// Even q: g = prod_{i=q/2-mu..q/2} (x - a^i)(x - a^-i), code [q+1, q-1-2mu, 2mu+3].
inline MdsLcdResult mds_lcd_generator(long long q, int mu,
                                      unsigned long long budget = kDefaultBudget) {
    // factor q as p^r
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
    const bool odd = (p != 2);
    const int mu_max = odd ? int((q - 1) / 2) : int(q / 2 - 1);
    if (mu < 1 || mu > mu_max)
        throw error(errc::mu_out_of_range,
                    "mu must be in [1, " + std::to_string(mu_max) + "] for q=" + std::to_string(q));

    FieldPtr Fq = Field::make_auto(p, r);
    FieldPtr Fq2 = Field::make_auto(p, 2 * r);
    FieldElem alpha = element_of_order(Fq2, q + 1);

    std::vector<int> exps;
    if (odd) {
        for (int i = -mu; i <= mu; ++i) exps.push_back(i);
    } else {
        for (int i = int(q / 2) - mu; i <= int(q / 2); ++i) {
            exps.push_back(i);
            exps.push_back(-i);
        }
    }
    Poly g = Poly::one(Fq2);
    for (int e : exps) {
        long long ee = ((e % (q + 1)) + (q + 1)) % (q + 1);
        uint16_t root = Fq2->pow(alpha.value(), ee);
        g = g * Poly(Fq2, {Fq2->neg(root), 1});
    }

    // map coefficients down to F_q
    auto img = detail::subfield_embedding(Fq, Fq2);
    std::vector<uint16_t> down(g.coeffs().size());
    for (size_t i = 0; i < g.coeffs().size(); ++i) {
        uint16_t c = g.coeff(i);
        bool ok = false;
        for (long long a = 0; a < Fq->q(); ++a)
            if (img[size_t(a)] == c) {
                down[i] = uint16_t(a);
                ok = true;
                break;
            }
        if (!ok)
            throw error(errc::coefficient_not_in_base_field,
                        "generator coefficient lies outside F_q");
    }
    Poly gq(Fq, std::move(down));
    if (!is_self_reciprocal_scalar(gq))
        throw error(errc::internal_oracle_disagreement, "MDS generator is not self-reciprocal");

    MdsLcdResult res;
    res.g = gq;
    res.n = size_t(q + 1);
    res.code = cyclic_code(gq, res.n);
    res.k = res.code.k();
    res.d = min_distance(res.code, budget).d;
    res.mds = (res.d == res.n - res.k + 1);
    if (!res.mds) throw error(errc::internal_oracle_disagreement, "MDS distance check failed");
    return res;
}

}  // namespace triv
