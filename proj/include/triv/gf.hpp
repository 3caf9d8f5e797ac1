#pragma once

// Exact arithmetic in small finite fields F_{p^r}. Elements are stored as
// integer indices 0..q-1; the index is the base-p digit encoding of the
// coefficient vector in the modulus basis (index t <-> coefficients
// (t mod p, t/p mod p, ...), lowest degree first). Fields here are tiny,
// so full addition/multiplication tables are precomputed once per field.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace triv {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// dense polynomial helpers over Z_p, coefficients low..high, no normalization needed
using ZPoly = std::vector<int>;

inline ZPoly zp_trim(ZPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = int((c[i + j] + 1LL * a[i] * b[j]) % p);
    return zp_trim(c);
}

inline ZPoly zp_mod(ZPoly a, const ZPoly& m, int p) {
    a = zp_trim(a);
    const int dm = int(m.size()) - 1;
    // m is monic
    while (int(a.size()) - 1 >= dm) {
        int da = int(a.size()) - 1;
        int lead = a.back();
        for (int i = 0; i <= dm; ++i) {
            int& t = a[da - dm + i];
            t = int(((t - 1LL * lead * m[i]) % p + p) % p);
        }
        a = zp_trim(a);
    }
    return a;
}

inline ZPoly zp_gcd(ZPoly a, ZPoly b, int p) {
    a = zp_trim(std::move(a));
    b = zp_trim(std::move(b));
    auto inv_mod = [&](int x) {
        int r = 1, e = p - 2, base = ((x % p) + p) % p;
        while (e) {
            if (e & 1) r = int(1LL * r * base % p);
            base = int(1LL * base * base % p);
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // make b monic, then a mod b
        int inv = inv_mod(b.back());
        for (auto& c : b) c = int(1LL * c * inv % p);
        a = zp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// f monic of degree r over Z_p; irreducible iff gcd(x^{p^i} - x, f) = 1 for all i <= r/2
inline bool zp_irreducible(const ZPoly& f, int p) {
    const int r = int(f.size()) - 1;
    if (r <= 0) return false;
    ZPoly x = {0, 1};
    ZPoly xp = zp_mod(x, f, p);  // running x^{p^i} mod f
    for (int i = 1; i <= r / 2; ++i) {
        // xp <- xp^p mod f by square-and-multiply over the exponent p
        ZPoly acc = {1};
        ZPoly base = xp;
        long long e = p;
        while (e) {
            if (e & 1) acc = zp_mod(zp_mul(acc, base, p), f, p);
            base = zp_mod(zp_mul(base, base, p), f, p);
            e >>= 1;
        }
        xp = acc;
        // gcd(xp - x, f)
        ZPoly diff = xp;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = int(((diff[1] - 1) % p + p) % p);
        ZPoly g = zp_gcd(diff, f, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

}  // namespace detail

// Immutable specification of F_{p^r} with full arithmetic tables.
class Field : public std::enable_shared_from_this<Field> {
  public:
    static constexpr long long kMaxQ = 4096;  // desk-scale fields only

    // modulus: monic irreducible of degree r over Z_p, coefficients low..high,
    // length r+1. Required when r > 1 unless a bundled default exists.
    static FieldPtr make(long long p, int r = 1, std::vector<int> modulus = {}) {
        if (!detail::is_prime(p))
            throw error(errc::non_prime_characteristic, std::to_string(p) + " is not prime");
        if (r < 1) throw error(errc::parse_error, "extension degree must be >= 1");
        long long q = 1;
        for (int i = 0; i < r; ++i) {
            q *= p;
            if (q > kMaxQ) throw error(errc::field_too_large, "q exceeds desk-scale limit");
        }
        if (r == 1) {
            if (!modulus.empty() && modulus != std::vector<int>{0, 1})
                throw error(errc::parse_error, "prime field takes no modulus");
            return FieldPtr(new Field(p, r, {}));
        }
        if (modulus.empty()) {
            modulus = bundled_modulus(q);
            if (modulus.empty())
                throw error(errc::missing_modulus,
                            "no modulus given and no bundled default for q=" + std::to_string(q));
        }
        for (auto& c : modulus) c = int(((c % p) + p) % p);
        if (int(modulus.size()) == r) modulus.push_back(1);  // implied monic leading 1
        if (int(modulus.size()) != r + 1 || modulus.back() != 1)
            throw error(errc::parse_error, "modulus must be monic of degree r");
        if (!detail::zp_irreducible(modulus, int(p)))
            throw error(errc::reducible_modulus, "modulus is reducible over Z_" + std::to_string(p));
        return FieldPtr(new Field(p, r, std::move(modulus)));
    }

    // Bundled default or deterministic smallest irreducible modulus.
    static FieldPtr make_auto(long long p, int r) {
        if (r == 1) return make(p);
        long long q = 1;
        for (int i = 0; i < r; ++i) q *= p;
        auto def = bundled_modulus(q);
        if (!def.empty()) return make(p, r, def);
        // scan monic candidates in index order
        long long count = 1;
        for (int i = 0; i < r; ++i) count *= p;
        for (long long t = 0; t < count; ++t) {
            std::vector<int> m(r + 1, 0);
            long long v = t;
            for (int i = 0; i < r; ++i) {
                m[i] = int(v % p);
                v /= p;
            }
            m[r] = 1;
            if (detail::zp_irreducible(m, int(p))) return make(p, r, m);
        }
        throw error(errc::not_found, "no irreducible modulus found");  // unreachable
    }

    // Defaults used by the constructions that need quadratic extensions.
    static std::vector<int> bundled_modulus(long long q) {
        if (q == 9) return {1, 0, 1};   // x^2 + 1 over F_3
        if (q == 25) return {2, 0, 1};  // x^2 + 2 over F_5
        if (q == 49) return {1, 0, 1};  // x^2 + 1 over F_7
        return {};
    }

    long long p() const { return p_; }
    int r() const { return r_; }
    long long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    bool same(const Field& o) const {
        return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
    }

    uint16_t add(uint16_t a, uint16_t b) const { return add_[size_t(a) * q_ + b]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add_[size_t(a) * q_ + neg_[b]]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_[size_t(a) * q_ + b]; }
    uint16_t neg(uint16_t a) const { return neg_[a]; }
    uint16_t inv(uint16_t a) const {
        if (a == 0) throw error(errc::division_by_zero, "inverse of zero");
        return inv_[a];
    }
    uint16_t pow(uint16_t a, long long e) const {
        if (e < 0) return pow(inv(a), -e);
        uint16_t acc = 1, base = a;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    // quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise (q odd)
    int character(uint16_t a) const {
        if (p_ == 2) throw error(errc::even_characteristic, "quadratic character needs odd q");
        return chi_[a];
    }

    // row pointers for the enumeration hot loops
    const uint16_t* add_row(uint16_t a) const { return add_.data() + size_t(a) * q_; }
    const uint16_t* mul_row(uint16_t a) const { return mul_.data() + size_t(a) * q_; }

    // digits of the coefficient vector, lowest degree first
    std::vector<int> coeffs(uint16_t a) const {
        std::vector<int> c(r_);
        long long v = a;
        for (int i = 0; i < r_; ++i) {
            c[i] = int(v % p_);
            v /= p_;
        }
        return c;
    }
    uint16_t from_coeffs(const std::vector<int>& c) const {
        long long v = 0;
        for (int i = int(c.size()) - 1; i >= 0; --i) v = v * p_ + ((c[i] % p_ + p_) % p_);
        return uint16_t(v);
    }

    std::string spec_string() const {
        std::string s = std::to_string(p_);
        if (r_ > 1) {
            s += "^" + std::to_string(r_) + ":";
            for (int i = 0; i <= r_; ++i) s += (i ? "," : "") + std::to_string(modulus_[i]);
        }
        return s;
    }

  private:
    Field(long long p, int r, std::vector<int> modulus)
        : p_(p), r_(r), modulus_(std::move(modulus)) {
        q_ = 1;
        for (int i = 0; i < r_; ++i) q_ *= p_;
        build_tables();
    }

    void build_tables() {
        const size_t q = size_t(q_);
        add_.resize(q * q);
        mul_.resize(q * q);
        neg_.resize(q);
        inv_.assign(q, 0);
        for (size_t a = 0; a < q; ++a) {
            for (size_t b = 0; b < q; ++b) {
                add_[a * q + b] = add_slow(uint16_t(a), uint16_t(b));
                mul_[a * q + b] = mul_slow(uint16_t(a), uint16_t(b));
            }
        }
        for (size_t a = 0; a < q; ++a) {
            // -a: sum with a gives 0
            for (size_t b = 0; b < q; ++b)
                if (add_[a * q + b] == 0) neg_[a] = uint16_t(b);
            for (size_t b = 1; b < q; ++b)
                if (mul_[a * q + b] == 1) inv_[a] = uint16_t(b);
        }
        chi_.assign(q, 0);
        if (p_ != 2) {
            for (size_t a = 1; a < q; ++a) chi_[a] = -1;
            for (size_t a = 1; a < q; ++a) chi_[mul_[a * q + a]] = 1;
        }
    }

    uint16_t add_slow(uint16_t a, uint16_t b) const {
        long long va = a, vb = b, res = 0, mult = 1;
        for (int i = 0; i < r_; ++i) {
            res += ((va % p_ + vb % p_) % p_) * mult;
            va /= p_;
            vb /= p_;
            mult *= p_;
        }
        return uint16_t(res);
    }

    uint16_t mul_slow(uint16_t a, uint16_t b) const {
        if (r_ == 1) return uint16_t(1LL * a * b % p_);
        detail::ZPoly pa(r_), pb(r_);
        long long va = a, vb = b;
        for (int i = 0; i < r_; ++i) {
            pa[i] = int(va % p_);
            pb[i] = int(vb % p_);
            va /= p_;
            vb /= p_;
        }
        auto prod = detail::zp_mod(detail::zp_mul(pa, pb, int(p_)), modulus_, int(p_));
        long long res = 0;
        for (int i = int(prod.size()) - 1; i >= 0; --i) res = res * p_ + prod[i];
        return uint16_t(res);
    }

    long long p_, q_;
    int r_;
    std::vector<int> modulus_;
    std::vector<uint16_t> add_, mul_, neg_, inv_;
    std::vector<int8_t> chi_;
};

// An element bound to its field; convenience wrapper for API-level scalars.
// Bulk data (matrices, codewords) stores raw indices with a single FieldPtr.
class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(FieldPtr f, uint16_t v) : f_(std::move(f)), v_(v) {}

    uint16_t value() const { return v_; }
    const FieldPtr& field() const { return f_; }
    bool is_zero() const { return v_ == 0; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.f_, a.f_->add(a.v_, b.v_)};
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.f_, a.f_->sub(a.v_, b.v_)};
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.f_, a.f_->mul(a.v_, b.v_)};
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.f_, a.f_->mul(a.v_, b.f_->inv(b.v_))};
    }
    FieldElem operator-() const { return {f_, f_->neg(v_)}; }
    FieldElem inv() const { return {f_, f_->inv(v_)}; }
    FieldElem pow(long long e) const { return {f_, f_->pow(v_, e)}; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  private:
    static void check(const FieldElem& a, const FieldElem& b) {
        if (!a.f_ || !b.f_ || !a.f_->same(*b.f_))
            throw error(errc::mixed_fields, "operands from different fields");
    }
    FieldPtr f_;
    uint16_t v_ = 0;
};

inline int quadratic_character(const FieldElem& x) { return x.field()->character(x.value()); }

// Smallest-index element of exact multiplicative order m (m must divide q-1).
inline FieldElem element_of_order(const FieldPtr& f, long long m) {
    if (m < 1 || (f->q() - 1) % m != 0)
        throw error(errc::order_does_not_divide,
                    std::to_string(m) + " does not divide q-1=" + std::to_string(f->q() - 1));
    std::vector<long long> prime_factors;
    long long mm = m;
    for (long long ell = 2; ell * ell <= mm; ++ell)
        if (mm % ell == 0) {
            prime_factors.push_back(ell);
            while (mm % ell == 0) mm /= ell;
        }
    if (mm > 1) prime_factors.push_back(mm);
    for (long long x = 1; x < f->q(); ++x) {
        if (f->pow(uint16_t(x), m) != 1) continue;
        bool exact = true;
        for (long long ell : prime_factors)
            if (f->pow(uint16_t(x), m / ell) == 1) {
                exact = false;
                break;
            }
        if (exact) return {f, uint16_t(x)};
    }
    throw error(errc::not_found, "no element of order " + std::to_string(m));
}

}  // namespace triv
