#pragma once

// The ring R = F_q + vF_q + v^2F_q with v^3 = v, q odd. CRT-decomposes as
// F_q^3 through evaluation at v = 0, 1, -1; the orthogonal idempotents are
// eta1 = 1 - v^2, eta2 = (v + v^2)/2, eta3 = (v^2 - v)/2. The Gray map sends
// a word to the block-grouped CRT coordinates, so the image of eta_i-multiples
// lands in block i and the Lee weight of an element is the Hamming weight of
// its CRT triple.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gf.hpp"

namespace triv {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// raw (a, b, c) triple for bulk storage: a + v*b + v^2*c
using RTriple = std::array<uint16_t, 3>;

class Ring : public std::enable_shared_from_this<Ring> {
  public:
    static RingPtr make(FieldPtr base) {
        if (base->p() == 2)
            throw error(errc::even_characteristic, "R = F_q + vF_q + v^2F_q requires odd q");
        return RingPtr(new Ring(std::move(base)));
    }

    const FieldPtr& base() const { return f_; }
    long long q() const { return f_->q(); }
    bool same(const Ring& o) const { return f_->same(*o.f_); }

    RTriple add(const RTriple& x, const RTriple& y) const {
        return {f_->add(x[0], y[0]), f_->add(x[1], y[1]), f_->add(x[2], y[2])};
    }
    RTriple sub(const RTriple& x, const RTriple& y) const {
        return {f_->sub(x[0], y[0]), f_->sub(x[1], y[1]), f_->sub(x[2], y[2])};
    }
    RTriple neg(const RTriple& x) const { return {f_->neg(x[0]), f_->neg(x[1]), f_->neg(x[2])}; }

    // closed form: (a+vb+v^2c)(a'+vb'+v^2c') reduced by v^3 = v
    RTriple mul(const RTriple& x, const RTriple& y) const {
        const Field& F = *f_;
        uint16_t a = x[0], b = x[1], c = x[2];
        uint16_t ap = y[0], bp = y[1], cp = y[2];
        uint16_t r0 = F.mul(a, ap);
        uint16_t r1 = F.add(F.add(F.mul(a, bp), F.mul(ap, b)), F.add(F.mul(b, cp), F.mul(bp, c)));
        uint16_t r2 = F.add(F.add(F.mul(a, cp), F.mul(ap, c)), F.add(F.mul(b, bp), F.mul(c, cp)));
        return {r0, r1, r2};
    }

    // same product through the CRT components; kept separate as a cross-oracle
    RTriple mul_via_crt(const RTriple& x, const RTriple& y) const {
        auto cx = to_crt(x), cy = to_crt(y);
        return from_crt({f_->mul(cx[0], cy[0]), f_->mul(cx[1], cy[1]), f_->mul(cx[2], cy[2])});
    }

    // evaluations at v = 0, 1, -1
    RTriple to_crt(const RTriple& x) const {
        const Field& F = *f_;
        uint16_t s = F.add(x[1], x[2]);
        return {x[0], F.add(x[0], s), F.add(x[0], F.sub(x[2], x[1]))};
    }

    RTriple from_crt(const RTriple& phi) const {
        const Field& F = *f_;
        uint16_t inv2 = F.inv(F.add(1, 1));
        uint16_t a = phi[0];
        uint16_t b = F.mul(F.sub(phi[1], phi[2]), inv2);
        uint16_t c = F.sub(F.mul(F.add(phi[1], phi[2]), inv2), phi[0]);
        return {a, b, c};
    }

    bool is_unit(const RTriple& x) const {
        auto cx = to_crt(x);
        return cx[0] != 0 && cx[1] != 0 && cx[2] != 0;
    }

    bool is_zero(const RTriple& x) const { return x[0] == 0 && x[1] == 0 && x[2] == 0; }

    int lee_weight(const RTriple& x) const {
        auto cx = to_crt(x);
        return (cx[0] != 0) + (cx[1] != 0) + (cx[2] != 0);
    }

    // eta1, eta2, eta3
    std::array<RTriple, 3> idempotents() const {
        const Field& F = *f_;
        uint16_t inv2 = F.inv(F.add(1, 1));
        RTriple e1 = {1, 0, F.neg(1)};
        RTriple e2 = {0, inv2, inv2};
        RTriple e3 = {0, F.neg(inv2), inv2};
        return {e1, e2, e3};
    }

    RTriple scalar(uint16_t a) const { return {a, 0, 0}; }

  private:
    explicit Ring(FieldPtr f) : f_(std::move(f)) {}
    FieldPtr f_;
};

// API-level ring element; bulk data stores RTriple with one RingPtr.
class RingElem {
  public:
    RingElem() = default;
    RingElem(RingPtr R, RTriple v) : R_(std::move(R)), v_(v) {}
    RingElem(RingPtr R, uint16_t a, uint16_t b, uint16_t c) : R_(std::move(R)), v_{a, b, c} {}

    const RTriple& triple() const { return v_; }
    const RingPtr& ring() const { return R_; }
    bool is_zero() const { return R_->is_zero(v_); }
    bool is_unit() const { return R_->is_unit(v_); }

    friend RingElem operator+(const RingElem& x, const RingElem& y) {
        check(x, y);
        return {x.R_, x.R_->add(x.v_, y.v_)};
    }
    friend RingElem operator-(const RingElem& x, const RingElem& y) {
        check(x, y);
        return {x.R_, x.R_->sub(x.v_, y.v_)};
    }
    friend RingElem operator*(const RingElem& x, const RingElem& y) {
        check(x, y);
        return {x.R_, x.R_->mul(x.v_, y.v_)};
    }
    RingElem operator-() const { return {R_, R_->neg(v_)}; }
    friend bool operator==(const RingElem& x, const RingElem& y) {
        check(x, y);
        return x.v_ == y.v_;
    }
    friend bool operator!=(const RingElem& x, const RingElem& y) { return !(x == y); }

  private:
    static void check(const RingElem& x, const RingElem& y) {
        if (!x.R_ || !y.R_ || !x.R_->same(*y.R_))
            throw error(errc::mixed_rings, "operands from different rings");
    }
    RingPtr R_;
    RTriple v_ = {0, 0, 0};
};

// canonical literal "a+b*v+c*v^2" with zero terms omitted
inline std::string to_string(const Ring&, const RTriple& x) {
    std::vector<std::string> terms;
    if (x[0]) terms.push_back(std::to_string(x[0]));
    if (x[1]) terms.push_back(x[1] == 1 ? "v" : std::to_string(x[1]) + "*v");
    if (x[2]) terms.push_back(x[2] == 1 ? "v^2" : std::to_string(x[2]) + "*v^2");
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (size_t i = 1; i < terms.size(); ++i) out += "+" + terms[i];
    return out;
}

// Gray map on words: output is block-grouped, (phi1 of all coordinates |
// phi2 block | phi3 block), length 3n over the base field.
inline std::vector<uint16_t> gray(const Ring& R, const std::vector<RTriple>& word) {
    const size_t n = word.size();
    std::vector<uint16_t> out(3 * n);
    for (size_t i = 0; i < n; ++i) {
        auto c = R.to_crt(word[i]);
        out[i] = c[0];
        out[n + i] = c[1];
        out[2 * n + i] = c[2];
    }
    return out;
}

inline int lee_weight(const Ring& R, const std::vector<RTriple>& word) {
    int w = 0;
    for (const auto& x : word) w += R.lee_weight(x);
    return w;
}

}  // namespace triv
