// Dense univariate polynomials over an exact coefficient ring.
// Invariant: no trailing zero coefficients; the zero polynomial has an empty
// coefficient vector and degree -1.
#ifndef PENCIL_UNIPOLY_HPP
#define PENCIL_UNIPOLY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pencil/ring.hpp"

namespace pencil {

template <class K>
class UniPoly {
  public:
    explicit UniPoly(const K& sample) : sample_(zero_like(sample)) {}
    UniPoly(const K& sample, std::vector<K> coeffs) : sample_(zero_like(sample)), c_(std::move(coeffs)) {
        trim();
    }
    static UniPoly constant(const K& v) { return UniPoly(v, {v}); }
    static UniPoly monomial(const K& coeff, size_t e) {
        std::vector<K> c(e + 1, zero_like(coeff));
        c[e] = coeff;
        return UniPoly(coeff, std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const K& sample() const { return sample_; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : zero_like(sample_); }
    const K& lead() const {
        if (c_.empty()) throw std::domain_error("UniPoly: leading coefficient of zero");
        return c_.back();
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), zero_like(a.sample_));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(a.sample_, std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), zero_like(a.sample_));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return UniPoly(a.sample_, std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<K> c(a.c_);
        for (auto& x : c) x = -x;
        return UniPoly(a.sample_, std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly(a.sample_);
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, zero_like(a.sample_));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(a.sample_, std::move(c));
    }
    UniPoly scale(const K& s) const {
        std::vector<K> c(c_);
        for (auto& x : c) x = x * s;
        return UniPoly(sample_, std::move(c));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    K eval(const K& x) const {
        K acc = zero_like(sample_);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly(sample_);
        std::vector<K> c(c_.size() - 1, zero_like(sample_));
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * int_like(sample_, static_cast<long>(i));
        return UniPoly(sample_, std::move(c));
    }

    /// Division with remainder; requires the divisor's leading coefficient to be
    /// invertible (fields) — use pseudo_divrem over plain rings.
    friend std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
        static_assert(is_field_v<K>, "divrem needs a field; use pseudo_divrem");
        if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
        UniPoly q(a.sample_), r = a;
        const K linv = field_inv(b.lead());
        while (!r.is_zero() && r.degree() >= b.degree()) {
            size_t shift = static_cast<size_t>(r.degree() - b.degree());
            K factor = r.lead() * linv;
            q = q + UniPoly::monomial(factor, shift);
            r = r - b.shifted(shift).scale(factor);
        }
        return {q, r};
    }

    UniPoly shifted(size_t e) const {  // multiply by x^e
        if (is_zero() || e == 0) return *this;
        std::vector<K> c(c_.size() + e, zero_like(sample_));
        for (size_t i = 0; i < c_.size(); ++i) c[i + e] = c_[i];
        return UniPoly(sample_, std::move(c));
    }

    UniPoly monic() const {
        static_assert(is_field_v<K>, "monic needs a field");
        if (is_zero()) return *this;
        return scale(field_inv(lead()));
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (pencil::is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            out += coeff_str(c_[i]);
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

  private:
    template <class Q>
    static std::string coeff_str(const Q& c) {
        return c.str();
    }

    void trim() {
        while (!c_.empty() && pencil::is_zero(c_.back())) c_.pop_back();
    }

    K sample_;
    std::vector<K> c_;
};

/// Monic gcd over a field by the Euclidean algorithm.
template <class K>
UniPoly<K> gcd_poly(UniPoly<K> a, UniPoly<K> b) {
    static_assert(is_field_v<K>, "gcd_poly needs a field");
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

/// Extended Euclid over a field: returns (g, s, t) with s*a + t*b = g, g monic
/// (or zero when both inputs are zero).
template <class K>
struct EGcd {
    UniPoly<K> g, s, t;
};

template <class K>
EGcd<K> egcd_poly(const UniPoly<K>& a, const UniPoly<K>& b) {
    static_assert(is_field_v<K>, "egcd_poly needs a field");
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> s0 = UniPoly<K>::constant(one_like(a.sample())), s1(a.sample());
    UniPoly<K> t0(a.sample()), t1 = UniPoly<K>::constant(one_like(a.sample()));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        UniPoly<K> s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        UniPoly<K> t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K l = field_inv(r0.lead());
    return {r0.scale(l), s0.scale(l), t0.scale(l)};
}

/// Pseudo-division: lead(b)^(deg a - deg b + 1) * a = q*b + r over any domain.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> pseudo_divrem(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: pseudo-division by zero");
    UniPoly<K> q(a.sample()), r = a;
    const K lb = b.lead();
    long steps = a.degree() - b.degree() + 1;
    if (steps < 0) steps = 0;
    long done = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - b.degree());
        K lr = r.lead();
        q = q.scale(lb) + UniPoly<K>::monomial(lr, shift);
        r = r.scale(lb) - b.shifted(shift).scale(lr);
        ++done;
    }
    // pad so the pseudo-quotient identity uses the full exponent
    for (; done < steps; ++done) q = q.scale(lb), r = r.scale(lb);
    return {q, r};
}

/// Exact quotient a/b over a domain; throws if the division is not exact.
template <class K>
UniPoly<K> exact_div_poly(const UniPoly<K>& a, const UniPoly<K>& b);

template <class K>
UniPoly<K> exact_div_poly(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
    if (a.is_zero()) return a;
    if (a.degree() < b.degree()) throw std::domain_error("UniPoly: inexact division");
    // long division where every leading-coefficient division must be exact
    UniPoly<K> q(a.sample()), r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - b.degree());
        K factor = exact_div_coeff(r.lead(), b.lead());
        q = q + UniPoly<K>::monomial(factor, shift);
        r = r - b.shifted(shift).scale(factor);
    }
    if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
    return q;
}

inline BigInt exact_div_coeff(const BigInt& a, const BigInt& b) { return exact_div(a, b); }
inline Rational exact_div_coeff(const Rational& a, const Rational& b) { return a / b; }
inline Fp exact_div_coeff(const Fp& a, const Fp& b) { return a / b; }
inline GFElem exact_div_coeff(const GFElem& a, const GFElem& b) { return a / b; }

// --- ring_traits so UniPoly can itself be a coefficient (e.g. Z[Z1]) ---
template <class K>
struct ring_traits<UniPoly<K>> {
    static constexpr bool is_field = false;
    static UniPoly<K> zero(const UniPoly<K>& s) { return UniPoly<K>(s.sample()); }
    static UniPoly<K> one(const UniPoly<K>& s) { return UniPoly<K>::constant(one_like(s.sample())); }
    static UniPoly<K> from_int(const UniPoly<K>& s, long v) {
        return UniPoly<K>::constant(int_like(s.sample(), v));
    }
    static bool is_zero(const UniPoly<K>& x) { return x.is_zero(); }
    static bool is_one(const UniPoly<K>& x) { return x.degree() == 0 && pencil::is_one(x.coeff(0)); }
    static BigInt characteristic(const UniPoly<K>& x) { return characteristic_of(x.sample()); }
};

}  // namespace pencil

#endif
