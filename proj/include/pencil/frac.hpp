// Fraction field of a polynomial GCD domain, kept in lowest terms with a
// canonically normalized denominator.
#ifndef PENCIL_FRAC_HPP
#define PENCIL_FRAC_HPP

#include <stdexcept>
#include <string>

#include "pencil/ring.hpp"
#include "pencil/unipoly.hpp"

namespace pencil {

/// Customization point: gcd, exact division and unit normalization for the
/// polynomial ring P underlying a fraction field.
template <class P>
struct frac_ops;

template <class K>
struct frac_ops<UniPoly<K>> {
    static UniPoly<K> gcd(const UniPoly<K>& a, const UniPoly<K>& b) { return gcd_poly(a, b); }
    static UniPoly<K> div(const UniPoly<K>& a, const UniPoly<K>& b) { return divrem(a, b).first; }
    /// Scalar unit u with den/u canonical (monic denominator).
    static K unit(const UniPoly<K>& den) { return den.lead(); }
    static UniPoly<K> scale_inv(const UniPoly<K>& p, const K& u) { return p.scale(field_inv(u)); }
};

template <class P>
class Frac {
  public:
    explicit Frac(const P& num) : num_(num), den_(one_like(num)) {}
    Frac(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
        if (pencil::is_zero(den_)) throw std::domain_error("Frac: zero denominator");
        reduce();
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }

    bool is_zero() const { return pencil::is_zero(num_); }
    bool is_one() const { return num_ == den_; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) { return Frac(a.num_ * b.num_, a.den_ * b.den_); }
    friend Frac operator-(const Frac& a) {
        Frac r = a;
        r.num_ = -r.num_;
        return r;
    }
    Frac inv() const {
        if (is_zero()) throw std::domain_error("Frac: inverse of zero");
        return Frac(den_, num_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inv(); }

    friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    std::string str() const {
        if (pencil::is_one(den_)) return poly_str(num_);
        return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
    }

  private:
    template <class Q>
    static std::string poly_str(const Q& p) { return p.str(); }

    void reduce() {
        if (pencil::is_zero(num_)) {
            den_ = one_like(den_);
            return;
        }
        P g = frac_ops<P>::gcd(num_, den_);
        if (!pencil::is_one(g) && !pencil::is_zero(g)) {
            num_ = frac_ops<P>::div(num_, g);
            den_ = frac_ops<P>::div(den_, g);
        }
        auto u = frac_ops<P>::unit(den_);
        num_ = frac_ops<P>::scale_inv(num_, u);
        den_ = frac_ops<P>::scale_inv(den_, u);
    }

    P num_, den_;
};

template <class P>
struct ring_traits<Frac<P>> {
    static constexpr bool is_field = true;
    static Frac<P> zero(const Frac<P>& s) { return Frac<P>(zero_like(s.num())); }
    static Frac<P> one(const Frac<P>& s) { return Frac<P>(one_like(s.num())); }
    static Frac<P> from_int(const Frac<P>& s, long v) { return Frac<P>(int_like(s.num(), v)); }
    static bool is_zero(const Frac<P>& x) { return x.is_zero(); }
    static bool is_one(const Frac<P>& x) { return x.is_one(); }
    static Frac<P> inv(const Frac<P>& x) { return x.inv(); }
    static BigInt characteristic(const Frac<P>& x) { return characteristic_of(x.num()); }
};

}  // namespace pencil

#endif
