// Multivariate GCD by recursive content / primitive-part reduction to a
// univariate primitive-remainder sequence in the main variable.
#ifndef PENCIL_MGCD_HPP
#define PENCIL_MGCD_HPP

#include "pencil/frac.hpp"
#include "pencil/multipoly.hpp"

namespace pencil {

template <class K>
MultiPoly<K> gcd_raw(const MultiPoly<K>& f, const MultiPoly<K>& g);

namespace detail {

inline BigInt int_content(const MultiPoly<BigInt>& f) {
    BigInt c = 0;
    for (const auto& [e, v] : f.terms()) c = gcd(c, v);
    return c;
}

template <class K>
MultiPoly<K> content_of(const UniPoly<MultiPoly<K>>& u) {
    MultiPoly<K> c = zero_like(u.sample());
    for (const auto& coeffpoly : u.coeffs()) c = gcd_raw(c, coeffpoly);
    return c;
}

template <class K>
UniPoly<MultiPoly<K>> divide_coeffs(const UniPoly<MultiPoly<K>>& u, const MultiPoly<K>& d) {
    std::vector<MultiPoly<K>> c;
    c.reserve(u.coeffs().size());
    for (const auto& coeffpoly : u.coeffs()) {
        auto q = divide_exact(coeffpoly, d);
        if (!q) throw std::logic_error("mgcd: content division failed");
        c.push_back(*q);
    }
    return UniPoly<MultiPoly<K>>(u.sample(), std::move(c));
}

}  // namespace detail

/// A true gcd up to units (integer content included over Z).
template <class K>
MultiPoly<K> gcd_raw(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.is_constant() || g.is_constant()) {
        if constexpr (std::is_same_v<K, BigInt>) {
            BigInt c = gcd(detail::int_content(f), detail::int_content(g));
            return MultiPoly<K>::constant(f.vars(), c);
        } else {
            return MultiPoly<K>::constant(f.vars(), one_like(f.sample()));
        }
    }
    // main variable: first with positive degree in f or g
    size_t v = 0;
    while (f.degree_in(v) <= 0 && g.degree_in(v) <= 0) ++v;

    auto uf = f.univariate_in(v);
    auto ug = g.univariate_in(v);
    MultiPoly<K> cf = detail::content_of(uf);
    MultiPoly<K> cg = detail::content_of(ug);
    auto a = detail::divide_coeffs(uf, cf);
    auto b = detail::divide_coeffs(ug, cg);
    if (a.degree() < b.degree()) std::swap(a, b);

    // primitive remainder sequence
    while (!b.is_zero()) {
        auto r = pseudo_divrem(a, b).second;
        a = b;
        if (r.is_zero()) {
            b = r;
        } else {
            b = detail::divide_coeffs(r, detail::content_of(r));
        }
    }
    MultiPoly<K> pp = MultiPoly<K>::from_univariate(detail::divide_coeffs(a, detail::content_of(a)), v);
    return gcd_raw(cf, cg) * pp;
}

/// Normalized gcd: monic w.r.t. the lex leading term over a field, primitive
/// with positive leading coefficient over Z.
template <class K>
MultiPoly<K> multipoly_gcd(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    if (f.vars() != g.vars()) throw std::invalid_argument("multipoly_gcd: mixed variable lists");
    MultiPoly<K> d = gcd_raw(f, g);
    if (d.is_zero()) return d;
    if constexpr (std::is_same_v<K, BigInt>) {
        BigInt c = detail::int_content(d);
        if (d.lead_coeff().sign() < 0) c = -c;
        auto q = divide_exact(d, MultiPoly<K>::constant(d.vars(), c));
        return *q;
    } else {
        static_assert(is_field_v<K>, "multipoly_gcd: coefficients must be a field or Z");
        return d.scale(field_inv(d.lead_coeff()));
    }
}

/// Exact quotient of multivariate polynomials, for fraction-free elimination.
template <class K>
MultiPoly<K> exact_div_coeff(const MultiPoly<K>& a, const MultiPoly<K>& b) {
    auto q = divide_exact(a, b);
    if (!q) throw std::domain_error("MultiPoly: inexact division");
    return *q;
}

/// Fraction-field plumbing for K(Z1,...,Zs) realized over MultiPoly<K>.
template <class K>
struct frac_ops<MultiPoly<K>> {
    static MultiPoly<K> gcd(const MultiPoly<K>& a, const MultiPoly<K>& b) { return multipoly_gcd(a, b); }
    static MultiPoly<K> div(const MultiPoly<K>& a, const MultiPoly<K>& b) { return exact_div_coeff(a, b); }
    static K unit(const MultiPoly<K>& den) { return den.lead_coeff(); }
    static MultiPoly<K> scale_inv(const MultiPoly<K>& p, const K& u) { return p.scale(field_inv(u)); }
};

}  // namespace pencil

#endif
