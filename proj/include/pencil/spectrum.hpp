// The spectrum of a rational function f/g in two variables: the binary form
// whose projective roots are the reducible/degenerate pencil parameters,
// membership tests, exhaustive enumeration over small prime fields, and the
// cardinality bound deg <= d^2 - 1.
#ifndef PENCIL_SPECTRUM_HPP
#define PENCIL_SPECTRUM_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pencil/noether.hpp"

namespace pencil {

template <class K>
struct SpectrumReport {
    BinaryForm<K> spect;  // squarefree form cutting sigma exactly; zero form when infinite
    std::vector<ProjPoint<K>> degree_drop_points;
    bool finite = false;
    std::vector<ProjPoint<K>> roots_in_base_field;
    long rootless_cofactor_degree = 0;  // sigma mass in proper extensions
    long cardinality_upper_bound = 0;   // d^2 - 1
    long d = 0;
    MinorMode mode = MinorMode::exact;
    std::uint64_t seed = 0;
    bool certified = false;  // composite verdicts: certified vs MC-caveat

    explicit SpectrumReport(const K& sample) : spect(sample) {}
};

/// Membership test for a single pencil parameter, independent of the
/// spectrum-form computation: degree drop or absolute reducibility of the
/// member mu f - lambda g.
template <class K>
bool is_in_spectrum(const MultiPoly<K>& f, const MultiPoly<K>& g, const ProjPoint<K>& point) {
    static_assert(is_field_v<K>, "is_in_spectrum needs field coefficients");
    if (f.nvars() != 2 || g.nvars() != 2)
        throw std::invalid_argument("is_in_spectrum: polynomials must be bivariate");
    if (!is_one(multipoly_gcd(f, g))) throw std::invalid_argument("is_in_spectrum: gcd(f, g) != 1");
    const long d = std::max(f.total_degree(), g.total_degree());
    if (d < 2) throw std::invalid_argument("is_in_spectrum: pencil degree must be >= 2");
    MultiPoly<K> member = f.scale(point.mu) - g.scale(point.lambda);
    if (member.total_degree() < d) return true;  // includes the zero member
    return !is_absolutely_irreducible(member, d);
}

namespace detail {

/// Remove the linear factor vanishing at `pt` from a squarefree form, if present.
template <class K>
bool strip_point(BinaryForm<K>& s, const ProjPoint<K>& pt) {
    if (s.is_zero() || !pencil::is_zero(s.eval(pt.lambda, pt.mu))) return false;
    // linear form mu*U - lambda*V has root (lambda : mu)
    BinaryForm<K> lin(s.sample(), {-pt.lambda, pt.mu});
    s = form_exact_div(s, lin);
    return true;
}

template <class K>
BinaryForm<K> point_factor(const K& sample, const ProjPoint<K>& pt) {
    return BinaryForm<K>(sample, {-pt.lambda, pt.mu});
}

}  // namespace detail

/// Compute the spectrum form of the pencil V f - U g. The result is the
/// squarefree binary form whose vanishing locus over the closure equals sigma
/// exactly (multiplicities are not tracked); the zero form signals an infinite
/// spectrum (composite f/g).
template <class K>
SpectrumReport<K> spect_poly(const MultiPoly<K>& f, const MultiPoly<K>& g,
                             MinorMode mode = MinorMode::exact, std::uint64_t seed = 0) {
    static_assert(is_field_v<K>, "spect_poly needs field coefficients");
    if (f.nvars() != 2 || g.nvars() != 2)
        throw std::invalid_argument("spect_poly: polynomials must be bivariate; reduce first");
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("spect_poly: zero polynomial");
    if (!is_one(multipoly_gcd(f, g))) throw std::invalid_argument("spect_poly: gcd(f, g) != 1");

    SpectrumReport<K> rep(f.sample());
    rep.mode = mode;
    rep.seed = seed;

    PencilMatrix<K> pm = build_pencil(f, g);
    rep.d = pm.d;
    rep.cardinality_upper_bound = pm.d * pm.d - 1;
    rep.degree_drop_points = degree_drop_points(pm);

    auto nm = noether_minors(pm, mode, seed);
    if (nm.all_zero) {
        rep.finite = false;
        rep.certified = nm.certified;
        return rep;
    }

    const K one = one_like(pm.sample);
    BinaryForm<K> s = squarefree_form(nm.gcd);

    // Candidate parameters where the framed member loses bidegree without a
    // genuine total-degree drop; everywhere else rank deficiency certifies
    // reducibility. Both are rational and known from the frame.
    std::vector<ProjPoint<K>> special;
    auto add_special = [&](const K& lf, const K& lg) {
        if (pencil::is_zero(lf) && pencil::is_zero(lg)) return;
        ProjPoint<K> pt = ProjPoint<K>::make(lf, lg);
        for (const auto& q : special)
            if (q == pt) return;
        special.push_back(pt);
    };
    add_special(pm.lc1_f, pm.lc1_g);
    add_special(pm.lc2_f, pm.lc2_g);

    std::vector<BinaryForm<K>> kept;
    auto is_degree_drop = [&](const ProjPoint<K>& pt) {
        for (const auto& q : rep.degree_drop_points)
            if (q == pt) return true;
        return false;
    };

    for (const auto& pt : special) {
        if (!detail::strip_point(s, pt)) continue;
        if (is_degree_drop(pt) || is_in_spectrum(f, g, pt)) kept.push_back(detail::point_factor(pm.sample, pt));
    }
    // the point at infinity never survives dehomogenization; test it pointwise
    {
        ProjPoint<K> inf{one, zero_like(pm.sample)};
        if (detail::strip_point(s, inf)) {
            if (is_degree_drop(inf) || pencil_rank_at(pm, inf.lambda, inf.mu) < pm.cols())
                kept.push_back(detail::point_factor(pm.sample, inf));
        }
    }

    // remaining part: rank modulo each component decides membership, and
    // weeds out any overshoot from gcd stabilization
    if (!s.is_zero() && s.degree() > 0) {
        UniPoly<K> psi = s.dehomogenize().monic();
        for (const auto& [factor, deficient] : pencil_rank_mod(pm, psi))
            if (deficient) kept.push_back(BinaryForm<K>::from_unipoly(factor));
    }

    // degree-drop parameters are in sigma by definition; adjoin if missing
    BinaryForm<K> spect = BinaryForm<K>(pm.sample, {one});
    for (const auto& fac : kept) spect = spect * fac;
    for (const auto& pt : rep.degree_drop_points)
        if (!pencil::is_zero(spect.eval(pt.lambda, pt.mu)))
            spect = spect * detail::point_factor(pm.sample, pt);

    spect = spect.scale(field_inv(spect.lead()));
    rep.spect = spect;
    rep.finite = true;
    rep.certified = true;

    if constexpr (std::is_same_v<K, Rational> || std::is_same_v<K, Fp> || std::is_same_v<K, GFElem>) {
        auto roots = proj_roots(rep.spect, seed);
        rep.roots_in_base_field = roots.roots;
        rep.rootless_cofactor_degree = roots.cofactor_degree;
    } else {
        // fields without a root enumerator (e.g. Q(Z)): report the linear
        // factors the refinement itself isolated
        auto push_unique = [&](const ProjPoint<K>& pt) {
            for (const auto& q : rep.roots_in_base_field)
                if (q == pt) return;
            rep.roots_in_base_field.push_back(pt);
        };
        for (const auto& fac : kept)
            if (fac.degree() == 1) push_unique(ProjPoint<K>::make(-fac.coeff(0), fac.coeff(1)));
        for (const auto& pt : rep.degree_drop_points) push_unique(pt);
        rep.rootless_cofactor_degree =
            rep.spect.degree() - static_cast<long>(rep.roots_in_base_field.size());
    }
    if (rep.spect.degree() > rep.cardinality_upper_bound)
        throw std::logic_error("spect_poly: spectrum degree exceeds d^2 - 1 (internal error)");
    return rep;
}

/// Spectrum over F_p with exhaustive cross-validation at every point of
/// P^1(F_p) when p <= 10^4; any disagreement between the form's roots and the
/// pointwise membership tests is a hard error.
template <class K>
SpectrumReport<K> spectrum_over_Fp(const MultiPoly<K>& f, const MultiPoly<K>& g,
                                   MinorMode mode = MinorMode::exact, std::uint64_t seed = 0) {
    BigInt p = characteristic_of(f.sample());
    if (p.is_zero()) throw std::invalid_argument("spectrum_over_Fp: field must have characteristic p");
    SpectrumReport<K> rep = spect_poly(f, g, mode, seed);
    if (p > BigInt(10000)) return rep;

    const long pl = p.to_long();
    std::vector<ProjPoint<K>> exhaustive;
    const K one = one_like(f.sample());
    for (long x = 0; x < pl; ++x) {
        ProjPoint<K> pt{int_like(f.sample(), x), one};
        if (is_in_spectrum(f, g, pt)) exhaustive.push_back(pt);
    }
    {
        ProjPoint<K> inf{one, zero_like(f.sample())};
        if (is_in_spectrum(f, g, inf)) exhaustive.push_back(inf);
    }
    auto form_says = [&](const ProjPoint<K>& pt) {
        return !rep.finite || pencil::is_zero(rep.spect.eval(pt.lambda, pt.mu));
    };
    size_t hits = 0;
    for (long x = 0; x <= pl; ++x) {
        ProjPoint<K> pt = x < pl ? ProjPoint<K>{int_like(f.sample(), x), one}
                                 : ProjPoint<K>{one, zero_like(f.sample())};
        bool member = false;
        for (const auto& q : exhaustive)
            if (q == pt) member = true;
        if (member != form_says(pt))
            throw std::logic_error("spectrum_over_Fp: exhaustive cross-validation disagreement");
        if (member) ++hits;
    }
    (void)hits;
    rep.roots_in_base_field = exhaustive;
    return rep;
}

/// deg(spect) <= d^2 - 1 whenever the spectrum is finite.
template <class K>
bool cardinality_check(const SpectrumReport<K>& rep) {
    if (!rep.finite) throw std::invalid_argument("cardinality_check: infinite spectrum");
    return rep.spect.degree() <= rep.cardinality_upper_bound;
}

}  // namespace pencil

#endif
