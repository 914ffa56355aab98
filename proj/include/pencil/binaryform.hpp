// Homogeneous bivariate forms in (U, V) over a domain, projective points, and
// the form-level operations the spectrum machinery is built on: GCDs, root
// enumeration over the base field, squarefree parts, resultants.
//
// A form of degree D is stored as coefficients c_0..c_D of sum c_i U^i V^(D-i).
// The zero form is canonical with degree tag -1.
#ifndef PENCIL_BINARYFORM_HPP
#define PENCIL_BINARYFORM_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

#include "pencil/matrix.hpp"
#include "pencil/prime.hpp"
#include "pencil/ring.hpp"
#include "pencil/unipoly.hpp"

namespace pencil {

template <class K>
class BinaryForm {
  public:
    /// The zero form (degree tag -1).
    explicit BinaryForm(const K& sample) : sample_(zero_like(sample)) {}
    /// Form of degree coeffs.size()-1; collapses to the zero form if all
    /// coefficients vanish.
    BinaryForm(const K& sample, std::vector<K> coeffs) : sample_(zero_like(sample)), c_(std::move(coeffs)) {
        bool all_zero = true;
        for (const auto& x : c_)
            if (!pencil::is_zero(x)) all_zero = false;
        if (all_zero) c_.clear();
    }
    static BinaryForm monomial(const K& coeff, long upow, long vpow) {
        std::vector<K> c(static_cast<size_t>(upow + vpow) + 1, zero_like(coeff));
        c[static_cast<size_t>(upow)] = coeff;
        return BinaryForm(coeff, std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const K& sample() const { return sample_; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(size_t upow) const { return upow < c_.size() ? c_[upow] : zero_like(sample_); }

    /// Leading coefficient w.r.t. lex with U > V (the highest nonzero U-power).
    K lead() const {
        for (size_t i = c_.size(); i-- > 0;)
            if (!pencil::is_zero(c_[i])) return c_[i];
        throw std::domain_error("BinaryForm: leading coefficient of zero form");
    }

    K eval(const K& lambda, const K& mu) const {
        // Horner in two sweeps: sum c_i L^i M^(D-i)
        K acc = zero_like(sample_);
        if (is_zero()) return acc;
        K lp = one_like(sample_);
        std::vector<K> lpow;
        lpow.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            lpow.push_back(lp);
            lp = lp * lambda;
        }
        K mp = one_like(sample_);
        for (size_t i = c_.size(); i-- > 0;) {
            acc = acc + c_[i] * lpow[i] * mp;
            mp = mp * mu;
        }
        return acc;
    }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero() || b.is_zero()) return BinaryForm(a.sample_);
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, zero_like(a.sample_));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return BinaryForm(a.sample_, std::move(c));
    }
    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree() != b.degree()) throw std::invalid_argument("BinaryForm: adding different degrees");
        std::vector<K> c(a.c_);
        for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + b.c_[i];
        return BinaryForm(a.sample_, std::move(c));
    }
    friend BinaryForm operator-(const BinaryForm& a) {
        std::vector<K> c(a.c_);
        for (auto& x : c) x = -x;
        return BinaryForm(a.sample_, std::move(c));
    }
    BinaryForm scale(const K& s) const {
        std::vector<K> c(c_);
        for (auto& x : c) x = x * s;
        return BinaryForm(sample_, std::move(c));
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    /// Dehomogenization p(t) = F(t, 1).
    UniPoly<K> dehomogenize() const { return UniPoly<K>(sample_, c_); }
    /// Form of degree deg(p) + vshift from a univariate polynomial.
    static BinaryForm from_unipoly(const UniPoly<K>& p, long vshift = 0) {
        if (p.is_zero()) return BinaryForm(p.sample());
        std::vector<K> c = p.coeffs();
        c.resize(c.size() + static_cast<size_t>(vshift), zero_like(p.sample()));
        return BinaryForm(p.sample(), std::move(c));
    }

    /// V-adic valuation: largest m with V^m dividing the form.
    long v_valuation() const {
        if (is_zero()) throw std::domain_error("BinaryForm: valuation of zero form");
        return degree() - dehomogenize().degree();
    }

    template <class F>
    auto map(F&& f) const -> BinaryForm<decltype(f(std::declval<const K&>()))> {
        using K2 = decltype(f(std::declval<const K&>()));
        std::vector<K2> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(f(x));
        BinaryForm<K2> r(f(sample_), std::move(c));
        return r;
    }

    std::string str(const std::string& u = "U", const std::string& v = "V") const {
        if (is_zero()) return "0";
        std::string out;
        long D = degree();
        for (size_t i = c_.size(); i-- > 0;) {
            if (pencil::is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            out += coeff_str(c_[i]);
            if (i > 0) out += "*" + u + (i > 1 ? "^" + std::to_string(i) : "");
            size_t vp = static_cast<size_t>(D) - i;
            if (vp > 0) out += "*" + v + (vp > 1 ? "^" + std::to_string(vp) : "");
        }
        return out;
    }

  private:
    template <class Q>
    static std::string coeff_str(const Q& c) {
        return c.str();
    }

    K sample_;
    std::vector<K> c_;
};

/// A point of P^1: (lambda : mu) with the unique normalization mu = 1, or (1 : 0).
template <class K>
struct ProjPoint {
    K lambda, mu;

    static ProjPoint make(const K& l, const K& m) {
        if (pencil::is_zero(m)) {
            if (pencil::is_zero(l)) throw std::invalid_argument("ProjPoint: (0 : 0)");
            return {one_like(l), zero_like(l)};
        }
        return {l * field_inv(m), one_like(m)};
    }
    bool is_infinity() const { return pencil::is_zero(mu); }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.lambda == b.lambda && a.mu == b.mu;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    std::string str() const { return "(" + coords_str(lambda) + ":" + coords_str(mu) + ")"; }

  private:
    template <class Q>
    static std::string coords_str(const Q& c) {
        return c.str();
    }
};

/// Monic (lex, U > V) gcd of a family of forms over a field; zero forms are
/// ignored, and an all-zero family yields the flagged zero form.
template <class K>
BinaryForm<K> form_gcd(const std::vector<BinaryForm<K>>& forms) {
    static_assert(is_field_v<K>, "form_gcd needs field coefficients");
    if (forms.empty()) throw std::invalid_argument("form_gcd: empty list");
    bool have = false;
    UniPoly<K> d(forms[0].sample());
    long vval = 0;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        long fv = f.v_valuation();
        if (!have) {
            d = f.dehomogenize().monic();
            vval = fv;
            have = true;
        } else {
            d = gcd_poly(d, f.dehomogenize());
            vval = std::min(vval, fv);
        }
        if (d.degree() == 0 && vval == 0) break;  // gcd already trivial
    }
    if (!have) return BinaryForm<K>(forms[0].sample());  // identically-zero family
    return BinaryForm<K>::from_unipoly(d, vval);
}

template <class K>
BinaryForm<K> form_gcd(const BinaryForm<K>& a, const BinaryForm<K>& b) {
    return form_gcd(std::vector<BinaryForm<K>>{a, b});
}

/// Exact quotient of forms; throws when the division is inexact.
template <class K>
BinaryForm<K> form_exact_div(const BinaryForm<K>& a, const BinaryForm<K>& b) {
    if (b.is_zero()) throw std::domain_error("BinaryForm: division by zero form");
    if (a.is_zero()) return a;
    long vq = a.v_valuation() - b.v_valuation();
    if (vq < 0) throw std::domain_error("BinaryForm: inexact division");
    UniPoly<K> q = exact_div_poly(a.dehomogenize(), b.dehomogenize());
    return BinaryForm<K>::from_unipoly(q, vq);
}

/// True when b divides a exactly (zero form divides only the zero form).
template <class K>
bool form_divides(const BinaryForm<K>& b, const BinaryForm<K>& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    if (a.v_valuation() < b.v_valuation()) return false;
    auto [q, r] = divrem(a.dehomogenize(), b.dehomogenize());
    (void)q;
    return r.is_zero();
}

/// Squarefree part over a field, robust in small characteristic (p-th power
/// parts are peeled via Frobenius on the exponents; coefficients must lie in
/// the prime field or satisfy c^(1/p) = c, which holds for F_p and Q).
template <class K>
UniPoly<K> squarefree_part_unipoly(const UniPoly<K>& p) {
    static_assert(is_field_v<K>, "squarefree part needs a field");
    if (p.is_zero() || p.degree() == 0) return p.is_zero() ? p : p.monic();
    UniPoly<K> f = p.monic();
    UniPoly<K> fp = f.derivative();
    if (fp.is_zero()) {
        // f = g(t^q) with q = char; peel one Frobenius layer: f(t) = h(t)^... -> recurse on exponents/q
        BigInt ch = characteristic_of(p.sample());
        if (ch.is_zero()) throw std::logic_error("squarefree: zero derivative in characteristic 0");
        long q = ch.to_long();
        std::vector<K> c;
        for (long i = 0; i <= f.degree(); i += q) c.push_back(f.coeff(static_cast<size_t>(i)));
        return squarefree_part_unipoly(UniPoly<K>(p.sample(), std::move(c)));
    }
    UniPoly<K> g = gcd_poly(f, fp);
    UniPoly<K> core = divrem(f, g).first;
    if (g.degree() == 0) return core.monic();
    // residual p-th-power content may survive inside g
    UniPoly<K> rest = g;
    // strip from rest every factor already present in core
    for (;;) {
        UniPoly<K> h = gcd_poly(rest, core);
        if (h.degree() == 0) break;
        rest = divrem(rest, h).first;
    }
    if (rest.degree() == 0) return core.monic();
    return (core * squarefree_part_unipoly(rest)).monic();
}

/// Squarefree part of a form: same projective roots, all with multiplicity one.
template <class K>
BinaryForm<K> squarefree_form(const BinaryForm<K>& f) {
    if (f.is_zero()) return f;
    long vv = f.v_valuation();
    UniPoly<K> sf = squarefree_part_unipoly(f.dehomogenize());
    return BinaryForm<K>::from_unipoly(sf, vv > 0 ? 1 : 0);
}

/// Resultant of two forms at their stored degrees (Sylvester determinant).
template <class K>
K form_resultant(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("form_resultant: zero form");
    const size_t df = static_cast<size_t>(f.degree());
    const size_t dg = static_cast<size_t>(g.degree());
    if (df == 0 && dg == 0) return one_like(f.sample());
    Matrix<K> s(df + dg, df + dg, zero_like(f.sample()));
    // rows of f-coefficients (descending powers), then rows of g
    for (size_t r = 0; r < dg; ++r)
        for (size_t i = 0; i <= df; ++i) s.at(r, r + i) = f.coeff(df - i);
    for (size_t r = 0; r < df; ++r)
        for (size_t i = 0; i <= dg; ++i) s.at(dg + r, r + i) = g.coeff(dg - i);
    if constexpr (is_field_v<K>) {
        return det_gauss(std::move(s));
    } else {
        return det_bareiss(std::move(s), [](const K& a, const K& b) { return exact_div_coeff(a, b); });
    }
}

// ---------------------------------------------------------------------------
// root enumeration over the base field
// ---------------------------------------------------------------------------

template <class K>
struct ProjRoots {
    std::vector<ProjPoint<K>> roots;  // distinct base-field roots
    long cofactor_degree = 0;         // degree left after removing all of them
};

/// Distinct roots of p in the base field, with multiplicities.
std::vector<std::pair<Rational, long>> unipoly_roots(const UniPoly<Rational>& p, std::uint64_t seed = 0);
std::vector<std::pair<Fp, long>> unipoly_roots(const UniPoly<Fp>& p, std::uint64_t seed = 0);
std::vector<std::pair<GFElem, long>> unipoly_roots(const UniPoly<GFElem>& p, std::uint64_t seed = 0);

/// All roots of a nonzero form in P^1 over the base field, plus the degree of
/// the rootless cofactor (how much of the root locus lives in extensions).
/// Throws on the zero form.
template <class K>
ProjRoots<K> proj_roots(const BinaryForm<K>& f, std::uint64_t seed = 0) {
    if (f.is_zero()) throw std::domain_error("spectrum is infinite; enumerate not applicable");
    ProjRoots<K> out;
    long vv = f.v_valuation();
    if (vv > 0) out.roots.push_back(ProjPoint<K>{one_like(f.sample()), zero_like(f.sample())});
    UniPoly<K> p = f.dehomogenize();
    long removed = 0;
    for (const auto& [r, m] : unipoly_roots(p, seed)) {
        out.roots.push_back(ProjPoint<K>{r, one_like(f.sample())});
        removed += m;
    }
    out.cofactor_degree = p.degree() - removed;
    return out;
}

}  // namespace pencil

#endif
