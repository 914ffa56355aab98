#include <utility>

#include "pencil/binaryform.hpp"
#include "pencil/rng.hpp"

namespace pencil {

namespace {

// Multiplicity of the root x in p, removing it from p in place.
template <class K>
long strip_root(UniPoly<K>& p, const K& x) {
    long m = 0;
    UniPoly<K> lin(p.sample(), {-x, one_like(x)});
    for (;;) {
        if (p.degree() < 1) return m;
        auto [q, r] = divrem(p, lin);
        if (!r.is_zero()) return m;
        p = q;
        ++m;
    }
}

UniPoly<Fp> polymod_mul(const UniPoly<Fp>& a, const UniPoly<Fp>& b, const UniPoly<Fp>& mod) {
    return divrem(a * b, mod).second;
}

UniPoly<Fp> polymod_pow(UniPoly<Fp> base, const BigInt& e, const UniPoly<Fp>& mod) {
    UniPoly<Fp> acc = UniPoly<Fp>::constant(one_like(mod.sample()));
    BigInt k = e;
    base = divrem(base, mod).second;
    while (k > 0) {
        if (!k.is_even()) acc = polymod_mul(acc, base, mod);
        base = polymod_mul(base, base, mod);
        k = fdiv_q(k, 2);
    }
    return acc;
}

// Split a monic squarefree product of linear factors into roots (Cantor-Zassenhaus
// for degree-one factors, odd q).
void split_linear(const UniPoly<Fp>& g, Rng& rng, const BigInt& q, std::vector<Fp>& out) {
    if (g.degree() <= 0) return;
    const Fp zero = zero_like(g.sample());
    if (g.degree() == 1) {
        out.push_back(-(g.coeff(0) / g.coeff(1)));
        return;
    }
    const BigInt half = fdiv_q(q - 1, 2);
    for (;;) {
        Fp a(zero.ring(), rng.below_big(q));
        UniPoly<Fp> shifted(g.sample(), {a, one_like(zero)});  // t + a
        UniPoly<Fp> w = polymod_pow(shifted, half, g) - UniPoly<Fp>::constant(one_like(zero));
        UniPoly<Fp> h = gcd_poly(w, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear(h, rng, q, out);
            split_linear(divrem(g, h).first, rng, q, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Rational, long>> unipoly_roots(const UniPoly<Rational>& p, std::uint64_t) {
    std::vector<std::pair<Rational, long>> out;
    if (p.degree() < 1) return out;
    // clear to a primitive integer polynomial
    BigInt l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.den());
    std::vector<BigInt> zc;
    zc.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) zc.push_back((c * Rational(l)).num());
    size_t val = 0;
    while (val < zc.size() && zc[val].is_zero()) ++val;
    UniPoly<Rational> work = p;
    if (val > 0) out.emplace_back(Rational(0), strip_root(work, Rational(0)));
    const BigInt tail = zc[val];
    const BigInt lead = zc.back();
    for (const BigInt& r : divisors_of(tail)) {
        for (const BigInt& s : divisors_of(lead)) {
            if (!gcd(r, s).is_one()) continue;
            for (int sign = 0; sign < 2; ++sign) {
                Rational x = sign ? Rational(-r, s) : Rational(r, s);
                if (!p.eval(x).is_zero()) continue;
                long m = strip_root(work, x);
                if (m > 0) out.emplace_back(x, m);
            }
        }
    }
    return out;
}

std::vector<std::pair<Fp, long>> unipoly_roots(const UniPoly<Fp>& p, std::uint64_t seed) {
    std::vector<std::pair<Fp, long>> out;
    if (p.degree() < 1) return out;
    const Fp zero = zero_like(p.coeffs()[0]);
    const BigInt& q = zero.modulus();
    if (q <= 10000) {
        UniPoly<Fp> work = p;
        for (BigInt x = 0; x < q; x += 1) {
            Fp xv(zero.ring(), x);
            if (!p.eval(xv).is_zero()) continue;
            out.emplace_back(xv, strip_root(work, xv));
        }
        return out;
    }
    // big prime: roots via gcd(p, t^q - t) and equal-degree splitting
    UniPoly<Fp> f = p.monic();
    UniPoly<Fp> t = UniPoly<Fp>::monomial(one_like(zero), 1);
    UniPoly<Fp> tq = polymod_pow(t, q, f);
    UniPoly<Fp> g = gcd_poly(tq - t, f);
    if (g.degree() < 1) return out;
    Rng rng(seed ^ 0x9d5f3c2bULL);
    std::vector<Fp> roots;
    if (q.is_even()) {  // q = 2 would have been handled exhaustively
        throw std::logic_error("unipoly_roots: unexpected even modulus");
    }
    split_linear(g, rng, q, roots);
    UniPoly<Fp> work = p;
    for (const auto& r : roots) out.emplace_back(r, strip_root(work, r));
    return out;
}

std::vector<std::pair<GFElem, long>> unipoly_roots(const UniPoly<GFElem>& p, std::uint64_t) {
    std::vector<std::pair<GFElem, long>> out;
    if (p.degree() < 1) return out;
    const GFElem zero = zero_like(p.coeffs()[0]);
    UniPoly<GFElem> work = p;
    for (std::uint32_t code = 0; code < zero.ring()->q(); ++code) {
        GFElem xv(zero.ring(), code);
        if (!p.eval(xv).is_zero()) continue;
        out.emplace_back(xv, strip_root(work, xv));
    }
    return out;
}

}  // namespace pencil
