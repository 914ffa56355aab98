#include "pencil/oracle.hpp"

#include <stdexcept>

#include "pencil/mgcd.hpp"

namespace pencil::oracle {

namespace {

long grid_degree(const std::vector<std::vector<std::uint32_t>>& c) {
    long d = -1;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c[i].size(); ++j)
            if (c[i][j] != 0) d = std::max(d, static_cast<long>(i + j));
    return d;
}

// lex X > Y leading monomial; (-1,-1) for zero
std::pair<long, long> lead_monomial(const DensePoly& p) {
    for (size_t i = p.coeff.size(); i-- > 0;)
        for (size_t j = p.coeff[i].size(); j-- > 0;)
            if (p.coeff[i][j] != 0) return {static_cast<long>(i), static_cast<long>(j)};
    return {-1, -1};
}

DensePoly make_grid(const GFRing& field, size_t dx, size_t dy) {
    DensePoly p;
    p.field = field;
    p.coeff.assign(dx + 1, std::vector<std::uint32_t>(dy + 1, 0));
    return p;
}

// num -= c * X^sx Y^sy * div  (in place)
void submul(DensePoly& num, std::uint32_t c, size_t sx, size_t sy, const DensePoly& div) {
    const auto& F = *num.field;
    for (size_t i = 0; i < div.coeff.size(); ++i)
        for (size_t j = 0; j < div.coeff[i].size(); ++j) {
            if (div.coeff[i][j] == 0) continue;
            auto& slot = num.coeff[i + sx][j + sy];
            slot = F.sub(slot, F.mul(c, div.coeff[i][j]));
        }
}

// Evaluate P(l(Y), Y) where l(Y) = a1*Y + a0; zero result means (X - l(Y)) | P
// after the monic-in-X normalization used by the candidate sweep.
bool divisible_by_x_minus(const DensePoly& P, std::uint32_t a1, std::uint32_t a0) {
    const auto& F = *P.field;
    const size_t dx = P.coeff.size() - 1;
    const size_t dy = P.coeff.empty() ? 0 : P.coeff[0].size() - 1;
    const size_t dmax = dx + dy;
    // powers of (a1 Y + a0) up to dx, as coefficient rows in Y
    std::vector<std::vector<std::uint32_t>> pw(dx + 1);
    pw[0] = {1};
    for (size_t i = 1; i <= dx; ++i) {
        pw[i].assign(i + 1, 0);
        for (size_t j = 0; j < pw[i - 1].size(); ++j) {
            pw[i][j] = F.add(pw[i][j], F.mul(pw[i - 1][j], a0));
            pw[i][j + 1] = F.add(pw[i][j + 1], F.mul(pw[i - 1][j], a1));
        }
    }
    std::vector<std::uint32_t> acc(dmax + 1, 0);
    for (size_t i = 0; i <= dx; ++i)
        for (size_t j = 0; j <= dy; ++j) {
            if (P.coeff[i][j] == 0) continue;
            for (size_t t = 0; t < pw[i].size(); ++t)
                acc[j + t] = F.add(acc[j + t], F.mul(P.coeff[i][j], pw[i][t]));
        }
    for (auto v : acc)
        if (v != 0) return false;
    return true;
}

bool divisible_by_y_minus(const DensePoly& P, std::uint32_t c0) {
    // (Y - c0) | P  iff  P(X, c0) = 0
    const auto& F = *P.field;
    for (size_t i = 0; i < P.coeff.size(); ++i) {
        std::uint32_t acc = 0;
        for (size_t j = P.coeff[i].size(); j-- > 0;) acc = F.add(F.mul(acc, c0), P.coeff[i][j]);
        if (acc != 0) return false;
    }
    return true;
}

DensePoly lift_to(const DensePoly& P, const GFRing& ext) {
    // base-field codes are the low digit in any extension of the same p
    DensePoly q = P;
    q.field = ext;
    return q;
}

// monomials of total degree <= e in lex-descending order (X > Y)
std::vector<std::pair<unsigned, unsigned>> monomials_upto(unsigned e) {
    std::vector<std::pair<unsigned, unsigned>> m;
    for (unsigned i = e + 1; i-- > 0;)
        for (unsigned j = e - i + 1; j-- > 0;) m.emplace_back(i, j);
    return m;
}

}  // namespace

long DensePoly::total_degree() const { return grid_degree(coeff); }

std::string FactorWitness::str() const {
    if (!found) return "none";
    std::string s = "factor over F_" + std::to_string(p) + "^" + std::to_string(extension_degree) + ":";
    for (size_t i = 0; i < factor.coeff.size(); ++i)
        for (size_t j = 0; j < factor.coeff[i].size(); ++j)
            if (factor.coeff[i][j] != 0)
                s += " +" + std::to_string(factor.coeff[i][j]) + "*X^" + std::to_string(i) + "Y^" +
                     std::to_string(j);
    return s;
}

DensePoly from_multipoly(const MultiPoly<GFElem>& f) {
    if (f.nvars() != 2) throw std::invalid_argument("oracle: polynomial must be bivariate");
    const GFRing ring = f.sample().ring();
    long dx = std::max(0L, f.degree_in(0)), dy = std::max(0L, f.degree_in(1));
    DensePoly p = make_grid(ring, static_cast<size_t>(dx), static_cast<size_t>(dy));
    for (const auto& [e, c] : f.terms()) p.coeff[e[0]][e[1]] = c.code();
    return p;
}

MultiPoly<GFElem> to_multipoly(const DensePoly& f, const std::vector<std::string>& vars) {
    MultiPoly<GFElem> p(vars, GFElem(f.field, 0));
    for (size_t i = 0; i < f.coeff.size(); ++i)
        for (size_t j = 0; j < f.coeff[i].size(); ++j)
            if (f.coeff[i][j] != 0) p.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, GFElem(f.field, f.coeff[i][j]));
    return p;
}

std::optional<DensePoly> dense_divide(const DensePoly& num, const DensePoly& div) {
    const auto [li, lj] = lead_monomial(div);
    if (li < 0) throw std::domain_error("oracle: division by zero polynomial");
    const auto& F = *num.field;
    const std::uint32_t linv = F.inv(div.coeff[li][lj]);
    DensePoly r = num;
    DensePoly q = make_grid(num.field, num.coeff.size() - 1, num.coeff[0].size() - 1);
    for (;;) {
        const auto [ri, rj] = lead_monomial(r);
        if (ri < 0) return q;
        if (ri - li < 0 || rj - lj < 0) return std::nullopt;
        const size_t sx = static_cast<size_t>(ri - li), sy = static_cast<size_t>(rj - lj);
        const std::uint32_t c = F.mul(r.coeff[ri][rj], linv);
        if (sx >= q.coeff.size() || sy >= q.coeff[0].size()) return std::nullopt;
        q.coeff[sx][sy] = F.add(q.coeff[sx][sy], c);
        submul(r, c, sx, sy, div);
    }
}

FactorWitness brute_force_absolutely_reducible(const DensePoly& P, unsigned K_max) {
    const std::uint32_t p = P.field->p();
    if (P.field->k() != 1) throw std::invalid_argument("oracle: input must be over a prime field");
    const long dP = P.total_degree();
    if (p > 13 || dP > 4 || K_max > static_cast<unsigned>(dP < 0 ? 0 : dP))
        throw std::invalid_argument("oracle: parameter ranges exceeded");
    if (dP < 1) throw std::invalid_argument("oracle: constant polynomial");

    FactorWitness w;
    w.p = p;
    for (unsigned k = 1; k <= K_max; ++k) {
        GFRing ext = make_gf(p, k);
        const std::uint32_t q = ext->q();
        DensePoly Pk = lift_to(P, ext);
        for (unsigned e = 1; 2 * e <= static_cast<unsigned>(dP); ++e) {
            if (e == 1) {
                // monic-in-lex linear candidates: X + a1 Y + a0, then Y + a0
                for (std::uint32_t a1 = 0; a1 < q; ++a1)
                    for (std::uint32_t a0 = 0; a0 < q; ++a0)
                        if (divisible_by_x_minus(Pk, ext->neg(a1), ext->neg(a0))) {
                            w.found = true;
                            w.extension_degree = k;
                            w.factor = make_grid(ext, 1, 1);
                            w.factor.coeff[1][0] = 1;
                            w.factor.coeff[0][1] = a1;
                            w.factor.coeff[0][0] = a0;
                            return w;
                        }
                for (std::uint32_t a0 = 0; a0 < q; ++a0)
                    if (divisible_by_y_minus(Pk, ext->neg(a0))) {
                        w.found = true;
                        w.extension_degree = k;
                        w.factor = make_grid(ext, 0, 1);
                        w.factor.coeff[0][1] = 1;
                        w.factor.coeff[0][0] = a0;
                        return w;
                    }
            } else {
                // general candidates: choose the lex-leading monomial, free
                // coefficients below it, total degree exactly e
                auto mons = monomials_upto(e);
                for (size_t lead = 0; lead < mons.size(); ++lead) {
                    const auto [lx, ly] = mons[lead];
                    if (lx + ly == 0) continue;
                    const size_t nfree = mons.size() - lead - 1;
                    std::uint64_t count = 1;
                    for (size_t t = 0; t < nfree; ++t) {
                        if (count > (1ULL << 40) / q)
                            throw std::invalid_argument("oracle: parameter ranges exceeded");
                        count *= q;
                    }
                    for (std::uint64_t code = 0; code < count; ++code) {
                        DensePoly cand = make_grid(ext, e, e);
                        cand.coeff[lx][ly] = 1;
                        std::uint64_t c = code;
                        for (size_t t = lead + 1; t < mons.size(); ++t) {
                            cand.coeff[mons[t].first][mons[t].second] =
                                static_cast<std::uint32_t>(c % q);
                            c /= q;
                        }
                        if (cand.total_degree() != static_cast<long>(e)) continue;
                        if (dense_divide(Pk, cand)) {
                            w.found = true;
                            w.extension_degree = k;
                            w.factor = cand;
                            return w;
                        }
                    }
                }
            }
        }
    }
    w.found = false;
    w.extension_degree = K_max;
    return w;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> oracle_spectrum(const DensePoly& f,
                                                                     const DensePoly& g) {
    if (f.field->p() != g.field->p() || f.field->k() != 1 || g.field->k() != 1)
        throw std::invalid_argument("oracle_spectrum: polynomials must share a prime field");
    const std::uint32_t p = f.field->p();
    const long d = std::max(f.total_degree(), g.total_degree());
    if (p > 13 || d > 3) throw std::invalid_argument("oracle_spectrum: parameter ranges exceeded");
    if (d < 1) throw std::invalid_argument("oracle_spectrum: constant pencil");
    {
        auto fm = to_multipoly(f, {"X", "Y"});
        auto gm = to_multipoly(g, {"X", "Y"});
        if (!is_one(multipoly_gcd(fm, gm)))
            throw std::invalid_argument("oracle_spectrum: f and g are not coprime");
    }
    const auto& F = *f.field;
    const size_t dx = std::max(f.coeff.size(), g.coeff.size()) - 1;
    const size_t dy = std::max(f.coeff[0].size(), g.coeff[0].size()) - 1;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sigma;
    auto member_at = [&](std::uint32_t lambda, std::uint32_t mu) {
        DensePoly m = make_grid(f.field, dx, dy);
        for (size_t i = 0; i <= dx; ++i)
            for (size_t j = 0; j <= dy; ++j) {
                std::uint32_t fv = (i < f.coeff.size() && j < f.coeff[i].size()) ? f.coeff[i][j] : 0;
                std::uint32_t gv = (i < g.coeff.size() && j < g.coeff[i].size()) ? g.coeff[i][j] : 0;
                m.coeff[i][j] = F.sub(F.mul(mu, fv), F.mul(lambda, gv));
            }
        return m;
    };
    auto in_sigma = [&](std::uint32_t lambda, std::uint32_t mu) {
        DensePoly m = member_at(lambda, mu);
        if (m.total_degree() < d) return true;  // degree drop (or the zero member)
        auto wit = brute_force_absolutely_reducible(m, static_cast<unsigned>(d));
        return wit.found;
    };
    for (std::uint32_t lambda = 0; lambda < p; ++lambda)
        if (in_sigma(lambda, 1)) sigma.emplace_back(lambda, 1);
    if (in_sigma(1, 0)) sigma.emplace_back(1, 0);
    return sigma;
}

}  // namespace pencil::oracle
