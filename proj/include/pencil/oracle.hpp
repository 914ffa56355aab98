// Brute-force ground truth for small finite fields: exhaustive factor search
// over F_{p^k} certifying absolute (ir)reducibility, and the pointwise
// spectrum it induces. Deliberately independent of the Ruppert/Noether
// machinery — this header must not include noether.hpp or spectrum.hpp.
#ifndef PENCIL_ORACLE_HPP
#define PENCIL_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pencil/gf.hpp"
#include "pencil/multipoly.hpp"

namespace pencil::oracle {

/// Dense bivariate polynomial over F_{p^k}; coeff[i][j] multiplies X^i Y^j.
struct DensePoly {
    GFRing field;
    std::vector<std::vector<std::uint32_t>> coeff;

    long total_degree() const;
    bool is_zero() const { return total_degree() < 0; }
};

struct FactorWitness {
    std::uint32_t p = 0;
    std::uint32_t extension_degree = 0;  // k of the field the factor lives in
    bool found = false;
    DensePoly factor;  // valid when found
    std::string str() const;
};

DensePoly from_multipoly(const MultiPoly<GFElem>& f);
MultiPoly<GFElem> to_multipoly(const DensePoly& f, const std::vector<std::string>& vars);

/// Exhaustively searches nontrivial monic-normalized factors of total degree
/// 1..deg(P)/2 over F_{p^k}, k = 1..K_max, in canonical order, trial-dividing
/// each candidate. Requires p <= 13, deg P <= 4, K_max <= deg P.
FactorWitness brute_force_absolutely_reducible(const DensePoly& P, unsigned K_max);

/// sigma(f, g) over P^1(F_p) by pointwise degree-drop / brute-force checks.
/// Returns the points as (lambda, mu) residue pairs, mu in {0, 1}.
/// Requires p <= 13 and deg <= 3; gcd(f, g) must be 1.
std::vector<std::pair<std::uint32_t, std::uint32_t>> oracle_spectrum(const DensePoly& f,
                                                                     const DensePoly& g);

/// Trial division in F_{p^k}[X,Y]: quotient if divisor divides exactly.
std::optional<DensePoly> dense_divide(const DensePoly& num, const DensePoly& div);

}  // namespace pencil::oracle

#endif
