// Ruppert's linear system and the Noether machinery of a pencil.
//
// For P(X, Y) of exact bidegree (m, n) over a field K of characteristic 0 or
// p > d(d-1), the map (g, h) -> P g_Y - g P_Y - P h_X + h P_X on the spaces
// deg g <= (m-1, n), deg h <= (m, n-2) has trivial kernel iff P is absolutely
// irreducible (Ruppert; Gao in positive characteristic). Degree drop is caught
// through the same matrix: when deg_Y P < n, (P_X, P_Y) itself lies in the
// solution space.
//
// A pencil V f - U g yields a matrix with entries linear in (U, V); maximal
// minors are binary forms (the reducibility forms of the pencil) and their
// common vanishing locus cuts exactly the reducible/degenerate members.
#ifndef PENCIL_NOETHER_HPP
#define PENCIL_NOETHER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pencil/binaryform.hpp"
#include "pencil/frac.hpp"
#include "pencil/matrix.hpp"
#include "pencil/mgcd.hpp"
#include "pencil/multipoly.hpp"
#include "pencil/rng.hpp"

namespace pencil {

/// Characteristic guard for the Noether criterion at degree d.
template <class K>
void require_noether_char(const K& sample, long d) {
    BigInt p = characteristic_of(sample);
    if (!p.is_zero() && p <= BigInt(d * (d - 1)))
        throw std::domain_error("characteristic too small for Noether criterion");
}

template <class K>
struct RuppertSystem {
    Matrix<K> matrix;  // rows: bidegree < (2m, 2n) target monomials; cols: g-block then h-block
    long m = 0, n = 0;
    size_t g_cols = 0, h_cols = 0;
};

namespace detail {

// graded-lex enumeration (total degree ascending, X-exponent descending)
inline std::vector<std::pair<long, long>> grlex_box(long max_i, long max_j) {
    std::vector<std::pair<long, long>> out;
    for (long t = 0; t <= max_i + max_j; ++t)
        for (long i = std::min(t, max_i); i >= 0 && t - i <= max_j; --i) out.emplace_back(i, t - i);
    return out;
}

template <class K>
std::vector<std::vector<K>> bivariate_grid(const MultiPoly<K>& P, size_t dx, size_t dy) {
    std::vector<std::vector<K>> g(dx + 1, std::vector<K>(dy + 1, zero_like(P.sample())));
    for (const auto& [e, c] : P.terms()) {
        if (e[0] > dx || e[1] > dy) throw std::invalid_argument("ruppert: degree bound exceeded");
        g[e[0]][e[1]] = c;
    }
    return g;
}

}  // namespace detail

/// The Ruppert matrix of a single bivariate P with bidegree bounds (m, n).
template <class K>
RuppertSystem<K> ruppert_system(const MultiPoly<K>& P, long m, long n) {
    if (P.nvars() != 2) throw std::invalid_argument("ruppert_system: P must be bivariate");
    if (m < P.degree_in(0) || n < P.degree_in(1))
        throw std::invalid_argument("ruppert_system: bidegree bounds below actual bidegree");
    require_noether_char(P.sample(), std::max({m, n, 2L}));

    const K zero = zero_like(P.sample());
    auto rows = detail::grlex_box(2 * m - 1, 2 * n - 1);
    auto gmons = detail::grlex_box(m - 1, n);
    auto hmons = n >= 2 ? detail::grlex_box(m, n - 2) : std::vector<std::pair<long, long>>{};
    std::vector<std::vector<long>> row_of(static_cast<size_t>(2 * m), std::vector<long>(static_cast<size_t>(2 * n), -1));
    for (size_t r = 0; r < rows.size(); ++r) row_of[rows[r].first][rows[r].second] = static_cast<long>(r);

    RuppertSystem<K> sys{Matrix<K>(rows.size(), gmons.size() + hmons.size(), zero), m, n,
                         gmons.size(), hmons.size()};

    auto grid = detail::bivariate_grid(P, static_cast<size_t>(m), static_cast<size_t>(n));
    auto put = [&](long a, long b, size_t col, const K& v) {
        if (pencil::is_zero(v)) return;
        long r = row_of[a][b];
        sys.matrix.at(static_cast<size_t>(r), col) = sys.matrix.at(static_cast<size_t>(r), col) + v;
    };

    // g-block: P * d/dY(X^i Y^j) - X^i Y^j * P_Y
    for (size_t cidx = 0; cidx < gmons.size(); ++cidx) {
        auto [i, j] = gmons[cidx];
        for (long a = 0; a <= m; ++a)
            for (long b = 0; b <= n; ++b) {
                const K& c = grid[a][b];
                if (pencil::is_zero(c)) continue;
                // P * j X^(a+i) Y^(b+j-1)
                if (j >= 1) put(a + i, b + j - 1, cidx, c * int_like(c, j));
                // - X^i Y^j * b X^a Y^(b-1)
                if (b >= 1) put(a + i, b + j - 1, cidx, -(c * int_like(c, b)));
            }
    }
    // h-block: -P * d/dX(X^i Y^j) + X^i Y^j * P_X
    for (size_t cidx = 0; cidx < hmons.size(); ++cidx) {
        auto [i, j] = hmons[cidx];
        size_t col = sys.g_cols + cidx;
        for (long a = 0; a <= m; ++a)
            for (long b = 0; b <= n; ++b) {
                const K& c = grid[a][b];
                if (pencil::is_zero(c)) continue;
                if (i >= 1) put(a + i - 1, b + j, col, -(c * int_like(c, i)));
                if (a >= 1) put(a + i - 1, b + j, col, c * int_like(c, a));
            }
    }
    return sys;
}

// ---------------------------------------------------------------------------
// normalizing frame: a linear change of variables making every relevant
// polynomial have exact bidegree (d, d)
// ---------------------------------------------------------------------------

template <class K>
struct Frame {
    // X -> a X + b Y, Y -> c X + d Y; columns (a : c), (b : d) are distinct
    // points of P^1 avoiding the roots of the constraining forms.
    K a, b, c, d;

    Frame(K a_, K b_, K c_, K d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    static Frame identity(const K& sample) {
        return Frame(one_like(sample), zero_like(sample), zero_like(sample), one_like(sample));
    }
};

namespace detail {

/// Enumerate P^1(K) canonically: (1:0), (0:1), (1:1), (2:1), ...
template <class K>
std::pair<K, K> proj_candidate(const K& sample, size_t idx) {
    if (idx == 0) return {one_like(sample), zero_like(sample)};
    return {int_like(sample, static_cast<long>(idx) - 1), one_like(sample)};
}

template <class K>
size_t field_point_budget(const K&) {
    return 1u << 30;  // characteristic-zero fields: unbounded in practice
}
inline size_t field_point_budget(const Fp& s) {
    BigInt p = s.modulus();
    return p > BigInt(1 << 30) ? (1u << 30) : static_cast<size_t>(p.to_long());
}
inline size_t field_point_budget(const GFElem& s) { return s.ring()->q(); }

}  // namespace detail

/// Chooses a frame under which the top forms of f and g do not both vanish at
/// either frame direction; the transformed pencil then has every member of
/// exact bidegree (d, d) except at genuine degree-drop parameters.
template <class K>
Frame<K> choose_frame(const MultiPoly<K>& topf, const MultiPoly<K>& topg) {
    const K sample = zero_like(topf.sample());
    auto bad = [&](const K& x, const K& y) {
        std::vector<K> pt{x, y};
        return pencil::is_zero(topf.eval(pt)) && pencil::is_zero(topg.eval(pt));
    };
    const size_t budget = detail::field_point_budget(sample) + 1;  // |P^1(K)| = q + 1
    std::optional<std::pair<K, K>> first;
    for (size_t idx = 0; idx < budget; ++idx) {
        auto [x, y] = detail::proj_candidate(sample, idx);
        if (bad(x, y)) continue;
        if (!first) {
            first = std::pair<K, K>{x, y};
        } else {
            return Frame<K>{first->first, x, first->second, y};
        }
    }
    throw std::domain_error("choose_frame: no valid frame in the base field (field too small)");
}

/// Apply the frame substitution to a bivariate polynomial.
template <class K>
MultiPoly<K> apply_frame(const MultiPoly<K>& P, const Frame<K>& fr) {
    std::vector<std::vector<K>> A{{fr.a, fr.b}, {fr.c, fr.d}};
    std::vector<K> b0{zero_like(P.sample()), zero_like(P.sample())};
    return linear_change(P, A, b0, P.vars());
}

// ---------------------------------------------------------------------------
// the pencil matrix V*Mf - U*Mg
// ---------------------------------------------------------------------------

enum class DegreeDrop { none, at_mu_zero, at_lambda_zero, proportional };

template <class K>
struct PencilMatrix {
    Matrix<K> Mf, Mg;  // Ruppert matrices of the framed f and g at bounds (d, d)
    long d;
    Frame<K> frame;
    DegreeDrop drop;
    K drop_ratio;  // for proportional: F_d = drop_ratio * G_d, point (drop_ratio : 1)
    K sample;
    // Top forms evaluated at the two frame directions. The framed member at
    // the parameter (lc1_f : lc1_g) loses its X^d term (and at (lc2_f : lc2_g)
    // its Y^d term); those are the only parameters where the Ruppert criterion
    // can fire without the member being reducible.
    K lc1_f, lc1_g, lc2_f, lc2_g;

    PencilMatrix(Matrix<K> mf, Matrix<K> mg, long deg, Frame<K> fr, DegreeDrop dd, K ratio, K smp)
        : Mf(std::move(mf)), Mg(std::move(mg)), d(deg), frame(std::move(fr)), drop(dd),
          drop_ratio(std::move(ratio)), sample(smp), lc1_f(smp), lc1_g(smp), lc2_f(smp), lc2_g(smp) {}

    size_t rows() const { return Mf.rows(); }
    size_t cols() const { return Mf.cols(); }

    /// Ruppert matrix of the member mu*f - lambda*g.
    Matrix<K> specialize(const K& lambda, const K& mu) const {
        Matrix<K> s(Mf.rows(), Mf.cols(), zero_like(sample));
        for (size_t r = 0; r < s.rows(); ++r)
            for (size_t c = 0; c < s.cols(); ++c)
                s.at(r, c) = mu * Mf.at(r, c) - lambda * Mg.at(r, c);
        return s;
    }
};

/// Build the pencil matrix for V f - U g (field coefficients; d >= 2).
template <class K>
PencilMatrix<K> build_pencil(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    static_assert(is_field_v<K>, "build_pencil needs field coefficients");
    if (f.nvars() != 2 || g.nvars() != 2 || f.vars() != g.vars())
        throw std::invalid_argument("build_pencil: f, g must share two variables");
    const long d = std::max(f.total_degree(), g.total_degree());
    if (d < 2) throw std::invalid_argument("build_pencil: pencil degree must be >= 2");
    require_noether_char(f.sample(), d);
    const K zero = zero_like(f.sample());

    MultiPoly<K> Fd = f.homogeneous_part(static_cast<unsigned>(d));
    MultiPoly<K> Gd = g.homogeneous_part(static_cast<unsigned>(d));

    DegreeDrop drop = DegreeDrop::none;
    K ratio = zero;
    if (Gd.is_zero()) {
        drop = DegreeDrop::at_mu_zero;  // deg g < d: the member at (1:0) degenerates
    } else if (Fd.is_zero()) {
        drop = DegreeDrop::at_lambda_zero;
    } else {
        const K r = Fd.coeff(Gd.lead_exp()) * field_inv(Gd.lead_coeff());
        if (Fd == Gd.scale(r)) {
            drop = DegreeDrop::proportional;
            ratio = r;
        }
    }

    Frame<K> fr = choose_frame(Fd, Gd);
    MultiPoly<K> ff = apply_frame(f, fr);
    MultiPoly<K> gg = apply_frame(g, fr);
    auto mf = ruppert_system(ff, d, d).matrix;
    auto mg = ruppert_system(gg, d, d).matrix;
    PencilMatrix<K> pm(std::move(mf), std::move(mg), d, fr, drop, std::move(ratio), zero);
    pm.lc1_f = Fd.eval({fr.a, fr.c});
    pm.lc1_g = Gd.eval({fr.a, fr.c});
    pm.lc2_f = Fd.eval({fr.b, fr.d});
    pm.lc2_g = Gd.eval({fr.b, fr.d});
    return pm;
}

/// Degree-drop points of the pencil in sigma, per the top-form classification.
template <class K>
std::vector<ProjPoint<K>> degree_drop_points(const PencilMatrix<K>& pm) {
    switch (pm.drop) {
        case DegreeDrop::at_mu_zero:
            return {ProjPoint<K>{one_like(pm.sample), zero_like(pm.sample)}};
        case DegreeDrop::at_lambda_zero:
            return {ProjPoint<K>{zero_like(pm.sample), one_like(pm.sample)}};
        case DegreeDrop::proportional:
            return {ProjPoint<K>{pm.drop_ratio, one_like(pm.sample)}};
        default:
            return {};
    }
}

// ---------------------------------------------------------------------------
// determinants, interpolation, rank scans
// ---------------------------------------------------------------------------

namespace detail {

/// Exact determinant over the supported fields; Q and Q(Z) route through
/// fraction-free elimination on cleared entries.
template <class K>
K field_det(const Matrix<K>& m) {
    if constexpr (std::is_same_v<K, Rational>) {
        Matrix<BigInt> z = clear_row_denominators(m);
        BigInt dz = det_bareiss(z, [](const BigInt& a, const BigInt& b) { return exact_div(a, b); });
        Rational scale(1);
        for (size_t r = 0; r < m.rows(); ++r) {
            BigInt l = 1;
            for (size_t c = 0; c < m.cols(); ++c) l = lcm(l, m.at(r, c).den());
            scale = scale * Rational(BigInt(1), l);
        }
        return Rational(dz) * scale;
    } else {
        return det_gauss(m);
    }
}

template <class P>
Frac<P> field_det(const Matrix<Frac<P>>& m) {
    // clear each row to polynomial entries, Bareiss over the polynomial ring
    P one = one_like(m.sample().num());
    Matrix<P> z(m.rows(), m.cols(), zero_like(m.sample().num()));
    Frac<P> scale(one);
    for (size_t r = 0; r < m.rows(); ++r) {
        P l = one;
        for (size_t c = 0; c < m.cols(); ++c) l = l * m.at(r, c).den();
        for (size_t c = 0; c < m.cols(); ++c) {
            Frac<P> v = m.at(r, c) * Frac<P>(l);
            z.at(r, c) = frac_ops<P>::div(v.num(), v.den());  // denominator divides exactly
        }
        scale = scale * Frac<P>(one, l);
    }
    P dz = det_bareiss(z, [](const P& a, const P& b) { return exact_div_coeff(a, b); });
    return Frac<P>(dz) * scale;
}

/// The i-th interpolation node: distinct field elements, beyond the prime
/// subfield where the field is an extension.
template <class K>
K interp_node(const K& sample, size_t i) {
    return int_like(sample, static_cast<long>(i));
}
inline GFElem interp_node(const GFElem& sample, size_t i) {
    if (i >= sample.ring()->q()) throw std::logic_error("interp_node: field exhausted");
    return GFElem(sample.ring(), static_cast<std::uint32_t>(i));
}

/// Newton interpolation over a field at the nodes interp_node(0..D).
template <class K>
std::vector<K> newton_interpolate(const std::vector<K>& values) {
    const size_t n = values.size();
    const K zero = zero_like(values[0]);
    std::vector<K> nodes;
    nodes.reserve(n);
    for (size_t i = 0; i < n; ++i) nodes.push_back(interp_node(zero, i));
    std::vector<K> dd = values;  // divided differences, in place
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) * field_inv(nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    }
    // expand P(t) = sum_i dd[i] * prod_{j<i} (t - t_j)
    std::vector<K> coeff(n, zero);
    std::vector<K> basis(n, zero);
    basis[0] = one_like(zero);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j <= i; ++j) coeff[j] = coeff[j] + dd[i] * basis[j];
        if (i + 1 < n) {
            for (size_t j = i + 2; j-- > 0;) {
                K lower = j > 0 ? basis[j - 1] : zero;
                basis[j] = lower - nodes[i] * basis[j];
            }
        }
    }
    return coeff;
}

}  // namespace detail

/// Result of scanning the pencil matrix rank across C+1 projective points.
template <class K>
struct PencilRankScan {
    size_t full_cols = 0;
    size_t max_rank = 0;
    bool all_minors_zero = false;  // certified in exact mode (C+1 points), heuristic in MC
    bool certified = false;
    std::vector<size_t> witness_rows;  // pivot rows of a full-rank specialization
};

namespace detail {

/// Exact rank dispatcher (clears fraction-field entries before elimination).
template <class K>
size_t rank_of(const Matrix<K>& m, std::vector<size_t>* pivot_rows = nullptr) {
    return rank_over_field(m, pivot_rows);
}

template <class P>
size_t rank_of(const Matrix<Frac<P>>& m, std::vector<size_t>* pivot_rows = nullptr) {
    P pone = one_like(m.sample().num());
    Matrix<P> z(m.rows(), m.cols(), zero_like(m.sample().num()));
    for (size_t r = 0; r < m.rows(); ++r) {
        P l = pone;
        for (size_t c = 0; c < m.cols(); ++c) l = l * m.at(r, c).den();
        for (size_t c = 0; c < m.cols(); ++c) {
            Frac<P> v = m.at(r, c) * Frac<P>(l);
            z.at(r, c) = frac_ops<P>::div(v.num(), v.den());
        }
    }
    return rank_bareiss(z, [](const P& a, const P& b) { return exact_div_coeff(a, b); }, pivot_rows);
}

/// Number of distinct finite interpolation nodes available in K (0, 1, 2, ...).
template <class K>
size_t node_capacity(const K&) {
    return 1u << 30;
}
inline size_t node_capacity(const Fp& s) {
    BigInt p = s.modulus();
    return p > BigInt(1 << 30) ? (1u << 30) : static_cast<size_t>(p.to_long());
}
inline size_t node_capacity(const GFElem& s) { return s.ring()->q(); }

/// Lift a pencil over F_p (k = 1) into F_{p^k}; entries are prime-field codes.
inline GFElem lift_code(const GFElem& v, const GFRing& ext) {
    if (v.ring()->k() != 1) throw std::logic_error("lift: source must be a prime field");
    return GFElem(ext, v.code());
}

inline PencilMatrix<GFElem> lift_pencil(const PencilMatrix<GFElem>& pm, const GFRing& ext) {
    auto lift = [&](const GFElem& v) { return lift_code(v, ext); };
    return PencilMatrix<GFElem>(pm.Mf.map(lift), pm.Mg.map(lift), pm.d,
                                Frame<GFElem>(lift(pm.frame.a), lift(pm.frame.b), lift(pm.frame.c),
                                              lift(pm.frame.d)),
                                pm.drop, lift(pm.drop_ratio), lift(pm.sample));
}

inline GFElem project_code(const GFElem& v, const GFRing& base) {
    if (v.code() >= base->q()) throw std::logic_error("project: value outside the prime field");
    return GFElem(base, v.code());
}

}  // namespace detail

/// Rank of the specialized pencil matrix at (lambda : mu).
template <class K>
size_t pencil_rank_at(const PencilMatrix<K>& pm, const K& lambda, const K& mu,
                      std::vector<size_t>* pivot_rows = nullptr) {
    return detail::rank_of(pm.specialize(lambda, mu), pivot_rows);
}

/// Scan the pencil rank at C+1 distinct projective points (exact) or at two
/// seeded random points (Monte-Carlo). A single full-rank point proves that a
/// nonzero maximal minor exists; rank deficiency at C+1 points proves every
/// maximal minor (a form of degree <= C) vanishes identically.
template <class K>
PencilRankScan<K> scan_pencil_rank(const PencilMatrix<K>& pm, bool exact, std::uint64_t seed) {
    PencilRankScan<K> out;
    const size_t C = pm.cols();
    out.full_cols = C;
    const size_t need = C + 1;

    if constexpr (std::is_same_v<K, GFElem>) {
        if (detail::node_capacity(pm.sample) + 1 < need) {
            // recompute in an extension with enough points; the rank verdicts transfer
            std::uint32_t p = pm.sample.ring()->p(), k = 1, q = p;
            while (q + 1 < need) {
                q *= p;
                ++k;
            }
            auto lifted = detail::lift_pencil(pm, make_gf(p, k));
            auto scan = scan_pencil_rank(lifted, exact, seed);
            out.max_rank = scan.max_rank;
            out.all_minors_zero = scan.all_minors_zero;
            out.certified = scan.certified;
            out.witness_rows = scan.witness_rows;
            return out;
        }
    }

    auto test_point = [&](const K& l, const K& m) {
        std::vector<size_t> rows;
        size_t rk = pencil_rank_at(pm, l, m, &rows);
        out.max_rank = std::max(out.max_rank, rk);
        if (rk == C && out.witness_rows.empty()) out.witness_rows = rows;
        return rk == C;
    };

    if (exact) {
        if (test_point(one_like(pm.sample), zero_like(pm.sample))) {
            out.certified = true;
            return out;
        }
        for (size_t i = 0; i < C; ++i) {
            if (test_point(detail::interp_node(pm.sample, i), one_like(pm.sample))) {
                out.certified = true;
                return out;
            }
        }
        out.all_minors_zero = true;  // deg-<=C forms vanishing at C+1 points vanish identically
        out.certified = true;
    } else {
        Rng rng(seed);
        for (int t = 0; t < 2; ++t) {
            K l = int_like(pm.sample, static_cast<long>(rng.below(1u << 20)));
            if (test_point(l, one_like(pm.sample))) {
                out.certified = true;  // a full-rank point is a proof in any mode
                return out;
            }
        }
        out.all_minors_zero = true;
        out.certified = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// maximal minors as binary forms
// ---------------------------------------------------------------------------

namespace detail {

template <class K>
BinaryForm<K> minor_form_impl(const PencilMatrix<K>& pm, const std::vector<size_t>& rows) {
    const size_t C = pm.cols();
    std::vector<size_t> cols(C);
    for (size_t i = 0; i < C; ++i) cols[i] = i;
    // values at (t, 1) for t = 0..C, interpolate, then check U^C coefficient at (1, 0)
    std::vector<K> values;
    values.reserve(C + 1);
    for (size_t t = 0; t <= C; ++t) {
        Matrix<K> s = pm.specialize(interp_node(pm.sample, t), one_like(pm.sample));
        values.push_back(field_det(s.submatrix(rows, cols)));
    }
    std::vector<K> coeff = newton_interpolate(values);
    Matrix<K> sinf = pm.specialize(one_like(pm.sample), zero_like(pm.sample));
    K vinf = field_det(sinf.submatrix(rows, cols));
    if (!(coeff.back() == vinf))
        throw std::logic_error("minor_form: interpolation inconsistent at (1:0)");
    return BinaryForm<K>(pm.sample, std::move(coeff));
}

}  // namespace detail

/// The maximal minor on the given row set, as a binary form of degree <= C.
template <class K>
BinaryForm<K> minor_form(const PencilMatrix<K>& pm, const std::vector<size_t>& rows) {
    if (rows.size() != pm.cols()) throw std::invalid_argument("minor_form: need |rows| = column count");
    if constexpr (std::is_same_v<K, GFElem>) {
        const size_t need = pm.cols() + 2;
        if (detail::node_capacity(pm.sample) < need) {
            std::uint32_t p = pm.sample.ring()->p(), k = 1, q = p;
            while (q < need) {
                q *= p;
                ++k;
            }
            auto lifted = detail::lift_pencil(pm, make_gf(p, k));
            auto form = detail::minor_form_impl(lifted, rows);
            return form.map([&](const GFElem& v) { return detail::project_code(v, pm.sample.ring()); });
        }
    }
    return detail::minor_form_impl(pm, rows);
}

/// Canonical index of a row subset (lexicographic rank among C-subsets).
inline BigInt subset_rank(const std::vector<size_t>& rows, size_t nrows) {
    BigInt rank = 0;
    size_t prev = 0;
    const size_t k = rows.size();
    for (size_t i = 0; i < k; ++i) {
        for (size_t v = prev; v < rows[i]; ++v)
            rank += BigInt::binomial(static_cast<unsigned long>(nrows - v - 1),
                                     static_cast<unsigned long>(k - i - 1));
        prev = rows[i] + 1;
    }
    return rank;
}

enum class MinorMode { exact, monte_carlo };

template <class K>
struct NoetherMinors {
    std::vector<BinaryForm<K>> minors;  // enumerated minors, canonical/seeded order
    BinaryForm<K> gcd;                  // monic gcd of the nonzero ones (zero form if none)
    bool all_zero = false;
    bool certified = false;   // all-zero certified, or the enumeration was exhaustive
    bool stabilized = false;  // stopped by the running-gcd stabilization rule
    size_t generic_rank = 0;
    size_t full_cols = 0;
    bool has_witness = false;
    BigInt witness_index;  // canonical index of the first nonzero minor's row set
    BinaryForm<K> witness;

    explicit NoetherMinors(const K& sample) : gcd(sample), witness(sample) {}
};

/// Reducibility forms of the pencil. Exact mode enumerates row subsets in
/// canonical order (exhaustively up to `exact_cap` subsets, then until the
/// running gcd stabilizes); Monte-Carlo samples subsets in seed order and
/// stops on stabilization. In both modes the returned gcd's vanishing locus
/// contains sigma; spectrum-level refinement certifies equality.
template <class K>
NoetherMinors<K> noether_minors(const PencilMatrix<K>& pm, MinorMode mode, std::uint64_t seed,
                                int stabilization_k = 8, std::uint64_t exact_cap = 65536) {
    NoetherMinors<K> out(pm.sample);
    const size_t R = pm.rows(), C = pm.cols();
    out.full_cols = C;

    auto scan = scan_pencil_rank(pm, mode == MinorMode::exact, seed ^ 0xa5a5ULL);
    out.generic_rank = scan.max_rank;
    if (scan.all_minors_zero) {
        if (scan.max_rank == 0) throw std::domain_error("noether_minors: degenerate pencil");
        out.all_zero = true;
        out.certified = scan.certified;
        return out;
    }

    BigInt total = BigInt::binomial(static_cast<unsigned long>(R), static_cast<unsigned long>(C));
    const bool exhaustive = (mode == MinorMode::exact) && total <= BigInt(static_cast<long>(exact_cap));

    // witness first: the row set found by the rank scan
    if (!scan.witness_rows.empty()) {
        std::vector<size_t> w = scan.witness_rows;
        std::sort(w.begin(), w.end());
        out.witness = minor_form(pm, w);
        out.witness_index = subset_rank(w, R);
        out.has_witness = !out.witness.is_zero();
    }

    auto fgcd = [&](const BinaryForm<K>& a, const BinaryForm<K>& b) { return form_gcd(a, b); };

    int stable_run = 0;
    size_t enumerated = 0;
    const size_t hard_cap = static_cast<size_t>(std::min<std::uint64_t>(exact_cap, 1u << 16));

    auto consume = [&](const std::vector<size_t>& rows) {
        BinaryForm<K> m = minor_form(pm, rows);
        out.minors.push_back(m);
        ++enumerated;
        if (m.is_zero()) return false;
        if (!out.has_witness) {
            out.witness = m;
            out.witness_index = subset_rank(rows, R);
            out.has_witness = true;
        }
        if (out.gcd.is_zero()) {
            out.gcd = m.scale(field_inv(m.lead()));
            stable_run = 1;
        } else {
            BinaryForm<K> g = fgcd(out.gcd, m);
            if (g == out.gcd)
                ++stable_run;
            else {
                out.gcd = g;
                stable_run = 1;
            }
        }
        return stable_run >= stabilization_k;
    };

    if (mode == MinorMode::exact) {
        // lexicographic combinations
        std::vector<size_t> rows(C);
        for (size_t i = 0; i < C; ++i) rows[i] = i;
        for (;;) {
            bool stop = consume(rows);
            if (!exhaustive && stop) {
                out.stabilized = true;
                break;
            }
            if (!exhaustive && enumerated >= hard_cap) break;
            // next combination
            size_t i = C;
            while (i-- > 0) {
                if (rows[i] != i + R - C) {
                    ++rows[i];
                    for (size_t j = i + 1; j < C; ++j) rows[j] = rows[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    out.certified = exhaustive;
                    return out;
                }
            }
        }
    } else {
        Rng rng(seed);
        std::vector<std::vector<size_t>> seen;
        const size_t mc_cap = 2048;
        while (enumerated < mc_cap) {
            // seeded random C-subset of rows
            std::vector<size_t> pool(R);
            for (size_t i = 0; i < R; ++i) pool[i] = i;
            for (size_t i = 0; i < C; ++i) std::swap(pool[i], pool[i + rng.below(R - i)]);
            std::vector<size_t> rows(pool.begin(), pool.begin() + static_cast<long>(C));
            std::sort(rows.begin(), rows.end());
            if (std::find(seen.begin(), seen.end(), rows) != seen.end()) continue;
            seen.push_back(rows);
            if (consume(rows)) {
                out.stabilized = true;
                break;
            }
            if (BigInt(static_cast<long>(seen.size())) == total) break;  // exhausted
        }
    }
    out.certified = exhaustive;
    return out;
}

// ---------------------------------------------------------------------------
// rank modulo an irreducible factor (dynamic evaluation)
// ---------------------------------------------------------------------------

/// For psi monic squarefree over K with no roots in K, decides componentwise
/// whether the pencil matrix drops rank identically on {psi(U/V) = 0}. When a
/// zero divisor shows up, psi splits and both branches are analyzed. Returns
/// pairs (factor, rank_deficient); the factors multiply to psi.
template <class K>
std::vector<std::pair<UniPoly<K>, bool>> pencil_rank_mod(const PencilMatrix<K>& pm,
                                                         const UniPoly<K>& psi) {
    static_assert(is_field_v<K>, "pencil_rank_mod needs a field");
    std::vector<std::pair<UniPoly<K>, bool>> out;
    if (psi.degree() < 1) return out;

    const size_t R = pm.rows(), C = pm.cols();
    // entries a(t) = Mf - t Mg reduced mod psi
    std::vector<UniPoly<K>> entries;
    entries.reserve(R * C);
    UniPoly<K> t = UniPoly<K>::monomial(one_like(pm.sample), 1);
    for (size_t r = 0; r < R; ++r)
        for (size_t c = 0; c < C; ++c) {
            UniPoly<K> e = UniPoly<K>::constant(pm.Mf.at(r, c)) -
                           t.scale(pm.Mg.at(r, c));
            entries.push_back(divrem(e, psi).second);
        }

    struct Splitter {
        const UniPoly<K>* modulus;
        UniPoly<K> factor;  // set when a split is discovered
        bool split = false;
    };

    // Gaussian elimination over K[t]/(psi); throws the factor via the splitter
    auto try_rank = [&](const UniPoly<K>& mod, std::optional<UniPoly<K>>& split_out) -> size_t {
        std::vector<UniPoly<K>> m;
        m.reserve(entries.size());
        for (const auto& e : entries) m.push_back(divrem(e, mod).second);
        size_t rank = 0;
        for (size_t col = 0; col < C && rank < R; ++col) {
            size_t piv = R;
            for (size_t r = rank; r < R; ++r)
                if (!m[r * C + col].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv == R) continue;
            // invert the pivot mod `mod`; a nontrivial gcd splits the modulus
            auto eg = egcd_poly(m[piv * C + col], mod);
            if (eg.g.degree() > 0) {
                split_out = eg.g;
                return 0;
            }
            for (size_t c = 0; c < C; ++c) std::swap(m[rank * C + c], m[piv * C + c]);
            UniPoly<K> pinv = divrem(eg.s, mod).second;
            for (size_t r = rank + 1; r < R; ++r) {
                if (m[r * C + col].is_zero()) continue;
                UniPoly<K> factor = divrem(m[r * C + col] * pinv, mod).second;
                for (size_t c = col; c < C; ++c) {
                    m[r * C + c] = divrem(m[r * C + c] - factor * m[rank * C + c], mod).second;
                }
            }
            ++rank;
        }
        return rank;
    };

    std::vector<UniPoly<K>> work{psi.monic()};
    while (!work.empty()) {
        UniPoly<K> mod = work.back();
        work.pop_back();
        if (mod.degree() < 1) continue;
        std::optional<UniPoly<K>> split;
        size_t rank = try_rank(mod, split);
        if (split) {
            work.push_back(*split);
            work.push_back(divrem(mod, *split).first);
            continue;
        }
        out.emplace_back(mod, rank < C);
    }
    return out;
}

// ---------------------------------------------------------------------------
// single-member absolute irreducibility
// ---------------------------------------------------------------------------

/// True iff P is irreducible over the algebraic closure AND deg(P) = d.
/// Exact: the frame makes the bidegree exactly (d, d), where the Ruppert
/// criterion is an equivalence.
template <class K>
bool is_absolutely_irreducible(const MultiPoly<K>& P, long d) {
    static_assert(is_field_v<K>, "is_absolutely_irreducible needs field coefficients");
    if (P.is_zero()) throw std::invalid_argument("is_absolutely_irreducible: zero polynomial");
    if (d < 2 || d < P.total_degree())
        throw std::invalid_argument("is_absolutely_irreducible: need d >= max(2, deg P)");
    require_noether_char(P.sample(), d);
    if (P.total_degree() < d) return false;  // degree-drop clause
    MultiPoly<K> top = P.homogeneous_part(static_cast<unsigned>(d));
    Frame<K> fr = choose_frame(top, top);
    MultiPoly<K> Q = apply_frame(P, fr);
    auto sys = ruppert_system(Q, d, d);
    return rank_over_field(sys.matrix) == sys.matrix.cols();
}

}  // namespace pencil

#endif
