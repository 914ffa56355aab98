#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pencil/frac.hpp"
#include "pencil/mgcd.hpp"
#include "pencil/multipoly.hpp"
#include "pencil/ratfunc.hpp"
#include "pencil/rng.hpp"

using namespace pencil;

namespace {

using ZP = MultiPoly<BigInt>;
using QP = MultiPoly<Rational>;

const std::vector<std::string> XY{"X", "Y"};
const std::vector<std::string> XYZ{"X", "Y", "Z"};

ZP zp(const std::vector<std::string>& vars) { return ZP(vars, BigInt(0)); }

ZP term(const std::vector<std::string>& vars, long c, ExpVec e) {
    ZP p(vars, BigInt(0));
    p.add_term(e, BigInt(c));
    return p;
}

ZP random_poly(Rng& rng, const std::vector<std::string>& vars, unsigned maxdeg, long coeff_range) {
    ZP p(vars, BigInt(0));
    for (int t = 0; t < 6; ++t) {
        ExpVec e(vars.size(), 0);
        unsigned budget = maxdeg;
        for (size_t i = 0; i < vars.size(); ++i) {
            e[i] = static_cast<unsigned>(rng.below(budget + 1));
            budget -= e[i];
        }
        p.add_term(e, BigInt(static_cast<long>(rng.below(2 * coeff_range + 1)) - coeff_range));
    }
    return p;
}

}  // namespace

TEST_CASE("homogenize: pinned examples") {
    // X^2 + Y^2 at d = 2 stays itself
    ZP f = term(XY, 1, {2, 0}) + term(XY, 1, {0, 2});
    ZP h = homogenize(f, 2, "X0");
    CHECK(h.nvars() == 3);
    CHECK(h.coeff({0, 2, 0}) == BigInt(1));
    CHECK(h.coeff({0, 0, 2}) == BigInt(1));
    CHECK(h.terms().size() == 2);

    // X^2 + Y at d = 2 gains X0 on the linear term
    ZP g = term(XY, 1, {2, 0}) + term(XY, 1, {0, 1});
    ZP hg = homogenize(g, 2, "X0");
    CHECK(hg.coeff({1, 0, 1}) == BigInt(1));
    CHECK(hg.coeff({0, 2, 0}) == BigInt(1));

    // constant 1 at d = 2 becomes X0^2
    ZP one = term(XY, 1, {0, 0});
    ZP h1 = homogenize(one, 2, "X0");
    CHECK(h1.coeff({2, 0, 0}) == BigInt(1));
    CHECK(h1.terms().size() == 1);

    CHECK_THROWS(homogenize(f, 1, "X0"));
}

TEST_CASE("homogenize properties: round trip and homogeneity") {
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        ZP f = random_poly(rng, XY, 3, 5);
        if (f.is_zero()) continue;
        long d = f.total_degree();
        ZP h = homogenize(f, d, "X0");
        for (const auto& [e, c] : h.terms()) CHECK(exp_total(e) == static_cast<unsigned>(d));
        CHECK(dehomogenize(h) == f);
    }
}

TEST_CASE("measures: pinned examples") {
    // 3X^2 - 2Y + 1
    ZP f = term(XY, 3, {2, 0}) + term(XY, -2, {0, 1}) + term(XY, 1, {0, 0});
    auto m = measures(f);
    CHECK(m.height == BigInt(3));
    CHECK(m.one_norm == BigInt(6));
    CHECK(m.total_degree == 2);

    auto mz = measures(zp(XY));
    CHECK(mz.height == BigInt(0));
    CHECK(mz.one_norm == BigInt(0));
    CHECK(mz.total_degree == -1);

    // (X+Y)^3 expanded: height 3, 1-norm 2^3, degree 3
    ZP xy = term(XY, 1, {1, 0}) + term(XY, 1, {0, 1});
    auto mc = measures(xy.pow(3));
    CHECK(mc.height == BigInt(3));
    CHECK(mc.one_norm == BigInt(8));
    CHECK(mc.total_degree == 3);
}

TEST_CASE("linear_change: pinned examples") {
    // identity on XY
    ZP f = term(XY, 1, {1, 1});
    std::vector<std::vector<BigInt>> id{{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}};
    std::vector<BigInt> zero2{BigInt(0), BigInt(0)};
    CHECK(linear_change(f, id, zero2, XY) == f);

    // shift in one variable: X^2 -> (X+1)^2; a second dummy variable keeps n >= 1 general
    std::vector<std::string> Xonly{"X"};
    ZP x2 = term(Xonly, 1, {2});
    ZP shifted = linear_change(x2, {{BigInt(1)}}, {BigInt(1)}, Xonly);
    CHECK(shifted == term(Xonly, 1, {2}) + term(Xonly, 2, {1}) + term(Xonly, 1, {0}));

    // X + YZ with A = [[1,0],[0,1],[1,1]], b = 0: X + Y(X+Y) = X + XY + Y^2
    ZP g = term(XYZ, 1, {1, 0, 0}) + term(XYZ, 1, {0, 1, 1});
    std::vector<std::vector<BigInt>> A{{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}};
    ZP r = linear_change(g, A, {BigInt(0), BigInt(0), BigInt(0)}, XY);
    CHECK(r == term(XY, 1, {1, 0}) + term(XY, 1, {1, 1}) + term(XY, 1, {0, 2}));

    CHECK_THROWS(linear_change(g, id, zero2, XY));  // wrong row count
}

TEST_CASE("linear_change: invertible square change composes to identity") {
    Rng rng(9);
    for (int i = 0; i < 25; ++i) {
        ZP f = random_poly(rng, XY, 3, 4);
        // unimodular [[1, a], [0, 1]] has exact inverse [[1, -a], [0, 1]]
        long a = static_cast<long>(rng.below(7)) - 3;
        std::vector<std::vector<BigInt>> A{{BigInt(1), BigInt(a)}, {BigInt(0), BigInt(1)}};
        std::vector<std::vector<BigInt>> Ainv{{BigInt(1), BigInt(-a)}, {BigInt(0), BigInt(1)}};
        std::vector<BigInt> b{BigInt(2), BigInt(-1)};
        ZP fwd = linear_change(f, A, b, XY);
        // inverse change: X -> X - aY - (b0 - a b1)... compute directly
        std::vector<BigInt> bb{-(b[0] - BigInt(a) * b[1]), -b[1]};
        ZP back = linear_change(fwd, Ainv, bb, XY);
        CHECK(back == f);
    }
}

TEST_CASE("multipoly_gcd: pinned examples") {
    // (X^2 - Y^2, X - Y) -> X - Y
    ZP a = term(XY, 1, {2, 0}) + term(XY, -1, {0, 2});
    ZP b = term(XY, 1, {1, 0}) + term(XY, -1, {0, 1});
    CHECK(multipoly_gcd(a, b) == b);

    // (XY, X^2) -> X
    CHECK(multipoly_gcd(term(XY, 1, {1, 1}), term(XY, 1, {2, 0})) == term(XY, 1, {1, 0}));

    // ((X+Y)^2 (X-1), (X+Y)(X-1)^2) -> (X+Y)(X-1)
    ZP xpy = term(XY, 1, {1, 0}) + term(XY, 1, {0, 1});
    ZP xm1 = term(XY, 1, {1, 0}) + term(XY, -1, {0, 0});
    ZP g = multipoly_gcd(xpy.pow(2) * xm1, xpy * xm1.pow(2));
    CHECK(g == xpy * xm1);
    // verify by trial division
    CHECK(divide_exact(xpy.pow(2) * xm1, g).has_value());
    CHECK(divide_exact(xpy * xm1.pow(2), g).has_value());
}

TEST_CASE("multipoly_gcd divides both arguments (random)") {
    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
        ZP f = random_poly(rng, XY, 2, 3);
        ZP g = random_poly(rng, XY, 2, 3);
        ZP h = random_poly(rng, XY, 1, 2);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        ZP d = multipoly_gcd(f * h, g * h);
        CHECK(divide_exact(f * h, d).has_value());
        CHECK(divide_exact(g * h, d).has_value());
        // h divides the gcd by construction
        CHECK(divide_exact(d, multipoly_gcd(h, h)).has_value());
    }
}

TEST_CASE("multipoly_gcd over a field normalizes monic") {
    QP a = QP(XY, Rational(0));
    a.add_term({2, 0}, Rational(2));
    a.add_term({0, 0}, Rational(-2));
    QP b = QP(XY, Rational(0));
    b.add_term({1, 0}, Rational(4));
    b.add_term({0, 0}, Rational(-4));
    QP d = multipoly_gcd(a, b);  // both share (X - 1)
    QP expect(XY, Rational(0));
    expect.add_term({1, 0}, Rational(1));
    expect.add_term({0, 0}, Rational(-1));
    CHECK(d == expect);
}

TEST_CASE("RationalFunction reduces on construction") {
    ZP xpy = term(XY, 1, {1, 0}) + term(XY, 1, {0, 1});
    ZP xm1 = term(XY, 1, {1, 0}) + term(XY, -1, {0, 0});
    RationalFunction<BigInt> r(xpy * xm1, xm1);
    CHECK(r.num() == xpy);
    CHECK(is_one(r.den()));
    CHECK(r.degree() == 1);

    CHECK_THROWS(RationalFunction<BigInt>(xpy, zp(XY)));                      // zero denominator
    CHECK_THROWS(RationalFunction<BigInt>(xm1, xm1));                        // constant after reduction
    CHECK_THROWS(RationalFunction<BigInt>(term({"X"}, 1, {1}), term({"X"}, 1, {0})));  // univariate
}

TEST_CASE("fraction field over Q[Z] stays reduced with monic denominator") {
    using PZ = MultiPoly<Rational>;
    std::vector<std::string> Z{"Z1"};
    PZ z = PZ::variable(Z, 0, Rational(0));
    PZ one = PZ::constant(Z, Rational(1));
    Frac<PZ> a(z * z - one, z - one);             // (Z^2-1)/(Z-1) = Z+1
    CHECK(a.num() == z + one);
    CHECK(is_one(a.den()));
    Frac<PZ> b(one, z);
    Frac<PZ> s = a + b;                            // Z+1 + 1/Z = (Z^2+Z+1)/Z
    CHECK(s.den() == z);
    CHECK(s.num() == z * z + z + one);
    CHECK(is_one(s * s.inv()));
}

TEST_CASE("univariate fraction field (spec FractionField type)") {
    using PT = UniPoly<Rational>;
    PT t = PT::monomial(Rational(1), 1);
    PT one = PT::constant(Rational(1));
    Frac<PT> a(t * t - one, t.scale(Rational(2)) - PT::constant(Rational(2)));
    // (t^2-1)/(2t-2) = (t+1)/2, denominator monic
    CHECK(a.den() == one);
    CHECK(a.num() == (t + one).scale(Rational(1, 2)));
    CHECK(is_one(a / a));
}
