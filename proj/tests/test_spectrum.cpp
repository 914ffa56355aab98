#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pencil/oracle.hpp"
#include "pencil/rng.hpp"
#include "pencil/spectrum.hpp"

using namespace pencil;

namespace {

using QP = MultiPoly<Rational>;
const std::vector<std::string> XY{"X", "Y"};

QP qterm(long c, ExpVec e) {
    QP p(XY, Rational(0));
    p.add_term(e, Rational(c));
    return p;
}

bool proportional(const BinaryForm<Rational>& a, const BinaryForm<Rational>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    return a.scale(field_inv(a.lead())) == b.scale(field_inv(b.lead()));
}

MultiPoly<GFElem> random_gf_poly(Rng& rng, const GFRing& f, unsigned maxdeg) {
    MultiPoly<GFElem> p(XY, GFElem(f, 0));
    for (unsigned i = 0; i <= maxdeg; ++i)
        for (unsigned j = 0; i + j <= maxdeg; ++j)
            p.add_term({i, j}, GFElem(f, static_cast<std::uint32_t>(rng.below(f->q()))));
    return p;
}

}  // namespace

TEST_CASE("spect_poly: f = X^2 + Y^2, g = 1 has spectrum U*V") {
    QP f = qterm(1, {2, 0}) + qterm(1, {0, 2});
    QP g = qterm(1, {0, 0});
    auto rep = spect_poly(f, g);
    CHECK(rep.finite);
    CHECK(rep.d == 2);
    BinaryForm<Rational> uv(Rational(0), {Rational(0), Rational(1), Rational(0)});
    CHECK(proportional(rep.spect, uv));
    REQUIRE(rep.degree_drop_points.size() == 1);
    CHECK(rep.degree_drop_points[0].is_infinity());
    CHECK(rep.roots_in_base_field.size() == 2);
    CHECK(cardinality_check(rep));
}

TEST_CASE("spect_poly: f = X^2 Y^2 (composite) has the zero spectrum form") {
    QP f = qterm(1, {2, 2});
    QP g = qterm(1, {0, 0});
    auto rep = spect_poly(f, g);
    CHECK(!rep.finite);
    CHECK(rep.spect.is_zero());
    CHECK(rep.certified);
    CHECK_THROWS(cardinality_check(rep));
}

TEST_CASE("spect_poly: f = XY, g = 1 has spectrum U*V") {
    QP f = qterm(1, {1, 1});
    QP g = qterm(1, {0, 0});
    auto rep = spect_poly(f, g);
    CHECK(rep.finite);
    BinaryForm<Rational> uv(Rational(0), {Rational(0), Rational(1), Rational(0)});
    CHECK(proportional(rep.spect, uv));
}

TEST_CASE("spect_poly: f = X^2 + Y has spectrum proportional to V") {
    QP f = qterm(1, {2, 0}) + qterm(1, {0, 1});
    QP g = qterm(1, {0, 0});
    auto rep = spect_poly(f, g);
    CHECK(rep.finite);
    // X^2 + Y - lambda is irreducible for every lambda; only the degree-drop
    // point (1:0) lies in sigma
    BinaryForm<Rational> v(Rational(0), {Rational(1), Rational(0)});
    CHECK(proportional(rep.spect, v));
    REQUIRE(rep.roots_in_base_field.size() == 1);
    CHECK(rep.roots_in_base_field[0].is_infinity());
}

TEST_CASE("spect_poly guards") {
    QP f = qterm(1, {2, 0}) + qterm(1, {0, 2});
    CHECK_THROWS(spect_poly(f, f + f));  // gcd != 1
    QP z(XY, Rational(0));
    CHECK_THROWS(spect_poly(f, z));
}

TEST_CASE("is_in_spectrum: pinned examples") {
    QP f = qterm(1, {2, 0}) + qterm(1, {0, 2});
    QP g = qterm(1, {0, 0});
    Rational one(1), zero(0);
    CHECK(!is_in_spectrum(f, g, ProjPoint<Rational>{one, one}));        // X^2+Y^2-1 irreducible
    CHECK(is_in_spectrum(f, g, ProjPoint<Rational>{one, zero}));        // degree drop
    CHECK(is_in_spectrum(f, g, ProjPoint<Rational>{zero, one}));        // factors over Q(i)
}

TEST_CASE("spectrum consistency: membership agrees with the form pointwise") {
    QP f = qterm(1, {2, 0}) + qterm(1, {0, 2});
    QP g = qterm(1, {1, 1}) + qterm(1, {0, 0});  // pencil of conics, sigma = {0, 2, -2}
    auto rep = spect_poly(f, g);
    CHECK(rep.finite);
    CHECK(rep.spect.degree() == 3);
    for (long x = -10; x <= 10; ++x) {
        ProjPoint<Rational> pt{Rational(x), Rational(1)};
        CHECK(is_in_spectrum(f, g, pt) == is_zero(rep.spect.eval(pt.lambda, pt.mu)));
    }
    ProjPoint<Rational> inf{Rational(1), Rational(0)};
    CHECK(is_in_spectrum(f, g, inf) == is_zero(rep.spect.eval(inf.lambda, inf.mu)));
}

TEST_CASE("spectrum_over_Fp: pinned examples with exhaustive cross-validation") {
    auto f5 = make_gf(5, 1);
    auto mk = [&](const GFRing& fld, std::vector<std::pair<long, ExpVec>> terms) {
        MultiPoly<GFElem> p(XY, GFElem(fld, 0));
        for (auto& [c, e] : terms) p.add_term(e, GFElem(fld, fld->from_int(c)));
        return p;
    };
    // f = X^2+Y^2, g = 1 over F_5: sigma = {(0:1), (1:0)}
    auto rep = spectrum_over_Fp(mk(f5, {{1, {2, 0}}, {1, {0, 2}}}), mk(f5, {{1, {0, 0}}}));
    REQUIRE(rep.roots_in_base_field.size() == 2);
    CHECK(rep.roots_in_base_field[0].lambda.is_zero());
    CHECK(rep.roots_in_base_field[1].is_infinity());

    // f = XY, g = 1 over F_7
    auto f7 = make_gf(7, 1);
    auto rep2 = spectrum_over_Fp(mk(f7, {{1, {1, 1}}}), mk(f7, {{1, {0, 0}}}));
    REQUIRE(rep2.roots_in_base_field.size() == 2);
    CHECK(rep2.roots_in_base_field[0].lambda.is_zero());
    CHECK(rep2.roots_in_base_field[1].is_infinity());

    // p = 2, d = 2 violates the characteristic guard
    auto f2 = make_gf(2, 1);
    CHECK_THROWS_AS(spectrum_over_Fp(mk(f2, {{1, {2, 0}}, {1, {0, 2}}}), mk(f2, {{1, {0, 0}}})),
                    std::domain_error);
}

TEST_CASE("oracle equivalence on random reduced pencils") {
    Rng rng(4242);
    int done = 0;
    const int PER_PRIME = 12;
    for (std::uint32_t p : {7u, 11u, 13u}) {
        auto field = make_gf(p, 1);
        int here = 0;
        while (here < PER_PRIME) {
            unsigned d = 2 + static_cast<unsigned>(rng.below(2));
            auto f = random_gf_poly(rng, field, d);
            auto g = random_gf_poly(rng, field, rng.below(2) ? d : d - 1);
            if (std::max(f.total_degree(), g.total_degree()) != static_cast<long>(d)) continue;
            if (g.is_zero() || f.is_zero()) continue;
            if (!is_one(multipoly_gcd(f, g))) continue;
            auto rep = spectrum_over_Fp(f, g, MinorMode::monte_carlo, 1000 + done);
            auto expected = oracle::oracle_spectrum(oracle::from_multipoly(f), oracle::from_multipoly(g));
            REQUIRE(rep.roots_in_base_field.size() == expected.size());
            for (const auto& [l, m] : expected) {
                ProjPoint<GFElem> pt{GFElem(field, l), GFElem(field, m)};
                bool found = false;
                for (const auto& q : rep.roots_in_base_field)
                    if (q == pt) found = true;
                CHECK(found);
            }
            ++here;
            ++done;
        }
    }
    CHECK(done == 3 * PER_PRIME);
}

TEST_CASE("cardinality bound holds on random rational pencils") {
    Rng rng(99);
    int done = 0;
    while (done < 10) {
        QP f(XY, Rational(0));
        QP g(XY, Rational(0));
        for (int t = 0; t < 4; ++t) {
            f.add_term({rng.below(2), rng.below(2)}, Rational(static_cast<long>(rng.below(7)) - 3));
            g.add_term({rng.below(2), rng.below(2)}, Rational(static_cast<long>(rng.below(7)) - 3));
        }
        f.add_term({2, 0}, Rational(1));
        if (f.is_zero() || g.is_zero()) continue;
        if (!is_one(multipoly_gcd(f, g))) continue;
        auto rep = spect_poly(f, g);
        if (!rep.finite) continue;
        CHECK(cardinality_check(rep));
        CHECK(rep.spect.degree() <= 3);
        ++done;
    }
}
