#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nicecurves/nice_family.hpp"
#include "nicecurves/sampling.hpp"

using namespace nicecurves;

TEST_CASE("param_L values and degeneracies") {
    auto p3 = param_L(Rational(3));
    CHECK(p3.L == Rational(8, 5));
    CHECK(p3.W == Rational(7, 5));
    CHECK(p3.L * p3.L - p3.L + Rational(1) == p3.W * p3.W);
    auto p5 = param_L(Rational(5));
    CHECK(p5.L == Rational(8, 3));
    CHECK(p5.W == Rational(7, 3));

    CHECK_THROWS_AS(param_L(Rational(2)), DegenerateParameter);
    try {
        param_L(Rational(2));
    } catch (const DegenerateParameter& e) {
        CHECK(e.which == Degeneracy::LIsOne);
    }
    try {
        param_L(Rational(-1));
    } catch (const DegenerateParameter& e) {
        CHECK(e.which == Degeneracy::LIsZero);
    }
    CHECK_THROWS_AS(param_L(Rational(1, 2)), DegenerateParameter);
}

TEST_CASE("param round trip through the base point projection") {
    SplitMix rng;
    int done = 0;
    while (done < 1000) {
        Rational t = rng.rational(80);
        if (t.is_zero() || t == Rational(1, 2) || t == Rational(2) || t == Rational(1) || t == Rational(-1)) continue;
        auto [L, W] = param_L(t);
        // W was sign-normalized; the raw image is (L, +-W) and t = L + (+-W)
        CHECK((param_inverse(L, W) == t || param_inverse(L, -W) == t));
        ++done;
    }
}

TEST_CASE("special_L closed forms") {
    NiceCurve n2 = special_L(Rational(2));
    CHECK(n2.L == Rational(21, 16));
    CHECK(n2.W == Rational(19, 16));
    CHECK(n2.r == Rational(3, 8));
    CHECK(n2.s == Rational(7, 6));
    NiceCurve n3 = special_L(Rational(3));
    CHECK(n3.L == Rational(8, 3));
    CHECK(n3.W == Rational(7, 3));
    CHECK(n3.r == Rational(4, 9));
    CHECK(n3.s == Rational(2));
    CHECK_THROWS_AS(special_L(Rational(1)), DegenerateParameter);
    CHECK_THROWS_AS(special_L(Rational(0)), DegenerateParameter);
    // r and s really are the critical points, with r < s
    SplitMix rng;
    int done = 0;
    while (done < 100) {
        Rational u = rng.rational(40);
        if (u.is_zero() || u == Rational(1) || u == Rational(-1)) continue;
        NiceCurve nc = special_L(u);
        QPoly f(std::vector<Rational>{nc.curve.a6, nc.curve.a4, nc.curve.a2, Rational(1)});
        CHECK(f.derivative().eval(nc.r).is_zero());
        CHECK(f.derivative().eval(nc.s).is_zero());
        CHECK(nc.r < nc.s);
        ++done;
    }
}

TEST_CASE("torsion classification (spec triples + dual-path agreement)") {
    auto t1 = torsion_classification(Rational(8, 5), Integer(-15));
    CHECK(t1.code == TorsionCode::Z2xZ4);
    REQUIRE(t1.witness);
    CHECK(point_order(t1.witness->curve, t1.witness->point) == 4);
    CHECK(torsion_classification(Rational(8, 5), Integer(2)).code == TorsionCode::Z2xZ2);
    CHECK(torsion_classification(Rational(21, 16), Integer(-5)).code == TorsionCode::Z2xZ4);

    // dual-path agreement on sampled (L, d); the cross-assert lives inside
    SplitMix rng;
    std::vector<Integer> ds = {2, -2, 3, -3, 5, -5, 6, -6, 7, -7};
    int done = 0;
    while (done < 60) {
        Rational t = rng.rational(25);
        ParamPoint pp;
        try {
            pp = param_L(t);
        } catch (const DegenerateParameter&) {
            continue;
        }
        Integer d = ds[rng.below(ds.size())];
        auto tc = torsion_classification(pp.L, d);
        CHECK((tc.code == TorsionCode::Z2xZ4) == (d == tc.distinguished_d));
        ++done;
    }
}

TEST_CASE("rational critical point") {
    auto c2 = rational_critical_point(Rational(2));
    CHECK(c2.P == EllipticPoint<Rational>(Rational(3, 8), Rational(15, 32)));
    CHECK(c2.at_r); // at u = 2 the square value sits at r, not s
    CHECK(c2.nc.curve.rhs(c2.nc.s) == Rational(-49, 1728));

    auto c3 = rational_critical_point(Rational(3));
    CHECK(c3.P == EllipticPoint<Rational>(Rational(4, 9), Rational(20, 27)));

    auto ch = rational_critical_point(Rational(1, 2));
    CHECK(ch.nc.L == Rational(-39, 16));
    CHECK(on_curve(ch.nc.curve, ch.P));
    CHECK(!is_torsion(ch.nc.curve, ch.P));
}

TEST_CASE("rank-2 witnesses over Q(sqrt(-3))") {
    auto w2 = rank2_witnesses(Rational(2));
    CHECK(w2.P == EllipticPoint<Rational>(Rational(3, 8), Rational(15, 32)));
    CHECK(w2.Q.x == QuadExt::rational_in(Rational(7, 6), Integer(-3)));
    CHECK(w2.q.abs() == Rational(7, 72));
    CHECK(Rational(-49, 1728) == Rational(-3) * w2.q * w2.q);

    auto w3 = rank2_witnesses(Rational(3));
    CHECK(w3.Q.x == QuadExt::rational_in(Rational(2), Integer(-3)));
    CHECK(w3.q.abs() == Rational(2, 3));

    // exactly-one-square mechanism on sampled u
    SplitMix rng;
    int done = 0;
    while (done < 100) {
        Rational u = rng.rational(30);
        if (u.is_zero() || u == Rational(1) || u == Rational(-1)) continue;
        auto w = rank2_witnesses(u); // throws ContractViolation on any failure
        CHECK(!is_torsion(w.nc.curve, w.P));
        ++done;
    }
}

TEST_CASE("descent chain identities") {
    auto dw = descent_chain(Rational(8, 5), Rational(2));
    CHECK(dw.A == Rational(11, 10));
    CHECK(dw.B == Rational(49, 100));
    CHECK(dw.identity_holds);
    CHECK(dw.A * dw.A - Rational(4) * dw.B == Rational(-3, 4));
    CHECK(!dw.on_S); // 2 is not a shifted-psi3 root for L = 8/5

    auto dw1 = descent_chain(Rational(8, 5), Rational(1));
    CHECK(!dw1.on_S);
    CHECK(!dw1.shifted_psi3_root);

    CHECK_THROWS_AS(descent_chain(Rational(8, 5), Rational(0)), std::domain_error);

    // A^2 - 4B + 3/x^2 = 0 and on_S <-> shifted root, at random specializations
    SplitMix rng;
    int done = 0;
    while (done < 50) {
        Rational L = rng.rational(40), x = rng.rational(40, true);
        if (L.is_zero() || L == Rational(1)) continue;
        auto w = descent_chain(L, x);
        CHECK(w.identity_holds);
        CHECK(w.on_S == w.shifted_psi3_root);
        ++done;
    }
}

TEST_CASE("shifted psi3 displayed coefficients") {
    SplitMix rng;
    int done = 0;
    while (done < 50) {
        Rational L = rng.rational(40);
        if (L.is_zero() || L == Rational(1)) continue;
        Rational w = L * L - L + Rational(1);
        QPoly expect(std::vector<Rational>{-(w * w) / Rational(9),
                                           Rational(-4, 9) * (Rational(2) * L - Rational(1)) * (L + Rational(1)) * (L - Rational(2)),
                                           Rational(-2) * w, Rational(0), Rational(3)});
        CHECK(shifted_psi3(L) == expect);
        ++done;
    }
}

TEST_CASE("cusp parametrization and the cusp location") {
    CHECK(cusp_param(Rational(0)).A == Rational(3));
    CHECK(cusp_param(Rational(0)).B == Rational(9));
    CHECK(cusp_param(Rational(1)).A == Rational(2));
    CHECK(cusp_param(Rational(1)).B == Rational(5));
    CHECK(cusp_param(Rational(3)).A == Rational(-6));
    CHECK(cusp_param(Rational(3)).B == Rational(9));

    // partials vanish at (3, 9) and nowhere else on sampled outputs
    CuspCubicPoint cusp{Rational(3), Rational(9)};
    CHECK(on_cusp_cubic(cusp));
    CHECK(cusp_cubic_dA(cusp).is_zero());
    CHECK(cusp_cubic_dB(cusp).is_zero());

    // the discrepancy point (-3, 9/2) is not even on S
    CHECK(!on_cusp_cubic(CuspCubicPoint{Rational(-3), Rational(9, 2)}));

    SplitMix rng;
    for (int i = 0; i < 1000; ++i) {
        Rational t = rng.rational(50);
        CuspCubicPoint P = cusp_param(t);
        CHECK(on_cusp_cubic(P));
        if (!t.is_zero()) {
            CHECK(!(cusp_cubic_dA(P).is_zero() && cusp_cubic_dB(P).is_zero()));
        }
    }
}

TEST_CASE("sextic condition") {
    CHECK(*sextic_condition(Rational(0)) == Rational(1));
    CHECK(*sextic_condition(Rational(1)) == Rational(4));
    CHECK(*sextic_condition(Rational(1, 3)) == Rational(4, 9));
    CHECK(sextic_t(Rational(1, 3)) == Rational(2));
    CHECK(sextic_t(Rational(0)) == Rational(3));
    CHECK(sextic_t(Rational(1)) == Rational(0));
}

TEST_CASE("C -> H birational map on listed points") {
    // (1, 4, 1) -> the infinite point (1, -1, 0)
    WPPoint p1 = C_to_H(Rational(1), Rational(4), Rational(1));
    CHECK(p1 == WPPoint{Rational(1), Rational(-1), Rational(0)});
    // (0, 1, 1) -> (1/2, -1/16, -1/2) ~ (-1, -1)
    WPPoint p2 = C_to_H(Rational(0), Rational(1), Rational(1));
    CHECK(p2 == normalize_wp(Rational(1, 2), Rational(-1, 16), Rational(-1, 2), 4));
    CHECK(p2 == (WPPoint{Rational(-1), Rational(-1), Rational(1)}));
    // (3, 4, 9) -> (2/3, -1/27, -1/3) ~ (-2, -3)
    WPPoint p3 = C_to_H(Rational(3), Rational(4), Rational(9));
    CHECK(p3 == normalize_wp(Rational(2, 3), Rational(-1, 27), Rational(-1, 3), 4));
    CHECK(p3 == (WPPoint{Rational(-2), Rational(-3), Rational(1)}));

    CHECK_THROWS_AS(C_to_H(Rational(1), Rational(1), Rational(1)), std::domain_error);
}

TEST_CASE("conclude_no_3torsion on the pulled-back U list") {
    std::vector<Rational> Us = {Rational(1), Rational(1, 3), Rational(0), Rational(-1), Rational(-1, 3)};
    auto rep = conclude_no_3torsion(Us);
    CHECK(rep.pass);
    REQUIRE(rep.entries.size() == 5);
    for (auto& e : rep.entries) {
        CHECK(e.ok);
        if (e.U.is_zero()) {
            CHECK(e.contradiction_branch);
        } else {
            CHECK(e.norm_value == Rational(1));
        }
    }
}

TEST_CASE("auxiliary lemma curves") {
    auto rep = aux_lemma_curves_check();
    CHECK(rep.e1_ok);
    CHECK(rep.e2_ok);
    CHECK(rep.c_points_ok);
    CHECK(rep.j_ok);
    CHECK(rep.no_admissible_L);
    CHECK(rep.pass());
    REQUIRE(rep.j_torsion.size() == 4);
    // J: y^2 = x^3 + 2/3 x + 7/27 contains the 2-torsion point (-1/3, 0)
    EllipticCurve<Rational> J(Rational(0), Rational(2, 3), Rational(7, 27));
    bool found = false;
    for (auto& P : rep.j_torsion) {
        CHECK(on_curve(J, P));
        if (P == EllipticPoint<Rational>(Rational(-1, 3), Rational(0))) found = true;
    }
    CHECK(found);
}
