#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nicecurves/chabauty.hpp"
#include "nicecurves/sampling.hpp"

using namespace nicecurves;

namespace {

ColemanSetup hq_setup(int64_t p, int N = kDefaultPrecision) {
    HyperCurve Hq = HyperCurve::curve_Hq();
    return coleman_setup(Hq, p, N, mumford_from_point(Rational(0), Rational(-1)), search_points(Hq, 100));
}

} // namespace

TEST_CASE("setup validation") {
    HyperCurve Hq = HyperCurve::curve_Hq();
    auto gen = mumford_from_point(Rational(0), Rational(-1));
    auto known = search_points(Hq, 100);
    CHECK_THROWS_AS(coleman_setup(Hq, 2, 30, gen, known), PrimeUnusable); // p > 2g needed
    CHECK_THROWS_AS(coleman_setup(Hq, 3, 30, gen, known), PrimeUnusable);
    ColemanSetup s = hq_setup(5);
    CHECK(s.terms == 5 * 30 + 5);
}

TEST_CASE("residue disks and point reduction") {
    ColemanSetup s = hq_setup(5);
    auto disks = residue_points(s.curve, 5);
    CHECK(static_cast<long>(disks.size()) == count_points_Fp(s.curve, 5));
    CHECK(disks.size() == 8);
    // the 7 known points occupy 7 distinct disks at p = 5
    std::vector<DiskId> reduced;
    for (auto& P : s.known_points) reduced.push_back(reduce_point(P, 5));
    std::sort(reduced.begin(), reduced.end());
    CHECK(std::unique(reduced.begin(), reduced.end()) == reduced.end());
    CHECK(reduce_point(WPPoint{Rational(1), Rational(0), Rational(0)}, 5).infinite);
    // x with denominator divisible by p reduces into the infinite disk
    CHECK(reduce_point(WPPoint{Rational(1, 25), Rational(1), Rational(1)}, 5).infinite);
}

TEST_CASE("local expansion at the infinite disk: omega_0 ~ -(1/2) t^2 (1 + ...) dt") {
    ColemanSetup s = hq_setup(7);
    PadicSeries a0 = local_expansion_infinite(s, 0);
    CHECK(a0.coeff(0).is_exact_zero());
    CHECK(a0.coeff(1).is_exact_zero());
    CHECK(a0.coeff(2).same_value(PadicNumber::from_rational(Rational(-1, 2), 7, 30)));
    CHECK(a0.coeff(3).is_exact_zero()); // h is even
    PadicSeries a1 = local_expansion_infinite(s, 1);
    CHECK(a1.coeff(0).same_value(PadicNumber::from_rational(Rational(-1, 2), 7, 30)));
    // oracle by series composition: a_j * h = -(1/2) t^(2-2j) exactly, where
    // h^2(t) reproduces g(1/t^2) t^10 / lc termwise
    // (checked through the defining identity t^2 = 1/x in the parameter test below)
}

TEST_CASE("local expansion at a generic disk: a(0) = 1/(2 y0)") {
    ColemanSetup s = hq_setup(7);
    PadicNumber x0 = PadicNumber::from_integer(0, 7, 30);
    PadicNumber y0 = PadicNumber::from_integer(1, 7, 30);
    PadicSeries a0 = local_expansion_generic(s, x0, y0, 0);
    CHECK(a0.coeff(0).same_value(PadicNumber::from_rational(Rational(1, 2), 7, 30)));
    PadicSeries a1 = local_expansion_generic(s, x0, y0, 1);
    CHECK(a1.coeff(0).is_tracked_zero()); // x_R = 0 kills the j=1 constant term
}

TEST_CASE("local expansion at a Weierstrass disk has even parity") {
    ColemanSetup s = hq_setup(7);
    // (-1, 0) is a rational Weierstrass point of H_q
    PadicNumber xW = PadicNumber::from_integer(-1, 7, 30);
    for (int j : {0, 1}) {
        PadicSeries a = local_expansion_weierstrass(s, xW, j);
        for (size_t k = 1; k < a.coeffs().size(); k += 2) {
            CHECK(a.coeff(k).is_tracked_zero()); // odd coefficients vanish
        }
    }
    // omega_1 constant term is x_W * X'(0) = -1 / g'(-1)
    PadicSeries a0 = local_expansion_weierstrass(s, xW, 0);
    PadicSeries a1 = local_expansion_weierstrass(s, xW, 1);
    Rational gprime = HyperCurve::curve_Hq().g.derivative().eval(Rational(-1));
    CHECK(a0.coeff(0).same_value(PadicNumber::from_rational(gprime.inverse(), 7, 30)));
    CHECK(a1.coeff(0).same_value(PadicNumber::from_rational(-gprime.inverse(), 7, 30)));
}

TEST_CASE("tiny integrals: identity, antisymmetry, doubled-precision oracle") {
    // custom genus-2 odd curves with two rational points in one residue disk
    // generic disk at p = 5: g(0) = 1^2 and g(5) = 11^2
    HyperCurve Cgen(QPoly(std::vector<Rational>{Rational(1), Rational(-1), Rational(0), Rational(1), Rational(-5), Rational(1)}));
    CHECK(Cgen.g.eval(Rational(0)) == Rational(1));
    CHECK(Cgen.g.eval(Rational(5)) == Rational(121));
    REQUIRE(good_reduction(Cgen, 5));
    WPPoint P{Rational(0), Rational(1), Rational(1)}, Q{Rational(5), Rational(11), Rational(1)};
    ColemanSetup s = coleman_setup(Cgen, 5, 30, mumford_from_point(Rational(0), Rational(1)), {P, Q});

    for (int j : {0, 1}) {
        PadicNumber zero_int = tiny_integral(s, P, P, j);
        CHECK(zero_int.is_zero_mod(25));
        PadicNumber fwd = tiny_integral(s, P, Q, j);
        PadicNumber bwd = tiny_integral(s, Q, P, j);
        CHECK((fwd + bwd).is_zero_mod(20));
        CHECK(!fwd.is_tracked_zero());
        // doubled precision reproduces the value
        ColemanSetup s2 = coleman_setup(Cgen, 5, 60, s.generator, s.known_points);
        PadicNumber fwd2 = tiny_integral(s2, P, Q, j);
        CHECK(fwd.same_value(fwd2));
    }
    // different disks -> NotTiny
    WPPoint R{Rational(1), Rational(2), Rational(1)}; // g(1) = -4... check below
    if (on_curve(Cgen, R)) CHECK_THROWS_AS(tiny_integral(s, P, R, 0), NotTiny);
    CHECK_THROWS_AS(tiny_integral(s, P, WPPoint{Rational(1), Rational(0), Rational(0)}, 0), NotTiny);

    // Weierstrass disk at p = 5: g = x^5 + 1251x has g(0) = 0, g(25) = 3130^2
    // (disk points satisfy val(x - x_W) = 2 val(y), so x must move by p^2)
    HyperCurve Cw(QPoly(std::vector<Rational>{Rational(0), Rational(1251), Rational(0), Rational(0), Rational(0), Rational(1)}));
    CHECK(Cw.g.eval(Rational(25)) == Rational(3130) * Rational(3130));
    REQUIRE(good_reduction(Cw, 5));
    WPPoint W{Rational(0), Rational(0), Rational(1)}, Q2{Rational(25), Rational(3130), Rational(1)};
    ColemanSetup sw = coleman_setup(Cw, 5, 30, mumford_from_point(Rational(0), Rational(0)), {W, Q2});
    for (int j : {0, 1}) {
        PadicNumber fwd = tiny_integral(sw, W, Q2, j);
        PadicNumber bwd = tiny_integral(sw, Q2, W, j);
        CHECK((fwd + bwd).is_zero_mod(20));
    }
}

TEST_CASE("tiny integral linearity across the basis (fuzz over disk points)") {
    HyperCurve Cgen(QPoly(std::vector<Rational>{Rational(1), Rational(-1), Rational(0), Rational(1), Rational(-5), Rational(1)}));
    WPPoint P{Rational(0), Rational(1), Rational(1)}, Q{Rational(5), Rational(11), Rational(1)};
    ColemanSetup s = coleman_setup(Cgen, 5, 30, mumford_from_point(Rational(0), Rational(1)), {P, Q});
    // int (alpha w0 + w1) = alpha int w0 + int w1: evaluate both ways from the
    // expansions directly
    SplitMix rng;
    const auto F0 = local_expansion_generic(s, PadicNumber::from_integer(0, 5, 30), PadicNumber::from_integer(1, 5, 30), 0)
                        .antiderivative();
    const auto F1 = local_expansion_generic(s, PadicNumber::from_integer(0, 5, 30), PadicNumber::from_integer(1, 5, 30), 1)
                        .antiderivative();
    for (int it = 0; it < 20; ++it) {
        Rational alpha = rng.rational(20, true);
        PadicNumber al = PadicNumber::from_rational(alpha, 5, 30);
        PadicSeries combo = F0.scale(al) + F1;
        PadicNumber z = PadicNumber::from_integer(5, 5, 30); // parameter of Q
        PadicNumber lhs = combo.eval(z);
        PadicNumber rhs = al * F0.eval(z) + F1.eval(z);
        CHECK(lhs.same_value(rhs));
    }
}

TEST_CASE("infinite disk parameter satisfies t^2 = 1/x") {
    // artificial rational point in the infinite disk: curve fitted so that
    // x = 1/25 gives a rational square at p = 5 is hard to come by; instead
    // verify through the parameter of a Q_p-constructed point on H_q via the
    // kernel machinery exercised in generator_integrals (t^2 = 1/x is asserted
    // inside infinite_disk_parameter). Here: the assertion path triggers on a
    // synthetic x of positive valuation.
    ColemanSetup s = hq_setup(5);
    CHECK_THROWS_AS(infinite_disk_parameter(s, Rational(2), Rational(3)), DiskViolation);
}

TEST_CASE("generator integrals, annihilator, and their consistency at p=5") {
    ColemanSetup s = hq_setup(5);
    ClassIntegrals ints = generator_integrals(s);
    CHECK(ints.multiplier == 10);
    CHECK(!ints.I0.is_tracked_zero());
    CHECK(!ints.I1.is_tracked_zero());

    // linearity: integrals over n*m*gen equal those over m*gen after dividing
    // through by the multiplier, for several kernel multiples
    for (long n : {2L, 3L, 4L}) {
        ClassIntegrals intsn = generator_integrals(s, n);
        CHECK(intsn.multiplier == n * ints.multiplier);
        CHECK((intsn.I0 - ints.I0).is_zero_mod(20));
        CHECK((intsn.I1 - ints.I1).is_zero_mod(20));
    }

    Annihilator ann = annihilating_differential(s, ints.I0, ints.I1);
    // c0 I0 + c1 I1 = 0 by construction
    CHECK((ann.c0 * ints.I0 + ann.c1 * ints.I1).is_zero_mod(25));
    // normalization: min valuation is 0
    long v0 = ann.c0.is_tracked_zero() ? (1L << 30) : ann.c0.val();
    long v1 = ann.c1.is_tracked_zero() ? (1L << 30) : ann.c1.val();
    CHECK(std::min(v0, v1) == 0);
    // proportional result at doubled multiplier (projective equality)
    ClassIntegrals ints2 = generator_integrals(s, 2);
    Annihilator ann2 = annihilating_differential(s, ints2.I0, ints2.I1);
    CHECK((ann.c0 * ann2.c1 - ann.c1 * ann2.c0).is_zero_mod(20));

    CHECK_THROWS_AS(annihilating_differential(s, PadicNumber::zero_to(5, 30), PadicNumber::zero_to(5, 30)),
                    InsufficientPrecision);
}

TEST_CASE("torsion class integrals vanish") {
    ColemanSetup s = hq_setup(5);
    TorsionVanishing tv = torsion_class_integrals(s, 25);
    CHECK(tv.classes_checked == 3); // [(-1,0)-inf], [(-1/4,0)-inf], their sum
    CHECK(tv.all_vanish);
    CHECK(tv.worst_digits >= 25);
}

TEST_CASE("disk bounds at p = 5 (frozen from the engine run)") {
    ColemanSetup s = hq_setup(5);
    ClassIntegrals ints = generator_integrals(s);
    Annihilator ann = annihilating_differential(s, ints.I0, ints.I1);
    DiskBounds db = disk_zero_bounds(s, ann);
    CHECK(db.global_coleman == 10); // |C(F_5)| + 2 = 8 + 2
    CHECK(db.per_disk_total == 10);
    CHECK(db.certified == 10);
    REQUIRE(db.disks.size() == 8);
    int anchored = 0;
    long strass_sum = 0;
    for (auto& d : db.disks) {
        if (d.anchored) {
            anchored++;
            strass_sum += d.strassmann;
            CHECK(static_cast<long>(d.known_in_disk.size()) <= d.bound);
        } else {
            CHECK(d.bound == 1 + d.reduced_order);
        }
    }
    CHECK(anchored == 7);
    // the annihilator reduces to ~ (x+1) dx/2y: its divisor sits doubly on the
    // Weierstrass disk of (-1, 0), forcing that anchored Strassmann bound to 3
    CHECK(strass_sum == 9);
    bool found3 = false;
    for (auto& d : db.disks)
        if (d.anchored && d.strassmann == 3) {
            found3 = true;
            CHECK(d.known_in_disk.front() == (WPPoint{Rational(-1), Rational(0), Rational(1)}));
        }
    CHECK(found3);
}

TEST_CASE("pairwise difference classes are annihilated (21 pairs)") {
    ColemanSetup s = hq_setup(5);
    ClassIntegrals ints = generator_integrals(s);
    Annihilator ann = annihilating_differential(s, ints.I0, ints.I1);
    auto pairs = pairwise_difference_annihilation(s, ann, 25);
    CHECK(pairs.size() == 21);
    for (auto& pc : pairs) {
        CHECK(pc.vanished);
        CHECK(pc.certified_digits >= 25);
    }
}

TEST_CASE("kernel branches: infinite single, infinite pair, generic split, Weierstrass") {
    // curve with a rational point inside the infinite disk at p = 5:
    // g(6/25) = (3323/3125)^2
    HyperCurve Cinf(QPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(4), Rational(-6), Rational(-6), Rational(4)}));
    REQUIRE(good_reduction(Cinf, 5));
    WPPoint P{Rational(6, 25), Rational(3323, 3125), Rational(1)};
    REQUIRE(on_curve(Cinf, P));
    REQUIRE(reduce_point(P, 5).infinite);
    ColemanSetup s = coleman_setup(Cinf, 5, 30, mumford_from_point(P.X, P.Y), {P});

    // [P - inf] reduces to the identity: kernel multiplier 1, degree-1 branch
    auto X = mumford_from_point(P.X, P.Y);
    auto id5 = mumford_identity(Fp(1, 5));
    ClassIntegrals I1 = coleman_integrals_of_class(s, X, id5);
    CHECK(I1.multiplier == 1);
    CHECK(!I1.I0.is_tracked_zero());
    // independent route: the same integral as a tiny integral from infinity
    for (int j : {0, 1}) {
        PadicNumber direct = tiny_integral(s, WPPoint{Rational(1), Rational(0), Rational(0)}, P, j);
        CHECK(direct.same_value(j == 0 ? I1.I0 : I1.I1));
    }

    // 2[P - inf]: Mumford u = (x - x_P)^2 has val(u0) = -4, the symmetric
    // infinite-pair branch; must double the degree-1 values
    auto X2 = cantor_mul(Cinf.g, 2, X);
    CHECK(X2.u.degree() == 2);
    ClassIntegrals I2 = coleman_integrals_of_class(s, X2, id5);
    CHECK((I2.I0 - I1.I0.times_exact(2)).is_zero_mod(20));
    CHECK((I2.I1 - I1.I1.times_exact(2)).is_zero_mod(20));

    // generic split: [(0,1) - (5,11)] on the generic-disk test curve reduces to
    // the identity (both points share the disk of (0,1) mod 5)
    HyperCurve Cgen(QPoly(std::vector<Rational>{Rational(1), Rational(-1), Rational(0), Rational(1), Rational(-5), Rational(1)}));
    WPPoint A{Rational(0), Rational(1), Rational(1)}, B{Rational(5), Rational(11), Rational(1)};
    ColemanSetup sg = coleman_setup(Cgen, 5, 30, mumford_from_point(A.X, A.Y), {A, B});
    auto XG = cantor_sub(Cgen.g, mumford_from_point(A.X, A.Y), mumford_from_point(B.X, B.Y));
    auto XGp = cantor_sub(reduce_mod_p(Cgen.g, 5), reduce_point_class(Cgen, A, 5), reduce_point_class(Cgen, B, 5));
    CHECK(XGp.is_identity());
    ClassIntegrals IG = coleman_integrals_of_class(sg, XG, XGp);
    CHECK(IG.multiplier == 1);
    // independent route: int over [A - B] = tiny integral from B to A
    for (int j : {0, 1}) {
        PadicNumber direct = tiny_integral(sg, B, A, j);
        CHECK(direct.same_value(j == 0 ? IG.I0 : IG.I1));
    }

    // Weierstrass pair: [(0,0) - (25,3130)] on the Weierstrass test curve
    HyperCurve Cw(QPoly(std::vector<Rational>{Rational(0), Rational(1251), Rational(0), Rational(0), Rational(0), Rational(1)}));
    WPPoint W{Rational(0), Rational(0), Rational(1)}, Q{Rational(25), Rational(3130), Rational(1)};
    ColemanSetup sw = coleman_setup(Cw, 5, 30, mumford_from_point(W.X, W.Y), {W, Q});
    auto XW = cantor_sub(Cw.g, mumford_from_point(W.X, W.Y), mumford_from_point(Q.X, Q.Y));
    auto XWp = cantor_sub(reduce_mod_p(Cw.g, 5), reduce_point_class(Cw, W, 5), reduce_point_class(Cw, Q, 5));
    CHECK(XWp.is_identity());
    ClassIntegrals IW = coleman_integrals_of_class(sw, XW, XWp);
    for (int j : {0, 1}) {
        PadicNumber direct = tiny_integral(sw, Q, W, j);
        CHECK(direct.same_value(j == 0 ? IW.I0 : IW.I1));
    }
}

TEST_CASE("generator non-torsion certificate") {
    HyperCurve Hq = HyperCurve::curve_Hq();
    CHECK(class_is_non_torsion(Hq, mumford_from_point(Rational(0), Rational(-1))));
    // 2-torsion classes fail the certificate
    MumfordDivisor<Rational> T{QPoly(std::vector<Rational>{Rational(1), Rational(1)}), QPoly()};
    CHECK(!class_is_non_torsion(Hq, T));
    CHECK(!class_is_non_torsion(Hq, mumford_identity(Rational(1))));
}

TEST_CASE("certify_count: sweep verdict and negative control") {
    HyperCurve Hq = HyperCurve::curve_Hq();
    auto known = search_points(Hq, 100);
    // single-prime sweep keeps this test fast; the full p <= 50 sweep runs in
    // the acceptance suite
    auto res = certify_count(Hq, mumford_from_point(Rational(0), Rational(-1)), known, 7, 30);
    CHECK(res.generator_certified);
    REQUIRE(res.attempts.size() == 2);
    CHECK(res.attempts[0].p == 5);
    CHECK(res.attempts[0].success);
    CHECK(res.attempts[0].certified == 10);
    CHECK(res.best_bound == 10);
    CHECK(res.best_prime == 5);
    CHECK(!res.complete); // 10 > 7: Coleman bounds alone cannot close this curve

    // deliberately wrong generator (2-torsion): certification flags it
    MumfordDivisor<Rational> bad{QPoly(std::vector<Rational>{Rational(1), Rational(1)}), QPoly()};
    auto res2 = certify_count(Hq, bad, known, 50, 30);
    CHECK(!res2.generator_certified);
    CHECK(!res2.complete);
    CHECK(res2.attempts.empty());
}
