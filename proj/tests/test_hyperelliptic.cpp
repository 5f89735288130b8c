#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nicecurves/hyperelliptic.hpp"
#include "nicecurves/mumford.hpp"
#include "nicecurves/sampling.hpp"

using namespace nicecurves;

namespace {

WPPoint affine(long xn, long xd, long yn, long yd) {
    return WPPoint{Rational(xn, xd), Rational(yn, yd), Rational(1)};
}
WPPoint inf_pt(long y) { return WPPoint{Rational(1), Rational(y), Rational(0)}; }

std::vector<WPPoint> expected_Hq() {
    return {inf_pt(0),        affine(-1, 1, 0, 1), affine(-1, 4, 0, 1), affine(0, 1, -1, 1),
            affine(0, 1, 1, 1), affine(2, 1, -9, 1), affine(2, 1, 9, 1)};
}

std::vector<WPPoint> expected_H() {
    // the full 12-point list in canonical (Z=1 / X=1) form
    return {inf_pt(-1),          inf_pt(1),           affine(-2, 1, -3, 1), affine(-2, 1, 3, 1),
            affine(-1, 1, -1, 1), affine(-1, 1, 1, 1), affine(-1, 2, -3, 16), affine(-1, 2, 3, 16),
            affine(0, 1, -1, 1),  affine(0, 1, 1, 1),  affine(1, 1, -3, 1),  affine(1, 1, 3, 1)};
}

} // namespace

TEST_CASE("weighted normalization and equivalence") {
    HyperCurve H = HyperCurve::curve_H();
    // listed representative (2/3, -1/27, -1/3) ~ (-2, -3) after mu = -3
    WPPoint P = normalize_wp(Rational(2, 3), Rational(-1, 27), Rational(-1, 3), H.y_weight());
    CHECK(P == affine(-2, 1, -3, 1));
    CHECK(on_curve(H, P));
    // idempotent
    WPPoint P2 = normalize_wp(P.X, P.Y, P.Z, H.y_weight());
    CHECK(P2 == P);
    // respects (X, Y, Z) ~ (mu X, mu^(g+1) Y, mu Z)
    SplitMix rng;
    for (int i = 0; i < 200; ++i) {
        Rational mu = rng.rational(20, true);
        WPPoint Q = normalize_wp(P.X * mu, P.Y * mu.pow(4), P.Z * mu, H.y_weight());
        CHECK(Q == P);
    }
    // (3, 4, 9) on the sextic C maps through C_to_H elsewhere; here check H membership forms
    CHECK(on_curve(H, normalize_wp(Rational(1, 3), Rational(1, 27), Rational(-2, 3), 4)));
}

TEST_CASE("search H_q finds exactly the 7 points") {
    HyperCurve Hq = HyperCurve::curve_Hq();
    auto pts = search_points(Hq, 100);
    CHECK(pts == expected_Hq());
    for (auto& P : pts) CHECK(on_curve(Hq, P));
    // stable under the hyperelliptic involution
    for (auto& P : pts) {
        if (!P.is_infinite()) {
            WPPoint flip{P.X, -P.Y, P.Z};
            CHECK(std::find(pts.begin(), pts.end(), flip) != pts.end());
        }
    }
}

TEST_CASE("search H finds exactly the 12 points") {
    HyperCurve H = HyperCurve::curve_H();
    auto pts = search_points(H, 100);
    CHECK(pts == expected_H());
    for (auto& P : pts) CHECK(on_curve(H, P));
}

TEST_CASE("search on y^2 = x^6 + 1 (brute-force oracle)") {
    HyperCurve C(QPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}));
    auto pts = search_points(C, 2);
    // oracle by hand: x in {0, +-1, +-2, +-1/2}: only x = 0 gives a square (1);
    // leading coefficient 1 is square, so two infinite points
    std::vector<WPPoint> expect = {inf_pt(-1), inf_pt(1), affine(0, 1, -1, 1), affine(0, 1, 1, 1)};
    CHECK(pts == expect);
}

TEST_CASE("quotient map on the 12-list") {
    HyperCurve Hq = HyperCurve::curve_Hq();
    // (0, 1, -1) ~ (0, 1): maps to (0, 1)
    WPPoint p1 = normalize_wp(Rational(0), Rational(1), Rational(-1), 4);
    CHECK(quotient_map(p1) == affine(0, 1, 1, 1));
    // (1, 3, 1) -> (-1/4, 0)
    CHECK(quotient_map(affine(1, 1, 3, 1)) == affine(-1, 4, 0, 1));
    // (1/2, 1/16, -1/2) ~ (-1, 1) -> infinity of H_q
    WPPoint p3 = normalize_wp(Rational(1, 2), Rational(1, 16), Rational(-1, 2), 4);
    CHECK(quotient_map(p3) == inf_pt(0));
    // degenerate at infinity
    CHECK_THROWS_AS(quotient_map(inf_pt(1)), MapDegenerates);

    // every finite point of the 12-list lands in the 7-list
    auto seven = expected_Hq();
    for (auto& P : expected_H()) {
        if (P.is_infinite()) continue;
        WPPoint img = quotient_map(P);
        CHECK(std::find(seven.begin(), seven.end(), img) != seven.end());
    }
}

TEST_CASE("pullback of the 7-list is exactly the 12-list") {
    // spec examples
    CHECK(pullback_points(affine(-1, 4, 0, 1)) == std::vector<WPPoint>{affine(1, 1, -3, 1), affine(1, 1, 3, 1)});
    auto pre01 = pullback_points(affine(0, 1, 1, 1));
    CHECK(pre01 == std::vector<WPPoint>{inf_pt(-1), affine(0, 1, 1, 1)});
    auto pre29 = pullback_points(affine(2, 1, 9, 1));
    CHECK(pre29 == std::vector<WPPoint>{affine(-2, 1, -3, 1), affine(-1, 2, 3, 16)});

    std::vector<WPPoint> all;
    for (auto& Q : expected_Hq())
        for (auto& P : pullback_points(Q)) all.push_back(P);
    std::sort(all.begin(), all.end());
    CHECK(all == expected_H()); // no duplicates, full set

    // round trip: finite preimages map back to their source
    for (auto& Q : expected_Hq()) {
        for (auto& P : pullback_points(Q))
            if (!P.is_infinite()) CHECK(quotient_map(P) == Q);
    }
}

TEST_CASE("point counts over F_p and F_p^2") {
    // y^2 = x^5 + 1 over F_3: points (0,+-1), (2,0), inf
    HyperCurve C(QPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}));
    CHECK(count_points_Fp(C, 3) == 4);

    HyperCurve Hq = HyperCurve::curve_Hq();
    // brute-force oracle at the smallest good prime >= 5
    int64_t p = 5;
    while (!good_reduction(Hq, p)) p += 2;
    CHECK(p == 5);
    long brute = 1; // infinity
    for (int64_t x = 0; x < p; ++x)
        for (int64_t y = 0; y < p; ++y)
            if (Fp(y, p) * Fp(y, p) == reduce_mod_p(Hq.g, p).eval(Fp(x, p))) brute++;
    CHECK(count_points_Fp(Hq, p) == brute);
    CHECK(count_points_Fp(Hq, p) == 8);

    for (int64_t q : {5, 7, 11, 13}) {
        if (!good_reduction(Hq, q)) continue;
        CHECK(count_points_Fp2(Hq, q) >= count_points_Fp(Hq, q));
    }
    CHECK_THROWS_AS(count_points_Fp(Hq, 2), BadPrime);
}

TEST_CASE("cantor: identity, inverses, frozen doubling oracle") {
    HyperCurve Hq = HyperCurve::curve_Hq();
    const QPoly& f = Hq.g;
    auto D = mumford_from_point(Rational(0), Rational(-1)); // [(0,-1) - inf]
    REQUIRE(mumford_valid(f, D));
    auto id = mumford_identity(Rational(1));
    CHECK(cantor_add(f, D, id) == D);
    CHECK(cantor_add(f, D, cantor_neg(D)).is_identity());

    // independent oracle, explicit divisor reduction (worked out once by hand
    // and recomputed here with plain polynomial arithmetic):
    //   tangent-type function y - t(x), t = y_P + g'(x_P)/(2 y_P) (x - x_P)
    //   g - t^2 = u3 * 4x^2 with u3 = x(x + 1/4)(x - 2)
    //   residual class: v3 = Lagrange through (0,1), (-1/4,0), (2,9) = 4x + 1
    //   reduce once: u4 = monic((g - v3^2)/u3), v4 = -v3 mod u4
    QPoly t(std::vector<Rational>{Rational(-1), Rational(-4)});
    QPoly N = f - t * t;
    QPoly u3(std::vector<Rational>{Rational(0), Rational(-1, 2), Rational(-7, 4), Rational(1)});
    CHECK(N == u3 * QPoly(std::vector<Rational>{Rational(0), Rational(0), Rational(4)}));
    QPoly v3(std::vector<Rational>{Rational(1), Rational(4)});
    CHECK(v3.eval(Rational(0)) == Rational(1));
    CHECK(v3.eval(Rational(-1, 4)) == Rational(0));
    CHECK(v3.eval(Rational(2)) == Rational(9));
    QPoly u4 = ((f - v3 * v3) / u3).monic();
    QPoly v4 = (-v3) % u4;
    CHECK(u4 == QPoly(std::vector<Rational>{Rational(0), Rational(0), Rational(1)}));
    CHECK(v4 == QPoly(std::vector<Rational>{Rational(-1), Rational(-4)}));

    auto twoD = cantor_mul(f, 2, D);
    CHECK(twoD.u == u4);
    CHECK(twoD.v == v4);
    CHECK(mumford_valid(f, twoD));
}

TEST_CASE("cantor over F_p: group axioms and orders (fuzz)") {
    HyperCurve Hq = HyperCurve::curve_Hq();
    int64_t p = 7;
    REQUIRE(good_reduction(Hq, p));
    auto all = enumerate_jacobian_Fp(Hq, p);
    long n = jacobian_order_Fp(Hq, p);
    CHECK(static_cast<long>(all.size()) == n);

    UniPoly<Fp> f = reduce_mod_p(Hq.g, p);
    SplitMix rng;
    for (int i = 0; i < 1000; ++i) {
        auto& A = all[rng.below(all.size())];
        auto& B = all[rng.below(all.size())];
        auto& C = all[rng.below(all.size())];
        CHECK(cantor_add(f, A, B) == cantor_add(f, B, A));
        CHECK(cantor_add(f, cantor_add(f, A, B), C) == cantor_add(f, A, cantor_add(f, B, C)));
    }
    // closure + validity + Lagrange
    for (auto& A : all) {
        CHECK(mumford_valid(f, A));
        CHECK(cantor_mul(f, n, A).is_identity());
    }
}

TEST_CASE("order_in_JFp") {
    HyperCurve Hq = HyperCurve::curve_Hq();
    int64_t p = 7;
    REQUIRE(good_reduction(Hq, p));
    auto id = mumford_identity(Fp(1, p));
    CHECK(order_in_group(reduce_mod_p(Hq.g, p), id, jacobian_order_Fp(Hq, p)) == 1);

    // 2-torsion Weierstrass class u = x + 1, v = 0 (g(-1) = 0 over Q)
    CHECK(Hq.g.eval(Rational(-1)).is_zero());
    MumfordDivisor<Fp> T{UniPoly<Fp>(std::vector<Fp>{Fp(1, p), Fp(1, p)}), UniPoly<Fp>()};
    REQUIRE(mumford_valid(reduce_mod_p(Hq.g, p), T));
    CHECK(order_in_JFp(Hq, T, p) == 2);

    // generator class [(0,-1) - inf]: m D = 0 and (m/q) D != 0
    auto D = reduce_point_class(Hq, WPPoint{Rational(0), Rational(-1), Rational(1)}, p);
    long m = order_in_JFp(Hq, D, p);
    UniPoly<Fp> f = reduce_mod_p(Hq.g, p);
    CHECK(cantor_mul(f, m, D).is_identity());
    for (auto& [q, e] : factor(Integer(m))) {
        long mq = m / q.get_si();
        CHECK(!cantor_mul(f, mq, D).is_identity());
    }
    CHECK(jacobian_order_Fp(Hq, p) % m == 0);
}

TEST_CASE("jacobian order matches enumeration at the two smallest good primes <= 11") {
    HyperCurve Hq = HyperCurve::curve_Hq();
    std::vector<int64_t> good;
    for (int64_t p : {5, 7, 11})
        if (good_reduction(Hq, p)) good.push_back(p);
    REQUIRE(good.size() >= 2);
    for (size_t i = 0; i < 2; ++i) {
        auto all = enumerate_jacobian_Fp(Hq, good[i]);
        CHECK(static_cast<long>(all.size()) == jacobian_order_Fp(Hq, good[i]));
    }
}

TEST_CASE("reduction commutes with cantor doubling") {
    HyperCurve Hq = HyperCurve::curve_Hq();
    auto D = mumford_from_point(Rational(0), Rational(-1));
    auto twoD = cantor_mul(Hq.g, 2, D);
    for (int64_t p : {5, 7, 11, 13}) {
        if (!good_reduction(Hq, p)) continue;
        UniPoly<Fp> f = reduce_mod_p(Hq.g, p);
        auto Dp = reduce_point_class(Hq, WPPoint{Rational(0), Rational(-1), Rational(1)}, p);
        auto lhs = cantor_mul(f, 2, Dp);
        MumfordDivisor<Fp> rhs{reduce_mod_p(twoD.u, p), reduce_mod_p(twoD.v, p)};
        CHECK(lhs == rhs);
    }
}
