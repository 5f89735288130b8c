#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nicecurves/padic.hpp"
#include "nicecurves/sampling.hpp"

using namespace nicecurves;

namespace {
PadicNumber num(long q, int64_t p, int prec = kDefaultPrecision) {
    return PadicNumber::from_integer(Integer(q), p, prec);
}
PadicNumber rat(long a, long b, int64_t p, int prec = kDefaultPrecision) {
    return PadicNumber::from_rational(Rational(a, b), p, prec);
}
} // namespace

TEST_CASE("padic number representation and arithmetic") {
    PadicNumber x = num(50, 5); // 2 * 5^2
    CHECK(x.val() == 2);
    CHECK(x.unit() == 2);
    CHECK(x.prec() == kDefaultPrecision);
    CHECK(x.abs_prec() == 2 + kDefaultPrecision);

    PadicNumber half = rat(1, 2, 5);
    CHECK(half.val() == 0);
    CHECK((half + half).same_value(num(1, 5)));
    CHECK((half * num(2, 5)).same_value(num(1, 5)));

    // 1/5 has valuation -1
    CHECK(rat(1, 5, 5).val() == -1);

    // cancellation produces a tracked zero at the right absolute precision
    PadicNumber a = num(7, 5, 10), b = -num(7, 5, 10);
    PadicNumber z = a + b;
    CHECK(z.is_tracked_zero());
    CHECK(z.abs_prec() == 10);

    // inverse of a tracked zero is not allowed
    CHECK_THROWS_AS(z.inverse(), InsufficientPrecision);
    CHECK((num(3, 7) * num(3, 7).inverse()).same_value(num(1, 7)));

    // precision of a product is the min of the factors'
    PadicNumber lo = num(3, 7, 4), hi = num(5, 7, 20);
    CHECK((lo * hi).prec() == 4);
}

TEST_CASE("padic_sqrt examples") {
    // sqrt(4) = 2 at p = 7
    PadicNumber r = padic_sqrt(num(4, 7));
    CHECK(r.same_value(num(2, 7)));
    // sqrt(2) at p = 7: canonical root has residue 3 (3^2 = 2 mod 7, 3 <= (p-1)/2)
    PadicNumber s = padic_sqrt(num(2, 7));
    CHECK(s.leading_residue() == 3);
    CHECK((s * s).same_value(num(2, 7)));
    // squares mod 7 are {1, 2, 4}
    CHECK_THROWS_AS(padic_sqrt(num(5, 7)), NonResidue);
    CHECK_THROWS_AS(padic_sqrt(num(7, 7)), OddValuation);
    // even valuation scales out
    PadicNumber t = padic_sqrt(num(4 * 49, 7));
    CHECK(t.same_value(num(14, 7)));
}

TEST_CASE("padic_sqrt fuzz: sqrt(x^2) = +-x, square returns input") {
    SplitMix rng;
    for (int64_t p : {5, 7, 13}) {
        for (int i = 0; i < 350; ++i) {
            Rational q = rng.rational(200, true);
            PadicNumber x = PadicNumber::from_rational(q, p, kDefaultPrecision);
            if (x.val() % 2 != 0) continue; // odd-valuation squares can't arise from x^2... x^2 has even val; x arbitrary fine
            PadicNumber sq = x * x;
            PadicNumber r = padic_sqrt(sq);
            CHECK((r.same_value(x) || r.same_value(-x)));
            CHECK((r * r).same_value(sq));
            CHECK(r.leading_residue() <= (p - 1) / 2);
        }
    }
}

TEST_CASE("antiderivative basics") {
    int64_t p = 5;
    // t -> t^2/2
    PadicSeries s = PadicSeries::from_poly(QPoly(std::vector<Rational>{Rational(0), Rational(1)}), p, 20);
    PadicSeries F = s.antiderivative();
    CHECK(F.coeff(0).is_exact_zero());
    CHECK(F.coeff(1).is_exact_zero());
    CHECK(F.coeff(2).same_value(rat(1, 2, p, 20)));

    // finite sum of t^k -> sum t^(k+1)/(k+1)
    PadicSeries s2 = PadicSeries::from_poly(QPoly(std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(1)}), p, 20);
    PadicSeries F2 = s2.antiderivative();
    for (int k = 0; k < 4; ++k) CHECK(F2.coeff(k + 1).same_value(rat(1, k + 1, p, 20)));

    // coefficient at t^(p-1) divided by p: absolute precision drops by 1
    std::vector<PadicNumber> cs(p, PadicNumber::exact_zero(p));
    cs[p - 1] = num(1, p, 10); // abs prec 10
    PadicSeries s3 = PadicSeries::from_coeffs(p, cs, p, kValInf, kValInf);
    PadicSeries F3 = s3.antiderivative();
    CHECK(F3.coeff(p).val() == -1);
    CHECK(F3.coeff(p).abs_prec() == 9);
}

TEST_CASE("antiderivative is linear (fuzz)") {
    int64_t p = 7;
    SplitMix rng;
    for (int it = 0; it < 100; ++it) {
        std::vector<Rational> c1, c2;
        for (int k = 0; k < 12; ++k) {
            c1.push_back(rng.rational(50));
            c2.push_back(rng.rational(50));
        }
        Rational alpha = rng.rational(20, true);
        PadicSeries s1 = PadicSeries::from_poly(QPoly(std::move(c1)), p, 25);
        PadicSeries s2 = PadicSeries::from_poly(QPoly(std::move(c2)), p, 25);
        PadicNumber al = PadicNumber::from_rational(alpha, p, 25);
        PadicSeries lhs = (s1.scale(al) + s2).antiderivative();
        PadicSeries rhs = s1.antiderivative().scale(al) + s2.antiderivative();
        for (size_t k = 0; k < std::max(lhs.coeffs().size(), rhs.coeffs().size()); ++k)
            CHECK(lhs.coeff(k).same_value(rhs.coeff(k)));
    }
}

TEST_CASE("strassmann examples") {
    int64_t p = 5;
    // s = p + t^2 -> 2 (vals 1 and 0, min at index 2)
    PadicSeries s1 = PadicSeries::from_poly(QPoly(std::vector<Rational>{Rational(p), Rational(0), Rational(1)}), p, 20);
    CHECK(strassmann_bound(s1) == 2);
    // s = t -> 1
    PadicSeries s2 = PadicSeries::from_poly(QPoly(std::vector<Rational>{Rational(0), Rational(1)}), p, 20);
    CHECK(strassmann_bound(s2) == 1);
    // s = 1 + p t -> 0
    PadicSeries s3 = PadicSeries::from_poly(QPoly(std::vector<Rational>{Rational(1), Rational(p)}), p, 20);
    CHECK(strassmann_bound(s3) == 0);
    // uncertified minimum -> InsufficientPrecision
    std::vector<PadicNumber> cs{PadicNumber::zero_to(p, 0), num(1, p)};
    PadicSeries s4 = PadicSeries::from_coeffs(p, cs, 2, kValInf, kValInf);
    CHECK_THROWS_AS(strassmann_bound(s4), InsufficientPrecision);
}

TEST_CASE("strassmann subadditivity under products (fuzz)") {
    int64_t p = 5;
    SplitMix rng;
    int done = 0;
    while (done < 60) {
        std::vector<Rational> c1, c2;
        for (int k = 0; k < 6; ++k) {
            c1.push_back(Rational(rng.range(-20, 20)));
            c2.push_back(Rational(rng.range(-20, 20)));
        }
        QPoly p1(std::move(c1)), p2(std::move(c2));
        if (p1.is_zero() || p2.is_zero()) continue;
        PadicSeries s1 = PadicSeries::from_poly(p1, p, 25);
        PadicSeries s2 = PadicSeries::from_poly(p2, p, 25);
        long b1, b2, b12;
        try {
            b1 = strassmann_bound(s1);
            b2 = strassmann_bound(s2);
            b12 = strassmann_bound(s1 * s2);
        } catch (const InsufficientPrecision&) {
            continue;
        }
        CHECK(b12 <= b1 + b2);
        ++done;
    }
}

TEST_CASE("evaluate_symmetric") {
    int64_t p = 5;
    int N = 25;
    // s = t, u = t^2 - c with val(c) >= 2: power sum p1 = 0
    PadicNumber c = num(50, p, N); // val 2
    PadicSeries s_t = PadicSeries::from_poly(QPoly(std::vector<Rational>{Rational(0), Rational(1)}), p, N);
    ParamPoly u = ParamPoly::from_monic_quadratic(PadicNumber::exact_zero(p), -c);
    PadicNumber r = evaluate_symmetric(s_t, u);
    CHECK(r.is_tracked_zero());

    // s = t^2 -> p2 = 2c
    PadicSeries s_t2 = PadicSeries::from_poly(QPoly(std::vector<Rational>{Rational(0), Rational(0), Rational(1)}), p, N);
    PadicNumber r2 = evaluate_symmetric(s_t2, u);
    CHECK(r2.same_value(c.times_exact(2)));

    // split u = (t - a)(t - b): sum equals direct evaluation
    SplitMix rng;
    for (int it = 0; it < 100; ++it) {
        Rational aq(rng.range(-40, 40) * 5, 1 + 2 * static_cast<long>(rng.below(5)));
        Rational bq(rng.range(-40, 40) * 5, 1 + 2 * static_cast<long>(rng.below(5)));
        PadicNumber a = PadicNumber::from_rational(aq, p, N);
        PadicNumber b = PadicNumber::from_rational(bq, p, N);
        if (a.val_lower_bound() < 1 || b.val_lower_bound() < 1) continue;
        std::vector<Rational> cs;
        for (int k = 0; k < 9; ++k) cs.push_back(rng.rational(30));
        PadicSeries s = PadicSeries::from_poly(QPoly(std::move(cs)), p, N);
        ParamPoly uq = ParamPoly::quadratic(a + b, a * b);
        PadicNumber sym = evaluate_symmetric(s, uq);
        PadicNumber direct = s.eval(a) + s.eval(b);
        CHECK(sym.same_value(direct));
    }

    // roots outside the open disk are rejected
    ParamPoly bad = ParamPoly::quadratic(num(1, p, N), num(5, p, N));
    CHECK_THROWS_AS(evaluate_symmetric(s_t, bad), DiskViolation);
}

TEST_CASE("series_sqrt and series_inverse") {
    int64_t p = 7;
    int N = 25;
    // sqrt of 1 + 3t + t^2 with branch y0 = 1
    QPoly q(std::vector<Rational>{Rational(1), Rational(3), Rational(1)});
    PadicSeries s = PadicSeries::from_coeffs(
        p, {num(1, p, N), num(3, p, N), num(1, p, N)}, 40, kValInf, kValInf);
    PadicSeries y = series_sqrt(s, num(1, p, N));
    PadicSeries back = y * y;
    for (int k = 0; k < 3; ++k) CHECK(back.coeff(k).same_value(PadicNumber::from_rational(q.coeffs()[k], p, N)));
    for (size_t k = 3; k < back.coeffs().size(); ++k) CHECK(back.coeff(k).is_zero_mod(N - 2));

    PadicSeries inv = series_inverse(s);
    PadicSeries one = inv * s;
    CHECK(one.coeff(0).same_value(num(1, p, N)));
    for (size_t k = 1; k < one.coeffs().size(); ++k) CHECK(one.coeff(k).is_zero_mod(N - 2));
}

TEST_CASE("eval with tail bound caps precision") {
    int64_t p = 5;
    // series 1 + t with omitted terms of coefficient floor 0 beyond trunc 10:
    // eval at val(t)=1 is only known modulo p^10
    PadicSeries s = PadicSeries::from_coeffs(p, {num(1, p, 30), num(1, p, 30)}, 10, 0, 10);
    PadicNumber v = s.eval(num(5, p, 30));
    CHECK(v.abs_prec() == 10);
    CHECK_THROWS_AS(s.eval(num(1, p, 30)), DiskViolation);
}
