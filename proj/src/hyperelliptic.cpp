#include "nicecurves/hyperelliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nicecurves {

HyperCurve::HyperCurve(QPoly poly) : g(std::move(poly)) {
    if (g.degree() < 5 || g.degree() > 8) throw std::domain_error("HyperCurve: degree must be 5..8");
    if (poly_gcd(g, g.derivative()).degree() != 0) throw std::domain_error("HyperCurve: g not squarefree");
}

HyperCurve HyperCurve::curve_Hq() {
    return HyperCurve(QPoly(std::vector<Rational>{Rational(1), Rational(8), Rational(16), Rational(-2), Rational(-7), Rational(4)}));
}

HyperCurve HyperCurve::curve_H() {
    QPoly quadratic(std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    QPoly sextic(std::vector<Rational>{Rational(1), Rational(3), Rational(0), Rational(-5), Rational(0), Rational(3), Rational(1)});
    return HyperCurve(quadratic * sextic);
}

WPPoint normalize_wp(const Rational& X, const Rational& Y, const Rational& Z, int y_weight) {
    if (!Z.is_zero()) {
        Rational mu = Z.inverse();
        return WPPoint{X * mu, Y * mu.pow(y_weight), Rational(1)};
    }
    if (X.is_zero()) throw std::domain_error("WPPoint: (0 : * : 0) is not a point");
    Rational mu = X.inverse();
    return WPPoint{Rational(1), Y * mu.pow(y_weight), Rational(0)};
}

namespace {

Rational weighted_rhs(const HyperCurve& C, const Rational& X, const Rational& Z) {
    // Z^(2g+2) g(X/Z) as the homogeneous form sum c_i X^i Z^(2g+2-i)
    int top = 2 * C.genus() + 2;
    Rational acc(0);
    for (int i = 0; i <= C.degree(); ++i) {
        Rational c = C.g.coeffs()[i];
        if (c.is_zero()) continue;
        acc += c * X.pow(i) * Z.pow(top - i);
    }
    return acc;
}

__int128 to_int128(const Integer& v) {
    __int128 w = 0;
    Integer av = ::abs(v);
    for (int limb = static_cast<int>(mpz_size(av.get_mpz_t())); limb-- > 0;)
        w = (w << (8 * sizeof(mp_limb_t))) | mpz_getlimbn(av.get_mpz_t(), limb);
    return v < 0 ? -w : w;
}

bool square_residue_mod64(__int128 n) {
    static const uint64_t mask = [] {
        uint64_t m = 0;
        for (uint64_t i = 0; i < 64; ++i) m |= uint64_t(1) << ((i * i) & 63);
        return m;
    }();
    return (mask >> (static_cast<uint64_t>(n) & 63)) & 1;
}

std::optional<__int128> int128_sqrt_exact(__int128 n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return __int128(0);
    if (!square_residue_mod64(n)) return std::nullopt;
    long double approx = sqrtl(static_cast<long double>(n));
    __int128 r = static_cast<__int128>(approx);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r == n) return r;
    return std::nullopt;
}

} // namespace

bool on_curve(const HyperCurve& C, const WPPoint& P) {
    return P.Y * P.Y == weighted_rhs(C, P.X, P.Z);
}

std::vector<WPPoint> infinite_points(const HyperCurve& C) {
    std::vector<WPPoint> out;
    if (C.degree() % 2 == 1) {
        out.push_back(WPPoint{Rational(1), Rational(0), Rational(0)});
    } else if (auto s = is_square(C.g.leading())) {
        out.push_back(WPPoint{Rational(1), -*s, Rational(0)});
        if (!s->is_zero()) out.push_back(WPPoint{Rational(1), *s, Rational(0)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WPPoint> search_points(const HyperCurve& C, long bound) {
    if (bound < 1) throw std::domain_error("search_points: bound must be >= 1");
    std::vector<WPPoint> out = infinite_points(C);
    const int deg = C.degree();
    const bool odd = deg % 2 == 1;

    // denominator-cleared model: (m y)^2 = sum C_i x^i, C_i = m^2 g_i integers
    Integer m = 1;
    for (auto& c : C.g.coeffs()) {
        Integer d = c.den();
        Integer gg;
        mpz_gcd(gg.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
        m = m / gg * d;
    }
    Integer m2 = m * m;
    std::vector<Integer> ic;
    Integer maxc = 0;
    for (auto& c : C.g.coeffs()) {
        Integer v = c.num() * (m2 / c.den());
        ic.push_back(v);
        if (::abs(v) > maxc) maxc = ::abs(v);
    }

    // at x = a/b: (m y)^2 b^deg = V(a,b) := sum C_i a^i b^(deg-i);
    // probe V (even deg) or V*b (odd deg) for squareness.
    Integer worst = Integer(deg + 2) * maxc;
    for (int i = 0; i <= deg + 1; ++i) worst *= bound;
    const bool fast = worst < (Integer(1) << 124);

    auto record_hit = [&](long a, long b) {
        Rational x(a, b);
        auto ry = is_square(C.g.eval(x));
        if (!ry) return; // exact confirmation
        out.push_back(WPPoint{x, -*ry, Rational(1)});
        if (!ry->is_zero()) out.push_back(WPPoint{x, *ry, Rational(1)});
    };

    if (fast) {
        std::vector<__int128> fc;
        for (auto& v : ic) fc.push_back(to_int128(v));
        fc.resize(deg + 1, 0);
        for (long b = 1; b <= bound; ++b) {
            // bp[k] = b^k
            __int128 bp[10];
            bp[0] = 1;
            for (int k = 1; k <= deg; ++k) bp[k] = bp[k - 1] * b;
            for (long a = -bound; a <= bound; ++a) {
                if (std::gcd(std::labs(a), b) != 1) continue;
                __int128 acc = 0;
                for (int i = deg; i >= 0; --i) acc = acc * a + fc[i] * bp[deg - i];
                __int128 probe = odd ? acc * b : acc;
                if (int128_sqrt_exact(probe)) record_hit(a, b);
            }
        }
    } else {
        for (long b = 1; b <= bound; ++b) {
            for (long a = -bound; a <= bound; ++a) {
                if (std::gcd(std::labs(a), b) != 1) continue;
                record_hit(a, b);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

WPPoint quotient_map(const WPPoint& P) {
    if (P.is_infinite()) throw MapDegenerates("quotient_map: displayed formula vanishes at Z = 0");
    HyperCurve H = HyperCurve::curve_H();
    HyperCurve Hq = HyperCurve::curve_Hq();
    if (!on_curve(H, P)) throw std::domain_error("quotient_map: point not on H");
    const Rational &X = P.X, &Y = P.Y, &Z = P.Z;
    Rational A = X * Z.pow(5);
    Rational B = X * X * Y * Z.pow(12) - Y * Z.pow(14);
    Rational Cc = -(X * X * Z.pow(4)) - Rational(2) * X * Z.pow(5) - Z.pow(6);
    if (A.is_zero() && B.is_zero() && Cc.is_zero())
        throw MapDegenerates("quotient_map: image (0:0:0)");
    WPPoint img = normalize_wp(A, B, Cc, Hq.y_weight());
    if (!on_curve(Hq, img)) throw std::domain_error("quotient_map: image not on H_q");
    return img;
}

std::vector<WPPoint> pullback_points(const WPPoint& Q) {
    HyperCurve H = HyperCurve::curve_H();
    HyperCurve Hq = HyperCurve::curve_Hq();
    if (!on_curve(Hq, Q)) throw std::domain_error("pullback_points: point not on H_q");
    std::vector<WPPoint> out;

    auto push = [&](const WPPoint& cand) {
        if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    };

    // finite preimage with matched y-sign: y_q = -y (x-1)/(x+1)^5
    auto push_if_matches = [&](const Rational& x) {
        if (x == Rational(-1)) return; // lies over infinity, handled there
        Rational y2 = H.g.eval(x);
        auto ry = is_square(y2);
        if (!ry) return;
        for (int s : {1, -1}) {
            Rational y = Rational(s) * *ry;
            Rational yq = -(y * (x - Rational(1))) / (x + Rational(1)).pow(5);
            if (yq == Q.Y) push(WPPoint{x, y, Rational(1)});
            if (ry->is_zero()) break;
        }
    };

    if (Q.is_infinite()) {
        // x_q = -x/(x+1)^2 has its pole at x = -1; both y-branches map to infinity
        Rational y2 = H.g.eval(Rational(-1));
        if (auto ry = is_square(y2)) {
            push(WPPoint{Rational(-1), -*ry, Rational(1)});
            if (!ry->is_zero()) push(WPPoint{Rational(-1), *ry, Rational(1)});
        }
    } else if (Q.X.is_zero()) {
        push_if_matches(Rational(0));
        // the extended morphism sends the infinite points (1, eta, 0) to (0, -eta)
        for (const WPPoint& inf : infinite_points(H))
            if (-inf.Y == Q.Y) push(inf);
    } else {
        // a x^2 + (2a+1) x + a = 0 with a = x_q
        const Rational& a = Q.X;
        Rational bq = Rational(2) * a + Rational(1);
        Rational disc = bq * bq - Rational(4) * a * a;
        if (auto rd = is_square(disc)) {
            for (int s : {1, -1}) {
                Rational x = (-bq + Rational(s) * *rd) / (Rational(2) * a);
                push_if_matches(x);
                if (rd->is_zero()) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool good_reduction(const HyperCurve& C, int64_t p) {
    if (p < 3) return false;
    for (auto& c : C.g.coeffs())
        if (c.den() % p == 0) return false;
    if (C.g.leading().num() % p == 0) return false;
    UniPoly<Fp> gp = reduce_mod_p(C.g, p);
    if (gp.degree() != C.degree()) return false;
    return poly_gcd(gp, gp.derivative()).degree() == 0;
}

long count_points_Fp(const HyperCurve& C, int64_t p) {
    if (!good_reduction(C, p)) throw BadPrime("count_points_Fp: bad reduction at " + std::to_string(p));
    UniPoly<Fp> gp = reduce_mod_p(C.g, p);
    long count = 0;
    for (int64_t x = 0; x < p; ++x) {
        Fp v = gp.eval(Fp(x, p));
        count += 1 + v.legendre();
    }
    if (C.degree() % 2 == 1) {
        count += 1;
    } else {
        count += 1 + Fp::reduce(C.g.leading(), p).legendre();
    }
    return count;
}

long count_points_Fp2(const HyperCurve& C, int64_t p) {
    if (!good_reduction(C, p)) throw BadPrime("count_points_Fp2: bad reduction at " + std::to_string(p));
    int64_t n = Fp2::least_nonresidue(p);
    std::vector<Fp2> gc;
    for (auto& c : C.g.coeffs()) gc.push_back(Fp2::embed(Fp::reduce(c, p), n));
    UniPoly<Fp2> g2(std::move(gc));
    long count = 0;
    for (int64_t a = 0; a < p; ++a) {
        for (int64_t b = 0; b < p; ++b) {
            Fp2 x(Fp(a, p), Fp(b, p), n);
            Fp2 v = g2.eval(x);
            if (v.is_zero()) count += 1;
            else count += v.is_square() ? 2 : 0;
        }
    }
    // infinite points: 1 for odd degree; every F_p scalar is a square in F_{p^2}
    count += (C.degree() % 2 == 1) ? 1 : 2;
    return count;
}

long jacobian_order_Fp(const HyperCurve& C, int64_t p) {
    if (C.genus() != 2) throw std::domain_error("jacobian_order_Fp: genus 2 only");
    long N1 = count_points_Fp(C, p);
    long N2 = count_points_Fp2(C, p);
    long c1 = N1 - (p + 1);
    long c2 = (N2 - (p * p + 1) + c1 * c1) / 2;
    return 1 + c1 + c2 + p * c1 + p * p;
}

} // namespace nicecurves
