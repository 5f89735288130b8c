#include "nicecurves/chabauty.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace nicecurves {

namespace {

PadicNumber padic_of(const Rational& q, int64_t p, int N) { return PadicNumber::from_rational(q, p, N); }

PadicNumber padic_poly_eval(const QPoly& f, const PadicNumber& x, int N) {
    PadicNumber acc = PadicNumber::exact_zero(x.p());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * x + padic_of(*it, x.p(), N);
    return acc;
}

/// simple root of g above the residue xi (g'(xi) a unit), Newton-lifted
PadicNumber hensel_root(const QPoly& g, int64_t xi, int64_t p, int N) {
    QPoly gp = g.derivative();
    PadicNumber x = PadicNumber::from_integer(Integer(xi), p, N);
    for (int it = 0; it < 64; ++it) {
        PadicNumber fx = padic_poly_eval(g, x, N);
        if (fx.is_zero_mod(N)) break;
        PadicNumber step = fx / padic_poly_eval(gp, x, N);
        x = x - step;
    }
    if (!padic_poly_eval(g, x, N).is_zero_mod(N - 1))
        throw PrimeUnusable("hensel_root: Newton failed to converge");
    return x;
}

/// quadratic algebra Q_p[X]/(X^2 + q1 X + q0) for symmetric evaluations at
/// the two roots of a Mumford u-polynomial
struct QuadAlgebra {
    PadicNumber q1, q0;
};
struct AlgElem {
    PadicNumber a, b; // a + b*xhat
};

AlgElem alg_mul(const QuadAlgebra& A, const AlgElem& x, const AlgElem& y) {
    // (a1 + b1 X)(a2 + b2 X), X^2 = -q1 X - q0
    PadicNumber bb = x.b * y.b;
    return {x.a * y.a - bb * A.q0, x.a * y.b + x.b * y.a - bb * A.q1};
}
AlgElem alg_inverse(const QuadAlgebra& A, const AlgElem& x) {
    // (a + bX)^-1 = ((a - b q1) - b X) / N(x), N(x) = a^2 - a b q1 + b^2 q0
    PadicNumber n = x.a * x.a - x.a * x.b * A.q1 + x.b * x.b * A.q0;
    PadicNumber ninv = n.inverse();
    return {(x.a - x.b * A.q1) * ninv, -(x.b * ninv)};
}
PadicNumber alg_trace(const QuadAlgebra& A, const AlgElem& x) { return x.a.times_exact(2) - x.b * A.q1; }
PadicNumber alg_norm(const QuadAlgebra& A, const AlgElem& x) {
    return x.a * x.a - x.a * x.b * A.q1 + x.b * x.b * A.q0;
}

/// Horner evaluation of a series at an algebra element; the omitted-term
/// error on the two root-evaluations has valuation >= the returned cap.
struct AlgSeriesValue {
    AlgElem value;
    long eval_error_floor;
};
AlgSeriesValue eval_series_at_elem(const PadicSeries& s, const QuadAlgebra& A, const AlgElem& w, long root_vals2) {
    int64_t p = s.p();
    AlgElem acc{PadicNumber::exact_zero(p), PadicNumber::exact_zero(p)};
    for (size_t k = s.coeffs().size(); k-- > 0;) {
        acc = alg_mul(A, acc, w);
        acc.a = acc.a + s.coeffs()[k];
    }
    long cap = kValInf;
    if (s.coeff_floor() < kValInf) cap = s.coeff_floor() + (s.trunc() * root_vals2) / 2;
    return {acc, cap};
}

} // namespace

namespace {
std::pair<PadicSeries, PadicSeries> build_infinite_pair(const ColemanSetup& s);
std::pair<PadicSeries, PadicSeries> build_weierstrass_pair(const ColemanSetup& s, const PadicNumber& x_W);
std::pair<PadicSeries, PadicSeries> build_generic_pair(const ColemanSetup& s, const PadicNumber& x_R,
                                                       const PadicNumber& y_R);
} // namespace

/// Antiderivative pairs (F0, F1) of the basis differentials per disk center,
/// built once per setup (the series work dominates the runtime).
struct ExpansionCache {
    std::optional<std::pair<PadicSeries, PadicSeries>> infinite;
    std::optional<PadicSeries> H_of_w;
    std::map<int64_t, std::pair<PadicSeries, PadicSeries>> weierstrass; // by residue of x_W
    std::map<std::string, std::pair<PadicSeries, PadicSeries>> generic; // by center coordinates
};

namespace {

const std::pair<PadicSeries, PadicSeries>& infinite_antiderivatives(const ColemanSetup& s) {
    if (!s.cache->infinite) {
        auto pair = build_infinite_pair(s);
        s.cache->infinite = std::make_pair(pair.first.antiderivative(), pair.second.antiderivative());
    }
    return *s.cache->infinite;
}

const PadicSeries& cached_H_of_w(const ColemanSetup& s) {
    if (!s.cache->H_of_w) {
        Rational lc = s.curve.g.leading();
        std::vector<Rational> hw;
        for (int i = 5; i >= 0; --i) hw.push_back(s.curve.g.coeffs()[i] / lc);
        long Mw = s.terms / 2 + 2;
        PadicSeries Hw2 = PadicSeries::from_poly(QPoly(std::move(hw)), s.p, s.precision).with_trunc(Mw);
        s.cache->H_of_w = series_sqrt(Hw2, PadicNumber::from_integer(1, s.p, s.precision));
    }
    return *s.cache->H_of_w;
}

const std::pair<PadicSeries, PadicSeries>& weierstrass_antiderivatives(const ColemanSetup& s, const PadicNumber& x_W,
                                                                       int64_t residue) {
    auto it = s.cache->weierstrass.find(residue);
    if (it == s.cache->weierstrass.end()) {
        auto pair = build_weierstrass_pair(s, x_W);
        it = s.cache->weierstrass
                 .emplace(residue, std::make_pair(pair.first.antiderivative(), pair.second.antiderivative()))
                 .first;
    }
    return it->second;
}

const std::pair<PadicSeries, PadicSeries>& generic_antiderivatives(const ColemanSetup& s, const PadicNumber& x_R,
                                                                   const PadicNumber& y_R) {
    std::string key = x_R.str() + "|" + y_R.str();
    auto it = s.cache->generic.find(key);
    if (it == s.cache->generic.end()) {
        auto pair = build_generic_pair(s, x_R, y_R);
        it = s.cache->generic.emplace(key, std::make_pair(pair.first.antiderivative(), pair.second.antiderivative()))
                 .first;
    }
    return it->second;
}

} // namespace

ColemanSetup coleman_setup(const HyperCurve& curve, int64_t p, int precision,
                           const MumfordDivisor<Rational>& generator, std::vector<WPPoint> known_points) {
    if (curve.genus() != 2 || curve.degree() != 5)
        throw std::domain_error("coleman_setup: genus-2 odd-degree model required");
    if (p < 5) throw PrimeUnusable("coleman_setup: need p > 2*genus");
    if (!good_reduction(curve, p)) throw BadPrime("coleman_setup: bad reduction at " + std::to_string(p));
    if (!mumford_valid(curve.g, generator)) throw std::domain_error("coleman_setup: generator not on the Jacobian");
    for (auto& P : known_points)
        if (!on_curve(curve, P)) throw std::domain_error("coleman_setup: known point off curve");
    // the infinite-disk parametrization needs sqrt(lc) in Q_p
    padic_sqrt(padic_of(curve.g.leading(), p, precision));
    long terms = p * static_cast<long>(precision) + p;
    return ColemanSetup{curve, p, precision, terms, generator, std::move(known_points),
                        std::make_shared<ExpansionCache>()};
}

DiskId reduce_point(const WPPoint& P, int64_t p) {
    if (P.is_infinite()) return DiskId{true, 0, 0};
    if (P.X.den() % p == 0) return DiskId{true, 0, 0};
    Fp x = Fp::reduce(P.X, p), y = Fp::reduce(P.Y, p);
    return DiskId{false, x.v, y.v};
}

std::vector<DiskId> residue_points(const HyperCurve& curve, int64_t p) {
    UniPoly<Fp> g = reduce_mod_p(curve.g, p);
    std::vector<DiskId> out;
    out.push_back(DiskId{true, 0, 0});
    for (int64_t x = 0; x < p; ++x) {
        Fp v = g.eval(Fp(x, p));
        if (v.is_zero()) {
            out.push_back(DiskId{false, x, 0});
        } else if (auto r = v.sqrt()) {
            out.push_back(DiskId{false, x, std::min(r->v, p - r->v)});
            out.push_back(DiskId{false, x, std::max(r->v, p - r->v)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

/// both infinite-disk expansions a_j(t), omega_j = a_j dt, sharing H and h^-1
std::pair<PadicSeries, PadicSeries> build_infinite_pair(const ColemanSetup& s) {
    int64_t p = s.p;
    int N = s.precision;
    const QPoly& g = s.curve.g;
    // H(w)^2 = g(1/w) w^5 / lc = 1 + (g4/lc) w + ... + (g0/lc) w^5
    Rational lc = g.leading();
    std::vector<Rational> hw;
    for (int i = 5; i >= 0; --i) hw.push_back(g.coeffs()[i] / lc);
    long Mw = s.terms / 2 + 2;
    PadicSeries Hw2 = PadicSeries::from_poly(QPoly(std::move(hw)), p, N).with_trunc(Mw);
    PadicSeries H = series_sqrt(Hw2, PadicNumber::from_integer(1, p, N));
    // h(t) = H(t^2)
    std::vector<PadicNumber> ht(2 * H.coeffs().size() - 1, PadicNumber::exact_zero(p));
    for (size_t k = 0; k < H.coeffs().size(); ++k) ht[2 * k] = H.coeffs()[k];
    PadicSeries h = PadicSeries::from_coeffs(p, std::move(ht), 2 * Mw, 0, 2 * Mw).with_trunc(s.terms);
    PadicSeries hinv = series_inverse(h);
    // omega_j = -(1/sqrt(lc)) t^(2-2j) h(t)^-1 dt
    PadicNumber c = -(PadicNumber::from_integer(1, p, N) / padic_sqrt(padic_of(lc, p, N)));
    PadicSeries base = hinv.scale(c);
    return {base.times_tpow(2), base};
}

} // namespace

PadicSeries local_expansion_infinite(const ColemanSetup& s, int j) {
    if (j != 0 && j != 1) throw std::domain_error("local_expansion: j must be 0 or 1");
    auto pair = build_infinite_pair(s);
    return j == 0 ? pair.first : pair.second;
}

namespace {

/// substitute u = z^2 into a series in u
PadicSeries interleave_square(const PadicSeries& base, long out_trunc) {
    int64_t p = base.p();
    std::vector<PadicNumber> cz(base.coeffs().empty() ? 0 : 2 * base.coeffs().size() - 1,
                                PadicNumber::exact_zero(p));
    for (size_t k = 0; k < base.coeffs().size(); ++k) cz[2 * k] = base.coeffs()[k];
    long cf = base.coeff_floor();
    return PadicSeries::from_coeffs(p, std::move(cz), 2 * base.trunc(), cf,
                                    cf >= kValInf ? kValInf : cf + 2 * base.trunc())
        .with_trunc(out_trunc);
}

/// both Weierstrass-disk expansions a_j(z), z = y: a_j = X(z^2)^j X'(z^2)
std::pair<PadicSeries, PadicSeries> build_weierstrass_pair(const ColemanSetup& s, const PadicNumber& x_W) {
    int64_t p = s.p;
    int N = s.precision;
    long Ms = s.terms / 2 + 2;
    QPoly gp = s.curve.g.derivative();

    // X(u) with g(X(u)) = u, X(0) = x_W, Newton at doubling truncations
    PadicSeries X = PadicSeries::from_coeffs(p, {x_W}, 2, kValInf, kValInf);
    for (long len = 2; len / 2 < Ms; len *= 2) {
        long cur = std::min(len, Ms);
        X = X.with_trunc(cur);
        PadicSeries u_series =
            PadicSeries::from_coeffs(p, {PadicNumber::exact_zero(p), PadicNumber::from_integer(1, p, N)}, cur,
                                     kValInf, kValInf);
        auto eval_poly = [&](const QPoly& f, const PadicSeries& at) {
            PadicSeries acc(p, cur);
            for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
                PadicSeries cterm = PadicSeries::from_coeffs(p, {padic_of(*it, p, N)}, cur, kValInf, kValInf);
                acc = acc * at + cterm;
            }
            return acc;
        };
        PadicSeries num = eval_poly(s.curve.g, X) - u_series;
        PadicSeries den = eval_poly(gp, X);
        X = X - num * series_inverse(den);
        if (cur == Ms) break;
    }
    X = X.with_trunc(Ms);
    {
        // converged when g(X) = u to the working precision
        PadicSeries u_series =
            PadicSeries::from_coeffs(p, {PadicNumber::exact_zero(p), PadicNumber::from_integer(1, p, N)}, Ms,
                                     kValInf, kValInf);
        PadicSeries acc(p, Ms);
        for (auto it = s.curve.g.coeffs().rbegin(); it != s.curve.g.coeffs().rend(); ++it) {
            PadicSeries cterm = PadicSeries::from_coeffs(p, {padic_of(*it, p, N)}, Ms, kValInf, kValInf);
            acc = acc * X + cterm;
        }
        PadicSeries resid = acc - u_series;
        for (auto& ck : resid.coeffs())
            if (!ck.is_tracked_zero() && ck.val() < s.precision - 2)
                throw PrimeUnusable("weierstrass expansion: Newton did not converge");
    }
    std::vector<PadicNumber> d;
    for (size_t k = 1; k < X.coeffs().size(); ++k) d.push_back(X.coeffs()[k].times_exact(Integer(k)));
    PadicSeries Xp = PadicSeries::from_coeffs(p, std::move(d), Ms, X.coeff_floor(), X.coeff_floor());
    return {interleave_square(Xp, s.terms), interleave_square((X * Xp).with_trunc(Ms), s.terms)};
}

} // namespace

PadicSeries local_expansion_weierstrass(const ColemanSetup& s, const PadicNumber& x_W, int j) {
    if (j != 0 && j != 1) throw std::domain_error("local_expansion: j must be 0 or 1");
    auto pair = build_weierstrass_pair(s, x_W);
    return j == 0 ? pair.first : pair.second;
}

namespace {

/// both generic-disk expansions a_j(z), z = x - x_R, sharing sqrt and inverse
std::pair<PadicSeries, PadicSeries> build_generic_pair(const ColemanSetup& s, const PadicNumber& x_R,
                                                       const PadicNumber& y_R) {
    int64_t p = s.p;
    int N = s.precision;
    if (y_R.is_tracked_zero() || y_R.val() != 0)
        throw std::domain_error("local_expansion_generic: center must have unit y");
    // g(x_R + z) via Horner in (z + x_R); the polynomial itself is exact, so
    // build it at degree resolution and only then truncate
    PadicSeries acc(p, kValInf);
    PadicSeries lin =
        PadicSeries::from_coeffs(p, {x_R, PadicNumber::from_integer(1, p, N)}, kValInf, kValInf, kValInf);
    for (auto it = s.curve.g.coeffs().rbegin(); it != s.curve.g.coeffs().rend(); ++it) {
        PadicSeries cterm = PadicSeries::from_coeffs(p, {padic_of(*it, p, N)}, kValInf, kValInf, kValInf);
        acc = acc * lin + cterm;
    }
    PadicSeries y = series_sqrt(acc.with_trunc(s.terms), y_R);
    PadicSeries inv2y = series_inverse(y.scale(PadicNumber::from_integer(2, p, N)));
    return {inv2y, (inv2y * lin.with_trunc(s.terms)).with_trunc(s.terms)};
}

} // namespace

PadicSeries local_expansion_generic(const ColemanSetup& s, const PadicNumber& x_R, const PadicNumber& y_R, int j) {
    if (j != 0 && j != 1) throw std::domain_error("local_expansion: j must be 0 or 1");
    auto pair = build_generic_pair(s, x_R, y_R);
    return j == 0 ? pair.first : pair.second;
}

PadicSeries local_expansion(const ColemanSetup& s, const WPPoint& center, int j) {
    DiskId d = reduce_point(center, s.p);
    if (d.infinite) return local_expansion_infinite(s, j);
    int N = s.precision;
    PadicNumber gx = padic_poly_eval(s.curve.g, padic_of(center.X, s.p, N), N);
    if (d.y == 0 && gx.is_zero_mod(1)) {
        if (!center.Y.is_zero()) throw std::domain_error("local_expansion: Weierstrass disk centers at y = 0");
        return local_expansion_weierstrass(s, padic_of(center.X, s.p, N), j);
    }
    return local_expansion_generic(s, padic_of(center.X, s.p, N), padic_of(center.Y, s.p, N), j);
}

PadicNumber infinite_disk_parameter(const ColemanSetup& s, const Rational& x, const Rational& y) {
    int64_t p = s.p;
    int N = s.precision;
    PadicNumber xp = padic_of(x, p, N), yp = padic_of(y, p, N);
    if (xp.is_tracked_zero() || xp.val() >= 0) throw DiskViolation("infinite_disk_parameter: point not in the disk");
    // t = sqrt(lc) x^2 H(1/x) / y with H as in the infinite expansion
    const PadicSeries& H = cached_H_of_w(s);
    PadicNumber w = xp.inverse();
    PadicNumber Hval = H.eval(w);
    PadicNumber t = padic_sqrt(padic_of(s.curve.g.leading(), p, N)) * xp * xp * Hval / yp;
    // t^2 = 1/x exactly; sanity within tracked precision
    if (!(t * t).same_value(w)) throw PrimeUnusable("infinite_disk_parameter: t^2 != 1/x");
    return t;
}

PadicNumber tiny_integral(const ColemanSetup& s, const WPPoint& P, const WPPoint& Q, int j) {
    DiskId dp = reduce_point(P, s.p), dq = reduce_point(Q, s.p);
    if (!(dp == dq)) throw NotTiny("tiny_integral: points reduce to different disks");
    int N = s.precision;
    if (dp.infinite) {
        PadicSeries F = local_expansion_infinite(s, j).antiderivative();
        PadicNumber tP = P.is_infinite() ? PadicNumber::exact_zero(s.p) : infinite_disk_parameter(s, P.X, P.Y);
        PadicNumber tQ = Q.is_infinite() ? PadicNumber::exact_zero(s.p) : infinite_disk_parameter(s, Q.X, Q.Y);
        return F.eval(tQ) - F.eval(tP);
    }
    PadicNumber gx = padic_poly_eval(s.curve.g, PadicNumber::from_integer(Integer(dp.x), s.p, N), N);
    if (dp.y == 0 && gx.is_zero_mod(1)) {
        // Weierstrass disk: center at the Q_p-rational Weierstrass point, z = y
        PadicNumber xW = hensel_root(s.curve.g, dp.x, s.p, N);
        PadicSeries F = local_expansion_weierstrass(s, xW, j).antiderivative();
        return F.eval(padic_of(Q.Y, s.p, N)) - F.eval(padic_of(P.Y, s.p, N));
    }
    // generic disk: expand at P, evaluate at z = x(Q) - x(P)
    PadicSeries F = local_expansion_generic(s, padic_of(P.X, s.p, N), padic_of(P.Y, s.p, N), j).antiderivative();
    return F.eval(padic_of(Q.X - P.X, s.p, N));
}

namespace {

/// Integrals of (omega_0, omega_1) over a kernel-of-reduction representative:
/// every piece is a tiny integral anchored at the disk centers; 2-torsion
/// shifts [R + iota(R) - 2 inf] = div(x - x_R) contribute nothing.
std::pair<PadicNumber, PadicNumber> kernel_integrals(const ColemanSetup& s, const MumfordDivisor<Rational>& Dm) {
    int64_t p = s.p;
    int N = s.precision;
    PadicNumber zero = PadicNumber::exact_zero(p);
    if (Dm.is_identity()) return {zero, zero};

    if (Dm.u.degree() == 1) {
        // single point [P1 - inf], P1 in the infinite disk
        Rational x1 = -Dm.u[0];
        Rational y1 = Dm.v.is_zero() ? Rational(0) : Dm.v[0];
        PadicNumber t1 = infinite_disk_parameter(s, x1, y1);
        const auto& [F0, F1] = infinite_antiderivatives(s);
        return {F0.eval(t1), F1.eval(t1)};
    }

    // deg u = 2
    Rational u1q = Dm.u[1], u0q = Dm.u[0];
    Rational v0q = Dm.v.is_zero() ? Rational(0) : Dm.v[0];
    Rational v1q = Dm.v.degree() >= 1 ? Dm.v[1] : Rational(0);
    PadicNumber u1 = padic_of(u1q, p, N), u0 = padic_of(u0q, p, N);
    PadicNumber v0 = padic_of(v0q, p, N), v1 = padic_of(v1q, p, N);

    bool infinite_pair = !u0.is_tracked_zero() && u0.val() < 0;
    if (infinite_pair) {
        // both Mumford roots at infinity: parameters t_i with t_i^2 = 1/x_i,
        // extracted symmetrically in B = Q_p[x]/(u)
        QuadAlgebra B{u1, u0};
        PadicNumber u0inv = u0.inverse();
        AlgElem w{-(u1 * u0inv), -u0inv}; // 1/xhat
        // both w-roots need val >= 2 (i.e. val(sum) >= 2, val(product) >= 4)
        PadicNumber wsum = alg_trace(B, w), wprod = alg_norm(B, w);
        if (wsum.val_lower_bound() < 2 || wprod.val_lower_bound() < 4)
            throw PrimeUnusable("kernel_integrals: u-roots not confined to the infinite disk");
        long vals2 = std::min(2 * wsum.val_lower_bound(), wprod.val_lower_bound());

        const PadicSeries& H = cached_H_of_w(s);
        auto [Hval, cap] = eval_series_at_elem(H, B, w, vals2);

        // tau = sqrt(lc) xhat^2 H(w) / v(xhat)
        AlgElem x2{-u0, -u1};
        AlgElem vx{v0, v1};
        PadicNumber sq = padic_sqrt(padic_of(s.curve.g.leading(), p, N));
        AlgElem tau = alg_mul(B, alg_mul(B, x2, Hval), alg_inverse(B, vx));
        tau.a = tau.a * sq;
        tau.b = tau.b * sq;
        PadicNumber e1 = alg_trace(B, tau).cap_abs(cap >= kValInf ? kValInf : cap + 1);
        PadicNumber e2 = alg_norm(B, tau).cap_abs(cap >= kValInf ? kValInf : cap + 2);

        const auto& [F0, F1] = infinite_antiderivatives(s);
        ParamPoly pp = ParamPoly::quadratic(e1, e2);
        return {evaluate_symmetric(F0, pp), evaluate_symmetric(F1, pp)};
    }

    // finite reduction: ubar must have a double root xi
    Fp u1p = Fp::reduce(u1q, p), u0p = Fp::reduce(u0q, p);
    Fp disc = u1p * u1p - Fp(4, p) * u0p;
    if (!disc.is_zero())
        throw PrimeUnusable("kernel_integrals: finite kernel roots in distinct disks");
    Fp xi = -(u1p / Fp(2, p));
    UniPoly<Fp> gbar = reduce_mod_p(s.curve.g, p);

    if (gbar.eval(xi).is_zero()) {
        // Weierstrass disk: z = y, parameters are v(x_i); their symmetric
        // functions live in Q_p
        PadicNumber xW = hensel_root(s.curve.g, xi.v, p, N);
        PadicNumber e1 = v0.times_exact(2) - v1 * u1;
        PadicNumber e2 = v0 * v0 - v0 * v1 * u1 + v1 * v1 * u0;
        const auto& [F0, F1] = weierstrass_antiderivatives(s, xW, xi.v);
        ParamPoly pp = ParamPoly::quadratic(e1, e2);
        return {evaluate_symmetric(F0, pp), evaluate_symmetric(F1, pp)};
    }

    // generic pair (xi, eta), (xi, -eta): u splits over Q_p
    PadicNumber discq = u1 * u1 - padic_of(Rational(4), p, N) * u0;
    PadicNumber rt = padic_sqrt(discq); // val >= 2, even
    PadicNumber half = padic_of(Rational(1, 2), p, N);
    PadicNumber x1 = (-u1 + rt) * half, x2 = (-u1 - rt) * half;
    PadicNumber y1 = v0 + v1 * x1, y2 = v0 + v1 * x2;
    if (y1.is_tracked_zero() || y2.is_tracked_zero())
        throw PrimeUnusable("kernel_integrals: generic pair with unresolved y");
    int64_t eta1 = y1.leading_residue(), eta2 = y2.leading_residue();
    if ((eta1 + eta2) % p != 0) throw PrimeUnusable("kernel_integrals: pair is not involution-conjugate mod p");
    PadicNumber xR = PadicNumber::from_integer(Integer(xi.v), p, N);
    PadicNumber yR = padic_sqrt(padic_poly_eval(s.curve.g, xR, N));
    if (yR.leading_residue() != eta1) yR = -yR;
    const auto& [F0, F1] = generic_antiderivatives(s, xR, yR);
    PadicNumber z1 = x1 - xR, z2 = x2 - xR;
    // int_R^{P1} + int_{iota R}^{P2} = F(z1) - F(z2)
    return {F0.eval(z1) - F0.eval(z2), F1.eval(z1) - F1.eval(z2)};
}

} // namespace

ClassIntegrals coleman_integrals_of_class(const ColemanSetup& s, const MumfordDivisor<Rational>& cls,
                                          const MumfordDivisor<Fp>& cls_mod_p) {
    UniPoly<Fp> fbar = reduce_mod_p(s.curve.g, s.p);
    long m = order_in_group(fbar, cls_mod_p, jacobian_order_Fp(s.curve, s.p));
    MumfordDivisor<Rational> Dm = cantor_mul(s.curve.g, m, cls);
    auto [A0, A1] = kernel_integrals(s, Dm);
    return {A0.div_exact(Integer(m)), A1.div_exact(Integer(m)), m};
}

ClassIntegrals coleman_integrals_of_class(const ColemanSetup& s, const MumfordDivisor<Rational>& cls) {
    for (auto& c : cls.u.coeffs())
        if (c.den() % s.p == 0) throw PrimeUnusable("class reduction: p divides a denominator");
    for (auto& c : cls.v.coeffs())
        if (c.den() % s.p == 0) throw PrimeUnusable("class reduction: p divides a denominator");
    MumfordDivisor<Fp> red{reduce_mod_p(cls.u, s.p), reduce_mod_p(cls.v, s.p)};
    if (!mumford_valid(reduce_mod_p(s.curve.g, s.p), red))
        throw PrimeUnusable("class reduction: not a valid divisor mod p");
    return coleman_integrals_of_class(s, cls, red);
}

ClassIntegrals generator_integrals(const ColemanSetup& s, long extra_scale) {
    UniPoly<Fp> fbar = reduce_mod_p(s.curve.g, s.p);
    MumfordDivisor<Fp> red{reduce_mod_p(s.generator.u, s.p), reduce_mod_p(s.generator.v, s.p)};
    long m = order_in_group(fbar, red, jacobian_order_Fp(s.curve, s.p)) * extra_scale;
    MumfordDivisor<Rational> Dm = cantor_mul(s.curve.g, m, s.generator);
    auto [A0, A1] = kernel_integrals(s, Dm);
    return {A0.div_exact(Integer(m)), A1.div_exact(Integer(m)), m};
}

Annihilator annihilating_differential(const ColemanSetup& s, const PadicNumber& I0, const PadicNumber& I1) {
    if (I0.is_tracked_zero() && I1.is_tracked_zero())
        throw InsufficientPrecision("annihilating_differential: both generator integrals vanish to precision");
    PadicNumber c0 = -I1, c1 = I0;
    long v0 = c0.val_lower_bound(), v1 = c1.val_lower_bound();
    long vmin = std::min(c0.is_tracked_zero() ? kValInf : v0, c1.is_tracked_zero() ? kValInf : v1);
    // normalization must be certain: a tracked zero may not sit at or below the min
    if ((c0.is_tracked_zero() && v0 <= vmin) || (c1.is_tracked_zero() && v1 <= vmin))
        throw InsufficientPrecision("annihilating_differential: normalization uncertain");
    Integer shift = padic_pow(s.p, std::abs(vmin));
    auto scaled = [&](const PadicNumber& c) { return vmin >= 0 ? c.div_exact(shift) : c.times_exact(shift); };
    return Annihilator{scaled(c0), scaled(c1)};
}

DiskBounds disk_zero_bounds(const ColemanSetup& s, const Annihilator& ann) {
    int64_t p = s.p;
    int N = s.precision;
    DiskBounds out;

    // residues of the normalized annihilator (min valuation 0, so not both zero)
    auto residue_of = [&](const PadicNumber& c) -> int64_t {
        if (c.is_tracked_zero()) {
            if (c.val_lower_bound() < 1) throw InsufficientPrecision("disk_zero_bounds: annihilator residue unknown");
            return 0;
        }
        return c.val() == 0 ? c.leading_residue() : 0;
    };
    int64_t r0 = residue_of(ann.c0), r1 = residue_of(ann.c1);
    if (r0 == 0 && r1 == 0) throw InsufficientPrecision("disk_zero_bounds: annihilator vanishes mod p");

    // vanishing locus of (c0bar + c1bar xbar) dx/2y on the reduced curve:
    // div = (P_x0) + (iota P_x0) when c1bar != 0 (order 2 if Weierstrass),
    // and 2(inf) when c1bar = 0
    UniPoly<Fp> gbar = reduce_mod_p(s.curve.g, p);
    auto reduced_order = [&](const DiskId& d) -> int {
        if (r1 == 0) return d.infinite ? 2 : 0;
        if (d.infinite) return 0;
        Fp x0 = -(Fp(r0, p) / Fp(r1, p));
        if (d.x != x0.v) return 0;
        return d.y == 0 ? 2 : 1;
    };

    // group known points by disk
    std::map<DiskId, std::vector<WPPoint>> anchored;
    for (auto& P : s.known_points) anchored[reduce_point(P, p)].push_back(P);

    long per_disk_total = 0;
    for (const DiskId& d : residue_points(s.curve, p)) {
        DiskReport rep;
        rep.disk = d;
        auto it = anchored.find(d);
        if (it == anchored.end()) {
            rep.anchored = false;
            rep.reduced_order = reduced_order(d);
            if (rep.reduced_order >= p - 2)
                throw PrimeUnusable("disk_zero_bounds: vanishing order too large for the disk estimate");
            rep.bound = 1 + rep.reduced_order;
        } else {
            rep.anchored = true;
            rep.known_in_disk = it->second;
            std::sort(rep.known_in_disk.begin(), rep.known_in_disk.end());
            const WPPoint& anchor = rep.known_in_disk.front();

            const auto* pair = &infinite_antiderivatives(s);
            if (!d.infinite) {
                PadicNumber gx = padic_poly_eval(s.curve.g, padic_of(anchor.X, p, N), N);
                if (d.y == 0 && gx.is_zero_mod(1)) {
                    pair = &weierstrass_antiderivatives(s, padic_of(anchor.X, p, N), d.x);
                } else {
                    pair = &generic_antiderivatives(s, padic_of(anchor.X, p, N), padic_of(anchor.Y, p, N));
                }
            }
            PadicSeries f = pair->first.scale(ann.c0) + pair->second.scale(ann.c1);

            // every known rational point of the disk is a zero of f
            for (auto& Q : rep.known_in_disk) {
                PadicNumber param = PadicNumber::exact_zero(p);
                if (d.infinite) {
                    if (!Q.is_infinite()) param = infinite_disk_parameter(s, Q.X, Q.Y);
                } else if (anchor.Y.is_zero() && !anchor.is_infinite()) {
                    param = padic_of(Q.Y, p, N); // Weierstrass disk, z = y
                } else {
                    param = padic_of(Q.X - anchor.X, p, N);
                }
                PadicNumber val = f.eval(param);
                if (!val.is_zero_mod(std::min<long>(N - kPrecisionFloor, val.abs_prec())))
                    throw PrimeUnusable("disk_zero_bounds: known point is not a zero of the disk series");
            }

            rep.strassmann = strassmann_bound(f.rescale_by_p());
            rep.bound = rep.strassmann;
            rep.series_preview = f.str(4);
            if (static_cast<long>(rep.known_in_disk.size()) > rep.bound)
                throw PrimeUnusable("disk_zero_bounds: Strassmann bound below the known count");
        }
        per_disk_total += rep.bound;
        out.disks.push_back(std::move(rep));
    }

    out.per_disk_total = per_disk_total;
    out.global_coleman = count_points_Fp(s.curve, p) + 2 * s.curve.genus() - 2;
    out.certified = std::min(out.per_disk_total, out.global_coleman);
    return out;
}

bool class_is_non_torsion(const HyperCurve& curve, const MumfordDivisor<Rational>& D,
                          const std::vector<int64_t>& probe_primes) {
    if (D.is_identity()) return false;
    long bound = 0;
    for (int64_t p : probe_primes) {
        if (!good_reduction(curve, p)) continue;
        long n = jacobian_order_Fp(curve, p);
        bound = bound == 0 ? n : std::gcd(bound, n);
    }
    if (bound == 0) throw std::domain_error("class_is_non_torsion: no good probe prime");
    // |J(Q)_tors| divides bound, so torsion D would satisfy bound * D = 0
    return !cantor_mul(curve.g, bound, D).is_identity();
}

TorsionVanishing torsion_class_integrals(const ColemanSetup& s, long min_digits) {
    TorsionVanishing out;
    out.all_vanish = true;
    out.worst_digits = kValInf;
    std::vector<MumfordDivisor<Rational>> classes;
    auto roots = rational_roots(s.curve.g);
    for (auto& r : roots)
        classes.push_back(MumfordDivisor<Rational>{QPoly(std::vector<Rational>{-r, Rational(1)}), QPoly()});
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            classes.push_back(MumfordDivisor<Rational>{
                QPoly(std::vector<Rational>{-roots[i], Rational(1)}) * QPoly(std::vector<Rational>{-roots[j], Rational(1)}),
                QPoly()});
    for (auto& T : classes) {
        auto ints = coleman_integrals_of_class(s, T);
        for (const PadicNumber& I : {ints.I0, ints.I1}) {
            long digits = I.is_tracked_zero() ? I.val_lower_bound() : -1;
            if (digits < min_digits) out.all_vanish = false;
            out.worst_digits = std::min(out.worst_digits, digits);
        }
        out.classes_checked++;
    }
    return out;
}

std::vector<PairCheck> pairwise_difference_annihilation(const ColemanSetup& s, const Annihilator& ann,
                                                        long min_digits) {
    std::vector<PairCheck> out;
    UniPoly<Fp> fbar = reduce_mod_p(s.curve.g, s.p);
    auto class_of = [&](const WPPoint& P) -> MumfordDivisor<Rational> {
        if (P.is_infinite()) return mumford_identity(Rational(1));
        return mumford_from_point(P.X, P.Y);
    };
    auto class_of_p = [&](const WPPoint& P) -> MumfordDivisor<Fp> {
        return reduce_point_class(s.curve, P, s.p);
    };
    for (size_t i = 0; i < s.known_points.size(); ++i) {
        for (size_t j = i + 1; j < s.known_points.size(); ++j) {
            MumfordDivisor<Rational> X = cantor_sub(s.curve.g, class_of(s.known_points[i]), class_of(s.known_points[j]));
            MumfordDivisor<Fp> Xp = cantor_sub(fbar, class_of_p(s.known_points[i]), class_of_p(s.known_points[j]));
            auto ints = coleman_integrals_of_class(s, X, Xp);
            PadicNumber combo = ann.c0 * ints.I0 + ann.c1 * ints.I1;
            bool ok = combo.is_zero_mod(min_digits);
            long digits = combo.is_tracked_zero() ? combo.val_lower_bound() : -1;
            out.push_back(PairCheck{i, j, ints.multiplier, ok, digits});
        }
    }
    return out;
}

ChabautyResult certify_count(const HyperCurve& curve, const MumfordDivisor<Rational>& generator,
                             const std::vector<WPPoint>& known_points, int64_t max_prime, int precision) {
    ChabautyResult res;
    res.known_count = static_cast<long>(known_points.size());
    res.generator_certified = class_is_non_torsion(curve, generator);
    if (!res.generator_certified) return res;

    for (int64_t p = 5; p <= max_prime; ++p) {
        if (!is_probable_prime(Integer(p))) continue;
        if (!good_reduction(curve, p)) continue;
        ChabautyAttempt att;
        att.p = p;
        // certified >= |C(F_p)| >= p + 1 - 4 sqrt(p) (Weil), so a prime whose
        // floor already exceeds the best bound cannot improve it
        long weil_floor = static_cast<long>(std::ceil(p + 1 - 4 * std::sqrt(static_cast<double>(p))));
        if (res.best_bound > 0 && weil_floor > res.best_bound) {
            att.failure = "skipped: Weil point-count floor " + std::to_string(weil_floor) +
                          " exceeds current best bound";
            res.attempts.push_back(std::move(att));
            continue;
        }
        for (int N : {precision, 2 * precision}) {
            att.precision = N;
            att.failure.clear();
            try {
                ColemanSetup setup = coleman_setup(curve, p, N, generator, known_points);
                ClassIntegrals ints = generator_integrals(setup);
                att.multiplier = ints.multiplier;
                Annihilator ann = annihilating_differential(setup, ints.I0, ints.I1);
                DiskBounds bounds = disk_zero_bounds(setup, ann);
                att.success = true;
                att.certified = bounds.certified;
                att.bounds = std::move(bounds);
                att.annihilator = ann;
                break;
            } catch (const InsufficientPrecision& e) {
                att.success = false;
                att.failure = std::string("insufficient precision: ") + e.what();
                // retry at doubled precision
            } catch (const std::exception& e) {
                att.success = false;
                att.failure = e.what();
                break;
            }
        }
        if (att.success && (res.best_bound < 0 || att.certified < res.best_bound)) {
            res.best_bound = att.certified;
            res.best_prime = p;
        }
        res.attempts.push_back(std::move(att));
        if (res.best_bound == res.known_count) break; // cannot improve further
    }
    res.complete = (res.best_bound == res.known_count);
    return res;
}

} // namespace nicecurves
