#include "nicecurves/nice_family.hpp"

namespace nicecurves {

bool is_nice_L(const Rational& L) {
    if (L.is_zero() || L == Rational(1)) return false;
    return is_square(L * L - L + Rational(1)).has_value();
}

NiceCurve make_nice(const Rational& L) {
    if (L.is_zero() || L == Rational(1)) throw std::domain_error("make_nice: L in {0,1}");
    auto W = is_square(L * L - L + Rational(1));
    if (!W) throw std::domain_error("make_nice: L^2 - L + 1 is not a rational square");
    Rational r = (Rational(1) + L - *W) / Rational(3);
    Rational s = (Rational(1) + L + *W) / Rational(3);
    return NiceCurve{L, *W, r, s, nice_curve_equation(L)};
}

ParamPoint param_L(const Rational& t) {
    if (t == Rational(1, 2)) throw DegenerateParameter(Degeneracy::Pole, "param_L: pole at t = 1/2");
    if (t.is_zero() || t == Rational(2)) throw DegenerateParameter(Degeneracy::LIsOne, "param_L: L = 1 at t = " + t.pretty());
    if (t == Rational(1) || t == Rational(-1))
        throw DegenerateParameter(Degeneracy::LIsZero, "param_L: L = 0 at t = " + t.pretty());
    Rational den = Rational(2) * t - Rational(1);
    Rational L = (t * t - Rational(1)) / den;
    Rational W = (t * t - t + Rational(1)) / den;
    if (W.sign() < 0) W = -W;
    return ParamPoint{L, W};
}

NiceCurve special_L(const Rational& u) {
    if (u.is_zero()) throw DegenerateParameter(Degeneracy::Pole, "special_L: u = 0");
    if (u == Rational(1) || u == Rational(-1))
        throw DegenerateParameter(Degeneracy::LIsZero, "special_L: L = 0 at u = " + u.pretty());
    Rational u2 = u * u;
    Rational L = (u2 + Rational(3)) * (u2 - Rational(1)) / (Rational(4) * u2);
    NiceCurve nc = make_nice(L);
    // closed forms for this parametrization, cross-checked against make_nice
    Rational W = (u2 * u2 + Rational(3)) / (Rational(4) * u2);
    Rational r = (u2 - Rational(1)) / (Rational(2) * u2);
    Rational s = (u2 + Rational(3)) / Rational(6);
    if (nc.W != W || nc.r != r || nc.s != s) throw ContractViolation("special_L: closed forms disagree");
    return nc;
}

TorsionClassification torsion_classification(const Rational& L, const Integer& d) {
    if (!is_nice_L(L)) throw std::domain_error("torsion_classification: L is not nice");
    QuadExt::check_d(d);
    Integer d_star = squarefree_part(Rational(1) - L);

    // path 1: field-label comparison
    TorsionCode by_label = (d == d_star) ? TorsionCode::Z2xZ4 : TorsionCode::Z2xZ2;

    // path 2: explicit witness search
    auto w4 = has_order4_over(L, d);
    auto w3 = has_order3_over(nice_curve_equation(L), d);
    if (w3) throw ContractViolation("torsion_classification: unexpected 3-torsion over Q(sqrt(" + d.get_str() + "))");
    TorsionCode by_witness = w4 ? TorsionCode::Z2xZ4 : TorsionCode::Z2xZ2;

    if (by_label != by_witness)
        throw ContractViolation("torsion_classification: derivation paths disagree at L = " + L.str() +
                                ", d = " + d.get_str());
    return TorsionClassification{by_label, d_star, std::move(w4)};
}

CriticalPoint rational_critical_point(const Rational& u) {
    NiceCurve nc = special_L(u);
    Rational fr = nc.curve.rhs(nc.r), fs = nc.curve.rhs(nc.s);
    auto yr = is_square(fr), ys = is_square(fs);
    if (yr.has_value() == ys.has_value())
        throw ContractViolation("rational_critical_point: expected exactly one square critical value at u = " +
                                u.pretty());
    bool at_r = yr.has_value();
    EllipticPoint<Rational> P = at_r ? EllipticPoint<Rational>(nc.r, *yr) : EllipticPoint<Rational>(nc.s, *ys);
    if (!on_curve(nc.curve, P)) throw ContractViolation("rational_critical_point: witness off curve");
    if (is_torsion(nc.curve, P)) throw ContractViolation("rational_critical_point: witness is torsion");
    return CriticalPoint{std::move(nc), P, at_r};
}

Rank2Witnesses rank2_witnesses(const Rational& u) {
    CriticalPoint cp = rational_critical_point(u);
    const NiceCurve& nc = cp.nc;
    Rational cprime = cp.at_r ? nc.s : nc.r;
    Rational fc = nc.curve.rhs(cprime);
    auto q = is_square(-fc / Rational(3));
    if (!q) throw ContractViolation("rank2_witnesses: f(c') not in -3*Q^2 at u = " + u.pretty());

    Integer d(-3);
    EllipticCurve<QuadExt> Eq(QuadExt::rational_in(nc.curve.a2, d), QuadExt::rational_in(nc.curve.a4, d),
                              QuadExt::rational_in(nc.curve.a6, d));
    EllipticPoint<QuadExt> Q(QuadExt::rational_in(cprime, d), QuadExt(Rational(0), *q, d));
    if (!on_curve(Eq, Q)) throw ContractViolation("rank2_witnesses: Q off curve");
    if (is_torsion(Eq, Q)) throw ContractViolation("rank2_witnesses: Q is torsion");

    // sigma(Q) = -Q under the group law; P is fixed by conjugation
    EllipticPoint<QuadExt> sigmaQ(Q.x.conj(), Q.y.conj());
    if (!ec_add(Eq, sigmaQ, Q).infinity) throw ContractViolation("rank2_witnesses: sigma(Q) + Q != inf");
    return Rank2Witnesses{nc, cp.P, cp.at_r, Q, *q};
}

// --- descent chain ---------------------------------------------------------

namespace {
Rational s_equation(const Rational& A, const Rational& B) {
    return B * B - Rational(12) * A * B + Rational(18) * B - Rational(27) + Rational(4) * A * A * A;
}
} // namespace

bool on_cusp_cubic(const CuspCubicPoint& P) { return s_equation(P.A, P.B).is_zero(); }

Rational cusp_cubic_dA(const CuspCubicPoint& P) { return Rational(12) * P.A * P.A - Rational(12) * P.B; }
Rational cusp_cubic_dB(const CuspCubicPoint& P) { return Rational(2) * P.B - Rational(12) * P.A + Rational(18); }

CuspCubicPoint cusp_param(const Rational& t) {
    CuspCubicPoint P{Rational(3) - t * t, Rational(2) * t * t * t - Rational(6) * t * t + Rational(9)};
    if (!on_cusp_cubic(P)) throw ContractViolation("cusp_param: point off S");
    return P;
}

QPoly shifted_psi3(const Rational& L) { return psi3(L).shift((L + Rational(1)) / Rational(3)); }

DescentWitness descent_chain(const Rational& L, const Rational& x) {
    if (x.is_zero()) throw std::domain_error("descent_chain: x = 0");
    Rational A = (Rational(2) * L - Rational(1)) / x;
    Rational B = (L * L - L + Rational(1)) / (x * x);
    bool identity = (A * A - Rational(4) * B == Rational(-3) / (x * x));
    Rational sv = shifted_psi3(L).eval(x);
    bool on_s = s_equation(A, B).is_zero();
    // the two conditions encode the same locus: shifted_psi3(x) = -(x^4/9) * S(A(x), B(x))
    Rational tie = -(x.pow(4) / Rational(9)) * s_equation(A, B);
    if (tie != sv) throw ContractViolation("descent_chain: S/psi3 tie-in identity failed");
    return DescentWitness{L, x, A, B, identity, on_s, sv.is_zero(), sv};
}

std::optional<Rational> sextic_condition(const Rational& u) {
    Rational u2 = u * u;
    Rational num = Rational(3) * u2 * u2 * u2 + Rational(75) * u2 * u2 - Rational(15) * u2 + Rational(1);
    Rational den = Rational(3) * u2 + Rational(1);
    return is_square(num / den);
}

Rational sextic_t(const Rational& u) {
    Rational u2 = u * u;
    return (Rational(3) - Rational(3) * u2) / (Rational(1) + Rational(3) * u2);
}

bool on_sextic_C(const Rational& U, const Rational& V, const Rational& W) {
    Rational U2 = U * U, V2 = V * V, W2 = W * W;
    Rational lhs = Rational(3) * U2 * U2 * U2 + Rational(75) * U2 * U2 * W2 - Rational(15) * U2 * W2 * W2 +
                   W2 * W2 * W2 - Rational(3) * U2 * V2 * W2 - V2 * W2 * W2;
    return lhs.is_zero();
}

WPPoint C_to_H(const Rational& U, const Rational& V, const Rational& W) {
    if (!on_sextic_C(U, V, W)) throw std::domain_error("C_to_H: input not on the sextic C");
    Rational X = U / Rational(2) + W / Rational(2);
    Rational Y = Rational(-3) * U * U * V * W / Rational(16) - V * W * W * W / Rational(16);
    Rational Z = U / Rational(2) - W / Rational(2);
    HyperCurve H = HyperCurve::curve_H();
    WPPoint img = normalize_wp(X, Y, Z, H.y_weight());
    if (!on_curve(H, img)) throw ContractViolation("C_to_H: image off H");
    return img;
}

NoThreeTorsionReport conclude_no_3torsion(const std::vector<Rational>& U_values) {
    NoThreeTorsionReport rep;
    rep.pass = true;
    for (const Rational& U : U_values) {
        NoThreeTorsionEntry e{U, false, Rational(0), false};
        if (U.is_zero()) {
            // t = 3 gives (A, B) = (-6, 9) with A^2 - 4B = 0; but A^2 - 4B = -3/x^2 != 0
            CuspCubicPoint P = cusp_param(sextic_t(U));
            e.contradiction_branch = true;
            e.ok = (P.A * P.A - Rational(4) * P.B).is_zero();
        } else {
            CuspCubicPoint P = cusp_param(sextic_t(U));
            Rational denom = P.A * P.A - Rational(4) * P.B;
            if (denom.is_zero()) {
                e.ok = false;
            } else {
                e.norm_value = Rational(-3) * P.B / denom;
                // L^2 - L + 1 = 1 forces L in {0, 1}, both excluded
                e.ok = (e.norm_value == Rational(1));
            }
        }
        rep.pass = rep.pass && e.ok;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

// --- auxiliary curves ---------------------------------------------------------

namespace {

bool points_close_under_law(const EllipticCurve<Rational>& E, const std::vector<EllipticPoint<Rational>>& pts) {
    for (auto& P : pts) {
        if (!on_curve(E, P)) return false;
        for (auto& Q : pts) {
            auto R = ec_add(E, P, Q);
            if (std::find(pts.begin(), pts.end(), R) == pts.end()) return false;
        }
    }
    return true;
}

} // namespace

AuxCurveReport aux_lemma_curves_check() {
    AuxCurveReport rep;

    // E1: y^2 = x(x^2 - x + 1)
    EllipticCurve<Rational> E1(Rational(-1), Rational(1), Rational(0));
    std::vector<EllipticPoint<Rational>> e1_pts = {EllipticPoint<Rational>(Rational(0)),
                                                   EllipticPoint<Rational>(Rational(0), Rational(0)),
                                                   EllipticPoint<Rational>(Rational(1), Rational(-1)),
                                                   EllipticPoint<Rational>(Rational(1), Rational(1))};
    auto e1_tors = lutz_nagell_torsion(E1);
    rep.e1_ok = points_close_under_law(E1, e1_pts) && e1_tors.size() == 4 &&
                point_order(E1, EllipticPoint<Rational>(Rational(1), Rational(1))) == 4;

    // E2: y^2 = (1-x)(x^2-x+1); listed points verified on the original model,
    // group structure through x -> -x: y^2 = x^3 + 2x^2 + 2x + 1
    auto e2_rhs = [](const Rational& x) { return (Rational(1) - x) * (x * x - x + Rational(1)); };
    bool e2_on = e2_rhs(Rational(1)).is_zero() && e2_rhs(Rational(0)) == Rational(1);
    EllipticCurve<Rational> E2t(Rational(2), Rational(2), Rational(1));
    std::vector<EllipticPoint<Rational>> e2_pts = {EllipticPoint<Rational>(Rational(0)),
                                                   EllipticPoint<Rational>(Rational(-1), Rational(0)),
                                                   EllipticPoint<Rational>(Rational(0), Rational(-1)),
                                                   EllipticPoint<Rational>(Rational(0), Rational(1))};
    auto e2_tors = lutz_nagell_torsion(E2t);
    rep.e2_ok = e2_on && points_close_under_law(E2t, e2_pts) && e2_tors.size() == 4 &&
                point_order(E2t, EllipticPoint<Rational>(Rational(0), Rational(1))) == 4;

    // C: y^2 = (x^2-x)(x^2-x+1), known points {(0,0), (1,0), +-inf} on the
    // weighted quartic model (weights (1,2,1), Y^2 = Z^4 q(X/Z))
    QPoly qC = QPoly(std::vector<Rational>{Rational(0), Rational(-1), Rational(2), Rational(-2), Rational(1)});
    auto onC = [&](const Rational& X, const Rational& Y, const Rational& Z) {
        Rational rhs(0);
        for (int i = 0; i <= 4; ++i) rhs += qC.coeffs()[i] * X.pow(i) * Z.pow(4 - i);
        return Y * Y == rhs;
    };
    rep.c_points_ok = onC(Rational(0), Rational(0), Rational(1)) && onC(Rational(1), Rational(0), Rational(1)) &&
                      onC(Rational(1), Rational(1), Rational(0)) && onC(Rational(1), Rational(-1), Rational(0));

    // J: y^2 = x^3 + (2/3)x + 7/27, the Q-model of Jac(C); exactly 4 torsion
    // points by the Lutz-Nagell style search, forming Z/4
    EllipticCurve<Rational> J(Rational(0), Rational(2, 3), Rational(7, 27));
    rep.j_torsion = lutz_nagell_torsion(J);
    bool has_order4 = false;
    for (auto& P : rep.j_torsion)
        if (!P.infinity && point_order(J, P) == 4) has_order4 = true;
    rep.j_ok = rep.j_torsion.size() == 4 && has_order4 && points_close_under_law(J, rep.j_torsion);

    // no listed point yields an admissible L: L would appear as a finite
    // abscissa of E1 (L square), E2 (1-L square) or C (L^2-L square), and
    // every listed abscissa lies in the degenerate set {0, 1}
    std::vector<Rational> listed_abscissae = {Rational(0), Rational(1),  // E1: (0,0), (1,+-1)
                                              Rational(1), Rational(0),  // E2: (1,0), (0,+-1)
                                              Rational(0), Rational(1)}; // C:  (0,0), (1,0)
    rep.no_admissible_L = true;
    for (const Rational& x : listed_abscissae)
        if (!x.is_zero() && x != Rational(1)) rep.no_admissible_L = false;

    return rep;
}

} // namespace nicecurves
