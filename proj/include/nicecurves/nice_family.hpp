#pragma once

#include "nicecurves/elliptic.hpp"
#include "nicecurves/hyperelliptic.hpp"

#include <optional>
#include <vector>

namespace nicecurves {

enum class Degeneracy { LIsZero, LIsOne, Pole };

struct DegenerateParameter : std::domain_error {
    Degeneracy which;
    DegenerateParameter(Degeneracy w, const std::string& msg) : std::domain_error(msg), which(w) {}
};

/// A verified break of one of the family's structural guarantees
/// (e.g. neither critical value a square for an admissible parameter).
struct ContractViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// E_L: y^2 = x(x-1)(x-L) with L^2 - L + 1 = W^2, W > 0, plus the two
/// critical points r < s of the cubic: r = ((1+L) - W)/3, s = ((1+L) + W)/3.
struct NiceCurve {
    Rational L, W, r, s;
    EllipticCurve<Rational> curve;
};

/// Requires L nice (L^2 - L + 1 a rational square, L not 0 or 1).
NiceCurve make_nice(const Rational& L);
bool is_nice_L(const Rational& L);

/// phi(t) = ((t^2-1)/(2t-1), (t^2-t+1)/(2t-1)), W normalized positive.
/// Degenerate t: 1/2 (pole), {0, 2} -> L = 1, {1, -1} -> L = 0.
struct ParamPoint {
    Rational L, W;
};
ParamPoint param_L(const Rational& t);

/// Inverse of the raw (sign-carrying) phi: t = L + W. With W normalized
/// positive the original parameter is one of L + W, L - W.
inline Rational param_inverse(const Rational& L, const Rational& W) { return L + W; }

/// L = (u^2+3)(u^2-1)/(4u^2); W = (u^4+3)/(4u^2); r = (u^2-1)/(2u^2), s = (u^2+3)/6.
NiceCurve special_L(const Rational& u);

enum class TorsionCode { Z2xZ2, Z2xZ4 };

struct TorsionClassification {
    TorsionCode code;
    Integer distinguished_d; // squarefree_part(1 - L)
    std::optional<Order4Witness> witness;
};

/// Torsion of E_L over Q(sqrt(d)): Z2xZ4 exactly at d = squarefree_part(1-L),
/// Z2xZ2 otherwise. Derives the verdict twice (field-label comparison vs
/// explicit witness search through has_order4_over / has_order3_over) and
/// cross-asserts the two paths agree.
TorsionClassification torsion_classification(const Rational& L, const Integer& d);

/// The critical point with rational square critical value, certified
/// non-torsion. `at_r` records which root carried the square value (it is
/// not always s: both labelings occur across the family, so it is recorded).
struct CriticalPoint {
    NiceCurve nc;
    EllipticPoint<Rational> P;
    bool at_r;
};
CriticalPoint rational_critical_point(const Rational& u);

/// Rank-2 witnesses over Q(sqrt(-3)): P rational at the square-valued critical
/// point, Q = (c', q sqrt(-3)) at the other critical point with
/// f(c') = -3 q^2. Certificate: both non-torsion, sigma(Q) = -Q, sigma(P) = P,
/// verified under the group law in Q(sqrt(-3)).
struct Rank2Witnesses {
    NiceCurve nc;
    EllipticPoint<Rational> P;
    bool P_at_r;
    EllipticPoint<QuadExt> Q;
    Rational q; // y(Q) = q sqrt(-3)
};
Rank2Witnesses rank2_witnesses(const Rational& u);

// ---------------------------------------------------------------------------
// The 3-torsion descent chain (claim prop.3T)
// ---------------------------------------------------------------------------

/// Point (A, B) on the cuspidal cubic S: B^2 - 12AB + 18B = 27 - 4A^3.
struct CuspCubicPoint {
    Rational A, B;
};
bool on_cusp_cubic(const CuspCubicPoint& P);
/// S equation partials (vanish exactly at the cusp (3, 9)).
Rational cusp_cubic_dA(const CuspCubicPoint& P);
Rational cusp_cubic_dB(const CuspCubicPoint& P);

/// The nonsingular rational points of S: (A, B) = (3 - t^2, 2t^3 - 6t^2 + 9).
CuspCubicPoint cusp_param(const Rational& t);

/// Substitution A = (2L-1)/x, B = (L^2-L+1)/x^2 in the shifted variable x.
/// Links: A^2 - 4B = -3/x^2 identically, and (A, B) lies on S exactly when
/// x is a root of the shifted quartic psi3(x + (L+1)/3).
struct DescentWitness {
    Rational L, x, A, B;
    bool identity_holds;     // A^2 - 4B == -3/x^2
    bool on_S;               // S equation satisfied at (A, B)
    bool shifted_psi3_root;  // x is a root of psi3(. + (L+1)/3)
    Rational shifted_value;  // psi3(x + (L+1)/3)
};
DescentWitness descent_chain(const Rational& L, const Rational& x);

/// psi3(x + (L+1)/3); cubic coefficient vanishes.
QPoly shifted_psi3(const Rational& L);

/// (3u^6 + 75u^4 - 15u^2 + 1) = (3u^2 + 1) v^2: the nonnegative v when the
/// quotient is a rational square.
std::optional<Rational> sextic_condition(const Rational& u);
/// t = (3 - 3u^2)/(1 + 3u^2), the S parameter forced by A^2 - 4B = -3/x^2.
Rational sextic_t(const Rational& u);

/// The projective sextic C: 3U^6 + 75U^4W^2 - 15U^2W^4 + W^6 - 3U^2V^2W^2 - V^2W^4 = 0.
bool on_sextic_C(const Rational& U, const Rational& V, const Rational& W);

/// Birational map C -> H: X = U/2 + W/2, Y = -3U^2VW/16 - VW^3/16, Z = U/2 - W/2,
/// landing in the weighted plane P(1,4,1).
WPPoint C_to_H(const Rational& U, const Rational& V, const Rational& W);

/// Final step of the descent: U = 0 forces A^2 - 4B = 0 (impossible); any other
/// listed U forces L^2 - L + 1 = -3B/(A^2 - 4B) = 1, i.e. L in {0, 1} (excluded).
struct NoThreeTorsionEntry {
    Rational U;
    bool contradiction_branch; // U = 0 case
    Rational norm_value;       // -3B/(A^2-4B) for the other branch
    bool ok;
};
struct NoThreeTorsionReport {
    std::vector<NoThreeTorsionEntry> entries;
    bool pass;
};
NoThreeTorsionReport conclude_no_3torsion(const std::vector<Rational>& U_values);

// ---------------------------------------------------------------------------
// Auxiliary curves (claims lemma.4t1 / lemma.4t2)
// ---------------------------------------------------------------------------

/// Verifies the listed rational points of E1, E2, C and the Jacobian model J:
/// on-curve, group-closed, expected orders; and that no listed point yields an
/// admissible L (all abscissae land in the degenerate set {0, 1}).
/// The rank-0 facts themselves are trusted inputs; descent is out of scope.
struct AuxCurveReport {
    bool e1_ok = false;       //4 points, Z/4 with (1,1) of order 4
    bool e2_ok = false;       // 4 points, Z/4
    bool c_points_ok = false; // the 4 known points lie on C
    bool j_ok = false;        // J has exactly 4 torsion points, Z/4
    bool no_admissible_L = false;
    std::vector<EllipticPoint<Rational>> j_torsion;
    bool pass() const { return e1_ok && e2_ok && c_points_ok && j_ok && no_admissible_L; }
};
AuxCurveReport aux_lemma_curves_check();

} // namespace nicecurves
