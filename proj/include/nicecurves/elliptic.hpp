#pragma once

#include "nicecurves/quadext.hpp"
#include "nicecurves/rational.hpp"
#include "nicecurves/unipoly.hpp"

#include <optional>
#include <variant>

namespace nicecurves {

/// Short Weierstrass curve y^2 = x^3 + a2 x^2 + a4 x + a6 over a field K
/// (K is Q, Q(sqrt(d)) or F_p here). Nonsingular: discriminant != 0.
template <typename K>
struct EllipticCurve {
    K a2, a4, a6;
    K disc;

    EllipticCurve(K a2_, K a4_, K a6_) : a2(std::move(a2_)), a4(std::move(a4_)), a6(std::move(a6_)), disc(zero_like(a2)) {
        // b-invariants for a1 = a3 = 0
        K four = scalar_from_long(a2, 4);
        K b2 = four * a2, b4 = scalar_from_long(a2, 2) * a4, b6 = four * a6;
        K b8 = four * a2 * a6 - a4 * a4;
        disc = -(b2 * b2 * b8) - scalar_from_long(a2, 8) * b4 * b4 * b4 -
               scalar_from_long(a2, 27) * b6 * b6 + scalar_from_long(a2, 9) * b2 * b4 * b6;
        if (scalar_is_zero(disc)) throw std::domain_error("EllipticCurve: singular (disc = 0)");
    }

    /// y^2 = x (x - e2)(x - e3)
    static EllipticCurve from_roots(const K& e2, const K& e3) {
        K zero = zero_like(e2);
        return EllipticCurve(-(e2 + e3), e2 * e3, zero);
    }

    K rhs(const K& x) const { return ((x + a2) * x + a4) * x + a6; }
    bool operator==(const EllipticCurve& o) const { return a2 == o.a2 && a4 == o.a4 && a6 == o.a6; }
};

template <typename K>
struct EllipticPoint {
    bool infinity = true;
    K x, y;

    EllipticPoint(const K& sample) : infinity(true), x(zero_like(sample)), y(zero_like(sample)) {}
    EllipticPoint(K x_, K y_) : infinity(false), x(std::move(x_)), y(std::move(y_)) {}

    bool operator==(const EllipticPoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
    bool operator!=(const EllipticPoint& o) const { return !(*this == o); }

    std::string str() const {
        if (infinity) return "inf";
        return "(" + coeff_str(x) + ", " + coeff_str(y) + ")";
    }

private:
    static std::string coeff_str(const Rational& r) { return r.pretty(); }
    template <typename T>
    static std::string coeff_str(const T& t) { return t.str(); }
};

template <typename K>
bool on_curve(const EllipticCurve<K>& E, const EllipticPoint<K>& P) {
    if (P.infinity) return true;
    return P.y * P.y == E.rhs(P.x);
}

template <typename K>
EllipticPoint<K> ec_neg(const EllipticPoint<K>& P) {
    if (P.infinity) return P;
    return EllipticPoint<K>(P.x, -P.y);
}

/// Chord-tangent group law with identity at infinity.
template <typename K>
EllipticPoint<K> ec_add(const EllipticCurve<K>& E, const EllipticPoint<K>& P, const EllipticPoint<K>& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    K two = scalar_from_long(E.a2, 2), three = scalar_from_long(E.a2, 3);
    K lambda = zero_like(E.a2);
    if (P.x == Q.x) {
        if (P.y == -Q.y) return EllipticPoint<K>(E.a2); // includes 2-torsion doubling
        lambda = (three * P.x * P.x + two * E.a2 * P.x + E.a4) / (two * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    K x3 = lambda * lambda - E.a2 - P.x - Q.x;
    K y3 = lambda * (P.x - x3) - P.y;
    return EllipticPoint<K>(x3, y3);
}

template <typename K>
EllipticPoint<K> ec_mul(const EllipticCurve<K>& E, long n, EllipticPoint<K> P) {
    if (n < 0) { n = -n; P = ec_neg(P); }
    EllipticPoint<K> acc(E.a2);
    while (n) {
        if (n & 1) acc = ec_add(E, acc, P);
        P = ec_add(E, P, P);
        n >>= 1;
    }
    return acc;
}

/// Exhausts n <= 24; sufficient over Q and quadratic fields (Mazur, Kenku-Momose
/// bounds taken as trusted background).
inline constexpr long kTorsionExhaustBound = 24;

template <typename K>
bool is_torsion(const EllipticCurve<K>& E, const EllipticPoint<K>& P) {
    EllipticPoint<K> acc = P;
    for (long n = 1; n <= kTorsionExhaustBound; ++n) {
        if (acc.infinity) return true;
        acc = ec_add(E, acc, P);
    }
    return false;
}

template <typename K>
std::optional<long> point_order(const EllipticCurve<K>& E, const EllipticPoint<K>& P, long bound = kTorsionExhaustBound) {
    EllipticPoint<K> acc = P;
    for (long n = 1; n <= bound; ++n) {
        if (acc.infinity) return n;
        acc = ec_add(E, acc, P);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// The nice family E_L: y^2 = x(x-1)(x-L)
// ---------------------------------------------------------------------------

inline EllipticCurve<Rational> nice_curve_equation(const Rational& L) {
    if (L.is_zero() || L == Rational(1)) throw std::domain_error("E_L: L in {0,1} is singular");
    return EllipticCurve<Rational>::from_roots(Rational(1), L);
}

/// Abscissa of 2P from the duplication formula: (x^2-L)^2 / (4 x (x-1)(x-L)).
template <typename K>
K duplication_x(const K& x, const K& L) {
    K one = one_like(x);
    K num = x * x - L;
    K den = scalar_from_long(x, 4) * x * (x - one) * (x - L);
    if (scalar_is_zero(den)) throw std::domain_error("duplication_x: x is a 2-torsion abscissa");
    return num * num / den;
}

/// 3-division polynomial of E_L in the nice-family shape (a6 = 0):
///   psi3 = 3x^4 - 4(1+L)x^3 + 6Lx^2 - L^2,
/// whose roots are exactly the abscissae of order-3 points.
inline QPoly psi3(const Rational& L) {
    return QPoly(std::vector<Rational>{-(L * L), Rational(0), Rational(6) * L, Rational(-4) * (Rational(1) + L), Rational(3)});
}

/// Generic 3-division polynomial from b-invariants (cross-check and twists):
/// 3x^4 + 4a2 x^3 + 6a4 x^2 + 12a6 x + (4 a2 a6 - a4^2).
inline QPoly division_poly3(const EllipticCurve<Rational>& E) {
    return QPoly(std::vector<Rational>{Rational(4) * E.a2 * E.a6 - E.a4 * E.a4, Rational(12) * E.a6,
                                       Rational(6) * E.a4, Rational(4) * E.a2, Rational(3)});
}

/// One order-4 abscissa candidate x = base +- sqrt(radicand) together with
/// y^2 = f_L(x) evaluated exactly in Q(sqrt(sf(radicand))).
struct Order4Candidate {
    Rational base;      // 0, 1, or L
    Rational radicand;  // L, 1-L, or L^2-L
    int sign;           // +1 / -1
    QuadExt x;          // base + sign*sqrt(radicand), as an element of Q(sqrt(d))
    QuadExt y2;         // f_L(x)
    Integer d;          // squarefree field label of the radicand (1 if square)
};

/// The six x-values solving the duplication equation x(2P) in {0, 1, L}:
/// x = +-sqrt(L), 1 +- sqrt(1-L), L +- sqrt(L^2 - L).
std::vector<Order4Candidate> order4_x_candidates(const Rational& L);

/// True (with verified witness of order 4) iff E_L acquires 4-torsion over
/// Q(sqrt(d)); for nice L this happens exactly at d = squarefree_part(1 - L),
/// via x = 1 + sqrt(1-L). Witness checked by the group law: 2P is 2-torsion,
/// P is not.
struct Order4Witness {
    EllipticPoint<QuadExt> point;
    EllipticCurve<QuadExt> curve;
};
std::optional<Order4Witness> has_order4_over(const Rational& L, const Integer& d);

/// 3-torsion over Q (d = 0) or Q(sqrt(d)): a root x of psi3 in the field with
/// f(x) a square there. Factors psi3 over Q and compares splitting-field
/// labels; witnesses are verified with the group law (3P = inf, P != inf).
struct Order3Witness {
    std::variant<EllipticPoint<Rational>, EllipticPoint<QuadExt>> point;
};
std::optional<Order3Witness> has_order3_over(const EllipticCurve<Rational>& E, const Integer& d);

/// Quadratic twist E_L^D: y^2 = x(x - D)(x - DL).
EllipticCurve<Rational> quadratic_twist(const Rational& L, const Integer& D);

/// (x, y) -> (D x, D sqrt(D) y), an isomorphism E_L -> E_L^D over Q(sqrt(D)).
EllipticPoint<QuadExt> twist_transport(const EllipticPoint<Rational>& P, const Integer& D);
EllipticPoint<QuadExt> twist_transport_quad(const EllipticPoint<QuadExt>& P, const Integer& D);

/// |E_L(Q(sqrt(D)))[3]| == |E_L(Q)[3]| * |E_L^D(Q)[3]|, each side computed
/// independently through the psi3 analysis.
bool torsion_decomposition_check(const Rational& L, const Integer& D);

/// Counts the 3-torsion subgroup order (1, 3 or 9) over Q (d = 0) or Q(sqrt(d)).
int count_3torsion(const EllipticCurve<Rational>& E, const Integer& d);

/// j(E_L) = 16^2 (L^2-L+1)^3 / (L^2-L)^2.
inline Rational j_invariant(const Rational& L) {
    if (L.is_zero() || L == Rational(1)) throw std::domain_error("j_invariant: L in {0,1}");
    Rational a = L * L - L + Rational(1);
    Rational b = L * L - L;
    return Rational(256) * a * a * a / (b * b);
}

/// Integral model (X, Y) = (u^2 x, u^3 y) clearing denominators of a2, a4, a6.
struct IntegralModel {
    EllipticCurve<Rational> curve;
    Integer u;
};
IntegralModel integralize(const EllipticCurve<Rational>& E);

/// Lutz-Nagell candidates on an integral model: y = 0 or y^2 | disc, each
/// verified by exhausting orders; returns all rational torsion points of E.
std::vector<EllipticPoint<Rational>> lutz_nagell_torsion(const EllipticCurve<Rational>& E);

} // namespace nicecurves
