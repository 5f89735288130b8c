#pragma once

#include "nicecurves/fp.hpp"
#include "nicecurves/rational.hpp"
#include "nicecurves/unipoly.hpp"

#include <vector>

namespace nicecurves {

struct BadPrime : std::domain_error {
    using std::domain_error::domain_error;
};
struct MapDegenerates : std::domain_error {
    using std::domain_error::domain_error;
};

/// Hyperelliptic curve y^2 = g(x), g squarefree of degree 5..8, smooth model
/// in the weighted projective plane P(1, genus+1, 1).
struct HyperCurve {
    QPoly g;

    explicit HyperCurve(QPoly poly);
    int degree() const { return g.degree(); }
    int genus() const { return (g.degree() - 1) / 2; }
    int y_weight() const { return genus() + 1; }

    /// H_q: y^2 = 4x^5 - 7x^4 - 2x^3 + 16x^2 + 8x + 1 (genus 2).
    static HyperCurve curve_Hq();
    /// H: y^2 = (x^2+x+1)(x^6+3x^5-5x^3+3x+1) (genus 3).
    static HyperCurve curve_H();
};

/// Point (X : Y : Z) with weights (1, g+1, 1), kept in canonical form:
/// Z = 1 (affine) or Z = 0, X = 1 (infinite).
struct WPPoint {
    Rational X, Y, Z;

    bool is_infinite() const { return Z.is_zero(); }
    bool operator==(const WPPoint& o) const { return X == o.X && Y == o.Y && Z == o.Z; }
    bool operator<(const WPPoint& o) const {
        // infinite points first, then affine lexicographic by (x, y)
        if (is_infinite() != o.is_infinite()) return is_infinite();
        if (X != o.X) return X < o.X;
        return Y < o.Y;
    }
    std::string str() const {
        if (is_infinite()) return "(1 : " + Y.pretty() + " : 0)";
        return "(" + X.pretty() + ", " + Y.pretty() + ")";
    }
};

/// Rescale by mu = 1/Z (or 1/X at infinity): (X, Y, Z) ~ (mu X, mu^(g+1) Y, mu Z).
WPPoint normalize_wp(const Rational& X, const Rational& Y, const Rational& Z, int y_weight);

bool on_curve(const HyperCurve& C, const WPPoint& P);

/// The infinite points of the smooth model: a single (1:0:0) for odd degree;
/// (1 : +-sqrt(lc) : 0) for even degree when the leading coefficient is a square.
std::vector<WPPoint> infinite_points(const HyperCurve& C);

/// All rational points with height(x) <= bound, plus infinite points, sorted
/// canonically. Enumerates x = a/b in lowest terms, b >= 1, max(|a|, b) <= bound.
std::vector<WPPoint> search_points(const HyperCurve& C, long bound);

/// The degree-2 etale quotient map phi: H -> H_q,
/// phi(X,Y,Z) = (XZ^5, X^2 Y Z^12 - Y Z^14, -X^2 Z^4 - 2X Z^5 - Z^6).
/// The displayed formula vanishes identically at Z = 0 (MapDegenerates);
/// infinite points are handled by pullback_points instead.
WPPoint quotient_map(const WPPoint& P);

/// Preimages of a rational H_q-point under phi: solves the x-level relation
/// x_q = -x/(x+1)^2 (a quadratic in x), keeps roots with square y^2 and
/// matching y-sign; the infinite points of H are appended on the disks where
/// the extended morphism sends them ((1, eta, 0) -> (0, -eta)).
std::vector<WPPoint> pullback_points(const WPPoint& Q);

/// |C(F_p)| including infinite points. BadPrime unless p is odd, prime to the
/// leading coefficient and to disc(g).
long count_points_Fp(const HyperCurve& C, int64_t p);

/// |C(F_{p^2})| via the table-based field F_p[w]/(w^2 - n).
long count_points_Fp2(const HyperCurve& C, int64_t p);

bool good_reduction(const HyperCurve& C, int64_t p);

/// |J(F_p)| for genus 2 from the zeta function: P(1) with
/// P(T) = 1 + c1 T + c2 T^2 + p c1 T^3 + p^2 T^4,
/// c1 = N1 - (p+1), c2 = (N2 - (p^2+1) + c1^2)/2.
long jacobian_order_Fp(const HyperCurve& C, int64_t p);

} // namespace nicecurves
