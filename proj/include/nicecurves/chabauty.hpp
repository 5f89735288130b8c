#pragma once

#include "nicecurves/hyperelliptic.hpp"
#include "nicecurves/mumford.hpp"
#include "nicecurves/padic.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nicecurves {

/// Chabauty-Coleman context for a genus-2 odd-degree model at an odd good
/// prime p >= 5 (p > 2*genus). Basis differentials: omega_j = x^j dx/(2y),
/// j in {0, 1}. The rank-1 hypothesis and the generator class are trusted
/// inputs; everything else is certified here (generator non-torsion,
/// annihilation, per-disk bounds).
struct ExpansionCache;

struct ColemanSetup {
    HyperCurve curve;
    int64_t p;
    int precision;  // N, p-adic digits
    long terms;     // series truncation M = p*N + p
    MumfordDivisor<Rational> generator;
    std::vector<WPPoint> known_points;
    std::shared_ptr<ExpansionCache> cache; // shared across copies of one setup
};

ColemanSetup coleman_setup(const HyperCurve& curve, int64_t p, int precision,
                           const MumfordDivisor<Rational>& generator, std::vector<WPPoint> known_points);

/// Residue point of C(F_p) (the disk label).
struct DiskId {
    bool infinite = false;
    int64_t x = 0, y = 0;
    bool operator==(const DiskId& o) const { return infinite == o.infinite && x == o.x && y == o.y; }
    bool operator<(const DiskId& o) const {
        if (infinite != o.infinite) return infinite;
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
    std::string str() const { return infinite ? "inf" : "(" + std::to_string(x) + ", " + std::to_string(y) + ")"; }
};

DiskId reduce_point(const WPPoint& P, int64_t p);
std::vector<DiskId> residue_points(const HyperCurve& curve, int64_t p);

/// Local expansion a(t) of omega_j = x^j dx/(2y) on a residue disk, in the
/// disk's parameter: t with x = t^-2 at infinity, t = y at a Weierstrass
/// center, t = x - x_R at a generic center.
PadicSeries local_expansion_infinite(const ColemanSetup& s, int j);
PadicSeries local_expansion_weierstrass(const ColemanSetup& s, const PadicNumber& x_W, int j);
PadicSeries local_expansion_generic(const ColemanSetup& s, const PadicNumber& x_R, const PadicNumber& y_R, int j);
/// dispatcher keyed on a disk center given as a curve point
PadicSeries local_expansion(const ColemanSetup& s, const WPPoint& center, int j);

/// Disk parameter of a rational point in the infinite disk:
/// t = sqrt(lc) x^2 H(1/x) / y, so that t^2 = 1/x exactly.
PadicNumber infinite_disk_parameter(const ColemanSetup& s, const Rational& x, const Rational& y);

/// Tiny integral of omega_j from P to Q (both rational, same residue disk;
/// NotTiny otherwise).
PadicNumber tiny_integral(const ColemanSetup& s, const WPPoint& P, const WPPoint& Q, int j);

/// Integrals (I0, I1) of the basis differentials over a class in J(Q),
/// computed as (1/m) * integral over m*class where m kills the reduction:
/// the kernel representative's Mumford roots land in analyzable disks
/// (infinite / Weierstrass / split generic pair) and each piece is a tiny
/// integral, evaluated symmetrically where the roots are conjugate.
struct ClassIntegrals {
    PadicNumber I0, I1;
    long multiplier;
};
ClassIntegrals coleman_integrals_of_class(const ColemanSetup& s, const MumfordDivisor<Rational>& cls,
                                          const MumfordDivisor<Fp>& cls_mod_p);
/// convenience: reduces cls coefficientwise (PrimeUnusable if p divides a denominator)
ClassIntegrals coleman_integrals_of_class(const ColemanSetup& s, const MumfordDivisor<Rational>& cls);

/// Generator integrals I_j = int_0^gen omega_j; extra_scale multiplies the
/// kernel multiplier (consistency checks use scale 2).
ClassIntegrals generator_integrals(const ColemanSetup& s, long extra_scale = 1);

/// omega_A = c0 omega_0 + c1 omega_1 with (c0, c1) = (-I1, I0), normalized to
/// min valuation 0. InsufficientPrecision if both integrals vanish to
/// working precision.
struct Annihilator {
    PadicNumber c0, c1;
};
Annihilator annihilating_differential(const ColemanSetup& s, const PadicNumber& I0, const PadicNumber& I1);

/// Certified upper bound on rational points per residue disk: anchored disks
/// get a Strassmann count of the annihilating integral; unanchored disks get
/// 1 + (vanishing order of the reduced annihilator at the residue point).
struct DiskReport {
    DiskId disk;
    std::vector<WPPoint> known_in_disk;
    bool anchored = false;
    long strassmann = -1;  // anchored disks
    int reduced_order = 0; // div(omega_A mod p) at the residue point
    long bound = 0;
    std::string series_preview;
};
struct DiskBounds {
    std::vector<DiskReport> disks;
    long per_disk_total = 0;
    long global_coleman = 0; // |C(F_p)| + 2g - 2
    long certified = 0;      // min of the applicable bounds
};
DiskBounds disk_zero_bounds(const ColemanSetup& s, const Annihilator& ann);

/// Non-torsion certificate for a class D: |J(Q)_tors| divides
/// gcd(|J(F_p)|) over odd good primes, and n*D != 0 for every divisor n of
/// that gcd (exact Cantor arithmetic over Q).
bool class_is_non_torsion(const HyperCurve& curve, const MumfordDivisor<Rational>& D,
                          const std::vector<int64_t>& probe_primes = {5, 7, 11});

/// Integrals of both basis differentials over the rational 2-torsion classes
/// vanish (to at least min_digits); returns the worst certified vanishing.
struct TorsionVanishing {
    bool all_vanish = false;
    long worst_digits = 0;
    int classes_checked = 0;
};
TorsionVanishing torsion_class_integrals(const ColemanSetup& s, long min_digits);

/// omega_A-integral over [P_i - P_j] for all pairs of known points.
struct PairCheck {
    size_t i, j;
    long multiplier;
    bool vanished;
    long certified_digits;
};
std::vector<PairCheck> pairwise_difference_annihilation(const ColemanSetup& s, const Annihilator& ann,
                                                        long min_digits);

/// One prime's attempt in the sweep.
struct ChabautyAttempt {
    int64_t p = 0;
    int precision = 0;
    bool success = false;
    std::string failure;
    long multiplier = 0;
    long certified = -1;
    DiskBounds bounds;
    std::optional<Annihilator> annihilator;
};

struct ChabautyResult {
    bool generator_certified = false;
    bool complete = false;
    long best_bound = -1;
    int64_t best_prime = 0;
    int64_t known_count = 0;
    std::vector<ChabautyAttempt> attempts;
};

/// Full engine: certify the generator non-torsion, then sweep good primes
/// 5 <= p <= max_prime in increasing order (N = precision, retry once at 2N on
/// InsufficientPrecision). Stops early once a prime certifies the bound equal
/// to the number of known points; verdict COMPLETE in that case.
ChabautyResult certify_count(const HyperCurve& curve, const MumfordDivisor<Rational>& generator,
                             const std::vector<WPPoint>& known_points, int64_t max_prime = 50,
                             int precision = kDefaultPrecision);

} // namespace nicecurves
