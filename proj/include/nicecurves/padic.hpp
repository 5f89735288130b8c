#pragma once

#include "nicecurves/rational.hpp"
#include "nicecurves/unipoly.hpp"

#include <cstdint>
#include <vector>

namespace nicecurves {

struct NonResidue : std::domain_error {
    using std::domain_error::domain_error;
};
struct OddValuation : std::domain_error {
    using std::domain_error::domain_error;
};
struct InsufficientPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DiskViolation : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotTiny : std::domain_error {
    using std::domain_error::domain_error;
};
struct PrimeUnusable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default working precision in p-adic digits; consumers fail loudly below
/// kPrecisionFloor justified digits.
inline constexpr int kDefaultPrecision = 30;
inline constexpr int kPrecisionFloor = 5;

/// Sentinel for "valuation bound of an exact zero".
inline constexpr long kValInf = 1L << 40;

/// Capped-precision p-adic number, p an odd prime.
/// Nonzero: value = unit * p^val known modulo p^(val + prec), unit in [1, p^prec)
/// coprime to p, prec >= 1. Tracked zero: unit = 0, prec = 0, and the value is
/// O(p^val) (val = kValInf for an exact zero).
class PadicNumber {
public:
    PadicNumber() : p_(0), val_(kValInf), prec_(0), unit_(0) {}

    static PadicNumber exact_zero(int64_t p) { return PadicNumber(p, kValInf, 0, 0); }
    static PadicNumber zero_to(int64_t p, long abs_prec) { return PadicNumber(p, abs_prec, 0, 0); }
    static PadicNumber from_integer(const Integer& n, int64_t p, int prec);
    static PadicNumber from_rational(const Rational& q, int64_t p, int prec);
    /// unchecked raw constructor (normalizes unit mod p^prec)
    static PadicNumber make(int64_t p, long val, Integer unit, int prec);

    int64_t p() const { return p_; }
    bool is_tracked_zero() const { return unit_ == 0; }
    bool is_exact_zero() const { return unit_ == 0 && val_ >= kValInf; }
    /// exact valuation for a nonzero value; for a tracked zero this is the
    /// absolute precision bound (val(x) >= this).
    long val_lower_bound() const { return val_; }
    long val() const {
        if (is_tracked_zero()) throw InsufficientPrecision("val of tracked zero");
        return val_;
    }
    int prec() const { return prec_; }
    long abs_prec() const { return is_tracked_zero() ? val_ : val_ + prec_; }
    const Integer& unit() const { return unit_; }

    /// residue of the unit mod p (nonzero value required)
    int64_t leading_residue() const;

    /// known to vanish modulo p^k
    bool is_zero_mod(long k) const { return is_tracked_zero() && val_ >= k; }

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const { return *this + (-o); }
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator/(const PadicNumber& o) const { return *this * o.inverse(); }
    PadicNumber inverse() const;

    /// multiply / divide by an exact integer (no relative-precision cap)
    PadicNumber times_exact(const Integer& n) const;
    PadicNumber div_exact(const Integer& n) const;

    /// forget digits beyond absolute precision A
    PadicNumber cap_abs(long A) const;

    /// equal as approximations (same value mod p^min(abs precisions))
    bool same_value(const PadicNumber& o) const;

    std::string str() const;

private:
    PadicNumber(int64_t p, long val, int prec, Integer unit)
        : p_(p), val_(val), prec_(prec), unit_(std::move(unit)) {}
    void normalize();

    int64_t p_;
    long val_;
    int prec_;
    Integer unit_;
};

Integer padic_pow(int64_t p, long k);
long ord_p(const Integer& n, int64_t p);

/// Canonical square root: leading residue in [1, (p-1)/2]; Hensel-lifted.
/// Errors: OddValuation, NonResidue.
PadicNumber padic_sqrt(const PadicNumber& a);

// scalar traits so generic helpers can be reused
inline PadicNumber zero_like(const PadicNumber& s) { return PadicNumber::exact_zero(s.p()); }
inline PadicNumber one_like(const PadicNumber& s) {
    return PadicNumber::from_integer(1, s.p(), std::max(s.prec(), kDefaultPrecision));
}
inline PadicNumber scalar_from_long(const PadicNumber& s, long v) {
    return PadicNumber::from_integer(Integer(v), s.p(), std::max(s.prec(), kDefaultPrecision));
}
inline bool scalar_is_zero(const PadicNumber& x) { return x.is_tracked_zero(); }

/// Truncated power series sum_{k < trunc} c_k t^k with tracked bounds on the
/// omitted terms:
///   coeff_floor: lower bound on val(c_k) for all k >= trunc (kValInf if none);
///   eval_floor:  lower bound on val(c_k t^k), k >= trunc, whenever val(t) >= 1.
/// Evaluation at val(t) >= 1 is then correct to min(per-term precision, eval_floor).
class PadicSeries {
public:
    PadicSeries(int64_t p, long trunc) : p_(p), trunc_(trunc), coeff_floor_(kValInf), eval_floor_(kValInf) {}

    static PadicSeries from_coeffs(int64_t p, std::vector<PadicNumber> coeffs, long trunc, long coeff_floor,
                                   long eval_floor);
    /// exact polynomial (no omitted terms)
    static PadicSeries from_poly(const QPoly& poly, int64_t p, int prec);

    int64_t p() const { return p_; }
    long trunc() const { return trunc_; }
    long coeff_floor() const { return coeff_floor_; }
    long eval_floor() const { return eval_floor_; }
    const std::vector<PadicNumber>& coeffs() const { return c_; }
    PadicNumber coeff(size_t k) const {
        return k < c_.size() ? c_[k] : PadicNumber::exact_zero(p_);
    }

    /// tighten the truncation order (stored coefficients beyond it fold into
    /// the omitted-term bounds)
    PadicSeries with_trunc(long trunc) const;

    PadicSeries operator+(const PadicSeries& o) const;
    PadicSeries operator-(const PadicSeries& o) const;
    PadicSeries operator*(const PadicSeries& o) const;
    PadicSeries scale(const PadicNumber& s) const;
    PadicSeries times_tpow(long k) const;
    PadicSeries negate() const;

    /// term a_k t^k -> a_k t^(k+1) / (k+1); constant term 0. Per-term precision
    /// loss ord_p(k+1) is inherent to the values; the omitted-term bound is
    /// adjusted by min_{j > trunc} (j - ord_p(j)).
    PadicSeries antiderivative() const;

    /// s(p*t): maps "zeros with val >= 1" to the classical unit-disk statement.
    PadicSeries rescale_by_p() const;

    /// evaluate at t with val(t) >= 1 (DiskViolation otherwise)
    PadicNumber eval(const PadicNumber& t) const;

    std::string str(int max_terms = 8) const;

private:
    int64_t p_;
    std::vector<PadicNumber> c_;
    long trunc_;
    long coeff_floor_;
    long eval_floor_;
};

/// Division-free unit-series helpers (constant term must have valuation 0).
PadicSeries series_inverse(const PadicSeries& s);
/// sqrt with chosen branch y0 of the constant term (y0^2 = s_0, val(y0) = 0).
PadicSeries series_sqrt(const PadicSeries& s, const PadicNumber& y0);

/// Classical Strassmann count on the closed unit disk |t|_p <= 1: the largest
/// index attaining the minimal coefficient valuation bounds the number of
/// zeros. Requires the minimum to be certified within the truncation and the
/// omitted-coefficient bound to exceed it strictly (InsufficientPrecision).
long strassmann_bound(const PadicSeries& s);

/// Monic parameter polynomial T^2 - e1 T + e2 (two roots) or T - t1 (one root),
/// all roots with val >= 1.
struct ParamPoly {
    int degree;         // 1 or 2
    PadicNumber e1, e2; // power-sum seeds; for degree 1, e1 = t1
    static ParamPoly linear(const PadicNumber& root) { return {1, root, PadicNumber::exact_zero(root.p())}; }
    static ParamPoly quadratic(const PadicNumber& e1, const PadicNumber& e2) { return {2, e1, e2}; }
    /// from monic coefficients u = T^2 + q1 T + q0: e1 = -q1, e2 = q0
    static ParamPoly from_monic_quadratic(const PadicNumber& q1, const PadicNumber& q0) {
        return {2, -q1, q0};
    }
};

/// sum of s over the roots of u, computed inside Q_p via power sums and
/// Newton's identities (p_k = e1 p_{k-1} - e2 p_{k-2}); no extension fields.
PadicNumber evaluate_symmetric(const PadicSeries& s, const ParamPoly& u);

} // namespace nicecurves
