#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nicecurves {

using Integer = mpz_class;

/// Exact rational number a/b with gcd(a,b) = 1 and b >= 1.
/// Canonical zero is 0/1. All operations are pure; values are immutable
/// in practice (mutating ops return new values).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::domain_error("Rational: bad literal '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q.canonicalize();
        Rational r;
        r.q_ = q;
        return r;
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den(), num());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// Serialized form "num/den", den always printed (round-trippable).
    std::string str() const { return num().get_str() + "/" + den().get_str(); }

    /// Display form: denominator elided when 1.
    std::string pretty() const {
        if (is_integer()) return num().get_str();
        return str();
    }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

/// max(|num|, den); height(0) = max(0, 1) = 1 so search enumeration stays uniform.
Integer height(const Rational& q);

/// The nonnegative rational square root, when q is a square in Q.
std::optional<Rational> is_square(const Rational& q);

/// Squarefree d with q = d * s^2 for some rational s. Errors on q = 0.
/// d = 1 exactly when q is a square.
Integer squarefree_part(const Rational& q);

/// Prime factorization of |n| as (prime, exponent) pairs, primes ascending.
/// Trial division below 10^5, then Pollard rho; intended for inputs up to ~128 bits.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

/// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);

bool is_probable_prime(const Integer& n);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

/// Exact integer square root if |n| is a perfect square (n >= 0).
std::optional<Integer> integer_sqrt_exact(const Integer& n);

} // namespace nicecurves
