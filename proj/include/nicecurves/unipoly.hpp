#pragma once

#include "nicecurves/quadext.hpp"
#include "nicecurves/rational.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace nicecurves {

// Field-sample helpers: fields like Q(sqrt(d)) or F_p carry runtime context,
// so identities are built from a sample element of the same field.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational scalar_from_long(const Rational&, long v) { return Rational(v); }
inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }

inline QuadExt zero_like(const QuadExt& s) { return QuadExt::rational_in(Rational(0), s.d()); }
inline QuadExt one_like(const QuadExt& s) { return QuadExt::rational_in(Rational(1), s.d()); }
inline QuadExt scalar_from_long(const QuadExt& s, long v) { return QuadExt::rational_in(Rational(v), s.d()); }
inline bool scalar_is_zero(const QuadExt& x) { return x.is_zero(); }

/// Dense univariate polynomial over a field K, coefficients low-degree-first.
/// Leading coefficient is nonzero unless the polynomial is zero (empty vector).
template <typename K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const K& k) { return UniPoly(std::vector<K>{k}); }
    static UniPoly x_power(const K& one, int n, const K& zero) {
        std::vector<K> c(n + 1, zero);
        c[n] = one;
        return UniPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](size_t i) const { return c_[i]; }
    const K& leading() const { return c_.back(); }
    K coeff_or(size_t i, const K& zero) const { return i < c_.size() ? c_[i] : zero; }

    K eval(const K& x) const {
        K acc = zero_like(x);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly operator-() const {
        auto c = c_;
        for (auto& k : c) k = -k;
        return UniPoly(std::move(c));
    }
    UniPoly operator+(const UniPoly& o) const {
        std::vector<K> c;
        size_t n = std::max(c_.size(), o.c_.size());
        c.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (i < c_.size() && i < o.c_.size()) c.push_back(c_[i] + o.c_[i]);
            else if (i < c_.size()) c.push_back(c_[i]);
            else c.push_back(o.c_[i]);
        }
        return UniPoly(std::move(c));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        K zero = zero_like(c_[0]);
        std::vector<K> c(c_.size() + o.c_.size() - 1, zero);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
        return UniPoly(std::move(c));
    }
    UniPoly operator*(const K& k) const {
        auto c = c_;
        for (auto& v : c) v = v * k;
        return UniPoly(std::move(c));
    }

    /// Euclidean division: *this = q*o + r with deg r < deg o.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& o) const {
        if (o.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        if (degree() < o.degree()) return {UniPoly(), *this};
        K zero = zero_like(o.leading());
        std::vector<K> rem = c_, quot(degree() - o.degree() + 1, zero);
        K inv_lead = one_like(o.leading()) / o.leading();
        for (int i = degree(); i >= o.degree(); --i) {
            if (scalar_is_zero(rem[i])) continue;
            K f = rem[i] * inv_lead;
            quot[i - o.degree()] = f;
            for (int j = 0; j <= o.degree(); ++j) rem[i - o.degree() + j] = rem[i - o.degree() + j] - f * o.c_[j];
        }
        return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
    }
    UniPoly operator/(const UniPoly& o) const { return divmod(o).first; }
    UniPoly operator%(const UniPoly& o) const { return divmod(o).second; }

    bool operator==(const UniPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly derivative() const {
        if (degree() < 1) return UniPoly();
        std::vector<K> c;
        c.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * scalar_from_long(c_[i], static_cast<long>(i)));
        return UniPoly(std::move(c));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * (one_like(leading()) / leading());
    }

    /// p(x + a), Horner over the polynomial ring; fine for the small degrees here.
    UniPoly shift(const K& a) const {
        if (is_zero()) return *this;
        UniPoly xa(std::vector<K>{a, one_like(a)});
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xa + constant(*it);
        return acc;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (scalar_is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeff_str(c_[i]) + ")";
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    static std::string coeff_str(const Rational& r) { return r.pretty(); }
    static std::string coeff_str(const QuadExt& q) { return q.str(); }
    template <typename T>
    static std::string coeff_str(const T& t) { return t.str(); }

    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <typename K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        UniPoly<K> r = a % b;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

/// Extended gcd: g = s*a + t*b with g monic.
template <typename K>
struct PolyXgcd {
    UniPoly<K> g, s, t;
};
template <typename K>
PolyXgcd<K> poly_xgcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_xgcd: both zero");
    const K* sample = a.is_zero() ? &b.leading() : &a.leading();
    UniPoly<K> one = UniPoly<K>::constant(one_like(*sample));
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> s0 = one, s1;
    UniPoly<K> t0, t1 = one;
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1; r1 = r;
        UniPoly<K> s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        UniPoly<K> t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    K inv = one_like(*sample) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// Resultant via the Euclidean remainder sequence (fields only).
template <typename K>
K resultant(UniPoly<K> a, UniPoly<K> b, const K& sample) {
    K one = one_like(sample);
    if (a.is_zero() || b.is_zero()) return zero_like(sample);
    K acc = one;
    while (b.degree() > 0) {
        UniPoly<K> r = a % b;
        if (r.is_zero()) return zero_like(sample);
        // res(a,b) = (-1)^(da*db) * lc(b)^(da - dr) * res(b, r)
        int da = a.degree(), db = b.degree(), dr = r.degree();
        K lead_pow = one;
        for (int i = 0; i < da - dr; ++i) lead_pow = lead_pow * b.leading();
        if ((da % 2) && (db % 2)) acc = -acc;
        acc = acc * lead_pow;
        a = b;
        b = r;
    }
    // b constant
    K lead_pow = one;
    for (int i = 0; i < a.degree(); ++i) lead_pow = lead_pow * b.leading();
    return acc * lead_pow;
}

/// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)
template <typename K>
K poly_discriminant(const UniPoly<K>& f, const K& sample) {
    K r = resultant(f, f.derivative(), sample);
    K d = r / f.leading();
    int n = f.degree();
    if (((n * (n - 1)) / 2) % 2) d = -d;
    return d;
}

using QPoly = UniPoly<Rational>;

/// Clear denominators and content: returns primitive integer coefficients
/// (as Rationals with den 1) with the same roots.
QPoly primitive_integer_poly(const QPoly& p);

/// Exactly the rational roots of p, each once, ascending. Uses the rational
/// root candidates num | a_0, den | a_n after clearing denominators.
/// Errors on the zero polynomial.
std::vector<Rational> rational_roots(const QPoly& p);

/// Splits a degree-4 polynomial (no rational roots required) into two rational
/// quadratic factors if possible: p = lc * (x^2+ax+b)(x^2+cx+d).
/// Uses the resolvent cubic. Returns the two monic quadratics.
std::optional<std::pair<QPoly, QPoly>> split_quartic_into_quadratics(const QPoly& p);

/// Full factorization of a polynomial of degree <= 4 over Q into monic
/// irreducible factors (with multiplicity) plus the leading constant.
/// Degree-3+ factors that do not split further are returned whole.
struct QFactorization {
    Rational lead;
    std::vector<QPoly> factors; // monic, irreducible over Q, with multiplicity
};
QFactorization factor_low_degree(const QPoly& p);

} // namespace nicecurves
