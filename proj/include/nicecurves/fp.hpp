#pragma once

#include "nicecurves/rational.hpp"
#include "nicecurves/unipoly.hpp"

#include <cstdint>

namespace nicecurves {

/// Prime field F_p, p an odd prime < 2^31. Carries p at runtime.
struct Fp {
    int64_t v = 0;
    int64_t p = 0;

    Fp() = default;
    Fp(int64_t value, int64_t prime) : v(((value % prime) + prime) % prime), p(prime) {}
    static Fp reduce(const Integer& n, int64_t prime) {
        Integer r = n % prime;
        return Fp(r.get_si(), prime);
    }
    static Fp reduce(const Rational& q, int64_t prime) {
        if (q.den() % prime == 0) throw std::domain_error("Fp: denominator divisible by p");
        return reduce(q.num(), prime) / reduce(q.den(), prime);
    }

    bool is_zero() const { return v == 0; }
    Fp operator-() const { return Fp(p - v, p); }
    Fp operator+(const Fp& o) const { return Fp(v + o.v, req(o)); }
    Fp operator-(const Fp& o) const { return Fp(v - o.v + p, req(o)); }
    Fp operator*(const Fp& o) const { return Fp(static_cast<int64_t>((__int128)v * o.v % p), req(o)); }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    bool operator==(const Fp& o) const { return v == o.v && p == o.p; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp pow(int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        Fp r(1, p), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Fp inverse() const {
        if (v == 0) throw std::domain_error("Fp: inverse of zero");
        return pow(p - 2);
    }

    /// Legendre symbol: 1 square, -1 non-square, 0 zero.
    int legendre() const {
        if (v == 0) return 0;
        Fp l = pow((p - 1) / 2);
        return l.v == 1 ? 1 : -1;
    }

    /// Tonelli-Shanks square root; nullopt for non-residues.
    std::optional<Fp> sqrt() const {
        if (v == 0) return Fp(0, p);
        if (legendre() != 1) return std::nullopt;
        if (p % 4 == 3) return pow((p + 1) / 4);
        int64_t q = p - 1, s = 0;
        while (q % 2 == 0) { q /= 2; ++s; }
        Fp z(2, p);
        while (z.legendre() != -1) z.v++;
        Fp m_pow = pow(q);
        Fp c = z.pow(q), t = m_pow, r = pow((q + 1) / 2);
        int64_t m = s;
        while (t.v != 1) {
            int64_t i = 0;
            Fp tt = t;
            while (tt.v != 1) { tt = tt * tt; ++i; }
            Fp b = c;
            for (int64_t j = 0; j < m - i - 1; ++j) b = b * b;
            r = r * b;
            c = b * b;
            t = t * c;
            m = i;
        }
        return r;
    }

    std::string str() const { return std::to_string(v); }

private:
    int64_t req(const Fp& o) const {
        if (p != o.p) throw std::domain_error("Fp: mixed characteristics");
        return p;
    }
};

inline Fp zero_like(const Fp& s) { return Fp(0, s.p); }
inline Fp one_like(const Fp& s) { return Fp(1, s.p); }
inline Fp scalar_from_long(const Fp& s, long v) { return Fp(v, s.p); }
inline bool scalar_is_zero(const Fp& x) { return x.is_zero(); }

/// F_{p^2} = F_p[x]/(x^2 - n), n the least quadratic non-residue mod p.
struct Fp2 {
    Fp a, b;    // a + b*x
    int64_t n = 0;

    static int64_t least_nonresidue(int64_t p) {
        for (int64_t c = 2; c < p; ++c)
            if (Fp(c, p).legendre() == -1) return c;
        throw std::domain_error("Fp2: no non-residue (p = 2?)");
    }

    Fp2() = default;
    Fp2(Fp a_, Fp b_, int64_t n_) : a(a_), b(b_), n(n_) {}
    static Fp2 embed(Fp x, int64_t n_) { return Fp2(x, Fp(0, x.p), n_); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    Fp2 operator-() const { return Fp2(-a, -b, n); }
    Fp2 operator+(const Fp2& o) const { return Fp2(a + o.a, b + o.b, n); }
    Fp2 operator-(const Fp2& o) const { return Fp2(a - o.a, b - o.b, n); }
    Fp2 operator*(const Fp2& o) const {
        Fp nn(n, a.p);
        return Fp2(a * o.a + nn * b * o.b, a * o.b + b * o.a, n);
    }
    Fp2 operator/(const Fp2& o) const { return *this * o.inverse(); }
    bool operator==(const Fp2& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Fp2& o) const { return !(*this == o); }

    Fp2 inverse() const {
        // (a + bx)^-1 = (a - bx)/(a^2 - n b^2)
        Fp nn(n, a.p);
        Fp d = a * a - nn * b * b;
        Fp di = d.inverse();
        return Fp2(a * di, -(b * di), n);
    }

    Fp2 pow(int64_t e) const {
        Fp2 r = embed(Fp(1, a.p), n), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// squares in F_{p^2}: x^((p^2-1)/2) == 1
    bool is_square() const {
        if (is_zero()) return true;
        int64_t p = a.p;
        Fp2 l = pow((p * p - 1) / 2);
        return l.a.v == 1 && l.b.is_zero();
    }

    std::string str() const { return a.str() + "+" + b.str() + "w"; }
};

inline Fp2 zero_like(const Fp2& s) { return Fp2(Fp(0, s.a.p), Fp(0, s.a.p), s.n); }
inline Fp2 one_like(const Fp2& s) { return Fp2(Fp(1, s.a.p), Fp(0, s.a.p), s.n); }
inline Fp2 scalar_from_long(const Fp2& s, long v) { return Fp2(Fp(v, s.a.p), Fp(0, s.a.p), s.n); }
inline bool scalar_is_zero(const Fp2& x) { return x.is_zero(); }

/// Reduce a rational-coefficient polynomial mod p (denominators must be units).
inline UniPoly<Fp> reduce_mod_p(const UniPoly<Rational>& f, int64_t p) {
    std::vector<Fp> c;
    c.reserve(f.coeffs().size());
    for (auto& q : f.coeffs()) c.push_back(Fp::reduce(q, p));
    return UniPoly<Fp>(std::move(c));
}

} // namespace nicecurves
