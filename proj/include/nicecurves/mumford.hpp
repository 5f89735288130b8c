#pragma once

#include "nicecurves/fp.hpp"
#include "nicecurves/hyperelliptic.hpp"
#include "nicecurves/rational.hpp"
#include "nicecurves/unipoly.hpp"

#include <vector>

namespace nicecurves {

/// Genus-2 Jacobian arithmetic on an odd-degree model y^2 = f(x), deg f = 5
/// (f need not be monic: reduction re-monicizes u). Elements are reduced
/// Mumford pairs (u, v): u monic, deg u <= 2, deg v < deg u, u | v^2 - f.
/// Identity is (1, 0); inversion negates v.
template <typename K>
struct MumfordDivisor {
    UniPoly<K> u, v;

    bool is_identity() const { return u.degree() == 0; }
    bool operator==(const MumfordDivisor& o) const { return u == o.u && v == o.v; }
    bool operator!=(const MumfordDivisor& o) const { return !(*this == o); }
    std::string str() const { return "(u = " + u.str() + ", v = " + v.str() + ")"; }
};

template <typename K>
MumfordDivisor<K> mumford_identity(const K& sample) {
    return {UniPoly<K>::constant(one_like(sample)), UniPoly<K>()};
}

/// [(x0, y0) - inf]
template <typename K>
MumfordDivisor<K> mumford_from_point(const K& x0, const K& y0) {
    return {UniPoly<K>(std::vector<K>{-x0, one_like(x0)}), UniPoly<K>::constant(y0)};
}

template <typename K>
bool mumford_valid(const UniPoly<K>& f, const MumfordDivisor<K>& D) {
    if (D.u.is_zero() || D.u.degree() > 2) return false;
    if (!(D.u.leading() == one_like(D.u.leading()))) return false;
    if (!D.v.is_zero() && D.v.degree() >= D.u.degree()) return false;
    UniPoly<K> rem = (D.v * D.v - f) % D.u;
    return rem.is_zero();
}

template <typename K>
MumfordDivisor<K> cantor_neg(const MumfordDivisor<K>& D) {
    return {D.u, -D.v};
}

/// Cantor composition + reduction. Standard gcd-based composition; reduction
/// replaces u by (f - v^2)/u (monicized) until deg u <= 2.
template <typename K>
MumfordDivisor<K> cantor_add(const UniPoly<K>& f, const MumfordDivisor<K>& D1, const MumfordDivisor<K>& D2) {
    if (D1.is_identity()) return D2;
    if (D2.is_identity()) return D1;

    // composition
    auto e = poly_xgcd(D1.u, D2.u);              // d1 = e.s u1 + e.t u2
    auto c = poly_xgcd(e.g, D1.v + D2.v);        // d = c.s d1 + c.t (v1+v2)
    UniPoly<K> d = c.g;
    UniPoly<K> s1 = c.s * e.s, s2 = c.s * e.t, s3 = c.t;
    UniPoly<K> u = (D1.u * D2.u) / (d * d);
    UniPoly<K> v = (s1 * D1.u * D2.v + s2 * D2.u * D1.v + s3 * (D1.v * D2.v + f)) / d;
    v = v % u;

    // reduction
    while (u.degree() > 2) {
        UniPoly<K> u2 = (f - v * v) / u;
        u2 = u2.monic();
        UniPoly<K> v2 = (-v) % u2;
        u = u2;
        v = v2;
    }
    u = u.monic();
    return {u, v};
}

template <typename K>
MumfordDivisor<K> cantor_sub(const UniPoly<K>& f, const MumfordDivisor<K>& D1, const MumfordDivisor<K>& D2) {
    return cantor_add(f, D1, cantor_neg(D2));
}

template <typename K>
MumfordDivisor<K> cantor_mul(const UniPoly<K>& f, long n, MumfordDivisor<K> D) {
    if (n < 0) { n = -n; D = cantor_neg(D); }
    MumfordDivisor<K> acc = mumford_identity(f.leading());
    while (n) {
        if (n & 1) acc = cantor_add(f, acc, D);
        D = cantor_add(f, D, D);
        n >>= 1;
    }
    return acc;
}

/// Least m >= 1 with m*D = 0, via the divisors of the group order.
template <typename K>
long order_in_group(const UniPoly<K>& f, const MumfordDivisor<K>& D, long group_order) {
    std::vector<long> divs;
    for (long d = 1; d * d <= group_order; ++d) {
        if (group_order % d == 0) {
            divs.push_back(d);
            if (d != group_order / d) divs.push_back(group_order / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    for (long d : divs)
        if (cantor_mul(f, d, D).is_identity()) return d;
    throw std::domain_error("order_in_group: order does not divide the group order");
}

/// Full enumeration of J(F_p) in Mumford form for a genus-2 odd-degree model.
std::vector<MumfordDivisor<Fp>> enumerate_jacobian_Fp(const HyperCurve& C, int64_t p);

/// [(x0,y0) - inf] reduced mod p (points with p-integral coordinates).
MumfordDivisor<Fp> reduce_point_class(const HyperCurve& C, const WPPoint& P, int64_t p);

/// Order of D's reduction in J(F_p).
long order_in_JFp(const HyperCurve& C, const MumfordDivisor<Fp>& D, int64_t p);

} // namespace nicecurves
