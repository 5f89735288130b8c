#include "nicecurves/unipoly.hpp"

#include <map>

namespace nicecurves {

QPoly primitive_integer_poly(const QPoly& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (auto& c : p.coeffs()) {
        Integer d = c.den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    Integer content = 0;
    std::vector<Integer> ints;
    ints.reserve(p.coeffs().size());
    for (auto& c : p.coeffs()) {
        Integer v = c.num() * (den_lcm / c.den());
        ints.push_back(v);
        Integer g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        content = g;
    }
    if (content == 0) content = 1;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(Integer(v / content), Integer(1));
    return QPoly(std::move(out));
}

std::vector<Rational> rational_roots(const QPoly& p_in) {
    if (p_in.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    QPoly p = primitive_integer_poly(p_in);
    std::vector<Rational> roots;
    // factor out x^k
    size_t low = 0;
    while (low < p.coeffs().size() && p.coeffs()[low].is_zero()) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        std::vector<Rational> c(p.coeffs().begin() + low, p.coeffs().end());
        p = QPoly(std::move(c));
    }
    if (p.degree() >= 1) {
        Integer a0 = ::abs(p.coeffs().front().num());
        Integer an = ::abs(p.leading().num());
        // Gauss: a root n/d in lowest terms gives P = (dx - n) Q over Z, so
        // (d - n) | P(1) and (d + n) | P(-1); filters out almost every candidate
        Rational p1 = p.eval(Rational(1)), pm1 = p.eval(Rational(-1));
        if (p1.is_zero()) roots.emplace_back(1);
        if (pm1.is_zero()) roots.emplace_back(-1);
        Integer p1n = ::abs(p1.num()), pm1n = ::abs(pm1.num());
        auto nds = divisors(a0);
        auto dds = divisors(an);
        for (const Integer& n : nds) {
            for (const Integer& d : dds) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
                if (g != 1) continue;
                for (int s : {1, -1}) {
                    Integer sn = s < 0 ? Integer(-n) : n;
                    if (d == sn || d == -sn) continue; // +-1 handled above
                    Integer f1 = d - sn, f2 = d + sn;
                    if (!p1.is_zero() && !mpz_divisible_p(p1n.get_mpz_t(), f1.get_mpz_t())) continue;
                    if (!pm1.is_zero() && !mpz_divisible_p(pm1n.get_mpz_t(), f2.get_mpz_t())) continue;
                    Rational cand(sn, d);
                    if (p.eval(cand).is_zero()) roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<std::pair<QPoly, QPoly>> split_quartic_into_quadratics(const QPoly& p_in) {
    if (p_in.degree() != 4) return std::nullopt;
    QPoly m = p_in.monic();
    // x^4 + p x^3 + q x^2 + r x + s = (x^2+ax+b)(x^2+cx+d)
    Rational P = m[3], Q = m[2], R = m[1], S = m[0];
    // resolvent cubic in z = b + d:
    //   z^3 - Q z^2 + (PR - 4S) z - (P^2 S - 4 Q S + R^2) = 0
    QPoly resolvent(std::vector<Rational>{
        -(P * P * S - Rational(4) * Q * S + R * R),
        P * R - Rational(4) * S,
        -Q,
        Rational(1)});
    for (const Rational& z : rational_roots(resolvent)) {
        // a + c = P, ac = Q - z: a, c are roots of T^2 - P T + (Q - z)
        Rational disc = P * P - Rational(4) * (Q - z);
        auto rd = is_square(disc);
        if (!rd) continue;
        Rational a = (P + *rd) / Rational(2);
        Rational c = P - a;
        Rational b, d;
        if (a != c) {
            // b + d = z, a d + b c = R
            d = (R - c * z) / (a - c);
            b = z - d;
        } else {
            // b, d roots of T^2 - z T + S
            Rational disc2 = z * z - Rational(4) * S;
            auto rd2 = is_square(disc2);
            if (!rd2) continue;
            b = (z + *rd2) / Rational(2);
            d = z - b;
        }
        if (b * d != S || a * d + b * c != R) continue;
        QPoly f1(std::vector<Rational>{b, a, Rational(1)});
        QPoly f2(std::vector<Rational>{d, c, Rational(1)});
        if (f1 * f2 == m) return std::make_pair(f1, f2);
    }
    return std::nullopt;
}

QFactorization factor_low_degree(const QPoly& p_in) {
    if (p_in.is_zero()) throw std::domain_error("factor_low_degree: zero polynomial");
    if (p_in.degree() > 4) throw std::domain_error("factor_low_degree: degree > 4 unsupported");
    // the torsion campaigns factor the same psi3 for many fields
    thread_local std::map<std::string, QFactorization> cache;
    std::string key;
    for (auto& c : p_in.coeffs()) key += c.str() + ";";
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;
    QFactorization out;
    out.lead = p_in.leading();
    QPoly rest = p_in.monic();
    // strip rational roots (with multiplicity)
    bool progress = true;
    while (rest.degree() >= 1 && progress) {
        progress = false;
        for (const Rational& r : rational_roots(rest)) {
            QPoly lin(std::vector<Rational>{-r, Rational(1)});
            auto [q, rem] = rest.divmod(lin);
            if (rem.is_zero()) {
                out.factors.push_back(lin);
                rest = q;
                progress = true;
                break;
            }
        }
    }
    if (rest.degree() == 2) {
        out.factors.push_back(rest);
    } else if (rest.degree() == 4) {
        if (auto sp = split_quartic_into_quadratics(rest)) {
            out.factors.push_back(sp->first);
            out.factors.push_back(sp->second);
        } else {
            out.factors.push_back(rest); // irreducible quartic
        }
    } else if (rest.degree() >= 1) {
        out.factors.push_back(rest); // rootless cubic stays whole
    }
    if (cache.size() > 20000) cache.clear();
    cache.emplace(std::move(key), out);
    return out;
}

} // namespace nicecurves
