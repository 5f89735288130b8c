#include "nicecurves/elliptic.hpp"

namespace nicecurves {

namespace {

// x = base + sign*sqrt(rad) as an element of Q(sqrt(sf(rad))); rad not a square.
QuadExt irrational_candidate(const Rational& base, const Rational& rad, int sign, const Integer& d) {
    Rational scale = *is_square(rad / Rational(d)); // rad = d * scale^2
    return QuadExt(base, Rational(sign) * scale, d);
}

} // namespace

std::vector<Order4Candidate> order4_x_candidates(const Rational& L) {
    if (L.is_zero() || L == Rational(1)) throw std::domain_error("order4_x_candidates: L in {0,1}");
    const Rational one(1);
    std::vector<std::pair<Rational, Rational>> base_rad = {
        {Rational(0), L}, {one, one - L}, {L, L * L - L}};
    std::vector<Order4Candidate> out;
    for (auto& [base, rad] : base_rad) {
        Integer d = squarefree_part(rad);
        for (int sign : {1, -1}) {
            QuadExt x = (d == 1) ? QuadExt::rational_in(base + Rational(sign) * *is_square(rad), Integer(-1))
                                 : irrational_candidate(base, rad, sign, d);
            // f_L(x) = x(x-1)(x-L) evaluated in the candidate's field
            QuadExt xm1 = x - one_like(x);
            QuadExt xmL = x - QuadExt::rational_in(L, x.d());
            out.push_back(Order4Candidate{base, rad, sign, x, x * xm1 * xmL, d});
        }
    }
    return out;
}

std::optional<Order4Witness> has_order4_over(const Rational& L, const Integer& d) {
    QuadExt::check_d(d);
    auto cands = order4_x_candidates(L);
    // prefer the "+" branch of x = 1 + sqrt(1-L) (candidates come in the order
    // sqrt(L), 1+-sqrt(1-L), L+-sqrt(L^2-L))
    std::vector<size_t> order = {2, 3, 0, 1, 4, 5};
    for (size_t i : order) {
        const auto& c = cands[i];
        QuadExt x = c.x;
        if (c.d == 1) {
            x = QuadExt::rational_in(c.x.a(), d); // rational abscissa sits in any field
        } else if (c.d == d) {
            x = c.x;
        } else {
            continue; // abscissa not in Q(sqrt(d))
        }
        QuadExt y2 = x * (x - one_like(x)) * (x - QuadExt::rational_in(L, d));
        auto y = quadext_sqrt(y2);
        if (!y) continue;
        QuadExt a2 = QuadExt::rational_in(-(Rational(1) + L), d);
        QuadExt a4 = QuadExt::rational_in(L, d);
        EllipticCurve<QuadExt> E(a2, a4, zero_like(a2));
        EllipticPoint<QuadExt> P(x, *y);
        if (!on_curve(E, P)) continue;
        EllipticPoint<QuadExt> P2 = ec_add(E, P, P);
        // order 4 exactly: P not 2-torsion, 2P a nontrivial 2-torsion point
        if (P2.infinity) continue;
        if (!ec_add(E, P2, P2).infinity) continue;
        return Order4Witness{P, E};
    }
    return std::nullopt;
}

std::optional<Order3Witness> has_order3_over(const EllipticCurve<Rational>& E, const Integer& d) {
    if (d != 0) QuadExt::check_d(d);
    QPoly psi = division_poly3(E);
    auto fac = factor_low_degree(psi);
    for (const QPoly& f : fac.factors) {
        if (f.degree() == 1) {
            Rational r = -f[0];
            Rational y2 = E.rhs(r);
            if (d == 0) {
                if (auto y = is_square(y2)) {
                    EllipticPoint<Rational> P(r, *y);
                    if (point_order(E, P) == 3) return Order3Witness{P};
                }
            } else {
                QuadExt xq = QuadExt::rational_in(r, d);
                if (auto y = quadext_sqrt(QuadExt::rational_in(y2, d))) {
                    QuadExt a2 = QuadExt::rational_in(E.a2, d), a4 = QuadExt::rational_in(E.a4, d),
                            a6 = QuadExt::rational_in(E.a6, d);
                    EllipticCurve<QuadExt> Eq(a2, a4, a6);
                    EllipticPoint<QuadExt> P(xq, *y);
                    if (point_order(Eq, P) == 3) return Order3Witness{P};
                }
            }
        } else if (f.degree() == 2 && d != 0) {
            // roots (-b +- sqrt(b^2-4c))/2 lie in Q(sqrt(d)) iff labels match
            Rational b = f[1], c = f[0];
            Rational disc = b * b - Rational(4) * c;
            if (disc.is_zero() || squarefree_part(disc) != d) continue;
            Rational scale = *is_square(disc / Rational(d));
            for (int sign : {1, -1}) {
                QuadExt x((-b) / Rational(2), Rational(sign) * scale / Rational(2), d);
                QuadExt a2 = QuadExt::rational_in(E.a2, d), a4 = QuadExt::rational_in(E.a4, d),
                        a6 = QuadExt::rational_in(E.a6, d);
                EllipticCurve<QuadExt> Eq(a2, a4, a6);
                QuadExt y2 = Eq.rhs(x);
                if (auto y = quadext_sqrt(y2)) {
                    EllipticPoint<QuadExt> P(x, *y);
                    if (point_order(Eq, P) == 3) return Order3Witness{P};
                }
            }
        }
    }
    return std::nullopt;
}

int count_3torsion(const EllipticCurve<Rational>& E, const Integer& d) {
    // |E[3]| over the field: 1 + 2 * #{abscissae of order-3 points in the field}
    QPoly psi = division_poly3(E);
    auto fac = factor_low_degree(psi);
    int abscissae = 0;
    for (const QPoly& f : fac.factors) {
        if (f.degree() == 1) {
            Rational r = -f[0];
            Rational y2 = E.rhs(r);
            if (y2.is_zero()) continue;
            Integer sf = squarefree_part(y2);
            if (sf == 1 || (d != 0 && sf == d)) abscissae++;
        } else if (f.degree() == 2 && d != 0) {
            Rational b = f[1], c = f[0];
            Rational disc = b * b - Rational(4) * c;
            if (disc.is_zero() || squarefree_part(disc) != d) continue;
            Rational scale = *is_square(disc / Rational(d));
            for (int sign : {1, -1}) {
                QuadExt x((-b) / Rational(2), Rational(sign) * scale / Rational(2), d);
                QuadExt y2q = QuadExt::rational_in(E.a6, d) +
                              x * (QuadExt::rational_in(E.a4, d) + x * (QuadExt::rational_in(E.a2, d) + x));
                if (quadext_sqrt(y2q)) abscissae++;
            }
        }
    }
    return 1 + 2 * abscissae;
}

EllipticCurve<Rational> quadratic_twist(const Rational& L, const Integer& D) {
    if (D == 1) throw std::domain_error("quadratic_twist: D = 1 is the trivial class");
    QuadExt::check_d(D);
    return EllipticCurve<Rational>::from_roots(Rational(D), Rational(D) * L);
}

EllipticPoint<QuadExt> twist_transport(const EllipticPoint<Rational>& P, const Integer& D) {
    if (P.infinity) return EllipticPoint<QuadExt>(QuadExt::rational_in(Rational(0), D));
    QuadExt x = QuadExt::rational_in(Rational(D) * P.x, D);
    QuadExt y = QuadExt(Rational(0), Rational(D) * P.y, D); // D sqrt(D) y
    return EllipticPoint<QuadExt>(x, y);
}

EllipticPoint<QuadExt> twist_transport_quad(const EllipticPoint<QuadExt>& P, const Integer& D) {
    if (P.infinity) return P;
    QuadExt Dq = QuadExt::rational_in(Rational(D), P.x.d());
    QuadExt sqrtD = QuadExt::root_of(D); // requires P's field to be Q(sqrt(D))
    return EllipticPoint<QuadExt>(Dq * P.x, Dq * sqrtD * P.y);
}

bool torsion_decomposition_check(const Rational& L, const Integer& D) {
    EllipticCurve<Rational> E = nice_curve_equation(L);
    EllipticCurve<Rational> Ed = quadratic_twist(L, D);
    int over_ext = count_3torsion(E, D);
    int over_q = count_3torsion(E, Integer(0));
    int twist_over_q = count_3torsion(Ed, Integer(0));
    return over_ext == over_q * twist_over_q;
}

IntegralModel integralize(const EllipticCurve<Rational>& E) {
    Integer u = 1;
    for (const Rational& coef : {E.a2, E.a4, E.a6}) {
        Integer d = coef.den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), d.get_mpz_t());
        u = u / g * d;
    }
    Rational u2{Integer(u * u)}, u4{Integer(u * u * u * u)}, u6{Integer(u * u * u * u * u * u)};
    return IntegralModel{EllipticCurve<Rational>(E.a2 * u2, E.a4 * u4, E.a6 * u6), u};
}

std::vector<EllipticPoint<Rational>> lutz_nagell_torsion(const EllipticCurve<Rational>& E) {
    IntegralModel im = integralize(E);
    const EllipticCurve<Rational>& Ei = im.curve;
    std::vector<EllipticPoint<Rational>> found;
    found.emplace_back(Rational(0)); // infinity

    auto try_xy = [&](const Rational& x, const Rational& y) {
        if (!x.is_integer() || !y.is_integer()) return;
        EllipticPoint<Rational> P(x, y);
        if (!on_curve(Ei, P)) return;
        if (!is_torsion(Ei, P)) return;
        if (std::find(found.begin(), found.end(), P) == found.end()) found.push_back(P);
    };

    // y = 0: rational roots of the cubic
    QPoly cubic(std::vector<Rational>{Ei.a6, Ei.a4, Ei.a2, Rational(1)});
    for (const Rational& r : rational_roots(cubic)) try_xy(r, Rational(0));

    // y != 0: y^2 | disc
    Integer disc_abs = ::abs(Ei.disc.num());
    for (const Integer& y : divisors(disc_abs)) {
        if (disc_abs % (y * y) != 0) continue;
        Rational y2{Integer(y * y)};
        QPoly shifted(std::vector<Rational>{Ei.a6 - y2, Ei.a4, Ei.a2, Rational(1)});
        for (const Rational& r : rational_roots(shifted)) {
            try_xy(r, Rational(Integer(y)));
            try_xy(r, Rational(Integer(-y)));
        }
    }

    // map back through (x, y) = (X/u^2, Y/u^3)
    std::vector<EllipticPoint<Rational>> out;
    Rational u2{Integer(im.u * im.u)}, u3{Integer(im.u * im.u * im.u)};
    for (auto& P : found) {
        if (P.infinity) out.emplace_back(Rational(0));
        else out.emplace_back(P.x / u2, P.y / u3);
    }
    return out;
}

} // namespace nicecurves
