#include "nicecurves/mumford.hpp"

namespace nicecurves {

std::vector<MumfordDivisor<Fp>> enumerate_jacobian_Fp(const HyperCurve& C, int64_t p) {
    if (C.genus() != 2 || C.degree() != 5) throw std::domain_error("enumerate_jacobian_Fp: odd genus-2 model only");
    if (!good_reduction(C, p)) throw BadPrime("enumerate_jacobian_Fp: bad reduction");
    UniPoly<Fp> f = reduce_mod_p(C.g, p);
    std::vector<MumfordDivisor<Fp>> out;
    out.push_back(mumford_identity(Fp(1, p)));

    // deg u = 1: u = x - a, v = b with b^2 = f(a)
    for (int64_t a = 0; a < p; ++a) {
        Fp fa = f.eval(Fp(a, p));
        for (int64_t b = 0; b < p; ++b) {
            Fp bb(b, p);
            if (bb * bb == fa) {
                out.push_back(MumfordDivisor<Fp>{UniPoly<Fp>(std::vector<Fp>{Fp(-a, p), Fp(1, p)}),
                                                 bb.is_zero() ? UniPoly<Fp>() : UniPoly<Fp>::constant(bb)});
            }
        }
    }

    // deg u = 2: u = x^2 + a x + b, v = c x + d, u | v^2 - f
    for (int64_t a = 0; a < p; ++a) {
        for (int64_t b = 0; b < p; ++b) {
            UniPoly<Fp> u(std::vector<Fp>{Fp(b, p), Fp(a, p), Fp(1, p)});
            for (int64_t cc = 0; cc < p; ++cc) {
                for (int64_t dd = 0; dd < p; ++dd) {
                    std::vector<Fp> vc;
                    if (cc != 0) vc = {Fp(dd, p), Fp(cc, p)};
                    else if (dd != 0) vc = {Fp(dd, p)};
                    UniPoly<Fp> v(std::move(vc));
                    if (((v * v - f) % u).is_zero()) out.push_back(MumfordDivisor<Fp>{u, v});
                }
            }
        }
    }
    return out;
}

MumfordDivisor<Fp> reduce_point_class(const HyperCurve& C, const WPPoint& P, int64_t p) {
    if (P.is_infinite()) return mumford_identity(Fp(1, p));
    Fp x = Fp::reduce(P.X, p), y = Fp::reduce(P.Y, p);
    auto D = mumford_from_point(x, y);
    if (!mumford_valid(reduce_mod_p(C.g, p), D))
        throw BadPrime("reduce_point_class: reduction leaves the curve");
    return D;
}

long order_in_JFp(const HyperCurve& C, const MumfordDivisor<Fp>& D, int64_t p) {
    long n = jacobian_order_Fp(C, p);
    UniPoly<Fp> f = reduce_mod_p(C.g, p);
    return order_in_group(f, D, n);
}

} // namespace nicecurves
