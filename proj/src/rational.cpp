#include "nicecurves/rational.hpp"

#include <algorithm>
#include <map>

namespace nicecurves {

Integer height(const Rational& q) {
    Integer n = ::abs(q.num());
    Integer d = q.den();
    return n > d ? n : d;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    return isqrt(n);
}

std::optional<Rational> is_square(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    auto rn = integer_sqrt_exact(q.num());
    if (!rn) return std::nullopt;
    auto rd = integer_sqrt_exact(q.den());
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Integer mulmod(const Integer& a, const Integer& b, const Integer& m) {
    return Integer(a * b % m);
}

// Pollard rho with Brent cycle detection. n odd composite, not a prime power
// handled by the caller loop.
Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    struct SeededRng {
        gmp_randclass r{gmp_randinit_default};
        SeededRng() { r.seed(0x4E1CEul); }
    };
    thread_local SeededRng state;
    gmp_randclass& rng = state.r;
    while (true) {
        Integer y = rng.get_z_range(n - 3) + 2;
        Integer c = rng.get_z_range(n - 2) + 1;
        Integer x = y, d = 1, q = 1, ys = y;
        const unsigned long step = 128;
        unsigned long r = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(step, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, ::abs(Integer(x - y)), n);
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                Integer diff = ::abs(Integer(x - ys));
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
    if (n <= 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

} // namespace

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n_in) {
    Integer n = ::abs(n_in);
    thread_local std::map<Integer, std::vector<std::pair<Integer, unsigned>>> cache;
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    Integer key = n;
    std::map<Integer, unsigned> acc;
    if (n > 1) {
        for (long p : {2L, 3L, 5L}) {
            while (n % p == 0) {
                acc[Integer(p)]++;
                n /= p;
            }
        }
        // wheel over 6k+-1 up to 10^5
        for (long p = 7; p <= 100000 && Integer(p) * p <= n; p += 6) {
            for (long q : {p, p + 4}) {
                while (n % q == 0) {
                    acc[Integer(q)]++;
                    n /= q;
                }
            }
        }
        factor_into(n, acc);
    }
    std::vector<std::pair<Integer, unsigned>> out(acc.begin(), acc.end());
    if (cache.size() > 100000) cache.clear();
    cache.emplace(std::move(key), out);
    return out;
}

std::vector<Integer> divisors(const Integer& n) {
    auto fs = factor(n);
    std::vector<Integer> divs{1};
    for (auto& [p, e] : fs) {
        size_t base = divs.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Integer squarefree_part(const Rational& q) {
    if (q.is_zero()) throw std::domain_error("squarefree_part: zero input");
    // q = n/d = (n*d)/d^2, so sf(q) = sf(n*d)
    Integer nd = q.num() * q.den();
    int s = sgn(nd);
    auto fs = factor(nd);
    Integer d = 1;
    for (auto& [p, e] : fs)
        if (e % 2 == 1) d *= p;
    return s < 0 ? Integer(-d) : d;
}

} // namespace nicecurves
