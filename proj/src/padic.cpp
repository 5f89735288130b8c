#include "nicecurves/padic.hpp"

#include "nicecurves/fp.hpp"

#include <algorithm>
#include <map>

namespace nicecurves {

namespace {

// flat coefficient floor is lost after integration; only eval_floor survives
constexpr long kNoFloor = -(1L << 40);

long addv(long a, long b) {
    if (a >= kValInf || b >= kValInf) return kValInf;
    if (a <= kNoFloor || b <= kNoFloor) return kNoFloor;
    return a + b;
}

Integer modinv(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("modinv: not invertible");
    return r;
}

} // namespace

Integer padic_pow(int64_t p, long k) {
    if (k < 0) throw std::domain_error("padic_pow: negative exponent");
    // hot path: memoized per (p, k)
    thread_local std::map<std::pair<int64_t, long>, Integer> cache;
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return cache.emplace(key, std::move(r)).first->second;
}

long ord_p(const Integer& n, int64_t p) {
    if (n == 0) return kValInf;
    Integer m = n;
    long e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

PadicNumber PadicNumber::make(int64_t p, long val, Integer unit, int prec) {
    if (p < 3) throw std::domain_error("PadicNumber: p must be an odd prime");
    if (prec <= 0) return zero_to(p, val + prec);
    Integer mod = padic_pow(p, prec);
    unit %= mod;
    if (unit < 0) unit += mod;
    if (unit == 0) return zero_to(p, val + prec);
    long e = ord_p(unit, p);
    if (e > 0) {
        if (e >= prec) return zero_to(p, val + prec);
        unit /= padic_pow(p, e);
        unit %= padic_pow(p, prec - e);
        return PadicNumber(p, val + e, prec - static_cast<int>(e), std::move(unit));
    }
    return PadicNumber(p, val, prec, std::move(unit));
}

PadicNumber PadicNumber::from_integer(const Integer& n, int64_t p, int prec) {
    if (p < 3) throw std::domain_error("PadicNumber: p must be an odd prime");
    if (n == 0) return exact_zero(p);
    long e = ord_p(n, p);
    Integer u = n / padic_pow(p, e);
    Integer mod = padic_pow(p, prec);
    u %= mod;
    if (u < 0) u += mod;
    return PadicNumber(p, e, prec, std::move(u));
}

PadicNumber PadicNumber::from_rational(const Rational& q, int64_t p, int prec) {
    if (q.is_zero()) return exact_zero(p);
    Integer num = q.num(), den = q.den();
    long e = ord_p(num, p) - ord_p(den, p);
    Integer nu = num / padic_pow(p, ord_p(num, p));
    Integer du = den / padic_pow(p, ord_p(den, p));
    Integer mod = padic_pow(p, prec);
    Integer u = nu % mod * modinv(du, mod) % mod;
    if (u < 0) u += mod;
    return PadicNumber(p, e, prec, std::move(u));
}

int64_t PadicNumber::leading_residue() const {
    if (is_tracked_zero()) throw InsufficientPrecision("leading_residue of tracked zero");
    Integer r = unit_ % p_;
    return r.get_si();
}

PadicNumber PadicNumber::operator-() const {
    if (is_tracked_zero()) return *this;
    Integer mod = padic_pow(p_, prec_);
    return PadicNumber(p_, val_, prec_, Integer(mod - unit_));
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (p_ != o.p_) throw std::domain_error("PadicNumber: mixed primes");
    long A = std::min(abs_prec(), o.abs_prec());
    if (is_exact_zero() && o.is_exact_zero()) return exact_zero(p_);
    // collect nonzero contributions
    long base = kValInf;
    if (!is_tracked_zero()) base = std::min(base, val_);
    if (!o.is_tracked_zero()) base = std::min(base, o.val_);
    if (base >= A) return zero_to(p_, A);
    long digits = A - base;
    Integer mod = padic_pow(p_, digits);
    Integer sum = 0;
    if (!is_tracked_zero()) sum += unit_ * padic_pow(p_, val_ - base) % mod;
    if (!o.is_tracked_zero()) sum += o.unit_ * padic_pow(p_, o.val_ - base) % mod;
    sum %= mod;
    if (sum < 0) sum += mod;
    return make(p_, base, std::move(sum), static_cast<int>(digits));
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (p_ != o.p_) throw std::domain_error("PadicNumber: mixed primes");
    if (is_exact_zero() || o.is_exact_zero()) return exact_zero(p_);
    if (is_tracked_zero() || o.is_tracked_zero()) {
        long v = addv(val_lower_bound(), o.val_lower_bound());
        return zero_to(p_, std::min(v, kValInf));
    }
    int prec = std::min(prec_, o.prec_);
    Integer mod = padic_pow(p_, prec);
    Integer u = unit_ % mod * (o.unit_ % mod) % mod;
    return PadicNumber(p_, val_ + o.val_, prec, std::move(u));
}

PadicNumber PadicNumber::inverse() const {
    if (is_tracked_zero()) throw InsufficientPrecision("PadicNumber: inverse of (tracked) zero");
    Integer mod = padic_pow(p_, prec_);
    return PadicNumber(p_, -val_, prec_, modinv(unit_, mod));
}

PadicNumber PadicNumber::times_exact(const Integer& n) const {
    if (n == 0) return exact_zero(p_);
    if (is_tracked_zero()) {
        if (is_exact_zero()) return *this;
        return zero_to(p_, val_ + ord_p(n, p_));
    }
    long e = ord_p(n, p_);
    Integer mod = padic_pow(p_, prec_);
    Integer u = unit_ * (n / padic_pow(p_, e)) % mod;
    if (u < 0) u += mod;
    return PadicNumber(p_, val_ + e, prec_, std::move(u));
}

PadicNumber PadicNumber::div_exact(const Integer& n) const {
    if (n == 0) throw std::domain_error("PadicNumber: division by zero integer");
    if (is_tracked_zero()) {
        if (is_exact_zero()) return *this;
        return zero_to(p_, val_ - ord_p(n, p_));
    }
    long e = ord_p(n, p_);
    Integer mod = padic_pow(p_, prec_);
    Integer u = unit_ * modinv(Integer(n / padic_pow(p_, e)), mod) % mod;
    if (u < 0) u += mod;
    return PadicNumber(p_, val_ - e, prec_, std::move(u));
}

PadicNumber PadicNumber::cap_abs(long A) const {
    if (A >= abs_prec()) return *this;
    if (is_tracked_zero()) return zero_to(p_, std::min(val_, A));
    if (val_ >= A) return zero_to(p_, A);
    Integer mod = padic_pow(p_, A - val_);
    return PadicNumber(p_, val_, static_cast<int>(A - val_), Integer(unit_ % mod));
}

bool PadicNumber::same_value(const PadicNumber& o) const {
    if (p_ != o.p_) return false;
    long A = std::min(abs_prec(), o.abs_prec());
    PadicNumber a = cap_abs(A), b = o.cap_abs(A);
    if (a.is_tracked_zero() || b.is_tracked_zero()) return a.is_tracked_zero() && b.is_tracked_zero();
    return a.val_ == b.val_ && a.unit_ == b.unit_;
}

std::string PadicNumber::str() const {
    if (is_exact_zero()) return "0";
    if (is_tracked_zero()) return "O(" + std::to_string(p_) + "^" + std::to_string(val_) + ")";
    return unit_.get_str() + "*" + std::to_string(p_) + "^" + std::to_string(val_) + " + O(" +
           std::to_string(p_) + "^" + std::to_string(abs_prec()) + ")";
}

PadicNumber padic_sqrt(const PadicNumber& a) {
    int64_t p = a.p();
    if (a.is_exact_zero()) return a;
    if (a.is_tracked_zero()) return PadicNumber::zero_to(p, (a.val_lower_bound() + 1) / 2);
    if (a.val() % 2 != 0) throw OddValuation("padic_sqrt: odd valuation " + std::to_string(a.val()));
    int64_t r0 = a.leading_residue();
    auto root = Fp(r0, p).sqrt();
    if (!root) throw NonResidue("padic_sqrt: unit " + std::to_string(r0) + " is a non-residue mod " + std::to_string(p));
    int prec = a.prec();
    Integer x(root->v);
    long have = 1;
    Integer inv2 = modinv(Integer(2), padic_pow(p, prec));
    while (have < prec) {
        have = std::min(2 * have, static_cast<long>(prec));
        Integer mod = padic_pow(p, have);
        x = (x + a.unit() % mod * modinv(x, mod)) % mod * inv2 % mod;
    }
    PadicNumber res = PadicNumber::make(p, a.val() / 2, x, prec);
    // canonical branch: leading residue in [1, (p-1)/2]
    if (res.leading_residue() > (p - 1) / 2) res = -res;
    return res;
}

// ---------------------------------------------------------------------------
// PadicSeries
// ---------------------------------------------------------------------------

namespace {

long vlb_or_inf(const PadicNumber& x) { return x.val_lower_bound(); }

long coeff_min(const PadicSeries& s) {
    long m = s.coeff_floor();
    for (auto& c : s.coeffs()) m = std::min(m, vlb_or_inf(c));
    return m;
}

long eval_min(const PadicSeries& s) {
    long m = s.eval_floor();
    for (size_t k = 0; k < s.coeffs().size(); ++k) m = std::min(m, addv(vlb_or_inf(s.coeffs()[k]), static_cast<long>(k)));
    return m;
}

} // namespace

PadicSeries PadicSeries::from_coeffs(int64_t p, std::vector<PadicNumber> coeffs, long trunc, long coeff_floor,
                                     long eval_floor) {
    PadicSeries s(p, trunc);
    s.c_ = std::move(coeffs);
    if (static_cast<long>(s.c_.size()) > trunc) throw std::domain_error("PadicSeries: more coefficients than trunc");
    s.coeff_floor_ = coeff_floor;
    s.eval_floor_ = eval_floor;
    return s;
}

PadicSeries PadicSeries::from_poly(const QPoly& poly, int64_t p, int prec) {
    PadicSeries s(p, kValInf);
    for (auto& q : poly.coeffs()) s.c_.push_back(PadicNumber::from_rational(q, p, prec));
    return s;
}

PadicSeries PadicSeries::with_trunc(long trunc) const {
    PadicSeries out(p_, trunc);
    long cf = coeff_floor_, ef = eval_floor_;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (static_cast<long>(k) < trunc) {
            out.c_.push_back(c_[k]);
        } else {
            cf = std::min(cf, vlb_or_inf(c_[k]));
            ef = std::min(ef, addv(vlb_or_inf(c_[k]), static_cast<long>(k)));
        }
    }
    out.coeff_floor_ = cf;
    out.eval_floor_ = ef;
    return out;
}

PadicSeries PadicSeries::operator+(const PadicSeries& o) const {
    if (p_ != o.p_) throw std::domain_error("PadicSeries: mixed primes");
    PadicSeries out(p_, std::min(trunc_, o.trunc_));
    size_t n = std::max(c_.size(), o.c_.size());
    long cf = std::min(coeff_floor_, o.coeff_floor_);
    long ef = std::min(eval_floor_, o.eval_floor_);
    for (size_t k = 0; k < n; ++k) {
        PadicNumber v = coeff(k) + o.coeff(k);
        if (static_cast<long>(k) < out.trunc_) {
            out.c_.push_back(std::move(v));
        } else {
            cf = std::min(cf, vlb_or_inf(v));
            ef = std::min(ef, addv(vlb_or_inf(v), static_cast<long>(k)));
        }
    }
    out.coeff_floor_ = cf;
    out.eval_floor_ = ef;
    return out;
}

PadicSeries PadicSeries::negate() const {
    PadicSeries out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

PadicSeries PadicSeries::operator-(const PadicSeries& o) const { return *this + o.negate(); }

PadicSeries PadicSeries::operator*(const PadicSeries& o) const {
    if (p_ != o.p_) throw std::domain_error("PadicSeries: mixed primes");
    if (coeff_floor_ <= kNoFloor || o.coeff_floor_ <= kNoFloor)
        throw std::logic_error("PadicSeries: multiplying a series without a coefficient floor");
    long M = std::min(trunc_, o.trunc_);
    long full = c_.empty() || o.c_.empty() ? 0 : static_cast<long>(c_.size() + o.c_.size()) - 1;
    long keep = std::min(M, full);
    PadicSeries out(p_, M);
    out.c_.assign(std::max<long>(keep, 0), PadicNumber::exact_zero(p_));
    long dropped_cf = kValInf, dropped_ef = kValInf;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_exact_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            long k = static_cast<long>(i + j);
            if (k < keep) {
                out.c_[k] = out.c_[k] + c_[i] * o.c_[j];
            } else {
                long cv = addv(vlb_or_inf(c_[i]), vlb_or_inf(o.c_[j]));
                dropped_cf = std::min(dropped_cf, cv);
                dropped_ef = std::min(dropped_ef, addv(cv, k));
            }
        }
    }
    long cm_a = coeff_min(*this), cm_b = coeff_min(o);
    long em_a = eval_min(*this), em_b = eval_min(o);
    out.coeff_floor_ = std::min({addv(coeff_floor_, cm_b), addv(o.coeff_floor_, cm_a), addv(coeff_floor_, o.coeff_floor_), dropped_cf});
    out.eval_floor_ = std::min({addv(eval_floor_, em_b), addv(o.eval_floor_, em_a), addv(eval_floor_, o.eval_floor_), dropped_ef});
    return out;
}

PadicSeries PadicSeries::scale(const PadicNumber& s) const {
    PadicSeries out = *this;
    for (auto& c : out.c_) c = c * s;
    long v = vlb_or_inf(s);
    out.coeff_floor_ = addv(coeff_floor_, v);
    out.eval_floor_ = addv(eval_floor_, v);
    return out;
}

PadicSeries PadicSeries::times_tpow(long k) const {
    PadicSeries out(p_, addv(trunc_, k));
    out.c_.assign(k, PadicNumber::exact_zero(p_));
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    out.coeff_floor_ = coeff_floor_;
    out.eval_floor_ = addv(eval_floor_, k);
    return out;
}

PadicSeries PadicSeries::antiderivative() const {
    PadicSeries out(p_, addv(trunc_, 1));
    out.c_.assign(1, PadicNumber::exact_zero(p_));
    for (size_t k = 0; k < c_.size(); ++k) out.c_.push_back(c_[k].div_exact(Integer(k + 1)));
    if (coeff_floor_ >= kValInf) {
        out.coeff_floor_ = kValInf;
        out.eval_floor_ = kValInf;
        return out;
    }
    // omitted term j > trunc contributes val >= coeff_floor + j - ord_p(j);
    // minimized explicitly over the possible orders e (j >= max(trunc+1, p^e))
    long M1 = addv(trunc_, 1);
    long best = kValInf;
    Integer pe = 1;
    for (long e = 0; e < 60; ++e) {
        long jmin = M1;
        if (pe > M1) jmin = (pe > Integer(1L << 40)) ? (1L << 40) : pe.get_si();
        best = std::min(best, coeff_floor_ + jmin - e);
        if (pe > M1 + 100) break;
        pe *= p_;
    }
    out.coeff_floor_ = kNoFloor;
    out.eval_floor_ = std::min(eval_floor_, best);
    return out;
}

PadicSeries PadicSeries::rescale_by_p() const {
    if (trunc_ >= kValInf && coeff_floor_ < kValInf)
        throw std::logic_error("PadicSeries: rescale of untruncated series with omitted terms");
    PadicSeries out(p_, trunc_);
    Integer pk = 1;
    for (size_t k = 0; k < c_.size(); ++k) {
        out.c_.push_back(c_[k].times_exact(pk));
        pk *= p_;
    }
    out.coeff_floor_ = eval_floor_; // val(a_k p^k) = val(a_k) + k >= eval_floor for k >= trunc
    out.eval_floor_ = addv(eval_floor_, std::min(trunc_, kValInf));
    return out;
}

PadicNumber PadicSeries::eval(const PadicNumber& t) const {
    if (t.p() != p_) throw std::domain_error("PadicSeries: mixed primes");
    if (t.val_lower_bound() < 1) throw DiskViolation("PadicSeries::eval: val(t) < 1");
    PadicNumber acc = PadicNumber::exact_zero(p_);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc.cap_abs(eval_floor_);
}

std::string PadicSeries::str(int max_terms) const {
    std::string s;
    int shown = 0;
    for (size_t k = 0; k < c_.size() && shown < max_terms; ++k) {
        if (c_[k].is_exact_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[k].str() + ")t^" + std::to_string(k);
        ++shown;
    }
    if (s.empty()) s = "0";
    if (trunc_ < kValInf) s += " + O(t^" + std::to_string(trunc_) + ")";
    return s;
}

PadicSeries series_inverse(const PadicSeries& s) {
    PadicNumber s0 = s.coeff(0);
    if (s0.is_tracked_zero() || s0.val() != 0) throw std::domain_error("series_inverse: constant term not a unit");
    if (coeff_min(s) < 0) throw std::domain_error("series_inverse: negative coefficient valuations unsupported");
    long len = std::min(s.trunc(), kValInf);
    if (len >= kValInf) throw std::domain_error("series_inverse: needs a finite truncation");
    std::vector<PadicNumber> b(len, PadicNumber::exact_zero(s.p()));
    PadicNumber inv0 = s0.inverse();
    b[0] = inv0;
    for (long k = 1; k < len; ++k) {
        PadicNumber acc = PadicNumber::exact_zero(s.p());
        for (long i = 1; i <= k; ++i) {
            if (s.coeff(i).is_exact_zero()) continue;
            acc = acc + s.coeff(i) * b[k - i];
        }
        b[k] = -(acc * inv0);
    }
    // unit-coefficient inputs keep unit coefficients: flat floor 0
    return PadicSeries::from_coeffs(s.p(), std::move(b), len, 0, len);
}

PadicSeries series_sqrt(const PadicSeries& s, const PadicNumber& y0) {
    PadicNumber s0 = s.coeff(0);
    if (s0.is_tracked_zero() || s0.val() != 0) throw std::domain_error("series_sqrt: constant term not a unit");
    if (!(y0 * y0).same_value(s0)) throw std::domain_error("series_sqrt: y0^2 != s(0)");
    if (coeff_min(s) < 0) throw std::domain_error("series_sqrt: negative coefficient valuations unsupported");
    long len = std::min(s.trunc(), kValInf);
    if (len >= kValInf) throw std::domain_error("series_sqrt: needs a finite truncation");
    std::vector<PadicNumber> y(len, PadicNumber::exact_zero(s.p()));
    y[0] = y0;
    PadicNumber inv2y0 = (y0.times_exact(2)).inverse();
    for (long k = 1; k < len; ++k) {
        PadicNumber acc = s.coeff(k);
        for (long i = 1; i < k; ++i) {
            if (y[i].is_exact_zero() || y[k - i].is_exact_zero()) continue;
            acc = acc - y[i] * y[k - i];
        }
        y[k] = acc * inv2y0;
    }
    return PadicSeries::from_coeffs(s.p(), std::move(y), len, 0, len);
}

long strassmann_bound(const PadicSeries& s) {
    bool found = false;
    long min_val = kValInf, argmax = -1;
    std::vector<std::pair<long, long>> unknowns; // (index, val lower bound)
    for (size_t k = 0; k < s.coeffs().size(); ++k) {
        const PadicNumber& c = s.coeffs()[k];
        if (c.is_tracked_zero()) {
            if (!c.is_exact_zero()) unknowns.emplace_back(static_cast<long>(k), c.val_lower_bound());
            continue;
        }
        if (!found || c.val() <= min_val) {
            if (!found || c.val() < min_val) min_val = c.val();
            argmax = static_cast<long>(k);
            found = true;
        }
    }
    if (!found) throw InsufficientPrecision("strassmann_bound: no certified nonzero coefficient");
    for (auto& [k, bound] : unknowns)
        if (bound <= min_val)
            throw InsufficientPrecision("strassmann_bound: coefficient " + std::to_string(k) +
                                        " known only to O(p^" + std::to_string(bound) + ")");
    if (s.coeff_floor() <= min_val)
        throw InsufficientPrecision("strassmann_bound: omitted-term bound does not exceed the minimum");
    return argmax;
}

PadicNumber evaluate_symmetric(const PadicSeries& s, const ParamPoly& u) {
    int64_t p = s.p();
    if (u.degree == 1) {
        if (u.e1.val_lower_bound() < 1) throw DiskViolation("evaluate_symmetric: root valuation < 1");
        return s.eval(u.e1);
    }
    if (u.degree != 2) throw std::domain_error("evaluate_symmetric: degree must be 1 or 2");
    if (u.e1.val_lower_bound() < 1 || u.e2.val_lower_bound() < 2)
        throw DiskViolation("evaluate_symmetric: root valuations < 1");
    // Newton: p_0 = 2, p_1 = e1, p_k = e1 p_{k-1} - e2 p_{k-2}
    PadicNumber acc = s.coeff(0).times_exact(2);
    PadicNumber pk_prev = PadicNumber::from_integer(2, p, kDefaultPrecision * 4);
    PadicNumber pk = u.e1;
    for (size_t k = 1; k < s.coeffs().size(); ++k) {
        if (!s.coeffs()[k].is_exact_zero()) acc = acc + s.coeffs()[k] * pk;
        PadicNumber next = u.e1 * pk - u.e2 * pk_prev;
        pk_prev = pk;
        pk = next;
    }
    return acc.cap_abs(s.eval_floor());
}

} // namespace nicecurves
