#pragma once

#include "nicecurves/rational.hpp"

namespace nicecurves {

/// Element a + b*sqrt(d) of Q(sqrt(d)), d a squarefree integer != 0, 1.
/// d is part of the value; mixing fields is allowed only when one operand is
/// rational (b = 0), in which case it is coerced into the other field.
/// Field identity: Q(sqrt(d)) == Q(sqrt(d')) iff d == d' (d canonical squarefree).
class QuadExt {
public:
    QuadExt(Rational a, Rational b, const Integer& d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        check_d(d_);
    }
    QuadExt(long a, long b, long d) : QuadExt(Rational(a), Rational(b), Integer(d)) {}

    /// Rational constant inside Q(sqrt(d)).
    static QuadExt rational_in(Rational a, const Integer& d) { return QuadExt(std::move(a), Rational(0), d); }
    /// sqrt(d) itself.
    static QuadExt root_of(const Integer& d) { return QuadExt(Rational(0), Rational(1), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
    Rational trace() const { return a_ + a_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    QuadExt operator+(const QuadExt& o) const {
        Integer d = joint_d(o);
        return QuadExt(a_ + o.a_, b_ + o.b_, d);
    }
    QuadExt operator-(const QuadExt& o) const { return *this + (-o); }
    QuadExt operator*(const QuadExt& o) const {
        Integer d = joint_d(o);
        return QuadExt(a_ * o.a_ + Rational(d) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d);
    }
    QuadExt operator/(const QuadExt& o) const {
        if (o.is_zero()) throw std::domain_error("QuadExt: division by zero");
        Integer d = joint_d(o);
        Rational n = o.norm();
        QuadExt num = *this * o.conj();
        return QuadExt(num.a_ / n, num.b_ / n, d);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    bool operator==(const QuadExt& o) const {
        if (a_ != o.a_ || b_ != o.b_) return false;
        return b_.is_zero() || d_ == o.d_;
    }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    QuadExt inverse() const { return QuadExt(Rational(1), Rational(0), d_) / *this; }

    std::string str() const {
        if (b_.is_zero()) return a_.pretty();
        std::string s = a_.is_zero() ? "" : a_.pretty() + (b_.sign() > 0 ? " + " : " - ");
        std::string babs = b_.abs().pretty();
        if (s.empty() && b_.sign() < 0) s = "-";
        return s + (babs == "1" ? "" : babs + "*") + "sqrt(" + d_.get_str() + ")";
    }

    static void check_d(const Integer& d) {
        if (d == 0 || d == 1) throw std::domain_error("QuadExt: d must be != 0, 1");
        // reject non-squarefree d rather than normalizing
        if (squarefree_part(Rational(d)) != d) throw std::domain_error("QuadExt: d not squarefree");
    }

private:
    Integer joint_d(const QuadExt& o) const {
        if (d_ == o.d_) return d_;
        if (o.b_.is_zero()) return d_;
        if (b_.is_zero()) return o.d_;
        throw std::domain_error("QuadExt: mixed fields sqrt(" + d_.get_str() + ") vs sqrt(" + o.d_.get_str() + ")");
    }

    Rational a_, b_;
    Integer d_;
};

/// Square root of q inside its own field Q(sqrt(d)), if one exists there.
/// Solves (x + y*sqrt(d))^2 = a + b*sqrt(d) exactly.
inline std::optional<QuadExt> quadext_sqrt(const QuadExt& q) {
    const Integer& d = q.d();
    if (q.is_zero()) return QuadExt::rational_in(Rational(0), d);
    if (q.is_rational()) {
        // either a is a rational square, or a/d is
        if (auto r = is_square(q.a())) return QuadExt::rational_in(*r, d);
        if (auto r = is_square(q.a() / Rational(d))) return QuadExt(Rational(0), *r, d);
        return std::nullopt;
    }
    // x^2 and d*y^2 are roots of T^2 - a*T + d*b^2/4; rational iff a^2 - d*b^2 is square
    auto r = is_square(q.norm());
    if (!r) return std::nullopt;
    for (int sign : {1, -1}) {
        Rational x2 = (q.a() + Rational(sign) * *r) / Rational(2);
        if (auto x = is_square(x2)) {
            if (!x->is_zero()) {
                Rational y = q.b() / (Rational(2) * *x);
                QuadExt root(*x, y, d);
                if (root * root == q) return root;
            }
        }
    }
    return std::nullopt;
}

} // namespace nicecurves
