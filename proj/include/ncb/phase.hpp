#pragma once

#include <ostream>
#include <string>

#include "ncb/rational.hpp"

namespace ncb {

// Unit complex number exp(2*pi*i*a) * exp(i*pi*theta*b) with rational a, b
// and theta a fixed irrational deformation parameter kept symbolic.
// Because theta is irrational, equality of two such phases is decidable:
// the b exponents must match exactly and the a exponents mod 1.
class ExactPhase {
public:
    ExactPhase() : a_(0), b_(0) {}
    ExactPhase(Rational a, Rational b) : a_(a.mod1()), b_(b) {}

    static ExactPhase one() { return ExactPhase(); }
    static ExactPhase minus_one() { return ExactPhase(Rational(1, 2), Rational(0)); }
    // exp(2*pi*i*a)
    static ExactPhase root_of_unity(Rational a) { return ExactPhase(a, Rational(0)); }
    // exp(i*pi*theta*b)
    static ExactPhase theta_power(Rational b) { return ExactPhase(Rational(0), b); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_one() const { return a_.is_zero() && b_.is_zero(); }
    bool is_real_sign() const { return b_.is_zero() && (a_.is_zero() || a_ == Rational(1, 2)); }
    // Valid only when is_real_sign().
    int real_sign() const { return a_.is_zero() ? 1 : -1; }

    friend ExactPhase operator*(const ExactPhase& x, const ExactPhase& y) {
        return ExactPhase(x.a_ + y.a_, x.b_ + y.b_);
    }
    ExactPhase& operator*=(const ExactPhase& o) { return *this = *this * o; }

    ExactPhase conj() const { return ExactPhase(-a_, -b_); }
    ExactPhase inverse() const { return conj(); }

    ExactPhase pow(long long n) const {
        return ExactPhase(a_ * Rational(n), b_ * Rational(n));
    }

    friend bool operator==(const ExactPhase& x, const ExactPhase& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ExactPhase& x, const ExactPhase& y) { return !(x == y); }
    friend bool operator<(const ExactPhase& x, const ExactPhase& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    std::string str() const {
        if (is_one()) return "1";
        if (is_real_sign()) return "-1";
        std::string s;
        if (!a_.is_zero()) s += "exp(2*pi*i*" + a_.str() + ")";
        if (!b_.is_zero()) {
            if (!s.empty()) s += "*";
            s += "exp(i*pi*theta*" + b_.str() + ")";
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactPhase& p) { return os << p.str(); }

private:
    Rational a_; // coefficient of 2*pi*i, reduced mod 1
    Rational b_; // coefficient of i*pi*theta
};

} // namespace ncb
