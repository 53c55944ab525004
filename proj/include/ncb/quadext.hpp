#pragma once

#include <complex>
#include <ostream>
#include <stdexcept>

#include "ncb/rational.hpp"

namespace ncb {

// The conformal parameter tau of the torus Dirac operator, stored by the
// data every spectrum and constraint actually depends on: Re(tau), |tau|^2
// (both rational) and the sign of Im(tau). tau itself satisfies
// tau^2 = 2*Re(tau)*tau - |tau|^2 over Q.
struct TauParams {
    Rational re;
    Rational abs2;
    int im_sign; // +1 or -1

    TauParams() : re(0), abs2(1), im_sign(1) {}
    TauParams(Rational re_, Rational abs2_, int im_sign_) : re(re_), abs2(abs2_), im_sign(im_sign_) {
        if (im_sign != 1 && im_sign != -1) throw std::domain_error("TauParams: im_sign must be +1/-1");
        if (!(abs2 > re * re)) throw std::domain_error("TauParams: Im(tau) must be nonzero");
    }

    Rational im_squared() const { return abs2 - re * re; }
    bool operator==(const TauParams& o) const {
        return re == o.re && abs2 == o.abs2 && im_sign == o.im_sign;
    }
    bool operator!=(const TauParams& o) const { return !(*this == o); }

    std::complex<double> to_complex() const {
        double im = im_sign * std::sqrt(im_squared().to_double());
        return {re.to_double(), im};
    }
};

// Element x + y*tau of the quadratic extension Q(tau). Since tau is never
// rational (Im(tau) != 0), the (x, y) coordinates are canonical and
// zero-testing is exact. Conjugation stays inside the field:
// conj(tau) = 2*Re(tau) - tau.
class QuadExt {
public:
    QuadExt() : x_(0), y_(0) {}
    QuadExt(Rational x, Rational y, TauParams tau) : x_(x), y_(y), tau_(tau) {}

    static QuadExt from_rational(const Rational& r, const TauParams& tau) {
        return QuadExt(r, Rational(0), tau);
    }
    static QuadExt tau_value(const TauParams& tau) { return QuadExt(Rational(0), Rational(1), tau); }
    // x + y*tau
    static QuadExt linear(const Rational& x, const Rational& y, const TauParams& tau) {
        return QuadExt(x, y, tau);
    }

    const Rational& coeff_one() const { return x_; }
    const Rational& coeff_tau() const { return y_; }
    const TauParams& tau() const { return tau_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
    bool is_rational() const { return y_.is_zero(); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return QuadExt(a.x_ + b.x_, a.y_ + b.y_, a.params_of(b));
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return QuadExt(a.x_ - b.x_, a.y_ - b.y_, a.params_of(b));
    }
    QuadExt operator-() const { return QuadExt(-x_, -y_, tau_); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        // (x1 + y1 t)(x2 + y2 t),  t^2 = 2 re t - abs2
        TauParams p = a.params_of(b);
        Rational yy = a.y_ * b.y_;
        return QuadExt(a.x_ * b.x_ - p.abs2 * yy,
                       a.x_ * b.y_ + a.y_ * b.x_ + Rational(2) * p.re * yy, p);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    QuadExt conj() const { return QuadExt(x_ + Rational(2) * tau_.re * y_, -y_, tau_); }

    // |v|^2 = v * conj(v); always rational.
    Rational norm_squared() const {
        QuadExt n = *this * conj();
        if (!n.is_rational()) throw std::logic_error("QuadExt: norm not rational");
        return n.coeff_one();
    }

    std::complex<double> to_complex() const {
        return x_.to_double() + y_.to_double() * tau_.to_complex();
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& v) {
        return os << v.x_.str() << " + " << v.y_.str() << "*tau";
    }

private:
    // Zero values (e.g. default-constructed) carry no tau information and
    // combine with anything.
    void check(const QuadExt& o) const {
        if (tau_ != o.tau_ && !is_zero() && !o.is_zero())
            throw std::logic_error("QuadExt: mixed tau parameters");
    }
    TauParams params_of(const QuadExt& o) const { return is_zero() ? o.tau_ : tau_; }

    Rational x_, y_;
    TauParams tau_;
};

} // namespace ncb
