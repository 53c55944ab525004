#pragma once

#include <array>
#include <complex>
#include <ostream>
#include <stdexcept>

#include "ncb/phase.hpp"
#include "ncb/rational.hpp"

namespace ncb {

// Element of the cyclotomic field Q(zeta_24), zeta_24 = exp(2*pi*i/24),
// in the canonical basis {1, z, ..., z^7} modulo Phi_24(z) = z^8 - z^4 + 1.
// Canonical coordinates make zero-testing of root-of-unity sums exact,
// which plain (coefficient, phase) term lists cannot do (1 + w + w^2 = 0
// for w a cube root of unity has no term-wise cancellation).
//
// Every phase this project produces has exponent a with denominator
// dividing 24, so Q(zeta_24) hosts all of them.
class Cyc24 {
public:
    static constexpr int order = 24;
    static constexpr int degree = 8;

    Cyc24() { c_.fill(Rational(0)); }

    static Cyc24 from_rational(const Rational& r) {
        Cyc24 x;
        x.c_[0] = r;
        return x;
    }
    static Cyc24 one() { return from_rational(Rational(1)); }

    // zeta_24^e
    static Cyc24 root(long long e) {
        Cyc24 x;
        x.add_power(e, Rational(1));
        return x;
    }

    // exp(2*pi*i*a); requires 24*a integral.
    static Cyc24 from_phase_exponent(const Rational& a) {
        Rational e = a * Rational(order);
        if (!e.is_integer())
            throw std::domain_error("Cyc24: phase exponent " + a.str() + " not a 24th root of unity");
        return root(e.num());
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (int i = 1; i < degree; ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    const Rational& rational_part() const { return c_[0]; }
    const std::array<Rational, degree>& coeffs() const { return c_; }

    friend Cyc24 operator+(const Cyc24& a, const Cyc24& b) {
        Cyc24 r;
        for (int i = 0; i < degree; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Cyc24 operator-(const Cyc24& a, const Cyc24& b) {
        Cyc24 r;
        for (int i = 0; i < degree; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    Cyc24 operator-() const {
        Cyc24 r;
        for (int i = 0; i < degree; ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend Cyc24 operator*(const Cyc24& a, const Cyc24& b) {
        Cyc24 r;
        for (int i = 0; i < degree; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j < degree; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.add_power(i + j, a.c_[i] * b.c_[j]);
            }
        }
        return r;
    }
    Cyc24& operator+=(const Cyc24& o) { return *this = *this + o; }
    Cyc24& operator-=(const Cyc24& o) { return *this = *this - o; }
    Cyc24& operator*=(const Cyc24& o) { return *this = *this * o; }

    friend bool operator==(const Cyc24& a, const Cyc24& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyc24& a, const Cyc24& b) { return !(a == b); }

    // Complex conjugation: zeta^j -> zeta^(24-j).
    Cyc24 conj() const {
        Cyc24 r;
        for (int i = 0; i < degree; ++i)
            if (!c_[i].is_zero()) r.add_power(order - i, c_[i]);
        return r;
    }

    std::complex<double> to_complex() const {
        std::complex<double> z(0.0, 0.0);
        for (int i = 0; i < degree; ++i) {
            if (c_[i].is_zero()) continue;
            double ang = 2.0 * 3.14159265358979323846 * i / order;
            z += c_[i].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return z;
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyc24& x) {
        bool first = true;
        for (int i = 0; i < degree; ++i) {
            if (x.c_[i].is_zero()) continue;
            if (!first) os << " + ";
            os << x.c_[i].str();
            if (i > 0) os << "*z^" << i;
            first = false;
        }
        if (first) os << "0";
        return os;
    }

private:
    // Adds c * zeta^e in reduced coordinates. Uses zeta^12 = -1 and
    // zeta^8 = zeta^4 - 1 (from Phi_24).
    void add_power(long long e, const Rational& c) {
        e %= order;
        if (e < 0) e += order;
        Rational v = c;
        if (e >= 12) { v = -v; e -= 12; }
        if (e >= degree) {
            add_power(e - 4, v);
            add_power(e - 8, -v);
            return;
        }
        c_[(size_t)e] += v;
    }

    std::array<Rational, degree> c_;
};

} // namespace ncb
