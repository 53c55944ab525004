#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <iosfwd>
#include <ostream>

namespace ncb {

// Exact rational on 64-bit words, always reduced, denominator > 0.
// Intermediate products go through __int128; magnitudes in this project
// stay far below the overflow threshold (window bounds are small), but
// narrowing is checked anyway.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(-num_, den_, unchecked_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return make(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Representative in [0, 1): used for phase exponents mod 1.
    Rational mod1() const {
        long long r = num_ % den_;
        if (r < 0) r += den_;
        return Rational(r, den_, unchecked_tag{});
    }

    // Nearest-integer reduction into (-1/2, 1/2].
    Rational centered_mod1() const {
        Rational f = mod1();
        if (Rational(2) * f > Rational(1)) return f - Rational(1);
        return f;
    }

    long long floor_ll() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    double to_double() const { return (double)num_ / (double)den_; }

    // Serialized as "p/q" ("p" when q == 1); parse accepts both forms.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct unchecked_tag {};
    Rational(long long n, long long d, unchecked_tag) : num_(n), den_(d) {}

    static Rational make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: 64-bit overflow");
        return Rational((long long)n, (long long)d, unchecked_tag{});
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    void normalize() { *this = make(num_, den_); }

    long long num_;
    long long den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

} // namespace ncb
