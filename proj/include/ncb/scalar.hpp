#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "ncb/cyclotomic.hpp"
#include "ncb/phase.hpp"
#include "ncb/quadext.hpp"
#include "ncb/rational.hpp"

namespace ncb {

// Exact operator coefficients: finite sums of  v * R^p * exp(i*pi*theta*b)
// with v in a coefficient field F, p in {0, 1} and rational b. R (the Dirac
// scale, possibly irrational with rational R^2) and theta are symbolic; terms
// with distinct (p, b) are linearly independent, so zero-testing reduces to
// zero-testing in F.
//
// F is Cyc24 when all root-of-unity phases must collapse canonically
// (cyclic-action checks for N=3,4,6) and QuadExt when tau stays symbolic
// (torus axioms, N=2 checks; only +-1 phases occur there).
//
// None of the verified relations multiplies two R factors, so p stays in
// {0,1}; multiplication asserts that.
template <class F>
class Scalar {
public:
    struct Key {
        int rpow;
        Rational theta_b;
        bool operator<(const Key& o) const {
            if (rpow != o.rpow) return rpow < o.rpow;
            return theta_b < o.theta_b;
        }
    };

    Scalar() = default;

    static Scalar zero() { return Scalar(); }
    static Scalar term(int rpow, const Rational& theta_b, F value) {
        Scalar s;
        if (!value.is_zero()) s.terms_.emplace(Key{rpow, theta_b}, std::move(value));
        return s;
    }
    static Scalar of(F value) { return term(0, Rational(0), std::move(value)); }
    static Scalar r_times(F value) { return term(1, Rational(0), std::move(value)); }

    bool is_zero() const { return terms_.empty(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (const auto& [k, v] : b.terms_) r.add_term(k, v);
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    Scalar operator-() const {
        Scalar r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ka, va] : a.terms_)
            for (const auto& [kb, vb] : b.terms_) {
                int p = ka.rpow + kb.rpow;
                if (p > 1) throw std::logic_error("Scalar: R^2 term not supported in checks");
                r.add_term(Key{p, ka.theta_b + kb.theta_b}, va * vb);
            }
        return r;
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Complex conjugate: R real, theta real.
    Scalar conj() const {
        Scalar r;
        for (const auto& [k, v] : terms_) r.add_term(Key{k.rpow, -k.theta_b}, v.conj());
        return r;
    }

    const std::map<Key, F>& terms() const { return terms_; }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        if (s.terms_.empty()) return os << "0";
        bool first = true;
        for (const auto& [k, v] : s.terms_) {
            if (!first) os << "  +  ";
            os << "(" << v << ")";
            if (k.rpow == 1) os << "*R";
            if (!k.theta_b.is_zero()) os << "*exp(i*pi*theta*" << k.theta_b.str() << ")";
            first = false;
        }
        return os;
    }

private:
    void add_term(const Key& k, const F& v) {
        if (v.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Key, F> terms_;
};

// Bridging ExactPhase into the two coefficient fields. The theta part of the
// phase becomes the Scalar key; the root-of-unity part lands in F.
inline Scalar<Cyc24> scalar_from_phase_cyc(const ExactPhase& ph) {
    return Scalar<Cyc24>::term(0, ph.b(), Cyc24::from_phase_exponent(ph.a()));
}

inline Scalar<QuadExt> scalar_from_phase_quad(const ExactPhase& ph, const TauParams& tau) {
    if (!ph.a().is_zero() && ph.a() != Rational(1, 2))
        throw std::domain_error("Scalar<QuadExt>: only +-1 root phases supported, got " + ph.str());
    Rational sign = ph.a().is_zero() ? Rational(1) : Rational(-1);
    return Scalar<QuadExt>::term(0, ph.b(), QuadExt::from_rational(sign, tau));
}

// Dispatch helpers so operator code can be written once for both fields.
template <class F>
struct FieldOps;

template <>
struct FieldOps<Cyc24> {
    // Context carries tau as a concrete 24th root of unity.
    struct Context {
        Rational tau_phase_a; // tau = exp(2*pi*i*a)
        TauParams tau;
    };
    static Scalar<Cyc24> from_phase(const ExactPhase& ph, const Context&) {
        return scalar_from_phase_cyc(ph);
    }
    static Scalar<Cyc24> from_rational(const Rational& r, const Context&) {
        return Scalar<Cyc24>::of(Cyc24::from_rational(r));
    }
    // x + y*tau
    static Scalar<Cyc24> linear_in_tau(const Rational& x, const Rational& y, const Context& ctx) {
        return Scalar<Cyc24>::of(Cyc24::from_rational(x) +
                                 Cyc24::from_rational(y) * Cyc24::from_phase_exponent(ctx.tau_phase_a));
    }
    static Scalar<Cyc24> r_times_rational(const Rational& r, const Context&) {
        return Scalar<Cyc24>::r_times(Cyc24::from_rational(r));
    }
};

template <>
struct FieldOps<QuadExt> {
    // Context keeps tau symbolic.
    struct Context {
        TauParams tau;
    };
    static Scalar<QuadExt> from_phase(const ExactPhase& ph, const Context& ctx) {
        return scalar_from_phase_quad(ph, ctx.tau);
    }
    static Scalar<QuadExt> from_rational(const Rational& r, const Context& ctx) {
        return Scalar<QuadExt>::of(QuadExt::from_rational(r, ctx.tau));
    }
    static Scalar<QuadExt> linear_in_tau(const Rational& x, const Rational& y, const Context& ctx) {
        return Scalar<QuadExt>::of(QuadExt::linear(x, y, ctx.tau));
    }
    static Scalar<QuadExt> r_times_rational(const Rational& r, const Context& ctx) {
        return Scalar<QuadExt>::r_times(QuadExt::from_rational(r, ctx.tau));
    }
};

} // namespace ncb
