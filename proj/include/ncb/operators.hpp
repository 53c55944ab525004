#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ncb/lattice.hpp"
#include "ncb/scalar.hpp"

namespace ncb {

inline bool field_is_one(const Cyc24& v) { return v == Cyc24::one(); }
inline bool field_is_one(const QuadExt& v) {
    return v.coeff_one() == Rational(1) && v.coeff_tau().is_zero();
}

template <class F>
bool scalar_is_one(const Scalar<F>& s) {
    if (s.terms().size() != 1) return false;
    const auto& [k, v] = *s.terms().begin();
    return k.rpow == 0 && k.theta_b.is_zero() && field_is_one(v);
}

// Sparse exact operators on a lattice window. An operator maps a basis
// vector to finitely many (coefficient, site) terms; targets falling outside
// the window are truncated away and tracked, so identity checks fail loudly
// when a margin is too small instead of comparing silently clipped
// operators. Antilinear operators (the real structure) conjugate the
// coefficients of whatever they are composed after.
//
// Primitive operators must not emit zero-coefficient terms. Products of
// nonzero coefficients stay nonzero (the scalar ring has no zero divisors),
// so composites inherit the property.
template <class F>
struct OpTerm {
    Scalar<F> coeff;
    Site site;
};

template <class F>
struct ApplyResult {
    std::vector<OpTerm<F>> terms;
    bool truncated = false;
};

template <class F>
class ExactOp {
public:
    using Fn = std::function<ApplyResult<F>(const Site&)>;
    using WindowFn = std::function<bool(const Site&)>;

    ExactOp(bool antilinear, Fn fn, WindowFn window)
        : antilinear_(antilinear), fn_(std::move(fn)), window_(std::move(window)) {}

    bool antilinear() const { return antilinear_; }
    const WindowFn& window() const { return window_; }

    // Builds an operator from a raw term generator, applying window
    // truncation to its targets.
    static ExactOp from_terms(bool antilinear,
                              std::function<std::vector<OpTerm<F>>(const Site&)> gen,
                              WindowFn window) {
        WindowFn w = window;
        Fn fn = [gen, w](const Site& s) {
            ApplyResult<F> out;
            for (auto& t : gen(s)) {
                if (t.coeff.is_zero()) continue;
                if (w(t.site))
                    out.terms.push_back(std::move(t));
                else
                    out.truncated = true;
            }
            return out;
        };
        return ExactOp(antilinear, std::move(fn), std::move(window));
    }

    ApplyResult<F> apply(const Site& s) const { return fn_(s); }

    // (A o B)(x) = A(B(x))
    friend ExactOp compose(const ExactOp& A, const ExactOp& B) {
        auto fn = [A, B](const Site& s) {
            ApplyResult<F> out;
            ApplyResult<F> rb = B.fn_(s);
            out.truncated = rb.truncated;
            for (const auto& tb : rb.terms) {
                Scalar<F> c = A.antilinear_ ? tb.coeff.conj() : tb.coeff;
                ApplyResult<F> ra = A.fn_(tb.site);
                out.truncated |= ra.truncated;
                for (const auto& ta : ra.terms) out.terms.push_back({ta.coeff * c, ta.site});
            }
            return out;
        };
        return ExactOp(A.antilinear_ != B.antilinear_, fn, B.window_);
    }

    friend ExactOp operator+(const ExactOp& A, const ExactOp& B) { return combine(A, B, false); }
    friend ExactOp operator-(const ExactOp& A, const ExactOp& B) { return combine(A, B, true); }

    friend ExactOp commutator(const ExactOp& A, const ExactOp& B) {
        return compose(A, B) - compose(B, A);
    }

    ExactOp scaled(const Scalar<F>& c) const {
        if (c.is_zero()) throw std::logic_error("ExactOp: scaling by zero");
        auto fn = fn_;
        return ExactOp(antilinear_,
                       [fn, c](const Site& s) {
                           auto r = fn(s);
                           for (auto& t : r.terms) t.coeff = t.coeff * c;
                           return r;
                       },
                       window_);
    }

    // Collected action on one basis vector; throws if truncation occurred,
    // which on interior test sites means the caller's margin was too small.
    std::map<Site, Scalar<F>> collect(const Site& s) const {
        ApplyResult<F> r = apply(s);
        if (r.truncated)
            throw std::logic_error("ExactOp: truncated at site " + s.str() +
                                   " (window margin insufficient)");
        std::map<Site, Scalar<F>> out;
        for (const auto& t : r.terms) {
            auto it = out.find(t.site);
            if (it == out.end())
                out.emplace(t.site, t.coeff);
            else {
                it->second += t.coeff;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return out;
    }

    // True when this operator acts on s as c * identity for the given c.
    bool acts_as_scalar(const Site& s, const Scalar<F>& c) const {
        auto m = collect(s);
        if (c.is_zero()) return m.empty();
        return m.size() == 1 && m.begin()->first == s && m.begin()->second == c;
    }

    bool acts_as_identity(const Site& s) const {
        auto m = collect(s);
        return m.size() == 1 && m.begin()->first == s && scalar_is_one(m.begin()->second);
    }

private:
    static ExactOp combine(const ExactOp& A, const ExactOp& B, bool subtract) {
        if (A.antilinear_ != B.antilinear_)
            throw std::logic_error("ExactOp: cannot add linear and antilinear operators");
        auto fn = [A, B, subtract](const Site& s) {
            ApplyResult<F> ra = A.fn_(s);
            ApplyResult<F> rb = B.fn_(s);
            ApplyResult<F> out;
            out.truncated = ra.truncated || rb.truncated;
            out.terms = std::move(ra.terms);
            for (auto& t : rb.terms) {
                if (subtract) t.coeff = -t.coeff;
                out.terms.push_back(std::move(t));
            }
            return out;
        };
        return ExactOp(A.antilinear_, fn, A.window_);
    }

    bool antilinear_;
    Fn fn_;
    WindowFn window_;
};

// First site (if any) where the collected actions of A and B differ.
template <class F>
std::optional<std::string> first_difference(const ExactOp<F>& A, const ExactOp<F>& B,
                                            const std::vector<Site>& test_sites) {
    for (const Site& s : test_sites) {
        if (A.collect(s) != B.collect(s)) return "at site " + s.str();
    }
    return std::nullopt;
}

// First site (if any) where A does not vanish.
template <class F>
std::optional<std::string> first_nonzero(const ExactOp<F>& A, const std::vector<Site>& test_sites) {
    for (const Site& s : test_sites) {
        if (!A.collect(s).empty()) return "at site " + s.str();
    }
    return std::nullopt;
}

} // namespace ncb
