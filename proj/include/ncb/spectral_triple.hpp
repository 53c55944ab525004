#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncb/lattice.hpp"
#include "ncb/nc_torus.hpp"
#include "ncb/operators.hpp"
#include "ncb/quadext.hpp"

namespace ncb {

// Parameters of the flat real spectral triple on the torus: the Dirac scale
// R (stored as R^2, rational, R > 0), the conformal parameter tau, the spin
// structure, and the symbolic theta marker.
struct TripleParams {
    Rational r_squared{1};
    TauParams tau{};
    SpinStructure spin{};
    Rational theta_scale{1};

    TripleParams() = default;
    TripleParams(Rational r2, TauParams t, SpinStructure s, Rational th = Rational(1))
        : r_squared(r2), tau(t), spin(s), theta_scale(th) {
        if (!(r_squared > Rational(0))) throw std::domain_error("TripleParams: R^2 must be > 0");
        if (theta_scale.is_zero()) throw std::domain_error("TripleParams: theta marker must be nonzero");
    }
};

// |mu2 + tau*mu3|^2 = mu2^2 + 2 Re(tau) mu2 mu3 + |tau|^2 mu3^2
inline Rational plane_quadratic_form(const Rational& mu2, const Rational& mu3, const TauParams& tau) {
    return mu2 * mu2 + Rational(2) * tau.re * mu2 * mu3 + tau.abs2 * mu3 * mu3;
}

// Exact squared eigenvalue of the 2x2 Dirac block at mu, plus the signs
// present (both, unless the block vanishes).
struct EigenPair {
    Rational lambda_squared;
    bool zero; // lambda = 0: single sign 0 with multiplicity 2
};

inline EigenPair dirac_eigenpair(const Site& site, const TripleParams& params) {
    Rational l2 = params.r_squared * site.mu(0) * site.mu(0) +
                  plane_quadratic_form(site.mu(1), site.mu(2), params.tau);
    return {l2, l2.is_zero()};
}

// Real structure on basis vectors: J e_{mu,+} = e_{-mu,-}, J e_{mu,-} = -e_{-mu,+}.
// The returned operation is antiunitary; coefficients of downstream terms
// must be conjugated, which the ExactOp composition does automatically.
inline std::pair<int, Site> apply_J(const Site& site) {
    if (site.parity == Parity::plus) return {+1, site.negated().with_parity(Parity::minus)};
    return {-1, site.negated().with_parity(Parity::plus)};
}

// --- operator factories ------------------------------------------------

template <class F>
ExactOp<F> op_pi(const MonomialIndex& k, const TripleParams& params,
                 const typename FieldOps<F>::Context& ctx,
                 typename ExactOp<F>::WindowFn window) {
    Rational ts = params.theta_scale;
    auto gen = [k, ts, ctx](const Site& s) {
        auto [ph, target] = represent(k, s, ts);
        return std::vector<OpTerm<F>>{{FieldOps<F>::from_phase(ph, ctx), target}};
    };
    return ExactOp<F>::from_terms(false, gen, std::move(window));
}

template <class F>
ExactOp<F> op_dirac(const TripleParams& params, const typename FieldOps<F>::Context& ctx,
                    typename ExactOp<F>::WindowFn window) {
    auto gen = [ctx](const Site& s) {
        std::vector<OpTerm<F>> out;
        Rational mu1 = s.mu(0);
        if (s.parity == Parity::plus) {
            if (!mu1.is_zero()) out.push_back({FieldOps<F>::r_times_rational(mu1, ctx), s});
            // (delta2 + conj(tau) delta3) to the minus component:
            // mu2 + conj(tau) mu3 = (mu2 + 2 Re(tau) mu3) - tau mu3
            Rational x = s.mu(1) + Rational(2) * ctx.tau.re * s.mu(2);
            Scalar<F> off = FieldOps<F>::linear_in_tau(x, -s.mu(2), ctx);
            if (!off.is_zero()) out.push_back({off, s.with_parity(Parity::minus)});
        } else {
            if (!mu1.is_zero()) out.push_back({FieldOps<F>::r_times_rational(-mu1, ctx), s});
            Scalar<F> off = FieldOps<F>::linear_in_tau(s.mu(1), s.mu(2), ctx);
            if (!off.is_zero()) out.push_back({off, s.with_parity(Parity::plus)});
        }
        return out;
    };
    return ExactOp<F>::from_terms(false, gen, std::move(window));
}

template <class F>
ExactOp<F> op_J(const typename FieldOps<F>::Context& ctx, typename ExactOp<F>::WindowFn window,
                bool flip_minus_sign = false) {
    auto gen = [ctx, flip_minus_sign](const Site& s) {
        auto [sign, target] = apply_J(s);
        if (flip_minus_sign && s.parity == Parity::minus) sign = -sign;
        return std::vector<OpTerm<F>>{
            {FieldOps<F>::from_rational(Rational(sign), ctx), target}};
    };
    return ExactOp<F>::from_terms(true, gen, std::move(window));
}

// J pi(b) J^{-1} with J^{-1} = -J (since J^2 = -1); the two sign flips
// cancel, so this equals J pi(b) (-J) = (-1)J pi(b) J ... built directly by
// composition to keep the antilinearity bookkeeping in one place.
template <class F>
ExactOp<F> op_j_conjugated_pi(const MonomialIndex& k, const TripleParams& params,
                              const typename FieldOps<F>::Context& ctx,
                              typename ExactOp<F>::WindowFn window) {
    ExactOp<F> J = op_J<F>(ctx, window);
    ExactOp<F> Jinv = J.scaled(FieldOps<F>::from_rational(Rational(-1), ctx));
    return compose(compose(J, op_pi<F>(k, params, ctx, window)), Jinv);
}

// --- axiom verifier -----------------------------------------------------

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;
};

struct VerifyReport {
    bool ok = true;
    std::vector<CheckResult> checks;

    void record(const std::string& name, std::optional<std::string> failure) {
        checks.push_back({name, !failure.has_value(), failure.value_or("")});
        if (failure) ok = false;
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.ok) return c.name + " " + c.detail;
        return "";
    }
};

enum class TripleMutation { none, flip_J_sign };

// Exact verification of the real-spectral-triple relations on a window:
// J^2 = -1, JD = DJ, the commutant condition [pi(a), J pi(b) J^-1] = 0, the
// first-order condition [[D, pi(a)], J pi(b) J^-1] = 0, and boundedness of
// [D, pi(a)] (finitely many distinct matrix entries). tau stays symbolic, so
// a pass certifies the relations for every conformal parameter with the same
// (Re tau, |tau|^2) data.
VerifyReport verify_triple_axioms(const LatticeWindow& window, const TripleParams& params,
                                  const std::vector<MonomialIndex>& generators,
                                  TripleMutation mutation = TripleMutation::none);

} // namespace ncb
