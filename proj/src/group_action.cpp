#include "ncb/group_action.hpp"

#include <algorithm>
#include <map>

namespace ncb {

namespace {

void require_order(int N) {
    if (!valid_cyclic_order(N)) throw std::domain_error("cyclic order must be 2, 3, 4 or 6");
}

} // namespace

TauBranch make_tau_branch(const Rational& phase_a) {
    Rational a = phase_a.mod1();
    // tau = exp(2 pi i a): Re = cos(2 pi a), |tau|^2 = 1. Only the angles
    // used by the classification are supported.
    Rational re;
    int im_sign;
    if (a == Rational(1, 6)) {
        re = Rational(1, 2); im_sign = +1;
    } else if (a == Rational(5, 6)) {
        re = Rational(1, 2); im_sign = -1;
    } else if (a == Rational(1, 4)) {
        re = Rational(0); im_sign = +1;
    } else if (a == Rational(3, 4)) {
        re = Rational(0); im_sign = -1;
    } else {
        throw std::domain_error("unsupported tau root exp(2*pi*i*" + a.str() + ")");
    }
    std::string label = "exp(" + (im_sign > 0 ? std::string("+") : std::string("-")) + "i*pi*" +
                        (re.is_zero() ? "1/2" : "1/3") + ")";
    return TauBranch{a, TauParams(re, Rational(1), im_sign), label};
}

TauSet admissible_tau(int N) {
    require_order(N);
    TauSet out;
    switch (N) {
        case 2:
            out.unconstrained = true;
            break;
        case 3:
        case 6:
            out.branches = {make_tau_branch(Rational(1, 6)), make_tau_branch(Rational(5, 6))};
            break;
        case 4:
            out.branches = {make_tau_branch(Rational(1, 4)), make_tau_branch(Rational(3, 4))};
            break;
    }
    return out;
}

ExactPhase zeta_of(int N, const TauBranch& tau) {
    require_order(N);
    if (N != 2) {
        auto set = admissible_tau(N);
        if (std::find(set.branches.begin(), set.branches.end(), tau) == set.branches.end())
            throw AdmissibilityError("tau in admissible set for N=" + std::to_string(N),
                                     "tau branch " + tau.label + " not admissible");
    }
    switch (N) {
        case 2: return ExactPhase::minus_one();
        case 3: return ExactPhase::minus_one() * ExactPhase::root_of_unity(tau.phase_a);
        default: return ExactPhase::root_of_unity(-tau.phase_a); // tau^*
    }
}

QuadExt zeta_in_field(int N, const TauParams& tau) {
    require_order(N);
    switch (N) {
        case 2: return QuadExt::linear(Rational(-1), Rational(0), tau);
        case 3: return QuadExt::linear(Rational(0), Rational(-1), tau);
        default: // tau^* = 2 Re(tau) - tau
            return QuadExt::linear(Rational(2) * tau.re, Rational(-1), tau);
    }
}

TauBranch tau_for_sigma(int N, int sigma) {
    require_order(N);
    if (sigma != 1 && sigma != -1) throw std::domain_error("sigma must be +1 or -1");
    switch (N) {
        case 3: return make_tau_branch(Rational(-sigma, 6)); // e^{-i pi sigma/3}
        case 4: return make_tau_branch(Rational(sigma, 4));  // e^{+i pi sigma/2}
        case 6: return make_tau_branch(Rational(sigma, 6));  // e^{+i pi sigma/3}
        default: throw std::domain_error("tau_for_sigma: N=2 leaves tau unconstrained");
    }
}

int sigma_for_tau(int N, const TauBranch& tau) {
    for (int sigma : {+1, -1})
        if (N != 2 && tau_for_sigma(N, sigma) == tau) return sigma;
    throw AdmissibilityError("tau in admissible set for N=" + std::to_string(N),
                             "no sigma matches tau branch " + tau.label);
}

ExactPhase beta_solve(int N, const Rational& eps1, int sigma, int kappa) {
    require_order(N);
    if (sigma != 1 && sigma != -1) throw std::domain_error("sigma must be +1 or -1");
    if (kappa != 1 && kappa != -1) throw std::domain_error("kappa must be +1 or -1");
    if (!eps1.is_zero() && eps1 != Rational(1, 2))
        throw std::domain_error("eps1 must be 0 or 1/2");
    if (N != 3 && eps1.is_zero())
        throw AdmissibilityError("epsilon1 = 1/2 (forced for N=2,4,6)",
                                 "eps1 = 0 admits no equivariant action for N=" + std::to_string(N));

    ExactPhase kappa_sign = kappa == 1 ? ExactPhase::one() : ExactPhase::minus_one();
    switch (N) {
        case 2:
            // beta_+ = sigma
            return sigma == 1 ? ExactPhase::one() : ExactPhase::minus_one();
        case 3:
            // beta_+ = e^{(2/3) pi i (2 eps1 + sigma)}
            return ExactPhase::root_of_unity((Rational(2) * eps1 + Rational(sigma)) * Rational(1, 3));
        case 4:
            // beta_+ = kappa e^{(1/4) pi i (sigma - 1)}
            return kappa_sign * ExactPhase::root_of_unity(Rational(sigma - 1, 8));
        default:
            // beta_+ = kappa e^{(1/6) pi i (sigma - 1)}
            return kappa_sign * ExactPhase::root_of_unity(Rational(sigma - 1, 12));
    }
}

CyclicAction make_cyclic_action(int N, const SpinStructure& spin, int sigma, int kappa,
                                std::optional<TauParams> tau_n2) {
    require_order(N);
    if (N == 2 || N == 3) {
        if (kappa != 1)
            throw AdmissibilityError("kappa is a parameter only for N=4,6",
                                     "kappa = -1 requested for N=" + std::to_string(N));
    }
    if ((N == 3 || N == 6) && (spin.half(1) || spin.half(2)))
        throw AdmissibilityError("epsilon2 = epsilon3 = 0 (forced for N=3,6)",
                                 "spin " + spin.str() + " inadmissible for N=" + std::to_string(N));
    if (N == 4 && spin.twice_eps[1] != spin.twice_eps[2])
        throw AdmissibilityError("epsilon2 = epsilon3 (forced for N=4)",
                                 "spin " + spin.str() + " inadmissible for N=4");
    if (N != 2 && tau_n2.has_value())
        throw std::invalid_argument("tau is determined by sigma for N=3,4,6");

    CyclicAction a;
    a.N = N;
    a.A = action_matrix(N);
    a.sigma = sigma;
    a.kappa = kappa;
    a.spin = spin;
    a.beta_plus = beta_solve(N, spin.eps(0), sigma, kappa); // checks eps1

    if (N == 2) {
        if (tau_n2.has_value()) {
            a.tau = *tau_n2;
            // record the root form when the supplied tau happens to be i
            if (a.tau.re.is_zero() && a.tau.abs2 == Rational(1))
                a.tau_phase_a = a.tau.im_sign > 0 ? Rational(1, 4) : Rational(3, 4);
        } else {
            a.tau = TauParams(Rational(0), Rational(1), +1); // default tau = i
            a.tau_phase_a = Rational(1, 4);
        }
        a.zeta = ExactPhase::minus_one();
    } else {
        TauBranch branch = tau_for_sigma(N, sigma);
        a.tau = branch.params;
        a.tau_phase_a = branch.phase_a;
        a.zeta = zeta_of(N, branch);
    }
    return a;
}

CyclicAction make_cyclic_action_unchecked(int N, const SpinStructure& spin, int sigma, int kappa,
                                          TauParams tau, std::optional<Rational> tau_phase_a,
                                          ExactPhase beta_plus, ExactPhase zeta) {
    CyclicAction a;
    a.N = N;
    a.A = action_matrix(N);
    a.sigma = sigma;
    a.kappa = kappa;
    a.spin = spin;
    a.tau = tau;
    a.tau_phase_a = tau_phase_a;
    a.beta_plus = beta_plus;
    a.zeta = zeta;
    return a;
}

std::pair<ExactPhase, Site> rho_apply(const CyclicAction& action, const Site& site) {
    if (!site.on_lattice(action.spin))
        throw std::invalid_argument("rho_apply: site " + site.str() + " not on the " +
                                    action.spin.str() + " lattice");
    ExactPhase beta = site.parity == Parity::plus ? action.beta_plus : action.beta_plus.conj();
    int ps = parity_sign(site.parity);
    // exp(2 pi i (mu1 + p*eps1)/N): with doubled coordinates, exponent
    // (twice_mu1 + p*twice_eps1) / (2N).
    Rational expo(site.twice_mu[0] + ps * action.spin.twice_eps[0], 2LL * action.N);
    ExactPhase coeff = beta * ExactPhase::root_of_unity(expo);
    auto plane = action.A.apply_ll(site.twice_mu[1], site.twice_mu[2]);
    return {coeff, Site(site.twice_mu[0], plane[0], plane[1], site.parity)};
}

std::vector<SigmaSolution> sigma_plus_solve(int N, const Rational& eps2, const Rational& eps3,
                                            const TauParams& tau, const QuadExt& zeta, int bound) {
    require_order(N);
    if (bound < 1) throw std::invalid_argument("sigma_plus_solve: bound must be >= 1");
    QuadExt one = QuadExt::from_rational(Rational(1), tau);
    QuadExt t = QuadExt::tau_value(tau);
    QuadExt tc = t.conj();
    QuadExt rhs1 = (one - zeta) * (QuadExt::from_rational(eps2, tau) + t * QuadExt::from_rational(eps3, tau));
    QuadExt rhs2 = (zeta - one) * (QuadExt::from_rational(eps2, tau) + tc * QuadExt::from_rational(eps3, tau));

    std::vector<SigmaSolution> out;
    for (int k2 = -bound; k2 <= bound; ++k2)
        for (int k3 = -bound; k3 <= bound; ++k3) {
            QuadExt kv = QuadExt::linear(Rational(k2), Rational(k3), tau);
            QuadExt kvc = QuadExt::linear(Rational(k2), Rational(0), tau) +
                          tc * QuadExt::from_rational(Rational(k3), tau);
            if (zeta * kv == rhs1 && kvc == rhs2) out.push_back({k2, k3});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SigmaSolution> sigma_plus_solve(int N, const Rational& eps2, const Rational& eps3,
                                            int bound) {
    require_order(N);
    TauParams tau = N == 2 ? TauParams(Rational(0), Rational(1), +1) // default i
                           : tau_for_sigma(N, +1).params;
    return sigma_plus_solve(N, eps2, eps3, tau, zeta_in_field(N, tau), bound);
}

std::vector<std::vector<int>> regular_rep_conjugator(int N) {
    if (N < 2) throw std::domain_error("regular_rep_conjugator: N must be >= 2");
    std::vector<std::vector<int>> U((size_t)N, std::vector<int>((size_t)N, 0));
    U[0][0] = 1;
    for (int l = 1; l < N; ++l) U[(size_t)(N - l)][(size_t)l] = 1;
    return U;
}

ActionWindow::ActionWindow(const LatticeWindow& base, const ActionMatrix& A, int order)
    : base_(base), A_(A) {
    // Orbit closure of the symmetric plane box under A.
    for (long long t2 : base_.axis_coords(1, base_.bound))
        for (long long t3 : base_.axis_coords(2, base_.bound)) {
            std::array<long long, 2> v{t2, t3};
            for (int k = 0; k < order; ++k) {
                if (plane_set_.insert(v).second) plane_.push_back(v);
                v = A_.apply_ll(v[0], v[1]);
            }
        }
    std::sort(plane_.begin(), plane_.end());
}

bool ActionWindow::contains(const Site& s) const {
    if (s.twice_mu[0] > 2LL * base_.bound || s.twice_mu[0] < -2LL * base_.bound) return false;
    return plane_set_.count({s.twice_mu[1], s.twice_mu[2]}) != 0;
}

namespace {

template <class F>
VerifyReport verify_action_impl(const ActionWindow& window, const CyclicAction& action,
                                const TripleParams& params,
                                const std::vector<MonomialIndex>& generators,
                                const typename FieldOps<F>::Context& ctx) {
    auto wf = [&window](const Site& s) { return window.contains(s); };
    const std::vector<Site> interior = window.interior_sites();

    int max_shift = 0;
    for (const auto& g : generators)
        max_shift = std::max({max_shift, std::abs(g.k[0]), std::abs(g.k[1]), std::abs(g.k[2])});
    if (window.base().margin < 2 * max_shift)
        throw std::invalid_argument("verify_action: margin insufficient, need >= " +
                                    std::to_string(2 * max_shift));

    auto rho_gen = [action](const Site& s) {
        auto [ph, target] = rho_apply(action, s);
        return std::vector<OpTerm<F>>{{FieldOps<F>::from_phase(ph, ctx_of(action)), target}};
    };
    (void)rho_gen;

    ExactOp<F> rho = ExactOp<F>::from_terms(
        false,
        [action, ctx](const Site& s) {
            auto [ph, target] = rho_apply(action, s);
            return std::vector<OpTerm<F>>{{FieldOps<F>::from_phase(ph, ctx), target}};
        },
        wf);
    ExactOp<F> D = op_dirac<F>(params, ctx, wf);
    ExactOp<F> J = op_J<F>(ctx, wf);

    VerifyReport rep;

    for (const auto& g : generators) {
        auto [ph, gk] = act_on_monomial(action.N, g);
        ExactOp<F> lhs = compose(rho, op_pi<F>(g, params, ctx, wf));
        ExactOp<F> rhs =
            compose(op_pi<F>(gk, params, ctx, wf).scaled(FieldOps<F>::from_phase(ph, ctx)), rho);
        rep.record("rho pi(" + g.str() + ") = pi(h |> " + g.str() + ") rho",
                   first_difference(lhs, rhs, interior));
    }

    rep.record("[D, rho] = 0", first_nonzero(commutator(D, rho), interior));
    rep.record("[J, rho] = 0",
               first_difference(compose(J, rho), compose(rho, J), interior));

    {
        ExactOp<F> power = rho;
        for (int i = 1; i < action.N; ++i) power = compose(power, rho);
        std::optional<std::string> fail;
        for (const Site& s : interior)
            if (!power.acts_as_identity(s)) {
                fail = "at site " + s.str();
                break;
            }
        rep.record("rho^N = 1", fail);
    }

    return rep;
}

} // namespace

VerifyReport verify_action(const ActionWindow& window, const CyclicAction& action,
                           const TripleParams& params,
                           const std::vector<MonomialIndex>& generators) {
    if (params.tau != action.tau)
        throw std::invalid_argument("verify_action: params.tau differs from action.tau");
    if (action.N == 2) {
        FieldOps<QuadExt>::Context ctx{action.tau};
        return verify_action_impl<QuadExt>(window, action, params, generators, ctx);
    }
    if (!action.tau_phase_a.has_value())
        throw std::invalid_argument("verify_action: N>2 action requires a root-of-unity tau");
    FieldOps<Cyc24>::Context ctx{*action.tau_phase_a, action.tau};
    return verify_action_impl<Cyc24>(window, action, params, generators, ctx);
}

} // namespace ncb
