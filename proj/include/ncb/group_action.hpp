#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ncb/lattice.hpp"
#include "ncb/nc_torus.hpp"
#include "ncb/phase.hpp"
#include "ncb/quadext.hpp"
#include "ncb/spectral_triple.hpp"

namespace ncb {

// Raised when a requested (N, eps, tau, ...) combination violates one of the
// classification constraints; names the violated constraint.
class AdmissibilityError : public std::runtime_error {
public:
    AdmissibilityError(std::string constraint, const std::string& detail)
        : std::runtime_error(detail + " [violates: " + constraint + "]"),
          constraint_(std::move(constraint)) {}
    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

// One admissible conformal parameter: tau as a root of unity exp(2*pi*i*a)
// together with its (Re, |.|^2, sign Im) data.
struct TauBranch {
    Rational phase_a;  // tau = exp(2*pi*i*phase_a)
    TauParams params;
    std::string label;

    bool operator==(const TauBranch& o) const { return phase_a == o.phase_a; }
};

struct TauSet {
    bool unconstrained = false; // N=2: any Im(tau) != 0 works
    std::vector<TauBranch> branches;
};

TauBranch make_tau_branch(const Rational& phase_a);

// Admissible tau per cyclic order: N=3,6 -> e^{+-i pi/3}; N=4 -> e^{+-i pi/2};
// N=2 unconstrained.
TauSet admissible_tau(int N);

// The proportionality factor with rho_-(h) = zeta * rho_+(h):
// -1, -tau, tau^*, tau^* for N = 2, 3, 4, 6.
ExactPhase zeta_of(int N, const TauBranch& tau);

// Same value as an element of Q(tau), used by the sigma_+ solver. Works for
// symbolic tau as well (N=2 needs no root of unity).
QuadExt zeta_in_field(int N, const TauParams& tau);

// The sigma <-> tau pairing printed in the classification lemma:
// N=3: tau = e^{-i pi sigma/3}; N=4: tau = e^{i pi sigma/2}; N=6: tau = e^{i pi sigma/3}.
TauBranch tau_for_sigma(int N, int sigma);
int sigma_for_tau(int N, const TauBranch& tau);

// beta_+ from the per-N closed forms; beta_- = conj(beta_+), beta_+^N = 1.
// Rejects eps1 = 0 for N = 2, 4, 6.
ExactPhase beta_solve(int N, const Rational& eps1, int sigma, int kappa);

// Full data of an equivariant Z_N action on the Hilbert space.
struct CyclicAction {
    int N = 2;
    ActionMatrix A;
    int sigma = +1;
    int kappa = +1; // only meaningful for N = 4, 6; fixed +1 otherwise
    SpinStructure spin;
    TauParams tau;
    std::optional<Rational> tau_phase_a; // set when tau is a root of unity
    ExactPhase beta_plus;
    ExactPhase zeta;
};

// Validating constructor: checks the spin-structure restrictions, pairs tau
// with sigma, and solves for beta_+ and zeta. For N = 2 an arbitrary tau
// (default i) may be supplied.
CyclicAction make_cyclic_action(int N, const SpinStructure& spin, int sigma, int kappa,
                                std::optional<TauParams> tau_n2 = std::nullopt);

// Bypasses validation; for seeding deliberately inadmissible mutants in tests.
CyclicAction make_cyclic_action_unchecked(int N, const SpinStructure& spin, int sigma, int kappa,
                                          TauParams tau, std::optional<Rational> tau_phase_a,
                                          ExactPhase beta_plus, ExactPhase zeta);

// rho(h) e_{mu, p} = beta_p exp(2 pi i (mu1 + p eps1)/N) e_{(mu1, A(mu2,mu3)), p}
std::pair<ExactPhase, Site> rho_apply(const CyclicAction& action, const Site& site);

// Monomial solutions x^{(0,k2,k3)} of the sigma_+ eigenvalue equations
//   zeta (k2 + tau k3) = (1 - zeta)(eps2 + tau eps3)
//   (k2 + conj(tau) k3) = (zeta - 1)(eps2 + conj(tau) eps3)
// over |k2|, |k3| <= bound. Empty result = (N, eps2, eps3) inadmissible.
struct SigmaSolution {
    int k2, k3;
    bool operator==(const SigmaSolution& o) const { return k2 == o.k2 && k3 == o.k3; }
    bool operator<(const SigmaSolution& o) const { return std::pair(k2, k3) < std::pair(o.k2, o.k3); }
};
std::vector<SigmaSolution> sigma_plus_solve(int N, const Rational& eps2, const Rational& eps3,
                                            const TauParams& tau, const QuadExt& zeta, int bound);
// Convenience: derives tau (canonical branch) and zeta from N.
std::vector<SigmaSolution> sigma_plus_solve(int N, const Rational& eps2, const Rational& eps3,
                                            int bound = 2);

// Permutation conjugating the regular-representation shift to its inverse:
// U_00 = 1, U_{k,l} = delta_{k, N-l}. Symmetric permutation matrix with
// U C U^{-1} = C^{-1}.
std::vector<std::vector<int>> regular_rep_conjugator(int N);

// Lattice window whose plane part is closed under the orbit map
// (mu2, mu3) -> A(mu2, mu3): union of A^k images of the symmetric box.
class ActionWindow {
public:
    ActionWindow(const LatticeWindow& base, const ActionMatrix& A, int order);

    const LatticeWindow& base() const { return base_; }
    bool contains(const Site& s) const;
    std::vector<Site> interior_sites() const { return base_.interior_sites(); }

    // Plane sites (doubled coordinates), closed under A by construction.
    const std::vector<std::array<long long, 2>>& plane_sites() const { return plane_; }

private:
    LatticeWindow base_;
    ActionMatrix A_;
    std::vector<std::array<long long, 2>> plane_;
    std::set<std::array<long long, 2>> plane_set_;
};

// Exact verification of the equivariance relations for one action:
// rho pi(a) = pi(h |> a) rho for each generator, [D, rho] = 0, [J, rho] = 0
// and rho^N = 1. Backend: symbolic tau for N=2, cyclotomic for N=3,4,6.
VerifyReport verify_action(const ActionWindow& window, const CyclicAction& action,
                           const TripleParams& params, const std::vector<MonomialIndex>& generators);

} // namespace ncb
