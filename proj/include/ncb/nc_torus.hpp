#pragma once

#include <array>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncb/lattice.hpp"
#include "ncb/phase.hpp"
#include "ncb/rational.hpp"

namespace ncb {

// Monomial basis of the polynomial algebra of the noncommutative 3-torus,
// in the Weyl-ordered normalization x^k = e^{i pi theta k2 k3} U^k1 V^k2 W^k3.
struct MonomialIndex {
    std::array<int, 3> k{0, 0, 0};

    MonomialIndex() = default;
    MonomialIndex(int k1, int k2, int k3) : k{k1, k2, k3} {}

    static MonomialIndex U() { return {1, 0, 0}; }
    static MonomialIndex V() { return {0, 1, 0}; }
    static MonomialIndex W() { return {0, 0, 1}; }

    MonomialIndex operator+(const MonomialIndex& o) const {
        return {k[0] + o.k[0], k[1] + o.k[1], k[2] + o.k[2]};
    }
    MonomialIndex operator-() const { return {-k[0], -k[1], -k[2]}; }
    bool operator==(const MonomialIndex& o) const { return k == o.k; }
    bool operator!=(const MonomialIndex& o) const { return !(*this == o); }
    bool operator<(const MonomialIndex& o) const { return k < o.k; }

    std::string str() const {
        return "x^(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
               std::to_string(k[2]) + ")";
    }
};

// x^k x^l = phase * x^{k+l}; the phase is exp(i pi theta (k3 l2 - k2 l3)).
inline std::pair<ExactPhase, MonomialIndex> monomial_product(const MonomialIndex& k,
                                                             const MonomialIndex& l) {
    Rational b(static_cast<long long>(k.k[2]) * l.k[1] - static_cast<long long>(k.k[1]) * l.k[2]);
    return {ExactPhase::theta_power(b), k + l};
}

// pi(x^k) e_mu = exp(i pi theta (k3 mu2 - mu3 k2)) e_{mu+k}, parity unchanged.
// theta_scale relabels theta -> theta_scale * theta (a different irrational
// deformation marker); every verified identity is insensitive to it.
inline std::pair<ExactPhase, Site> represent(const MonomialIndex& k, const Site& site,
                                             const Rational& theta_scale = Rational(1)) {
    Rational b = Rational(k.k[2]) * site.mu(1) - site.mu(2) * Rational(k.k[1]);
    return {ExactPhase::theta_power(b * theta_scale), site.shifted(k.k)};
}

// The plane part of the Z_N generator action, as printed for N = 2, 3, 4, 6.
struct ActionMatrix {
    // row-major 2x2 integer matrix acting on (k2, k3)
    std::array<int, 4> m{1, 0, 0, 1};

    std::array<int, 2> apply(int k2, int k3) const {
        return {m[0] * k2 + m[1] * k3, m[2] * k2 + m[3] * k3};
    }
    std::array<long long, 2> apply_ll(long long k2, long long k3) const {
        return {m[0] * k2 + m[1] * k3, m[2] * k2 + m[3] * k3};
    }
    ActionMatrix times(const ActionMatrix& o) const {
        return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                 m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
    }
    bool is_identity() const { return m == std::array<int, 4>{1, 0, 0, 1}; }
    bool operator==(const ActionMatrix& o) const { return m == o.m; }
};

inline bool valid_cyclic_order(int N) { return N == 2 || N == 3 || N == 4 || N == 6; }

inline ActionMatrix action_matrix(int N) {
    switch (N) {
        case 2: return {{-1, 0, 0, -1}};
        case 3: return {{-1, -1, 1, 0}};
        case 4: return {{0, -1, 1, 0}};
        case 6: return {{0, -1, 1, 1}};
        default: throw std::domain_error("cyclic order must be 2, 3, 4 or 6");
    }
}

// h |> x^k = exp(2 pi i k1/N) x^{(k1, A(k2,k3))}
inline std::pair<ExactPhase, MonomialIndex> act_on_monomial(int N, const MonomialIndex& k) {
    ActionMatrix A = action_matrix(N);
    auto kk = A.apply(k.k[1], k.k[2]);
    return {ExactPhase::root_of_unity(Rational(k.k[0], N)), MonomialIndex(k.k[0], kk[0], kk[1])};
}

// Coefficient of an algebra element: normalized sum of rational * phase
// terms, merged by equal phase. A single term is the common case.
class CoeffSum {
public:
    CoeffSum() = default;
    CoeffSum(Rational scale, ExactPhase ph) { add(scale, ph); }

    void add(const Rational& scale, const ExactPhase& ph) {
        if (scale.is_zero()) return;
        auto it = terms_.find(ph);
        if (it == terms_.end()) {
            terms_.emplace(ph, scale);
        } else {
            it->second += scale;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    CoeffSum times(const Rational& scale, const ExactPhase& ph) const {
        CoeffSum out;
        for (const auto& [p, s] : terms_) out.add(s * scale, p * ph);
        return out;
    }
    CoeffSum times(const CoeffSum& o) const {
        CoeffSum out;
        for (const auto& [p, s] : terms_)
            for (const auto& [q, t] : o.terms_) out.add(s * t, p * q);
        return out;
    }
    void accumulate(const CoeffSum& o) {
        for (const auto& [p, s] : o.terms_) add(s, p);
    }

    bool operator==(const CoeffSum& o) const { return terms_ == o.terms_; }

    // The (scale, phase) view when the sum has a single term.
    std::pair<Rational, ExactPhase> single() const {
        if (terms_.size() != 1) throw std::logic_error("CoeffSum: not a single term");
        return {terms_.begin()->second, terms_.begin()->first};
    }

    const std::map<ExactPhase, Rational>& terms() const { return terms_; }

private:
    std::map<ExactPhase, Rational> terms_;
};

// Finite linear combination of monomials with exact coefficients.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement monomial(const MonomialIndex& k, Rational scale = Rational(1),
                                   ExactPhase ph = ExactPhase::one()) {
        AlgebraElement e;
        e.add(k, scale, ph);
        return e;
    }
    static AlgebraElement identity() { return monomial(MonomialIndex()); }

    void add(const MonomialIndex& k, const Rational& scale, const ExactPhase& ph) {
        CoeffSum& c = coeffs_[k];
        c.add(scale, ph);
        if (c.is_zero()) coeffs_.erase(k);
    }

    bool is_zero() const { return coeffs_.empty(); }
    size_t term_count() const { return coeffs_.size(); }
    const std::map<MonomialIndex, CoeffSum>& terms() const { return coeffs_; }

    AlgebraElement operator*(const AlgebraElement& o) const {
        AlgebraElement out;
        for (const auto& [k, ck] : coeffs_)
            for (const auto& [l, cl] : o.coeffs_) {
                auto [ph, kl] = monomial_product(k, l);
                CoeffSum prod = ck.times(cl).times(Rational(1), ph);
                auto it = out.coeffs_.find(kl);
                if (it == out.coeffs_.end()) {
                    if (!prod.is_zero()) out.coeffs_.emplace(kl, prod);
                } else {
                    it->second.accumulate(prod);
                    if (it->second.is_zero()) out.coeffs_.erase(it);
                }
            }
        return out;
    }

    bool operator==(const AlgebraElement& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

private:
    std::map<MonomialIndex, CoeffSum> coeffs_;
};

// Linear extension of the generator action to elements.
inline AlgebraElement algebra_act(int N, const AlgebraElement& elem) {
    AlgebraElement out;
    for (const auto& [k, c] : elem.terms()) {
        auto [ph, kk] = act_on_monomial(N, k);
        for (const auto& [p, s] : c.times(Rational(1), ph).terms()) out.add(kk, s, p);
    }
    return out;
}

} // namespace ncb
