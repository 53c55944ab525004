#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncb/rational.hpp"

namespace ncb {

// Spin structure: lattice offsets (eps1, eps2, eps3), each 0 or 1/2.
// Stored doubled (0 or 1) so lattice sites can live on integer coordinates.
struct SpinStructure {
    std::array<int, 3> twice_eps{0, 0, 0};

    SpinStructure() = default;
    SpinStructure(int te1, int te2, int te3) : twice_eps{te1, te2, te3} {
        for (int t : twice_eps)
            if (t != 0 && t != 1) throw std::domain_error("SpinStructure: eps_i must be 0 or 1/2");
    }
    static SpinStructure from_eps(const Rational& e1, const Rational& e2, const Rational& e3) {
        auto enc = [](const Rational& e) {
            if (e.is_zero()) return 0;
            if (e == Rational(1, 2)) return 1;
            throw std::domain_error("SpinStructure: eps_i must be 0 or 1/2, got " + e.str());
        };
        return SpinStructure(enc(e1), enc(e2), enc(e3));
    }

    Rational eps(int i) const { return Rational(twice_eps[(size_t)i], 2); }
    bool half(int i) const { return twice_eps[(size_t)i] == 1; }

    bool operator==(const SpinStructure& o) const { return twice_eps == o.twice_eps; }
    bool operator!=(const SpinStructure& o) const { return !(*this == o); }
    bool operator<(const SpinStructure& o) const { return twice_eps < o.twice_eps; }

    std::string str() const {
        auto f = [](int t) { return t == 0 ? std::string("0") : std::string("1/2"); };
        return "(" + f(twice_eps[0]) + "," + f(twice_eps[1]) + "," + f(twice_eps[2]) + ")";
    }
};

enum class Parity : int8_t { plus = +1, minus = -1 };

inline Parity flip(Parity p) { return p == Parity::plus ? Parity::minus : Parity::plus; }
inline int parity_sign(Parity p) { return p == Parity::plus ? 1 : -1; }

// Basis label e_{mu, parity}: mu in Z^3 + eps, stored as doubled integers.
struct Site {
    std::array<long long, 3> twice_mu{0, 0, 0};
    Parity parity = Parity::plus;

    Site() = default;
    Site(long long t1, long long t2, long long t3, Parity p) : twice_mu{t1, t2, t3}, parity(p) {}

    Rational mu(int i) const { return Rational(twice_mu[(size_t)i], 2); }

    bool on_lattice(const SpinStructure& spin) const {
        for (int i = 0; i < 3; ++i) {
            long long t = twice_mu[(size_t)i] - spin.twice_eps[(size_t)i];
            if (t % 2 != 0) return false;
        }
        return true;
    }

    Site negated() const { return Site(-twice_mu[0], -twice_mu[1], -twice_mu[2], parity); }
    Site with_parity(Parity p) const { return Site(twice_mu[0], twice_mu[1], twice_mu[2], p); }
    Site shifted(const std::array<int, 3>& k) const {
        return Site(twice_mu[0] + 2LL * k[0], twice_mu[1] + 2LL * k[1], twice_mu[2] + 2LL * k[2], parity);
    }

    bool operator==(const Site& o) const { return twice_mu == o.twice_mu && parity == o.parity; }
    bool operator!=(const Site& o) const { return !(*this == o); }
    bool operator<(const Site& o) const {
        if (twice_mu != o.twice_mu) return twice_mu < o.twice_mu;
        return (int)parity < (int)o.parity;
    }

    std::string str() const {
        auto f = [](long long t) {
            if (t % 2 == 0) return std::to_string(t / 2);
            return std::to_string(t) + "/2";
        };
        return "(" + f(twice_mu[0]) + "," + f(twice_mu[1]) + "," + f(twice_mu[2]) + "," +
               (parity == Parity::plus ? "+" : "-") + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Site& s) { return os << s.str(); }
};

struct SiteHash {
    size_t operator()(const Site& s) const {
        size_t h = std::hash<long long>()(s.twice_mu[0]);
        h = h * 1000003u ^ std::hash<long long>()(s.twice_mu[1]);
        h = h * 1000003u ^ std::hash<long long>()(s.twice_mu[2]);
        h = h * 2u + (s.parity == Parity::plus ? 1 : 0);
        return h;
    }
};

// Finite truncation of l^2(Z^3 + eps) x C^2: the symmetric box |mu_i| <= M.
// Symmetry under mu -> -mu keeps the box closed under the real structure;
// the cyclic plane rotations for N=2,4 also preserve it. Tests evaluate
// identities only on interior sites |mu_i| <= M - margin so that no operator
// shift leaves the box.
struct LatticeWindow {
    int bound;  // M
    int margin; // m
    SpinStructure spin;

    LatticeWindow(int M, int m, SpinStructure s) : bound(M), margin(m), spin(s) {
        if (M < 1) throw std::domain_error("LatticeWindow: bound must be >= 1");
        if (m < 0 || m > M) throw std::domain_error("LatticeWindow: margin must be in [0, bound]");
    }

    bool in_box(const Site& s, int half_extent) const {
        for (int i = 0; i < 3; ++i)
            if (s.twice_mu[(size_t)i] > 2LL * half_extent || s.twice_mu[(size_t)i] < -2LL * half_extent)
                return false;
        return true;
    }
    bool contains(const Site& s) const { return in_box(s, bound); }
    bool interior(const Site& s) const { return in_box(s, bound - margin); }

    // All doubled coordinates c with |c/2| <= half_extent and c = 2*eps mod 2.
    std::vector<long long> axis_coords(int i, int half_extent) const {
        std::vector<long long> out;
        long long start = -2LL * half_extent + spin.twice_eps[(size_t)i];
        for (long long c = start; c <= 2LL * half_extent; c += 2)
            if (c >= -2LL * half_extent && c <= 2LL * half_extent) out.push_back(c);
        return out;
    }

    std::vector<Site> sites(int half_extent) const {
        std::vector<Site> out;
        for (long long a : axis_coords(0, half_extent))
            for (long long b : axis_coords(1, half_extent))
                for (long long c : axis_coords(2, half_extent))
                    for (Parity p : {Parity::plus, Parity::minus}) out.emplace_back(a, b, c, p);
        return out;
    }
    std::vector<Site> window_sites() const { return sites(bound); }
    std::vector<Site> interior_sites() const { return sites(bound - margin); }
};

} // namespace ncb
