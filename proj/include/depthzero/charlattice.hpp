#pragma once

/*
 * Characters of the cyclic group F_{q^m}^x, handled purely through their index
 * lattice.
 *
 * Fix a generator alpha of F_{q^m}^x and put N = q^m - 1. The character theta_a
 * sends alpha to zeta_N^a, so characters are residues a mod N and:
 *
 *   - Frobenius acts by a -> q*a mod N;
 *   - theta_a factors through the norm to F_{q^x}^x iff it kills the kernel of
 *     the norm, which is generated by alpha^{q^x - 1}; in index terms iff
 *     (q^x - 1) * a == 0 mod N;
 *   - F_q^x is generated by alpha^{N/(q-1)}, so theta_a restricted to it has
 *     index a mod (q - 1);
 *   - sigma_t in Gal(Q(zeta_N)/Q) = (Z/N)^x acts by a -> t*a.
 *
 * No finite field element is ever constructed.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "depthzero/arith.hpp"
#include "depthzero/errors.hpp"
#include "depthzero/limits.hpp"
#include "depthzero/numtheory.hpp"

namespace depthzero {

using Index = std::uint64_t;

class FrobeniusOrbit;

// The character group of F_{q^m}^x. Construction validates (q, m) once so that
// per-index queries in tight loops stay cheap.
class CharacterGroup {
public:
    CharacterGroup(std::uint64_t q, unsigned m) : q_(q), m_(m) {
        require_param(m >= 1, "extension degree m must be >= 1");
        require_param(q >= 2, "residue cardinality q must be >= 2");
        auto pp = nt::prime_power(q);
        require_param(pp.has_value(), "q = " + std::to_string(q) + " is not a prime power");
        p_ = pp->first;
        auto qm = nt::checked_pow(q, m);
        if (!qm) throw resource_limit("q^m does not fit in 63 bits");
        order_ = *qm - 1;
        for (unsigned x = 1; x < m; ++x) {
            if (m % x != 0) continue;
            proper_divisors_.push_back(x);
            kernel_multipliers_.push_back(*nt::checked_pow(q, x) - 1);
        }
    }

    std::uint64_t q() const { return q_; }
    unsigned m() const { return m_; }
    std::uint64_t characteristic() const { return p_; }
    // N = q^m - 1.
    std::uint64_t order() const { return order_; }
    const std::vector<unsigned>& proper_divisors() const { return proper_divisors_; }

    void check_index(Index a) const {
        require_param(a < order_, "character index " + std::to_string(a) +
                                      " out of range [0, " + std::to_string(order_) + ")");
    }

    Index frobenius(Index a) const { return nt::mulmod(a, q_, order_); }

    // Smallest k >= 1 with q^k * a == a mod N.
    unsigned orbit_size(Index a) const {
        unsigned k = 1;
        for (Index x = frobenius(a); x != a; x = frobenius(x)) ++k;
        return k;
    }

    FrobeniusOrbit orbit(Index a) const;

    bool factors_through_norm(unsigned x, Index a) const {
        check_index(a);
        require_param(x >= 1 && m_ % x == 0,
                      "x = " + std::to_string(x) + " does not divide m = " + std::to_string(m_));
        if (x == m_) return true;
        auto mult = *nt::checked_pow(q_, x) - 1;
        return nt::mulmod(mult % order_, a, order_) == 0;
    }

    // General position via the norm test; no orbit is built.
    bool general_position_by_norms(Index a) const {
        for (auto mult : kernel_multipliers_)
            if (nt::mulmod(mult % order_, a, order_) == 0) return false;
        return true;
    }

    bool general_position_by_orbit(Index a) const { return orbit_size(a) == m_; }

    // Both characterizations are evaluated; disagreement is a bug.
    bool is_general_position(Index a) const {
        check_index(a);
        bool by_norms = general_position_by_norms(a);
        bool by_orbit = general_position_by_orbit(a);
        ensure(by_norms == by_orbit, "norm test and orbit size disagree on general position for a = " +
                                         std::to_string(a));
        return by_norms;
    }

    Index restrict_to_base(Index a) const {
        check_index(a);
        return a % (q_ - 1);
    }

    // ord(theta_a) = N / gcd(N, a).
    std::uint64_t character_order(Index a) const {
        check_index(a);
        return order_ / std::gcd(order_, a);
    }

    // [Q(theta_a) : Q] = phi(ord(theta_a)).
    std::uint64_t char_rationality_degree(Index a) const { return nt::euler_phi(character_order(a)); }

private:
    std::uint64_t q_;
    unsigned m_;
    std::uint64_t p_ = 0;
    std::uint64_t order_ = 0;
    std::vector<unsigned> proper_divisors_;
    std::vector<std::uint64_t> kernel_multipliers_;  // q^x - 1 for each proper divisor x
};

// A Frobenius orbit of character indices: sorted, closed under a -> q*a mod N.
class FrobeniusOrbit {
public:
    // Validating constructor for externally supplied orbits.
    static FrobeniusOrbit from_indices(std::uint64_t q, unsigned m, std::vector<Index> indices) {
        CharacterGroup group(q, m);
        require_param(!indices.empty(), "empty orbit");
        std::sort(indices.begin(), indices.end());
        require_param(std::adjacent_find(indices.begin(), indices.end()) == indices.end(),
                      "orbit lists an index twice");
        FrobeniusOrbit expected = group.orbit(indices.front());
        require_param(expected.indices() == indices, "indices are not a single Frobenius orbit");
        return expected;
    }

    std::uint64_t q() const { return q_; }
    unsigned m() const { return m_; }
    std::uint64_t modulus() const { return modulus_; }
    const std::vector<Index>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    Index representative() const { return indices_.front(); }

    bool contains(Index a) const { return std::binary_search(indices_.begin(), indices_.end(), a); }

    friend bool operator==(const FrobeniusOrbit&, const FrobeniusOrbit&) = default;

private:
    friend class CharacterGroup;
    FrobeniusOrbit(std::uint64_t q, unsigned m, std::uint64_t modulus, std::vector<Index> indices)
        : q_(q), m_(m), modulus_(modulus), indices_(std::move(indices)) {}

    std::uint64_t q_;
    unsigned m_;
    std::uint64_t modulus_;
    std::vector<Index> indices_;
};

inline FrobeniusOrbit CharacterGroup::orbit(Index a) const {
    check_index(a);
    std::vector<Index> members{a};
    for (Index x = frobenius(a); x != a; x = frobenius(x)) members.push_back(x);
    std::sort(members.begin(), members.end());
    return FrobeniusOrbit(q_, m_, order_, std::move(members));
}

// theta_a on F_{q^m}^x.
struct CyclicCharacter {
    std::uint64_t q;
    unsigned m;
    Index a;

    CyclicCharacter(std::uint64_t q_, unsigned m_, Index a_) : q(q_), m(m_), a(a_) {
        CharacterGroup(q, m).check_index(a);
    }
};

struct RationalityReport {
    std::uint64_t char_degree;   // [Q(theta_0) : Q]
    std::uint64_t orbit_degree;  // [Q(rho_theta|_{I_L}) : Q], a lower bound for [Q(pi_theta) : Q]
    bool ratio_bound_ok;         // orbit_degree | char_degree and the quotient is <= m
};

// ---------------------------------------------------------------------------
// Free-function surface.

inline FrobeniusOrbit frobenius_orbit(std::uint64_t q, unsigned m, Index a) {
    return CharacterGroup(q, m).orbit(a);
}

inline bool factors_through_norm(std::uint64_t q, unsigned m, unsigned x, Index a) {
    return CharacterGroup(q, m).factors_through_norm(x, a);
}

inline bool is_general_position(std::uint64_t q, unsigned m, Index a) {
    return CharacterGroup(q, m).is_general_position(a);
}

inline Index restrict_to_base(std::uint64_t q, unsigned m, Index a) {
    return CharacterGroup(q, m).restrict_to_base(a);
}

inline std::uint64_t char_rationality_degree(std::uint64_t q, unsigned m, Index a) {
    return CharacterGroup(q, m).char_rationality_degree(a);
}

namespace detail {

inline void check_unit_group(std::uint64_t modulus, const Limits& limits) {
    auto phi = nt::euler_phi(modulus);
    if (phi > limits.unit_group_cap)
        throw resource_limit("phi(" + std::to_string(modulus) + ") = " + std::to_string(phi) +
                             " exceeds the unit-group cap " + std::to_string(limits.unit_group_cap));
}

// Calls visit(t) for every t in (Z/modulus)^x, in increasing order.
template <typename Visit>
void for_each_unit(std::uint64_t modulus, Visit&& visit) {
    for (std::uint64_t t = 0; t < modulus; ++t)
        if (std::gcd(t, modulus) == 1) visit(t);
}

}  // namespace detail

// phi(N) / |Stab|, Stab = {t in (Z/N)^x : t * orbit = orbit}.
inline std::uint64_t orbit_rationality_degree(const FrobeniusOrbit& orbit, const Limits& limits = {}) {
    const auto modulus = orbit.modulus();
    detail::check_unit_group(modulus, limits);
    // t * orbit is the Frobenius orbit of t * rep (multiplication by t commutes
    // with Frobenius), so it equals orbit iff t * rep lies in orbit.
    const Index rep = orbit.representative();
    std::uint64_t units = 0;
    std::uint64_t stabilizer = 0;
    detail::for_each_unit(modulus, [&](std::uint64_t t) {
        ++units;
        if (orbit.contains(nt::mulmod(t, rep, modulus))) ++stabilizer;
    });
    ensure(stabilizer > 0 && units % stabilizer == 0, "stabilizer order does not divide phi(N)");
    return units / stabilizer;
}

inline RationalityReport rationality_report(std::uint64_t q, unsigned m, Index a, const Limits& limits = {}) {
    CharacterGroup group(q, m);
    auto orbit = group.orbit(a);
    RationalityReport report{group.char_rationality_degree(a), orbit_rationality_degree(orbit, limits), false};
    report.ratio_bound_ok = report.char_degree % report.orbit_degree == 0 &&
                            report.char_degree / report.orbit_degree <= m;
    return report;
}

// One tempered factor: an orbit (the inertial datum of pi'_i) with its segment length d_i.
struct TemperedComponent {
    FrobeniusOrbit orbit;
    unsigned d = 1;
};

// Degree of the field of rationality of the inertial datum of pi_1 x ... x pi_r.
// Orbits are lifted to Z/M with M = lcm(N_i) via a -> a * (M / N_i); the
// stabilizer is the set of t in (Z/M)^x permuting the multiset of (lifted
// orbit, d) pairs.
inline std::uint64_t tempered_rationality_degree(const std::vector<TemperedComponent>& components,
                                                 const Limits& limits = {}) {
    require_param(!components.empty(), "tempered product needs at least one component");
    const auto q = components.front().orbit.q();
    std::uint64_t modulus = 1;
    for (const auto& c : components) {
        require_param(c.orbit.q() == q, "tempered components must share q");
        require_param(c.d >= 1, "segment length d must be >= 1");
        modulus = nt::lcm(modulus, c.orbit.modulus());
        if (modulus > (std::uint64_t{1} << 62U)) throw resource_limit("lcm of orbit moduli too large");
    }
    detail::check_unit_group(modulus, limits);

    using Key = std::pair<std::vector<Index>, unsigned>;
    std::vector<Key> lifted;
    for (const auto& c : components) {
        const auto scale = modulus / c.orbit.modulus();
        Key key{{}, c.d};
        for (auto a : c.orbit.indices()) key.first.push_back(a * scale);
        std::sort(key.first.begin(), key.first.end());
        lifted.push_back(std::move(key));
    }
    std::sort(lifted.begin(), lifted.end());

    std::uint64_t units = 0;
    std::uint64_t stabilizer = 0;
    std::vector<Key> image;
    detail::for_each_unit(modulus, [&](std::uint64_t t) {
        ++units;
        image = lifted;
        for (auto& [indices, d] : image) {
            for (auto& a : indices) a = nt::mulmod(t, a, modulus);
            std::sort(indices.begin(), indices.end());
        }
        std::sort(image.begin(), image.end());
        if (image == lifted) ++stabilizer;
    });
    ensure(stabilizer > 0 && units % stabilizer == 0, "stabilizer order does not divide phi(M)");
    return units / stabilizer;
}

// f(A) = #{roots of unity zeta : [Q(zeta):Q] <= A} = sum of phi(n) over n with phi(n) <= A.
// phi(n) >= sqrt(n/2) for every n, so phi(n) > A once n > 2A^2.
inline std::uint64_t roots_of_unity_count(std::uint64_t A, const Limits& limits = {}) {
    require_param(A >= 1, "degree bound A must be >= 1");
    const std::uint64_t cutoff = 2 * A * A;
    if (cutoff > limits.enumeration_cap) throw resource_limit("2A^2 exceeds the enumeration cap");
    std::vector<std::uint64_t> phi(cutoff + 1);
    std::iota(phi.begin(), phi.end(), std::uint64_t{0});
    for (std::uint64_t p = 2; p <= cutoff; ++p) {
        if (phi[p] != p) continue;  // composite: already reduced by a smaller prime
        for (std::uint64_t k = p; k <= cutoff; k += p) phi[k] -= phi[k] / p;
    }
    std::uint64_t total = 0;
    for (std::uint64_t n = 1; n <= cutoff; ++n)
        if (phi[n] <= A) total += phi[n];
    return total;
}

// (p - 1) / n: lower bound for [Q(pi):Q] when pi is a positive-depth
// supercuspidal or tempered representation of GL_n over a field of residue
// characteristic p.
inline Rational positive_depth_degree_bound(std::uint64_t p, std::uint64_t n) {
    require_param(nt::is_prime(p), "p = " + std::to_string(p) + " is not prime");
    require_param(n >= 1, "n must be >= 1");
    return Rational(Integer(p - 1), Integer(n));
}

}  // namespace depthzero
