#pragma once

// Counting depth-zero supercuspidal and discrete-series parameters of GL_n
// with a fixed central character, with and without a small-field filter.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "depthzero/arith.hpp"
#include "depthzero/charlattice.hpp"
#include "depthzero/errors.hpp"
#include "depthzero/limits.hpp"
#include "depthzero/numtheory.hpp"

namespace depthzero {

enum class FilterMode { CharDegree, Inertial };

inline std::string to_string(FilterMode mode) { return mode == FilterMode::CharDegree ? "char" : "inertial"; }

// zeta_order^exponent, the value of the central character at a uniformizer.
struct UniformizerValue {
    std::uint64_t order = 1;
    std::uint64_t exponent = 0;
};

struct CentralConstraint {
    std::uint64_t q = 2;
    unsigned m = 1;
    Index b = 0;  // restriction to F_q^x, as an index mod q - 1
    std::optional<UniformizerValue> uniformizer_value;

    void validate() const {
        require_param(q >= 2 && nt::prime_power(q).has_value(), "q must be a prime power");
        require_param(b < q - 1 || (q == 2 && b == 0),
                      "central index b = " + std::to_string(b) + " must be < q - 1");
        if (uniformizer_value) {
            require_param(uniformizer_value->order >= 1, "uniformizer value must have order >= 1");
            require_param(uniformizer_value->exponent < uniformizer_value->order,
                          "uniformizer exponent must be < its order");
        }
    }
};

struct SupercuspidalCensus {
    std::uint64_t q;
    unsigned m;
    Index b;
    std::vector<FrobeniusOrbit> orbits;  // general position, restriction b, sorted by minimal element
    std::uint64_t beta;
    std::uint64_t non_general_position;  // characters with restriction b that are not in general position
};

struct BetaCount {
    std::uint64_t count;
    Rational lower_bound;  // (q^{m-1} - 1) / m
};

// (q, m, d, orbit) naming Sp(pi', d) on GL_{md}; m = 1 names a twisted Steinberg.
struct DiscreteSeriesParam {
    std::uint64_t q;
    unsigned m;
    unsigned d;
    FrobeniusOrbit orbit;

    DiscreteSeriesParam(std::uint64_t q_, unsigned m_, unsigned d_, FrobeniusOrbit orbit_)
        : q(q_), m(m_), d(d_), orbit(std::move(orbit_)) {
        require_param(d >= 1, "segment length d must be >= 1");
        require_param(orbit.q() == q && orbit.m() == m, "orbit does not live over (q, m)");
        require_param(orbit.size() == m, "orbit must be in general position");
        require_param(nt::prime_power(q)->first > std::uint64_t{m} * d, "need p > n");
    }

    unsigned n() const { return m * d; }
};

namespace detail {

inline CharacterGroup census_group(std::uint64_t q, unsigned m, Index b, const Limits& limits) {
    require_param(m >= 2, "supercuspidal census needs m >= 2");
    CharacterGroup group(q, m);
    require_param(group.characteristic() > m, "need residue characteristic p > m");
    require_param(b < q - 1, "central index b = " + std::to_string(b) + " must be < q - 1");
    if (group.order() > limits.enumeration_cap)
        throw resource_limit("q^m - 1 = " + std::to_string(group.order()) + " exceeds the enumeration cap " +
                             std::to_string(limits.enumeration_cap));
    return group;
}

}  // namespace detail

inline SupercuspidalCensus supercuspidal_census(std::uint64_t q, unsigned m, Index b, const Limits& limits = {}) {
    const CharacterGroup group = detail::census_group(q, m, b, limits);
    const std::uint64_t modulus = group.order();
    SupercuspidalCensus census{q, m, b, {}, 0, 0};
    // Residues with restriction b are b, b + (q-1), b + 2(q-1), ...; Frobenius
    // preserves the restriction, so whole orbits stay inside this class.
    for (Index a = b; a < modulus; a += q - 1) {
        unsigned size = 1;
        Index smallest = a;
        for (Index x = group.frobenius(a); x != a; x = group.frobenius(x)) {
            ++size;
            smallest = std::min(smallest, x);
        }
        if (size != m) {
            ++census.non_general_position;
        } else if (smallest == a) {
            census.orbits.push_back(group.orbit(a));
        }
    }
    census.beta = census.orbits.size();
    ensure(std::uint64_t{m} * census.beta + census.non_general_position == modulus / (q - 1),
           "orbits do not partition the restriction class");
    return census;
}

inline std::vector<FrobeniusOrbit> enumerate_gp_orbits(std::uint64_t q, unsigned m, Index b,
                                                       const Limits& limits = {}) {
    return supercuspidal_census(q, m, b, limits).orbits;
}

inline Rational beta_lower_bound(std::uint64_t q, unsigned m) {
    return Rational(ipow(Integer(q), m - 1) - 1, Integer(m));
}

inline BetaCount beta_count(const SupercuspidalCensus& census) {
    BetaCount result{census.beta, beta_lower_bound(census.q, census.m)};
    ensure(Rational(result.count) >= result.lower_bound,
           "beta(" + std::to_string(census.q) + ", " + std::to_string(census.m) + ", " +
               std::to_string(census.b) + ") = " + std::to_string(result.count) + " is below " +
               to_fraction_string(result.lower_bound));
    return result;
}

inline BetaCount beta_count(std::uint64_t q, unsigned m, Index b, const Limits& limits = {}) {
    return beta_count(supercuspidal_census(q, m, b, limits));
}

inline bool passes_filter(const FrobeniusOrbit& orbit, std::uint64_t A, FilterMode mode, const Limits& limits) {
    if (mode == FilterMode::CharDegree) {
        const auto modulus = orbit.modulus();
        const auto order = modulus / std::gcd(modulus, orbit.representative());
        return nt::euler_phi(order) <= std::uint64_t{orbit.m()} * A;
    }
    return orbit_rationality_degree(orbit, limits) <= A;
}

// ceil(f(mA) / m)
inline std::uint64_t small_field_orbit_bound(unsigned m, std::uint64_t A, const Limits& limits = {}) {
    const auto f = roots_of_unity_count(std::uint64_t{m} * A, limits);
    return (f + m - 1) / m;
}

inline std::uint64_t small_field_orbit_count(const SupercuspidalCensus& census, std::uint64_t A, FilterMode mode,
                                             const Limits& limits = {}) {
    require_param(A >= 1, "degree bound A must be >= 1");
    std::uint64_t by_char = 0;
    for (const auto& orbit : census.orbits)
        if (passes_filter(orbit, A, FilterMode::CharDegree, limits)) ++by_char;
    ensure(by_char <= small_field_orbit_bound(census.m, A, limits),
           "small-field orbit count exceeds ceil(f(mA)/m)");
    if (mode == FilterMode::CharDegree) return by_char;

    std::uint64_t inertial = 0;
    for (const auto& orbit : census.orbits)
        if (passes_filter(orbit, A, FilterMode::Inertial, limits)) ++inertial;
    ensure(inertial <= by_char, "inertial filter admitted more orbits than the character-degree filter");
    return inertial;
}

inline std::uint64_t small_field_orbit_count(std::uint64_t q, unsigned m, Index b, std::uint64_t A,
                                             FilterMode mode, const Limits& limits = {}) {
    return small_field_orbit_count(supercuspidal_census(q, m, b, limits), A, mode, limits);
}

// A character chi of L^x of conductor <= 1 with chi^n = chi_0: its index on
// F_q^x and its value zeta_{order}^{exponent} at the uniformizer.
struct SteinbergCharacter {
    Index base_index;
    std::uint64_t uniformizer_order;
    std::uint64_t uniformizer_exponent;
    std::uint64_t rationality_degree;  // [Q(chi):Q], which equals [Q(St(chi)):Q]
};

namespace detail {

inline UniformizerValue steinberg_precheck(std::uint64_t q, unsigned n, const CentralConstraint& constraint) {
    require_param(n >= 1, "n must be >= 1");
    constraint.validate();
    require_param(constraint.q == q, "constraint lives over a different q");
    require_param(constraint.uniformizer_value.has_value(), "Steinberg count needs the uniformizer value");
    auto pp = nt::prime_power(q);
    require_param(pp->first > n, "need residue characteristic p > n");
    return *constraint.uniformizer_value;
}

}  // namespace detail

// Enumerates every chi with chi^n = chi_0: n * c == b mod (q-1) on the units,
// and chi(uniformizer) = zeta_{kn}^{j + k s} for s = 0..n-1.
inline std::vector<SteinbergCharacter> steinberg_characters(std::uint64_t q, unsigned n,
                                                            const CentralConstraint& constraint) {
    const auto value = detail::steinberg_precheck(q, n, constraint);
    const std::uint64_t base = q - 1;
    const std::uint64_t k = value.order;
    const std::uint64_t j = value.exponent;
    std::vector<SteinbergCharacter> out;
    for (Index c = 0; c < base; ++c) {
        if ((std::uint64_t{n} * c) % base != constraint.b % base) continue;
        const std::uint64_t base_order = base / std::gcd(base, c);
        for (std::uint64_t s = 0; s < n; ++s) {
            std::uint64_t den = k * n;
            std::uint64_t num = j + k * s;
            const auto g = std::gcd(den, num);
            const std::uint64_t order = den / g;
            out.push_back({c, order, num / g % order, nt::euler_phi(nt::lcm(base_order, order))});
        }
    }
    return out;
}

// (#n-th roots of the F_q^x part) * (n roots at the uniformizer) <= n^2.
inline std::uint64_t steinberg_count(std::uint64_t q, unsigned n, const CentralConstraint& constraint) {
    detail::steinberg_precheck(q, n, constraint);
    const std::uint64_t g = std::gcd(std::uint64_t{n}, q - 1);
    const std::uint64_t base_roots = (q == 2 || constraint.b % g == 0) ? g : 0;
    const std::uint64_t count = base_roots * n;
    ensure(count <= std::uint64_t{n} * n, "Steinberg count exceeds n^2");
    return count;
}

struct FiberCensus {
    Index root;  // b_1 with d * b_1 == b mod (q - 1)
    SupercuspidalCensus supercuspidals;
    std::uint64_t small;
};

struct DiscreteSeriesCensus {
    std::uint64_t q;
    unsigned n;
    unsigned d;
    std::uint64_t A;
    FilterMode mode;
    std::vector<FiberCensus> fibers;
    std::uint64_t total = 0;
    std::uint64_t small = 0;

    unsigned m() const { return n / d; }
};

// Indices b_1 mod (q - 1) with d * b_1 == b.
inline std::vector<Index> central_roots(std::uint64_t q, unsigned d, Index b) {
    std::vector<Index> roots;
    const std::uint64_t base = q - 1;
    for (Index c = 0; c < base; ++c)
        if ((std::uint64_t{d} * c) % base == b % base) roots.push_back(c);
    return roots;
}

// Sums over every d-th root of the central restriction. The uniformizer part
// contributes the same factor d to every fiber, so it is left out of the counts.
inline DiscreteSeriesCensus discrete_series_census(std::uint64_t q, unsigned n, unsigned d,
                                                   const CentralConstraint& constraint, std::uint64_t A,
                                                   FilterMode mode, const Limits& limits = {}) {
    require_param(d >= 1 && n % d == 0, "d must divide n");
    require_param(n / d >= 2, "discrete-series census needs m = n/d >= 2; use the Steinberg path for d = n");
    constraint.validate();
    require_param(constraint.q == q, "constraint lives over a different q");
    require_param(nt::prime_power(q)->first > n, "need residue characteristic p > n");
    const unsigned m = n / d;

    DiscreteSeriesCensus census{q, n, d, A, mode, {}, 0, 0};
    for (Index root : central_roots(q, d, constraint.b)) {
        auto sc = supercuspidal_census(q, m, root, limits);
        beta_count(sc);
        auto small = small_field_orbit_count(sc, A, mode, limits);
        census.total += sc.beta;
        census.small += small;
        census.fibers.push_back({root, std::move(sc), small});
    }
    return census;
}

inline std::vector<DiscreteSeriesParam> discrete_series_params(const DiscreteSeriesCensus& census) {
    std::vector<DiscreteSeriesParam> out;
    for (const auto& fiber : census.fibers)
        for (const auto& orbit : fiber.supercuspidals.orbits)
            out.emplace_back(census.q, census.m(), census.d, orbit);
    return out;
}

}  // namespace depthzero
