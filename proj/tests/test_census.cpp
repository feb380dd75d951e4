#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "depthzero/census.hpp"

using namespace depthzero;

namespace {

std::vector<std::vector<Index>> as_lists(const std::vector<FrobeniusOrbit>& orbits) {
    std::vector<std::vector<Index>> out;
    for (const auto& o : orbits) out.push_back(o.indices());
    return out;
}

CentralConstraint unramified(std::uint64_t q, Index b, std::uint64_t k = 1, std::uint64_t j = 0) {
    return CentralConstraint{q, 1, b, UniformizerValue{k, j}};
}

// Exhaustive scan of the restriction class, independent of the census loop.
std::uint64_t brute_gp_count(std::uint64_t q, unsigned m, Index b) {
    CharacterGroup g(q, m);
    std::uint64_t count = 0;
    for (Index a = 0; a < g.order(); ++a)
        if (a % (q - 1) == b && g.general_position_by_norms(a)) ++count;
    return count;
}

}  // namespace

TEST(EnumerateGpOrbits, Examples) {
    using L = std::vector<std::vector<Index>>;
    EXPECT_EQ(as_lists(enumerate_gp_orbits(5, 2, 1)), (L{{1, 5}, {9, 21}, {13, 17}}));
    EXPECT_EQ(as_lists(enumerate_gp_orbits(5, 2, 0)), (L{{4, 20}, {8, 16}}));
    for (const auto& orbit : enumerate_gp_orbits(5, 2, 0)) EXPECT_FALSE(orbit.contains(12));
}

TEST(EnumerateGpOrbits, Errors) {
    EXPECT_THROW(enumerate_gp_orbits(5, 1, 0), invalid_parameter);
    EXPECT_THROW(enumerate_gp_orbits(5, 2, 4), invalid_parameter);
    EXPECT_THROW(enumerate_gp_orbits(3, 3, 0), invalid_parameter);  // p = m
    Limits tight;
    tight.enumeration_cap = 100;
    EXPECT_THROW(enumerate_gp_orbits(7, 3, 0, tight), resource_limit);
}

TEST(BetaCount, Examples) {
    auto one = beta_count(5, 2, 1);
    EXPECT_EQ(one.count, 3u);
    EXPECT_EQ(one.lower_bound, Rational(2));
    auto zero = beta_count(5, 2, 0);
    EXPECT_EQ(zero.count, 2u);
    EXPECT_EQ(zero.lower_bound, Rational(2));
    for (Index b : {0, 2}) EXPECT_EQ(supercuspidal_census(5, 2, b).non_general_position, 2u);
}

TEST(BetaCount, MatchesBruteForceAndPartition) {
    for (std::uint64_t q : {3, 4, 5, 7, 9, 11, 13})
        for (unsigned m = 2; m <= 4; ++m) {
            if (nt::prime_power(q)->first <= m) continue;
            if (*nt::checked_pow(q, m) > 40000) continue;
            for (Index b = 0; b < q - 1; ++b) {
                auto census = supercuspidal_census(q, m, b);
                EXPECT_EQ(census.beta * m, brute_gp_count(q, m, b));
                EXPECT_EQ(m * census.beta + census.non_general_position, (*nt::checked_pow(q, m) - 1) / (q - 1));
                for (const auto& orbit : census.orbits) {
                    EXPECT_EQ(orbit.size(), m);
                    for (auto a : orbit.indices()) EXPECT_EQ(a % (q - 1), b);
                }
                EXPECT_GE(Rational(beta_count(census).count), beta_lower_bound(q, m));
            }
        }
}

TEST(SmallFieldOrbitCount, Examples) {
    EXPECT_EQ(small_field_orbit_count(5, 2, 0, 1, FilterMode::CharDegree), 2u);
    EXPECT_EQ(small_field_orbit_count(5, 2, 1, 1, FilterMode::CharDegree), 0u);
    EXPECT_EQ(small_field_orbit_bound(2, 1), 4u);
    for (Index b = 0; b < 4; ++b) EXPECT_LE(small_field_orbit_count(5, 2, b, 1, FilterMode::CharDegree), 4u);
}

TEST(SmallFieldOrbitCount, InertialFilter) {
    // b = 0: {4,20} and {8,16} are both stable under a -> -a, inertial degree 1.
    EXPECT_EQ(small_field_orbit_count(5, 2, 0, 1, FilterMode::Inertial), 2u);
    // b = 1: inertial degrees 4 ({1,5}), 2 ({9,21}), 4 ({13,17}).
    EXPECT_EQ(small_field_orbit_count(5, 2, 1, 1, FilterMode::Inertial), 0u);
    EXPECT_EQ(small_field_orbit_count(5, 2, 1, 2, FilterMode::Inertial), 1u);
    EXPECT_EQ(small_field_orbit_count(5, 2, 1, 2, FilterMode::CharDegree), 1u);
    EXPECT_EQ(small_field_orbit_count(5, 2, 1, 4, FilterMode::Inertial), 3u);
}

TEST(SmallFieldOrbitCount, MonotoneAndBounded) {
    for (std::uint64_t q : {5, 7, 8, 9, 11, 13, 16})
        for (unsigned m = 2; m <= 3; ++m) {
            if (nt::prime_power(q)->first <= m) continue;
            for (Index b = 0; b < q - 1; ++b) {
                auto census = supercuspidal_census(q, m, b);
                std::uint64_t previous = 0;
                for (std::uint64_t A = 1; A <= 6; ++A) {
                    auto c = small_field_orbit_count(census, A, FilterMode::CharDegree);
                    auto i = small_field_orbit_count(census, A, FilterMode::Inertial);
                    EXPECT_GE(c, previous);
                    EXPECT_LE(i, c);
                    EXPECT_LE(c, roots_of_unity_count(m * A) / m + 1);
                    previous = c;
                }
            }
        }
}

TEST(SteinbergCount, Examples) {
    EXPECT_EQ(steinberg_count(5, 2, unramified(5, 0)), 4u);
    EXPECT_EQ(steinberg_count(7, 2, unramified(7, 1)), 0u);
    EXPECT_THROW(steinberg_count(5, 2, CentralConstraint{5, 1, 0, UniformizerValue{0, 0}}), invalid_parameter);
    EXPECT_THROW(steinberg_count(5, 2, CentralConstraint{5, 1, 0, std::nullopt}), invalid_parameter);
    EXPECT_THROW(steinberg_count(5, 5, unramified(5, 0)), invalid_parameter);
}

// Closed form against explicit enumeration of the characters chi.
TEST(SteinbergCount, FormulaMatchesEnumeration) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
        for (unsigned n = 1; n <= 6; ++n) {
            if (nt::prime_power(q)->first <= n) continue;
            for (Index b = 0; b < std::max<std::uint64_t>(q - 1, 1); ++b)
                for (std::uint64_t k = 1; k <= 6; ++k)
                    for (std::uint64_t j = 0; j < k; ++j) {
                        auto c = unramified(q, b, k, j);
                        auto count = steinberg_count(q, n, c);
                        auto chars = steinberg_characters(q, n, c);
                        ASSERT_EQ(count, chars.size());
                        ASSERT_LE(count, std::uint64_t{n} * n);
                        const auto g = std::gcd(std::uint64_t{n}, q - 1);
                        if (b % g == 0) {
                            EXPECT_EQ(count, n * g);
                        }
                    }
        }
}

TEST(SteinbergCharacters, ValuesSolveTheConstraint) {
    // chi^n must restrict to b and send the uniformizer to zeta_k^j.
    const std::uint64_t q = 7;
    const unsigned n = 3;
    const auto c = unramified(q, 3, 4, 1);
    for (const auto& chi : steinberg_characters(q, n, c)) {
        EXPECT_EQ(n * chi.base_index % (q - 1), 3u);
        // (zeta_o^e)^n == zeta_4^1  <=>  4 n e == o mod 4o
        EXPECT_EQ(4 * n * chi.uniformizer_exponent % (4 * chi.uniformizer_order), chi.uniformizer_order);
    }
}

TEST(DiscreteSeriesCensus, Examples) {
    auto census = discrete_series_census(5, 4, 2, CentralConstraint{5, 2, 0, {}}, 1, FilterMode::CharDegree);
    EXPECT_EQ(census.total, 4u);
    EXPECT_EQ(census.small, 2u);
    ASSERT_EQ(census.fibers.size(), 2u);
    EXPECT_EQ(census.fibers[0].root, 0u);
    EXPECT_EQ(census.fibers[1].root, 2u);
    EXPECT_EQ(Rational(census.small, census.total), Rational(1, 2));
    EXPECT_EQ(discrete_series_params(census).size(), 4u);
}

TEST(DiscreteSeriesCensus, DegenerateSingleSegment) {
    for (Index b = 0; b < 6; ++b) {
        auto census = discrete_series_census(7, 2, 1, CentralConstraint{7, 2, b, {}}, 1, FilterMode::CharDegree);
        EXPECT_EQ(census.total, beta_count(7, 2, b).count);
        EXPECT_EQ(census.small, small_field_orbit_count(7, 2, b, 1, FilterMode::CharDegree));
    }
}

TEST(DiscreteSeriesCensus, Errors) {
    EXPECT_THROW(discrete_series_census(5, 4, 4, CentralConstraint{5, 1, 0, {}}, 1, FilterMode::CharDegree),
                 invalid_parameter);
    EXPECT_THROW(discrete_series_census(5, 4, 3, CentralConstraint{5, 1, 0, {}}, 1, FilterMode::CharDegree),
                 invalid_parameter);
    EXPECT_THROW(discrete_series_census(3, 4, 2, CentralConstraint{3, 2, 0, {}}, 1, FilterMode::CharDegree),
                 invalid_parameter);
    EXPECT_THROW(discrete_series_census(5, 4, 2, CentralConstraint{7, 2, 0, {}}, 1, FilterMode::CharDegree),
                 invalid_parameter);
}

TEST(DiscreteSeriesParam, Invariants) {
    EXPECT_EQ(DiscreteSeriesParam(5, 2, 2, frobenius_orbit(5, 2, 1)).n(), 4u);
    EXPECT_THROW(DiscreteSeriesParam(5, 2, 2, frobenius_orbit(5, 2, 12)), invalid_parameter);
    EXPECT_THROW(DiscreteSeriesParam(5, 2, 3, frobenius_orbit(5, 2, 1)), invalid_parameter);
}

TEST(CensusProperties, ProportionDecaysForLargePrimes) {
    for (std::uint64_t q : {101, 151, 199, 293}) {
        for (Index b = 0; b < q - 1; b += 7) {
            auto census = supercuspidal_census(q, 2, b);
            auto small = small_field_orbit_count(census, 1, FilterMode::CharDegree);
            EXPECT_LT(Rational(small, census.beta), Rational(1, 10)) << "q=" << q << " b=" << b;
        }
    }
}
