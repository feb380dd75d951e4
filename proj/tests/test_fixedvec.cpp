#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "depthzero/fixedvec.hpp"

using namespace depthzero;

namespace {

using Vec = std::vector<unsigned>;
using Subspace = std::set<Vec>;

// Span of `gens` in F_p^n, by closure.
Subspace span(const std::vector<Vec>& gens, unsigned n, unsigned p) {
    Subspace s{Vec(n, 0)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> current(s.begin(), s.end());
        for (const auto& v : current)
            for (const auto& g : gens)
                for (unsigned c = 1; c < p; ++c) {
                    Vec w(n);
                    for (unsigned i = 0; i < n; ++i) w[i] = (v[i] + c * g[i]) % p;
                    grew |= s.insert(w).second;
                }
    }
    return s;
}

// Complete flags 0 < V_1 < ... < V_{n-1} < F_p^n, counted by extending chains
// one vector at a time.
std::uint64_t count_flags(unsigned n, unsigned p) {
    std::vector<Vec> vectors;
    Vec v(n, 0);
    for (unsigned total = 1, i = 0; i < n; ++i) total *= p, (void)total;
    std::uint64_t size = 1;
    for (unsigned i = 0; i < n; ++i) size *= p;
    for (std::uint64_t code = 1; code < size; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < n; ++i) v[i] = c % p, c /= p;
        vectors.push_back(v);
    }
    std::set<std::vector<Subspace>> chains{{}};
    for (unsigned dim = 1; dim < n; ++dim) {
        std::set<std::vector<Subspace>> next;
        for (const auto& chain : chains) {
            std::vector<Vec> basis;
            if (!chain.empty()) basis.assign(chain.back().begin(), chain.back().end());
            for (const auto& w : vectors) {
                if (!chain.empty() && chain.back().count(w)) continue;
                auto gens = basis;
                gens.push_back(w);
                auto extended = chain;
                extended.push_back(span(gens, n, p));
                next.insert(extended);
            }
        }
        chains = std::move(next);
    }
    return chains.size();
}

}  // namespace

TEST(FlagCount, Examples) {
    EXPECT_EQ(flag_count(2, 5), Integer(6));
    EXPECT_EQ(flag_count(1, 17), Integer(1));
    EXPECT_EQ(flag_count(3, 2), Integer(21));
    EXPECT_EQ(flag_count(3, 5), Integer(186));
}

TEST(FlagCount, MatchesFlagEnumeration) {
    EXPECT_EQ(count_flags(3, 2), 21u);
    EXPECT_EQ(flag_count(3, 2), Integer(count_flags(3, 2)));
    EXPECT_EQ(flag_count(2, 3), Integer(count_flags(2, 3)));
    EXPECT_EQ(flag_count(3, 3), Integer(count_flags(3, 3)));
    EXPECT_EQ(flag_count(4, 2), Integer(count_flags(4, 2)));
}

TEST(InducedFixedDim, Examples) {
    EXPECT_EQ(induced_fixed_dim(2, 3, 1).value, Integer(4));
    EXPECT_EQ(induced_fixed_dim(2, 3, 2).value, Integer(12));
    EXPECT_EQ(induced_fixed_dim(2, 5, 2).value, Integer(30));
    EXPECT_EQ(induced_fixed_dim(2, 5, 2).method, CosetCount::Method::ClosedForm);
}

TEST(BruteforceDoubleCosets, Examples) {
    EXPECT_EQ(bruteforce_double_cosets(2, 3, 1), 4u);
    EXPECT_EQ(bruteforce_double_cosets(2, 3, 2), 12u);
    EXPECT_EQ(bruteforce_double_cosets(2, 2, 2), 6u);
    EXPECT_EQ(gl_order_mod_prime_power(2, 3, 2), Integer(3888));
    EXPECT_EQ(gl_order_mod_prime_power(2, 3, 1), Integer(48));
}

TEST(BruteforceDoubleCosets, Errors) {
    EXPECT_THROW(bruteforce_double_cosets(2, 4, 1), invalid_parameter);
    EXPECT_THROW(bruteforce_double_cosets(2, 3, 0), invalid_parameter);
    Limits tight;
    tight.enumeration_cap = 100;
    EXPECT_THROW(bruteforce_double_cosets(2, 3, 2, tight), resource_limit);
    EXPECT_THROW(bruteforce_double_cosets(4, 7, 3), resource_limit);
}

TEST(BruteforceDoubleCosets, MatchesClosedFormOnSmallCases) {
    for (auto [n, p, r] : std::vector<std::array<std::uint64_t, 3>>{{1, 5, 2}, {2, 2, 1}, {2, 2, 3}, {2, 5, 1}, {3, 2, 1}})
        EXPECT_EQ(Integer(bruteforce_double_cosets(n, p, r)), induced_fixed_dim(n, p, r).value)
            << n << " " << p << " " << r;
}

TEST(SteinbergFixedUpper, Examples) {
    auto b = steinberg_fixed_upper(2, 5, 2);
    EXPECT_EQ(b.value, Integer(30));
    EXPECT_EQ(b.constant, Rational(6, 5));
    for (std::uint64_t q : {2, 3, 4, 7, 9}) {
        auto r1 = steinberg_fixed_upper(2, q, 1);
        EXPECT_EQ(r1.value, Integer(q + 1));
        EXPECT_EQ(r1.constant, Rational(q + 1, q));
    }
    auto c = steinberg_fixed_upper(3, 5, 1);
    EXPECT_EQ(c.value, Integer(186));
    EXPECT_EQ(c.constant, Rational(186, 125));
}

TEST(FixedVecProperties, GrowthLaw) {
    for (std::uint64_t n = 1; n <= 4; ++n)
        for (std::uint64_t q : {2, 3, 5, 8})
            for (std::uint64_t r = 1; r <= 4; ++r) {
                const Rational ratio(induced_fixed_dim(n, q, r + 1).value, induced_fixed_dim(n, q, r).value);
                EXPECT_EQ(ratio, Rational(ipow(Integer(q), n * (n - 1) / 2)));
            }
}

TEST(FixedVecProperties, ConstantBelowTwoToTheN) {
    for (std::uint64_t n = 1; n <= 6; ++n)
        for (std::uint64_t q : {2, 3, 4, 5, 49})
            EXPECT_LE(steinberg_fixed_upper(n, q, 1).constant, Rational(ipow(Integer(2), n)));
}
