#pragma once

// Invariant checks run by `depthzero selftest`, at parameters small enough to
// finish in a few seconds.

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "depthzero/depthzero.hpp"

namespace depthzero::cli {

struct SelftestResult {
    std::string check;
    std::uint64_t passed = 0;
    std::uint64_t total = 0;
};

namespace detail {

inline std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= limit; ++q)
        if (nt::prime_power(q)) out.push_back(q);
    return out;
}

class Tally {
public:
    explicit Tally(std::string name) : result_{std::move(name), 0, 0} {}

    void check(const std::function<bool()>& body) {
        ++result_.total;
        try {
            if (body()) ++result_.passed;
        } catch (const std::exception&) {
        }
    }

    SelftestResult result() const { return result_; }

private:
    SelftestResult result_;
};

}  // namespace detail

inline std::vector<SelftestResult> run_selftest() {
    std::vector<SelftestResult> results;
    const auto qs = detail::prime_powers_up_to(25);

    {
        detail::Tally t("general_position_equivalence");
        for (auto q : qs)
            for (unsigned m = 1; m <= 4; ++m) {
                auto qm = nt::checked_pow(q, m);
                if (*qm - 1 > 20000) continue;
                t.check([&] {
                    CharacterGroup g(q, m);
                    for (Index a = 0; a < g.order(); ++a)
                        if (g.general_position_by_norms(a) != g.general_position_by_orbit(a)) return false;
                    return true;
                });
            }
        results.push_back(t.result());
    }
    {
        detail::Tally t("orbit_partition");
        for (auto q : qs)
            for (unsigned m = 1; m <= 3; ++m) {
                if (*nt::checked_pow(q, m) - 1 > 20000) continue;
                t.check([&] {
                    CharacterGroup g(q, m);
                    std::vector<bool> seen(g.order(), false);
                    for (Index a = 0; a < g.order(); ++a) {
                        if (seen[a]) continue;
                        auto orbit = g.orbit(a);
                        if (m % orbit.size() != 0) return false;
                        for (auto x : orbit.indices()) {
                            if (seen[x]) return false;
                            seen[x] = true;
                        }
                    }
                    return true;
                });
            }
        results.push_back(t.result());
    }
    {
        detail::Tally t("degree_sandwich");
        for (auto q : qs)
            for (unsigned m = 1; m <= 2; ++m) {
                if (*nt::checked_pow(q, m) - 1 > 1000) continue;
                CharacterGroup g(q, m);
                for (Index a = 0; a < g.order(); ++a)
                    t.check([&] { return rationality_report(q, m, a).ratio_bound_ok; });
            }
        results.push_back(t.result());
    }
    {
        detail::Tally t("census_partition_and_lower_bound");
        for (auto q : qs)
            for (unsigned m = 2; m <= 3; ++m) {
                if (nt::prime_power(q)->first <= m || *nt::checked_pow(q, m) > 200000) continue;
                for (Index b = 0; b < q - 1; ++b)
                    t.check([&] {
                        auto census = supercuspidal_census(q, m, b);
                        auto beta = beta_count(census);
                        return Rational(beta.count) >= beta.lower_bound &&
                               m * census.beta + census.non_general_position == (ipow(Integer(q), m) - 1) / (q - 1);
                    });
            }
        results.push_back(t.result());
    }
    {
        detail::Tally t("small_field_upper_bound");
        for (auto q : qs)
            for (unsigned m = 2; m <= 3; ++m) {
                if (nt::prime_power(q)->first <= m || *nt::checked_pow(q, m) > 200000) continue;
                for (Index b = 0; b < q - 1; ++b)
                    for (std::uint64_t A = 1; A <= 3; ++A)
                        t.check([&] {
                            return small_field_orbit_count(q, m, b, A, FilterMode::CharDegree) <=
                                   small_field_orbit_bound(m, A);
                        });
            }
        results.push_back(t.result());
    }
    {
        detail::Tally t("formal_degree_collapse");
        for (auto q : qs)
            for (std::uint64_t m = 1; m <= 3; ++m)
                for (std::uint64_t d = 1; d <= 3; ++d) {
                    if (nt::prime_power(q)->first <= m * d) continue;
                    t.check([&] {
                        auto deg = deg_generalized_steinberg(q, m, d).value;
                        if (d == 1 && deg != deg_supercuspidal_depth0(q, m).value) return false;
                        if (m == 1 && deg != deg_steinberg(d, q).value) return false;
                        return deg > 0;
                    });
                }
        results.push_back(t.result());
    }
    {
        detail::Tally t("mackey_oracle");
        const std::vector<std::array<std::uint64_t, 3>> cases{{2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2}, {2, 5, 1}};
        for (const auto& [n, p, r] : cases)
            t.check([&] { return induced_fixed_dim(n, p, r).value == Integer(bruteforce_double_cosets(n, p, r)); });
        results.push_back(t.result());
    }
    {
        detail::Tally t("steinberg_count_cap");
        for (auto q : qs)
            for (unsigned n = 1; n <= 4; ++n) {
                if (nt::prime_power(q)->first <= n) continue;
                for (Index b = 0; b < q - 1; ++b)
                    for (std::uint64_t k = 1; k <= 4; ++k)
                        for (std::uint64_t j = 0; j < k; ++j)
                            t.check([&] {
                                CentralConstraint c{q, 1, b, UniformizerValue{k, j}};
                                auto count = steinberg_count(q, n, c);
                                return count <= std::uint64_t{n} * n && count == steinberg_characters(q, n, c).size();
                            });
            }
        results.push_back(t.result());
    }
    {
        detail::Tally t("steinberg_budget_decay");
        for (auto q : {3ULL, 5ULL, 7ULL})
            for (unsigned n = 2; n <= 3; ++n) {
                if (q <= n) continue;
                t.check([&] {
                    CentralConstraint c{q, 1, 0, UniformizerValue{1, 0}};
                    Rational previous = -1;
                    for (std::uint64_t r = 1; r <= 4; ++r) {
                        auto ratio = steinberg_budget(q, n, r, c, Rational(1)).ratio;
                        if (previous >= 0 && !(ratio < previous)) return false;
                        previous = ratio;
                    }
                    return true;
                });
            }
        results.push_back(t.result());
    }
    {
        detail::Tally t("roots_of_unity_monotone");
        std::uint64_t previous = 0;
        for (std::uint64_t A = 1; A <= 20; ++A)
            t.check([&] {
                auto f = roots_of_unity_count(A);
                bool ok = f >= previous;
                previous = f;
                return ok;
            });
        results.push_back(t.result());
    }
    return results;
}

}  // namespace depthzero::cli
