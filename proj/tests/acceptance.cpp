// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "depthzero/depthzero.hpp"

using namespace depthzero;

namespace {

struct Verdict {
    bool ok;
    std::string detail;
};

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= limit; ++q)
        if (nt::prime_power(q)) out.push_back(q);
    return out;
}

std::uint64_t residue_char(std::uint64_t q) { return nt::prime_power(q)->first; }

// 1 and 2 share the census sweep.
struct CensusSweep {
    std::uint64_t cases = 0;
    std::string beta_failure;
    std::string small_failure;
};

const CensusSweep& census_sweep() {
    static const CensusSweep sweep = [] {
        CensusSweep s;
        for (auto q : prime_powers_upto(49))
            for (unsigned m = 2; m <= 4; ++m) {
                if (residue_char(q) <= m) continue;
                for (Index b = 0; b < q - 1; ++b) {
                    auto census = supercuspidal_census(q, m, b);
                    ++s.cases;
                    if (Rational(census.beta) < beta_lower_bound(q, m) && s.beta_failure.empty())
                        s.beta_failure = "q=" + std::to_string(q) + " m=" + std::to_string(m) + " b=" + std::to_string(b);
                    for (std::uint64_t A = 1; A <= 3; ++A) {
                        const auto count = small_field_orbit_count(census, A, FilterMode::CharDegree);
                        const auto bound = (roots_of_unity_count(m * A) + m - 1) / m;
                        if (count > bound && s.small_failure.empty())
                            s.small_failure = "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                              " b=" + std::to_string(b) + " A=" + std::to_string(A);
                    }
                }
            }
        return s;
    }();
    return sweep;
}

Verdict beta_lower_bound_holds() {
    const auto& s = census_sweep();
    return {s.beta_failure.empty(), s.beta_failure.empty() ? std::to_string(s.cases) + " censuses" : s.beta_failure};
}

Verdict small_count_bounded() {
    const auto& s = census_sweep();
    return {s.small_failure.empty(),
            s.small_failure.empty() ? std::to_string(3 * s.cases) + " (census, A) pairs" : s.small_failure};
}

Verdict general_position_equivalence() {
    std::uint64_t checked = 0;
    for (auto q : prime_powers_upto(100000))
        for (unsigned m = 1;; ++m) {
            auto qm = nt::checked_pow(q, m);
            if (!qm || *qm - 1 > 100000) break;
            CharacterGroup g(q, m);
            for (Index a = 0; a < g.order(); ++a) {
                if (g.general_position_by_norms(a) != g.general_position_by_orbit(a))
                    return {false, "q=" + std::to_string(q) + " m=" + std::to_string(m) + " a=" + std::to_string(a)};
                ++checked;
            }
        }
    return {true, std::to_string(checked) + " characters"};
}

Verdict degree_collapses() {
    std::uint64_t checked = 0;
    for (auto q : prime_powers_upto(27))
        for (std::uint64_t m = 1; m <= 4; ++m)
            for (std::uint64_t d = 1; d <= 4; ++d) {
                if (residue_char(q) <= m * d) continue;
                // Also re-checks closed form == ratio form internally.
                const auto deg = deg_generalized_steinberg(q, m, d).value;
                const bool ok = deg > 0 && (d != 1 || deg == Rational(m) * deg_steinberg(m, q).value) &&
                                (m != 1 || deg == deg_steinberg(d, q).value);
                if (!ok) return {false, "q=" + std::to_string(q) + " m=" + std::to_string(m) + " d=" + std::to_string(d)};
                ++checked;
            }
    return {true, std::to_string(checked) + " triples"};
}

Verdict spot_degree() {
    // Written out from the definitions at (q, m, d) = (5, 2, 2).
    auto gl = [](std::uint64_t n, std::uint64_t q) {
        Integer qn = 1, out = 1, qk = 1;
        for (std::uint64_t i = 0; i < n; ++i) qn *= q;
        for (std::uint64_t k = 0; k < n; ++k, qk *= q) out *= qn - qk;
        return out;
    };
    const Rational deg_sc(2 * (5 - 1), 2);
    const Rational ratio = Rational(2, 4) * Rational(1, 625) * Rational(24 * 24, 624) *
                           Rational(gl(4, 5), gl(2, 5) * gl(2, 5));
    const Rational independent = deg_sc * deg_sc * ratio;
    const Rational library = deg_generalized_steinberg(5, 2, 2).value;
    const bool ok = independent == Rational(5952) && library == independent;
    return {ok, "deg = " + to_fraction_string(library)};
}

Verdict mackey_oracles() {
    const std::vector<std::array<std::uint64_t, 3>> cases{{2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2},
                                                          {2, 5, 1}, {3, 2, 1}, {3, 3, 1}};
    for (auto [n, p, r] : cases) {
        const auto brute = bruteforce_double_cosets(n, p, r);
        if (Integer(brute) != induced_fixed_dim(n, p, r).value)
            return {false, "n=" + std::to_string(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r)};
    }
    if (bruteforce_double_cosets(2, 3, 2) != 12) return {false, "(2,3,2) != 12"};
    return {true, std::to_string(cases.size()) + " cases"};
}

Verdict steinberg_decreasing() {
    const CentralConstraint trivial{5, 1, 0, UniformizerValue{1, 0}};
    Rational previous = 0;
    for (std::uint64_t r = 1; r <= 6; ++r) {
        auto row = steinberg_budget(5, 2, r, trivial, Rational(1, 10));
        if (r > 1 && !(row.ratio < previous)) return {false, "not decreasing at r=" + std::to_string(r)};
        if (r == 2 && (*row.lhs_bound != Rational(240) || *row.vol_inv != Integer(15000)))
            return {false, "r=2 gives " + to_fraction_string(*row.lhs_bound) + " / " + row.vol_inv->str()};
        previous = row.ratio;
    }
    return {true, "r=6 ratio " + to_fraction_string(previous)};
}

Verdict proportion_below_tenth() {
    Rational worst = 0;
    std::uint64_t worst_q = 0, primes = 0;
    for (std::uint64_t q = 101; q < 300; ++q) {
        if (!nt::is_prime(q)) continue;
        ++primes;
        for (Index b = 0; b < q - 1; ++b) {
            auto census = supercuspidal_census(q, 2, b);
            const Rational ratio(small_field_orbit_count(census, 1, FilterMode::CharDegree), census.beta);
            if (ratio > worst) worst = ratio, worst_q = q;
        }
    }
    return {worst < Rational(1, 10),
            std::to_string(primes) + " primes, max " + to_fraction_string(worst) + " at q=" + std::to_string(worst_q)};
}

Verdict steinberg_count_bounded() {
    std::uint64_t checked = 0;
    for (auto q : prime_powers_upto(49))
        for (unsigned n = 1; n <= 6; ++n) {
            if (residue_char(q) <= n) continue;
            for (Index b = 0; b < q - 1; ++b)
                for (std::uint64_t k = 1; k <= 12; ++k)
                    for (std::uint64_t j = 0; j < k; ++j) {
                        const auto count = steinberg_count(q, n, CentralConstraint{q, 1, b, UniformizerValue{k, j}});
                        if (count > std::uint64_t{n} * n)
                            return {false, "q=" + std::to_string(q) + " n=" + std::to_string(n)};
                        ++checked;
                    }
        }
    return {true, std::to_string(checked) + " constraints"};
}

Verdict sampler_concentrates() {
    const CentralConstraint c{5, 2, 0, {}};
    int close = 0;
    double worst = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SamplerConfig config{seed, 100000, Weighting::UniformWithinD, 2};
        auto r = sample_family(5, 4, c, config, 1, FilterMode::CharDegree);
        const double gap = std::fabs(r.empirical_small_fraction - 0.5);
        worst = std::max(worst, gap);
        if (gap <= 0.01) ++close;
    }
    return {close >= 19, std::to_string(close) + "/20 within 0.01, max gap " + std::to_string(worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"beta lower bound, q <= 49, m <= 4", beta_lower_bound_holds},
        {"small-field count <= ceil(f(mA)/m), A <= 3", small_count_bounded},
        {"general position: norm test == orbit test, N <= 1e5", general_position_equivalence},
        {"formal degree collapses and closed form, q <= 27", degree_collapses},
        {"formal degree at (5,2,2) equals 5952", spot_degree},
        {"double-coset count matches closed form", mackey_oracles},
        {"Steinberg budget strictly decreasing in r", steinberg_decreasing},
        {"small/beta < 1/10 for primes 100 < q < 300", proportion_below_tenth},
        {"Steinberg count <= n^2", steinberg_count_bounded},
        {"sampler within 0.01 of 1/2 in >= 19 of 20 seeds", sampler_concentrates},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2zu %s (%s; %.2fs)\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    v.detail.c_str(), secs);
        if (!v.ok) ++failures;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
