#pragma once

// Local Plancherel-mass inequality at concrete parameters:
//
//   sum over small-field depth-zero Sp(pi', d) with central character chi of
//     deg(pi) * dim pi^{Gamma(p^r)}  <=  eps * vol(Gamma(p^r) Z / Z)^{-1}.
//
// For d = n (Steinberg) both sides are bounded explicitly. For d < n every
// Sp(pi', d) in the sum has the same formal degree and the same fixed-vector
// dimension, so the mass ratio is the census ratio small/total; that path never
// touches fixed-vector dimensions.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "depthzero/arith.hpp"
#include "depthzero/census.hpp"
#include "depthzero/degrees.hpp"
#include "depthzero/errors.hpp"
#include "depthzero/fixedvec.hpp"
#include "depthzero/limits.hpp"
#include "depthzero/numtheory.hpp"

namespace depthzero {

struct BudgetRow {
    std::uint64_t q = 0;
    unsigned n = 0;
    unsigned d = 0;
    std::optional<std::uint64_t> r;  // empty when the ratio does not depend on the level
    std::optional<std::uint64_t> A;  // empty for the Steinberg stratum, which is not filtered
    CentralConstraint constraint;
    std::uint64_t total_count = 0;
    std::uint64_t small_count = 0;
    Rational deg;
    std::optional<Integer> fixdim_bound;
    std::optional<Integer> vol_inv;
    std::optional<Rational> lhs_bound;
    Rational ratio;
    Rational eps;
    bool pass = false;
};

// d = n: lhs = #St(chi) * deg(St) * dim bound, against vol^{-1}.
inline BudgetRow steinberg_budget(std::uint64_t q, unsigned n, std::uint64_t r, const CentralConstraint& constraint,
                                  const Rational& eps) {
    require_param(eps > 0, "eps must be positive");
    const auto count = steinberg_count(q, n, constraint);
    BudgetRow row;
    row.q = q;
    row.n = n;
    row.d = n;
    row.r = r;
    row.constraint = constraint;
    row.total_count = count;
    row.small_count = count;
    row.deg = deg_steinberg(n, q).value;
    row.fixdim_bound = steinberg_fixed_upper(n, q, r).value;
    row.vol_inv = vol_inverse(q, n, r);
    row.lhs_bound = Rational(Integer(count)) * row.deg * Rational(*row.fixdim_bound);
    row.ratio = *row.lhs_bound / Rational(*row.vol_inv);
    row.eps = eps;
    row.pass = row.ratio <= eps;
    return row;
}

// d < n: ratio = small / total over the discrete-series census.
inline BudgetRow generalized_budget(std::uint64_t q, unsigned n, unsigned d, const CentralConstraint& constraint,
                                    std::uint64_t A, const Rational& eps, FilterMode mode,
                                    const Limits& limits = {}) {
    require_param(eps > 0, "eps must be positive");
    require_param(A >= 1, "degree bound A must be >= 1");
    require_param(d >= 1 && n % d == 0 && n / d >= 2, "generalized budget needs d | n and n/d >= 2");
    auto pp = nt::prime_power(q);
    require_param(pp.has_value(), "q must be a prime power");
    require_param(pp->first > std::uint64_t{n} * A,
                  "need p > nA so that every small-field representation has depth zero");
    const auto census = discrete_series_census(q, n, d, constraint, A, mode, limits);
    if (census.total == 0)
        throw empty_census("no depth-zero Sp(pi', " + std::to_string(d) + ") with central index b = " +
                           std::to_string(constraint.b) + " at q = " + std::to_string(q));
    BudgetRow row;
    row.q = q;
    row.n = n;
    row.d = d;
    row.A = A;
    row.constraint = constraint;
    row.total_count = census.total;
    row.small_count = census.small;
    row.deg = deg_generalized_steinberg(q, n / d, d).value;
    row.ratio = Rational(Integer(census.small), Integer(census.total));
    row.eps = eps;
    row.pass = row.ratio <= eps;
    return row;
}

// The row with the largest ratio over every central index b (ties go to the
// smallest b); nullopt when every fiber is empty. Empty fibers carry no mass.
inline std::optional<BudgetRow> worst_case_budget(std::uint64_t q, unsigned n, unsigned d, std::uint64_t A,
                                                  const Rational& eps, FilterMode mode, const Limits& limits = {}) {
    std::optional<BudgetRow> worst;
    for (Index b = 0; b < q - 1; ++b) {
        CentralConstraint constraint{q, n / d, b, std::nullopt};
        try {
            auto row = generalized_budget(q, n, d, constraint, A, eps, mode, limits);
            if (!worst || row.ratio > worst->ratio) worst = std::move(row);
        } catch (const empty_census&) {
        }
    }
    return worst;
}

// Least q in `candidates` (ascending) at which every central index passes.
inline std::optional<std::uint64_t> find_threshold(const Rational& eps, std::uint64_t A, unsigned n, unsigned d,
                                                   const std::vector<std::uint64_t>& candidates,
                                                   FilterMode mode = FilterMode::CharDegree,
                                                   const Limits& limits = {}) {
    require_param(std::is_sorted(candidates.begin(), candidates.end()), "candidate list must be ascending");
    for (auto q : candidates) {
        auto pp = nt::prime_power(q);
        require_param(pp.has_value(), "candidate " + std::to_string(q) + " is not a prime power");
        require_param(pp->first > std::uint64_t{n} * A, "candidate " + std::to_string(q) + " has p <= nA");
    }
    const std::size_t batch = std::max(1U, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < candidates.size(); start += batch) {
        const std::size_t stop = std::min(candidates.size(), start + batch);
        std::vector<std::future<bool>> jobs;
        for (std::size_t i = start; i < stop; ++i)
            jobs.push_back(std::async(std::launch::async, [&, q = candidates[i]] {
                auto worst = worst_case_budget(q, n, d, A, eps, mode, limits);
                return !worst || worst->pass;
            }));
        std::vector<bool> ok;
        for (auto& job : jobs) ok.push_back(job.get());
        for (std::size_t i = 0; i < ok.size(); ++i)
            if (ok[i]) return candidates[start + i];
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Toy Plancherel-weighted sampler. Not part of any acceptance-critical path.

enum class Weighting { UniformWithinD, FormalDegreeAcrossD };

inline std::string to_string(Weighting w) { return w == Weighting::UniformWithinD ? "uniform" : "formal_degree"; }

struct SamplerConfig {
    std::uint64_t seed = 0;
    std::uint64_t samples = 1;
    Weighting weighting = Weighting::UniformWithinD;
    unsigned d = 0;  // stratum for UniformWithinD
};

struct SampleResult {
    double empirical_small_fraction;
    Rational census_fraction;
    std::uint64_t small_draws;
    std::uint64_t samples;
};

namespace detail {

struct Stratum {
    unsigned d;
    Rational degree;
    std::vector<bool> small;  // one entry per representation
    std::uint64_t small_count = 0;
};

inline Stratum discrete_series_stratum(std::uint64_t q, unsigned n, unsigned d, const CentralConstraint& constraint,
                                       std::uint64_t A, FilterMode mode, const Limits& limits) {
    const auto census = discrete_series_census(q, n, d, constraint, A, mode, limits);
    Stratum s{d, deg_generalized_steinberg(q, n / d, d).value, {}, census.small};
    for (const auto& param : discrete_series_params(census))
        s.small.push_back(passes_filter(param.orbit, A, mode, limits));
    return s;
}

// St(chi) is small when [Q(chi):Q] <= A; the inertial datum only sees chi on units.
inline Stratum steinberg_stratum(std::uint64_t q, unsigned n, CentralConstraint constraint, std::uint64_t A,
                                 FilterMode mode) {
    if (!constraint.uniformizer_value) constraint.uniformizer_value = UniformizerValue{1, 0};
    Stratum s{n, deg_steinberg(n, q).value, {}, 0};
    for (const auto& chi : steinberg_characters(q, n, constraint)) {
        const auto degree =
            mode == FilterMode::CharDegree ? chi.rationality_degree : nt::euler_phi((q - 1) / std::gcd(q - 1, chi.base_index));
        s.small.push_back(degree <= A);
        if (s.small.back()) ++s.small_count;
    }
    return s;
}

}  // namespace detail

// Draws representations from the depth-zero discrete-series census and reports
// the fraction with small field of rationality next to the exact fraction.
// FormalDegreeAcrossD weights every representation by its formal degree, over
// all strata d | n (n/d >= 2) plus the Steinberg stratum; a missing uniformizer
// value is taken to be 1 there.
inline SampleResult sample_family(std::uint64_t q, unsigned n, const CentralConstraint& constraint,
                                  const SamplerConfig& config, std::uint64_t A, FilterMode mode,
                                  const Limits& limits = {}) {
    require_param(config.samples >= 1, "samples must be >= 1");
    std::vector<detail::Stratum> strata;
    if (config.weighting == Weighting::UniformWithinD) {
        strata.push_back(detail::discrete_series_stratum(q, n, config.d, constraint, A, mode, limits));
    } else {
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0 && n / d >= 2)
                strata.push_back(detail::discrete_series_stratum(q, n, d, constraint, A, mode, limits));
        strata.push_back(detail::steinberg_stratum(q, n, constraint, A, mode));
    }

    Rational weighted_small = 0;
    Rational weighted_total = 0;
    std::vector<Rational> weights;
    for (const auto& s : strata) {
        const bool uniform = config.weighting == Weighting::UniformWithinD;
        const Rational w = uniform ? Rational(1) : s.degree;
        weights.push_back(w * Rational(Integer(s.small.size())));
        weighted_small += w * Rational(Integer(s.small_count));
        weighted_total += weights.back();
    }
    if (weighted_total == 0) throw empty_census("sampler census is empty");

    const Rational heaviest = *std::max_element(weights.begin(), weights.end());
    std::vector<double> relative;
    for (const auto& w : weights) relative.push_back(to_double(w / heaviest));

    std::mt19937_64 rng(config.seed);
    std::discrete_distribution<std::size_t> pick_stratum(relative.begin(), relative.end());
    std::uint64_t small_draws = 0;
    for (std::uint64_t i = 0; i < config.samples; ++i) {
        const auto& s = strata[pick_stratum(rng)];
        std::uniform_int_distribution<std::size_t> pick(0, s.small.size() - 1);
        if (s.small[pick(rng)]) ++small_draws;
    }
    return {static_cast<double>(small_draws) / static_cast<double>(config.samples), weighted_small / weighted_total,
            small_draws, config.samples};
}

}  // namespace depthzero
