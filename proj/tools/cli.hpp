#pragma once

// `depthzero` command-line frontend.
//
// Exit codes: 0 success, 1 a budget/sweep row failed its eps (or a checked
// postcondition failed), 2 invalid parameters or usage, 3 resource limit.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "depthzero/depthzero.hpp"
#include "report.hpp"
#include "selftest.hpp"

namespace depthzero::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalid = 2, kResource = 3 };

inline constexpr const char* kCapEnvironmentVariable = "DEPTHZERO_CAP";

namespace detail {

inline FilterMode parse_mode(const std::string& name) {
    if (name == "char") return FilterMode::CharDegree;
    if (name == "inertial") return FilterMode::Inertial;
    throw invalid_parameter("unknown filter mode '" + name + "' (expected char or inertial)");
}

inline Weighting parse_weighting(const std::string& name) {
    if (name == "uniform") return Weighting::UniformWithinD;
    if (name == "formal_degree") return Weighting::FormalDegreeAcrossD;
    throw invalid_parameter("unknown weighting '" + name + "' (expected uniform or formal_degree)");
}

inline std::string join(const std::vector<Index>& xs, char sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

inline std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    require_param(!text.empty() && text.find_first_not_of("0123456789") == std::string::npos,
                  "malformed " + what + " '" + text + "'");
    return std::stoull(text);
}

// "m:a" or "m:a:d"
inline TemperedComponent parse_component(std::uint64_t q, const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    require_param(parts.size() == 2 || parts.size() == 3, "component must be m:a or m:a:d, got '" + text + "'");
    const auto m = static_cast<unsigned>(parse_u64(parts[0], "component m"));
    const auto a = parse_u64(parts[1], "component index");
    const auto d = parts.size() == 3 ? static_cast<unsigned>(parse_u64(parts[2], "component d")) : 1U;
    return {frobenius_orbit(q, m, a), d};
}

inline Row budget_row_json(const BudgetRow& row) {
    Row out;
    out["q"] = row.q;
    out["n"] = row.n;
    out["d"] = row.d;
    out["r"] = row.r ? Row(*row.r) : Row(nullptr);
    out["A"] = row.A ? Row(*row.A) : Row(nullptr);
    out["b"] = row.constraint.b;
    out["total"] = row.total_count;
    out["small"] = row.small_count;
    out["ratio"] = fraction(row.ratio);
    out["eps"] = fraction(row.eps);
    out["pass"] = row.pass;
    return out;
}

inline const std::vector<std::string> kBudgetColumns{"q", "n", "d", "r", "A", "b", "total", "small", "ratio", "eps",
                                                     "pass"};
inline const std::vector<std::string> kCensusColumns{"q", "m", "b", "beta", "lower_bound", "small_A", "mode"};

}  // namespace detail

// Runs one subcommand. `out` receives the report unless --out names a file;
// diagnostics go to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact census of depth-zero discrete series of GL_n over p-adic fields", "depthzero"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "csv";
    std::string out_path;
    std::optional<std::uint64_t> cap;
    app.add_option("--format", format_name, "csv, json or table")->check(CLI::IsMember({"csv", "json", "table"}));
    app.add_option("--out", out_path, "write the report to this file instead of standard output");
    app.add_option("--cap", cap, "override every enumeration cap (acknowledged on the error stream)");

    // census
    auto* census_cmd = app.add_subcommand("census", "supercuspidal census per central index, or per fiber");
    std::uint64_t c_q = 0;
    std::optional<unsigned> c_m, c_n, c_d;
    std::optional<std::uint64_t> c_b;
    std::uint64_t c_A = 1;
    std::string c_mode = "char";
    census_cmd->add_option("--q", c_q, "residue field size")->required();
    census_cmd->add_option("--m", c_m, "extension degree");
    census_cmd->add_option("--n", c_n, "GL_n (fiber mode, with --d)");
    census_cmd->add_option("--d", c_d, "segment length (fiber mode, with --n)");
    census_cmd->add_option("--b", c_b, "central index mod q-1 (default: every index)");
    census_cmd->add_option("--A", c_A, "field-degree bound for the small-field column");
    census_cmd->add_option("--mode", c_mode, "char or inertial");

    // rationality
    auto* rat_cmd = app.add_subcommand("rationality", "fields of rationality and counting bounds");
    std::optional<std::uint64_t> r_q, r_a, r_roots, r_p, r_n;
    std::optional<unsigned> r_m;
    std::vector<std::string> r_components;
    rat_cmd->add_option("--q", r_q, "residue field size");
    rat_cmd->add_option("--m", r_m, "extension degree");
    rat_cmd->add_option("--a", r_a, "character index mod q^m - 1");
    rat_cmd->add_option("--component", r_components, "tempered factor m:a[:d]; repeatable");
    rat_cmd->add_option("--roots-A", r_roots, "report f(A), the number of roots of unity of degree <= A");
    rat_cmd->add_option("--p", r_p, "residue characteristic (positive-depth bound, with --n)");
    rat_cmd->add_option("--n", r_n, "GL_n (positive-depth bound, with --p)");

    // degrees
    auto* deg_cmd = app.add_subcommand("degrees", "formal degrees and group orders");
    std::uint64_t g_q = 0, g_m = 0, g_d = 1, g_r = 1;
    deg_cmd->add_option("--q", g_q)->required();
    deg_cmd->add_option("--m", g_m)->required();
    deg_cmd->add_option("--d", g_d);
    deg_cmd->add_option("--r", g_r, "congruence level for vol_inv");

    // fixedvec
    auto* fix_cmd = app.add_subcommand("fixedvec", "Gamma(p^r)-fixed vectors in Ind_B^G 1");
    std::uint64_t f_n = 0, f_q = 0, f_r = 1;
    bool f_brute = false;
    fix_cmd->add_option("--n", f_n)->required();
    fix_cmd->add_option("--q", f_q)->required();
    fix_cmd->add_option("--r", f_r);
    fix_cmd->add_flag("--bruteforce", f_brute, "also enumerate the double cosets (q must be prime)");

    // budget
    auto* bud_cmd = app.add_subcommand("budget", "Plancherel budget rows");
    std::uint64_t b_q = 0, b_A = 1, b_r = 1, b_k = 1, b_j = 0;
    unsigned b_n = 0, b_d = 0;
    std::optional<std::uint64_t> b_b;
    std::string b_eps, b_mode = "char";
    bud_cmd->add_option("--q", b_q)->required();
    bud_cmd->add_option("--n", b_n)->required();
    bud_cmd->add_option("--d", b_d)->required();
    bud_cmd->add_option("--b", b_b, "central index (default: every index with a nonempty census)");
    bud_cmd->add_option("--A", b_A);
    bud_cmd->add_option("--eps", b_eps, "threshold as a rational, e.g. 1/10")->required();
    bud_cmd->add_option("--mode", b_mode, "char or inertial");
    bud_cmd->add_option("--r", b_r, "congruence level (Steinberg case d = n)");
    bud_cmd->add_option("--k", b_k, "order of the central value at the uniformizer (d = n)");
    bud_cmd->add_option("--j", b_j, "exponent of the central value at the uniformizer (d = n)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "worst-case budget row per q, streamed");
    unsigned s_n = 0, s_d = 0;
    std::uint64_t s_A = 1, s_from = 2, s_to = 0, s_r = 1;
    std::string s_eps, s_mode = "char";
    bool s_primes = false;
    sweep_cmd->add_option("--n", s_n)->required();
    sweep_cmd->add_option("--d", s_d)->required();
    sweep_cmd->add_option("--A", s_A);
    sweep_cmd->add_option("--eps", s_eps)->required();
    sweep_cmd->add_option("--mode", s_mode);
    sweep_cmd->add_option("--r", s_r, "congruence level (Steinberg case d = n)");
    sweep_cmd->add_option("--q-from", s_from);
    sweep_cmd->add_option("--q-to", s_to)->required();
    sweep_cmd->add_flag("--primes-only", s_primes);

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "toy Plancherel-weighted sampler");
    std::uint64_t m_q = 0, m_b = 0, m_A = 1, m_samples = 10000, m_seed = 0, m_k = 1, m_j = 0;
    unsigned m_n = 0, m_d = 0;
    std::string m_weighting = "uniform", m_mode = "char";
    sample_cmd->add_option("--q", m_q)->required();
    sample_cmd->add_option("--n", m_n)->required();
    sample_cmd->add_option("--d", m_d, "stratum for uniform weighting");
    sample_cmd->add_option("--b", m_b);
    sample_cmd->add_option("--A", m_A);
    sample_cmd->add_option("--mode", m_mode);
    sample_cmd->add_option("--weighting", m_weighting, "uniform or formal_degree");
    sample_cmd->add_option("--samples", m_samples);
    sample_cmd->add_option("--seed", m_seed);
    sample_cmd->add_option("--k", m_k);
    sample_cmd->add_option("--j", m_j);

    auto* self_cmd = app.add_subcommand("selftest", "run the invariant suite and report pass counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInvalid;
    }

    try {
        Limits limits;
        if (const char* env = std::getenv(kCapEnvironmentVariable); env && *env) {
            const auto value = detail::parse_u64(env, kCapEnvironmentVariable);
            limits.enumeration_cap = limits.unit_group_cap = value;
        }
        if (cap) {
            limits.enumeration_cap = limits.unit_group_cap = *cap;
            err << "note: enumeration caps overridden to " << *cap << " at the caller's request\n";
        }

        std::unique_ptr<std::ofstream> file;
        if (!out_path.empty()) {
            file = std::make_unique<std::ofstream>(out_path);
            require_param(file->good(), "cannot open '" + out_path + "' for writing");
        }
        std::ostream& sink = file ? *file : out;
        const Format format = parse_format(format_name);

        if (*census_cmd) {
            const auto mode = detail::parse_mode(c_mode);
            ReportWriter writer(sink, format, detail::kCensusColumns);
            auto emit = [&](unsigned m, Index b) {
                auto census = supercuspidal_census(c_q, m, b, limits);
                auto beta = beta_count(census);
                Row row;
                row["q"] = c_q;
                row["m"] = m;
                row["b"] = b;
                row["beta"] = beta.count;
                row["lower_bound"] = fraction(beta.lower_bound);
                row["small_A"] = small_field_orbit_count(census, c_A, mode, limits);
                row["mode"] = to_string(mode);
                writer.add(row);
            };
            if (c_n || c_d) {
                require_param(c_n && c_d && !c_m, "fiber mode takes --n and --d (and no --m)");
                require_param(c_b.has_value(), "fiber mode needs --b");
                require_param(*c_d >= 1 && *c_n % *c_d == 0 && *c_n / *c_d >= 2, "need d | n and n/d >= 2");
                require_param(nt::prime_power(c_q).has_value() && nt::prime_power(c_q)->first > *c_n,
                              "need residue characteristic p > n");
                require_param(*c_b < c_q - 1, "central index b must be < q - 1");
                for (Index root : central_roots(c_q, *c_d, *c_b)) emit(*c_n / *c_d, root);
            } else {
                require_param(c_m.has_value(), "census needs --m, or --n and --d");
                if (c_b) {
                    emit(*c_m, *c_b);
                } else {
                    require_param(c_q >= 2, "q must be >= 2");
                    for (Index b = 0; b < c_q - 1; ++b) emit(*c_m, b);
                }
            }
            writer.finish();
            return kOk;
        }

        if (*rat_cmd) {
            const int modes = int(r_a.has_value()) + int(!r_components.empty()) + int(r_roots.has_value()) +
                              int(r_p.has_value() || r_n.has_value());
            require_param(modes == 1, "choose exactly one of --a, --component, --roots-A, or --p/--n");
            if (r_a) {
                require_param(r_q && r_m, "--a needs --q and --m");
                CharacterGroup group(*r_q, *r_m);
                auto orbit = group.orbit(*r_a);
                auto report = rationality_report(*r_q, *r_m, *r_a, limits);
                ReportWriter writer(sink, format,
                                    {"q", "m", "a", "orbit", "general_position", "restriction", "char_degree",
                                     "orbit_degree", "ratio_bound_ok"});
                Row row;
                row["q"] = *r_q;
                row["m"] = *r_m;
                row["a"] = *r_a;
                row["orbit"] = detail::join(orbit.indices(), ' ');
                row["general_position"] = group.is_general_position(*r_a);
                row["restriction"] = group.restrict_to_base(*r_a);
                row["char_degree"] = report.char_degree;
                row["orbit_degree"] = report.orbit_degree;
                row["ratio_bound_ok"] = report.ratio_bound_ok;
                writer.add(row);
                writer.finish();
            } else if (!r_components.empty()) {
                require_param(r_q.has_value(), "--component needs --q");
                std::vector<TemperedComponent> components;
                for (const auto& text : r_components) components.push_back(detail::parse_component(*r_q, text));
                ReportWriter writer(sink, format, {"q", "components", "tempered_degree"});
                Row row;
                row["q"] = *r_q;
                std::string joined;
                for (std::size_t i = 0; i < r_components.size(); ++i) joined += (i ? " " : "") + r_components[i];
                row["components"] = joined;
                row["tempered_degree"] = tempered_rationality_degree(components, limits);
                writer.add(row);
                writer.finish();
            } else if (r_roots) {
                ReportWriter writer(sink, format, {"A", "f_A"});
                Row row;
                row["A"] = *r_roots;
                row["f_A"] = roots_of_unity_count(*r_roots, limits);
                writer.add(row);
                writer.finish();
            } else {
                require_param(r_p && r_n, "the positive-depth bound needs --p and --n");
                ReportWriter writer(sink, format, {"p", "n", "positive_depth_bound"});
                Row row;
                row["p"] = *r_p;
                row["n"] = *r_n;
                row["positive_depth_bound"] = fraction(positive_depth_degree_bound(*r_p, *r_n));
                writer.add(row);
                writer.finish();
            }
            return kOk;
        }

        if (*deg_cmd) {
            const std::uint64_t n = g_m * g_d;
            ReportWriter writer(sink, format,
                                {"q", "m", "d", "n", "r", "gl_order", "pgl_order", "vol_inv", "deg_steinberg_m",
                                 "deg_supercuspidal", "ap_ratio", "deg"});
            Row row;
            row["q"] = g_q;
            row["m"] = g_m;
            row["d"] = g_d;
            row["n"] = n;
            row["r"] = g_r;
            row["gl_order"] = big(gl_order(n, g_q));
            row["pgl_order"] = big(pgl_order(n, g_q));
            row["vol_inv"] = big(vol_inverse(g_q, n, g_r));
            row["deg_steinberg_m"] = fraction(deg_steinberg(g_m, g_q).value);
            row["deg_supercuspidal"] = fraction(deg_supercuspidal_depth0(g_q, g_m).value);
            row["ap_ratio"] = fraction(ap_degree_ratio(
                {g_q, g_m, g_d, depth_zero_torsion_number(g_m), depth_zero_pair_conductor(g_m)}));
            row["deg"] = fraction(deg_generalized_steinberg(g_q, g_m, g_d).value);
            writer.add(row);
            writer.finish();
            return kOk;
        }

        if (*fix_cmd) {
            ReportWriter writer(sink, format, {"n", "q", "r", "flag_count", "fixed_dim", "C", "method", "bruteforce"});
            auto bound = steinberg_fixed_upper(f_n, f_q, f_r);
            Row row;
            row["n"] = f_n;
            row["q"] = f_q;
            row["r"] = f_r;
            row["flag_count"] = big(flag_count(f_n, f_q));
            row["fixed_dim"] = big(bound.value);
            row["C"] = fraction(bound.constant);
            row["method"] = to_string(CosetCount::Method::ClosedForm);
            row["bruteforce"] = f_brute ? Row(bruteforce_double_cosets(f_n, f_q, f_r, limits)) : Row(nullptr);
            writer.add(row);
            writer.finish();
            return kOk;
        }

        if (*bud_cmd) {
            const Rational eps = parse_rational(b_eps);
            const auto mode = detail::parse_mode(b_mode);
            ReportWriter writer(sink, format, detail::kBudgetColumns);
            bool all_pass = true;
            auto one = [&](Index b) {
                BudgetRow row =
                    b_d == b_n
                        ? steinberg_budget(b_q, b_n, b_r, CentralConstraint{b_q, 1, b, UniformizerValue{b_k, b_j}},
                                           eps)
                        : generalized_budget(b_q, b_n, b_d, CentralConstraint{b_q, b_n / std::max(b_d, 1U), b, {}},
                                             b_A, eps, mode, limits);
                all_pass = all_pass && row.pass;
                writer.add(detail::budget_row_json(row));
            };
            if (b_b) {
                one(*b_b);
            } else {
                require_param(b_q >= 2, "q must be >= 2");
                for (Index b = 0; b < b_q - 1; ++b) {
                    try {
                        one(b);
                    } catch (const empty_census&) {
                    }
                }
            }
            writer.finish();
            return all_pass ? kOk : kCheckFailed;
        }

        if (*sweep_cmd) {
            const Rational eps = parse_rational(s_eps);
            const auto mode = detail::parse_mode(s_mode);
            require_param(s_d >= 1 && s_n % s_d == 0, "d must divide n");
            const bool steinberg = s_d == s_n;
            ReportWriter writer(sink, format, detail::kBudgetColumns, /*json_lines=*/true);
            bool all_pass = true;
            for (std::uint64_t q = std::max<std::uint64_t>(s_from, 2); q <= s_to; ++q) {
                auto pp = nt::prime_power(q);
                if (!pp || (s_primes && pp->second != 1)) continue;
                const std::uint64_t floor = steinberg ? s_n : std::uint64_t{s_n} * s_A;
                if (pp->first <= floor) continue;
                std::optional<BudgetRow> worst;
                if (steinberg) {
                    for (Index b = 0; b < q - 1; ++b) {
                        auto row = steinberg_budget(q, s_n, s_r, CentralConstraint{q, 1, b, UniformizerValue{1, 0}},
                                                    eps);
                        if (!worst || row.ratio > worst->ratio) worst = std::move(row);
                    }
                } else {
                    worst = worst_case_budget(q, s_n, s_d, s_A, eps, mode, limits);
                }
                if (!worst) continue;
                all_pass = all_pass && worst->pass;
                writer.add(detail::budget_row_json(*worst));
            }
            writer.finish();
            return all_pass ? kOk : kCheckFailed;
        }

        if (*sample_cmd) {
            SamplerConfig config{m_seed, m_samples, detail::parse_weighting(m_weighting), m_d};
            const auto mode = detail::parse_mode(m_mode);
            CentralConstraint constraint{m_q, 1, m_b, UniformizerValue{m_k, m_j}};
            auto result = sample_family(m_q, m_n, constraint, config, m_A, mode, limits);
            ReportWriter writer(sink, format,
                                {"q", "n", "b", "A", "mode", "weighting", "d", "samples", "seed", "small_draws",
                                 "empirical", "census"});
            std::ostringstream empirical;
            empirical << std::fixed << std::setprecision(6) << result.empirical_small_fraction;
            Row row;
            row["q"] = m_q;
            row["n"] = m_n;
            row["b"] = m_b;
            row["A"] = m_A;
            row["mode"] = to_string(mode);
            row["weighting"] = to_string(config.weighting);
            row["d"] = config.weighting == Weighting::UniformWithinD ? Row(m_d) : Row(nullptr);
            row["samples"] = m_samples;
            row["seed"] = m_seed;
            row["small_draws"] = result.small_draws;
            row["empirical"] = empirical.str();
            row["census"] = fraction(result.census_fraction);
            writer.add(row);
            writer.finish();
            return kOk;
        }

        if (*self_cmd) {
            ReportWriter writer(sink, format, {"check", "passed", "total"});
            bool ok = true;
            for (const auto& r : run_selftest()) {
                Row row;
                row["check"] = r.check;
                row["passed"] = r.passed;
                row["total"] = r.total;
                ok = ok && r.passed == r.total;
                writer.add(row);
            }
            writer.finish();
            return ok ? kOk : kCheckFailed;
        }
    } catch (const invalid_parameter& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const empty_census& e) {
        err << "error: empty census: " << e.what() << "\n";
        return kInvalid;
    } catch (const resource_limit& e) {
        err << "error: resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const postcondition_violation& e) {
        err << "error: postcondition failed: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kInvalid;
}

}  // namespace depthzero::cli
