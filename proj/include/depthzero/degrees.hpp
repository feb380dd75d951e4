#pragma once

// Formal degrees of depth-zero discrete series of GL_n, exact.
// Haar measure is normalized so that K Z / Z has measure one.

#include <cstdint>
#include <string>

#include "depthzero/arith.hpp"
#include "depthzero/errors.hpp"

namespace depthzero {

struct FormalDegree {
    Rational value;

    static constexpr const char* normalization = "K_p Z/Z has measure 1";

    friend bool operator==(const FormalDegree&, const FormalDegree&) = default;
};

struct APRatioInputs {
    std::uint64_t q;
    std::uint64_t m;
    std::uint64_t d;
    std::uint64_t torsion;    // r: unramified characters chi with pi' (x) chi o det = pi'
    std::uint64_t conductor;  // f(pi' x pi'^vee)
};

// Torsion number of a depth-zero supercuspidal of GL_m: the m unramified
// characters with chi(varpi)^m = 1.
inline std::uint64_t depth_zero_torsion_number(std::uint64_t m) { return m; }

// Conductor of pi' x pi'^vee for depth-zero supercuspidal pi' of GL_m: the
// inertia-fixed part of rho (x) rho^vee has dimension m and is tame.
inline std::uint64_t depth_zero_pair_conductor(std::uint64_t m) { return m * m - m; }

namespace detail {

inline void check_q(std::uint64_t q) { require_param(q >= 2, "q must be >= 2"); }

}  // namespace detail

// |GL_n(F_q)| = prod_{k=0}^{n-1} (q^n - q^k)
inline Integer gl_order(std::uint64_t n, std::uint64_t q) {
    require_param(n >= 1, "n must be >= 1");
    detail::check_q(q);
    const Integer qn = ipow(Integer(q), n);
    Integer result = 1;
    for (std::uint64_t k = 0; k < n; ++k) result *= qn - ipow(Integer(q), k);
    return result;
}

inline Integer pgl_order(std::uint64_t n, std::uint64_t q) { return gl_order(n, q) / (q - 1); }

// vol(Gamma(p^r) Z / Z)^{-1} = q^{(n^2-1)(r-1)} |PGL_n(F_q)|
inline Integer vol_inverse(std::uint64_t q, std::uint64_t n, std::uint64_t r) {
    require_param(r >= 1, "congruence level r must be >= 1");
    return ipow(Integer(q), (n * n - 1) * (r - 1)) * pgl_order(n, q);
}

// (1/n) prod_{k=1}^{n-1} (q^k - 1)
inline FormalDegree deg_steinberg(std::uint64_t n, std::uint64_t q) {
    require_param(n >= 1, "n must be >= 1");
    detail::check_q(q);
    Integer product = 1;
    for (std::uint64_t k = 1; k < n; ++k) product *= ipow(Integer(q), k) - 1;
    return {Rational(product, Integer(n))};
}

inline FormalDegree deg_supercuspidal_depth0(std::uint64_t q, std::uint64_t m) {
    return {Rational(Integer(m)) * deg_steinberg(m, q).value};
}

// deg(Sp(pi', d)) / deg(pi')^d for the Aubert-Plymen formula:
//   m^{d-1} / (r^{d-1} d) * q^{(d^2-d)/2 (f + r - 2m^2)} * (q^r-1)^d / (q^{dr}-1)
//   * |GL_{dm}(F_q)| / |GL_m(F_q)|^d
inline Rational ap_degree_ratio(const APRatioInputs& in) {
    require_param(in.m >= 1 && in.d >= 1, "m and d must be >= 1");
    require_param(in.torsion >= 1, "torsion number must be >= 1");
    detail::check_q(in.q);
    const Integer q(in.q);
    const auto half_dd = static_cast<std::int64_t>((in.d * in.d - in.d) / 2);
    const std::int64_t exponent =
        half_dd * (static_cast<std::int64_t>(in.conductor) + static_cast<std::int64_t>(in.torsion) -
                   2 * static_cast<std::int64_t>(in.m * in.m));

    Rational ratio(ipow(Integer(in.m), in.d - 1), ipow(Integer(in.torsion), in.d - 1) * in.d);
    ratio *= rpow(q, exponent);
    ratio *= Rational(ipow(ipow(q, in.torsion) - 1, in.d), ipow(q, in.d * in.torsion) - 1);
    ratio *= Rational(gl_order(in.d * in.m, in.q), ipow(gl_order(in.m, in.q), in.d));
    return ratio;
}

// Closed form
//   deg(St_m)^d * m^d / d * (q^m-1)^d / (q^{md}-1) * |GL_{dm}| / |GL_m|^d * q^{-m^2 (d^2-d)/2},
// cross-checked against deg(pi')^d * ap_degree_ratio with r = m, f = m^2 - m.
inline FormalDegree deg_generalized_steinberg(std::uint64_t q, std::uint64_t m, std::uint64_t d) {
    require_param(m >= 1 && d >= 1, "m and d must be >= 1");
    detail::check_q(q);
    const Integer Q(q);
    Rational closed = 1;
    const Rational st = deg_steinberg(m, q).value;
    for (std::uint64_t i = 0; i < d; ++i) closed *= st;
    closed *= Rational(ipow(Integer(m), d), Integer(d));
    closed *= Rational(ipow(ipow(Q, m) - 1, d), ipow(Q, m * d) - 1);
    closed *= Rational(gl_order(d * m, q), ipow(gl_order(m, q), d));
    closed *= rpow(Q, -static_cast<std::int64_t>(m * m * ((d * d - d) / 2)));

    Rational via_ratio = 1;
    const Rational sc = deg_supercuspidal_depth0(q, m).value;
    for (std::uint64_t i = 0; i < d; ++i) via_ratio *= sc;
    via_ratio *= ap_degree_ratio({q, m, d, depth_zero_torsion_number(m), depth_zero_pair_conductor(m)});

    ensure(closed == via_ratio, "closed-form formal degree disagrees with the ratio form at (q, m, d) = (" +
                                    std::to_string(q) + ", " + std::to_string(m) + ", " + std::to_string(d) + ")");
    ensure(closed > 0, "formal degree must be positive");
    return {closed};
}

}  // namespace depthzero
