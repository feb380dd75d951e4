#pragma once

// Gamma(p^r)-fixed vectors in Ind_B^G 1 for GL_n: the Mackey count
// |B \ G / Gamma(p^r)| = |B(Z/p^r) \ GL_n(Z/p^r)|, in closed form and by
// exhaustive enumeration.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "depthzero/arith.hpp"
#include "depthzero/errors.hpp"
#include "depthzero/limits.hpp"
#include "depthzero/numtheory.hpp"

namespace depthzero {

struct CongruenceLevel {
    std::uint64_t p;
    std::uint64_t r;
    std::uint64_t n;

    void validate() const {
        require_param(nt::is_prime(p), "p = " + std::to_string(p) + " is not prime");
        require_param(r >= 1, "congruence level r must be >= 1");
        require_param(n >= 1, "matrix size n must be >= 1");
    }
};

struct CosetCount {
    enum class Method { ClosedForm, BruteForce };

    Integer value;
    Method method;
};

inline std::string to_string(CosetCount::Method method) {
    return method == CosetCount::Method::ClosedForm ? "closed_form" : "brute_force";
}

// Number of complete flags in F_q^n: prod_{k=1}^n (q^k - 1)/(q - 1).
inline Integer flag_count(std::uint64_t n, std::uint64_t q) {
    require_param(n >= 1, "n must be >= 1");
    require_param(q >= 2, "q must be >= 2");
    Integer result = 1;
    for (std::uint64_t k = 1; k <= n; ++k) result *= (ipow(Integer(q), k) - 1) / (q - 1);
    return result;
}

// dim (Ind_B^G 1)^{Gamma(p^r)} = [n]_q! * q^{(r-1) n(n-1)/2}
inline CosetCount induced_fixed_dim(std::uint64_t n, std::uint64_t q, std::uint64_t r) {
    require_param(r >= 1, "congruence level r must be >= 1");
    return {flag_count(n, q) * ipow(Integer(q), (r - 1) * n * (n - 1) / 2), CosetCount::Method::ClosedForm};
}

namespace detail {

// Square matrices over Z/modulus, entries stored row-major and packed into a
// single base-`modulus` code.
class MatrixCodec {
public:
    MatrixCodec(std::uint64_t n, std::uint64_t modulus) : n_(n), modulus_(modulus) {
        size_ = 1;
        for (std::uint64_t i = 0; i < n * n; ++i) size_ *= modulus;
    }

    std::uint64_t ambient_size() const { return size_; }

    void decode(std::uint64_t code, std::vector<std::uint64_t>& entries) const {
        entries.resize(n_ * n_);
        for (std::uint64_t i = 0; i < n_ * n_; ++i) {
            entries[i] = code % modulus_;
            code /= modulus_;
        }
    }

    std::uint64_t encode(const std::vector<std::uint64_t>& entries) const {
        std::uint64_t code = 0;
        for (std::uint64_t i = n_ * n_; i-- > 0;) code = code * modulus_ + entries[i];
        return code;
    }

private:
    std::uint64_t n_;
    std::uint64_t modulus_;
    std::uint64_t size_;
};

// A matrix over Z/p^r is invertible iff its reduction mod p is.
inline bool invertible_mod_prime(std::vector<std::uint64_t> a, std::uint64_t n, std::uint64_t p) {
    for (auto& x : a) x %= p;
    for (std::uint64_t col = 0; col < n; ++col) {
        std::uint64_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0) ++pivot;
        if (pivot == n) return false;
        if (pivot != col)
            for (std::uint64_t k = 0; k < n; ++k) std::swap(a[pivot * n + k], a[col * n + k]);
        const std::uint64_t inv = nt::powmod(a[col * n + col], p - 2, p);
        for (std::uint64_t row = col + 1; row < n; ++row) {
            const std::uint64_t factor = a[row * n + col] * inv % p;
            if (factor == 0) continue;
            for (std::uint64_t k = col; k < n; ++k)
                a[row * n + k] = (a[row * n + k] + (p - factor) * a[col * n + k]) % p;
        }
    }
    return true;
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::uint32_t{0}); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a < b) std::swap(a, b);
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
};

}  // namespace detail

// |GL_n(Z/p^r)| = p^{(r-1) n^2} |GL_n(F_p)|
inline Integer gl_order_mod_prime_power(std::uint64_t n, std::uint64_t p, std::uint64_t r) {
    Integer fp = 1;
    const Integer pn = ipow(Integer(p), n);
    for (std::uint64_t k = 0; k < n; ++k) fp *= pn - ipow(Integer(p), k);
    return ipow(Integer(p), (r - 1) * n * n) * fp;
}

// Counts right cosets B g in GL_n(Z/p^r), B the invertible upper-triangular
// matrices, as orbits of left multiplication by generators of B.
inline std::uint64_t bruteforce_double_cosets(std::uint64_t n, std::uint64_t p, std::uint64_t r,
                                              const Limits& limits = {}) {
    CongruenceLevel{p, r, n}.validate();
    if (gl_order_mod_prime_power(n, p, r) > limits.enumeration_cap)
        throw resource_limit("|GL_" + std::to_string(n) + "(Z/" + std::to_string(p) + "^" + std::to_string(r) +
                             ")| exceeds the enumeration cap " + std::to_string(limits.enumeration_cap));
    const auto modulus = *nt::checked_pow(p, r);
    auto ambient = nt::checked_pow(modulus, n * n);
    if (!ambient || *ambient > 8 * limits.enumeration_cap + 1024)
        throw resource_limit("matrix space too large to index");
    const detail::MatrixCodec codec(n, modulus);

    constexpr std::uint32_t absent = UINT32_MAX;
    std::vector<std::uint32_t> slot(codec.ambient_size(), absent);
    std::vector<std::uint64_t> group;
    std::vector<std::uint64_t> entries;
    for (std::uint64_t code = 0; code < codec.ambient_size(); ++code) {
        codec.decode(code, entries);
        if (!detail::invertible_mod_prime(entries, n, p)) continue;
        slot[code] = static_cast<std::uint32_t>(group.size());
        group.push_back(code);
    }
    ensure(Integer(group.size()) == gl_order_mod_prime_power(n, p, r), "enumerated group has the wrong order");

    // Row operations generating B on the left: add row j to row i (i < j), and
    // scale row i by a unit.
    struct Generator {
        std::uint64_t target;
        std::uint64_t source;  // == target for a scaling
        std::uint64_t unit;
    };
    std::vector<Generator> generators;
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = i + 1; j < n; ++j) generators.push_back({i, j, 1});
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t u = 2; u < modulus; ++u)
            if (u % p != 0) generators.push_back({i, i, u});

    detail::DisjointSets sets(group.size());
    std::uint64_t components = group.size();
    std::vector<std::uint64_t> image;
    for (std::uint64_t idx = 0; idx < group.size(); ++idx) {
        codec.decode(group[idx], entries);
        for (const auto& g : generators) {
            image = entries;
            for (std::uint64_t k = 0; k < n; ++k) {
                auto& x = image[g.target * n + k];
                x = g.source == g.target ? nt::mulmod(x, g.unit, modulus)
                                         : (x + entries[g.source * n + k]) % modulus;
            }
            const auto other = slot[codec.encode(image)];
            ensure(other != absent, "Borel translate left the group");
            if (sets.unite(static_cast<std::uint32_t>(idx), other)) --components;
        }
    }
    return components;
}

struct SteinbergFixedBound {
    Integer value;      // dim (Ind_B^G 1)^{Gamma(p^r)} >= dim St^{Gamma(p^r)}
    Rational constant;  // C = [n]_q! / q^{n(n-1)/2}, so value = C q^{r n(n-1)/2}
};

// Upper bound for dim St(chi_0)^{Gamma(p^r)}, the same for every chi_0 of
// conductor <= 1.
inline SteinbergFixedBound steinberg_fixed_upper(std::uint64_t n, std::uint64_t q, std::uint64_t r) {
    const std::uint64_t e = n * (n - 1) / 2;
    SteinbergFixedBound bound{induced_fixed_dim(n, q, r).value, Rational(flag_count(n, q), ipow(Integer(q), e))};
    ensure(bound.constant <= Rational(ipow(Integer(2), n)), "flag constant exceeds 2^n");
    ensure(Rational(bound.value) == bound.constant * Rational(ipow(Integer(q), r * e)),
           "fixed-vector bound is not C q^{r n(n-1)/2}");
    return bound;
}

}  // namespace depthzero
