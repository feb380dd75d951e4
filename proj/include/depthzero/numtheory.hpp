#pragma once

// Elementary number theory on machine words: modular products, factorization,
// Euler's totient and prime-power recognition.

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "depthzero/errors.hpp"

namespace depthzero::nt {

using u64 = std::uint64_t;

__extension__ typedef unsigned __int128 u128;

inline u64 mulmod(u64 a, u64 b, u64 mod) {
    return static_cast<u64>((static_cast<u128>(a) * b) % mod);
}

inline u64 powmod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 result = 1 % mod;
    base %= mod;
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1U;
    }
    return result;
}

// base^exp, or nullopt when the result does not fit in 63 bits.
inline std::optional<u64> checked_pow(u64 base, u64 exp) {
    constexpr u64 limit = u64{1} << 62U;
    u64 result = 1;
    for (u64 i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return std::nullopt;
        result *= base;
    }
    return result;
}

struct PrimeFactor {
    u64 prime;
    unsigned exponent;
};

inline std::vector<PrimeFactor> factorize(u64 n) {
    std::vector<PrimeFactor> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// (p, e) with n = p^e, or nullopt if n is not a prime power.
inline std::optional<std::pair<u64, unsigned>> prime_power(u64 n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return std::make_pair(f.front().prime, f.front().exponent);
}

inline u64 euler_phi(u64 n) {
    if (n == 0) return 0;
    u64 result = n;
    for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> small, large;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

}  // namespace depthzero::nt
