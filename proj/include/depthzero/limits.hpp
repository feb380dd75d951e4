#pragma once

#include <cstdint>

namespace depthzero {

// Resource envelope for exhaustive enumerations.
struct Limits {
    // Largest q^m - 1 scanned by a census, and largest |GL_n(Z/p^r)| enumerated
    // by the double-coset oracle.
    std::uint64_t enumeration_cap = 10'000'000;
    // Largest phi(N) for which (Z/N)^x is enumerated in stabilizer computations.
    std::uint64_t unit_group_cap = 1'000'000;
};

}  // namespace depthzero
