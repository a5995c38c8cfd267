#pragma once

// Randomized consistency checks over the whole pipeline: integrality of
// S(n) and of T(p) at primes, witness consistency, agreement with the
// series route, and DP-vs-enumeration for small n.

#include "gfprime/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gfprime {

/// `length` coefficients drawn uniformly-ish from [lo, hi] with a
/// platform-independent mapping, so a seed always yields the same sequence.
IntSequence random_sequence(std::mt19937_64& rng, std::size_t length, long lo, long hi);

struct PropertyResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    /// Context for the first failure, empty when none.
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

struct SelfCheckReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t max_n = 0;
    std::vector<PropertyResult> properties;

    bool passed() const;
};

/// Coefficient range used for the random sequences.
inline constexpr long kSelfCheckLo = -10;
inline constexpr long kSelfCheckHi = 10;
/// Enumeration cap for the DP-vs-brute-force property.
inline constexpr std::size_t kSelfCheckOracleMaxN = 12;

SelfCheckReport run_selfcheck(std::size_t trials, std::size_t max_n, std::uint64_t seed);

}  // namespace gfprime
