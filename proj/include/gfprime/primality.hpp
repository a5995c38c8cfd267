#pragma once

// One-sided compositeness tests built on the fact that T(n) is an integer
// whenever n is prime. A prime always passes; some composites pass too.

#include "gfprime/compositae.hpp"
#include "gfprime/exact.hpp"
#include "gfprime/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace gfprime {

enum class Outcome { Composite, ProbablyPrime };

std::string_view to_string(Outcome outcome);

struct PrimalityVerdict {
    std::uint64_t n = 0;
    Outcome outcome = Outcome::ProbablyPrime;
    /// Non-integral T(n), set for Composite verdicts from the generic test.
    std::optional<ExactRational> witness;

    bool composite() const { return outcome == Outcome::Composite; }
};

namespace method {
struct Generic {
    IntSequence f;
};
struct FermatBase2 {};
struct LucasVariant {};
struct CentralBinomial {};
}  // namespace method

using TestMethod =
    std::variant<method::Generic, method::FermatBase2, method::LucasVariant, method::CentralBinomial>;

/// Composite iff n does not divide S(n) - f(1)^n. Throws std::invalid_argument
/// for n < 2 or when f has fewer than n coefficients.
PrimalityVerdict gf_primality_test(const IntSequence& f, std::uint64_t n);
/// Same, reusing a precomputed table (n <= table.max_n()).
PrimalityVerdict gf_primality_test(const CompositaeTable& table, std::uint64_t n);

/// Composite iff 2^n != 2 (mod n).
PrimalityVerdict fermat_base2_test(std::uint64_t n);

/// L(1) = 1, L(2) = 3, L(n) = L(n-1) + L(n-2). Throws std::invalid_argument for n = 0.
ExactInt lucas_number(std::uint64_t n);

/// Composite iff L(n) != 1 (mod n), running the recurrence mod n.
PrimalityVerdict lucas_variant_test(std::uint64_t n);

/// Composite iff n does not divide C(2n-1, n-1) - 1.
PrimalityVerdict central_binomial_test(std::uint64_t n);

/// Dispatches to the test named by `method`.
PrimalityVerdict run_test(const TestMethod& method, std::uint64_t n);

/// The sequence whose generic test the fast path `method` specializes, with
/// `length` coefficients. Generic returns its own sequence unchanged.
IntSequence defining_sequence(const TestMethod& method, std::size_t length);

/// Every composite n <= max_n (by trial division) that `method` passes, ascending.
/// Throws std::invalid_argument when max_n < 4 or a Generic sequence is too short.
std::vector<std::uint64_t> pseudoprime_scan(const TestMethod& method, std::uint64_t max_n);

bool is_prime_trial_division(std::uint64_t n);

/// base^exp mod m for m >= 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace gfprime
