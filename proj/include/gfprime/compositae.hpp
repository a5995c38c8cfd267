#pragma once

// Compositae F^D(n,k): the sum of f(l1) f(l2) ... f(lk) over every ordered
// k-tuple of positive integers with l1 + ... + lk = n.

#include "gfprime/exact.hpp"
#include "gfprime/sequence.hpp"
#include "gfprime/series.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gfprime {

/// Immutable triangle F^D(n,k), 1 <= k <= n <= max_n.
class CompositaeTable {
public:
    /// Fills the triangle with F^D(n,1) = f(n) and
    /// F^D(n,k) = sum_{m=1..n-k+1} f(m) F^D(n-m, k-1), by increasing k then n.
    /// Throws std::invalid_argument when f has fewer than max_n coefficients.
    CompositaeTable(const IntSequence& f, std::size_t max_n);

    std::size_t max_n() const { return max_n_; }

    /// Throws std::out_of_range unless 1 <= k <= n <= max_n.
    const ExactInt& operator()(std::size_t n, std::size_t k) const;

    /// F^D(n,1..n).
    std::span<const ExactInt> row(std::size_t n) const;

private:
    static std::size_t offset(std::size_t n) { return (n - 1) * n / 2; }

    std::size_t max_n_;
    std::vector<ExactInt> entries_;
};

inline CompositaeTable compositae_table(const IntSequence& f, std::size_t max_n) {
    return CompositaeTable(f, max_n);
}

/// Largest n accepted by compositae_bruteforce; C(19, 9) = 92378 compositions.
inline constexpr std::size_t kBruteForceMaxN = 20;

/// Calls `visit` with every composition of n into k positive parts, in
/// colexicographic order (last part varies slowest). Iterative; no recursion.
void for_each_composition(std::size_t n, std::size_t k,
                          const std::function<void(std::span<const std::size_t>)>& visit);

/// F^D(n,k) by direct enumeration of compositions.
/// Throws std::invalid_argument unless 1 <= k <= n <= kBruteForceMaxN and f covers n.
ExactInt compositae_bruteforce(const IntSequence& f, std::size_t n, std::size_t k);

/// Exact C(n, k); zero when k < 0 or k > n.
ExactInt binomial(unsigned long n, long k);

/// Compositae of x/(1-x): C(n-1, k-1). Throws std::invalid_argument unless 1 <= k <= n.
ExactInt compositae_all_ones(std::size_t n, std::size_t k);

/// Compositae of x + x^2: C(k, n-k). Throws std::invalid_argument unless 1 <= k <= n.
ExactInt compositae_fib(std::size_t n, std::size_t k);

/// Compositae of x*C(x): (k/n) C(2n-k-1, n-1).
/// Throws std::invalid_argument unless 1 <= k <= n; IntegralityError if the
/// division by n leaves a remainder.
ExactInt compositae_catalan(std::size_t n, std::size_t k);

/// R(F(x)) to order table.max_n(): g(0) = r(0), g(n) = sum_k F^D(n,k) r(k).
/// `r` holds r(0..max_n).
TruncatedSeries superpose(std::span<const ExactInt> r, const CompositaeTable& table);

}  // namespace gfprime
