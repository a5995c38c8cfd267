#pragma once

#include "gfprime/exact.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gfprime {

/// Coefficients f(1), f(2), ..., f(N) of a generating function
/// F(x) = sum_{n>=1} f(n) x^n. There is no index 0: F(0) = 0 always.
class IntSequence {
public:
    IntSequence() = default;
    explicit IntSequence(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) {}
    IntSequence(std::initializer_list<long> coeffs);

    std::size_t size() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }

    /// f(n), 1-based. Throws std::out_of_range outside 1..size().
    const ExactInt& at(std::size_t n) const;

    std::span<const ExactInt> coeffs() const { return coeffs_; }

    /// Throws std::invalid_argument unless f(1..n) is available.
    void require(std::size_t n, const char* who) const;

    friend bool operator==(const IntSequence&, const IntSequence&) = default;

private:
    std::vector<ExactInt> coeffs_;
};

namespace sequences {

/// f(n) = 1 for every n, i.e. F(x) = x/(1-x).
IntSequence ones(std::size_t length);

/// Coefficients of F(x) = x + x^2: (1, 1, 0, 0, ...). Not the Fibonacci numbers.
IntSequence fib_gf(std::size_t length);

/// f(n) = Cat(n-1), i.e. F(x) = x*C(x) with C the Catalan generating function.
IntSequence catalan_shift(std::size_t length);

/// 1 followed by the primes: (1, 2, 3, 5, 7, 11, 13, ...).
IntSequence primes_with_one(std::size_t length);

}  // namespace sequences

}  // namespace gfprime
