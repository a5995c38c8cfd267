#pragma once

// Truncated formal power series with exact rational coefficients.

#include "gfprime/exact.hpp"
#include "gfprime/sequence.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace gfprime {

/// Thrown when two series of different truncation order meet in one operation.
class OrderMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// c(0) + c(1) x + ... + c(N) x^N, where N is the truncation order.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Order is coeffs.size() - 1; throws std::invalid_argument on an empty vector.
    explicit TruncatedSeries(std::vector<ExactRational> coeffs);

    /// F(x) = sum_{n=1..order} f(n) x^n. The sequence must cover f(1..order).
    static TruncatedSeries from_sequence(const IntSequence& f, std::size_t order);
    /// The constant series `value` at the given order.
    static TruncatedSeries constant(const ExactRational& value, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const ExactRational& operator[](std::size_t i) const { return coeffs_.at(i); }
    std::span<const ExactRational> coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<ExactRational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Formal derivative. The result has order N-1; use series_pad to restore N.
/// An order-0 input yields the order-0 zero series.
TruncatedSeries series_derivative(const TruncatedSeries& a);

/// Extends with zero coefficients up to `order` (which must be >= a.order()).
TruncatedSeries series_pad(const TruncatedSeries& a, std::size_t order);
/// Drops coefficients above `order` (which must be <= a.order()).
TruncatedSeries series_truncate(const TruncatedSeries& a, std::size_t order);

/// Integer coefficients h(0..N) of H(x) = 1/(1 - F(x)):
/// h(0) = 1, h(n) = sum_{m=1..n} f(m) h(n-m).
std::vector<ExactInt> reciprocal_one_minus_coeffs(const IntSequence& f, std::size_t order);

/// H(x) = 1/(1 - F(x)) to the given order.
TruncatedSeries series_reciprocal_one_minus(const IntSequence& f, std::size_t order);

/// G(x) = ln(1/(1 - F(x))) to the given order, g(0) = 0.
///
/// Evaluated through G' = F' * H, so n*g(n) = sum_{m=1..n} m f(m) h(n-m)
/// is formed in integers before the single division by n.
TruncatedSeries series_log_inv_one_minus(const IntSequence& f, std::size_t order);

}  // namespace gfprime
