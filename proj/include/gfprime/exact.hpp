#pragma once

// Exact integer and rational arithmetic shared by every gfprime module.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gfprime {

/// Arbitrary-precision signed integer.
using ExactInt = mpz_class;

std::string to_string(const ExactInt& value);

/// Reduced fraction with a strictly positive denominator.
///
/// Every constructor and arithmetic operator leaves the value in lowest
/// terms, so `num()`/`den()` can be compared structurally and
/// `is_integer()` is just a denominator check.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(const ExactInt& integer) : value_(integer) {}  // NOLINT(implicit)
    ExactRational(long integer) : value_(integer) {}             // NOLINT(implicit)

    /// Throws std::domain_error when `den` is zero.
    ExactRational(const ExactInt& num, const ExactInt& den);

    ExactInt num() const { return value_.get_num(); }
    ExactInt den() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    /// Throws std::domain_error on division by zero.
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    ExactRational operator-() const;

    friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
        return lhs.value_ == rhs.value_;
    }

    bool is_zero() const { return sgn(value_) == 0; }

    /// "p/q", or just "p" when the value is an integer.
    std::string to_string() const;

private:
    explicit ExactRational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

/// Raised when a value that must be integral by construction is not.
/// Always signals an implementation defect, never bad input.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gfprime
