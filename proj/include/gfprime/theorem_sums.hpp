#pragma once

// For an integer sequence f with compositae F^D(n,k):
//   S(n) = n * sum_{k=1..n}   F^D(n,k)/k     always an integer
//   T(n) =     sum_{k=1..n-1} F^D(n,k)/k     an integer whenever n is prime
//   U(n) = S(n) - f(1)^n = n * T(n)

#include "gfprime/compositae.hpp"
#include "gfprime/exact.hpp"
#include "gfprime/sequence.hpp"

#include <cstddef>
#include <vector>

namespace gfprime {

/// S(n), U(n), T(n) for one n. Construction checks that S(n) is integral
/// and that n * T(n) = U(n); a violation throws IntegralityError.
class TheoremSumReport {
public:
    TheoremSumReport(const CompositaeTable& table, std::size_t n);

    std::size_t n() const { return n_; }
    const ExactInt& s_n() const { return s_n_; }
    const ExactInt& u_n() const { return u_n_; }
    const ExactRational& t_n() const { return t_n_; }

private:
    std::size_t n_;
    ExactInt s_n_;
    ExactInt u_n_;
    ExactRational t_n_;
};

/// Reports for n = 1..max_n sharing one compositae table.
std::vector<TheoremSumReport> theorem_sum_reports(const IntSequence& f, std::size_t max_n);

/// S(n), accumulated as one exact rational and asserted integral.
ExactInt theorem2_sum(const IntSequence& f, std::size_t n);
ExactInt theorem2_sum(const CompositaeTable& table, std::size_t n);

/// T(n) in lowest terms. Throws std::invalid_argument for n < 2.
ExactRational corollary_sum(const IntSequence& f, std::size_t n);
ExactRational corollary_sum(const CompositaeTable& table, std::size_t n);

struct DivisibilityWitness {
    ExactInt u_n;    ///< S(n) - f(1)^n
    bool divisible;  ///< n | u_n

    friend bool operator==(const DivisibilityWitness&, const DivisibilityWitness&) = default;
};

/// U(n) and whether n divides it. Throws std::invalid_argument for n < 2.
DivisibilityWitness divisibility_witness(const IntSequence& f, std::size_t n);
DivisibilityWitness divisibility_witness(const CompositaeTable& table, std::size_t n);

}  // namespace gfprime
