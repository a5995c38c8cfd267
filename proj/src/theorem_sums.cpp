#include "gfprime/theorem_sums.hpp"

#include <stdexcept>
#include <string>

namespace gfprime {

namespace {

void require_in_table(const CompositaeTable& table, std::size_t n, const char* who) {
    if (n < 1 || n > table.max_n()) {
        throw std::invalid_argument(std::string(who) + ": n=" + std::to_string(n) +
                                    " outside 1.." + std::to_string(table.max_n()));
    }
}

void require_at_least_two(std::size_t n, const char* who) {
    if (n < 2) {
        throw std::invalid_argument(std::string(who) + ": n must be at least 2");
    }
}

// sum_{k=1..last} F^D(n,k)/k
ExactRational weighted_row_sum(const CompositaeTable& table, std::size_t n, std::size_t last) {
    const auto row = table.row(n);
    ExactRational acc;
    for (std::size_t k = 1; k <= last; ++k) {
        if (sgn(row[k - 1]) != 0) {
            acc += ExactRational(row[k - 1], ExactInt(static_cast<unsigned long>(k)));
        }
    }
    return acc;
}

ExactInt leading_power(const CompositaeTable& table, std::size_t n) {
    ExactInt out;
    mpz_pow_ui(out.get_mpz_t(), table(1, 1).get_mpz_t(), n);
    return out;
}

}  // namespace

ExactInt theorem2_sum(const CompositaeTable& table, std::size_t n) {
    require_in_table(table, n, "theorem2_sum");
    ExactRational s = weighted_row_sum(table, n, n) * ExactRational(ExactInt(static_cast<unsigned long>(n)));
    if (!s.is_integer()) {
        throw IntegralityError("theorem2_sum: S(" + std::to_string(n) + ") = " + s.to_string() +
                               " is not an integer");
    }
    return s.num();
}

ExactInt theorem2_sum(const IntSequence& f, std::size_t n) {
    return theorem2_sum(CompositaeTable(f, n), n);
}

ExactRational corollary_sum(const CompositaeTable& table, std::size_t n) {
    require_at_least_two(n, "corollary_sum");
    require_in_table(table, n, "corollary_sum");
    return weighted_row_sum(table, n, n - 1);
}

ExactRational corollary_sum(const IntSequence& f, std::size_t n) {
    require_at_least_two(n, "corollary_sum");
    return corollary_sum(CompositaeTable(f, n), n);
}

DivisibilityWitness divisibility_witness(const CompositaeTable& table, std::size_t n) {
    require_at_least_two(n, "divisibility_witness");
    ExactInt u = theorem2_sum(table, n) - leading_power(table, n);
    const bool divisible = mpz_divisible_ui_p(u.get_mpz_t(), n) != 0;
    return {std::move(u), divisible};
}

DivisibilityWitness divisibility_witness(const IntSequence& f, std::size_t n) {
    require_at_least_two(n, "divisibility_witness");
    return divisibility_witness(CompositaeTable(f, n), n);
}

TheoremSumReport::TheoremSumReport(const CompositaeTable& table, std::size_t n)
    : n_(n), s_n_(theorem2_sum(table, n)) {
    u_n_ = s_n_ - leading_power(table, n);
    t_n_ = ExactRational(u_n_, ExactInt(static_cast<unsigned long>(n)));
    if (n >= 2 && corollary_sum(table, n) != t_n_) {
        throw IntegralityError("TheoremSumReport: n*T(n) != U(n) at n=" + std::to_string(n));
    }
}

std::vector<TheoremSumReport> theorem_sum_reports(const IntSequence& f, std::size_t max_n) {
    const CompositaeTable table(f, max_n);
    std::vector<TheoremSumReport> out;
    out.reserve(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        out.emplace_back(table, n);
    }
    return out;
}

}  // namespace gfprime
