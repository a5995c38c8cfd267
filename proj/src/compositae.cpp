#include "gfprime/compositae.hpp"

#include <stdexcept>
#include <string>

namespace gfprime {

namespace {

void require_k_in_range(std::size_t n, std::size_t k, const char* who) {
    if (k < 1 || k > n) {
        throw std::invalid_argument(std::string(who) + ": need 1 <= k <= n, got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
    }
}

}  // namespace

CompositaeTable::CompositaeTable(const IntSequence& f, std::size_t max_n) : max_n_(max_n) {
    if (max_n == 0) {
        throw std::invalid_argument("compositae_table: max_n must be positive");
    }
    f.require(max_n, "compositae_table");
    entries_.resize(offset(max_n + 1));

    for (std::size_t n = 1; n <= max_n; ++n) {
        entries_[offset(n)] = f.at(n);
    }
    for (std::size_t k = 2; k <= max_n; ++k) {
        for (std::size_t n = k; n <= max_n; ++n) {
            ExactInt acc = 0;
            for (std::size_t m = 1; m <= n - k + 1; ++m) {
                const ExactInt& fm = f.at(m);
                if (sgn(fm) != 0) {
                    acc += fm * entries_[offset(n - m) + (k - 2)];
                }
            }
            entries_[offset(n) + (k - 1)] = std::move(acc);
        }
    }
}

const ExactInt& CompositaeTable::operator()(std::size_t n, std::size_t k) const {
    if (k < 1 || k > n || n > max_n_) {
        throw std::out_of_range("CompositaeTable: (" + std::to_string(n) + ", " +
                                std::to_string(k) + ") outside triangle of size " +
                                std::to_string(max_n_));
    }
    return entries_[offset(n) + (k - 1)];
}

std::span<const ExactInt> CompositaeTable::row(std::size_t n) const {
    if (n < 1 || n > max_n_) {
        throw std::out_of_range("CompositaeTable: row " + std::to_string(n) + " outside 1.." +
                                std::to_string(max_n_));
    }
    return std::span<const ExactInt>(entries_).subspan(offset(n), n);
}

void for_each_composition(std::size_t n, std::size_t k,
                          const std::function<void(std::span<const std::size_t>)>& visit) {
    if (k < 1 || k > n) {
        return;
    }
    // parts[0..k-1]; colex order is lex order on the reversed tuple, so the
    // "most significant" slot is parts[k-1]. Start from (n-k+1, 1, ..., 1).
    std::vector<std::size_t> parts(k, 1);
    parts[0] = n - k + 1;
    while (true) {
        visit(parts);
        // Find the lowest slot i >= 1 that can grow by taking one unit from
        // the slots below it (which must keep at least one unit each).
        std::size_t below = parts[0];
        std::size_t i = 1;
        while (i < k && below == i) {
            below += parts[i];
            ++i;
        }
        if (i >= k) {
            return;
        }
        ++parts[i];
        below -= 1;
        // Minimal colex arrangement of the remaining `below` units over slots 0..i-1.
        for (std::size_t j = 1; j < i; ++j) {
            parts[j] = 1;
        }
        parts[0] = below - (i - 1);
    }
}

ExactInt compositae_bruteforce(const IntSequence& f, std::size_t n, std::size_t k) {
    require_k_in_range(n, k, "compositae_bruteforce");
    if (n > kBruteForceMaxN) {
        throw std::invalid_argument("compositae_bruteforce: n=" + std::to_string(n) +
                                    " exceeds enumeration guard " +
                                    std::to_string(kBruteForceMaxN));
    }
    f.require(n, "compositae_bruteforce");
    ExactInt total = 0;
    ExactInt product;
    for_each_composition(n, k, [&](std::span<const std::size_t> parts) {
        product = 1;
        for (std::size_t part : parts) {
            product *= f.at(part);
        }
        total += product;
    });
    return total;
}

ExactInt binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) {
        return 0;
    }
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

ExactInt compositae_all_ones(std::size_t n, std::size_t k) {
    require_k_in_range(n, k, "compositae_all_ones");
    return binomial(n - 1, static_cast<long>(k) - 1);
}

ExactInt compositae_fib(std::size_t n, std::size_t k) {
    require_k_in_range(n, k, "compositae_fib");
    return binomial(k, static_cast<long>(n) - static_cast<long>(k));
}

ExactInt compositae_catalan(std::size_t n, std::size_t k) {
    require_k_in_range(n, k, "compositae_catalan");
    ExactInt scaled = binomial(2 * n - k - 1, static_cast<long>(n) - 1) * static_cast<unsigned long>(k);
    ExactInt quotient;
    ExactInt remainder;
    mpz_fdiv_qr_ui(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(), n);
    if (remainder != 0) {
        throw IntegralityError("compositae_catalan: k*C(2n-k-1, n-1) not divisible by n at n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
    }
    return quotient;
}

TruncatedSeries superpose(std::span<const ExactInt> r, const CompositaeTable& table) {
    const std::size_t order = table.max_n();
    if (r.size() < order + 1) {
        throw std::invalid_argument("superpose: outer series needs r(0.." + std::to_string(order) +
                                    ")");
    }
    std::vector<ExactRational> coeffs(order + 1);
    coeffs[0] = r[0];
    for (std::size_t n = 1; n <= order; ++n) {
        ExactInt acc = 0;
        const auto row = table.row(n);
        for (std::size_t k = 1; k <= n; ++k) {
            acc += row[k - 1] * r[k];
        }
        coeffs[n] = acc;
    }
    return TruncatedSeries(std::move(coeffs));
}

}  // namespace gfprime
