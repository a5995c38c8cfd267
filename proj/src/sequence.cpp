#include "gfprime/sequence.hpp"

#include <stdexcept>
#include <string>

namespace gfprime {

IntSequence::IntSequence(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
}

const ExactInt& IntSequence::at(std::size_t n) const {
    if (n == 0 || n > coeffs_.size()) {
        throw std::out_of_range("IntSequence: index " + std::to_string(n) + " outside 1.." +
                                std::to_string(coeffs_.size()));
    }
    return coeffs_[n - 1];
}

void IntSequence::require(std::size_t n, const char* who) const {
    if (n > coeffs_.size()) {
        throw std::invalid_argument(std::string(who) + ": sequence has " +
                                    std::to_string(coeffs_.size()) + " coefficients, need " +
                                    std::to_string(n));
    }
}

namespace sequences {

IntSequence ones(std::size_t length) {
    return IntSequence(std::vector<ExactInt>(length, ExactInt(1)));
}

IntSequence fib_gf(std::size_t length) {
    std::vector<ExactInt> coeffs(length, ExactInt(0));
    for (std::size_t i = 0; i < length && i < 2; ++i) {
        coeffs[i] = 1;
    }
    return IntSequence(std::move(coeffs));
}

IntSequence catalan_shift(std::size_t length) {
    // Cat(m+1) = Cat(m) * 2(2m+1) / (m+2), exact at every step.
    std::vector<ExactInt> coeffs;
    coeffs.reserve(length);
    ExactInt cat = 1;
    for (std::size_t m = 0; m < length; ++m) {
        coeffs.push_back(cat);
        cat = cat * (2 * (2 * m + 1));
        mpz_divexact_ui(cat.get_mpz_t(), cat.get_mpz_t(), m + 2);
    }
    return IntSequence(std::move(coeffs));
}

IntSequence primes_with_one(std::size_t length) {
    std::vector<ExactInt> coeffs;
    coeffs.reserve(length);
    if (length > 0) {
        coeffs.emplace_back(1);
    }
    for (unsigned long candidate = 2; coeffs.size() < length; ++candidate) {
        bool prime = true;
        for (unsigned long d = 2; d * d <= candidate; ++d) {
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) {
            coeffs.emplace_back(candidate);
        }
    }
    return IntSequence(std::move(coeffs));
}

}  // namespace sequences

}  // namespace gfprime
