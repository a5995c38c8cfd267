#include "gfprime/primality.hpp"

#include "gfprime/theorem_sums.hpp"

#include <stdexcept>
#include <string>

namespace gfprime {

namespace {

__extension__ using u128 = unsigned __int128;

void require_testable(std::uint64_t n, const char* who) {
    if (n < 2) {
        throw std::invalid_argument(std::string(who) + ": n must be at least 2, got " +
                                    std::to_string(n));
    }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % m);
}

PrimalityVerdict verdict(std::uint64_t n, bool passes) {
    return {n, passes ? Outcome::ProbablyPrime : Outcome::Composite, std::nullopt};
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view to_string(Outcome outcome) {
    return outcome == Outcome::Composite ? "composite" : "probably-prime";
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

PrimalityVerdict gf_primality_test(const CompositaeTable& table, std::uint64_t n) {
    require_testable(n, "gf_primality_test");
    if (n > table.max_n()) {
        throw std::invalid_argument("gf_primality_test: n=" + std::to_string(n) +
                                    " beyond compositae table of size " +
                                    std::to_string(table.max_n()));
    }
    auto witness = divisibility_witness(table, static_cast<std::size_t>(n));
    PrimalityVerdict out = verdict(n, witness.divisible);
    if (out.composite()) {
        out.witness = ExactRational(witness.u_n, ExactInt(static_cast<unsigned long>(n)));
    }
    return out;
}

PrimalityVerdict gf_primality_test(const IntSequence& f, std::uint64_t n) {
    require_testable(n, "gf_primality_test");
    f.require(n, "gf_primality_test");
    return gf_primality_test(CompositaeTable(f, static_cast<std::size_t>(n)), n);
}

PrimalityVerdict fermat_base2_test(std::uint64_t n) {
    require_testable(n, "fermat_base2_test");
    return verdict(n, pow_mod(2, n, n) == 2 % n);
}

ExactInt lucas_number(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("lucas_number: n must be at least 1");
    }
    ExactInt prev = 1;  // L(1)
    ExactInt cur = 3;   // L(2)
    if (n == 1) {
        return prev;
    }
    for (std::uint64_t i = 2; i < n; ++i) {
        prev += cur;
        swap(prev, cur);
    }
    return cur;
}

PrimalityVerdict lucas_variant_test(std::uint64_t n) {
    require_testable(n, "lucas_variant_test");
    std::uint64_t prev = 1 % n;
    std::uint64_t cur = 3 % n;
    for (std::uint64_t i = 2; i < n; ++i) {
        const std::uint64_t next = add_mod(prev, cur, n);
        prev = cur;
        cur = next;
    }
    return verdict(n, cur == 1 % n);
}

PrimalityVerdict central_binomial_test(std::uint64_t n) {
    require_testable(n, "central_binomial_test");
    const ExactInt c = binomial(2 * n - 1, static_cast<long>(n - 1)) - 1;
    return verdict(n, mpz_divisible_ui_p(c.get_mpz_t(), n) != 0);
}

PrimalityVerdict run_test(const TestMethod& method, std::uint64_t n) {
    return std::visit(
        overloaded{
            [n](const method::Generic& g) { return gf_primality_test(g.f, n); },
            [n](method::FermatBase2) { return fermat_base2_test(n); },
            [n](method::LucasVariant) { return lucas_variant_test(n); },
            [n](method::CentralBinomial) { return central_binomial_test(n); },
        },
        method);
}

IntSequence defining_sequence(const TestMethod& method, std::size_t length) {
    return std::visit(overloaded{
                          [](const method::Generic& g) { return g.f; },
                          [length](method::FermatBase2) { return sequences::ones(length); },
                          [length](method::LucasVariant) { return sequences::fib_gf(length); },
                          [length](method::CentralBinomial) {
                              return sequences::catalan_shift(length);
                          },
                      },
                      method);
}

std::vector<std::uint64_t> pseudoprime_scan(const TestMethod& method, std::uint64_t max_n) {
    if (max_n < 4) {
        throw std::invalid_argument("pseudoprime_scan: max_n must be at least 4");
    }
    std::vector<std::uint64_t> out;

    if (const auto* generic = std::get_if<method::Generic>(&method)) {
        generic->f.require(max_n, "pseudoprime_scan");
        // One table serves every n in range.
        const CompositaeTable table(generic->f, static_cast<std::size_t>(max_n));
        for (std::uint64_t n = 4; n <= max_n; ++n) {
            if (!is_prime_trial_division(n) && !gf_primality_test(table, n).composite()) {
                out.push_back(n);
            }
        }
        return out;
    }

    for (std::uint64_t n = 4; n <= max_n; ++n) {
        if (!is_prime_trial_division(n) && !run_test(method, n).composite()) {
            out.push_back(n);
        }
    }
    return out;
}

bool is_prime_trial_division(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace gfprime
