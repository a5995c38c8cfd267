#include "gfprime/compositae.hpp"
#include "gfprime/selfcheck.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gfprime;

namespace {

const IntSequence kPrimesWithOne{1, 2, 3, 5, 7, 11};

}  // namespace

TEST_CASE("compositae_table matches the hand expansion for 1,2,3,5,7,11") {
    const CompositaeTable table(kPrimesWithOne, 6);
    CHECK(table(6, 1) == 11);
    CHECK(table(6, 2) == 14 + 20 + 9);
    CHECK(table(6, 3) == 15 + 36 + 8);
    CHECK(table(6, 4) == 12 + 24);
    CHECK(table(6, 5) == 10);
    CHECK(table(6, 6) == 1);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(table(n, 1) == kPrimesWithOne.at(n));
}

TEST_CASE("compositae_table edge cases") {
    const IntSequence f{-2, 3, 0, 5};
    const CompositaeTable table(f, 4);
    for (std::size_t n = 1; n <= 4; ++n) {
        ExactInt power;
        mpz_pow_ui(power.get_mpz_t(), ExactInt(-2).get_mpz_t(), n);
        CHECK(table(n, n) == power);
        CHECK(table.row(n).size() == n);
    }
    CHECK_THROWS_AS(CompositaeTable(f, 5), std::invalid_argument);
    CHECK_THROWS_AS(CompositaeTable(f, 0), std::invalid_argument);
    CHECK_THROWS_AS(table(3, 4), std::out_of_range);
    CHECK_THROWS_AS(table(5, 1), std::out_of_range);
    CHECK_THROWS_AS(table(2, 0), std::out_of_range);

    // zeros propagate
    const CompositaeTable zeros(IntSequence{0, 0, 0}, 3);
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= n; ++k) CHECK(zeros(n, k) == 0);
}

TEST_CASE("compositions are enumerated in colex order") {
    std::vector<std::vector<std::size_t>> seen;
    for_each_composition(5, 3, [&](std::span<const std::size_t> parts) {
        seen.emplace_back(parts.begin(), parts.end());
    });
    const std::vector<std::vector<std::size_t>> expected = {
        {3, 1, 1}, {2, 2, 1}, {1, 3, 1}, {2, 1, 2}, {1, 2, 2}, {1, 1, 3}};
    CHECK(seen == expected);

    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            std::size_t count = 0;
            std::vector<std::size_t> prev;
            for_each_composition(n, k, [&](std::span<const std::size_t> parts) {
                std::vector<std::size_t> cur(parts.begin(), parts.end());
                std::size_t sum = 0;
                for (auto p : cur) {
                    REQUIRE(p >= 1);
                    sum += p;
                }
                REQUIRE(sum == n);
                if (!prev.empty()) {
                    REQUIRE(std::lexicographical_compare(prev.rbegin(), prev.rend(), cur.rbegin(),
                                                         cur.rend()));
                }
                prev = std::move(cur);
                ++count;
            });
            CHECK(ExactInt(static_cast<unsigned long>(count)) == binomial(n - 1, static_cast<long>(k) - 1));
        }
    }
}

TEST_CASE("compositae_bruteforce") {
    CHECK(compositae_bruteforce(sequences::ones(6), 6, 3) == 10);
    CHECK(compositae_bruteforce(IntSequence{-3, 1, 4, 1, 5}, 5, 5) == -243);
    CHECK(compositae_bruteforce(kPrimesWithOne, 6, 3) == 59);
    CHECK_THROWS_AS(compositae_bruteforce(sequences::ones(30), kBruteForceMaxN + 1, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(compositae_bruteforce(sequences::ones(6), 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(compositae_bruteforce(sequences::ones(3), 4, 2), std::invalid_argument);
}

TEST_CASE("DP table agrees with enumeration on random sequences") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const IntSequence f = random_sequence(rng, 12, -5, 5);
        const CompositaeTable table(f, 12);
        for (std::size_t n = 1; n <= 12; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                REQUIRE(table(n, k) == compositae_bruteforce(f, n, k));
            }
        }
        // spot-check the enumerator itself against the recursive oracle
        for (std::size_t n = 1; n <= 9; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                REQUIRE(compositae_bruteforce(f, n, k) == oracle::compositae(f, n, k));
            }
        }
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(9, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(17, 8) == 24310);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(4, 5) == 0);
}

TEST_CASE("closed forms") {
    SUBCASE("all ones") {
        CHECK(compositae_all_ones(6, 3) == 10);
        CHECK(compositae_all_ones(9, 1) == 1);
        // frozen from enumeration of compositions of 12 into 5 parts
        CHECK(oracle::compositae(sequences::ones(12), 12, 5) == 330);
        CHECK(compositae_all_ones(12, 5) == 330);
        CHECK_THROWS_AS(compositae_all_ones(3, 4), std::invalid_argument);
    }
    SUBCASE("x + x^2") {
        CHECK(compositae_fib(2, 1) == 1);
        CHECK(oracle::compositae(sequences::fib_gf(6), 6, 4) == 6);
        CHECK(compositae_fib(6, 4) == 6);
        CHECK(compositae_fib(5, 2) == 0);
    }
    SUBCASE("Catalan shift") {
        CHECK(compositae_catalan(2, 1) == 1);
        for (std::size_t n = 1; n <= 10; ++n) CHECK(compositae_catalan(n, n) == 1);
        CHECK(oracle::compositae(IntSequence{1, 1, 2, 5, 14}, 5, 2) == 14);
        CHECK(compositae_catalan(5, 2) == 14);
    }
}

TEST_CASE("closed forms equal the DP table of their defining sequences") {
    const std::size_t max_n = 12;
    const CompositaeTable ones(sequences::ones(max_n), max_n);
    const CompositaeTable fib(sequences::fib_gf(max_n), max_n);
    const CompositaeTable cat(sequences::catalan_shift(max_n), max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        ExactInt row_sum = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(ones(n, k) == compositae_all_ones(n, k));
            CHECK(fib(n, k) == compositae_fib(n, k));
            CHECK(cat(n, k) == compositae_catalan(n, k));
            row_sum += ones(n, k);
        }
        ExactInt two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n - 1);
        CHECK(row_sum == two_pow);
    }
}

TEST_CASE("catalan sequence starts 1,1,2,5,14,42") {
    CHECK(sequences::catalan_shift(6) == IntSequence{1, 1, 2, 5, 14, 42});
    CHECK(sequences::primes_with_one(6) == kPrimesWithOne);
    CHECK(sequences::fib_gf(4) == IntSequence{1, 1, 0, 0});
    CHECK(sequences::fib_gf(1) == IntSequence{1});
}
