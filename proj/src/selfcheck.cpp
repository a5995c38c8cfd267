#include "gfprime/selfcheck.hpp"

#include "gfprime/compositae.hpp"
#include "gfprime/primality.hpp"
#include "gfprime/series.hpp"
#include "gfprime/theorem_sums.hpp"

#include <algorithm>
#include <sstream>

namespace gfprime {

namespace {

std::string describe(const IntSequence& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 1; i <= f.size(); ++i) {
        os << (i > 1 ? "," : "") << f.at(i).get_str();
    }
    os << ']';
    return os.str();
}

void record(PropertyResult& result, bool ok, std::size_t trial, std::size_t n,
            const IntSequence& f, const std::string& detail) {
    ++result.checks;
    if (ok) {
        return;
    }
    if (result.failures++ == 0) {
        std::ostringstream os;
        os << "trial=" << trial << " n=" << n << ' ' << detail << " f=" << describe(f);
        result.first_failure = os.str();
    }
}

}  // namespace

IntSequence random_sequence(std::mt19937_64& rng, std::size_t length, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    std::vector<ExactInt> coeffs;
    coeffs.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        coeffs.emplace_back(lo + static_cast<long>(rng() % span));
    }
    return IntSequence(std::move(coeffs));
}

bool SelfCheckReport::passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.passed(); });
}

SelfCheckReport run_selfcheck(std::size_t trials, std::size_t max_n, std::uint64_t seed) {
    SelfCheckReport report{seed, trials, max_n, {}};
    PropertyResult s_integral{"theorem2-integrality", 0, 0, {}};
    PropertyResult t_prime{"corollary-integral-at-primes", 0, 0, {}};
    PropertyResult witness{"witness-consistency", 0, 0, {}};
    PropertyResult series{"series-agreement", 0, 0, {}};
    PropertyResult oracle{"compositae-oracle", 0, 0, {}};

    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const IntSequence f = random_sequence(rng, max_n, kSelfCheckLo, kSelfCheckHi);
        const CompositaeTable table(f, max_n);
        const TruncatedSeries log_series = series_log_inv_one_minus(f, max_n);

        for (std::size_t n = 1; n <= max_n; ++n) {
            ExactInt s;
            bool s_ok = true;
            try {
                s = theorem2_sum(table, n);
            } catch (const IntegralityError& e) {
                s_ok = false;
                record(s_integral, false, trial, n, f, e.what());
            }
            if (s_ok) {
                record(s_integral, true, trial, n, f, "");
                const ExactRational n_g =
                    log_series[n] * ExactRational(ExactInt(static_cast<unsigned long>(n)));
                record(series, n_g == ExactRational(s), trial, n, f,
                       "S=" + s.get_str() + " n*g(n)=" + n_g.to_string());
            }

            if (n >= 2 && s_ok) {
                const ExactRational t = corollary_sum(table, n);
                const DivisibilityWitness w = divisibility_witness(table, n);
                const bool consistent =
                    t.is_integer() == w.divisible &&
                    t * ExactRational(ExactInt(static_cast<unsigned long>(n))) == ExactRational(w.u_n);
                record(witness, consistent, trial, n, f,
                       "T=" + t.to_string() + " U=" + w.u_n.get_str());
                if (is_prime_trial_division(n)) {
                    record(t_prime, t.is_integer(), trial, n, f, "T=" + t.to_string());
                }
            }

            if (n <= kSelfCheckOracleMaxN) {
                for (std::size_t k = 1; k <= n; ++k) {
                    const ExactInt brute = compositae_bruteforce(f, n, k);
                    record(oracle, brute == table(n, k), trial, n, f,
                           "k=" + std::to_string(k) + " dp=" + table(n, k).get_str() +
                               " brute=" + brute.get_str());
                }
            }
        }
    }

    report.properties = {s_integral, t_prime, witness, series, oracle};
    return report;
}

}  // namespace gfprime
