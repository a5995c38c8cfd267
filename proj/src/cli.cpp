#include "gfprime/cli.hpp"

#include "gfprime/compositae.hpp"
#include "gfprime/selfcheck.hpp"
#include "gfprime/theorem_sums.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace gfprime::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 4> kNamedSequences = {"ones", "fib-gf", "catalan",
                                                             "primes1"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

ExactInt parse_integer(std::string_view token) {
    const std::string_view t = trim(token);
    const std::size_t digits_from = (!t.empty() && t.front() == '-') ? 1 : 0;
    if (t.size() == digits_from ||
        t.substr(digits_from).find_first_not_of("0123456789") != std::string_view::npos) {
        throw InputError("not a decimal integer: '" + std::string(token) + "'");
    }
    return ExactInt(std::string(t), 10);
}

Json big(const ExactInt& value) { return value.get_str(); }

}  // namespace

IntSequence parse_sequence_list(std::string_view text) {
    std::vector<ExactInt> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        coeffs.push_back(parse_integer(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return IntSequence(std::move(coeffs));
}

IntSequence parse_sequence_text(std::istream& in) {
    std::vector<ExactInt> coeffs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        try {
            coeffs.push_back(parse_integer(t));
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return IntSequence(std::move(coeffs));
}

SequenceSpec SequenceSpec::parse(std::string_view text) {
    SequenceSpec spec;
    if (std::find(kNamedSequences.begin(), kNamedSequences.end(), text) != kNamedSequences.end()) {
        spec.source_ = std::string(text);
        return spec;
    }
    IntSequence seq;
    if (text.starts_with("inline:")) {
        seq = parse_sequence_list(text.substr(7));
    } else if (text.starts_with("file:")) {
        const std::string path(text.substr(5));
        std::ifstream in(path);
        if (!in) {
            throw InputError("cannot open sequence file '" + path + "'");
        }
        seq = parse_sequence_text(in);
    } else {
        throw InputError("unknown sequence '" + std::string(text) +
                         "' (expected ones, fib-gf, catalan, primes1, inline:... or file:...)");
    }
    if (seq.empty()) {
        throw InputError("sequence is empty");
    }
    spec.source_ = std::move(seq);
    return spec;
}

IntSequence SequenceSpec::materialize(std::size_t length) const {
    if (const auto* name = std::get_if<std::string>(&source_)) {
        if (*name == "ones") return sequences::ones(length);
        if (*name == "fib-gf") return sequences::fib_gf(length);
        if (*name == "catalan") return sequences::catalan_shift(length);
        return sequences::primes_with_one(length);
    }
    const auto& seq = std::get<IntSequence>(source_);
    if (seq.size() < length) {
        throw InputError("sequence shorter than n: has " + std::to_string(seq.size()) +
                         " coefficients, need " + std::to_string(length));
    }
    return IntSequence(std::vector<ExactInt>(seq.coeffs().begin(), seq.coeffs().begin() + length));
}

TestMethod parse_method(std::string_view name, const SequenceSpec* seq, std::size_t length) {
    if (name == "fermat2") return method::FermatBase2{};
    if (name == "lucas") return method::LucasVariant{};
    if (name == "binom") return method::CentralBinomial{};
    if (name == "generic") {
        if (seq == nullptr) {
            throw InputError("method 'generic' requires --seq");
        }
        return method::Generic{seq->materialize(length)};
    }
    throw InputError("unknown method '" + std::string(name) +
                     "' (expected generic, fermat2, lucas or binom)");
}

int cmd_compositae(const IntSequence& f, std::size_t n, bool json, std::ostream& out) {
    const CompositaeTable table(f, n);
    if (json) {
        Json rows = Json::array();
        for (std::size_t m = 1; m <= n; ++m) {
            Json row = Json::array();
            for (const ExactInt& v : table.row(m)) {
                row.push_back(big(v));
            }
            rows.push_back(std::move(row));
        }
        out << Json{{"n", n}, {"rows", std::move(rows)}}.dump() << '\n';
        return kExitOk;
    }
    for (std::size_t m = 1; m <= n; ++m) {
        out << m << ':';
        for (const ExactInt& v : table.row(m)) {
            out << ' ' << v.get_str();
        }
        out << '\n';
    }
    return kExitOk;
}

int cmd_logsum(const IntSequence& f, std::size_t n, bool json, std::ostream& out) {
    const auto reports = theorem_sum_reports(f, n);
    if (json) {
        Json rows = Json::array();
        for (const auto& r : reports) {
            Json row{{"m", r.n()}, {"S", big(r.s_n())}, {"U", big(r.u_n())}};
            // T(1) is an empty sum with no meaning for primality.
            if (r.n() >= 2) {
                row["T"] = r.t_n().to_string();
                row["T_integral"] = r.t_n().is_integer();
            } else {
                row["T"] = nullptr;
                row["T_integral"] = nullptr;
            }
            rows.push_back(std::move(row));
        }
        out << Json{{"n", n}, {"rows", std::move(rows)}}.dump() << '\n';
        return kExitOk;
    }
    out << "m\tS\tU\tT\tT_integral\n";
    for (const auto& r : reports) {
        out << r.n() << '\t' << r.s_n().get_str() << '\t' << r.u_n().get_str() << '\t';
        if (r.n() >= 2) {
            out << r.t_n() << '\t' << (r.t_n().is_integer() ? "yes" : "no");
        } else {
            out << "-\t-";
        }
        out << '\n';
    }
    return kExitOk;
}

int cmd_test(const TestMethod& method, std::string_view method_name, std::uint64_t n, bool json,
             std::ostream& out) {
    const PrimalityVerdict v = run_test(method, n);
    if (json) {
        Json doc{{"n", n}, {"method", method_name}, {"verdict", to_string(v.outcome)}};
        if (v.witness) {
            doc["witness"] = v.witness->to_string();
        }
        out << doc.dump() << '\n';
    } else {
        out << to_string(v.outcome) << '\n';
    }
    return v.composite() ? kExitComposite : kExitOk;
}

int cmd_scan(const TestMethod& method, std::string_view method_name, std::uint64_t max_n,
             bool json, std::ostream& out, std::ostream& err) {
    const auto passers = pseudoprime_scan(method, max_n);
    if (json) {
        out << Json(passers).dump() << '\n';
    } else {
        for (std::uint64_t n : passers) {
            out << n << '\n';
        }
    }
    err << "scan: " << passers.size() << " composite passer(s) <= " << max_n << " for "
        << method_name << '\n';
    return kExitOk;
}

int cmd_selfcheck(std::size_t trials, std::size_t max_n, std::uint64_t seed, bool json,
                  std::ostream& out) {
    const SelfCheckReport report = run_selfcheck(trials, max_n, seed);
    if (json) {
        Json props = Json::array();
        for (const auto& p : report.properties) {
            Json entry{{"name", p.name}, {"checks", p.checks}, {"failures", p.failures}};
            if (!p.passed()) {
                entry["first_failure"] = p.first_failure;
            }
            props.push_back(std::move(entry));
        }
        out << Json{{"seed", seed},
                    {"trials", trials},
                    {"max", max_n},
                    {"properties", std::move(props)},
                    {"pass", report.passed()}}
                   .dump()
            << '\n';
    } else {
        out << "selfcheck seed=" << seed << " trials=" << trials << " max=" << max_n << '\n';
        for (const auto& p : report.properties) {
            out << (p.passed() ? "PASS " : "FAIL ") << p.name << " checks=" << p.checks
                << " failures=" << p.failures << '\n';
            if (!p.passed()) {
                out << "  first failure: " << p.first_failure << '\n';
            }
        }
        out << "result: " << (report.passed() ? "pass" : "fail") << '\n';
    }
    return report.passed() ? kExitOk : kExitComposite;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compositae, logarithmic-superposition sums, and the compositeness tests built on them",
                 "gfprime"};
    app.require_subcommand(1);

    bool json = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", json, "Machine-readable output; big integers as decimal strings");
    app.add_option("--seed", seed, "Random seed for selfcheck")->capture_default_str();

    const std::string seq_help =
        "Sequence: ones | fib-gf (coefficients of x+x^2, i.e. 1,1,0,0,...; not Fibonacci numbers) "
        "| catalan (f(n)=Cat(n-1)) | primes1 (1,2,3,5,7,...) | inline:a,b,... | file:PATH";

    std::string seq_text;
    std::size_t n = 0;
    auto* compositae = app.add_subcommand("compositae", "Print the compositae triangle F(n,k)");
    compositae->add_option("--seq", seq_text, seq_help)->required();
    compositae->add_option("--n", n, "Rows 1..n")->required();

    auto* logsum = app.add_subcommand("logsum", "Print S(m), U(m) and T(m) for m = 1..n");
    logsum->add_option("--seq", seq_text, seq_help)->required();
    logsum->add_option("--n", n, "Largest m")->required();

    std::string method_name;
    std::uint64_t test_n = 0;
    auto* test = app.add_subcommand("test", "Run one compositeness test; exit 0 probably-prime, 1 composite");
    test->add_option("--method", method_name, "generic | fermat2 | lucas | binom")->required();
    test->add_option("--seq", seq_text, seq_help + " (generic only)");
    test->add_option("n", test_n, "Number to test")->required();

    std::uint64_t scan_max = 0;
    auto* scan = app.add_subcommand("scan", "List composites <= max that pass a test");
    scan->add_option("--method", method_name, "generic | fermat2 | lucas | binom")->required();
    scan->add_option("--seq", seq_text, seq_help + " (generic only)");
    scan->add_option("--max", scan_max, "Upper bound")->required();

    std::size_t trials = 50;
    std::size_t check_max = 30;
    bool force = false;
    auto* selfcheck = app.add_subcommand("selfcheck", "Randomized integrality and oracle checks");
    selfcheck->add_option("--trials", trials, "Random sequences")->capture_default_str();
    selfcheck->add_option("--max", check_max, "Largest n")->capture_default_str();
    selfcheck->add_flag("--force", force, "Allow --max above 40");

    for (auto* sub : {compositae, logsum, test, scan, selfcheck}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const auto spec = [&]() -> std::optional<SequenceSpec> {
            if (seq_text.empty()) return std::nullopt;
            return SequenceSpec::parse(seq_text);
        }();

        if (compositae->parsed() || logsum->parsed()) {
            if (n < 1) {
                throw InputError("--n must be at least 1");
            }
            const IntSequence f = spec->materialize(n);
            return compositae->parsed() ? cmd_compositae(f, n, json, out)
                                        : cmd_logsum(f, n, json, out);
        }
        if (test->parsed()) {
            if (test_n < 2) {
                throw InputError("n must be at least 2");
            }
            const TestMethod m =
                parse_method(method_name, spec ? &*spec : nullptr, static_cast<std::size_t>(test_n));
            return cmd_test(m, method_name, test_n, json, out);
        }
        if (scan->parsed()) {
            if (scan_max < 4) {
                throw InputError("--max must be at least 4");
            }
            const TestMethod m = parse_method(method_name, spec ? &*spec : nullptr,
                                              static_cast<std::size_t>(scan_max));
            return cmd_scan(m, method_name, scan_max, json, out, err);
        }
        if (trials < 1 || check_max < 1) {
            throw InputError("--trials and --max must be positive");
        }
        if (check_max > kSelfCheckMaxGuard && !force) {
            throw InputError("--max above " + std::to_string(kSelfCheckMaxGuard) +
                             " needs --force");
        }
        return cmd_selfcheck(trials, check_max, seed, json, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitComposite;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("gfprime");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gfprime::cli
