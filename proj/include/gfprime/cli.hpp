#pragma once

// Command-line front end. `run` is the whole program minus process startup,
// so tests can drive it in-process with captured streams.

#include "gfprime/primality.hpp"
#include "gfprime/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gfprime::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,         ///< probably-prime, pass, or plain success
    kExitComposite = 1,  ///< composite verdict, or a failed selfcheck
    kExitUsage = 2,      ///< usage or input error
};

/// Malformed or insufficient user input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Where a sequence comes from: a built-in name, an inline list, or a file.
class SequenceSpec {
public:
    /// Accepts "ones", "fib-gf", "catalan", "primes1", "inline:a,b,c" or "file:PATH".
    /// Throws InputError on anything else, on malformed integers, or on an
    /// empty list. Files are read here.
    static SequenceSpec parse(std::string_view text);

    /// The first `length` coefficients. Built-in sequences are generated to
    /// any length; inline and file sequences throw InputError when shorter.
    IntSequence materialize(std::size_t length) const;

    bool is_named() const { return std::holds_alternative<std::string>(source_); }

private:
    std::variant<std::string, IntSequence> source_;
};

/// One-integer-per-line text; '#' lines and blank lines are skipped.
IntSequence parse_sequence_text(std::istream& in);

/// Comma-separated decimal integers.
IntSequence parse_sequence_list(std::string_view text);

/// Maps "generic" | "fermat2" | "lucas" | "binom" to a TestMethod.
/// Generic needs `seq` materialized to `length`.
TestMethod parse_method(std::string_view name, const SequenceSpec* seq, std::size_t length);

int cmd_compositae(const IntSequence& f, std::size_t n, bool json, std::ostream& out);
int cmd_logsum(const IntSequence& f, std::size_t n, bool json, std::ostream& out);
int cmd_test(const TestMethod& method, std::string_view method_name, std::uint64_t n, bool json,
             std::ostream& out);
int cmd_scan(const TestMethod& method, std::string_view method_name, std::uint64_t max_n,
             bool json, std::ostream& out, std::ostream& err);
int cmd_selfcheck(std::size_t trials, std::size_t max_n, std::uint64_t seed, bool json,
                  std::ostream& out);

/// Largest --max accepted by selfcheck without --force.
inline constexpr std::size_t kSelfCheckMaxGuard = 40;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gfprime::cli
