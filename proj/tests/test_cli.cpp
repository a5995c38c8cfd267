#include "gfprime/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using gfprime::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("sequence specs") {
    using gfprime::cli::InputError;
    using gfprime::cli::SequenceSpec;
    CHECK(SequenceSpec::parse("ones").materialize(3) == gfprime::IntSequence{1, 1, 1});
    CHECK(SequenceSpec::parse("fib-gf").materialize(4) == gfprime::IntSequence{1, 1, 0, 0});
    CHECK(SequenceSpec::parse("inline:3,-4, 5").materialize(2) == gfprime::IntSequence{3, -4});
    CHECK_THROWS_AS(SequenceSpec::parse("inline:1,1").materialize(3), InputError);
    CHECK_THROWS_AS(SequenceSpec::parse("inline:"), InputError);
    CHECK_THROWS_AS(SequenceSpec::parse("inline:1,x"), InputError);
    CHECK_THROWS_AS(SequenceSpec::parse("inline:1,,2"), InputError);
    CHECK_THROWS_AS(SequenceSpec::parse("fibonacci"), InputError);
    CHECK_THROWS_AS(SequenceSpec::parse("file:/nonexistent/seq.txt"), InputError);

    std::istringstream text("# header\n1\n\n  -2\n# note\n30000000000000000000000\n");
    const auto seq = gfprime::cli::parse_sequence_text(text);
    REQUIRE(seq.size() == 3);
    CHECK(seq.at(2) == -2);
    CHECK(seq.at(3).get_str() == "30000000000000000000000");

    std::istringstream only_comments("# nothing\n\n");
    CHECK(gfprime::cli::parse_sequence_text(only_comments).empty());
}

TEST_CASE("sequence files") {
    const auto path = std::filesystem::temp_directory_path() / "gfprime_test_seq.txt";
    {
        std::ofstream out(path);
        out << "# primes with a leading one\n1\n2\n3\n5\n7\n11\n";
    }
    const auto r = invoke({"logsum", "--seq", "file:" + path.string(), "--n", "6"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).back().rfind("6\t380\t379\t379/6\tno", 0) == 0);
    {
        std::ofstream out(path);
        out << "# empty\n";
    }
    CHECK(invoke({"compositae", "--seq", "file:" + path.string(), "--n", "1"}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("compositae subcommand") {
    const auto r = invoke({"compositae", "--seq", "ones", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"1: 1", "2: 1 1", "3: 1 2 1", "4: 1 3 3 1"});

    const auto j = invoke({"compositae", "--seq", "primes1", "--n", "6", "--json"});
    CHECK(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["n"] == 6);
    CHECK(doc["rows"][5][1] == "43");
    CHECK(doc["rows"][5][5] == "1");

    const auto short_seq = invoke({"compositae", "--seq", "inline:1,1", "--n", "3"});
    CHECK(short_seq.code == 2);
    CHECK(short_seq.err.find("shorter") != std::string::npos);

    CHECK(invoke({"compositae", "--seq", "ones", "--n", "0"}).code == 2);
    CHECK(invoke({"compositae", "--n", "3"}).code == 2);
}

TEST_CASE("logsum subcommand") {
    const auto r = invoke({"logsum", "--seq", "ones", "--n", "10"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "m\tS\tU\tT\tT_integral");
    CHECK(rows[1] == "1\t1\t0\t-\t-");
    CHECK(rows[4] == "4\t15\t14\t7/2\tno");
    CHECK(rows[7] == "7\t127\t126\t18\tyes");

    const auto j = invoke({"--json", "logsum", "--seq", "fib-gf", "--n", "17"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["rows"][16]["S"] == "3571");
    CHECK(doc["rows"][0]["T"].is_null());
    CHECK(doc["rows"][10]["T"] == "18");
    CHECK(doc["rows"][10]["T_integral"] == true);
}

TEST_CASE("test subcommand exit codes") {
    auto r = invoke({"test", "--method", "lucas", "11"});
    CHECK(r.code == 0);
    CHECK(r.out == "probably-prime\n");
    r = invoke({"test", "--method", "fermat2", "341"});
    CHECK(r.code == 0);
    r = invoke({"test", "--method", "generic", "--seq", "ones", "6"});
    CHECK(r.code == 1);
    CHECK(r.out == "composite\n");
    r = invoke({"test", "--method", "generic", "--seq", "ones", "6", "--json"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["witness"] == "31/3");

    CHECK(invoke({"test", "--method", "lucas", "1"}).code == 2);
    CHECK(invoke({"test", "--method", "generic", "7"}).code == 2);
    CHECK(invoke({"test", "--method", "bogus", "7"}).code == 2);
    CHECK(invoke({"test", "--method", "lucas"}).code == 2);
    CHECK(invoke({"test", "--method", "lucas", "-3"}).code == 2);
    CHECK(invoke({}).code == 2);
}

TEST_CASE("scan subcommand") {
    auto r = invoke({"scan", "--method", "fermat2", "--max", "1000"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"341", "561", "645"});
    CHECK(r.err.find("3 composite") != std::string::npos);

    r = invoke({"scan", "--method", "lucas", "--max", "1000", "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json::array({705}));

    r = invoke({"scan", "--method", "generic", "--seq", "ones", "--max", "350"});
    CHECK(r.out == "341\n");

    CHECK(invoke({"scan", "--method", "lucas", "--max", "3"}).code == 2);
    CHECK(invoke({"scan", "--method", "generic", "--seq", "inline:1,1", "--max", "10"}).code == 2);
}

TEST_CASE("selfcheck subcommand is deterministic") {
    const auto a = invoke({"selfcheck", "--trials", "5", "--max", "20", "--seed", "7"});
    const auto b = invoke({"--seed", "7", "selfcheck", "--trials", "5", "--max", "20"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).back() == "result: pass");
    const auto c = invoke({"selfcheck", "--trials", "5", "--max", "20", "--seed", "8", "--json"});
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["pass"] == true);

    CHECK(invoke({"selfcheck", "--max", "41"}).code == 2);
    CHECK(invoke({"selfcheck", "--trials", "0"}).code == 2);
}
