#include "doctest.h"

#include "horadam/cli.hpp"

#include "json.hpp"

#include <sstream>

using horadam::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gf subcommand") {
    auto r = run({"gf", "--preset", "fibonacci", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "reduced: x / (1 - x - x^2)"));

    r = run({"gf", "--a", "0", "--b", "1", "--p", "2", "--q", "1", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "reduced: x / (1 - 2*x - x^2)"));

    r = run({"gf", "--symbolic", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "reduced: (a + b*x - a*p*x) / (1 - p*x - q*x^2)"));

    r = run({"gf", "--preset", "pell", "--k", "2", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["k"] == 2);
    CHECK(j.contains("reduced_den"));

    // Byte-deterministic output.
    CHECK(run({"gf", "--preset", "lucas", "--k", "4"}).out == run({"gf", "--preset", "lucas", "--k", "4"}).out);
}

TEST_CASE("series subcommand") {
    CHECK(run({"series", "--preset", "fibonacci", "--k", "2", "--n", "7"}).out == "0 1 1 4 9 25 64\n");
    CHECK(run({"series", "--preset", "lucas", "--k", "1", "--n", "6"}).out == "2 1 3 4 7 11\n");
    CHECK(run({"series", "--preset", "fibonacci", "--k", "1", "--n", "1"}).out == "0\n");
    CHECK(run({"series", "--a", "1", "--b", "1/2", "--p", "1", "--q", "1", "--n", "3"}).out == "1 1/2 3/2\n");

    auto r = run({"series", "--preset", "pell", "--k", "3", "--n", "10", "--oracle"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\nmatch\n"));

    r = run({"series", "--preset", "chebyshev-u", "--k", "1", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "0: 1\n1: 2*t\n2: -1 + 4*t^2\n");

    r = run({"series", "--preset", "lucas", "--n", "4", "--oracle", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["match"] == true);
    CHECK(j["coefficients"] == nlohmann::json::array({"2", "1", "3", "4"}));

    CHECK(run({"series", "--preset", "lucas", "--n", "0"}).code == 1);
}

TEST_CASE("eval subcommand") {
    CHECK(run({"eval", "--preset", "fibonacci", "--k", "4", "--x", "1/100"}).out == "31986700/3161716833\n");
    CHECK(run({"eval", "--preset", "fibonacci", "--k", "1", "--x", "0"}).out == "0\n");
    // Oracle-confirmed value; the printed table lists 794640700/96940301.
    CHECK(run({"eval", "--preset", "lucas", "--k", "3", "--x", "1/100"}).out == "776760100/96940301\n");

    auto pole = run({"eval", "--a", "1", "--b", "1", "--p", "1", "--q", "0", "--x", "1"});
    CHECK(pole.code != 0);
    CHECK(contains(pole.err, "pole"));

    CHECK(run({"eval", "--preset", "chebyshev-u", "--x", "1/2"}).code != 0);
    CHECK(run({"eval", "--preset", "pell"}).code == 1);
    CHECK(run({"eval", "--preset", "pell", "--x", "1/0"}).code == 1);
}

TEST_CASE("verify subcommand") {
    auto r = run({"verify", "--only", "corollary"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "summary: 3 PASS, 1 ERRATUM, 0 FAIL"));

    r = run({"verify", "--only", "corollary", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 4);
    CHECK(j[1]["status"] == "ERRATUM");

    CHECK(run({"verify", "--only", "nonsense"}).code == 1);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"gf"}).code == 1);
    CHECK(run({"gf", "--preset", "fibonacci", "--symbolic"}).code == 1);
    CHECK(run({"gf", "--preset", "nope"}).code == 1);
    CHECK(run({"gf", "--a", "1", "--b", "2"}).code == 1);
    CHECK(run({"gf", "--preset", "pell", "--k", "0"}).code == 1);
    CHECK(run({"gf", "--a", "x", "--b", "1", "--p", "1", "--q", "1"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"gf", "--help"}).code == 0);
}
