#include "hurwitz/cli.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace hurwitz;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("quaternion literals") {
    CHECK(cli::parse_quat("[2,0,0,0]") == HurwitzInt::one());
    CHECK(cli::parse_quat(" [1, 1, 1, 1] ") == HurwitzInt::omega());
    CHECK(cli::parse_quat("[-3,-1,1,1]") == HurwitzInt::make(-3, -1, 1, 1));
    CHECK_THROWS_AS(cli::parse_quat("[1,0,0,0]"), ParityError);
    CHECK_THROWS_AS(cli::parse_quat("[1,0,0]"), ParseError);
    CHECK_THROWS_AS(cli::parse_quat("[1,0,0,0,0]"), ParseError);
    CHECK_THROWS_AS(cli::parse_quat("1,0,0,0"), ParseError);
    CHECK_THROWS_AS(cli::parse_quat("[a,0,0,0]"), ParseError);
    CHECK_THROWS_AS(cli::parse_quat("[2,,0,0]"), ParseError);
    CHECK_THROWS_AS(cli::parse_quat(""), ParseError);

    try {
        cli::parse_quat("[1,0,0,0]");
    } catch (const ParityError& e) {
        CHECK(std::string(e.what()).find("all even") != std::string::npos);
    }
}

TEST_CASE("permute reports the p = 3, Q = 1+i case") {
    const Result r = invoke({"permute", "--p", "3", "--Q", "[2,2,0,0]", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["sign"] == -1);
    CHECK(j["predicted_sign"] == -1);
    CHECK(j["fixed"] == 0);
    CHECK(j["predicted_fixed"] == 0);
    CHECK(j["cycle_lengths"] == nlohmann::json::array({4}));
    CHECK(j["pass"] == true);
    CHECK(j["Q"] == nlohmann::json::array({2, 2, 0, 0}));
    CHECK(j["ground"][0] == "1:1:1");
}

TEST_CASE("composite norm yields no prediction") {
    const Result r = invoke({"permute", "--p", "5", "--Q", "[4,4,0,0]", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["q"] == 8);
    CHECK(j["pass"].is_null());
    CHECK(j["predicted_sign"].is_null());
    CHECK(invoke({"predict", "--p", "5", "--Q", "[4,4,0,0]"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({"permute", "--p", "4", "--Q", "[2,0,0,0]"}).code == 2);
    CHECK(invoke({"permute", "--p", "2", "--Q", "[2,0,0,0]"}).code == 2);
    CHECK(invoke({"permute", "--p", "3", "--Q", "[1,0,0,0]"}).code == 2);
    CHECK(invoke({"permute", "--p", "3", "--Q", "[3,1,1,1]"}).code == 2);  // norm 3
    CHECK(invoke({"permute", "--p", "3"}).code == 2);
    CHECK(invoke({"verify", "bogus"}).code == 2);
    CHECK(invoke({"orders", "--p", "17"}).code == 2);
    CHECK(invoke({"primes", "--p", "x"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("listing commands") {
    const Result primes = invoke({"primes", "--p", "5", "--format", "json"});
    REQUIRE(primes.code == 0);
    const auto pj = nlohmann::json::parse(primes.out);
    CHECK(pj.size() == 6);
    CHECK(pj[0]["p"] == 5);
    CHECK(pj[0]["class_rep"].size() == 4);

    const Result conic = invoke({"conic", "--p", "3", "--format", "json"});
    REQUIRE(conic.code == 0);
    CHECK(nlohmann::json::parse(conic.out) == nlohmann::json::array({"1:1:1", "1:1:2", "1:2:1", "1:2:2"}));

    const Result orders = invoke({"orders", "--p", "3", "--format", "json"});
    REQUIRE(orders.code == 0);
    CHECK(nlohmann::json::parse(orders.out)["agree"] == true);

    const Result pred = invoke({"predict", "--p", "3", "--Q", "[4,6,0,0]", "--format", "json"});
    REQUIRE(pred.code == 0);
    CHECK(nlohmann::json::parse(pred.out)["fixed"] == 4);

    for (const char* cmd : {"primes", "conic", "orders"}) CHECK(invoke({cmd, "--p", "5"}).code == 0);
    CHECK(invoke({"permute", "--p", "5", "--Q", "[2,2,0,0]"}).code == 0);
}

TEST_CASE("verify subcommands") {
    const Result signs = invoke({"verify", "signs", "--p-max", "13", "--q-max", "13", "--format", "json"});
    CHECK(signs.code == 0);
    const auto j = nlohmann::json::parse(signs.out);
    CHECK(j["cases_failed"] == 0);
    CHECK(j["cases_run"].get<std::size_t>() > 0);
    CHECK_FALSE(j.contains("elapsed_seconds"));

    for (const std::string& check : check_names()) CHECK(invoke({"verify", check, "--p-max", "7", "--q-max", "5"}).code == 0);
    CHECK(invoke({"verify", "orders", "--p-max", "17"}).code == 2);
    CHECK(nlohmann::json::parse(invoke({"verify", "phi", "--format", "json", "--timing"}).out).contains("elapsed_seconds"));
}

TEST_CASE("json output is deterministic") {
    const std::vector<std::string> args{"verify", "oracle", "--p-max", "7", "--q-max", "7", "--format", "json", "--seed", "0"};
    CHECK(invoke(args).out == invoke(args).out);
    const std::vector<std::string> phi{"verify", "phi", "--format", "json", "--seed", "42"};
    CHECK(invoke(phi).out == invoke(phi).out);
}

TEST_CASE("failures are bounded in the report") {
    VerifyReport report;
    for (int n = 0; n < 50; ++n) report.record(n % 2 == 0, [n] { return std::to_string(n); });
    CHECK(report.cases_run == 50);
    CHECK(report.cases_failed == 25);
    CHECK(report.first_failures.size() == VerifyReport::kMaxFailures);
    CHECK(report.first_failures.front() == "1");
    CHECK_FALSE(report.ok());
}
