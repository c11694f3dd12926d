#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "coinchain/cli.hpp"
#include "coinchain/errors.hpp"

using namespace coinchain;
using cli::RunConfig;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("resolve: defaults give the US big spender over all prices") {
    const auto rc = cli::resolve(RunConfig{});
    CHECK(rc.currency.str() == "25,10,5,1");
    CHECK(rc.spec.kind == StrategyKind::big_spender);
    CHECK(rc.prices.size() == 100);
    CHECK(rc.cashier == CashierMode::minimal_unique);
    CHECK_FALSE(rc.coin_keeper);
}

TEST_CASE("resolve: pennyless expands to a constrained big spender") {
    RunConfig config;
    config.strategy_name = "pennyless";
    const auto rc = cli::resolve(config);
    CHECK(rc.spec.kind == StrategyKind::big_spender);
    CHECK(rc.spec.constraints.forbids(1));
    CHECK(rc.prices.size() == 20);
    for (int c : rc.prices.prices) CHECK(c % 5 == 0);
}

TEST_CASE("resolve: quarter hoarder forbids and discards quarters") {
    RunConfig config;
    config.strategy_name = "quarter-hoarder";
    const auto rc = cli::resolve(config);
    CHECK(rc.spec.constraints.forbids(25));
    CHECK(rc.spec.discard_denominations == std::vector<int>{25});
}

TEST_CASE("resolve: pennies-first caps pennies at four") {
    RunConfig config;
    config.strategy_name = "pennies-first";
    const auto rc = cli::resolve(config);
    CHECK(rc.spec.constraints.cap_for(1) == 4);

    config.strategy_name = "pennies-separate";
    CHECK(cli::resolve(config).spec.kind == StrategyKind::pennies_separate);
    config.strategy_name = "heavy-spender";
    CHECK(cli::resolve(config).spec.kind == StrategyKind::heavy_spender);
    config.strategy_name = "minimalist";
    CHECK(cli::resolve(config).spec.kind == StrategyKind::minimalist);
}

TEST_CASE("resolve: diagnostics name the offending field") {
    RunConfig bad_strategy;
    bad_strategy.strategy_name = "spendthrift";
    CHECK_THROWS_WITH_AS(cli::resolve(bad_strategy),
                         doctest::Contains("unknown strategy"), ConfigError);

    RunConfig bad_prices;
    bad_prices.prices_text = "1,2,x";
    CHECK_THROWS_WITH_AS(cli::resolve(bad_prices), doctest::Contains("--prices"), ConfigError);

    RunConfig bad_format;
    bad_format.format = "xml";
    CHECK_THROWS_WITH_AS(cli::resolve(bad_format), doctest::Contains("format"), ConfigError);

    RunConfig bad_tolerance;
    bad_tolerance.tolerance = 0.0;
    CHECK_THROWS_WITH_AS(cli::resolve(bad_tolerance), doctest::Contains("--tolerance"),
                         ConfigError);
}

TEST_CASE("states command prints the count, and the list on request") {
    RunConfig config;
    config.currency_text = "50,25";
    config.prices_text = "0,25,50,75";
    std::ostringstream out, err;
    REQUIRE(cli::cmd_states(config, out, err) == 0);
    CHECK(out.str() == "6\n");

    config.list_states = true;
    std::ostringstream listed;
    REQUIRE(cli::cmd_states(config, listed, err) == 0);
    CHECK(listed.str() == "6\n{}\n{25}\n{50}\n{25,25}\n{50,25}\n{25,25,25}\n");
}

TEST_CASE("states command rejects the coin keeper") {
    RunConfig config;
    config.strategy_name = "coin-keeper";
    std::ostringstream out, err;
    CHECK(cli::cmd_states(config, out, err) != 0);
    CHECK(out.str().empty());
    CHECK(err.str().find("coin keeper") != std::string::npos);
}

TEST_CASE("analyze command reports the toy chain in JSON") {
    RunConfig config;
    config.currency_text = "50,25";
    config.prices_text = "0,25,50,75";
    config.format = "json";
    std::ostringstream out, err;
    REQUIRE(cli::cmd_analyze(config, out, err) == 0);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["expected_coins"].get<double>() == doctest::Approx(1.125).epsilon(1e-9));
    CHECK(j["expected_value_cents"].get<double>() == doctest::Approx(37.5).epsilon(1e-9));
    CHECK(j["state_count"] == 6);
    CHECK(j["strategy"] == "big-spender");
}

TEST_CASE("analyze refuses reducible chains without printing statistics") {
    RunConfig config;
    config.strategy_name = "minimalist";
    config.prices_text = "multiples-of-5";
    std::ostringstream out, err;
    CHECK(cli::cmd_analyze(config, out, err) != 0);
    CHECK(out.str().empty());
    CHECK(err.str().find("irreducible") != std::string::npos);
}

TEST_CASE("analyze surfaces config errors with a nonzero exit") {
    RunConfig config;
    config.currency_text = "25,25,1";
    std::ostringstream out, err;
    CHECK(cli::cmd_analyze(config, out, err) == 2);
    CHECK(out.str().empty());
    CHECK_FALSE(err.str().empty());
}

TEST_CASE("analyze runs the coin keeper tally") {
    RunConfig config;
    config.strategy_name = "coin-keeper";
    config.format = "json";
    std::ostringstream out, err;
    REQUIRE(cli::cmd_analyze(config, out, err) == 0);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["coins_per_transaction"][0].get<double>() == doctest::Approx(1.5));
    CHECK(j["coins_per_transaction"][3].get<double>() == doctest::Approx(2.0));
    CHECK(j["shares_percent"][0].get<double>() == doctest::Approx(31.9).epsilon(0.01));
}

TEST_CASE("matrix command writes identical files across runs") {
    RunConfig config;
    config.currency_text = "50,25";
    config.prices_text = "0,25,50,75";
    config.out_path = "toy_matrix_test.txt";
    std::ostringstream out, err;
    REQUIRE(cli::cmd_matrix(config, out, err) == 0);
    const std::string matrix_first = slurp("toy_matrix_test.txt");
    const std::string states_first = slurp("toy_matrix_test.txt.states");
    REQUIRE(cli::cmd_matrix(config, out, err) == 0);
    CHECK(slurp("toy_matrix_test.txt") == matrix_first);
    CHECK(slurp("toy_matrix_test.txt.states") == states_first);

    CHECK(matrix_first.substr(0, 26) == "dimension 6 denominator 4\n");
    // Header plus one line per nonzero entry.
    CHECK(std::count(matrix_first.begin(), matrix_first.end(), '\n') == 25);
    CHECK(states_first == "{}\n{25}\n{50}\n{25,25}\n{50,25}\n{25,25,25}\n");

    std::remove("toy_matrix_test.txt");
    std::remove("toy_matrix_test.txt.states");

    RunConfig no_out;
    std::ostringstream out2, err2;
    CHECK(cli::cmd_matrix(no_out, out2, err2) == 2);
}

TEST_CASE("analyze writes to --out instead of stdout") {
    RunConfig config;
    config.currency_text = "50,25";
    config.prices_text = "0,25,50,75";
    config.format = "json";
    std::ostringstream direct, err;
    REQUIRE(cli::cmd_analyze(config, direct, err) == 0);

    config.out_path = "toy_report_test.json";
    std::ostringstream out;
    REQUIRE(cli::cmd_analyze(config, out, err) == 0);
    CHECK(out.str().empty());
    CHECK(slurp("toy_report_test.json") == direct.str());
    std::remove("toy_report_test.json");
}

TEST_CASE("search command lists every minimizer") {
    std::ostringstream out, err;
    REQUIRE(cli::cmd_search(2, 100, out, err) == 0);
    CHECK(out.str().find("minimum average change 9 ") != std::string::npos);
    CHECK(out.str().find("10,1") != std::string::npos);
    CHECK(out.str().find("11,1") != std::string::npos);
}
