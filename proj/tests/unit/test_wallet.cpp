#include <doctest.h>

#include "coinchain/errors.hpp"
#include "coinchain/wallet.hpp"

using namespace coinchain;

namespace {
const Currency us({25, 10, 5, 1});
const Currency toy({50, 25});
}  // namespace

TEST_CASE("toy state space comes out in canonical order") {
    const StateSpace space = enumerate_states(toy, {});
    REQUIRE(space.size() == 6);
    CHECK(space.state(0) == coins_from_values(toy, {}));
    CHECK(space.state(1) == coins_from_values(toy, {25}));
    CHECK(space.state(2) == coins_from_values(toy, {50}));
    CHECK(space.state(3) == coins_from_values(toy, {25, 25}));
    CHECK(space.state(4) == coins_from_values(toy, {50, 25}));
    CHECK(space.state(5) == coins_from_values(toy, {25, 25, 25}));
    for (int i = 0; i < space.size(); ++i) CHECK(space.index_of(space.state(i)) == i);
    CHECK(space.index_of(coins_from_values(toy, {50, 50})) == -1);
}

TEST_CASE("state counts for the US strategies") {
    CHECK(enumerate_states(us, {}).size() == 6720);

    WalletConstraints penny_cap;
    penny_cap.count_caps.emplace_back(1, 4);
    CHECK(enumerate_states(us, penny_cap).size() == 1065);

    WalletConstraints no_quarters;
    no_quarters.forbidden_denominations.push_back(25);
    CHECK(enumerate_states(us, no_quarters).size() == 4125);

    WalletConstraints no_pennies;
    no_pennies.forbidden_denominations.push_back(1);
    CHECK(enumerate_states(us, no_pennies).size() == 213);

    CHECK(enumerate_states(Currency({25, 18, 5, 1}), {}).size() == 4238);
}

TEST_CASE("enumeration count matches the box-product filter") {
    // Count by filtering the full product of per-denomination ranges instead.
    int count = 0;
    for (int q = 0; q <= 3; ++q)
        for (int d = 0; d <= 9; ++d)
            for (int n = 0; n <= 19; ++n)
                for (int p = 0; p <= 99; ++p)
                    if (25 * q + 10 * d + 5 * n + p <= 99) ++count;
    CHECK(count == 6720);
    CHECK(enumerate_states(us, {}).size() == count);
}

TEST_CASE("enumeration is deterministic") {
    const StateSpace a = enumerate_states(us, {});
    const StateSpace b = enumerate_states(us, {});
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) CHECK(a.state(i) == b.state(i));
}

TEST_CASE("canonical order sorts by value, then larger coins first") {
    CHECK(canonical_state_less(us, coins_from_values(us, {}), coins_from_values(us, {1})));
    CHECK(canonical_state_less(us, coins_from_values(us, {25}), coins_from_values(us, {10, 10, 10})));
    // Equal value 50: {25,25} precedes {25,10,10,5} precedes {10,10,10,10,10}.
    CHECK(canonical_state_less(us, coins_from_values(us, {25, 25}),
                               coins_from_values(us, {25, 10, 10, 5})));
    CHECK(canonical_state_less(us, coins_from_values(us, {25, 10, 10, 5}),
                               coins_from_values(us, {10, 10, 10, 10, 10})));
}

TEST_CASE("constraints validate against the currency") {
    WalletConstraints bad_forbidden;
    bad_forbidden.forbidden_denominations.push_back(50);
    CHECK_THROWS_AS(enumerate_states(us, bad_forbidden), ConfigError);

    WalletConstraints bad_total;
    bad_total.max_total_value = 100;
    CHECK_THROWS_AS(enumerate_states(us, bad_total), ConfigError);

    WalletConstraints bad_cap;
    bad_cap.count_caps.emplace_back(3, 2);
    CHECK_THROWS_AS(enumerate_states(us, bad_cap), ConfigError);
}

TEST_CASE("admits checks totals, forbidden coins, and caps") {
    WalletConstraints constraints;
    constraints.max_total_value = 50;
    constraints.forbidden_denominations.push_back(25);
    constraints.count_caps.emplace_back(1, 4);
    CHECK(constraints.admits(us, coins_from_values(us, {10, 10, 1, 1})));
    CHECK_FALSE(constraints.admits(us, coins_from_values(us, {25})));
    CHECK_FALSE(constraints.admits(us, coins_from_values(us, {1, 1, 1, 1, 1})));
    CHECK_FALSE(constraints.admits(us, coins_from_values(us, {10, 10, 10, 10, 10, 5})));
}

TEST_CASE("state formatting") {
    CHECK(format_coins(us, coins_from_values(us, {})) == "{}");
    CHECK(format_coins(us, coins_from_values(us, {25, 10, 1, 1})) == "{25,10,1,1}");
    CHECK(format_coins(toy, coins_from_values(toy, {50, 25})) == "{50,25}");
    CHECK(total_value(us, coins_from_values(us, {25, 10, 1, 1})) == 37);
    CHECK(total_value(toy, coins_from_values(toy, {50, 25})) == 75);
    CHECK(total_value(us, CoinMultiset(4)) == 0);
}
