#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coinchain/currency.hpp"
#include "coinchain/rational.hpp"

namespace coinchain {

/// How the register makes change.
///   greedy         — always the greedy partition (sound for canonical currencies)
///   minimal_unique — the minimal partition, erroring out when it is not unique
///   minimal_split  — uniform probability over all minimal partitions
enum class CashierMode { greedy, minimal_unique, minimal_split };

std::string to_string(CashierMode mode);
CashierMode parse_cashier_mode(const std::string& name);

/// Exact distribution over the coin sets a cashier may hand back.
/// Probabilities are positive and sum to exactly 1; every outcome carries the
/// same total value. Outcomes are ordered larger-coin multisets first.
struct ChangeDistribution {
    std::vector<std::pair<CoinMultiset, Rational>> outcomes;
};

/// Change for `amount` under the given rule. Throws UnrepresentableAmount,
/// and AmbiguousChange in minimal_unique mode when ties exist.
ChangeDistribution make_change(int amount, const Currency& currency, CashierMode mode);

}  // namespace coinchain
