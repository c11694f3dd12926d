#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coinchain/chain.hpp"
#include "coinchain/currency.hpp"
#include "coinchain/wallet.hpp"

namespace coinchain {

/// Everything the stationary distribution tells us about the wallet.
struct StationaryReport {
    double expected_coins = 0.0;
    double expected_value_cents = 0.0;
    Eigen::VectorXd per_denomination;   // expected coins per denomination, descending order
    Eigen::VectorXd shares_percent;     // per-denomination share of all coins held
    std::vector<std::pair<CoinMultiset, double>> top_states;
    Eigen::VectorXd value_marginal;     // probability of each wallet total 0..modulus-1
    // e(n): expected coin count conditioned on wallet total n; absent for
    // totals the chain never holds.
    std::vector<std::optional<double>> conditional_expected_coins;
    double residual = 0.0;
    int state_count = 0;
};

/// Aggregates a stationary distribution over its state space.
/// Throws AlignmentError when the dimensions disagree.
StationaryReport report(const StationaryDistribution& stationary, const StateSpace& space,
                        int top_k = 5);

/// External coin distribution to compare against, in percentage shares.
struct ReferenceDistribution {
    std::string label;
    Eigen::VectorXd shares_percent;
};

/// Coins minted by the U.S. government in 2014 (quarters, dimes, nickels,
/// pennies), as percentage shares.
ReferenceDistribution us_mint_2014();

/// Euclidean distance between two share vectors, in percentage points.
double distribution_distance(const Eigen::VectorXd& shares_percent,
                             const ReferenceDistribution& reference);

/// Verifies e(n) >= g(n) - 1e-9 for every held total n, and that the expected
/// coin count is at least the marginal-weighted minimal average.
bool lower_bound_check(const StationaryReport& rep, const Currency& currency);

/// Machine-readable form of the report.
nlohmann::json report_to_json(const StationaryReport& rep, const Currency& currency);

}  // namespace coinchain
