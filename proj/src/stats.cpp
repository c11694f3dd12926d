#include "coinchain/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coinchain/errors.hpp"

namespace coinchain {

StationaryReport report(const StationaryDistribution& stationary, const StateSpace& space,
                        int top_k) {
    const Eigen::VectorXd& p = stationary.probabilities;
    if (p.size() != space.size()) throw AlignmentError(p.size(), space.size());
    const Currency& currency = space.currency();
    const int k = currency.size();

    StationaryReport rep;
    rep.residual = stationary.residual;
    rep.state_count = space.size();
    rep.per_denomination = Eigen::VectorXd::Zero(k);
    rep.value_marginal = Eigen::VectorXd::Zero(currency.modulus);
    Eigen::VectorXd coins_by_value = Eigen::VectorXd::Zero(currency.modulus);

    for (int i = 0; i < space.size(); ++i) {
        const CoinMultiset& s = space.state(i);
        const int coins = coin_count(s);
        const int value = total_value(currency, s);
        rep.expected_coins += p[i] * coins;
        rep.expected_value_cents += p[i] * value;
        for (int d = 0; d < k; ++d) rep.per_denomination[d] += p[i] * s.counts[d];
        rep.value_marginal[value] += p[i];
        coins_by_value[value] += p[i] * coins;
    }

    rep.shares_percent = Eigen::VectorXd::Zero(k);
    if (rep.expected_coins > 0)
        rep.shares_percent = rep.per_denomination * (100.0 / rep.expected_coins);

    rep.conditional_expected_coins.resize(currency.modulus);
    for (int n = 0; n < currency.modulus; ++n)
        if (rep.value_marginal[n] > 0.0)
            rep.conditional_expected_coins[n] = coins_by_value[n] / rep.value_marginal[n];

    std::vector<int> order(space.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p[a] > p[b]; });
    const int take = std::min<int>(top_k, space.size());
    rep.top_states.reserve(take);
    for (int i = 0; i < take; ++i)
        rep.top_states.emplace_back(space.state(order[i]), p[order[i]]);
    return rep;
}

ReferenceDistribution us_mint_2014() {
    ReferenceDistribution ref;
    ref.label = "US-mint-2014";
    ref.shares_percent = Eigen::VectorXd(4);
    ref.shares_percent << 11.9, 17.4, 9.1, 61.6;
    return ref;
}

double distribution_distance(const Eigen::VectorXd& shares_percent,
                             const ReferenceDistribution& reference) {
    if (shares_percent.size() != reference.shares_percent.size())
        throw DimensionMismatch(shares_percent.size(), reference.shares_percent.size());
    return (shares_percent - reference.shares_percent).norm();
}

bool lower_bound_check(const StationaryReport& rep, const Currency& currency) {
    constexpr double eps = 1e-9;
    double weighted_minimum = 0.0;
    for (int n = 0; n < currency.modulus; ++n) {
        if (!rep.conditional_expected_coins[n]) continue;
        const int g = minimal_partition_size(n, currency);
        if (*rep.conditional_expected_coins[n] < g - eps) return false;
        weighted_minimum += rep.value_marginal[n] * g;
    }
    return rep.expected_coins >= weighted_minimum - eps;
}

nlohmann::json report_to_json(const StationaryReport& rep, const Currency& currency) {
    nlohmann::json j;
    j["expected_coins"] = rep.expected_coins;
    j["expected_value_cents"] = rep.expected_value_cents;
    j["per_denomination"] = std::vector<double>(
        rep.per_denomination.data(), rep.per_denomination.data() + rep.per_denomination.size());
    j["shares_percent"] = std::vector<double>(
        rep.shares_percent.data(), rep.shares_percent.data() + rep.shares_percent.size());
    nlohmann::json tops = nlohmann::json::array();
    for (const auto& [state, prob] : rep.top_states)
        tops.push_back({{"state", format_coins(currency, state)}, {"probability", prob}});
    j["top_states"] = std::move(tops);
    j["value_marginal"] = std::vector<double>(
        rep.value_marginal.data(), rep.value_marginal.data() + rep.value_marginal.size());
    nlohmann::json conditional = nlohmann::json::array();
    for (const auto& e : rep.conditional_expected_coins)
        conditional.push_back(e ? nlohmann::json(*e) : nlohmann::json(nullptr));
    j["conditional_expected_coins"] = std::move(conditional);
    j["residual"] = rep.residual;
    j["state_count"] = rep.state_count;
    return j;
}

}  // namespace coinchain
