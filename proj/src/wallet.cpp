#include "coinchain/wallet.hpp"

#include <algorithm>

#include "coinchain/errors.hpp"

namespace coinchain {

int WalletConstraints::resolved_max_total(const Currency& currency) const {
    return max_total_value.value_or(currency.modulus - 1);
}

bool WalletConstraints::forbids(int denomination) const {
    return std::find(forbidden_denominations.begin(), forbidden_denominations.end(),
                     denomination) != forbidden_denominations.end();
}

std::optional<int> WalletConstraints::cap_for(int denomination) const {
    for (const auto& [denom, cap] : count_caps)
        if (denom == denomination) return cap;
    return std::nullopt;
}

void WalletConstraints::validate(const Currency& currency) const {
    if (max_total_value && *max_total_value >= currency.modulus)
        throw ConfigError("max wallet total " + std::to_string(*max_total_value) +
                          " must be below the modulus; heavier states are transient");
    if (max_total_value && *max_total_value < 0)
        throw ConfigError("max wallet total cannot be negative");
    for (int d : forbidden_denominations)
        if (currency.index_of(d) < 0)
            throw ConfigError("forbidden denomination " + std::to_string(d) +
                              " is not part of currency {" + currency.str() + "}");
    for (const auto& [denom, cap] : count_caps) {
        if (currency.index_of(denom) < 0)
            throw ConfigError("capped denomination " + std::to_string(denom) +
                              " is not part of currency {" + currency.str() + "}");
        if (cap < 0) throw ConfigError("negative count cap for denomination " +
                                       std::to_string(denom));
    }
}

bool WalletConstraints::admits(const Currency& currency, const CoinMultiset& coins) const {
    if (total_value(currency, coins) > resolved_max_total(currency)) return false;
    for (int i = 0; i < currency.size(); ++i) {
        const int d = currency.denominations[i];
        if (coins.counts[i] > 0 && forbids(d)) return false;
        if (const auto cap = cap_for(d); cap && coins.counts[i] > *cap) return false;
    }
    return true;
}

bool canonical_state_less(const Currency& currency, const CoinMultiset& a, const CoinMultiset& b) {
    const int va = total_value(currency, a);
    const int vb = total_value(currency, b);
    if (va != vb) return va < vb;
    return a.counts > b.counts;
}

StateSpace::StateSpace(Currency currency, std::vector<CoinMultiset> states)
    : currency_(std::move(currency)), states_(std::move(states)) {
    std::sort(states_.begin(), states_.end(), [this](const CoinMultiset& a, const CoinMultiset& b) {
        return canonical_state_less(currency_, a, b);
    });
    states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
    index_.reserve(states_.size());
    for (int i = 0; i < size(); ++i) index_.emplace(states_[i].counts, i);
}

int StateSpace::index_of(const CoinMultiset& coins) const {
    const auto it = index_.find(coins.counts);
    return it == index_.end() ? -1 : it->second;
}

namespace {

void enumerate_rec(const Currency& currency, const std::vector<int>& caps, int denom_index,
                   int budget, CoinMultiset& partial, std::vector<CoinMultiset>& out) {
    if (denom_index == currency.size()) {
        out.push_back(partial);
        return;
    }
    const int d = currency.denominations[denom_index];
    const int max_count = std::min(caps[denom_index], budget / d);
    for (int c = 0; c <= max_count; ++c) {
        partial.counts[denom_index] = c;
        enumerate_rec(currency, caps, denom_index + 1, budget - c * d, partial, out);
    }
    partial.counts[denom_index] = 0;
}

}  // namespace

StateSpace enumerate_states(const Currency& currency, const WalletConstraints& constraints) {
    constraints.validate(currency);
    const int budget = constraints.resolved_max_total(currency);
    std::vector<int> caps(currency.size());
    for (int i = 0; i < currency.size(); ++i) {
        const int d = currency.denominations[i];
        int cap = budget / d;
        if (constraints.forbids(d)) cap = 0;
        if (const auto explicit_cap = constraints.cap_for(d)) cap = std::min(cap, *explicit_cap);
        caps[i] = cap;
    }
    std::vector<CoinMultiset> states;
    CoinMultiset partial(currency.size());
    enumerate_rec(currency, caps, 0, budget, partial, states);
    return StateSpace(currency, std::move(states));
}

}  // namespace coinchain
