#include "coinchain/cashier.hpp"

#include "coinchain/errors.hpp"

namespace coinchain {

std::string to_string(CashierMode mode) {
    switch (mode) {
        case CashierMode::greedy: return "greedy";
        case CashierMode::minimal_unique: return "minimal-unique";
        case CashierMode::minimal_split: return "minimal-split";
    }
    return "?";
}

CashierMode parse_cashier_mode(const std::string& name) {
    if (name == "greedy") return CashierMode::greedy;
    if (name == "minimal-unique") return CashierMode::minimal_unique;
    if (name == "minimal-split") return CashierMode::minimal_split;
    throw ConfigError("unknown cashier mode '" + name +
                      "' (expected greedy, minimal-unique, or minimal-split)");
}

ChangeDistribution make_change(int amount, const Currency& currency, CashierMode mode) {
    ChangeDistribution dist;
    if (mode == CashierMode::greedy) {
        dist.outcomes.emplace_back(greedy_partition(amount, currency), Rational(1));
        return dist;
    }
    auto partitions = minimal_partitions(amount, currency);
    if (mode == CashierMode::minimal_unique && partitions.size() > 1)
        throw AmbiguousChange(amount);
    const Rational share(1, static_cast<long long>(partitions.size()));
    dist.outcomes.reserve(partitions.size());
    for (auto& p : partitions) dist.outcomes.emplace_back(std::move(p), share);
    return dist;
}

}  // namespace coinchain
