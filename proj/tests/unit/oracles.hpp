#pragma once

// Brute-force reference implementations, deliberately independent of the
// library's dynamic programming paths. Exponential, so keep inputs small.

#include <algorithm>
#include <optional>
#include <vector>

#include "coinchain/currency.hpp"

namespace oracles {

using coinchain::CoinMultiset;
using coinchain::Currency;

// Every partition of `amount` into the currency's denominations, by plain
// recursion over non-increasing coin choices.
inline void all_partitions_rec(const Currency& currency, int amount, int from,
                               CoinMultiset& partial, std::vector<CoinMultiset>& out) {
    if (amount == 0) {
        out.push_back(partial);
        return;
    }
    for (int j = from; j < currency.size(); ++j) {
        const int d = currency.denominations[j];
        if (d > amount) continue;
        ++partial.counts[j];
        all_partitions_rec(currency, amount - d, j, partial, out);
        --partial.counts[j];
    }
}

inline std::vector<CoinMultiset> all_partitions(const Currency& currency, int amount) {
    std::vector<CoinMultiset> out;
    CoinMultiset partial(currency.size());
    all_partitions_rec(currency, amount, 0, partial, out);
    return out;
}

// Minimal partitions by filtering the full enumeration.
inline std::vector<CoinMultiset> minimal_partitions(const Currency& currency, int amount) {
    auto parts = all_partitions(currency, amount);
    if (parts.empty()) return parts;
    int best = coinchain::coin_count(parts.front());
    for (const auto& p : parts) best = std::min(best, coinchain::coin_count(p));
    std::vector<CoinMultiset> out;
    for (auto& p : parts)
        if (coinchain::coin_count(p) == best) out.push_back(std::move(p));
    std::sort(out.begin(), out.end(),
              [](const CoinMultiset& a, const CoinMultiset& b) { return a.counts > b.counts; });
    return out;
}

inline std::optional<int> minimal_partition_size(const Currency& currency, int amount) {
    const auto parts = minimal_partitions(currency, amount);
    if (parts.empty()) return std::nullopt;
    return coinchain::coin_count(parts.front());
}

// All sub-multisets of `wallet` achieving the minimum total >= price, by
// walking the full box of count choices.
inline std::vector<CoinMultiset> minimal_overpay_payments(const Currency& currency,
                                                          const CoinMultiset& wallet, int price) {
    std::vector<CoinMultiset> subsets;
    CoinMultiset partial(currency.size());
    const int k = currency.size();
    std::vector<int> choice(k, 0);
    while (true) {
        subsets.emplace_back(choice);
        int j = k - 1;
        while (j >= 0 && choice[j] == wallet.counts[j]) choice[j--] = 0;
        if (j < 0) break;
        ++choice[j];
    }
    int best_total = -1;
    for (const auto& s : subsets) {
        const int t = coinchain::total_value(currency, s);
        if (t < price) continue;
        if (best_total < 0 || t < best_total) best_total = t;
    }
    std::vector<CoinMultiset> out;
    for (auto& s : subsets)
        if (coinchain::total_value(currency, s) == best_total) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(),
              [](const CoinMultiset& a, const CoinMultiset& b) { return a.counts > b.counts; });
    return out;
}

}  // namespace oracles
