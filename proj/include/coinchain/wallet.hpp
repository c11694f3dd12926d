#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coinchain/currency.hpp"

namespace coinchain {

/// Admissibility constraints on wallet states.
///
/// max_total_value defaults to modulus-1: any heavier wallet is transient
/// under the bounded-spending strategies. Forbidden denominations can never
/// be held (pennyless purchaser, quarter hoarder); per-denomination caps
/// bound individual counts (pennies-first carries at most 4 pennies).
struct WalletConstraints {
    std::optional<int> max_total_value;            // resolved to modulus-1 when unset
    std::vector<int> forbidden_denominations;      // denomination values
    std::vector<std::pair<int, int>> count_caps;   // (denomination value, max count)

    int resolved_max_total(const Currency& currency) const;
    bool forbids(int denomination) const;
    std::optional<int> cap_for(int denomination) const;

    /// Throws ConfigError if a named denomination is not part of the currency
    /// or the total cap is not below the modulus.
    void validate(const Currency& currency) const;

    /// True when `coins` satisfies every constraint.
    bool admits(const Currency& currency, const CoinMultiset& coins) const;
};

/// Comparator for the canonical state order: total value ascending, then
/// count vectors lexicographically descending (largest denomination first),
/// so greedy-style states precede penny-heavy ones of equal value.
bool canonical_state_less(const Currency& currency, const CoinMultiset& a, const CoinMultiset& b);

/// Ordered, indexed enumeration of admissible wallet states. Immutable after
/// construction and safe to share across threads.
class StateSpace {
public:
    StateSpace(Currency currency, std::vector<CoinMultiset> states);

    const Currency& currency() const { return currency_; }
    const std::vector<CoinMultiset>& states() const { return states_; }
    const CoinMultiset& state(int i) const { return states_[i]; }
    int size() const { return static_cast<int>(states_.size()); }

    /// Position of a state, or -1 when it is not part of the space.
    int index_of(const CoinMultiset& coins) const;

private:
    struct CountsHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    Currency currency_;
    std::vector<CoinMultiset> states_;
    std::unordered_map<std::vector<int>, int, CountsHash> index_;
};

/// All wallet states satisfying the constraints, in canonical order.
StateSpace enumerate_states(const Currency& currency, const WalletConstraints& constraints);

}  // namespace coinchain
