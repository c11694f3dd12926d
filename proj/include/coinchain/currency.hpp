#pragma once

#include <string>
#include <vector>

#include "coinchain/rational.hpp"

namespace coinchain {

/// A denomination system: coin values in strictly decreasing order plus the
/// price modulus (100 for cent-based currencies). Construction normalizes the
/// order and rejects duplicates, non-positive values, and values >= modulus.
struct Currency {
    std::vector<int> denominations;
    int modulus = 100;

    Currency(std::vector<int> denoms, int modulus = 100);

    int size() const { return static_cast<int>(denominations.size()); }

    /// Position of a denomination value, or -1 if absent.
    int index_of(int denomination) const;

    /// Comma-separated descending values, e.g. "25,18,5,1".
    std::string str() const;

    /// Parses the textual form accepted by the CLI ("25,18,5,1").
    static Currency parse(const std::string& text, int modulus = 100);

    bool operator==(const Currency& o) const = default;
};

/// Count-per-denomination vector aligned with a Currency's denomination order.
/// Represents wallets, payments, and change alike.
struct CoinMultiset {
    std::vector<int> counts;

    CoinMultiset() = default;
    explicit CoinMultiset(std::vector<int> counts) : counts(std::move(counts)) {}
    explicit CoinMultiset(int num_denominations) : counts(num_denominations, 0) {}

    bool empty() const;

    bool operator==(const CoinMultiset& o) const = default;
};

int total_value(const Currency& currency, const CoinMultiset& coins);
int coin_count(const CoinMultiset& coins);

/// "{25,10,1,1}" — coin values descending, "{}" when empty.
std::string format_coins(const Currency& currency, const CoinMultiset& coins);

/// Builds a multiset from explicit coin values, e.g. {25, 10, 1, 1}.
CoinMultiset coins_from_values(const Currency& currency, const std::vector<int>& values);

/// Partition of `amount` built by repeatedly taking the largest denomination
/// that fits. Throws UnrepresentableAmount when the recursion strands a
/// positive residue below every denomination.
CoinMultiset greedy_partition(int amount, const Currency& currency);

/// Fewest coins needed to represent `amount` with unlimited coin supply.
/// Throws UnrepresentableAmount.
int minimal_partition_size(int amount, const Currency& currency);

/// All partitions of `amount` that achieve the minimal coin count, ordered
/// with larger-coin multisets first. Non-empty; every member has the same
/// cardinality. Throws UnrepresentableAmount.
std::vector<CoinMultiset> minimal_partitions(int amount, const Currency& currency);

struct CanonicityResult {
    bool canonical = true;
    int counterexample = -1;  // least failing amount when !canonical
};

/// Bounded brute-force check that the greedy partition is minimal for every
/// amount 0..bound. Amounts representable by neither route are vacuous.
CanonicityResult is_greedy_canonical(const Currency& currency, int bound);

/// (1/modulus) * sum of g(n) for n in 0..modulus-1, exactly.
Rational average_change_coins(const Currency& currency);

struct CurrencySearchResult {
    Rational best_average;
    std::vector<Currency> minimizers;  // lexicographically ascending tuples

    const Currency& best() const { return minimizers.front(); }
};

/// Exhaustive scan over all strictly decreasing denomination tuples with
/// smallest denomination 1, minimizing average_change_coins.
CurrencySearchResult search_min_average_currency(int num_denominations, int modulus);

}  // namespace coinchain
