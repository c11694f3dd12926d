#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coinchain/cashier.hpp"
#include "coinchain/currency.hpp"
#include "coinchain/wallet.hpp"

namespace coinchain {

enum class StrategyKind {
    minimalist,       // wallet becomes the cashier's partition of its own value
    big_spender,      // overpay as little as possible, ties toward bigger coins
    pennies_first,    // pay price mod 5 in pennies when possible, then big-spend
    pennies_separate, // independent penny component + big-spending remainder
    heavy_spender,    // big spender variant breaking ties toward more coins
};

std::string to_string(StrategyKind kind);

/// A spender algorithm plus the wallet constraints it maintains. Pennyless
/// and quarter-hoarder behaviour is expressed through the constraints and the
/// discard list rather than separate kinds.
struct StrategySpec {
    StrategyKind kind = StrategyKind::big_spender;
    WalletConstraints constraints;
    std::vector<int> discard_denominations;  // stripped from incoming change

    /// Checks internal consistency: discards must be forbidden, the penny
    /// strategies need a 1-denomination that is not forbidden.
    void validate(const Currency& currency) const;
};

/// Exact distribution over post-transaction wallets.
struct TransactionOutcome {
    std::vector<std::pair<CoinMultiset, Rational>> outcomes;
};

/// All sub-multisets of `wallet` whose total is the minimum total >= price
/// achievable from the wallet. Computed by dynamic programming over
/// denomination counts; never enumerates subsets. Ordered larger-coin
/// multisets first. Throws InsufficientFunds when the wallet cannot cover
/// the price.
std::vector<CoinMultiset> minimal_overpay_payments(const Currency& currency,
                                                   const CoinMultiset& wallet, int price);

enum class TieRule { favor_big_coins, favor_many_coins };

/// Picks one payment from equal-total candidates. favor_big_coins takes the
/// lexicographically greatest descending coin sequence; favor_many_coins takes
/// the largest cardinality, falling back to favor_big_coins among ties.
CoinMultiset tie_break(const std::vector<CoinMultiset>& candidates, TieRule rule);

/// One transaction at the given price. Outcome wallets are checked against the
/// spec's constraints (ConstraintViolation flags an inconsistent
/// strategy/currency pairing). Probabilities are exact and sum to 1.
TransactionOutcome transact(const Currency& currency, const CoinMultiset& wallet, int price,
                            const StrategySpec& spec, CashierMode cashier);

/// Expected coins received per transaction, per denomination, for a spender
/// who never spends coins: cashier change tallied over the price set.
std::vector<Rational> coin_keeper_tally(const Currency& currency, CashierMode cashier,
                                        const std::vector<int>& prices);

/// Tally over the full price range 0..modulus-1.
std::vector<Rational> coin_keeper_tally(const Currency& currency, CashierMode cashier);

}  // namespace coinchain
