#include "coinchain/strategy.hpp"

#include <algorithm>
#include <map>

#include "coinchain/errors.hpp"

namespace coinchain {

std::string to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::minimalist: return "minimalist";
        case StrategyKind::big_spender: return "big-spender";
        case StrategyKind::pennies_first: return "pennies-first";
        case StrategyKind::pennies_separate: return "pennies-separate";
        case StrategyKind::heavy_spender: return "heavy-spender";
    }
    return "?";
}

void StrategySpec::validate(const Currency& currency) const {
    constraints.validate(currency);
    for (int d : discard_denominations) {
        if (currency.index_of(d) < 0)
            throw ConfigError("discard denomination " + std::to_string(d) +
                              " is not part of currency {" + currency.str() + "}");
        if (!constraints.forbids(d))
            throw ConfigError("discarded denomination " + std::to_string(d) +
                              " must also be forbidden in the wallet");
    }
    if (kind == StrategyKind::pennies_first || kind == StrategyKind::pennies_separate) {
        if (currency.index_of(1) < 0)
            throw ConfigError(to_string(kind) + " requires a 1-cent denomination");
        if (constraints.forbids(1))
            throw ConfigError(to_string(kind) + " cannot run with pennies forbidden");
    }
}

namespace {

// feasible[j][t]: denominations j..k-1, limited to the wallet's counts, can
// pay exactly t. The bounded counts are handled by tracking, per amount, the
// fewest coins of denomination j needed to reach it, which keeps each row
// linear in the amount range.
std::vector<std::vector<char>> suffix_feasible(const Currency& currency,
                                               const CoinMultiset& wallet, int up_to) {
    const int k = currency.size();
    std::vector<std::vector<char>> feasible(k + 1, std::vector<char>(up_to + 1, 0));
    feasible[k][0] = 1;
    std::vector<int> used(up_to + 1);
    for (int j = k - 1; j >= 0; --j) {
        const int d = currency.denominations[j];
        const int have = wallet.counts[j];
        for (int t = 0; t <= up_to; ++t) {
            if (feasible[j + 1][t]) used[t] = 0;
            else if (t >= d && used[t - d] >= 0 && used[t - d] < have) used[t] = used[t - d] + 1;
            else used[t] = -1;
            feasible[j][t] = used[t] >= 0;
        }
    }
    return feasible;
}

void collect_payments(const Currency& currency, const CoinMultiset& wallet,
                      const std::vector<std::vector<char>>& feasible, int j, int t,
                      CoinMultiset& partial, std::vector<CoinMultiset>& out) {
    if (j == currency.size()) {
        out.push_back(partial);
        return;
    }
    const int d = currency.denominations[j];
    for (int c = std::min(wallet.counts[j], t / d); c >= 0; --c) {
        if (!feasible[j + 1][t - c * d]) continue;
        partial.counts[j] = c;
        collect_payments(currency, wallet, feasible, j + 1, t - c * d, partial, out);
        partial.counts[j] = 0;
    }
}

CoinMultiset add(const CoinMultiset& a, const CoinMultiset& b) {
    CoinMultiset out = a;
    for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += b.counts[i];
    return out;
}

CoinMultiset subtract(const CoinMultiset& a, const CoinMultiset& b) {
    CoinMultiset out = a;
    for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] -= b.counts[i];
    return out;
}

}  // namespace

std::vector<CoinMultiset> minimal_overpay_payments(const Currency& currency,
                                                   const CoinMultiset& wallet, int price) {
    const int wallet_total = total_value(currency, wallet);
    if (price < 0 || wallet_total < price) throw InsufficientFunds(wallet_total, price);

    const auto feasible = suffix_feasible(currency, wallet, wallet_total);
    int target = price;
    while (!feasible[0][target]) ++target;  // wallet_total is always feasible

    std::vector<CoinMultiset> out;
    CoinMultiset partial(currency.size());
    collect_payments(currency, wallet, feasible, 0, target, partial, out);
    return out;
}

CoinMultiset tie_break(const std::vector<CoinMultiset>& candidates, TieRule rule) {
    const CoinMultiset* best = &candidates.front();
    for (const auto& c : candidates) {
        if (rule == TieRule::favor_many_coins) {
            const int nc = coin_count(c);
            const int nb = coin_count(*best);
            if (nc != nb) {
                if (nc > nb) best = &c;
                continue;
            }
        }
        // Count vectors ordered largest denomination first, so lexicographic
        // comparison matches comparing descending coin sequences.
        if (c.counts > best->counts) best = &c;
    }
    return *best;
}

namespace {

struct Payment {
    CoinMultiset kept;      // wallet after handing over the coins
    int change_amount = 0;  // cash value the register owes back
};

Payment big_spender_payment(const Currency& currency, const CoinMultiset& wallet, int price,
                            TieRule rule) {
    const int wallet_total = total_value(currency, wallet);
    if (wallet_total < price) {
        // Pay with bills only; the register returns change on the full modulus.
        return {wallet, (currency.modulus - price) % currency.modulus};
    }
    const auto payments = minimal_overpay_payments(currency, wallet, price);
    const CoinMultiset chosen = tie_break(payments, rule);
    return {subtract(wallet, chosen), total_value(currency, chosen) - price};
}

void append_change_outcomes(const Currency& currency, const Payment& payment,
                            const StrategySpec& spec, CashierMode cashier,
                            std::vector<std::pair<CoinMultiset, Rational>>& out) {
    const ChangeDistribution change = make_change(payment.change_amount, currency, cashier);
    for (const auto& [coins, prob] : change.outcomes) {
        CoinMultiset received = coins;
        for (int d : spec.discard_denominations) received.counts[currency.index_of(d)] = 0;
        out.emplace_back(add(payment.kept, received), prob);
    }
}

}  // namespace

TransactionOutcome transact(const Currency& currency, const CoinMultiset& wallet, int price,
                            const StrategySpec& spec, CashierMode cashier) {
    if (price < 0 || price >= currency.modulus)
        throw ConfigError("price " + std::to_string(price) + " is outside 0.." +
                          std::to_string(currency.modulus - 1));

    std::vector<std::pair<CoinMultiset, Rational>> raw;
    switch (spec.kind) {
        case StrategyKind::minimalist: {
            const int value = total_value(currency, wallet);
            const int next = ((value - price) % currency.modulus + currency.modulus) %
                             currency.modulus;
            for (const auto& [coins, prob] : make_change(next, currency, cashier).outcomes)
                raw.emplace_back(coins, prob);
            break;
        }
        case StrategyKind::big_spender:
        case StrategyKind::heavy_spender: {
            const TieRule rule = spec.kind == StrategyKind::heavy_spender
                                     ? TieRule::favor_many_coins
                                     : TieRule::favor_big_coins;
            append_change_outcomes(currency, big_spender_payment(currency, wallet, price, rule),
                                   spec, cashier, raw);
            break;
        }
        case StrategyKind::pennies_first: {
            const int penny = currency.index_of(1);
            const int r = price % 5;
            if (wallet.counts[penny] >= r) {
                CoinMultiset reduced = wallet;
                reduced.counts[penny] -= r;
                append_change_outcomes(
                    currency, big_spender_payment(currency, reduced, price - r,
                                                  TieRule::favor_big_coins),
                    spec, cashier, raw);
            } else {
                append_change_outcomes(
                    currency, big_spender_payment(currency, wallet, price,
                                                  TieRule::favor_big_coins),
                    spec, cashier, raw);
            }
            break;
        }
        case StrategyKind::pennies_separate: {
            const int penny = currency.index_of(1);
            const int r = price % 5;
            // The penny holder settles price mod 5 on his own: pay r pennies
            // if he has them, otherwise take 5 - r pennies from the register.
            const int pennies = wallet.counts[penny];
            const int pennies_after = pennies >= r ? pennies - r : pennies + 5 - r;
            CoinMultiset non_penny = wallet;
            non_penny.counts[penny] = 0;
            append_change_outcomes(
                currency, big_spender_payment(currency, non_penny, price - r,
                                              TieRule::favor_big_coins),
                spec, cashier, raw);
            for (auto& [coins, prob] : raw) coins.counts[penny] += pennies_after;
            break;
        }
    }

    // Merge duplicate targets (possible once discards strip change) and fix a
    // deterministic order.
    std::map<std::vector<int>, Rational, std::greater<std::vector<int>>> merged;
    for (auto& [coins, prob] : raw) {
        auto [it, inserted] = merged.emplace(std::move(coins.counts), prob);
        if (!inserted) it->second += prob;
    }
    TransactionOutcome outcome;
    outcome.outcomes.reserve(merged.size());
    for (auto& [counts, prob] : merged)
        outcome.outcomes.emplace_back(CoinMultiset(counts), prob);

    Rational total_prob(0);
    for (const auto& [coins, prob] : outcome.outcomes) {
        total_prob += prob;
        if (!spec.constraints.admits(currency, coins))
            throw ConstraintViolation(
                "transaction from " + format_coins(currency, wallet) + " at price " +
                std::to_string(price) + " produced inadmissible wallet " +
                format_coins(currency, coins) + " under " + to_string(spec.kind));
    }
    if (total_prob != Rational(1))
        throw Error("outcome probabilities sum to " + total_prob.str());
    return outcome;
}

std::vector<Rational> coin_keeper_tally(const Currency& currency, CashierMode cashier,
                                        const std::vector<int>& prices) {
    if (prices.empty()) throw ConfigError("empty price set");
    std::vector<Rational> totals(currency.size(), Rational(0));
    for (int price : prices) {
        if (price < 0 || price >= currency.modulus)
            throw ConfigError("price " + std::to_string(price) + " is outside 0.." +
                              std::to_string(currency.modulus - 1));
        const int change = (currency.modulus - price) % currency.modulus;
        for (const auto& [coins, prob] : make_change(change, currency, cashier).outcomes)
            for (int i = 0; i < currency.size(); ++i)
                totals[i] += prob * Rational(coins.counts[i]);
    }
    const Rational scale(1, static_cast<long long>(prices.size()));
    for (auto& t : totals) t *= scale;
    return totals;
}

std::vector<Rational> coin_keeper_tally(const Currency& currency, CashierMode cashier) {
    std::vector<int> prices(currency.modulus);
    for (int c = 0; c < currency.modulus; ++c) prices[c] = c;
    return coin_keeper_tally(currency, cashier, prices);
}

}  // namespace coinchain
