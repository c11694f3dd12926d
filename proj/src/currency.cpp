#include "coinchain/currency.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "coinchain/errors.hpp"

namespace coinchain {

namespace {
constexpr int kInfinity = std::numeric_limits<int>::max() / 2;
}

Currency::Currency(std::vector<int> denoms, int modulus)
    : denominations(std::move(denoms)), modulus(modulus) {
    if (denominations.empty()) throw ConfigError("currency needs at least one denomination");
    if (modulus <= 1) throw ConfigError("modulus must be at least 2");
    std::sort(denominations.begin(), denominations.end(), std::greater<int>());
    for (std::size_t i = 0; i < denominations.size(); ++i) {
        const int d = denominations[i];
        if (d <= 0) throw ConfigError("denomination " + std::to_string(d) + " is not positive");
        if (d >= modulus)
            throw ConfigError("denomination " + std::to_string(d) + " is not below the modulus " +
                              std::to_string(modulus));
        if (i > 0 && denominations[i - 1] == d)
            throw ConfigError("duplicate denomination " + std::to_string(d));
    }
}

int Currency::index_of(int denomination) const {
    for (int i = 0; i < size(); ++i)
        if (denominations[i] == denomination) return i;
    return -1;
}

std::string Currency::str() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ',';
        out += std::to_string(denominations[i]);
    }
    return out;
}

Currency Currency::parse(const std::string& text, int modulus) {
    std::vector<int> denoms;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t pos = 0;
            const int value = std::stoi(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            denoms.push_back(value);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse denomination '" + token + "' in currency '" + text +
                              "'");
        }
    }
    if (denoms.empty()) throw ConfigError("empty currency '" + text + "'");
    return Currency(std::move(denoms), modulus);
}

bool CoinMultiset::empty() const {
    for (int c : counts)
        if (c) return false;
    return true;
}

int total_value(const Currency& currency, const CoinMultiset& coins) {
    int sum = 0;
    for (int i = 0; i < currency.size(); ++i) sum += coins.counts[i] * currency.denominations[i];
    return sum;
}

int coin_count(const CoinMultiset& coins) {
    int sum = 0;
    for (int c : coins.counts) sum += c;
    return sum;
}

std::string format_coins(const Currency& currency, const CoinMultiset& coins) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < currency.size(); ++i) {
        for (int c = 0; c < coins.counts[i]; ++c) {
            if (!first) out += ',';
            out += std::to_string(currency.denominations[i]);
            first = false;
        }
    }
    out += '}';
    return out;
}

CoinMultiset coins_from_values(const Currency& currency, const std::vector<int>& values) {
    CoinMultiset coins(currency.size());
    for (int v : values) {
        const int i = currency.index_of(v);
        if (i < 0)
            throw ConfigError("coin value " + std::to_string(v) + " is not a denomination of {" +
                              currency.str() + "}");
        ++coins.counts[i];
    }
    return coins;
}

CoinMultiset greedy_partition(int amount, const Currency& currency) {
    CoinMultiset coins(currency.size());
    int remaining = amount;
    for (int i = 0; i < currency.size() && remaining > 0; ++i) {
        const int d = currency.denominations[i];
        coins.counts[i] = remaining / d;
        remaining %= d;
    }
    if (remaining > 0) throw UnrepresentableAmount(amount, currency.str());
    return coins;
}

namespace {

// min_coins[j][a]: fewest coins summing to `a` using denominations j..k-1 only,
// with unlimited supply. Restricting to suffixes lets the reconstruction emit
// each multiset exactly once (coins taken in non-increasing denomination order).
std::vector<std::vector<int>> suffix_min_coins(int amount, const Currency& currency) {
    const int k = currency.size();
    std::vector<std::vector<int>> table(k + 1, std::vector<int>(amount + 1, kInfinity));
    table[k][0] = 0;
    for (int j = k - 1; j >= 0; --j) {
        const int d = currency.denominations[j];
        for (int a = 0; a <= amount; ++a) {
            int best = table[j + 1][a];
            if (a >= d && table[j][a - d] + 1 < best) best = table[j][a - d] + 1;
            table[j][a] = best;
        }
    }
    return table;
}

void collect_minimal(const Currency& currency, const std::vector<std::vector<int>>& table, int j,
                     int amount, CoinMultiset& partial, std::vector<CoinMultiset>& out) {
    const int k = currency.size();
    if (j == k) {
        if (amount == 0) out.push_back(partial);
        return;
    }
    const int d = currency.denominations[j];
    // Largest count first so the output comes out larger-coin multisets first.
    for (int c = amount / d; c >= 0; --c) {
        const int rest = amount - c * d;
        if (table[j + 1][rest] != kInfinity && table[j + 1][rest] + c == table[j][amount]) {
            partial.counts[j] = c;
            collect_minimal(currency, table, j + 1, rest, partial, out);
            partial.counts[j] = 0;
        }
    }
}

}  // namespace

int minimal_partition_size(int amount, const Currency& currency) {
    if (amount < 0) throw UnrepresentableAmount(amount, currency.str());
    std::vector<int> best(amount + 1, kInfinity);
    best[0] = 0;
    for (int a = 1; a <= amount; ++a)
        for (int d : currency.denominations)
            if (a >= d && best[a - d] + 1 < best[a]) best[a] = best[a - d] + 1;
    if (best[amount] == kInfinity) throw UnrepresentableAmount(amount, currency.str());
    return best[amount];
}

std::vector<CoinMultiset> minimal_partitions(int amount, const Currency& currency) {
    if (amount < 0) throw UnrepresentableAmount(amount, currency.str());
    const auto table = suffix_min_coins(amount, currency);
    if (table[0][amount] == kInfinity) throw UnrepresentableAmount(amount, currency.str());
    std::vector<CoinMultiset> out;
    CoinMultiset partial(currency.size());
    collect_minimal(currency, table, 0, amount, partial, out);
    return out;
}

CanonicityResult is_greedy_canonical(const Currency& currency, int bound) {
    if (bound < 0) throw ConfigError("canonicity bound cannot be negative");
    std::vector<int> best(bound + 1, kInfinity);
    best[0] = 0;
    for (int n = 1; n <= bound; ++n)
        for (int d : currency.denominations)
            if (n >= d && best[n - d] + 1 < best[n]) best[n] = best[n - d] + 1;
    for (int n = 0; n <= bound; ++n) {
        if (best[n] == kInfinity) continue;  // nothing represents n; vacuous
        int greedy_size = -1;
        try {
            greedy_size = coin_count(greedy_partition(n, currency));
        } catch (const UnrepresentableAmount&) {
        }
        if (greedy_size != best[n]) return {false, n};
    }
    return {true, -1};
}

Rational average_change_coins(const Currency& currency) {
    // One DP over 0..modulus-1 covers every amount at once.
    const int m = currency.modulus;
    std::vector<int> best(m, kInfinity);
    best[0] = 0;
    long long sum = 0;
    for (int n = 1; n < m; ++n) {
        for (int d : currency.denominations)
            if (n >= d && best[n - d] + 1 < best[n]) best[n] = best[n - d] + 1;
        if (best[n] == kInfinity) throw UnrepresentableAmount(n, currency.str());
        sum += best[n];
    }
    return Rational(sum, m);
}

namespace {

long long total_min_coins(const std::vector<int>& denoms_desc, int modulus,
                          std::vector<int>& scratch) {
    scratch.assign(modulus, kInfinity);
    scratch[0] = 0;
    long long sum = 0;
    for (int n = 1; n < modulus; ++n) {
        int best = kInfinity;
        for (int d : denoms_desc)
            if (n >= d && scratch[n - d] + 1 < best) best = scratch[n - d] + 1;
        scratch[n] = best;
        sum += best;
    }
    return sum;
}

}  // namespace

CurrencySearchResult search_min_average_currency(int num_denominations, int modulus) {
    if (num_denominations < 1) throw ConfigError("need at least one denomination");
    if (modulus < 2) throw ConfigError("modulus must be at least 2");
    if (num_denominations > modulus - 1)
        throw ConfigError("cannot fit " + std::to_string(num_denominations) +
                          " distinct denominations below modulus " + std::to_string(modulus));

    long long best_sum = std::numeric_limits<long long>::max();
    std::vector<std::vector<int>> minimizers;
    std::vector<int> chosen;
    std::vector<int> scratch;
    chosen.reserve(num_denominations);
    if (num_denominations == 1) {
        chosen = {1};
        best_sum = total_min_coins(chosen, modulus, scratch);
        minimizers.push_back(chosen);
    } else {
        // Choose the denominations above the forced 1.
        std::vector<int> upper;
        std::function<void(int, int)> choose = [&](int slots, int max_next) {
            if (slots == 0) {
                std::vector<int> denoms = upper;
                denoms.push_back(1);
                const long long sum = total_min_coins(denoms, modulus, scratch);
                if (sum < best_sum) {
                    best_sum = sum;
                    minimizers.clear();
                }
                if (sum == best_sum) minimizers.push_back(denoms);
                return;
            }
            for (int d = max_next; d >= slots + 1; --d) {
                upper.push_back(d);
                choose(slots - 1, d - 1);
                upper.pop_back();
            }
        };
        choose(num_denominations - 1, modulus - 1);
    }

    std::sort(minimizers.begin(), minimizers.end());
    CurrencySearchResult result{Rational(best_sum, modulus), {}};
    result.minimizers.reserve(minimizers.size());
    for (auto& m : minimizers) result.minimizers.emplace_back(std::move(m), modulus);
    return result;
}

}  // namespace coinchain
