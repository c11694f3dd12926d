#include "coinchain/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "coinchain/errors.hpp"

namespace coinchain::cli {

namespace {

std::string fixed(double value, int decimals = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& field) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t pos = 0;
            values.push_back(std::stoi(token, &pos));
            if (pos != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse '" + token + "' in " + field);
        }
    }
    if (values.empty()) throw ConfigError(field + " is empty");
    return values;
}

PriceModel parse_prices(const std::string& text, const Currency& currency) {
    if (text == "all") return PriceModel::all(currency);
    if (text == "multiples-of-5") return PriceModel::multiples_of(5, currency);
    PriceModel model;
    model.prices = parse_int_list(text, "--prices");
    model.validate(currency);
    return model;
}

void write_text(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "' for writing");
    file << contents;
    if (!file.good()) throw Error("failed writing '" + path + "'");
}

std::string render_table(const ResolvedConfig& rc, const StationaryDistribution& stationary,
                         const StationaryReport& rep) {
    std::ostringstream os;
    os << "currency         " << rc.currency.str() << " (modulus " << rc.currency.modulus
       << ")\n";
    os << "strategy         " << rc.strategy_name << "\n";
    os << "cashier          " << to_string(rc.cashier) << "\n";
    os << "prices           " << rc.prices.size() << " uniform\n";
    os << "states           " << rep.state_count << "\n";
    os << "iterations       " << stationary.iterations << "\n";
    os << "residual         " << stationary.residual << "\n";
    os << "expected coins   " << fixed(rep.expected_coins) << "\n";
    os << "expected value   " << fixed(rep.expected_value_cents) << " cents\n";
    os << "denomination  expected    share\n";
    for (int d = 0; d < rc.currency.size(); ++d)
        os << "  " << rc.currency.denominations[d] << "\t      " << fixed(rep.per_denomination[d])
           << "    " << fixed(rep.shares_percent[d], 2) << "%\n";
    os << "top states\n";
    for (const auto& [state, prob] : rep.top_states)
        os << "  " << format_coins(rc.currency, state) << "\t" << fixed(prob, 9) << "\n";
    return os.str();
}

void emit(const std::string& out_path, const std::string& text, std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        write_text(out_path, text);
}

}  // namespace

ResolvedConfig resolve(const RunConfig& config) {
    Currency currency = Currency::parse(config.currency_text, config.modulus);

    StrategySpec spec;
    bool coin_keeper = false;
    std::string default_prices = "all";
    const std::string& name = config.strategy_name;
    if (name == "minimalist") {
        spec.kind = StrategyKind::minimalist;
    } else if (name == "big-spender") {
        spec.kind = StrategyKind::big_spender;
    } else if (name == "heavy-spender") {
        spec.kind = StrategyKind::heavy_spender;
    } else if (name == "pennies-first" || name == "pennies-separate") {
        spec.kind = name == "pennies-first" ? StrategyKind::pennies_first
                                            : StrategyKind::pennies_separate;
        spec.constraints.count_caps.emplace_back(1, 4);
    } else if (name == "pennyless") {
        spec.kind = StrategyKind::big_spender;
        spec.constraints.forbidden_denominations.push_back(1);
        default_prices = "multiples-of-5";
    } else if (name == "quarter-hoarder") {
        spec.kind = StrategyKind::big_spender;
        spec.constraints.forbidden_denominations.push_back(25);
        spec.discard_denominations.push_back(25);
    } else if (name == "coin-keeper") {
        coin_keeper = true;
    } else {
        throw ConfigError("unknown strategy '" + name +
                          "' (expected minimalist, big-spender, pennies-first, "
                          "pennies-separate, heavy-spender, pennyless, quarter-hoarder, or "
                          "coin-keeper)");
    }

    const CashierMode cashier = parse_cashier_mode(config.cashier_name);
    PriceModel prices = parse_prices(
        config.prices_text.empty() ? default_prices : config.prices_text, currency);
    if (!coin_keeper) spec.validate(currency);
    if (config.format != "table" && config.format != "json")
        throw ConfigError("unknown format '" + config.format + "' (expected table or json)");
    if (config.tolerance <= 0) throw ConfigError("--tolerance must be positive");
    if (config.max_iterations <= 0) throw ConfigError("--max-iterations must be positive");

    return {std::move(currency), std::move(spec), std::move(prices), cashier, coin_keeper, name};
}

namespace {

int analyze_coin_keeper(const ResolvedConfig& rc, const RunConfig& config, std::ostream& out) {
    const auto tally = coin_keeper_tally(rc.currency, rc.cashier, rc.prices.prices);
    Rational total(0);
    for (const auto& t : tally) total += t;

    if (config.format == "json") {
        nlohmann::json j;
        j["currency"] = rc.currency.str();
        j["strategy"] = "coin-keeper";
        nlohmann::json per = nlohmann::json::array();
        nlohmann::json shares = nlohmann::json::array();
        for (const auto& t : tally) {
            per.push_back(t.to_double());
            shares.push_back(total.num() == 0 ? 0.0 : (t / total).to_double() * 100.0);
        }
        j["coins_per_transaction"] = std::move(per);
        j["shares_percent"] = std::move(shares);
        j["total_coins_per_transaction"] = total.to_double();
        emit(config.out_path, j.dump(2) + "\n", out);
        return 0;
    }

    std::ostringstream os;
    os << "currency         " << rc.currency.str() << " (modulus " << rc.currency.modulus
       << ")\n";
    os << "strategy         coin-keeper\n";
    os << "cashier          " << to_string(rc.cashier) << "\n";
    os << "prices           " << rc.prices.size() << " uniform\n";
    os << "coins received per transaction: " << total.str() << " = " << fixed(total.to_double())
       << "\n";
    os << "denomination  per transaction    share\n";
    for (int d = 0; d < rc.currency.size(); ++d) {
        const double share =
            total.num() == 0 ? 0.0 : (tally[d] / total).to_double() * 100.0;
        os << "  " << rc.currency.denominations[d] << "\t      " << tally[d].str() << " = "
           << fixed(tally[d].to_double()) << "    " << fixed(share, 2) << "%\n";
    }
    emit(config.out_path, os.str(), out);
    return 0;
}

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const ResolvedConfig rc = resolve(config);
        if (rc.coin_keeper) return analyze_coin_keeper(rc, config, out);

        const BuiltChain chain = build_chain(rc.currency, rc.spec, rc.prices, rc.cashier);
        if (!verify_irreducible(chain.matrix)) {
            err << "error: the chain is not irreducible; stationary statistics are undefined\n";
            return 1;
        }
        if (!verify_aperiodic(chain.matrix)) {
            err << "error: the chain is not aperiodic; stationary statistics are undefined\n";
            return 1;
        }
        const StationaryDistribution stationary =
            stationary_distribution(chain.matrix, config.tolerance, config.max_iterations);
        const StationaryReport rep = report(stationary, chain.space, config.top_k);

        if (config.format == "json") {
            nlohmann::json j = report_to_json(rep, rc.currency);
            j["currency"] = rc.currency.str();
            j["modulus"] = rc.currency.modulus;
            j["strategy"] = rc.strategy_name;
            j["cashier"] = to_string(rc.cashier);
            j["price_count"] = rc.prices.size();
            j["iterations"] = stationary.iterations;
            emit(config.out_path, j.dump(2) + "\n", out);
        } else {
            emit(config.out_path, render_table(rc, stationary, rep), out);
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_states(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const ResolvedConfig rc = resolve(config);
        if (rc.coin_keeper) {
            err << "error: the coin keeper accumulates without bound and has no finite state "
                   "space; use `analyze --strategy coin-keeper` for its tally\n";
            return 2;
        }
        const StateSpace space = chain_state_space(rc.currency, rc.spec, rc.cashier);
        std::ostringstream os;
        os << space.size() << "\n";
        if (config.list_states) write_states(space, os);
        emit(config.out_path, os.str(), out);
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.out_path.empty()) {
            err << "error: matrix export requires --out\n";
            return 2;
        }
        const ResolvedConfig rc = resolve(config);
        if (rc.coin_keeper) {
            err << "error: the coin keeper has no transition matrix; use `analyze "
                   "--strategy coin-keeper`\n";
            return 2;
        }
        const BuiltChain chain = build_chain(rc.currency, rc.spec, rc.prices, rc.cashier);
        std::ostringstream matrix_text;
        write_matrix(chain.matrix, matrix_text);
        write_text(config.out_path, matrix_text.str());
        std::ostringstream states_text;
        write_states(chain.space, states_text);
        const std::string states_path =
            config.states_out.empty() ? config.out_path + ".states" : config.states_out;
        write_text(states_path, states_text.str());
        out << "wrote " << chain.matrix.nonzero_count() << " entries (dimension "
            << chain.matrix.dimension << ") to " << config.out_path << "\n";
        out << "wrote " << chain.space.size() << " states to " << states_path << "\n";
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_search(int num_denominations, int modulus, std::ostream& out, std::ostream& err) {
    try {
        const CurrencySearchResult result = search_min_average_currency(num_denominations, modulus);
        out << "minimum average change " << result.best_average.str() << " = "
            << fixed(result.best_average.to_double()) << " coins per transaction\n";
        out << "achieved by " << result.minimizers.size() << " currency(ies):\n";
        for (const auto& c : result.minimizers) out << "  " << c.str() << "\n";
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace coinchain::cli
