#pragma once

#include <ostream>
#include <string>

#include "coinchain/chain.hpp"
#include "coinchain/stats.hpp"

namespace coinchain::cli {

/// Raw command-line options, before validation.
struct RunConfig {
    std::string currency_text = "25,10,5,1";
    int modulus = 100;
    std::string strategy_name = "big-spender";
    std::string cashier_name = "minimal-unique";
    std::string prices_text;  // "all", "multiples-of-5", or a comma list; empty = strategy default
    double tolerance = 1e-12;
    long long max_iterations = 1'000'000;
    std::string format = "table";  // "table" or "json"
    std::string out_path;          // analyze/matrix output file; empty = stdout
    std::string states_out;        // matrix: state list path; empty = out_path + ".states"
    bool list_states = false;      // states: print the canonical list
    int top_k = 5;
};

/// Validated configuration quadruple plus the coin-keeper routing flag.
struct ResolvedConfig {
    Currency currency;
    StrategySpec spec;
    PriceModel prices;
    CashierMode cashier;
    bool coin_keeper = false;
    std::string strategy_name;
};

/// Expands strategy shorthands (pennyless, quarter-hoarder, ...) and parses
/// every field. Throws ConfigError naming the offending field.
ResolvedConfig resolve(const RunConfig& config);

/// Builds the chain, verifies irreducibility and aperiodicity, then reports
/// stationary statistics. Coin-keeper configs print the tally instead.
/// Returns a process exit code; diagnostics go to `err`.
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Prints the state count, and the canonical list when requested.
int cmd_states(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Exports the sparse matrix and state list to files.
int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Exhaustive minimal-average-change currency search.
int cmd_search(int num_denominations, int modulus, std::ostream& out, std::ostream& err);

}  // namespace coinchain::cli
