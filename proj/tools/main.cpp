#include <CLI11.hpp>
#include <iostream>

#include "coinchain/cli.hpp"

namespace {

void add_model_options(CLI::App* cmd, coinchain::cli::RunConfig& config) {
    cmd->add_option("--currency", config.currency_text,
                    "Denominations, comma-separated descending (default 25,10,5,1)");
    cmd->add_option("--modulus", config.modulus, "Price modulus in cents (default 100)");
    cmd->add_option("--strategy", config.strategy_name,
                    "minimalist | big-spender | pennies-first | pennies-separate | "
                    "heavy-spender | pennyless | quarter-hoarder | coin-keeper");
    cmd->add_option("--cashier", config.cashier_name,
                    "greedy | minimal-unique | minimal-split (default minimal-unique)");
    cmd->add_option("--prices", config.prices_text,
                    "'all', 'multiples-of-5', or a comma list (default per strategy)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact long-term analysis of wallet contents under configurable "
                 "currencies and spending strategies"};
    app.require_subcommand(1);
    coinchain::cli::RunConfig config;

    auto* analyze = app.add_subcommand(
        "analyze", "Build the wallet chain and report its stationary statistics");
    add_model_options(analyze, config);
    analyze->add_option("--tolerance", config.tolerance,
                        "L1 fixed-point tolerance (default 1e-12)");
    analyze->add_option("--max-iterations", config.max_iterations,
                        "Power iteration cap (default 1000000)");
    analyze->add_option("--format", config.format, "table | json (default table)");
    analyze->add_option("--out", config.out_path, "Write the report here instead of stdout");
    analyze->add_option("--top", config.top_k, "How many top states to report (default 5)");

    auto* states = app.add_subcommand("states", "Count (and list) the wallet states");
    add_model_options(states, config);
    states->add_flag("--list", config.list_states, "Print the canonical state list");
    states->add_option("--out", config.out_path, "Write to a file instead of stdout");

    auto* matrix = app.add_subcommand("matrix", "Export the exact sparse transition matrix");
    add_model_options(matrix, config);
    matrix->add_option("--out", config.out_path, "Matrix output path")->required();
    matrix->add_option("--states-out", config.states_out,
                       "State list path (default: <out>.states)");

    int search_denominations = 4;
    int search_modulus = 100;
    auto* search = app.add_subcommand(
        "search", "Find the currencies minimizing average change per transaction");
    search->add_option("--denominations", search_denominations,
                       "Number of denominations (default 4)");
    search->add_option("--modulus", search_modulus, "Price modulus (default 100)");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) return coinchain::cli::cmd_analyze(config, std::cout, std::cerr);
    if (states->parsed()) return coinchain::cli::cmd_states(config, std::cout, std::cerr);
    if (matrix->parsed()) return coinchain::cli::cmd_matrix(config, std::cout, std::cerr);
    if (search->parsed())
        return coinchain::cli::cmd_search(search_denominations, search_modulus, std::cout,
                                          std::cerr);
    return 1;
}
