#pragma once

#include <Eigen/Dense>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "coinchain/cashier.hpp"
#include "coinchain/currency.hpp"
#include "coinchain/strategy.hpp"
#include "coinchain/wallet.hpp"

namespace coinchain {

/// Uniform distribution over a set of distinct prices in 0..modulus-1.
struct PriceModel {
    std::vector<int> prices;

    static PriceModel all(const Currency& currency);
    static PriceModel multiples_of(int step, const Currency& currency);

    int size() const { return static_cast<int>(prices.size()); }
    void validate(const Currency& currency) const;
};

/// Sparse row-stochastic matrix with exact rational entries, stored as
/// integer numerators over one global denominator. Every row sums to the
/// denominator exactly.
struct TransitionMatrix {
    int dimension = 0;
    long long denominator = 1;
    // Per row: (column, numerator) with columns ascending.
    std::vector<std::vector<std::pair<int, long long>>> rows;

    Rational entry(int row, int col) const;
    long long nonzero_count() const;

    bool operator==(const TransitionMatrix& o) const = default;
};

struct BuiltChain {
    StateSpace space;
    TransitionMatrix matrix;
};

/// The state space a chain for this configuration runs over: the cashier's
/// partitions of representable values for the minimalist, the constrained
/// enumeration for everything else.
StateSpace chain_state_space(const Currency& currency, const StrategySpec& spec,
                             CashierMode cashier);

/// Builds the exact transition matrix of (currency, strategy, prices, cashier).
/// For the minimalist the state space is the set of cashier partitions of the
/// representable wallet values; for every other strategy it is the full
/// constrained enumeration. Throws ClosureViolation when a transaction leaves
/// the space, and UnrepresentableAmount when the configuration requires change
/// the currency cannot form.
BuiltChain build_chain(const Currency& currency, const StrategySpec& spec,
                       const PriceModel& prices, CashierMode cashier);

struct StationaryDistribution {
    Eigen::VectorXd probabilities;  // aligned with the state space, sums to 1
    double residual = 0.0;          // achieved L1 fixed-point error
    long long iterations = 0;
};

/// Dominant left eigenvector by power iteration from the uniform vector (or
/// the supplied start). Stops once the L1 residual of p -> pM drops to the
/// tolerance; throws NoConvergence past max_iterations.
StationaryDistribution stationary_distribution(
    const TransitionMatrix& matrix, double tolerance = 1e-12,
    long long max_iterations = 1'000'000,
    const std::optional<Eigen::VectorXd>& start = std::nullopt);

/// True iff the directed graph of nonzero entries is strongly connected.
bool verify_irreducible(const TransitionMatrix& matrix);

/// True iff every strongly connected component contains a state with a
/// self-loop (the sufficient condition supplied by price-0 transactions).
bool verify_aperiodic(const TransitionMatrix& matrix);

/// Sparse text export: "dimension N denominator D" then one "row col numerator"
/// line per nonzero entry, sorted by (row, col). Byte-identical across runs.
void write_matrix(const TransitionMatrix& matrix, std::ostream& os);

/// One state per line, canonical order, e.g. "{25,10,1,1}".
void write_states(const StateSpace& space, std::ostream& os);

}  // namespace coinchain
