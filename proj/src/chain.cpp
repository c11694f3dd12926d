#include "coinchain/chain.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <map>
#include <set>

#include "coinchain/errors.hpp"

namespace coinchain {

PriceModel PriceModel::all(const Currency& currency) {
    PriceModel model;
    model.prices.resize(currency.modulus);
    for (int c = 0; c < currency.modulus; ++c) model.prices[c] = c;
    return model;
}

PriceModel PriceModel::multiples_of(int step, const Currency& currency) {
    if (step <= 0) throw ConfigError("price step must be positive");
    PriceModel model;
    for (int c = 0; c < currency.modulus; c += step) model.prices.push_back(c);
    return model;
}

void PriceModel::validate(const Currency& currency) const {
    if (prices.empty()) throw ConfigError("price set is empty");
    std::set<int> seen;
    for (int c : prices) {
        if (c < 0 || c >= currency.modulus)
            throw ConfigError("price " + std::to_string(c) + " is outside 0.." +
                              std::to_string(currency.modulus - 1));
        if (!seen.insert(c).second)
            throw ConfigError("duplicate price " + std::to_string(c));
    }
}

Rational TransitionMatrix::entry(int row, int col) const {
    const auto& r = rows[row];
    const auto it = std::lower_bound(r.begin(), r.end(), col,
                                     [](const auto& e, int c) { return e.first < c; });
    if (it == r.end() || it->first != col) return Rational(0);
    return Rational(it->second, denominator);
}

long long TransitionMatrix::nonzero_count() const {
    long long n = 0;
    for (const auto& r : rows) n += static_cast<long long>(r.size());
    return n;
}

// The minimalist's states are exactly the cashier's partitions of the
// representable wallet values; everyone else gets the full enumeration.
StateSpace chain_state_space(const Currency& currency, const StrategySpec& spec,
                             CashierMode cashier) {
    if (spec.kind != StrategyKind::minimalist)
        return enumerate_states(currency, spec.constraints);
    std::vector<CoinMultiset> states;
    for (int value = 0; value < currency.modulus; ++value) {
        try {
            for (const auto& [coins, prob] : make_change(value, currency, cashier).outcomes)
                states.push_back(coins);
        } catch (const UnrepresentableAmount&) {
            // value can never be held; skip
        }
    }
    return StateSpace(currency, std::move(states));
}

BuiltChain build_chain(const Currency& currency, const StrategySpec& spec,
                       const PriceModel& prices, CashierMode cashier) {
    spec.validate(currency);
    prices.validate(currency);

    StateSpace space = chain_state_space(currency, spec, cashier);
    const Rational price_weight(1, static_cast<long long>(prices.size()));

    std::vector<std::map<int, Rational>> exact_rows(space.size());
    long long denominator = 1;
    for (int i = 0; i < space.size(); ++i) {
        auto& row = exact_rows[i];
        for (int price : prices.prices) {
            const TransactionOutcome outcome =
                transact(currency, space.state(i), price, spec, cashier);
            for (const auto& [next, prob] : outcome.outcomes) {
                const int j = space.index_of(next);
                if (j < 0)
                    throw ClosureViolation("state " + format_coins(currency, space.state(i)) +
                                           " at price " + std::to_string(price) +
                                           " reaches " + format_coins(currency, next) +
                                           ", which is outside the enumerated space");
                row[j] += price_weight * prob;
            }
        }
        for (const auto& [col, p] : row) denominator = lcm_ll(denominator, p.den());
    }

    TransitionMatrix matrix;
    matrix.dimension = space.size();
    matrix.denominator = denominator;
    matrix.rows.resize(space.size());
    for (int i = 0; i < space.size(); ++i) {
        auto& row = matrix.rows[i];
        row.reserve(exact_rows[i].size());
        long long row_sum = 0;
        for (const auto& [col, p] : exact_rows[i]) {
            const long long numerator = p.num() * (denominator / p.den());
            row.emplace_back(col, numerator);
            row_sum += numerator;
        }
        if (row_sum != denominator)
            throw Error("row " + std::to_string(i) + " sums to " + std::to_string(row_sum) +
                        "/" + std::to_string(denominator));
    }
    return {std::move(space), std::move(matrix)};
}

StationaryDistribution stationary_distribution(const TransitionMatrix& matrix, double tolerance,
                                               long long max_iterations,
                                               const std::optional<Eigen::VectorXd>& start) {
    const int n = matrix.dimension;
    if (n == 0) throw ConfigError("empty transition matrix");
    if (tolerance <= 0) throw ConfigError("tolerance must be positive");

    // Left multiplication p -> pM as an ordinary sparse product with M^T.
    Eigen::SparseMatrix<double> transposed(n, n);
    {
        std::vector<Eigen::Triplet<double>> triplets;
        triplets.reserve(static_cast<std::size_t>(matrix.nonzero_count()));
        const double scale = 1.0 / static_cast<double>(matrix.denominator);
        for (int i = 0; i < n; ++i)
            for (const auto& [j, numerator] : matrix.rows[i])
                triplets.emplace_back(j, i, static_cast<double>(numerator) * scale);
        transposed.setFromTriplets(triplets.begin(), triplets.end());
    }

    Eigen::VectorXd p;
    if (start) {
        if (start->size() != n) throw AlignmentError(start->size(), n);
        const double sum = start->sum();
        if (!(sum > 0) || start->minCoeff() < 0)
            throw ConfigError("start vector must be a nonnegative distribution");
        p = *start / sum;
    } else {
        p = Eigen::VectorXd::Constant(n, 1.0 / n);
    }

    double residual = 0.0;
    for (long long iteration = 1; iteration <= max_iterations; ++iteration) {
        Eigen::VectorXd next = transposed * p;
        next /= next.sum();
        residual = (next - p).lpNorm<1>();
        p = std::move(next);
        if (residual <= tolerance) return {std::move(p), residual, iteration};
    }
    throw NoConvergence(residual, max_iterations);
}

namespace {

// Iterative Tarjan; chains can be thousands of states deep, so no recursion.
std::vector<int> strongly_connected_components(const TransitionMatrix& matrix) {
    const int n = matrix.dimension;
    std::vector<int> component(n, -1), index(n, -1), lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0, next_component = 0;

    struct Frame {
        int node;
        std::size_t edge;
    };
    std::vector<Frame> call_stack;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call_stack.push_back({root, 0});
        while (!call_stack.empty()) {
            auto& frame = call_stack.back();
            const int v = frame.node;
            if (frame.edge == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (frame.edge < matrix.rows[v].size()) {
                const int w = matrix.rows[v][frame.edge].first;
                ++frame.edge;
                if (index[w] == -1) {
                    call_stack.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component[w] = next_component;
                } while (w != v);
                ++next_component;
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                const int parent = call_stack.back().node;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    return component;
}

}  // namespace

bool verify_irreducible(const TransitionMatrix& matrix) {
    if (matrix.dimension == 0) return false;
    const auto component = strongly_connected_components(matrix);
    return std::all_of(component.begin(), component.end(),
                       [&](int c) { return c == component[0]; });
}

bool verify_aperiodic(const TransitionMatrix& matrix) {
    if (matrix.dimension == 0) return false;
    const auto component = strongly_connected_components(matrix);
    const int num_components =
        1 + *std::max_element(component.begin(), component.end());
    std::vector<char> has_loop(num_components, 0);
    for (int i = 0; i < matrix.dimension; ++i)
        for (const auto& [j, numerator] : matrix.rows[i])
            if (j == i && numerator > 0) has_loop[component[i]] = 1;
    return std::all_of(has_loop.begin(), has_loop.end(), [](char b) { return b != 0; });
}

void write_matrix(const TransitionMatrix& matrix, std::ostream& os) {
    os << "dimension " << matrix.dimension << " denominator " << matrix.denominator << "\n";
    for (int i = 0; i < matrix.dimension; ++i)
        for (const auto& [j, numerator] : matrix.rows[i])
            os << i << " " << j << " " << numerator << "\n";
}

void write_states(const StateSpace& space, std::ostream& os) {
    for (const auto& state : space.states())
        os << format_coins(space.currency(), state) << "\n";
}

}  // namespace coinchain
