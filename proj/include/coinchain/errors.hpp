#pragma once

#include <stdexcept>
#include <string>

namespace coinchain {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An amount cannot be partitioned into the currency's denominations.
struct UnrepresentableAmount : Error {
    UnrepresentableAmount(long long amount, const std::string& currency)
        : Error("amount " + std::to_string(amount) +
                " is not representable in currency {" + currency + "}"),
          amount(amount) {}
    long long amount;
};

/// A cashier in minimal-unique mode hit an amount with several minimal partitions.
struct AmbiguousChange : Error {
    explicit AmbiguousChange(long long amount)
        : Error("amount " + std::to_string(amount) +
                " has multiple minimal partitions; use the minimal-split cashier rule"),
          amount(amount) {}
    long long amount;
};

/// A payment was requested from a wallet whose total is below the price.
struct InsufficientFunds : Error {
    InsufficientFunds(long long wallet_total, long long price)
        : Error("wallet total " + std::to_string(wallet_total) +
                " cannot cover price " + std::to_string(price)) {}
};

/// A transaction produced a wallet that breaks the strategy's own constraints.
/// Signals an inconsistent strategy/currency combination, not bad user input.
struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& what) : Error(what) {}
};

/// A transaction left the enumerated state space during matrix construction.
struct ClosureViolation : Error {
    explicit ClosureViolation(const std::string& what) : Error(what) {}
};

/// Power iteration did not reach the requested tolerance.
struct NoConvergence : Error {
    NoConvergence(double residual, long long iterations)
        : Error("stationary solve did not converge: residual " +
                std::to_string(residual) + " after " +
                std::to_string(iterations) + " iterations"),
          residual(residual),
          iterations(iterations) {}
    double residual;
    long long iterations;
};

/// A probability vector does not line up with the state space it claims to describe.
struct AlignmentError : Error {
    AlignmentError(long long got, long long expected)
        : Error("vector of length " + std::to_string(got) +
                " does not align with state space of size " + std::to_string(expected)) {}
};

/// Two share vectors of different lengths were compared.
struct DimensionMismatch : Error {
    DimensionMismatch(long long a, long long b)
        : Error("share vectors have different dimensions " + std::to_string(a) +
                " and " + std::to_string(b)) {}
};

/// Invalid configuration (bad currency string, unknown strategy name, ...).
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace coinchain
