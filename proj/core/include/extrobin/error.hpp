#pragma once

#include <stdexcept>
#include <string>

namespace extrobin {

/// Computational outcomes that callers are expected to branch on.
/// Precondition violations are reported with std::invalid_argument instead.
enum class ErrorKind {
    NoNegativeEigenvalue,  ///< alpha >= alpha*, so lambda_1 = 0 is not an isolated eigenvalue
    NoBracket,             ///< shot classification never flipped
    StepFailure,           ///< ODE step controller underflowed the minimum step
    NonConvergence,        ///< iterative solve hit its iteration cap
    QuadratureMismatch,    ///< cell-doubling check disagreed beyond tolerance
};

const char* to_string(ErrorKind kind) noexcept;

class SolverError : public std::runtime_error {
public:
    SolverError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace extrobin
