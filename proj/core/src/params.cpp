#include "extrobin/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "extrobin/error.hpp"

namespace extrobin {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NoNegativeEigenvalue: return "NoNegativeEigenvalue";
    case ErrorKind::NoBracket: return "NoBracket";
    case ErrorKind::StepFailure: return "StepFailure";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::QuadratureMismatch: return "QuadratureMismatch";
    }
    return "Unknown";
}

ProblemParams ProblemParams::make(double p, int n, double alpha, double R) {
    ProblemParams params{p, n, alpha, R};
    params.validate();
    return params;
}

void ProblemParams::validate() const {
    if (!std::isfinite(p) || !std::isfinite(alpha) || !std::isfinite(R)) {
        throw std::invalid_argument("ProblemParams: non-finite value");
    }
    if (!(p > 1.0)) {
        throw std::invalid_argument("ProblemParams: p must exceed 1, got " + std::to_string(p));
    }
    if (n < 1) {
        throw std::invalid_argument("ProblemParams: n must be >= 1, got " + std::to_string(n));
    }
    if (!(R > 0.0)) {
        throw std::invalid_argument("ProblemParams: R must be positive, got " + std::to_string(R));
    }
}

EigenvalueBracket EigenvalueBracket::make(double lo, double hi) {
    if (!(lo <= hi) || !(hi <= 0.0)) {
        throw std::invalid_argument("EigenvalueBracket: need lo <= hi <= 0");
    }
    return {lo, hi};
}

}  // namespace extrobin
