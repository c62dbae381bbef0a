#pragma once

#include <compare>

namespace extrobin {

/// Parameters of the radial Robin problem on the exterior of B_R in R^n:
///
///   Δ_p u + λ|u|^{p-2}u = 0            in |x| > R
///   |∇u|^{p-2} ∂_ν u + α|u|^{p-2}u = 0 on |x| = R
///
/// `alpha` carries units 1/length^{p-1}.
struct ProblemParams {
    double p = 2.0;
    int n = 2;
    double alpha = -1.0;
    double R = 1.0;

    /// Validating constructor. Throws std::invalid_argument unless p > 1,
    /// n >= 1, R > 0 and every value is finite.
    static ProblemParams make(double p, int n, double alpha, double R);

    void validate() const;

    friend bool operator==(const ProblemParams&, const ProblemParams&) = default;
};

/// Bisection state for λ₁. Invariant: lo <= hi <= 0.
struct EigenvalueBracket {
    double lo = 0.0;
    double hi = 0.0;

    static EigenvalueBracket make(double lo, double hi);

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
};

}  // namespace extrobin
