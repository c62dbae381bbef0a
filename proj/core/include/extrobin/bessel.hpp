#pragma once

// Modified Bessel functions of the second kind and the exact p = 2 reference
// for the exterior ball, where the decaying radial solution is
// r^{1-n/2} K_{n/2-1}(s r) with λ = -s².

namespace extrobin {

/// K_ν(x) together with its exponentially scaled form.
struct BesselKValue {
    double scaled = 0.0;  ///< e^x K_ν(x), always representable
    double value = 0.0;   ///< K_ν(x); 0 when `underflow` is set
    bool underflow = false;
};

/// Supported orders: 0, 1/2, 1, 3/2, 2, 5/2. Throws std::invalid_argument for
/// other orders or x <= 0.
///
/// Integer orders 0 and 1 use the log-term power series for x <= 2 and, above
/// that, the trapezoidal rule on
///   e^x K_ν(x) = 2 sqrt(π/(2x)) / Γ(ν+1/2) ∫_0^∞ e^{-v²} v^{2ν} (1 + v²/(2x))^{ν-1/2} dv,
/// which converges geometrically for an integrand analytic in a strip.
/// Half-integer orders are elementary; orders 2 and 5/2 follow from the
/// recurrence K_{ν+1} = K_{ν-1} + (2ν/x) K_ν.
BesselKValue bessel_k(double order, double x);

/// e^x K_ν(x).
double bessel_k_scaled(double order, double x);

/// K_μ(x) / K_ν(x), computed from scaled values so it stays finite for large x.
double bessel_k_ratio(double num_order, double den_order, double x);

/// Robin condition on the decaying p = 2 solution outside B_R in R^n:
/// residual(s) = s K_{n/2}(sR)/K_{n/2-1}(sR) - |α|, increasing in s.
struct SecularEquation {
    int n = 2;
    double R = 1.0;
    double alpha = -1.0;

    /// Throws std::invalid_argument unless n in {2, 3}, R > 0, alpha < 0.
    void validate() const;
    double residual(double s) const;
};

/// λ₁(α, 2, n, B_R^ext) for n in {2, 3}. n = 3 is the closed form
/// -(|α| - 1/R)²; n = 2 bisects the secular equation on s in (0, |α|).
/// Throws SolverError(NoNegativeEigenvalue) when α >= α*(2, n, B_R^ext).
double lambda1_ball_p2(int n, double R, double alpha);

/// x K_{m/2+1}(x)/K_{m/2}(x) - (m/2 + sqrt(m²/4 + x²)) for m in {0, 1, 2, 3};
/// nonnegative for all x > 0.
double segura_ratio_gap(int m, double x);

/// Lower bound -α² for λ₁(α, 2, 2, Ω^ext) over bounded convex Ω.
double convex_lower_bound_p2(double alpha);

}  // namespace extrobin
