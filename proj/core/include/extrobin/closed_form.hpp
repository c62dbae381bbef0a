#pragma once

#include "extrobin/params.hpp"

// Closed-form quantities for the exterior-ball problem. Nothing here solves an
// ODE; all functions are pure.

namespace extrobin {

/// Critical Robin parameter α*(p, n, B_R^ext): λ₁ < 0 iff α < α*.
/// Equals -((n-p)/((p-1)R))^{p-1} for 1 < p < n (minus the first p-harmonic
/// Steklov eigenvalue of the exterior ball) and 0 when n <= p.
double steklov_threshold(const ProblemParams& params);

/// First p-harmonic Steklov eigenvalue μ₁(p, n, B_R^ext); zero when n <= p.
double steklov_mu1(const ProblemParams& params);

/// λ₁ for n = 1 (exterior of an interval): -(p-1)|α|^{p/(p-1)}, independent of R.
/// Throws std::invalid_argument for alpha >= 0 (no negative eigenvalue there).
double lambda1_halfline(double alpha, double p);

/// Maps (p, n, α, R) to (p, n, β^{1-p}α, βR), the problem on the dilated
/// domain with the same eigenfunction up to x -> x/β. Throws for beta <= 0.
ProblemParams scale_problem(const ProblemParams& params, double beta);

/// If λ is the eigenvalue of `params`, returns the eigenvalue λ/β^p of
/// scale_problem(params, beta).
double scale_eigenvalue(double lambda, double beta, double p);

/// Two-term strong-coupling value -(p-1)|α|^{p/(p-1)} - (n-1)·h_max·|α|.
/// For the exterior of B_R pass h_max = -1/R.
double strong_coupling_expansion(double alpha, double p, int n, double h_max);

/// Small-|α| upper envelope -(p^n/(2Γ(n)))^{p/(p-n)}|α|^{p/(p-n)} for the unit
/// exterior ball, valid for 2 <= n < p and alpha < 0.
double small_alpha_envelope(double alpha, double p, int n);

/// The constant (p^n/(2Γ(n)))^{p/(p-n)} in small_alpha_envelope.
double small_alpha_envelope_constant(double p, int n);

struct SandwichBounds {
    double lower;
    double upper;
};

/// Bounds on λ₁(α, n, n, B_1^ext) from the linear p = 2 problem.
/// `lambda_p2` must be λ₁(-|α|^{1/(n-1)}, 2, 2, B_1^ext) < 0.
/// lower = (n-1)|α|^{(n-2)/(n-1)}·lambda_p2, upper = -(n-1)|lambda_p2|^{n/2}.
SandwichBounds critical_case_bounds(double alpha, int n, double lambda_p2);

/// Γ(n) = (n-1)! for integer n >= 1.
double gamma_integer(int n);

/// Far-field decay rate c(λ) = (-λ/(p-1))^{1/p} of the eigenfunction, λ <= 0.
double decay_rate(double lambda, double p);

/// λ lower floor -(p-1)|α|^{p/(p-1)} valid for every n.
double lambda_floor(double alpha, double p);

}  // namespace extrobin
