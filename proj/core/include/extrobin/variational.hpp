#pragma once

// Direct minimization of the radial p-Rayleigh quotient
//
//   Q[u] = (∫_R^∞ |u'|^p r^{n-1} dr + α|u(R)|^p R^{n-1}) / ∫_R^∞ |u|^p r^{n-1} dr
//
// The surface factor |∂B₁| is common to all three terms and omitted.

#include <optional>
#include <vector>

#include "extrobin/params.hpp"
#include "extrobin/radial_profile.hpp"

namespace extrobin {

struct QuotientBreakdown {
    double gradient_term = 0.0;
    double boundary_term = 0.0;
    double mass_term = 0.0;
    double quotient = 0.0;
};

/// Q of a piecewise-linear profile whose first node is R. With `tail_rate`
/// set to γ > 0 the profile is continued by u(R₀)e^{-γ(r-R₀)} beyond its last
/// node, which makes the result an upper bound for λ₁ on the whole exterior.
/// Throws std::invalid_argument on zero mass or a profile not starting at R.
QuotientBreakdown rayleigh_quotient(const RadialProfile& profile, const ProblemParams& params,
                                    std::optional<double> tail_rate = std::nullopt);

/// ∫_{r0}^∞ e^{-a(r-r0)} r^{n-1} dr for a > 0 and integer n >= 1.
double exponential_moment(double a, double r0, int n);

/// Nodes R = r_0 < ... < r_N = R0 with cell widths growing geometrically by
/// min(1.05, 1000^{1/N}). For N >= 142 the mesh with 2N cells refines the one
/// with N cells.
std::vector<double> graded_mesh(double R, double R0, int cells);

struct TruncatedMinimum {
    double lambda = 0.0;
    RadialProfile profile;
    int iterations = 0;
};

struct TruncatedOptions {
    int max_iterations = 20000;
    int inner_iterations = 3;
};

/// Minimizes the discrete quotient over continuous piecewise-linear profiles
/// on graded_mesh(R, R0, N) with a natural condition at R0. Iterates: freeze
/// |u'|^{p-2} per cell and |u|^{p-2} per node, take a few shifted inverse
/// iteration steps on the frozen generalized eigenproblem, renormalize, until
/// the quotient changes by less than tol·max(|Q|, 1e-12).
/// Throws std::invalid_argument for R0 <= R, N < 16 or tol <= 0 and
/// SolverError(NonConvergence) after max_iterations.
TruncatedMinimum minimize_truncated(const ProblemParams& params, double R0, int N, double tol,
                                    const TruncatedOptions& opts = {});

/// (4·fine - coarse)/3 for a second-order quantity on meshes N and 2N.
double richardson_extrapolate(double coarse, double fine);

enum class QuadraturePath { Analytic, Numeric };

/// Q[e^{-βr}] on the exterior of B_R. Requires 2 <= n < p and beta > 0;
/// throws std::invalid_argument otherwise.
double envelope_test_function_quotient(const ProblemParams& params, double beta,
                                       QuadraturePath path = QuadraturePath::Analytic);

/// β(α) = (|α| p^n / (2Γ(n)))^{1/(p-n)}, the decay rate used with
/// envelope_test_function_quotient for small |α|.
double envelope_beta(double alpha, double p, int n);

}  // namespace extrobin
