#pragma once

// Radial shooting for λ₁(α, p, n, B_R^ext).
//
// The solver never touches φ directly. It integrates the logarithmic
// derivative g = -φ'/φ, which satisfies the Riccati-type equation
//
//   g' = [λ + (p-1)g^p - ((n-1)/r) g^{p-1}] / ((p-1) g^{p-2})
//
// with g(R) = |α|^{1/(p-1)}. For the eigenvalue, g decreases strictly towards
// c(λ) = (-λ/(p-1))^{1/p}; for any other λ it eventually leaves that path,
// upwards (blow-up) when λ is too high and through the floor c(λ) when λ is
// too low. The outward direction is exponentially unstable, so the final
// trajectory is completed by a stable inward sweep from the far field.

#include <string>
#include <vector>

#include "extrobin/params.hpp"
#include "extrobin/radial_profile.hpp"

namespace extrobin {

enum class Termination { ReachedRMax, GCrossedFloor, GBlewUp, StepFailure };
enum class ShotClass { TooLow, TooHigh, Converged };

const char* to_string(Termination t) noexcept;
const char* to_string(ShotClass c) noexcept;

struct GTrajectory {
    std::vector<double> radii;
    std::vector<double> g_values;
    double lambda = 0.0;
    Termination terminated_at = Termination::ReachedRMax;

    /// Linear interpolation of g; throws std::out_of_range outside [radii.front(), radii.back()].
    double g_at(double r) const;
    bool strictly_decreasing() const;
};

struct SolverOptions {
    /// Outward shots run to R + r_max_factor / c(λ).
    double r_max_factor = 30.0;
    double ode_rel_tol = 1e-10;
    double ode_abs_tol = 1e-12;
    /// Relative bracket width at which bisection stops.
    double lambda_tol = 1e-9;
    int max_bisections = 200;
    /// A shot has crossed the floor once g < c(λ)(1 - floor_guard).
    double floor_guard = 1e-3;
    /// A shot has blown up once g > blowup_factor · g(R).
    double blowup_factor = 10.0;
    /// A shot that reaches R_max counts as converged when g is this close
    /// (relative to c) to the far-field expansion c + d/r + e/r².
    double converge_tol = 1e-6;
    /// Target for |g(r_far) - c(λ₁)| at the end of the assembled trajectory.
    double far_field_tol = 1e-7;
    /// Outward and inward solutions must agree to match_tol · g(R) up to the matching radius.
    double match_tol = 1e-7;
    /// NoBracket retries double r_max_factor this many times.
    int max_r_max_doublings = 4;

    void validate() const;
};

struct EigenResult {
    double lambda1 = 0.0;
    EigenvalueBracket bracket;
    GTrajectory trajectory;
    /// |g(r_far) - c(λ₁)| at the last trajectory node.
    double g_limit_residual = 0.0;
    int iterations = 0;

    // Diagnostics of the outward/inward matching.
    double match_radius = 0.0;
    /// max |g_out - g_in| / g(R) on [R, match_radius].
    double match_residual = 0.0;
    /// |g_in(R) - |α|^{1/(p-1)}| / g(R): how well the inward solution meets the Robin condition.
    double boundary_residual = 0.0;
    double r_max_factor_used = 0.0;
    int too_low_shots = 0;
    int too_high_shots = 0;
};

/// Right-hand side of the Riccati equation for g. Throws std::invalid_argument for g <= 0 or r <= 0.
double g_rhs(double r, double g, double lambda, double p, int n);

/// ∂g_rhs/∂g.
double g_rhs_dg(double r, double g, double lambda, double p, int n);

/// Large-r expansion g ≈ c + d/r + e/r² of the decaying solution, λ < 0.
struct FarFieldExpansion {
    double c;
    double d;
    double e;
    double operator()(double r) const { return c + d / r + e / (r * r); }
};
FarFieldExpansion far_field_expansion(double lambda, double p, int n);

/// Outward radius R + r_max_factor / c(λ) of a shot at λ.
double shot_r_max(double lambda, const ProblemParams& params, const SolverOptions& opts);

/// Outward shot from g(R) = |α|^{1/(p-1)}. Requires alpha < 0 and lambda < 0.
GTrajectory integrate_g(double lambda, const ProblemParams& params, const SolverOptions& opts);

/// Inward sweep at λ from r_far (started on the far-field expansion) down to
/// params.R. Returned in increasing radius; g_values.front() is not imposed.
GTrajectory integrate_g_inward(double lambda, const ProblemParams& params,
                               const SolverOptions& opts, double r_far);

/// Bisection direction for a shot. Throws SolverError(StepFailure) for failed shots.
ShotClass classify_shot(const GTrajectory& traj, const ProblemParams& params,
                        const SolverOptions& opts);

/// λ₁(α, p, n, B_R^ext) by bisection on outward shots.
/// Throws SolverError with NoNegativeEigenvalue (α >= α*), NoBracket or StepFailure.
EigenResult solve_lambda1_ball(const ProblemParams& params, const SolverOptions& opts = {});

/// φ(r) = exp(-∫_R^r g) on the trajectory radii (φ(R) = 1), cumulative
/// trapezoid rule with Hermite end corrections. Nodes where φ underflows double precision are dropped.
RadialProfile eigenfunction_from_g(const GTrajectory& traj);

/// Robin coefficient seen by the radial eigenfunction on a surface through
/// radius r whose normal makes angle θ with the radial direction:
/// -(g(r) cos θ)^{p-1}. Equals α at r = R, cos θ = 1.
double effective_robin_ratio(const GTrajectory& traj, double p, double r, double cos_angle);

}  // namespace extrobin
