#pragma once

// Test-function bounds for non-ball exteriors in the plane and curvature
// comparisons for flattened ellipsoids.

#include "extrobin/variational.hpp"

namespace extrobin {

/// Unit disc with the notch {x₁ >= ε, |x₂| <= x₁^{p+3}} removed. The exterior
/// of this set is B₁^ext together with the notch.
struct PacDomainSpec {
    double p = 2.0;
    double epsilon = 0.5;

    /// Throws std::invalid_argument unless p > 1 and 0 < epsilon < 1.
    void validate() const;
};

/// The x₁ where the notch curve x₂ = x₁^{p+3} meets the unit circle.
double pac_notch_end(double p);

/// Q[|x|^{-3/p}] on the exterior of the notched disc. Exterior-of-B₁ parts are
/// exact; the notch uses 2D Gauss-Legendre on `quad_cells` cells in x₁ graded
/// towards ε, the boundary term arclength quadrature on the same cells.
/// The result is recomputed with 2·quad_cells; a relative disagreement above
/// 1% in any term throws SolverError(QuadratureMismatch).
/// Requires alpha < 0 and quad_cells >= 1000.
QuotientBreakdown pac_quotient(const PacDomainSpec& spec, double alpha, int quad_cells = 1000);

/// Claimed closed upper bounds for the mass and gradient terms of pac_quotient:
/// 1/(p+1) + 2π and 2(3/p)^p + (3/p)^p·2π/(p+1).
double pac_mass_bound(double p);
double pac_gradient_bound(double p);

/// E(a) = {(a x₁)² + x₂² + ... + x_n² < 1} in R^n.
struct EllipsoidSpec {
    int n = 3;
    double a = 0.5;

    /// Throws std::invalid_argument unless n >= 3 and 0 < a <= 1
    /// (a = 1 is the unit ball).
    void validate() const;
};

/// Maximal mean curvature of the exterior boundary: -(n-2+a²)/(n-1).
double ellipsoid_hmax_ext(const EllipsoidSpec& spec);

/// Same for the ball with |B| = |E(a)|, radius a^{-1/n}: -a^{1/n}.
double equal_volume_ball_hmax_ext(const EllipsoidSpec& spec);

/// The a† in (0, 1) below which ellipsoid_hmax_ext < equal_volume_ball_hmax_ext.
double ellipsoid_threshold(int n);

struct ExpansionComparison {
    double ellipsoid = 0.0;
    double ball = 0.0;
    /// ellipsoid > ball: the ellipsoid exterior has the larger two-term value.
    bool ellipsoid_above = false;
};

/// Two-term strong-coupling values for E(a)^ext and the equal-volume ball.
ExpansionComparison expansion_comparator(double alpha, double p, const EllipsoidSpec& spec);

}  // namespace extrobin
