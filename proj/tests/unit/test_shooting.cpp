#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "extrobin/bessel.hpp"
#include "extrobin/closed_form.hpp"
#include "extrobin/error.hpp"
#include "extrobin/shooting.hpp"

using namespace extrobin;

namespace {

ErrorKind error_kind_of(const ProblemParams& pp, const SolverOptions& opts = {}) {
    try {
        solve_lambda1_ball(pp, opts);
    } catch (const SolverError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected a SolverError";
    return ErrorKind::StepFailure;
}

}  // namespace

TEST(GRhs, FixedPointAtDecayRate) {
    for (double p : {1.5, 2.0, 3.0}) {
        for (int n : {2, 3, 5}) {
            const double lambda = -2.3;
            const double c = decay_rate(lambda, p);
            const double r = 7.0;
            const double expected = -((n - 1) / ((p - 1.0) * r)) * c;
            EXPECT_NEAR(g_rhs(r, c, lambda, p, n), expected, 1e-13) << p << ' ' << n;
        }
    }
}

TEST(GRhs, ClosedFormThreeDimensionalSolution) {
    const double s = 1.7;
    for (double r : {1.0, 2.5, 10.0}) {
        EXPECT_NEAR(g_rhs(r, s + 1.0 / r, -s * s, 2.0, 3), -1.0 / (r * r), 1e-13);
    }
}

TEST(GRhs, HalfLineConstant) {
    EXPECT_DOUBLE_EQ(g_rhs(3.0, 1.0, -1.0, 2.0, 1), 0.0);
    EXPECT_THROW(g_rhs(1.0, 0.0, -1.0, 2.0, 2), std::invalid_argument);
    EXPECT_THROW(g_rhs(0.0, 1.0, -1.0, 2.0, 2), std::invalid_argument);
}

TEST(GRhs, DerivativeMatchesFiniteDifference) {
    const double h = 1e-6;
    for (double p : {1.5, 2.0, 3.5}) {
        const double g = 1.3;
        const double fd = (g_rhs(2.0, g + h, -1.1, p, 3) - g_rhs(2.0, g - h, -1.1, p, 3)) / (2 * h);
        EXPECT_NEAR(g_rhs_dg(2.0, g, -1.1, p, 3), fd, 1e-7);
    }
}

TEST(FarField, ExactForThreeDimensionalLaplacian) {
    const auto ff = far_field_expansion(-4.0, 2.0, 3);
    EXPECT_DOUBLE_EQ(ff.c, 2.0);
    EXPECT_NEAR(ff.d, 1.0, 1e-15);
    EXPECT_NEAR(ff.e, 0.0, 1e-15);
    EXPECT_THROW(far_field_expansion(0.0, 2.0, 3), std::invalid_argument);
}

TEST(FarField, ResidualIsThirdOrder) {
    for (double p : {1.5, 3.0}) {
        const auto ff = far_field_expansion(-1.0, p, 2);
        auto residual = [&](double r) {
            const double dg = -ff.d / (r * r) - 2 * ff.e / (r * r * r);
            return std::abs(dg - g_rhs(r, ff(r), -1.0, p, 2));
        };
        EXPECT_LT(residual(200.0) / residual(100.0), 0.15) << p;
    }
}

TEST(IntegrateG, FollowsClosedFormAtEigenvalue) {
    const ProblemParams pp{2.0, 3, -2.0, 1.0};
    const auto traj = integrate_g(-1.0, pp, {});
    ASSERT_GT(traj.radii.size(), 10u);
    EXPECT_DOUBLE_EQ(traj.g_values.front(), 2.0);
    // The outward direction is unstable; agreement holds until rounding error grows.
    for (std::size_t i = 0; i < traj.radii.size(); ++i) {
        const double r = traj.radii[i];
        if (r > 4.0) {
            break;
        }
        EXPECT_NEAR(traj.g_values[i], 1.0 + 1.0 / r, 1e-8) << r;
    }
}

TEST(IntegrateG, OffEigenvalueShotsLeaveEarly) {
    const ProblemParams pp{2.0, 3, -2.0, 1.0};
    const SolverOptions opts;
    const auto low = integrate_g(-1.5, pp, opts);
    EXPECT_EQ(low.terminated_at, Termination::GCrossedFloor);
    EXPECT_LT(low.radii.back(), shot_r_max(-1.5, pp, opts));
    const auto high = integrate_g(-0.5, pp, opts);
    EXPECT_EQ(high.terminated_at, Termination::GBlewUp);
}

TEST(IntegrateG, HalfLineTrajectoryIsConstant) {
    const ProblemParams pp{2.0, 1, -1.0, 1.0};
    const auto traj = integrate_g(-1.0, pp, {});
    EXPECT_EQ(traj.terminated_at, Termination::ReachedRMax);
    for (double g : traj.g_values) {
        EXPECT_NEAR(g, 1.0, 1e-12);
    }
}

TEST(IntegrateG, RejectsNonNegativeInputs) {
    EXPECT_THROW(integrate_g(-1.0, {2.0, 3, 0.5, 1.0}, {}), std::invalid_argument);
    EXPECT_THROW(integrate_g(0.0, {2.0, 3, -2.0, 1.0}, {}), std::invalid_argument);
}

TEST(ClassifyShot, DirectionCalibration) {
    const ProblemParams pp{2.0, 3, -2.0, 1.0};
    const SolverOptions opts;
    EXPECT_EQ(classify_shot(integrate_g(-1.0 * 1.01, pp, opts), pp, opts), ShotClass::TooLow);
    EXPECT_EQ(classify_shot(integrate_g(-1.0 * 0.99, pp, opts), pp, opts), ShotClass::TooHigh);
}

TEST(ClassifyShot, BelowFloorNeverConverges) {
    for (double p : {1.5, 2.0, 3.0}) {
        const ProblemParams pp{p, 2, -2.0, 1.0};
        const SolverOptions opts;
        const double floor = lambda_floor(pp.alpha, p);
        for (double f : {1.0001, 1.1, 2.0}) {
            EXPECT_EQ(classify_shot(integrate_g(floor * f, pp, opts), pp, opts), ShotClass::TooLow);
        }
    }
}

TEST(ClassifyShot, HalfLineConverged) {
    const ProblemParams pp{2.0, 1, -1.0, 1.0};
    EXPECT_EQ(classify_shot(integrate_g(-1.0, pp, {}), pp, {}), ShotClass::Converged);
}

TEST(Solve, ClosedFormRegression) {
    const auto res = solve_lambda1_ball({2.0, 3, -2.0, 1.0});
    EXPECT_NEAR(res.lambda1, -1.0, 1e-8);
    EXPECT_LE(res.bracket.lo, res.bracket.hi);
    EXPECT_LE(res.bracket.hi, 0.0);
    EXPECT_TRUE(res.trajectory.strictly_decreasing());
    EXPECT_DOUBLE_EQ(res.trajectory.g_values.front(), 2.0);
    EXPECT_LE(res.g_limit_residual, 1e-6);
    EXPECT_LT(res.boundary_residual, 1e-7);
}

TEST(Solve, TwoDimensionalBesselRoot) {
    const auto res = solve_lambda1_ball({2.0, 2, -1.0, 1.0});
    EXPECT_NEAR(res.lambda1, -0.35408060665860441798, 1e-6 * 0.354);
}

TEST(Solve, MatchesBesselReferenceAcrossRadii) {
    for (double R : {0.5, 1.0, 3.0}) {
        for (double alpha : {-0.7, -2.0, -6.0}) {
            const double ref = lambda1_ball_p2(2, R, alpha);
            EXPECT_NEAR(solve_lambda1_ball({2.0, 2, alpha, R}).lambda1, ref, 1e-6 * std::abs(ref))
                << R << ' ' << alpha;
        }
    }
}

TEST(Solve, ThresholdErrors) {
    EXPECT_EQ(error_kind_of({2.0, 3, -0.5, 1.0}), ErrorKind::NoNegativeEigenvalue);
    EXPECT_EQ(error_kind_of({2.0, 3, -1.0, 1.0}), ErrorKind::NoNegativeEigenvalue);
    EXPECT_EQ(error_kind_of({2.0, 2, 0.3, 1.0}), ErrorKind::NoNegativeEigenvalue);
    EXPECT_EQ(error_kind_of({1.5, 3, -0.9, 1.0}), ErrorKind::NoNegativeEigenvalue);
}

TEST(Solve, HalfLineEqualsFloor) {
    for (double p : {1.5, 2.0, 3.0}) {
        const auto res = solve_lambda1_ball({p, 1, -1.3, 1.0});
        EXPECT_NEAR(res.lambda1, lambda1_halfline(-1.3, p), 1e-8 * std::abs(res.lambda1)) << p;
    }
}

TEST(Solve, PropertyRandomParameters) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> p_dist(1.3, 4.0), a_dist(-6.0, -0.3), r_dist(0.3, 3.0);
    std::uniform_int_distribution<int> n_dist(1, 4);
    int solved = 0;
    for (int i = 0; i < 12; ++i) {
        const ProblemParams pp{p_dist(rng), n_dist(rng), a_dist(rng), r_dist(rng)};
        if (!(pp.alpha < steklov_threshold(pp))) {
            continue;
        }
        const auto res = solve_lambda1_ball(pp);
        ++solved;
        EXPECT_LT(res.lambda1, 0.0);
        EXPECT_GE(res.lambda1, lambda_floor(pp.alpha, pp.p) * (1 + 1e-9));
        EXPECT_TRUE(res.trajectory.strictly_decreasing() || pp.n == 1);
        EXPECT_LE(res.g_limit_residual, 1e-6);
    }
    EXPECT_GT(solved, 6);
}

TEST(Solve, RejectsBadOptions) {
    SolverOptions bad;
    bad.lambda_tol = 0.0;
    EXPECT_THROW(solve_lambda1_ball({2.0, 3, -2.0, 1.0}, bad), std::invalid_argument);
}

TEST(Eigenfunction, ClosedFormThreeDimensional) {
    const auto res = solve_lambda1_ball({2.0, 3, -2.0, 1.0});
    const auto phi = eigenfunction_from_g(res.trajectory);
    ASSERT_GT(phi.size(), 10u);
    EXPECT_DOUBLE_EQ(phi.values.front(), 1.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const double r = phi.nodes[i];
        if (r > 20.0) {
            break;
        }
        const double exact = std::exp(-(r - 1.0)) / r;
        worst = std::max(worst, std::abs(phi.values[i] - exact) / exact);
    }
    EXPECT_LT(worst, 1e-6);
    EXPECT_TRUE(is_strictly_decreasing(phi));
}

TEST(Eigenfunction, HalfLineExponential) {
    GTrajectory traj;
    for (int i = 0; i <= 100; ++i) {
        traj.radii.push_back(2.0 + 0.1 * i);
        traj.g_values.push_back(1.5);
    }
    const auto phi = eigenfunction_from_g(traj);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        EXPECT_NEAR(phi.values[i], std::exp(-1.5 * (phi.nodes[i] - 2.0)), 1e-13);
    }
}

TEST(Eigenfunction, DecreasingForConvergedTrajectories) {
    for (double p : {1.5, 3.0}) {
        const auto res = solve_lambda1_ball({p, 2, -2.0, 1.0});
        const auto phi = eigenfunction_from_g(res.trajectory);
        EXPECT_TRUE(is_positive(phi));
        EXPECT_TRUE(is_strictly_decreasing(phi));
    }
}

TEST(EffectiveRobinRatio, BoundaryAndMonotonicity) {
    for (double p : {1.5, 2.0, 3.0}) {
        const ProblemParams pp{p, 3, -3.0, 1.0};
        const auto res = solve_lambda1_ball(pp);
        const auto& traj = res.trajectory;
        EXPECT_NEAR(effective_robin_ratio(traj, p, 1.0, 1.0), pp.alpha, 1e-12);
        double prev = pp.alpha;
        for (double r : {1.1, 1.5, 2.0, 4.0}) {
            const double v = effective_robin_ratio(traj, p, r, 1.0);
            EXPECT_GT(v, prev) << p << ' ' << r;
            EXPECT_LT(v, 0.0);
            prev = v;
            EXPECT_GT(effective_robin_ratio(traj, p, r, 0.5), -std::pow(traj.g_at(r), p - 1.0));
        }
        EXPECT_THROW(effective_robin_ratio(traj, p, 2.0, 0.0), std::invalid_argument);
    }
}
