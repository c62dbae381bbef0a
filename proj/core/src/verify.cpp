#include "extrobin/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "extrobin/bessel.hpp"
#include "extrobin/closed_form.hpp"
#include "extrobin/error.hpp"
#include "extrobin/geometry.hpp"
#include "extrobin/shooting.hpp"
#include "extrobin/variational.hpp"

namespace extrobin {

namespace {

// λ₁ with the convention λ₁ = 0 when there is no negative eigenvalue.
double lambda1_or_zero(const ProblemParams& pp) {
    try {
        return solve_lambda1_ball(pp).lambda1;
    } catch (const SolverError& e) {
        if (e.kind() == ErrorKind::NoNegativeEigenvalue) {
            return 0.0;
        }
        throw;
    }
}

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

PointOutcome outcome(GridPoint point, std::string label, double margin, bool pass) {
    PointOutcome o;
    o.point = std::move(point);
    o.label = std::move(label);
    o.margin = margin;
    o.pass = pass;
    return o;
}

GridPoint params_point(const ProblemParams& pp) {
    return {{"p", pp.p}, {"n", pp.n}, {"alpha", pp.alpha}, {"R", pp.R}};
}

VerificationReport ineq_chain() {
    VerificationReport rep{"thm-ineq-chain",
                           "for α < α*(p,n,B_R^ext): λ₁(α,p,n,B_R^ext) > λ₁(α,p,n−1,B_R^ext) "
                           "≥ −(p−1)|α|^{p/(p−1)}",
                           {}};
    constexpr double kMargin = 1e-6;
    for (double p : {1.5, 2.0, 3.0}) {
        for (double alpha : {-1.0, -4.0}) {
            const double floor = lambda_floor(alpha, p);
            double lower_dim = lambda1_halfline(alpha, p);
            {
                // n = 1 sits on the floor itself.
                const double m = (lower_dim - floor) / std::abs(floor);
                rep.outcomes.push_back(outcome({{"p", p}, {"n", 1}, {"alpha", alpha}, {"R", 1.0}},
                                               "n=1 vs floor", m, std::abs(m) <= 1e-14));
            }
            for (int n : {2, 3}) {
                const ProblemParams pp{p, n, alpha, 1.0};
                const double lam = lambda1_or_zero(pp);
                const double m = (lam - lower_dim) / std::max(std::abs(lower_dim), 1e-300);
                auto o = outcome(params_point(pp), "n=" + std::to_string(n) + " vs n=" +
                                                       std::to_string(n - 1),
                                 m, m > kMargin);
                if (!(alpha < steklov_threshold(pp))) {
                    o.applicable = false;
                    o.pass = true;
                }
                rep.outcomes.push_back(std::move(o));
                lower_dim = lam;
            }
        }
    }
    return rep;
}

VerificationReport sandwich() {
    VerificationReport rep{"cuteidea-sandwich",
                           "for n = p and α < 0, with Λ = λ₁(−|α|^{1/(n−1)},2,2,B_1^ext): "
                           "(n−1)|α|^{(n−2)/(n−1)}Λ ≤ λ₁(α,n,n,B_1^ext) ≤ −(n−1)|Λ|^{n/2}",
                           {}};
    constexpr int n = 3;
    for (double alpha : {-2.0, -4.0, -8.0}) {
        const double lambda_p2 =
            lambda1_ball_p2(2, 1.0, -std::pow(std::abs(alpha), 1.0 / (n - 1)));
        const auto b = critical_case_bounds(alpha, n, lambda_p2);
        const double lam = solve_lambda1_ball({double(n), n, alpha, 1.0}).lambda1;
        const double m = std::min(lam - b.lower, b.upper - lam);
        rep.outcomes.push_back(outcome({{"p", n}, {"n", n}, {"alpha", alpha}, {"R", 1.0}},
                                       "lower <= lambda1 <= upper", m, m >= -1e-8));
    }
    return rep;
}

VerificationReport scaling() {
    VerificationReport rep{"scaling-invariance",
                           "λ₁(β^{1−p}α,p,n,B_{βR}^ext) = λ₁(α,p,n,B_R^ext)/β^p", {}};
    const double tol = 10.0 * SolverOptions{}.lambda_tol;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> p_dist(1.5, 3.0), r_dist(0.5, 2.0), a_dist(0.5, 4.0);
    for (int k = 0; k < 10; ++k) {
        const double p = p_dist(rng);
        const int n = (k % 2 == 0) ? 2 : 3;
        const double R = r_dist(rng);
        const double beta = r_dist(rng);
        ProblemParams pp{p, n, -1.0, R};
        pp.alpha = std::min(steklov_threshold(pp), 0.0) - a_dist(rng);
        const double lam = solve_lambda1_ball(pp).lambda1;
        const double lam_scaled = solve_lambda1_ball(scale_problem(pp, beta)).lambda1;
        const double dev = std::abs(std::pow(beta, p) * lam_scaled - lam) / std::abs(lam);
        auto pt = params_point(pp);
        pt.emplace_back("beta", beta);
        rep.outcomes.push_back(outcome(std::move(pt), "beta^p * scaled vs original",
                                       tol - dev, dev <= tol));
        // The eigenvalue map agrees with the solver on the scaled problem.
        const double mapped = scale_eigenvalue(lam, beta, p);
        const double dev_map = rel_gap(mapped, lam_scaled);
        rep.outcomes.push_back(outcome(params_point(scale_problem(pp, beta)),
                                       "scale_eigenvalue vs solve", tol - dev_map,
                                       dev_map <= tol));
    }
    return rep;
}

VerificationReport segura() {
    VerificationReport rep{"segura",
                           "x K_{m/2+1}(x)/K_{m/2}(x) ≥ m/2 + √(m²/4 + x²) for x > 0", {}};
    constexpr int kPoints = 100;
    for (int m = 0; m <= 3; ++m) {
        double worst = std::numeric_limits<double>::infinity();
        double worst_x = 0.0;
        for (int i = 0; i < kPoints; ++i) {
            const double x = std::pow(10.0, -2.0 + 4.0 * i / (kPoints - 1));
            const double gap = segura_ratio_gap(m, x);
            if (gap < worst) {
                worst = gap;
                worst_x = x;
            }
        }
        rep.outcomes.push_back(outcome({{"m", m}, {"x", worst_x}}, "min gap on log grid [1e-2, 1e2]",
                                       worst, worst >= 0.0));
    }
    // Reference values K₀(1), K₁(1).
    constexpr double k0 = 0.42102443824070833334, k1 = 0.60190723019723457474;
    const double dev = std::max(rel_gap(bessel_k(0.0, 1.0).value, k0),
                                rel_gap(bessel_k(1.0, 1.0).value, k1));
    rep.outcomes.push_back(outcome({{"x", 1.0}}, "K0(1), K1(1) reference", 1e-10 - dev,
                                   dev <= 1e-10));
    return rep;
}

VerificationReport pac() {
    VerificationReport rep{
        "pac-divergence",
        "Q[|x|^{−3/p}] on the exterior of B_1 ∖ {x₁ ≥ ε, |x₂| ≤ x₁^{p+3}} → −∞ as ε → 0, with "
        "mass ≤ 2/(p+1) + 2π and gradient ≤ 2(3/p)^p + (3/p)^p·2π/(p+1)",
        {}};
    constexpr double p = 2.0, alpha = -1.0;
    const double mass_bound = 2.0 / (p + 1.0) + 2.0 * std::numbers::pi;
    const double grad_bound = pac_gradient_bound(p);
    double prev = std::numeric_limits<double>::infinity();
    for (double eps : {0.3, 0.1, 0.03, 0.01}) {
        const auto q = pac_quotient({p, eps}, alpha);
        const GridPoint pt{{"p", p}, {"epsilon", eps}, {"alpha", alpha}};
        if (std::isfinite(prev)) {
            rep.outcomes.push_back(outcome(pt, "quotient decreases", prev - q.quotient,
                                           q.quotient < prev));
        }
        rep.outcomes.push_back(
            outcome(pt, "mass bound", mass_bound - q.mass_term, q.mass_term <= mass_bound));
        rep.outcomes.push_back(outcome(pt, "gradient bound", grad_bound - q.gradient_term,
                                       q.gradient_term <= grad_bound));
        prev = q.quotient;
    }
    rep.outcomes.push_back(outcome({{"p", p}, {"epsilon", 0.01}, {"alpha", alpha}},
                                   "quotient below -1e3", -1e3 - prev, prev < -1e3));
    return rep;
}

VerificationReport strong_coupling() {
    VerificationReport rep{"asym-strong-coupling",
                           "(λ₁(α) + (p−1)|α|^{p/(p−1)}) / ((n−1)|α|/R) → 1 as α → −∞", {}};
    auto ratio = [](const ProblemParams& pp) {
        const double lam = solve_lambda1_ball(pp).lambda1;
        const double two_term = strong_coupling_expansion(pp.alpha, pp.p, pp.n, -1.0 / pp.R);
        const double floor = lambda_floor(pp.alpha, pp.p);
        // (λ - floor) / ((n-1)|α|/R), with the denominator taken from the expansion.
        return (lam - floor) / (two_term - floor);
    };
    for (double p : {2.0, 3.0}) {
        for (int n : {2, 3}) {
            const double r10 = ratio({p, n, -10.0, 1.0});
            const double r100 = ratio({p, n, -100.0, 1.0});
            const double e10 = std::abs(r10 - 1.0), e100 = std::abs(r100 - 1.0);
            const double m = std::min(0.2 - e100, e10 - e100);
            rep.outcomes.push_back(outcome({{"p", p}, {"n", n}, {"alpha", -100.0}, {"R", 1.0}},
                                           "ratio in [0.8, 1.2], closer to 1 than at alpha=-10",
                                           m, m > 0.0));
        }
    }
    return rep;
}

VerificationReport small_alpha() {
    VerificationReport rep{"asym-small-alpha",
                           "for 2 ≤ n < p: λ₁(α,p,n,B_1^ext) ≤ −(p^n/(2Γ(n)))^{p/(p−n)}|α|^{p/(p−n)}"
                           "(1 + o(1)) as α → 0⁻, and λ₁/|α|^{p/(p−n)−1/2} → 0",
                           {}};
    constexpr double p = 3.0;
    constexpr int n = 2;
    const double power = p / (p - n);
    double prev_scaled = 0.0;
    double last_lambda = 0.0, last_alpha = 0.0;
    for (double alpha : {-1e-3, -1e-4, -1e-5, -1e-6}) {
        const ProblemParams pp{p, n, alpha, 1.0};
        const double lam = solve_lambda1_ball(pp).lambda1;
        const double scaled = lam / std::pow(std::abs(alpha), power - 0.5);
        if (prev_scaled != 0.0) {
            const double m = 0.5 * std::abs(prev_scaled) - std::abs(scaled);
            rep.outcomes.push_back(outcome(params_point(pp), "scaled value at most half the previous",
                                           m, m >= 0.0));
        }
        // e^{-β(α) r} is an admissible test function: its quotient bounds λ₁ from above.
        const double q = envelope_test_function_quotient(pp, envelope_beta(alpha, p, n));
        rep.outcomes.push_back(outcome(params_point(pp), "test-function quotient >= lambda1",
                                       (q - lam) / std::abs(lam), q >= lam));
        prev_scaled = scaled;
        last_lambda = lam;
        last_alpha = alpha;
    }
    const double envelope = small_alpha_envelope(last_alpha, p, n);
    const double m = 0.5 * envelope - last_lambda;
    rep.outcomes.push_back(outcome(params_point({p, n, last_alpha, 1.0}),
                                   "lambda1 <= 0.5 * envelope", m / std::abs(envelope), m >= 0.0));
    return rep;
}

VerificationReport monotonicity() {
    VerificationReport rep{"r-monotonicity",
                           "for α₁ < α₂ < α* and R₁ < R₂: λ₁(α₁) ≤ λ₁(α₂) and "
                           "λ₁(α,p,n,B_{R₂}^ext) ≤ λ₁(α,p,n,B_{R₁}^ext)",
                           {}};
    constexpr double kTol = 1e-8;
    constexpr std::array<double, 8> alphas{-8.0, -6.0, -4.0, -3.0, -2.0, -1.6, -1.3, -1.1};
    constexpr std::array<double, 8> radii{0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0};
    constexpr std::array<std::pair<double, int>, 3> cases{{{1.5, 2}, {3.0, 2}, {3.0, 3}}};
    for (const auto& [p, n] : cases) {
        double prev = 0.0;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            const ProblemParams pp{p, n, alphas[i], 1.0};
            const double lam = solve_lambda1_ball(pp).lambda1;
            if (i > 0) {
                const double m = (lam - prev) / std::abs(prev);
                rep.outcomes.push_back(outcome(params_point(pp), "nondecreasing in alpha", m,
                                               m >= -kTol));
            }
            prev = lam;
        }
        for (std::size_t i = 0; i < radii.size(); ++i) {
            const ProblemParams pp{p, n, -2.0, radii[i]};
            const double lam = solve_lambda1_ball(pp).lambda1;
            if (i > 0) {
                const double m = (prev - lam) / std::abs(prev);
                rep.outcomes.push_back(
                    outcome(params_point(pp), "nonincreasing in R", m, m >= -kTol));
            }
            prev = lam;
        }
    }
    return rep;
}

VerificationReport closed_forms() {
    VerificationReport rep{"closed-form-oracle",
                           "λ₁(α,2,3,B_R^ext) = −(|α| − 1/R)²; λ₁(α,2,2,B_R^ext) = −s² with "
                           "s K₁(sR)/K₀(sR) = |α|; φ = e^{−s(r−R)}R/r for n = 3",
                           {}};
    for (double alpha : {-1.5, -2.0, -4.0}) {
        for (double R : {1.0, 2.0}) {
            const ProblemParams pp{2.0, 3, alpha, R};
            const double exact = -std::pow(std::abs(alpha) - 1.0 / R, 2);
            const double dev = rel_gap(solve_lambda1_ball(pp).lambda1, exact);
            rep.outcomes.push_back(outcome(params_point(pp), "n=3 closed form", 1e-8 - dev,
                                           dev <= 1e-8));
            const double dev_b = rel_gap(lambda1_ball_p2(3, R, alpha), exact);
            rep.outcomes.push_back(outcome(params_point(pp), "Bessel module n=3", 1e-12 - dev_b,
                                           dev_b <= 1e-12));
        }
    }
    for (double alpha : {-0.5, -1.0, -2.0, -5.0}) {
        const ProblemParams pp{2.0, 2, alpha, 1.0};
        const double dev = rel_gap(solve_lambda1_ball(pp).lambda1, lambda1_ball_p2(2, 1.0, alpha));
        rep.outcomes.push_back(
            outcome(params_point(pp), "n=2 secular equation", 1e-6 - dev, dev <= 1e-6));
    }

    // Eigen-trajectory structure at the n = 3 regression point.
    const ProblemParams pp{2.0, 3, -2.0, 1.0};
    const auto res = solve_lambda1_ball(pp);
    const auto& traj = res.trajectory;
    const double gR = std::abs(pp.alpha);
    rep.outcomes.push_back(outcome(params_point(pp), "g strictly decreasing, g(R) = |alpha|",
                                   res.g_limit_residual,
                                   traj.strictly_decreasing() && traj.g_values.front() == gR &&
                                       res.g_limit_residual <= 1e-6));
    const double s = std::sqrt(-res.lambda1);
    const auto phi = eigenfunction_from_g(traj);
    double worst = 0.0;
    for (std::size_t i = 0; i < phi.size() && phi.nodes[i] <= 20.0; ++i) {
        const double r = phi.nodes[i];
        worst = std::max(worst, rel_gap(phi.values[i], std::exp(-s * (r - 1.0)) / r));
    }
    rep.outcomes.push_back(outcome(params_point(pp), "eigenfunction vs e^{-(r-1)}/r on [1, 20]",
                                   1e-6 - worst, worst <= 1e-6));
    // Closed-form g = s + 1/r satisfies the Riccati equation exactly.
    double rhs_dev = 0.0;
    for (double r : {1.0, 2.0, 5.0, 10.0}) {
        rhs_dev = std::max(rhs_dev, std::abs(g_rhs(r, 1.0 + 1.0 / r, -1.0, 2.0, 3) + 1.0 / (r * r)));
    }
    rep.outcomes.push_back(outcome(params_point(pp), "g' = -1/r^2 for g = 1 + 1/r", 1e-12 - rhs_dev,
                                   rhs_dev <= 1e-12));
    // Off-eigenvalue shots land on opposite sides.
    const auto low = classify_shot(integrate_g(-1.01, pp, {}), pp, {});
    const auto high = classify_shot(integrate_g(-0.99, pp, {}), pp, {});
    rep.outcomes.push_back(outcome(params_point(pp), "shots at 1.01*lambda and 0.99*lambda split",
                                   0.0, low == ShotClass::TooLow && high == ShotClass::TooHigh));
    const double ratio_R = effective_robin_ratio(traj, pp.p, pp.R, 1.0);
    const double ratio_far = effective_robin_ratio(traj, pp.p, 3.0, 1.0);
    const double ratio_tilted = effective_robin_ratio(traj, pp.p, 3.0, 0.5);
    rep.outcomes.push_back(outcome(
        params_point(pp), "effective Robin ratio: alpha at R, increasing in r and in tilt",
        ratio_far - ratio_R,
        std::abs(ratio_R - pp.alpha) <= 1e-12 && ratio_far > ratio_R && ratio_tilted > ratio_far));

    for (double p : {1.5, 2.0, 3.0}) {
        const double lam = lambda1_halfline(-1.0, p);
        const double two_term = strong_coupling_expansion(-1.0, p, 1, -1.0);
        rep.outcomes.push_back(outcome({{"p", p}, {"n", 1}, {"alpha", -1.0}}, "n=1 closed form",
                                       0.0, lam < 0.0 && lam == two_term));
    }
    return rep;
}

VerificationReport threshold() {
    VerificationReport rep{"threshold",
                           "λ₁(α,p,n,B_R^ext) < 0 iff α < α* = −((n−p)/((p−1)R))^{p−1} for 1 < p < n",
                           {}};
    const ProblemParams base{2.0, 3, -1.0, 1.0};
    const double alpha_star = steklov_threshold(base);
    for (double alpha : {-0.9, -0.99, -1.01, -1.1}) {
        ProblemParams pp = base;
        pp.alpha = alpha;
        bool refused = false;
        double lam = 0.0;
        try {
            lam = solve_lambda1_ball(pp).lambda1;
        } catch (const SolverError& e) {
            refused = e.kind() == ErrorKind::NoNegativeEigenvalue;
        }
        if (alpha >= alpha_star) {
            rep.outcomes.push_back(outcome(params_point(pp), "no negative eigenvalue",
                                           alpha - alpha_star, refused));
        } else {
            const double exact = -std::pow(std::abs(alpha) - 1.0, 2);
            const double dev = rel_gap(lam, exact);
            rep.outcomes.push_back(outcome(params_point(pp), "negative eigenvalue, closed form",
                                           1e-6 - dev, !refused && lam < 0.0 && dev <= 1e-6));
        }
    }
    // α*·R^{p-1} does not depend on R.
    for (double R : {0.5, 2.0, 4.0}) {
        ProblemParams pp{2.5, 4, -1.0, R};
        const double dev = rel_gap(steklov_threshold(pp) * std::pow(R, pp.p - 1.0),
                                   steklov_threshold({2.5, 4, -1.0, 1.0}));
        rep.outcomes.push_back(
            outcome(params_point(pp), "alpha* R^{p-1} invariant", 1e-14 - dev, dev <= 1e-14));
    }
    return rep;
}

VerificationReport convex_bound() {
    VerificationReport rep{"convex-bound", "λ₁(α,2,2,Ω^ext) ≥ −α² for bounded convex Ω", {}};
    for (double alpha : {-0.5, -1.0, -2.0, -5.0, -20.0}) {
        for (double R : {0.5, 1.0, 2.0}) {
            const double lam = lambda1_ball_p2(2, R, alpha);
            const double bound = convex_lower_bound_p2(alpha);
            rep.outcomes.push_back(outcome({{"p", 2.0}, {"n", 2}, {"alpha", alpha}, {"R", R}},
                                           "ball value above -alpha^2", lam - bound,
                                           lam >= bound && lam < 0.0));
        }
    }
    return rep;
}

VerificationReport variational() {
    VerificationReport rep{"variational-consistency",
                           "min over radial u of (∫|u'|^p r^{n−1} + α|u(R)|^p R^{n−1}) / ∫|u|^p r^{n−1} "
                           "equals the shooting λ₁; tail-extended quotients bound it from above",
                           {}};
    const double lambda_tol = SolverOptions{}.lambda_tol;
    struct Case {
        ProblemParams params;
        double r0;
        int cells;
        double tol;
    };
    const std::array<Case, 3> cases{{{{2.0, 3, -2.0, 1.0}, 30.0, 512, 1e-3},
                                     {{2.0, 2, -1.0, 1.0}, 40.0, 1024, 1e-3},
                                     {{3.0, 2, -2.0, 1.0}, 40.0, 1024, 1e-2}}};
    for (const auto& c : cases) {
        const auto shot = solve_lambda1_ball(c.params);
        const auto coarse = minimize_truncated(c.params, c.r0, c.cells, 1e-12);
        const auto fine = minimize_truncated(c.params, c.r0, 2 * c.cells, 1e-12);
        const double extrap = richardson_extrapolate(coarse.lambda, fine.lambda);
        const double dev = rel_gap(extrap, shot.lambda1);
        auto pt = params_point(c.params);
        pt.emplace_back("R0", c.r0);
        pt.emplace_back("N", c.cells);
        rep.outcomes.push_back(outcome(pt, "extrapolated minimum vs shooting", c.tol - dev,
                                       dev <= c.tol));
        const bool shape = is_positive(fine.profile) && is_strictly_decreasing(fine.profile);
        const double err_coarse = std::abs(coarse.lambda - shot.lambda1);
        const double err_fine = std::abs(fine.lambda - shot.lambda1);
        rep.outcomes.push_back(outcome(pt, "positive decreasing minimizer, error shrinks with N",
                                       err_coarse - err_fine, shape && err_fine < err_coarse));
        const auto q = rayleigh_quotient(fine.profile, c.params,
                                         decay_rate(shot.lambda1, c.params.p));
        const double slack = 10.0 * lambda_tol * std::abs(shot.lambda1);
        rep.outcomes.push_back(outcome(pt, "tail-extended quotient >= lambda1",
                                       q.quotient - shot.lambda1 + slack,
                                       q.quotient >= shot.lambda1 - slack));
    }
    for (double p : {1.5, 2.0, 3.0}) {
        const ProblemParams pp{p, 1, -1.0, 1.0};
        const auto coarse = minimize_truncated(pp, 31.0, 512, 1e-12);
        const auto fine = minimize_truncated(pp, 31.0, 1024, 1e-12);
        const double dev =
            std::abs(richardson_extrapolate(coarse.lambda, fine.lambda) - lambda1_halfline(-1.0, p));
        rep.outcomes.push_back(
            outcome(params_point(pp), "n=1 minimum vs closed form", 1e-4 - dev, dev <= 1e-4));
    }
    {
        const ProblemParams pp{3.0, 2, -1.0, 1.0};
        const double a = envelope_test_function_quotient(pp, 1.0, QuadraturePath::Analytic);
        const double b = envelope_test_function_quotient(pp, 1.0, QuadraturePath::Numeric);
        rep.outcomes.push_back(outcome(params_point(pp), "envelope quotient analytic vs quadrature",
                                       1e-8 - std::abs(a - b), std::abs(a - b) <= 1e-8));
        const double big = envelope_test_function_quotient(pp, 50.0);
        rep.outcomes.push_back(outcome(params_point(pp), "envelope quotient positive for beta=50",
                                       big, big > 0.0));
    }
    return rep;
}

VerificationReport ellipsoid() {
    VerificationReport rep{"ellipsoid-comparator",
                           "for E(a) ⊂ R^n and the ball B with |B| = |E(a)|: −(n−2+a²)/(n−1) < −a^{1/n} "
                           "iff a < a†, which orders the two-term expansions at strong coupling",
                           {}};
    for (int n : {3, 4}) {
        const double at = ellipsoid_threshold(n);
        const auto below = expansion_comparator(-100.0, 2.0, {n, 0.5 * at});
        const auto above = expansion_comparator(-100.0, 2.0, {n, std::min(1.0, 2.0 * at)});
        rep.outcomes.push_back(outcome({{"n", n}, {"a", 0.5 * at}}, "comparator true below threshold",
                                       below.ellipsoid - below.ball, below.ellipsoid_above));
        rep.outcomes.push_back(outcome({{"n", n}, {"a", std::min(1.0, 2.0 * at)}},
                                       "comparator false above threshold",
                                       above.ball - above.ellipsoid, !above.ellipsoid_above));
        const EllipsoidSpec unit{n, 1.0};
        const double dev = std::abs(ellipsoid_hmax_ext(unit) - equal_volume_ball_hmax_ext(unit));
        rep.outcomes.push_back(outcome({{"n", n}, {"a", 1.0}}, "H_max agree at a=1", 1e-12 - dev,
                                       dev <= 1e-12));
    }
    return rep;
}

struct Entry {
    const char* id;
    VerificationReport (*run)();
};

constexpr std::array<Entry, 13> kRegistry{{
    {"thm-ineq-chain", ineq_chain},
    {"cuteidea-sandwich", sandwich},
    {"scaling-invariance", scaling},
    {"segura", segura},
    {"pac-divergence", pac},
    {"asym-strong-coupling", strong_coupling},
    {"asym-small-alpha", small_alpha},
    {"r-monotonicity", monotonicity},
    {"closed-form-oracle", closed_forms},
    {"threshold", threshold},
    {"convex-bound", convex_bound},
    {"variational-consistency", variational},
    {"ellipsoid-comparator", ellipsoid},
}};

}  // namespace

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.pass; }));
}

bool VerificationReport::all_passed() const { return passed() == outcomes.size(); }

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& e : kRegistry) {
        ids.emplace_back(e.id);
    }
    return ids;
}

VerificationReport run_check(std::string_view check_id) {
    for (const auto& e : kRegistry) {
        if (check_id == e.id) {
            return e.run();
        }
    }
    throw std::invalid_argument("unknown check id: " + std::string(check_id));
}

std::vector<VerificationReport> run_all() {
    std::vector<VerificationReport> reports;
    for (const auto& id : check_ids()) {
        reports.push_back(run_check(id));
    }
    return reports;
}

}  // namespace extrobin
