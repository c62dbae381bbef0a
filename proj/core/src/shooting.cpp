#include "extrobin/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "extrobin/closed_form.hpp"
#include "extrobin/error.hpp"
#include "extrobin/ode.hpp"

namespace extrobin {

const char* to_string(Termination t) noexcept {
    switch (t) {
    case Termination::ReachedRMax: return "ReachedRMax";
    case Termination::GCrossedFloor: return "GCrossedFloor";
    case Termination::GBlewUp: return "GBlewUp";
    case Termination::StepFailure: return "StepFailure";
    }
    return "Unknown";
}

const char* to_string(ShotClass c) noexcept {
    switch (c) {
    case ShotClass::TooLow: return "TooLow";
    case ShotClass::TooHigh: return "TooHigh";
    case ShotClass::Converged: return "Converged";
    }
    return "Unknown";
}

double GTrajectory::g_at(double r) const {
    if (radii.empty() || r < radii.front() || r > radii.back()) {
        throw std::out_of_range("GTrajectory::g_at: radius outside trajectory");
    }
    const auto it = std::lower_bound(radii.begin(), radii.end(), r);
    const auto i = static_cast<std::size_t>(it - radii.begin());
    if (radii[i] == r) {
        return g_values[i];
    }
    const double t = (r - radii[i - 1]) / (radii[i] - radii[i - 1]);
    return (1.0 - t) * g_values[i - 1] + t * g_values[i];
}

bool GTrajectory::strictly_decreasing() const {
    for (std::size_t i = 1; i < g_values.size(); ++i) {
        if (!(g_values[i] < g_values[i - 1])) {
            return false;
        }
    }
    return true;
}

void SolverOptions::validate() const {
    const bool ok = r_max_factor > 0 && ode_rel_tol > 0 && ode_abs_tol > 0 && lambda_tol > 0 &&
                    max_bisections > 0 && floor_guard > 0 && floor_guard < 1 &&
                    blowup_factor > 1 && converge_tol > 0 && far_field_tol > 0 &&
                    match_tol > 0 && max_r_max_doublings >= 0;
    if (!ok) {
        throw std::invalid_argument("SolverOptions: tolerances and factors must be positive");
    }
}

double g_rhs(double r, double g, double lambda, double p, int n) {
    if (!(g > 0.0) || !(r > 0.0)) {
        throw std::invalid_argument("g_rhs: requires r > 0 and g > 0");
    }
    // [λ + (p-1)g^p - ((n-1)/r)g^{p-1}] / ((p-1)g^{p-2}), expanded termwise.
    return g * g - (n - 1) * g / ((p - 1.0) * r) + lambda * std::pow(g, 2.0 - p) / (p - 1.0);
}

double g_rhs_dg(double r, double g, double lambda, double p, int n) {
    return 2.0 * g - (n - 1) / ((p - 1.0) * r) +
           lambda * (2.0 - p) * std::pow(g, 1.0 - p) / (p - 1.0);
}

FarFieldExpansion far_field_expansion(double lambda, double p, int n) {
    if (!(lambda < 0.0)) {
        throw std::invalid_argument("far_field_expansion: lambda must be negative");
    }
    const double c = decay_rate(lambda, p);
    const double k = (n - 1) / (p - 1.0);
    const double d = k / p;
    const double m = 1.0 - 0.5 * (2.0 - p) * (1.0 - p);
    const double e = (k * d - d - m * d * d) / (p * c);
    return {c, d, e};
}

namespace {

void require_shootable(double lambda, const ProblemParams& params) {
    params.validate();
    if (!(params.alpha < 0.0)) {
        throw std::invalid_argument("shooting requires alpha < 0");
    }
    if (!(lambda < 0.0)) {
        throw std::invalid_argument("shooting requires lambda < 0");
    }
}

double boundary_g(const ProblemParams& params) {
    return std::pow(std::abs(params.alpha), 1.0 / (params.p - 1.0));
}

ode::AdaptiveOptions outward_ode_options(const SolverOptions& opts, double scale) {
    ode::AdaptiveOptions o;
    o.rel_tol = opts.ode_rel_tol;
    o.abs_tol = opts.ode_abs_tol;
    o.h_init = 1e-3 * scale;
    return o;
}

}  // namespace

double shot_r_max(double lambda, const ProblemParams& params, const SolverOptions& opts) {
    return params.R + opts.r_max_factor / decay_rate(lambda, params.p);
}

GTrajectory integrate_g(double lambda, const ProblemParams& params, const SolverOptions& opts) {
    require_shootable(lambda, params);
    const double p = params.p;
    const int n = params.n;
    const double g0 = boundary_g(params);
    const double c = decay_rate(lambda, p);
    const double floor_g = c * (1.0 - opts.floor_guard);
    const double ceiling_g = opts.blowup_factor * g0;
    const double r_max = shot_r_max(lambda, params, opts);

    GTrajectory traj;
    traj.lambda = lambda;
    traj.radii.push_back(params.R);
    traj.g_values.push_back(g0);
    traj.terminated_at = Termination::ReachedRMax;

    // g below the floor or above the ceiling ends the shot; the right-hand side
    // is only evaluated for g > 0, guarded here for trial stages of a step.
    auto rhs = [&](double r, double g) {
        if (!(g > 0.0)) {
            return -1e300;
        }
        return g_rhs(r, g, lambda, p, n);
    };
    auto observer = [&](double r, double g, double) {
        if (!(g > floor_g)) {
            traj.terminated_at = Termination::GCrossedFloor;
            return false;
        }
        traj.radii.push_back(r);
        traj.g_values.push_back(g);
        if (g > ceiling_g) {
            traj.terminated_at = Termination::GBlewUp;
            return false;
        }
        return true;
    };
    const auto res = ode::integrate_dopri45(rhs, params.R, g0, r_max,
                                            outward_ode_options(opts, 1.0 / std::max(c, g0)),
                                            observer);
    if (res.outcome == ode::Outcome::StepFailure) {
        traj.terminated_at = Termination::StepFailure;
    }
    return traj;
}

GTrajectory integrate_g_inward(double lambda, const ProblemParams& params,
                               const SolverOptions& opts, double r_far) {
    require_shootable(lambda, params);
    if (!(r_far > params.R)) {
        throw std::invalid_argument("integrate_g_inward: r_far must exceed R");
    }
    const double p = params.p;
    const int n = params.n;
    const auto asym = far_field_expansion(lambda, p, n);
    const double g_far = std::max(asym(r_far), asym.c);

    std::vector<double> radii{r_far};
    std::vector<double> gs{g_far};
    auto rhs = [&](double r, double g) { return g_rhs(r, g, lambda, p, n); };
    auto jac = [&](double r, double g) { return g_rhs_dg(r, g, lambda, p, n); };
    auto observer = [&](double r, double g, double) {
        radii.push_back(r);
        gs.push_back(g);
        return true;
    };
    ode::AdaptiveOptions o;
    o.rel_tol = 100.0 * opts.ode_rel_tol;
    o.abs_tol = opts.ode_abs_tol;
    o.h_init = 1e-3 * r_far;
    // Backward Euler is L-stable, so its step-doubling estimate cannot see a
    // step that jumps along the slow manifold; keep steps short relative to r.
    o.h_max_rel = 0.02;
    const auto res = ode::integrate_implicit(rhs, jac, r_far, g_far, params.R, o, observer);

    GTrajectory traj;
    traj.lambda = lambda;
    traj.terminated_at = res.outcome == ode::Outcome::StepFailure ? Termination::StepFailure
                                                                  : Termination::ReachedRMax;
    traj.radii.assign(radii.rbegin(), radii.rend());
    traj.g_values.assign(gs.rbegin(), gs.rend());
    return traj;
}

ShotClass classify_shot(const GTrajectory& traj, const ProblemParams& params,
                        const SolverOptions& opts) {
    switch (traj.terminated_at) {
    case Termination::GBlewUp: return ShotClass::TooHigh;
    case Termination::GCrossedFloor: return ShotClass::TooLow;
    case Termination::StepFailure:
        throw SolverError(ErrorKind::StepFailure,
                          "ODE step size underflow at lambda = " + std::to_string(traj.lambda));
    case Termination::ReachedRMax: break;
    }
    // The shot stayed on the decaying branch up to R_max; compare with the
    // far-field expansion to decide.
    const auto asym = far_field_expansion(traj.lambda, params.p, params.n);
    const double r_end = traj.radii.back();
    const double dev = traj.g_values.back() - asym(r_end);
    if (std::abs(dev) <= opts.converge_tol * asym.c) {
        return ShotClass::Converged;
    }
    return dev > 0 ? ShotClass::TooHigh : ShotClass::TooLow;
}

namespace {

struct BisectionOutcome {
    EigenvalueBracket bracket;
    int iterations = 0;
    int low = 0;
    int high = 0;
    bool converged_shot = false;
};

BisectionOutcome bisect(const ProblemParams& params, const SolverOptions& opts) {
    // λ₁ lies strictly between the n = 1 floor and 0; neither end is shot.
    double lo = lambda_floor(params.alpha, params.p);
    double hi = 0.0;
    BisectionOutcome out;
    for (int it = 0; it < opts.max_bisections; ++it) {
        double mid;
        if (hi == 0.0) {
            mid = 0.125 * lo;
        } else if (lo / hi > 4.0) {
            mid = -std::sqrt(lo * hi);
        } else {
            mid = 0.5 * (lo + hi);
        }
        if (!(mid > lo && mid < hi) || !(mid < 0.0)) {
            break;
        }
        ++out.iterations;
        const auto traj = integrate_g(mid, params, opts);
        const auto cls = classify_shot(traj, params, opts);
        if (cls == ShotClass::Converged) {
            lo = hi = mid;
            out.converged_shot = true;
            break;
        }
        if (cls == ShotClass::TooLow) {
            lo = mid;
            ++out.low;
        } else {
            hi = mid;
            ++out.high;
        }
        if (hi < 0.0 && (hi - lo) <= opts.lambda_tol * std::abs(hi)) {
            break;
        }
    }
    out.bracket = {lo, hi};
    return out;
}

}  // namespace

EigenResult solve_lambda1_ball(const ProblemParams& params, const SolverOptions& opts) {
    params.validate();
    opts.validate();
    const double alpha_star = steklov_threshold(params);
    if (!(params.alpha < alpha_star) || !(params.alpha < 0.0)) {
        throw SolverError(ErrorKind::NoNegativeEigenvalue,
                          "alpha = " + std::to_string(params.alpha) +
                              " is not below the critical value " + std::to_string(alpha_star));
    }

    SolverOptions run = opts;
    BisectionOutcome bis;
    bool bracketed = false;
    for (int attempt = 0; attempt <= opts.max_r_max_doublings; ++attempt) {
        bis = bisect(params, run);
        const bool width_ok = bis.bracket.hi < 0.0 &&
                              bis.bracket.width() <= opts.lambda_tol * std::abs(bis.bracket.hi);
        // For n = 1 the eigenvalue sits on the floor, so no shot can come back TooLow.
        const bool low_side = bis.low > 0 || params.n == 1;
        bracketed = bis.converged_shot || (low_side && bis.high > 0 && width_ok);
        if (bracketed) {
            break;
        }
        run.r_max_factor *= 2.0;
    }
    if (!bracketed) {
        throw SolverError(ErrorKind::NoBracket,
                          "shot classification never flipped for alpha = " +
                              std::to_string(params.alpha));
    }

    EigenResult result;
    result.bracket = bis.bracket;
    result.lambda1 = bis.bracket.mid();
    result.iterations = bis.iterations;
    result.too_low_shots = bis.low;
    result.too_high_shots = bis.high;
    result.r_max_factor_used = run.r_max_factor;

    // Assemble the eigen-trajectory: the outward shot at λ₁ is trusted while it
    // agrees with the stable inward sweep; beyond that the inward sweep is used.
    const double lambda1 = result.lambda1;
    const double p = params.p;
    const auto asym = far_field_expansion(lambda1, p, params.n);
    const auto outward = integrate_g(lambda1, params, run);
    if (outward.terminated_at == Termination::StepFailure) {
        throw SolverError(ErrorKind::StepFailure, "final outward shot failed");
    }
    double r_far = shot_r_max(lambda1, params, run);
    if (asym.d > 0.0) {
        r_far = std::max(r_far, params.R + asym.d / opts.far_field_tol);
    }
    const auto inward = integrate_g_inward(lambda1, params, run, r_far);
    if (inward.terminated_at == Termination::StepFailure) {
        throw SolverError(ErrorKind::StepFailure, "inward far-field sweep failed");
    }

    auto inward_at = [&](double r) {
        const auto it = std::lower_bound(inward.radii.begin(), inward.radii.end(), r);
        auto j = static_cast<std::size_t>(it - inward.radii.begin());
        if (j == 0) {
            return inward.g_values.front();
        }
        const double r0 = inward.radii[j - 1], r1 = inward.radii[j];
        const double g0 = inward.g_values[j - 1], g1 = inward.g_values[j];
        return ode::hermite(r0, g0, g_rhs(r0, g0, lambda1, p, params.n), r1, g1,
                            g_rhs(r1, g1, lambda1, p, params.n), r);
    };

    const double gR = outward.g_values.front();
    result.boundary_residual = std::abs(inward.g_values.front() - gR) / gR;

    std::size_t k = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < outward.radii.size(); ++i) {
        const double dev = std::abs(outward.g_values[i] - inward_at(outward.radii[i])) / gR;
        if (dev > opts.match_tol) {
            break;
        }
        worst = std::max(worst, dev);
        k = i;
    }
    result.match_radius = outward.radii[k];
    result.match_residual = worst;

    GTrajectory& traj = result.trajectory;
    traj.lambda = lambda1;
    traj.terminated_at = Termination::ReachedRMax;
    traj.radii.assign(outward.radii.begin(), outward.radii.begin() + static_cast<long>(k) + 1);
    traj.g_values.assign(outward.g_values.begin(),
                         outward.g_values.begin() + static_cast<long>(k) + 1);
    for (std::size_t j = 0; j < inward.radii.size(); ++j) {
        if (inward.radii[j] > traj.radii.back() && inward.g_values[j] < traj.g_values.back()) {
            traj.radii.push_back(inward.radii[j]);
            traj.g_values.push_back(inward.g_values[j]);
        }
    }
    result.g_limit_residual = std::abs(traj.g_values.back() - asym.c);
    return result;
}

RadialProfile eigenfunction_from_g(const GTrajectory& traj) {
    if (traj.radii.size() < 2 || traj.radii.size() != traj.g_values.size()) {
        throw std::invalid_argument("eigenfunction_from_g: trajectory needs at least two samples");
    }
    constexpr double kLogUnderflow = -700.0;
    const auto& r = traj.radii;
    const auto& g = traj.g_values;
    const std::size_t m = r.size();
    // Slopes of the quadratic through neighbouring samples, for the
    // end-corrected (cubic Hermite) trapezoid rule.
    std::vector<double> slope(m, 0.0);
    if (m >= 3) {
        auto quad_slope = [&](std::size_t a, std::size_t b, std::size_t c, double x) {
            const double d_ab = (g[b] - g[a]) / (r[b] - r[a]);
            const double d_bc = (g[c] - g[b]) / (r[c] - r[b]);
            const double curv = (d_bc - d_ab) / (r[c] - r[a]);
            return d_ab + curv * ((x - r[a]) + (x - r[b]));
        };
        slope[0] = quad_slope(0, 1, 2, r[0]);
        for (std::size_t i = 1; i + 1 < m; ++i) {
            slope[i] = quad_slope(i - 1, i, i + 1, r[i]);
        }
        slope[m - 1] = quad_slope(m - 3, m - 2, m - 1, r[m - 1]);
    } else {
        slope[0] = slope[1] = (g[1] - g[0]) / (r[1] - r[0]);
    }
    RadialProfile prof;
    prof.nodes.push_back(r.front());
    prof.values.push_back(1.0);
    double log_phi = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
        const double h = r[i] - r[i - 1];
        log_phi -= 0.5 * h * (g[i] + g[i - 1]) + h * h / 12.0 * (slope[i - 1] - slope[i]);
        if (log_phi < kLogUnderflow) {
            break;
        }
        prof.nodes.push_back(traj.radii[i]);
        prof.values.push_back(std::exp(log_phi));
    }
    return prof;
}

double effective_robin_ratio(const GTrajectory& traj, double p, double r, double cos_angle) {
    if (!(cos_angle > 0.0) || cos_angle > 1.0) {
        throw std::invalid_argument("effective_robin_ratio: cos_angle must lie in (0, 1]");
    }
    const double g = traj.g_at(r);
    return -std::pow(g * cos_angle, p - 1.0);
}

}  // namespace extrobin
