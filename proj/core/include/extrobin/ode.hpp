#pragma once

// Scalar adaptive integrators used by the shooting solver.
//
// integrate_dopri45 is an explicit embedded 5(4) Runge-Kutta pair for the
// outward (unstable) direction. integrate_implicit is an extrapolated
// backward-Euler scheme (order 2, L-stable) for the inward direction, where the
// Riccati equation is stiff but contracting and wants steps far larger than
// any explicit method tolerates.

#include <algorithm>
#include <cmath>
#include <optional>

namespace extrobin::ode {

struct AdaptiveOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double h_init = 0.0;  ///< 0 selects |r_end - r0| * 1e-3
    double h_min_rel = 1e-14;
    double h_max_rel = 0.0;  ///< when positive, integrate_implicit keeps h <= h_max_rel * |r|
    int max_steps = 2'000'000;
};

enum class Outcome { ReachedEnd, StoppedByObserver, StepFailure };

struct IntegrationResult {
    Outcome outcome = Outcome::ReachedEnd;
    double r = 0.0;
    double y = 0.0;
    int accepted = 0;
    int rejected = 0;
};

/// Integrates y' = f(r, y) from (r0, y0) towards r_end (either direction).
/// After every accepted step observer(r, y, f(r, y)) is called; returning false
/// stops integration with Outcome::StoppedByObserver.
template <class Rhs, class Observer>
IntegrationResult integrate_dopri45(Rhs&& f, double r0, double y0, double r_end,
                                    const AdaptiveOptions& opt, Observer&& observer) {
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    IntegrationResult res;
    res.r = r0;
    res.y = y0;
    const double span = r_end - r0;
    if (span == 0.0) {
        return res;
    }
    const double dir = span > 0 ? 1.0 : -1.0;
    double h = opt.h_init > 0 ? opt.h_init : std::abs(span) * 1e-3;
    h = std::min(h, std::abs(span));

    double r = r0;
    double y = y0;
    double k1 = f(r, y);
    while (res.accepted + res.rejected < opt.max_steps) {
        const double remaining = std::abs(r_end - r);
        bool last = false;
        if (h >= remaining) {
            h = remaining;
            last = true;
        }
        const double hs = dir * h;
        const double k2 = f(r + c2 * hs, y + hs * a21 * k1);
        const double k3 = f(r + c3 * hs, y + hs * (a31 * k1 + a32 * k2));
        const double k4 = f(r + c4 * hs, y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
        const double k5 = f(r + c5 * hs, y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const double k6 =
            f(r + hs, y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const double y_new = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const double r_new = last ? r_end : r + hs;
        const double k7 = f(r_new, y_new);
        const double err_abs =
            std::abs(hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
        const double scale = opt.abs_tol + opt.rel_tol * std::max(std::abs(y), std::abs(y_new));
        const double err = std::isfinite(err_abs) && std::isfinite(y_new) ? err_abs / scale
                                                                         : 1e10;
        if (err <= 1.0) {
            r = r_new;
            y = y_new;
            k1 = k7;
            ++res.accepted;
            res.r = r;
            res.y = y;
            if (!observer(r, y, k7)) {
                res.outcome = Outcome::StoppedByObserver;
                return res;
            }
            if (last) {
                res.outcome = Outcome::ReachedEnd;
                return res;
            }
            const double fac = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
            h *= std::clamp(fac, 0.2, 5.0);
        } else {
            ++res.rejected;
            h *= std::clamp(0.9 * std::pow(err, -0.25), 0.1, 0.5);
        }
        if (h < opt.h_min_rel * std::max(1.0, std::abs(r))) {
            res.outcome = Outcome::StepFailure;
            return res;
        }
    }
    res.outcome = Outcome::StepFailure;
    return res;
}

namespace detail {

/// Solves y - y0 - h f(r1, y) = 0 by Newton's method from y0.
template <class Rhs, class Jac>
std::optional<double> backward_euler_step(Rhs& f, Jac& dfdy, double r1, double y0, double h) {
    double y = y0;
    for (int it = 0; it < 30; ++it) {
        const double g = y - y0 - h * f(r1, y);
        const double dg = 1.0 - h * dfdy(r1, y);
        if (!std::isfinite(g) || !std::isfinite(dg) || dg == 0.0) {
            return std::nullopt;
        }
        double dy = g / dg;
        // Damp steps that would leave the positive half-line.
        while (y - dy <= 0.0) {
            dy *= 0.5;
            if (std::abs(dy) < 1e-300) {
                return std::nullopt;
            }
        }
        y -= dy;
        if (std::abs(dy) <= 1e-15 * std::abs(y)) {
            return y;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Integrates y' = f(r, y), y > 0, with Richardson-extrapolated backward Euler.
/// Each macro step takes one step of size h and two of size h/2; their
/// difference drives the controller and the extrapolation 2·y_{h/2} - y_h is
/// kept (second order, L-stable).
template <class Rhs, class Jac, class Observer>
IntegrationResult integrate_implicit(Rhs&& f, Jac&& dfdy, double r0, double y0, double r_end,
                                     const AdaptiveOptions& opt, Observer&& observer) {
    IntegrationResult res;
    res.r = r0;
    res.y = y0;
    const double span = r_end - r0;
    if (span == 0.0) {
        return res;
    }
    const double dir = span > 0 ? 1.0 : -1.0;
    double h = opt.h_init > 0 ? opt.h_init : std::abs(span) * 1e-6;
    double r = r0;
    double y = y0;
    while (res.accepted + res.rejected < opt.max_steps) {
        const double remaining = std::abs(r_end - r);
        if (opt.h_max_rel > 0.0) {
            h = std::min(h, opt.h_max_rel * std::abs(r));
        }
        bool last = false;
        if (h >= remaining) {
            h = remaining;
            last = true;
        }
        const double hs = dir * h;
        const double r_new = last ? r_end : r + hs;
        const double r_half = r + 0.5 * hs;
        const auto full = detail::backward_euler_step(f, dfdy, r_new, y, hs);
        std::optional<double> half;
        if (full) {
            half = detail::backward_euler_step(f, dfdy, r_half, y, 0.5 * hs);
            if (half) {
                half = detail::backward_euler_step(f, dfdy, r_new, *half, 0.5 * hs);
            }
        }
        double err = 1e10;
        double y_new = y;
        if (full && half) {
            y_new = 2.0 * *half - *full;
            const double scale =
                opt.abs_tol + opt.rel_tol * std::max(std::abs(y), std::abs(*half));
            err = std::abs(*half - *full) / scale;
            if (!(y_new > 0.0)) {
                err = 1e10;
            }
        }
        if (err <= 1.0) {
            r = r_new;
            y = y_new;
            ++res.accepted;
            res.r = r;
            res.y = y;
            if (!observer(r, y, f(r, y))) {
                res.outcome = Outcome::StoppedByObserver;
                return res;
            }
            if (last) {
                res.outcome = Outcome::ReachedEnd;
                return res;
            }
            const double fac = err > 0 ? 0.9 * std::pow(err, -0.5) : 4.0;
            h *= std::clamp(fac, 0.2, 4.0);
        } else {
            ++res.rejected;
            h *= err < 1e9 ? std::clamp(0.9 * std::pow(err, -0.5), 0.1, 0.5) : 0.25;
        }
        if (h < opt.h_min_rel * std::max(1.0, std::abs(r))) {
            res.outcome = Outcome::StepFailure;
            return res;
        }
    }
    res.outcome = Outcome::StepFailure;
    return res;
}

/// Cubic Hermite interpolation on [r0, r1] from values and slopes.
inline double hermite(double r0, double y0, double d0, double r1, double y1, double d1,
                      double r) {
    const double h = r1 - r0;
    const double t = (r - r0) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * d0 + (-2 * t3 + 3 * t2) * y1 +
           (t3 - t2) * h * d1;
}

}  // namespace extrobin::ode
