#include "extrobin/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "extrobin/closed_form.hpp"
#include "extrobin/error.hpp"

namespace extrobin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr std::array<double, 5> kGaussX{-0.90617984593866399280, -0.53846931010568309104, 0.0,
                                        0.53846931010568309104, 0.90617984593866399280};
constexpr std::array<double, 5> kGaussW{0.23692688505618908751, 0.47862867049936646804,
                                        0.56888888888888888889, 0.47862867049936646804,
                                        0.23692688505618908751};

// ∫_a^b f by Gauss-Legendre on `cells` equal sub-cells.
template <class F>
double gauss(F&& f, double a, double b, int cells) {
    const double h = (b - a) / cells;
    double sum = 0.0;
    for (int c = 0; c < cells; ++c) {
        const double mid = a + (c + 0.5) * h;
        for (std::size_t k = 0; k < kGaussX.size(); ++k) {
            sum += kGaussW[k] * f(mid + 0.5 * h * kGaussX[k]);
        }
    }
    return 0.5 * h * sum;
}

struct PacTerms {
    double mass = 0.0;
    double gradient = 0.0;
    double boundary_mass = 0.0;  // ∫_{∂Ω} |u|^p ds
};

PacTerms pac_terms(const PacDomainSpec& spec, int cells) {
    const double p = spec.p;
    const double eps = spec.epsilon;
    const double expo = p + 3.0;
    const double t_end = pac_notch_end(p);
    const double theta_end = std::acos(t_end);
    const double grad_coeff = std::pow(3.0 / p, p);
    constexpr int kInner = 4;

    PacTerms t;
    // Outside B₁: |x|^{-3} and (3/p)^p |x|^{-3-p} in polar coordinates.
    t.mass = kTwoPi;
    t.gradient = grad_coeff * kTwoPi / (p + 1.0);
    t.boundary_mass = kTwoPi - 2.0 * theta_end;

    // Notch body for x₁ in [ε, t_end], cells graded geometrically from ε.
    const double ratio = std::pow(t_end / eps, 1.0 / cells);
    double x_lo = eps;
    for (int c = 0; c < cells; ++c) {
        const double x_hi = (c + 1 == cells) ? t_end : x_lo * ratio;
        auto column = [&](double x1) {
            const double h = std::pow(x1, expo);
            const double x1sq = x1 * x1;
            const double mass = gauss([&](double y) { return std::pow(x1sq + y * y, -1.5); },
                                      0.0, h, kInner);
            const double grad = gauss(
                [&](double y) { return std::pow(x1sq + y * y, -0.5 * (3.0 + p)); }, 0.0, h, kInner);
            const double slope = expo * std::pow(x1, expo - 1.0);
            const double curve = std::pow(x1sq + h * h, -1.5) * std::sqrt(1.0 + slope * slope);
            return std::array<double, 3>{mass, grad, curve};
        };
        const double hc = x_hi - x_lo;
        const double mid = 0.5 * (x_lo + x_hi);
        for (std::size_t k = 0; k < kGaussX.size(); ++k) {
            const auto v = column(mid + 0.5 * hc * kGaussX[k]);
            const double w = 0.5 * hc * kGaussW[k];
            t.mass += 2.0 * w * v[0];
            t.gradient += 2.0 * grad_coeff * w * v[1];
            t.boundary_mass += 2.0 * w * v[2];
        }
        x_lo = x_hi;
    }

    // Part of the disc with x₁ > t_end, in polar coordinates.
    const int sliver_cells = std::max(8, cells / 50);
    auto radial = [&](double theta, double power) {
        const double r0 = t_end / std::cos(theta);
        return gauss([&](double r) { return std::pow(r, power + 1.0); }, r0, 1.0, 4);
    };
    t.mass += gauss([&](double th) { return radial(th, -3.0); }, -theta_end, theta_end,
                    sliver_cells);
    t.gradient += grad_coeff * gauss([&](double th) { return radial(th, -3.0 - p); },
                                     -theta_end, theta_end, sliver_cells);

    // Tip segment x₁ = ε, |x₂| <= ε^{p+3}.
    const double tip = std::pow(eps, expo);
    t.boundary_mass += 2.0 * tip / (eps * eps * std::sqrt(eps * eps + tip * tip));
    return t;
}

}  // namespace

void PacDomainSpec::validate() const {
    if (!(p > 1.0) || !std::isfinite(p) || !(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("PacDomainSpec: need p > 1 and 0 < epsilon < 1");
    }
}

double pac_notch_end(double p) {
    if (!(p > 1.0)) {
        throw std::invalid_argument("pac_notch_end: p must exceed 1");
    }
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid * mid + std::pow(mid, 2.0 * (p + 3.0)) < 1.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

QuotientBreakdown pac_quotient(const PacDomainSpec& spec, double alpha, int quad_cells) {
    spec.validate();
    if (!(alpha < 0.0)) {
        throw std::invalid_argument("pac_quotient: alpha must be negative");
    }
    if (quad_cells < 1000) {
        throw std::invalid_argument("pac_quotient: quad_cells must be at least 1000");
    }
    const PacTerms coarse = pac_terms(spec, quad_cells);
    const PacTerms fine = pac_terms(spec, 2 * quad_cells);
    auto check = [](double a, double b, const char* name) {
        if (std::abs(a - b) > 0.01 * std::abs(b)) {
            std::ostringstream msg;
            msg << "pac_quotient: " << name << " changed from " << a << " to " << b
                << " under cell doubling";
            throw SolverError(ErrorKind::QuadratureMismatch, msg.str());
        }
    };
    check(coarse.mass, fine.mass, "mass");
    check(coarse.gradient, fine.gradient, "gradient");
    check(coarse.boundary_mass, fine.boundary_mass, "boundary");

    QuotientBreakdown out;
    out.mass_term = fine.mass;
    out.gradient_term = fine.gradient;
    out.boundary_term = alpha * fine.boundary_mass;
    out.quotient = (out.gradient_term + out.boundary_term) / out.mass_term;
    return out;
}

double pac_mass_bound(double p) { return 1.0 / (p + 1.0) + kTwoPi; }

double pac_gradient_bound(double p) {
    const double c = std::pow(3.0 / p, p);
    return 2.0 * c + c * kTwoPi / (p + 1.0);
}

void EllipsoidSpec::validate() const {
    if (n < 3 || !(a > 0.0 && a <= 1.0)) {
        throw std::invalid_argument("EllipsoidSpec: need n >= 3 and 0 < a <= 1");
    }
}

double ellipsoid_hmax_ext(const EllipsoidSpec& spec) {
    spec.validate();
    return -(spec.n - 2.0 + spec.a * spec.a) / (spec.n - 1.0);
}

double equal_volume_ball_hmax_ext(const EllipsoidSpec& spec) {
    spec.validate();
    return -std::pow(spec.a, 1.0 / spec.n);
}

double ellipsoid_threshold(int n) {
    if (n < 3) {
        throw std::invalid_argument("ellipsoid_threshold: n must be at least 3");
    }
    auto gap = [n](double a) {
        const EllipsoidSpec s{n, a};
        return ellipsoid_hmax_ext(s) - equal_volume_ball_hmax_ext(s);
    };
    // gap < 0 near a = 0; find the first sign change on a grid, then bisect.
    constexpr int kGrid = 1000;
    double lo = 0.0, hi = 0.0;
    for (int k = 1; k < kGrid; ++k) {
        const double a = static_cast<double>(k) / kGrid;
        if (gap(a) >= 0.0) {
            hi = a;
            lo = static_cast<double>(k - 1) / kGrid;
            break;
        }
    }
    if (hi == 0.0) {
        throw SolverError(ErrorKind::NoBracket, "ellipsoid_threshold: no sign change in (0, 1)");
    }
    lo = std::max(lo, 1e-300);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ExpansionComparison expansion_comparator(double alpha, double p, const EllipsoidSpec& spec) {
    ExpansionComparison out;
    out.ellipsoid = strong_coupling_expansion(alpha, p, spec.n, ellipsoid_hmax_ext(spec));
    out.ball = strong_coupling_expansion(alpha, p, spec.n, equal_volume_ball_hmax_ext(spec));
    out.ellipsoid_above = out.ellipsoid > out.ball;
    return out;
}

}  // namespace extrobin
