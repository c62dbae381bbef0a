#include "extrobin/variational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "extrobin/closed_form.hpp"
#include "extrobin/error.hpp"

namespace extrobin {

namespace {

// 4-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 4> kGaussX{-0.86113631159405257522, -0.33998104358485626480,
                                        0.33998104358485626480, 0.86113631159405257522};
constexpr std::array<double, 4> kGaussW{0.34785484513745385737, 0.65214515486254614263,
                                        0.65214515486254614263, 0.34785484513745385737};

double radial_weight(double r, int n) { return std::pow(r, n - 1); }

// ∫_a^b r^{n-1} dr
double cell_weight(double a, double b, int n) {
    if (n == 1) {
        return b - a;
    }
    return (std::pow(b, n) - std::pow(a, n)) / n;
}

// Symmetric tridiagonal matrix: diag[i], off[i] couples i and i+1.
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;
};

// LDLᵀ of a symmetric tridiagonal matrix. Returns false if a pivot is not
// positive, i.e. the matrix is not positive definite.
bool ldlt_factor(const Tridiagonal& t, std::vector<double>& pivots, std::vector<double>& lower) {
    const std::size_t m = t.diag.size();
    pivots.resize(m);
    lower.resize(m > 0 ? m - 1 : 0);
    pivots[0] = t.diag[0];
    if (!(pivots[0] > 0.0)) {
        return false;
    }
    for (std::size_t i = 1; i < m; ++i) {
        lower[i - 1] = t.off[i - 1] / pivots[i - 1];
        pivots[i] = t.diag[i] - lower[i - 1] * t.off[i - 1];
        if (!(pivots[i] > 0.0) || !std::isfinite(pivots[i])) {
            return false;
        }
    }
    return true;
}

void ldlt_solve(const std::vector<double>& pivots, const std::vector<double>& lower,
                std::vector<double>& x) {
    const std::size_t m = pivots.size();
    for (std::size_t i = 1; i < m; ++i) {
        x[i] -= lower[i - 1] * x[i - 1];
    }
    for (std::size_t i = 0; i < m; ++i) {
        x[i] /= pivots[i];
    }
    for (std::size_t i = m - 1; i-- > 0;) {
        x[i] -= lower[i] * x[i + 1];
    }
}

struct DiscreteQuotient {
    double gradient = 0.0;
    double boundary = 0.0;
    double mass = 0.0;
    double value() const { return (gradient + boundary) / mass; }
};

// The quotient seen by the discrete minimization: exact cell weights for the
// gradient, lumped (trapezoid) mass.
DiscreteQuotient discrete_quotient(const std::vector<double>& r, const std::vector<double>& u,
                                   const std::vector<double>& cell_w,
                                   const std::vector<double>& lumped, const ProblemParams& pp) {
    DiscreteQuotient q;
    for (std::size_t c = 0; c + 1 < r.size(); ++c) {
        const double du = (u[c + 1] - u[c]) / (r[c + 1] - r[c]);
        q.gradient += std::pow(std::abs(du), pp.p) * cell_w[c];
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
        q.mass += std::pow(std::abs(u[i]), pp.p) * lumped[i];
    }
    q.boundary = pp.alpha * std::pow(std::abs(u[0]), pp.p) * radial_weight(pp.R, pp.n);
    return q;
}

void normalize_p(std::vector<double>& u, double mass, double p) {
    const double s = std::pow(mass, -1.0 / p);
    for (double& v : u) {
        v *= s;
    }
}

}  // namespace

double exponential_moment(double a, double r0, int n) {
    if (!(a > 0.0) || n < 1) {
        throw std::invalid_argument("exponential_moment: need a > 0 and n >= 1");
    }
    // Σ_{k=0}^{n-1} (n-1)!/k! · r0^k / a^{n-k}
    double sum = 0.0;
    double coeff = gamma_integer(n);  // (n-1)!/k! at k = 0
    for (int k = 0; k < n; ++k) {
        sum += coeff * std::pow(r0, k) / std::pow(a, n - k);
        coeff /= (k + 1);
    }
    return sum;
}

QuotientBreakdown rayleigh_quotient(const RadialProfile& profile, const ProblemParams& params,
                                    std::optional<double> tail_rate) {
    params.validate();
    profile.validate();
    if (std::abs(profile.nodes.front() - params.R) > 1e-12 * params.R) {
        throw std::invalid_argument("rayleigh_quotient: first node must equal R");
    }
    const double p = params.p;
    const int n = params.n;
    QuotientBreakdown out;
    for (std::size_t c = 0; c + 1 < profile.size(); ++c) {
        const double a = profile.nodes[c], b = profile.nodes[c + 1];
        const double ua = profile.values[c], ub = profile.values[c + 1];
        const double h = b - a;
        out.gradient_term += std::pow(std::abs((ub - ua) / h), p) * cell_weight(a, b, n);
        double mass = 0.0;
        for (std::size_t k = 0; k < kGaussX.size(); ++k) {
            const double t = 0.5 * (1.0 + kGaussX[k]);
            const double r = a + t * h;
            const double u = ua + t * (ub - ua);
            mass += kGaussW[k] * std::pow(std::abs(u), p) * radial_weight(r, n);
        }
        out.mass_term += 0.5 * h * mass;
    }
    if (tail_rate) {
        const double gamma = *tail_rate;
        if (!(gamma > 0.0)) {
            throw std::invalid_argument("rayleigh_quotient: tail rate must be positive");
        }
        const double u0 = std::pow(std::abs(profile.values.back()), p);
        const double moment = exponential_moment(p * gamma, profile.nodes.back(), n);
        out.mass_term += u0 * moment;
        out.gradient_term += std::pow(gamma, p) * u0 * moment;
    }
    if (!(out.mass_term > 0.0)) {
        throw std::invalid_argument("rayleigh_quotient: zero mass");
    }
    out.boundary_term =
        params.alpha * std::pow(std::abs(profile.values.front()), p) * radial_weight(params.R, n);
    out.quotient = (out.gradient_term + out.boundary_term) / out.mass_term;
    return out;
}

std::vector<double> graded_mesh(double R, double R0, int cells) {
    if (!(R0 > R) || cells < 1) {
        throw std::invalid_argument("graded_mesh: need R0 > R and at least one cell");
    }
    const double q = std::min(1.05, std::pow(1000.0, 1.0 / cells));
    const double total = std::pow(q, cells) - 1.0;
    std::vector<double> r(static_cast<std::size_t>(cells) + 1);
    for (int i = 0; i <= cells; ++i) {
        r[i] = R + (R0 - R) * (std::pow(q, i) - 1.0) / total;
    }
    r.back() = R0;
    return r;
}

TruncatedMinimum minimize_truncated(const ProblemParams& params, double R0, int N, double tol,
                                    const TruncatedOptions& opts) {
    params.validate();
    if (!(R0 > params.R) || N < 16 || !(tol > 0.0)) {
        throw std::invalid_argument("minimize_truncated: need R0 > R, N >= 16 and tol > 0");
    }
    const double p = params.p;
    const int n = params.n;
    const std::vector<double> r = graded_mesh(params.R, R0, N);
    const std::size_t m = r.size();

    std::vector<double> cell_w(m - 1), lumped(m, 0.0);
    for (std::size_t c = 0; c + 1 < m; ++c) {
        cell_w[c] = cell_weight(r[c], r[c + 1], n);
        const double h = r[c + 1] - r[c];
        lumped[c] += 0.5 * h * radial_weight(r[c], n);
        lumped[c + 1] += 0.5 * h * radial_weight(r[c + 1], n);
    }

    const double rate = params.alpha < 0.0 ? std::pow(std::abs(params.alpha), 1.0 / (p - 1.0))
                                           : 1.0 / (R0 - params.R);
    std::vector<double> u(m);
    for (std::size_t i = 0; i < m; ++i) {
        u[i] = std::exp(-rate * (r[i] - params.R));
    }
    DiscreteQuotient dq = discrete_quotient(r, u, cell_w, lumped, params);
    normalize_p(u, dq.mass, p);
    double q_old = dq.value();

    constexpr double kTiny = 1e-300;
    Tridiagonal stiff{std::vector<double>(m), std::vector<double>(m - 1)};
    std::vector<double> mass_diag(m), shifted_diag(m), pivots, lower, v(m);
    std::vector<double> u_prev(m);
    double shift_gap = std::max(0.5 * std::abs(q_old), 1e-8);
    double relax = 1.0;
    double last_change = std::numeric_limits<double>::infinity();

    for (int it = 1; it <= opts.max_iterations; ++it) {
        // Freeze the weights at the current iterate.
        double max_slope = 0.0;
        for (std::size_t c = 0; c + 1 < m; ++c) {
            max_slope = std::max(max_slope, std::abs((u[c + 1] - u[c]) / (r[c + 1] - r[c])));
        }
        const double slope_reg = 1e-12 * max_slope + kTiny;
        std::fill(stiff.diag.begin(), stiff.diag.end(), 0.0);
        for (std::size_t c = 0; c + 1 < m; ++c) {
            const double h = r[c + 1] - r[c];
            const double du = (u[c + 1] - u[c]) / h;
            const double a = std::pow(du * du + slope_reg * slope_reg, 0.5 * (p - 2.0));
            const double k = a * cell_w[c] / (h * h);
            stiff.diag[c] += k;
            stiff.diag[c + 1] += k;
            stiff.off[c] = -k;
        }
        stiff.diag[0] += params.alpha * radial_weight(params.R, n) *
                         std::pow(std::max(std::abs(u[0]), kTiny), p - 2.0);
        for (std::size_t i = 0; i < m; ++i) {
            mass_diag[i] = lumped[i] * std::pow(std::max(std::abs(u[i]), kTiny), p - 2.0);
        }

        // Shift below the smallest eigenvalue; Sylvester's law of inertia
        // guarantees this once every LDLᵀ pivot is positive.
        Tridiagonal shifted{shifted_diag, stiff.off};
        bool factored = false;
        for (int attempt = 0; attempt < 200 && !factored; ++attempt) {
            const double sigma = q_old - shift_gap;
            for (std::size_t i = 0; i < m; ++i) {
                shifted.diag[i] = stiff.diag[i] - sigma * mass_diag[i];
            }
            factored = ldlt_factor(shifted, pivots, lower);
            if (!factored) {
                shift_gap *= 4.0;
            }
        }
        if (!factored) {
            throw SolverError(ErrorKind::NonConvergence,
                              "minimize_truncated: could not find a definite shift");
        }

        u_prev = u;
        for (int k = 0; k < opts.inner_iterations; ++k) {
            for (std::size_t i = 0; i < m; ++i) {
                v[i] = mass_diag[i] * u[i];
            }
            ldlt_solve(pivots, lower, v);
            double norm = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                norm = std::max(norm, std::abs(v[i]));
            }
            const double sign = v[0] < 0.0 ? -1.0 : 1.0;
            for (std::size_t i = 0; i < m; ++i) {
                u[i] = sign * v[i] / norm;
            }
        }

        dq = discrete_quotient(r, u, cell_w, lumped, params);
        normalize_p(u, dq.mass, p);
        if (relax < 1.0) {
            for (std::size_t i = 0; i < m; ++i) {
                u[i] = relax * u[i] + (1.0 - relax) * u_prev[i];
            }
            dq = discrete_quotient(r, u, cell_w, lumped, params);
            normalize_p(u, dq.mass, p);
        }
        const double q_new = dq.value();
        const double change = std::abs(q_new - q_old);
        const double scale = std::max(std::abs(q_new), 1e-12);
        q_old = q_new;
        if (change <= tol * scale) {
            TruncatedMinimum out;
            out.lambda = q_new;
            out.profile.nodes = r;
            out.profile.values = u;
            out.profile.p_norm = 1.0;
            out.iterations = it;
            return out;
        }
        // The frozen-weight map can settle into a 2-cycle; damp it.
        if (change >= last_change) {
            relax = std::max(0.5 * relax, 0.125);
        }
        last_change = change;
        shift_gap = std::clamp(4.0 * change, 1e-6 * scale, shift_gap);
    }
    std::ostringstream msg;
    msg << "minimize_truncated: no convergence after " << opts.max_iterations
        << " iterations (last quotient " << q_old << ")";
    throw SolverError(ErrorKind::NonConvergence, msg.str());
}

double richardson_extrapolate(double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; }

double envelope_beta(double alpha, double p, int n) {
    if (!(alpha < 0.0) || !(n >= 2 && n < p)) {
        throw std::invalid_argument("envelope_beta: need alpha < 0 and 2 <= n < p");
    }
    return std::pow(std::abs(alpha) * std::pow(p, n) / (2.0 * gamma_integer(n)), 1.0 / (p - n));
}

double envelope_test_function_quotient(const ProblemParams& params, double beta,
                                       QuadraturePath path) {
    params.validate();
    if (!(params.n >= 2 && params.n < params.p)) {
        throw std::invalid_argument("envelope_test_function_quotient: need 2 <= n < p");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("envelope_test_function_quotient: beta must be positive");
    }
    const double p = params.p;
    const int n = params.n;
    const double a = p * beta;
    const double boundary = params.alpha * radial_weight(params.R, n);
    // All three terms carry the factor e^{-pβR}, which is dropped.
    if (path == QuadraturePath::Analytic) {
        const double mass = exponential_moment(a, params.R, n);
        return std::pow(beta, p) + boundary / mass;
    }
    // Composite Gauss-Legendre in t = r - R over [0, 60/a].
    const double length = 60.0 / a;
    constexpr int panels = 4000;
    const double h = length / panels;
    double mass = 0.0;
    for (int j = 0; j < panels; ++j) {
        double panel = 0.0;
        for (std::size_t k = 0; k < kGaussX.size(); ++k) {
            const double t = h * (j + 0.5 * (1.0 + kGaussX[k]));
            panel += kGaussW[k] * std::exp(-a * t) * radial_weight(params.R + t, n);
        }
        mass += 0.5 * h * panel;
    }
    const double gradient = std::pow(beta, p) * mass;
    return (gradient + boundary) / mass;
}

}  // namespace extrobin
