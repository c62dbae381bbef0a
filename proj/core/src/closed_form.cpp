#include "extrobin/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace extrobin {

double steklov_mu1(const ProblemParams& params) {
    params.validate();
    const double n = params.n;
    if (n <= params.p) {
        return 0.0;
    }
    return std::pow((n - params.p) / ((params.p - 1.0) * params.R), params.p - 1.0);
}

double steklov_threshold(const ProblemParams& params) {
    return -steklov_mu1(params);
}

double lambda_floor(double alpha, double p) {
    return -(p - 1.0) * std::pow(std::abs(alpha), p / (p - 1.0));
}

double lambda1_halfline(double alpha, double p) {
    if (!(p > 1.0)) {
        throw std::invalid_argument("lambda1_halfline: p must exceed 1");
    }
    if (!(alpha < 0.0)) {
        throw std::invalid_argument("lambda1_halfline: alpha must be negative");
    }
    return lambda_floor(alpha, p);
}

ProblemParams scale_problem(const ProblemParams& params, double beta) {
    params.validate();
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("scale_problem: beta must be positive");
    }
    ProblemParams scaled = params;
    scaled.alpha = std::pow(beta, 1.0 - params.p) * params.alpha;
    scaled.R = beta * params.R;
    return scaled;
}

double scale_eigenvalue(double lambda, double beta, double p) {
    if (!(beta > 0.0)) {
        throw std::invalid_argument("scale_eigenvalue: beta must be positive");
    }
    return lambda / std::pow(beta, p);
}

double strong_coupling_expansion(double alpha, double p, int n, double h_max) {
    if (!(alpha < 0.0)) {
        throw std::invalid_argument("strong_coupling_expansion: alpha must be negative");
    }
    const double a = std::abs(alpha);
    return lambda_floor(alpha, p) - (n - 1) * h_max * a;
}

double gamma_integer(int n) {
    if (n < 1) {
        throw std::invalid_argument("gamma_integer: n must be >= 1");
    }
    double f = 1.0;
    for (int k = 2; k < n; ++k) {
        f *= k;
    }
    return f;
}

double small_alpha_envelope_constant(double p, int n) {
    if (n < 2 || !(n < p)) {
        throw std::invalid_argument("small_alpha_envelope: requires 2 <= n < p");
    }
    return std::pow(std::pow(p, n) / (2.0 * gamma_integer(n)), p / (p - n));
}

double small_alpha_envelope(double alpha, double p, int n) {
    const double k = small_alpha_envelope_constant(p, n);
    if (!(alpha < 0.0)) {
        throw std::invalid_argument("small_alpha_envelope: alpha must be negative");
    }
    return -k * std::pow(std::abs(alpha), p / (p - n));
}

SandwichBounds critical_case_bounds(double alpha, int n, double lambda_p2) {
    if (!(alpha < 0.0) || n < 2) {
        throw std::invalid_argument("critical_case_bounds: need alpha < 0 and n >= 2");
    }
    if (!(lambda_p2 < 0.0)) {
        throw std::invalid_argument("critical_case_bounds: lambda_p2 must be negative");
    }
    const double m = n - 1.0;
    const double lower = m * std::pow(std::abs(alpha), (n - 2.0) / m) * lambda_p2;
    const double upper = -m * std::pow(std::abs(lambda_p2), 0.5 * n);
    return {lower, upper};
}

double decay_rate(double lambda, double p) {
    if (lambda > 0.0) {
        throw std::invalid_argument("decay_rate: lambda must be <= 0");
    }
    return std::pow(-lambda / (p - 1.0), 1.0 / p);
}

}  // namespace extrobin
