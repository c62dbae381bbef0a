#include "extrobin/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "extrobin/error.hpp"

namespace extrobin {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// K_0 and K_1 for 0 < x <= 2 by the ascending series with the log term.
void series_k01(double x, double& k0, double& k1) {
    const double q = 0.25 * x * x;
    const double lg = std::log(0.5 * x);
    double term0 = 1.0;  // (x²/4)^k / (k!)²
    double term1 = 1.0;  // (x²/4)^k / (k!(k+1)!)
    double harmonic = 0.0;
    double i0 = 0.0, i1s = 0.0, s0 = 0.0, s1 = 0.0;
    for (int k = 0; k < 60; ++k) {
        const double h_next = harmonic + 1.0 / (k + 1);
        i0 += term0;
        i1s += term1;
        s0 += term0 * harmonic;
        s1 += term1 * (harmonic + h_next - 2.0 * kEulerGamma);
        if (term0 < 1e-18 * i0 && k > 2) {
            break;
        }
        harmonic = h_next;
        term0 *= q / ((k + 1.0) * (k + 1.0));
        term1 *= q / ((k + 1.0) * (k + 2.0));
    }
    const double i1 = 0.5 * x * i1s;
    k0 = -(lg + kEulerGamma) * i0 + s0;
    k1 = 1.0 / x + lg * i1 - 0.25 * x * s1;
}

// e^x K_ν(x) for ν in {0, 1} and x > 2 via the trapezoidal rule.
double scaled_k_integral(int nu, double x) {
    constexpr double h = 0.0625;
    const double inv2x = 0.5 / x;
    double sum = nu == 0 ? 0.5 : 0.0;  // f(0)/2
    for (int j = 1; j < 2000; ++j) {
        const double v = j * h;
        const double v2 = v * v;
        const double w = std::exp(-v2);
        const double f = nu == 0 ? w / std::sqrt(1.0 + v2 * inv2x)
                                 : w * v2 * std::sqrt(1.0 + v2 * inv2x);
        sum += f;
        if (w < 1e-20) {
            break;
        }
    }
    const double gamma_half = nu == 0 ? std::sqrt(std::numbers::pi) : 0.5 * std::sqrt(std::numbers::pi);
    return 2.0 * h * sum * std::sqrt(std::numbers::pi / (2.0 * x)) / gamma_half;
}

void scaled_k01(double x, double& k0, double& k1) {
    if (x <= 2.0) {
        series_k01(x, k0, k1);
        const double ex = std::exp(x);
        k0 *= ex;
        k1 *= ex;
    } else {
        k0 = scaled_k_integral(0, x);
        k1 = scaled_k_integral(1, x);
    }
}

int twice_order(double order) {
    const double t = 2.0 * order;
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-12 || r < 0 || r > 5) {
        throw std::invalid_argument("bessel_k: unsupported order " + std::to_string(order));
    }
    return static_cast<int>(r);
}

}  // namespace

double bessel_k_scaled(double order, double x) {
    const int two_nu = twice_order(order);
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument("bessel_k: x must be positive and finite");
    }
    if (two_nu % 2 == 1) {
        // K_{1/2}(x) = sqrt(π/(2x)) e^{-x}
        const double k_half = std::sqrt(std::numbers::pi / (2.0 * x));
        const double k_3half = k_half * (1.0 + 1.0 / x);
        if (two_nu == 1) return k_half;
        if (two_nu == 3) return k_3half;
        return k_half + 3.0 / x * k_3half;
    }
    double k0, k1;
    scaled_k01(x, k0, k1);
    if (two_nu == 0) return k0;
    if (two_nu == 2) return k1;
    return k0 + 2.0 / x * k1;
}

BesselKValue bessel_k(double order, double x) {
    BesselKValue out;
    out.scaled = bessel_k_scaled(order, x);
    const double value = out.scaled * std::exp(-x);
    if (value < std::numeric_limits<double>::min()) {
        out.underflow = true;
        out.value = 0.0;
    } else {
        out.value = value;
    }
    return out;
}

double bessel_k_ratio(double num_order, double den_order, double x) {
    return bessel_k_scaled(num_order, x) / bessel_k_scaled(den_order, x);
}

void SecularEquation::validate() const {
    if (n != 2 && n != 3) {
        throw std::invalid_argument("SecularEquation: n must be 2 or 3");
    }
    if (!(R > 0.0) || !(alpha < 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("SecularEquation: need R > 0 and finite alpha < 0");
    }
}

double SecularEquation::residual(double s) const {
    const double nu = 0.5 * n - 1.0;
    return s * bessel_k_ratio(nu + 1.0, nu, s * R) - std::abs(alpha);
}

double lambda1_ball_p2(int n, double R, double alpha) {
    const SecularEquation eq{n, R, alpha};
    eq.validate();
    const double a = std::abs(alpha);
    if (n == 3) {
        if (!(a > 1.0 / R)) {
            throw SolverError(ErrorKind::NoNegativeEigenvalue,
                              "lambda1_ball_p2: alpha must be below -1/R for n = 3");
        }
        const double s = a - 1.0 / R;
        return -s * s;
    }
    // n = 2: residual(0+) = -|α| < 0 and residual(|α|) > 0 since x K1/K0 > x.
    double lo = 1e-300;
    double hi = a;
    for (int it = 0; it < 400; ++it) {
        const double mid = hi / lo > 4.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) {
            break;
        }
        if (eq.residual(mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    const double s = 0.5 * (lo + hi);
    return -s * s;
}

double segura_ratio_gap(int m, double x) {
    if (m < 0 || m > 3) {
        throw std::invalid_argument("segura_ratio_gap: m must be in {0, 1, 2, 3}");
    }
    const double nu = 0.5 * m;
    const double ratio = bessel_k_ratio(nu + 1.0, nu, x);
    return x * ratio - (nu + std::sqrt(nu * nu + x * x));
}

double convex_lower_bound_p2(double alpha) {
    if (!(alpha < 0.0)) {
        throw std::invalid_argument("convex_lower_bound_p2: alpha must be negative");
    }
    return -alpha * alpha;
}

}  // namespace extrobin
