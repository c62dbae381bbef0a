// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "extrobin/bessel.hpp"
#include "extrobin/closed_form.hpp"
#include "extrobin/error.hpp"
#include "extrobin/geometry.hpp"
#include "extrobin/shooting.hpp"
#include "extrobin/variational.hpp"

using namespace extrobin;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [violated: " << what << "]";
        }
    }
};

struct SolvedPoint {
    ProblemParams params;
    EigenResult result;
};

// Every successful solve in criteria 1-10, for the structural checks of criterion 11.
std::vector<SolvedPoint> g_solved;

EigenResult solve(const ProblemParams& pp) {
    auto res = solve_lambda1_ball(pp);
    g_solved.push_back({pp, res});
    return res;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

int run_criterion(int id, const char* title, double budget_s, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0.0) {
        v.require(secs < budget_s, "runtime " + fmt(secs) + " s >= " + fmt(budget_s) + " s");
    }
    std::printf("%s criterion %2d: %s (%.2f s)%s\n", v.pass ? "PASS" : "FAIL", id, title, secs,
                v.detail.str().c_str());
    std::fflush(stdout);
    return v.pass ? 0 : 1;
}

void closed_form_match(Verdict& v) {
    double worst = 0.0;
    for (double R : {1.0, 2.0}) {
        for (double alpha : {-1.5, -2.0, -4.0, -8.0}) {
            const double s = std::abs(alpha) - 1.0 / R;
            const double err = rel(solve({2.0, 3, alpha, R}).lambda1, -s * s);
            worst = std::max(worst, err);
            v.require(err <= 1e-8, "alpha=" + fmt(alpha) + " R=" + fmt(R) + " rel " + fmt(err));
        }
    }
    v.detail << " max rel err " << fmt(worst);
}

void bessel_match(Verdict& v) {
    double worst = 0.0;
    for (double alpha : {-0.5, -1.0, -2.0, -5.0}) {
        const double err = rel(solve({2.0, 2, alpha, 1.0}).lambda1, lambda1_ball_p2(2, 1.0, alpha));
        worst = std::max(worst, err);
        v.require(err <= 1e-6, "alpha=" + fmt(alpha) + " rel " + fmt(err));
    }
    v.detail << " max rel err " << fmt(worst);
}

void half_line(Verdict& v) {
    double worst = 0.0;
    for (double p : {1.5, 2.0, 3.0}) {
        const ProblemParams pp{p, 1, -1.0, 1.0};
        const double coarse = minimize_truncated(pp, 30.0, 512, 1e-12).lambda;
        const double fine = minimize_truncated(pp, 30.0, 1024, 1e-12).lambda;
        const double err = std::abs(richardson_extrapolate(coarse, fine) - lambda1_halfline(-1.0, p));
        worst = std::max(worst, err);
        v.require(err <= 1e-4, "p=" + fmt(p) + " err " + fmt(err));
    }
    v.detail << " max abs err " << fmt(worst);
}

void threshold(Verdict& v) {
    for (double alpha : {-0.9, -0.99}) {
        bool refused = false;
        try {
            solve_lambda1_ball({2.0, 3, alpha, 1.0});
        } catch (const SolverError& e) {
            refused = e.kind() == ErrorKind::NoNegativeEigenvalue;
        }
        v.require(refused, "alpha=" + fmt(alpha) + " not refused");
    }
    for (double alpha : {-1.01, -1.1}) {
        const double lambda = solve({2.0, 3, alpha, 1.0}).lambda1;
        const double exact = -(std::abs(alpha) - 1.0) * (std::abs(alpha) - 1.0);
        v.require(rel(lambda, exact) <= 1e-6, "alpha=" + fmt(alpha) + " off closed form");
        if (alpha == -1.01) {
            v.require(lambda > -1e-3 && lambda < 0.0, "lambda(-1.01) outside (-1e-3, 0)");
            v.detail << " lambda1(-1.01)=" << fmt(lambda);
        }
    }
}

double lambda_or_zero(const ProblemParams& pp) {
    return pp.alpha < steklov_threshold(pp) ? solve(pp).lambda1 : 0.0;
}

void ineq_chain(Verdict& v) {
    double min_margin = 1e300;
    int skipped = 0;
    for (double p : {1.5, 2.0, 3.0}) {
        for (double alpha : {-1.0, -4.0}) {
            const double floor = lambda_floor(alpha, p);
            double lower = lambda1_halfline(alpha, p);
            for (int n : {2, 3}) {
                const ProblemParams pp{p, n, alpha, 1.0};
                const double lam = lambda_or_zero(pp);
                if (!(alpha < steklov_threshold(pp))) {
                    // Outside the hypothesis α < α*(p, n); λ₁ = 0 there.
                    ++skipped;
                    lower = lam;
                    continue;
                }
                const double m_dim = (lam - lower) / std::abs(lower);
                const double m_floor = (lam - floor) / std::abs(floor);
                min_margin = std::min({min_margin, m_dim, m_floor});
                v.require(m_dim > 1e-6, "p=" + fmt(p) + " n=" + std::to_string(n) + " alpha=" +
                                            fmt(alpha) + " margin " + fmt(m_dim));
                v.require(m_floor > 1e-6, "floor margin " + fmt(m_floor));
                lower = lam;
            }
        }
    }
    v.detail << " min rel margin " << fmt(min_margin) << ", " << skipped
             << " points with alpha >= alpha* not applicable";
}

void sandwich(Verdict& v) {
    double min_slack = 1e300;
    for (double alpha : {-2.0, -4.0, -8.0}) {
        const double lp2 = lambda1_ball_p2(2, 1.0, -std::sqrt(std::abs(alpha)));
        const auto b = critical_case_bounds(alpha, 3, lp2);
        const double lam = solve({3.0, 3, alpha, 1.0}).lambda1;
        const double slack = std::min(lam - b.lower, b.upper - lam);
        min_slack = std::min(min_slack, slack);
        v.require(slack >= -1e-8, "alpha=" + fmt(alpha) + " outside [" + fmt(b.lower) + ", " +
                                      fmt(b.upper) + "]: " + fmt(lam));
    }
    v.detail << " min slack " << fmt(min_slack);
}

void scaling(Verdict& v) {
    const double tol = 10.0 * SolverOptions{}.lambda_tol;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> p_dist(1.5, 3.0), r_dist(0.5, 2.0), a_dist(0.5, 4.0);
    std::uniform_int_distribution<int> n_dist(2, 3);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        const double p = p_dist(rng);
        const int n = n_dist(rng);
        const double R = r_dist(rng);
        const double beta = r_dist(rng);
        ProblemParams pp{p, n, -1.0, R};
        pp.alpha = std::min(steklov_threshold(pp), 0.0) - a_dist(rng);
        const double lam = solve(pp).lambda1;
        const double scaled = solve(scale_problem(pp, beta)).lambda1;
        const double dev = std::abs(std::pow(beta, p) * scaled - lam) / std::abs(lam);
        worst = std::max(worst, dev);
        v.require(dev <= tol, "tuple " + std::to_string(k) + " dev " + fmt(dev));
    }
    v.detail << " max rel dev " << fmt(worst) << " (tol " << fmt(tol) << ")";
}

void monotonicity(Verdict& v) {
    const double alphas[] = {-8.0, -6.0, -4.0, -3.0, -2.0, -1.6, -1.3, -1.1};
    const double radii[] = {0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0};
    int violations = 0;
    for (auto [p, n] : {std::pair{1.5, 2}, std::pair{3.0, 2}, std::pair{3.0, 3}}) {
        double prev = -1e300;
        for (double alpha : alphas) {
            const double lam = solve({p, n, alpha, 1.0}).lambda1;
            if (lam < prev - 1e-8 * std::abs(prev)) {
                ++violations;
                v.require(false, "alpha order at p=" + fmt(p) + " n=" + std::to_string(n));
            }
            prev = lam;
        }
        prev = 1e300;
        for (double R : radii) {
            const double lam = solve({p, n, -2.0, R}).lambda1;
            if (lam > prev + 1e-8 * std::abs(prev)) {
                ++violations;
                v.require(false, "R order at p=" + fmt(p) + " n=" + std::to_string(n));
            }
            prev = lam;
        }
    }
    v.detail << " " << violations << " violations over 48 points";
}

void strong_coupling(Verdict& v) {
    for (double p : {2.0, 3.0}) {
        for (int n : {2, 3}) {
            auto ratio = [&](double alpha) {
                const double lam = solve({p, n, alpha, 1.0}).lambda1;
                return (lam - lambda_floor(alpha, p)) / ((n - 1) * std::abs(alpha));
            };
            const double r10 = ratio(-10.0);
            const double r100 = ratio(-100.0);
            const std::string at = "p=" + fmt(p) + " n=" + std::to_string(n);
            v.require(r100 >= 0.8 && r100 <= 1.2, at + " ratio(-100)=" + fmt(r100));
            v.require(std::abs(r100 - 1.0) < std::abs(r10 - 1.0),
                      at + " not closer: " + fmt(r10) + " -> " + fmt(r100));
            v.detail << " " << at << ": " << fmt(r10) << " -> " << fmt(r100) << ";";
        }
    }
}

void small_alpha(Verdict& v) {
    const double p = 3.0;
    const int n = 2;
    const double exponent = p / (p - n) - 0.5;
    double prev = 0.0;
    for (double alpha : {-1e-1, -1e-2, -1e-3}) {
        const double lam = solve({p, n, alpha, 1.0}).lambda1;
        const double term = lam / std::pow(std::abs(alpha), exponent);
        v.detail << " alpha=" << fmt(alpha) << ": " << fmt(term) << ";";
        if (prev != 0.0) {
            v.require(std::abs(term) <= 0.5 * std::abs(prev),
                      "|term| at " + fmt(alpha) + " is " + fmt(std::abs(term / prev)) +
                          " of the previous");
        }
        prev = term;
        if (alpha == -1e-3) {
            const double scaled = lam / std::pow(std::abs(alpha), 3.0);
            v.detail << " lambda1/|alpha|^3=" << fmt(scaled) << ";";
            v.require(scaled <= -91.125 * 0.5, "lambda1/|alpha|^3 = " + fmt(scaled));
        }
    }
}

void trajectory_structure(Verdict& v) {
    int checked = 0;
    for (const auto& [pp, res] : g_solved) {
        const auto& traj = res.trajectory;
        const double g_r = std::pow(std::abs(pp.alpha), 1.0 / (pp.p - 1.0));
        const bool decreasing = pp.n == 1 || traj.strictly_decreasing();
        const bool boundary = std::abs(traj.g_values.front() - g_r) <= 1e-12 * g_r;
        const double c = decay_rate(res.lambda1, pp.p);
        const double terminal = std::abs(traj.g_values.back() - c);
        const std::string at = "p=" + fmt(pp.p) + " n=" + std::to_string(pp.n) + " alpha=" +
                               fmt(pp.alpha) + " R=" + fmt(pp.R);
        v.require(decreasing, at + " g not strictly decreasing");
        v.require(boundary, at + " g(R) != |alpha|^{1/(p-1)}");
        v.require(terminal <= 1e-6, at + " terminal residual " + fmt(terminal));
        ++checked;
    }
    v.detail << " " << checked << " trajectories";
}

void segura_properties(Verdict& v) {
    double min_gap = 1e300;
    for (int m : {0, 1}) {
        for (int i = 0; i < 100; ++i) {
            const double x = std::pow(10.0, -2.0 + 4.0 * i / 99.0);
            const double gap = segura_ratio_gap(m, x);
            min_gap = std::min(min_gap, gap);
            v.require(gap >= 0.0, "m=" + std::to_string(m) + " x=" + fmt(x));
        }
    }
    const double e0 = rel(bessel_k(0.0, 1.0).value, 0.421024438240708333335627379213);
    const double e1 = rel(bessel_k(1.0, 1.0).value, 0.601907230197234574737540001536);
    v.require(e0 <= 1e-10, "K0(1) rel " + fmt(e0));
    v.require(e1 <= 1e-10, "K1(1) rel " + fmt(e1));
    v.detail << " min gap " << fmt(min_gap) << ", K0(1)/K1(1) rel " << fmt(e0) << "/" << fmt(e1);
}

void pac_divergence(Verdict& v) {
    const double p = 2.0;
    double prev = 0.0;
    for (double eps : {0.3, 0.1, 0.03, 0.01}) {
        const auto q = pac_quotient({p, eps}, -1.0);
        v.detail << " eps=" << eps << ": Q=" << fmt(q.quotient) << " mass=" << fmt(q.mass_term)
                 << " grad=" << fmt(q.gradient_term) << ";";
        if (prev != 0.0) {
            v.require(q.quotient < prev, "Q not decreasing at eps=" + fmt(eps));
        }
        prev = q.quotient;
        v.require(q.mass_term < pac_mass_bound(p),
                  "mass " + fmt(q.mass_term) + " >= " + fmt(pac_mass_bound(p)) + " at eps=" + fmt(eps));
        v.require(q.gradient_term <= pac_gradient_bound(p),
                  "gradient " + fmt(q.gradient_term) + " > " + fmt(pac_gradient_bound(p)));
    }
    v.require(prev < -1e3, "Q(0.01) = " + fmt(prev) + " not below -1e3");
}

void ellipsoid(Verdict& v) {
    const double a_dagger = ellipsoid_threshold(3);
    const auto below = expansion_comparator(-100.0, 2.0, {3, 0.5 * a_dagger});
    const auto above = expansion_comparator(-100.0, 2.0, {3, std::min(1.0, 2.0 * a_dagger)});
    v.require(below.ellipsoid_above, "comparator false at a-dagger/2");
    v.require(!above.ellipsoid_above, "comparator true at 2 a-dagger");
    const double gap = std::abs(ellipsoid_hmax_ext({3, 1.0}) - equal_volume_ball_hmax_ext({3, 1.0}));
    v.require(gap <= 1e-12, "H_max gap at a=1: " + fmt(gap));
    char buf[64];
    std::snprintf(buf, sizeof buf, " a-dagger(3)=%.15f", a_dagger);
    v.detail << buf;
}

void variational_consistency(Verdict& v) {
    const ProblemParams pp{3.0, 2, -2.0, 1.0};
    const double lam = solve_lambda1_ball(pp).lambda1;
    double prev_err = 1e300;
    for (int N : {256, 512, 1024, 2048}) {
        const double err = rel(minimize_truncated(pp, 40.0, N, 1e-12).lambda, lam);
        v.detail << " N=" << N << ": " << fmt(err) << ";";
        if (N == 1024) {
            v.require(err <= 1e-2, "N=1024 rel err " + fmt(err));
        }
        v.require(err < prev_err, "error did not shrink at N=" + std::to_string(N));
        prev_err = err;
    }
}

}  // namespace

int main() {
    int failures = 0;
    failures += run_criterion(1, "closed-form oracle, p=2 n=3", 5, closed_form_match);
    failures += run_criterion(2, "Bessel oracle, p=2 n=2", 5, bessel_match);
    failures += run_criterion(3, "half-line closed form via variational oracle", 10, half_line);
    failures += run_criterion(4, "threshold behaviour at alpha* = -1", 5, threshold);
    failures += run_criterion(5, "dimension inequality chain", 30, ineq_chain);
    failures += run_criterion(6, "critical-case sandwich, n=p=3", 10, sandwich);
    failures += run_criterion(7, "scaling invariance", 30, scaling);
    failures += run_criterion(8, "monotonicity in alpha and R", 60, monotonicity);
    failures += run_criterion(9, "strong-coupling asymptotics", 30, strong_coupling);
    failures += run_criterion(10, "small-alpha envelope, p=3 n=2", 60, small_alpha);
    failures += run_criterion(11, "trajectory structure of criteria 1-10", 0, trajectory_structure);
    failures += run_criterion(12, "Segura gap and Bessel goldens", 1, segura_properties);
    failures += run_criterion(13, "Pac-domain divergence and term bounds", 60, pac_divergence);
    failures += run_criterion(14, "ellipsoid comparator threshold", 1, ellipsoid);
    failures += run_criterion(15, "variational vs shooting, p=3 n=2", 60, variational_consistency);
    std::printf("%d of 15 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
