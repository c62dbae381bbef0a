#include "extrobin/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "extrobin/closed_form.hpp"
#include "extrobin/error.hpp"
#include "extrobin/geometry.hpp"
#include "extrobin/verify.hpp"

namespace extrobin::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSolveSchema = "extrobin.solve/1";
constexpr const char* kSweepSchema = "extrobin.sweep/1";
constexpr const char* kVerifySchema = "extrobin.verify/1";

const char* status_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NoNegativeEigenvalue: return "no_negative_eigenvalue";
    case ErrorKind::NoBracket: return "no_bracket";
    case ErrorKind::StepFailure: return "step_failure";
    case ErrorKind::NonConvergence: return "non_convergence";
    case ErrorKind::QuadratureMismatch: return "quadrature_mismatch";
    }
    return "error";
}

int exit_code_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NoNegativeEigenvalue: return kNoNegativeEigenvalue;
    case ErrorKind::NoBracket: return kNoBracket;
    default: return kVerifyFailed;
    }
}

std::vector<std::string> columns_for(SweepVariable v) {
    switch (v) {
    case SweepVariable::Epsilon:
        return {"p", "epsilon", "alpha", "gradient_term", "boundary_term", "mass_term", "quotient",
                "status"};
    case SweepVariable::A:
        return {"n", "a", "p", "alpha", "hmax_ellipsoid", "hmax_ball", "expansion_ellipsoid",
                "expansion_ball", "ellipsoid_above", "status"};
    default:
        return {"p", "n", "alpha", "R", "lambda1", "bracket_lo", "bracket_hi", "g_residual",
                "iterations", "status"};
    }
}

ProblemParams params_at(const SweepSpec& spec, double value) {
    ProblemParams pp = spec.fixed;
    switch (spec.variable) {
    case SweepVariable::Alpha: pp.alpha = value; break;
    case SweepVariable::R: pp.R = value; break;
    case SweepVariable::P: pp.p = value; break;
    default: break;
    }
    return pp;
}

struct RowResult {
    Json row;
    bool ok = false;
    int code = kOk;
};

RowResult eigen_row(const SweepSpec& spec, double value, const SolverOptions& opts) {
    const ProblemParams pp = params_at(spec, value);
    RowResult out;
    Json& row = out.row;
    row["p"] = pp.p;
    row["n"] = pp.n;
    row["alpha"] = pp.alpha;
    row["R"] = pp.R;
    try {
        const auto res = solve_lambda1_ball(pp, opts);
        row["lambda1"] = res.lambda1;
        row["bracket_lo"] = res.bracket.lo;
        row["bracket_hi"] = res.bracket.hi;
        row["g_residual"] = res.g_limit_residual;
        row["iterations"] = res.iterations;
        row["status"] = "ok";
        out.ok = true;
    } catch (const SolverError& e) {
        for (const char* k : {"lambda1", "bracket_lo", "bracket_hi", "g_residual", "iterations"}) {
            row[k] = nullptr;
        }
        row["status"] = status_of(e.kind());
        out.code = exit_code_of(e.kind());
    }
    return out;
}

RowResult pac_row(const SweepSpec& spec, double eps) {
    RowResult out;
    Json& row = out.row;
    row["p"] = spec.fixed.p;
    row["epsilon"] = eps;
    row["alpha"] = spec.fixed.alpha;
    try {
        const auto q = pac_quotient({spec.fixed.p, eps}, spec.fixed.alpha, spec.quad_cells);
        row["gradient_term"] = q.gradient_term;
        row["boundary_term"] = q.boundary_term;
        row["mass_term"] = q.mass_term;
        row["quotient"] = q.quotient;
        row["status"] = "ok";
        out.ok = true;
    } catch (const SolverError& e) {
        for (const char* k : {"gradient_term", "boundary_term", "mass_term", "quotient"}) {
            row[k] = nullptr;
        }
        row["status"] = status_of(e.kind());
        out.code = exit_code_of(e.kind());
    }
    return out;
}

RowResult ellipsoid_row(const SweepSpec& spec, double a) {
    RowResult out;
    Json& row = out.row;
    const EllipsoidSpec es{spec.fixed.n, a};
    const auto cmp = expansion_comparator(spec.fixed.alpha, spec.fixed.p, es);
    row["n"] = es.n;
    row["a"] = a;
    row["p"] = spec.fixed.p;
    row["alpha"] = spec.fixed.alpha;
    row["hmax_ellipsoid"] = ellipsoid_hmax_ext(es);
    row["hmax_ball"] = equal_volume_ball_hmax_ext(es);
    row["expansion_ellipsoid"] = cmp.ellipsoid;
    row["expansion_ball"] = cmp.ball;
    row["ellipsoid_above"] = cmp.ellipsoid_above;
    row["status"] = "ok";
    out.ok = true;
    return out;
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) {
        return "";
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    return v.dump();
}

Json point_json(const GridPoint& point) {
    Json j = Json::object();
    for (const auto& [k, v] : point) {
        j[k] = v;
    }
    return j;
}

}  // namespace

SweepVariable parse_sweep_variable(std::string_view name) {
    if (name == "alpha") return SweepVariable::Alpha;
    if (name == "R") return SweepVariable::R;
    if (name == "p") return SweepVariable::P;
    if (name == "epsilon") return SweepVariable::Epsilon;
    if (name == "a") return SweepVariable::A;
    throw std::invalid_argument("unknown sweep variable: " + std::string(name));
}

const char* to_string(SweepVariable v) noexcept {
    switch (v) {
    case SweepVariable::Alpha: return "alpha";
    case SweepVariable::R: return "R";
    case SweepVariable::P: return "p";
    case SweepVariable::Epsilon: return "epsilon";
    case SweepVariable::A: return "a";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (values.empty()) {
        throw std::invalid_argument("sweep grid is empty");
    }
    for (double v : values) {
        switch (variable) {
        case SweepVariable::Epsilon:
            PacDomainSpec{fixed.p, v}.validate();
            if (!(fixed.alpha < 0.0)) {
                throw std::invalid_argument("epsilon sweep needs alpha < 0");
            }
            if (quad_cells < 1000) {
                throw std::invalid_argument("epsilon sweep needs at least 1000 cells");
            }
            break;
        case SweepVariable::A:
            EllipsoidSpec{fixed.n, v}.validate();
            if (!(fixed.alpha < 0.0) || !(fixed.p > 1.0)) {
                throw std::invalid_argument("a sweep needs alpha < 0 and p > 1");
            }
            break;
        default: params_at(*this, v).validate(); break;
        }
    }
}

std::vector<double> parse_grid(std::string_view text) {
    auto to_double = [](const std::string& s) {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) {
            throw std::invalid_argument("not a number: " + s);
        }
        return v;
    };
    std::vector<std::string> parts;
    const char sep = (text.starts_with("lin:") || text.starts_with("log:")) ? ':' : ',';
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    std::vector<double> out;
    try {
        if (sep == ':') {
            if (parts.size() != 4) {
                throw std::invalid_argument("range must be lin:a:b:count or log:a:b:count");
            }
            const double a = to_double(parts[1]);
            const double b = to_double(parts[2]);
            const int count = std::stoi(parts[3]);
            if (count < 1) {
                throw std::invalid_argument("range count must be positive");
            }
            const bool log = parts[0] == "log";
            if (log && !(a * b > 0.0)) {
                throw std::invalid_argument("log range endpoints must be nonzero with equal sign");
            }
            for (int i = 0; i < count; ++i) {
                const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
                if (i == count - 1 && count > 1) {
                    out.push_back(b);
                } else if (log) {
                    const double sign = a < 0.0 ? -1.0 : 1.0;
                    out.push_back(sign * std::exp((1.0 - t) * std::log(std::abs(a)) +
                                                  t * std::log(std::abs(b))));
                } else {
                    out.push_back((1.0 - t) * a + t * b);
                }
            }
        } else {
            for (const auto& s : parts) {
                if (!s.empty()) {
                    out.push_back(to_double(s));
                }
            }
        }
    } catch (const std::logic_error& e) {
        throw std::invalid_argument(std::string("bad grid '") + std::string(text) + "': " + e.what());
    }
    return out;
}

unsigned worker_count() {
    if (const char* env = std::getenv("EXTROBIN_WORKERS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) {
                return static_cast<unsigned>(n);
            }
        } catch (const std::logic_error&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_solve(const ProblemParams& params, const SolverOptions& opts, std::ostream& out,
              std::ostream& err) {
    Json j;
    j["schema"] = kSolveSchema;
    j["p"] = params.p;
    j["n"] = params.n;
    j["alpha"] = params.alpha;
    j["R"] = params.R;
    int code = kOk;
    try {
        const auto res = solve_lambda1_ball(params, opts);
        const auto& traj = res.trajectory;
        j["lambda1"] = res.lambda1;
        j["bracket"] = {{"lo", res.bracket.lo}, {"hi", res.bracket.hi}};
        j["g_residual"] = res.g_limit_residual;
        j["iterations"] = res.iterations;
        j["status"] = "ok";
        j["residuals"] = {{"g_limit", res.g_limit_residual},
                          {"match", res.match_residual},
                          {"boundary", res.boundary_residual}};
        j["trajectory"] = {{"samples", traj.radii.size()},
                           {"r_start", traj.radii.front()},
                           {"r_end", traj.radii.back()},
                           {"g_start", traj.g_values.front()},
                           {"g_end", traj.g_values.back()},
                           {"decay_rate", decay_rate(res.lambda1, params.p)},
                           {"match_radius", res.match_radius},
                           {"strictly_decreasing", traj.strictly_decreasing()}};
    } catch (const SolverError& e) {
        j["lambda1"] = nullptr;
        j["status"] = status_of(e.kind());
        err << "extrobin solve: " << e.what() << '\n';
        code = exit_code_of(e.kind());
    }
    out << j.dump(2) << '\n';
    return code;
}

int cmd_sweep(const SweepSpec& spec, const SolverOptions& opts, OutputFormat format,
              unsigned workers, std::ostream& out, std::ostream& err) {
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        err << "extrobin sweep: " << e.what() << '\n';
        return kUsage;
    }
    std::vector<RowResult> rows(spec.values.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            const double v = spec.values[i];
            switch (spec.variable) {
            case SweepVariable::Epsilon: rows[i] = pac_row(spec, v); break;
            case SweepVariable::A: rows[i] = ellipsoid_row(spec, v); break;
            default: rows[i] = eigen_row(spec, v, opts); break;
            }
        }
    };
    {
        const unsigned n = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(rows.size()));
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n; ++t) {
            pool.emplace_back(work);
        }
        work();
    }

    const auto cols = columns_for(spec.variable);
    if (format == OutputFormat::Json) {
        Json j;
        j["schema"] = kSweepSchema;
        j["variable"] = to_string(spec.variable);
        j["columns"] = cols;
        j["rows"] = Json::array();
        for (const auto& r : rows) {
            j["rows"].push_back(r.row);
        }
        out << j.dump(2) << '\n';
    } else {
        out << "# schema=" << kSweepSchema << " variable=" << to_string(spec.variable) << '\n';
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out << (c ? "," : "") << cols[c];
        }
        out << '\n';
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                out << (c ? "," : "") << csv_cell(r.row[cols[c]]);
            }
            out << '\n';
        }
    }

    std::size_t ok = 0;
    for (const auto& r : rows) {
        if (r.ok) {
            ++ok;
        } else {
            err << "extrobin sweep: " << to_string(spec.variable) << " row failed with status "
                << r.row["status"].get<std::string>() << '\n';
        }
    }
    return ok > 0 ? kOk : rows.front().code;
}

int cmd_verify(std::string_view check, std::ostream& out, std::ostream& err) {
    std::vector<VerificationReport> reports;
    try {
        if (check == "all") {
            reports = run_all();
        } else {
            reports.push_back(run_check(check));
        }
    } catch (const std::invalid_argument& e) {
        err << "extrobin verify: " << e.what() << '\n';
        return kUsage;
    }
    Json j;
    j["schema"] = kVerifySchema;
    j["reports"] = Json::array();
    bool all_ok = true;
    for (const auto& rep : reports) {
        Json r;
        r["check_id"] = rep.check_id;
        r["statement"] = rep.statement;
        r["grid"] = Json::array();
        r["outcomes"] = Json::array();
        for (const auto& o : rep.outcomes) {
            r["grid"].push_back(point_json(o.point));
            r["outcomes"].push_back({{"point", point_json(o.point)},
                                     {"label", o.label},
                                     {"pass", o.pass},
                                     {"margin", o.margin},
                                     {"applicable", o.applicable}});
            if (!o.pass) {
                err << "extrobin verify: " << rep.check_id << " failed: " << o.label
                    << " margin " << std::setprecision(6) << o.margin << " at "
                    << point_json(o.point).dump() << '\n';
            }
        }
        r["summary"] = {{"passed", rep.passed()}, {"total", rep.outcomes.size()}};
        all_ok = all_ok && rep.all_passed();
        j["reports"].push_back(std::move(r));
    }
    j["passed"] = all_ok;
    out << j.dump(2) << '\n';
    return all_ok ? kOk : kVerifyFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"First Robin eigenvalue of the p-Laplacian outside a ball", "extrobin"};
    app.require_subcommand(1);

    ProblemParams params;
    SolverOptions opts;
    auto add_solver_opts = [&](CLI::App* sub) {
        sub->add_option("--r-max-factor", opts.r_max_factor, "Outward shot length in decay lengths");
        sub->add_option("--ode-rel-tol", opts.ode_rel_tol, "ODE relative tolerance");
        sub->add_option("--lambda-tol", opts.lambda_tol, "Relative bisection width");
    };

    auto* solve = app.add_subcommand("solve", "Compute lambda1 for one parameter set");
    solve->add_option("--p", params.p, "Exponent p > 1")->capture_default_str();
    solve->add_option("--n", params.n, "Dimension")->capture_default_str();
    solve->add_option("--alpha", params.alpha, "Robin parameter")->required();
    solve->add_option("--R", params.R, "Ball radius")->capture_default_str();
    add_solver_opts(solve);

    SweepSpec spec;
    std::string var = "alpha", values, range, format = "csv", output;
    auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid");
    sweep->add_option("--var", var, "alpha | R | p | epsilon | a")->capture_default_str();
    auto* values_opt = sweep->add_option("--values", values, "Comma-separated grid");
    sweep->add_option("--range", range, "lin:a:b:count or log:a:b:count")->excludes(values_opt);
    sweep->add_option("--p", spec.fixed.p, "Fixed p")->capture_default_str();
    sweep->add_option("--n", spec.fixed.n, "Fixed n")->capture_default_str();
    sweep->add_option("--alpha", spec.fixed.alpha, "Fixed alpha")->capture_default_str();
    sweep->add_option("--R", spec.fixed.R, "Fixed R")->capture_default_str();
    sweep->add_option("--cells", spec.quad_cells, "Quadrature cells for epsilon sweeps")
        ->capture_default_str();
    sweep->add_option("--format", format, "csv | json")->capture_default_str();
    sweep->add_option("--output", output, "Output file (default: standard output)");
    add_solver_opts(sweep);

    std::string check = "all";
    bool list = false;
    auto* verify = app.add_subcommand("verify", "Run property checks");
    verify->add_option("check", check, "Check id or 'all'")->capture_default_str();
    verify->add_flag("--list", list, "List check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) {
            params.validate();
            opts.validate();
            return cmd_solve(params, opts, out, err);
        }
        if (*sweep) {
            spec.variable = parse_sweep_variable(var);
            if (format != "csv" && format != "json") {
                throw std::invalid_argument("format must be csv or json");
            }
            const bool ranged = sweep->count("--range") > 0;
            spec.values = parse_grid(ranged ? range : values);
            opts.validate();
            const auto fmt = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
            if (output.empty()) {
                return cmd_sweep(spec, opts, fmt, worker_count(), out, err);
            }
            std::ofstream file(output);
            if (!file) {
                throw std::invalid_argument("cannot open " + output);
            }
            return cmd_sweep(spec, opts, fmt, worker_count(), file, err);
        }
        if (list) {
            for (const auto& id : check_ids()) {
                out << id << '\n';
            }
            return kOk;
        }
        return cmd_verify(check, out, err);
    } catch (const std::invalid_argument& e) {
        err << "extrobin: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace extrobin::cli
