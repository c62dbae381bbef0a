#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "extrobin/params.hpp"
#include "extrobin/shooting.hpp"

namespace extrobin::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kNoNegativeEigenvalue = 2,
    kNoBracket = 3,
    kUsage = 64,
};

enum class SweepVariable { Alpha, R, P, Epsilon, A };

SweepVariable parse_sweep_variable(std::string_view name);
const char* to_string(SweepVariable v) noexcept;

enum class OutputFormat { Csv, Json };

struct SweepSpec {
    SweepVariable variable = SweepVariable::Alpha;
    std::vector<double> values;
    /// Values of the parameters that are not swept. For epsilon sweeps p and
    /// alpha are used; for a sweeps n, p and alpha.
    ProblemParams fixed;
    int quad_cells = 1000;

    /// Throws std::invalid_argument on an empty grid or invalid parameters.
    void validate() const;
};

/// Grid from "v1,v2,..." or "lin:a:b:count" or "log:a:b:count" (a, b of equal sign).
/// Throws std::invalid_argument on malformed input.
std::vector<double> parse_grid(std::string_view text);

/// Worker count from EXTROBIN_WORKERS, falling back to hardware concurrency.
unsigned worker_count();

int cmd_solve(const ProblemParams& params, const SolverOptions& opts, std::ostream& out,
              std::ostream& err);

/// Rows are evaluated on `workers` threads and written in grid order.
int cmd_sweep(const SweepSpec& spec, const SolverOptions& opts, OutputFormat format,
              unsigned workers, std::ostream& out, std::ostream& err);

/// `check` is a check id or "all".
int cmd_verify(std::string_view check, std::ostream& out, std::ostream& err);

/// Full command line: parses argv and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extrobin::cli
