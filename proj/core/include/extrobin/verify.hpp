#pragma once

// Property checks over fixed parameter grids. Every check is deterministic.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace extrobin {

using GridPoint = std::vector<std::pair<std::string, double>>;

struct PointOutcome {
    GridPoint point;
    /// What was compared at this point, e.g. "n=3 vs n=2".
    std::string label;
    bool pass = false;
    /// Positive when the property holds with room to spare, in the check's own units.
    double margin = 0.0;
    /// False when the point lies outside the property's hypotheses; such
    /// points pass vacuously and are reported for completeness.
    bool applicable = true;
};

struct VerificationReport {
    std::string check_id;
    /// The property in mathematical notation.
    std::string statement;
    std::vector<PointOutcome> outcomes;

    std::size_t passed() const;
    bool all_passed() const;
};

/// Ids accepted by run_check, in registry order.
std::vector<std::string> check_ids();

/// Throws std::invalid_argument for an unknown id.
VerificationReport run_check(std::string_view check_id);

std::vector<VerificationReport> run_all();

}  // namespace extrobin
