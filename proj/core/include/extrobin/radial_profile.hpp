#pragma once

#include <optional>
#include <vector>

namespace extrobin {

/// A radial function sampled on strictly increasing nodes, read as piecewise
/// linear between them.
struct RadialProfile {
    std::vector<double> nodes;
    std::vector<double> values;
    /// ∫|u|^p r^{n-1} dr when known for a fixed (p, n); 1 after normalization.
    std::optional<double> p_norm;

    std::size_t size() const { return nodes.size(); }

    /// Throws std::invalid_argument on size mismatch, fewer than two nodes,
    /// non-increasing nodes or non-finite values.
    void validate() const;
};

/// Trapezoid approximation of ∫|u|^p r^{n-1} dr over the profile nodes.
double profile_p_mass(const RadialProfile& profile, double p, int n);

/// Rescales values so that profile_p_mass == 1 and records p_norm = 1.
void normalize_profile(RadialProfile& profile, double p, int n);

bool is_positive(const RadialProfile& profile);
bool is_strictly_decreasing(const RadialProfile& profile);

}  // namespace extrobin
