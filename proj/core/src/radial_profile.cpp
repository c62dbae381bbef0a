#include "extrobin/radial_profile.hpp"

#include <cmath>
#include <stdexcept>

namespace extrobin {

void RadialProfile::validate() const {
    if (nodes.size() != values.size()) {
        throw std::invalid_argument("RadialProfile: nodes/values size mismatch");
    }
    if (nodes.size() < 2) {
        throw std::invalid_argument("RadialProfile: need at least two nodes");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!std::isfinite(nodes[i]) || !std::isfinite(values[i])) {
            throw std::invalid_argument("RadialProfile: non-finite entry");
        }
        if (i > 0 && !(nodes[i] > nodes[i - 1])) {
            throw std::invalid_argument("RadialProfile: nodes must be strictly increasing");
        }
    }
}

double profile_p_mass(const RadialProfile& profile, double p, int n) {
    profile.validate();
    double mass = 0.0;
    for (std::size_t i = 1; i < profile.size(); ++i) {
        const double r0 = profile.nodes[i - 1], r1 = profile.nodes[i];
        const double f0 = std::pow(std::abs(profile.values[i - 1]), p) * std::pow(r0, n - 1);
        const double f1 = std::pow(std::abs(profile.values[i]), p) * std::pow(r1, n - 1);
        mass += 0.5 * (r1 - r0) * (f0 + f1);
    }
    return mass;
}

void normalize_profile(RadialProfile& profile, double p, int n) {
    const double mass = profile_p_mass(profile, p, n);
    if (!(mass > 0.0)) {
        throw std::invalid_argument("normalize_profile: zero mass");
    }
    const double s = std::pow(mass, -1.0 / p);
    for (double& v : profile.values) {
        v *= s;
    }
    profile.p_norm = 1.0;
}

bool is_positive(const RadialProfile& profile) {
    for (double v : profile.values) {
        if (!(v > 0.0)) {
            return false;
        }
    }
    return true;
}

bool is_strictly_decreasing(const RadialProfile& profile) {
    for (std::size_t i = 1; i < profile.values.size(); ++i) {
        if (!(profile.values[i] < profile.values[i - 1])) {
            return false;
        }
    }
    return true;
}

}  // namespace extrobin
