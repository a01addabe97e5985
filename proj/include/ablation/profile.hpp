#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ablation/params.hpp"

namespace ablation {

enum class ProfileModel {
    ParabolicInfinite,
    HyperbolicInfinite,
    ParabolicFinite,
    HyperbolicFinite,
    OracleParabolic,
    OracleHyperbolic,
};

/// Sampled field over a (t, r) grid, row-major by time slice.
struct TemperatureProfile {
    ProfileModel model{};
    std::vector<double> times;
    std::vector<double> radii;
    std::vector<double> T; // times.size() * radii.size()
    DerivedParams meta{};

    std::size_t nt() const { return times.size(); }
    std::size_t nr() const { return radii.size(); }
    double& at(std::size_t it, std::size_t ir) { return T[it * radii.size() + ir]; }
    double at(std::size_t it, std::size_t ir) const { return T[it * radii.size() + ir]; }
};

/// CSV with header `model,t,r,T`, 17 significant digits, sorted by (t, r).
void write_csv(std::ostream& out, const TemperatureProfile& profile);

const char* to_string(ProfileModel m);

/// Linear or log-spaced sample axis.
std::vector<double> make_axis(double min, double max, int count, bool log_scale);

} // namespace ablation
