#include "ablation/profile.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "ablation/errors.hpp"

namespace ablation {

void write_csv(std::ostream& out, const TemperatureProfile& profile) {
    out << "model,t,r,T\n";
    char buf[128];
    const char* name = to_string(profile.model);
    for (std::size_t it = 0; it < profile.nt(); ++it) {
        for (std::size_t ir = 0; ir < profile.nr(); ++ir) {
            std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%.17g\n", name,
                          profile.times[it], profile.radii[ir], profile.at(it, ir));
            out << buf;
        }
    }
}

const char* to_string(ProfileModel m) {
    switch (m) {
        case ProfileModel::ParabolicInfinite: return "parabolic-infinite";
        case ProfileModel::HyperbolicInfinite: return "hyperbolic-infinite";
        case ProfileModel::ParabolicFinite: return "parabolic-finite";
        case ProfileModel::HyperbolicFinite: return "hyperbolic-finite";
        case ProfileModel::OracleParabolic: return "oracle-parabolic";
        case ProfileModel::OracleHyperbolic: return "oracle-hyperbolic";
    }
    return "?";
}

std::vector<double> make_axis(double min, double max, int count, bool log_scale) {
    if (count < 1) throw param_error("count", "axis needs at least one sample");
    if (count == 1) return {min};
    if (!(min < max)) throw param_error("axis", "min must be below max");
    std::vector<double> axis(count);
    if (log_scale) {
        if (!(min > 0.0)) throw param_error("axis", "log axis needs min > 0");
        const double lo = std::log(min), hi = std::log(max);
        for (int i = 0; i < count; ++i) {
            axis[i] = std::exp(lo + (hi - lo) * i / (count - 1));
        }
        axis.back() = max;
    } else {
        for (int i = 0; i < count; ++i) {
            axis[i] = min + (max - min) * i / (count - 1);
        }
        axis.back() = max;
    }
    return axis;
}

} // namespace ablation
