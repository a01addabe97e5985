#pragma once

#include <functional>
#include <vector>

#include "ablation/params.hpp"
#include "ablation/profile.hpp"

namespace ablation {
namespace fd_oracle {

enum class Scheme { ExplicitParabolic, ExplicitHyperbolic };

/// Inner boundary of the marching domain.
///  - ElectrodeNeumann: shell [r0, r1], no-flux electrode (the finite problem).
///  - OriginCauchy: extended domain (0, r1], y = rT pinned at the origin and
///    the source switched off below r0 — the continuation problem the
///    infinite-domain closed forms actually solve.
enum class InnerBoundary { ElectrodeNeumann, OriginCauchy };

struct Grid {
    int nr = 0;           ///< radial points, >= 3
    long nt = 0;          ///< time steps, >= 1
    double dr = 0.0;      ///< spacing [m]
    double dt = 0.0;      ///< step [s]
    Scheme scheme = Scheme::ExplicitParabolic;
    InnerBoundary inner = InnerBoundary::ElectrodeNeumann;
    int sample_stride = 1; ///< record every stride-th step (t = 0 always kept)
};

/// Builds a stable grid reaching exactly t_end. cfl_fraction scales the
/// stability bound (a dt/dr^2 <= 0.5 parabolic, dt <= dr sqrt(tau/a) CFL).
Grid make_grid(const PhysicalParams& p, const DerivedParams& dp, Scheme scheme, int nr,
               double t_end, double cfl_fraction = 0.9, int max_slices = 400,
               InnerBoundary inner = InnerBoundary::ElectrodeNeumann);

/// Throws param_error when the grid violates its stability bound.
void validate_grid(const Grid& g, const PhysicalParams& p, const DerivedParams& dp);

/// Explicit march of dT/dt = (a/r^2)(r^2 T')' + beta/r^4 in the y = rT
/// variable (plain second difference + source beta/r^3). Throws
/// accuracy_error on detected instability. initial_temperature overrides the
/// uniform T_ambient start when supplied.
TemperatureProfile solve_parabolic(const PhysicalParams& p, const DerivedParams& dp,
                                   const Grid& g,
                                   const std::function<double(double)>& initial_temperature = {});

/// Explicit leapfrog for the relaxing model, the 1/tau damping term taken at
/// the centered time average; starts with T = initial (default T_ambient),
/// dT/dt = 0 via a second-order first step.
TemperatureProfile solve_hyperbolic(const PhysicalParams& p, const DerivedParams& dp,
                                    const Grid& g,
                                    const std::function<double(double)>& initial_temperature = {});

enum class Norm { Linf, L2 };

/// Discrepancy between two profiles on identical sample sets (L2 = RMS).
/// Throws param_error on mismatched sample sets.
double compare(const TemperatureProfile& a, const TemperatureProfile& b, Norm norm);

struct FrontOptions {
    double threshold_factor = 10.0; ///< peak vs median of |second time difference|
    double sharpness_factor = 2.5;  ///< peak vs the smaller value a window away
    int boundary_margin = 3;        ///< cells excluded at both ends
};

struct FrontPoint {
    double t = 0.0;
    double r = 0.0;
    double jump_ratio = 0.0; ///< peak / median for the slice
};

/// Per time slice, the radius where |d/dt T| jumps (discrete second time
/// difference past the adaptive threshold). Smooth profiles yield nothing.
std::vector<FrontPoint> detect_wavefront(const TemperatureProfile& profile,
                                         const FrontOptions& opt = {});

struct FrontFit {
    bool found = false;
    double speed = 0.0;
    double intercept = 0.0;
    int points = 0;
};

/// Least-squares r = speed * t + intercept through detected front points.
FrontFit fit_front(const std::vector<FrontPoint>& pts);

} // namespace fd_oracle
} // namespace ablation
