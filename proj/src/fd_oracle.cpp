#include "ablation/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ablation/errors.hpp"
#include "ablation/parallel.hpp"

namespace ablation {
namespace fd_oracle {

namespace {

struct Domain {
    double r_in;
    double r_out;
    bool origin; // OriginCauchy
};

Domain domain_of(const PhysicalParams& p, const Grid& g) {
    if (!p.r1) throw param_error("r1", "fd_oracle needs a bounded domain");
    return {g.inner == InnerBoundary::OriginCauchy ? 0.0 : p.r0, *p.r1,
            g.inner == InnerBoundary::OriginCauchy};
}

void check_stability(const Grid& g, const PhysicalParams& p, const DerivedParams& dp) {
    if (g.nr < 3) throw param_error("nr", "need at least 3 radial points");
    if (g.nt < 1) throw param_error("nt", "need at least 1 time step");
    if (!(g.dr > 0.0) || !(g.dt > 0.0)) throw param_error("grid", "dr and dt must be positive");
    if (g.scheme == Scheme::ExplicitParabolic) {
        if (dp.a * g.dt / (g.dr * g.dr) > 0.5 + 1e-12) {
            throw param_error("dt", "parabolic stability a dt/dr^2 <= 0.5 violated");
        }
    } else {
        if (g.dt > g.dr * std::sqrt(p.tau / dp.a) * (1.0 + 1e-12)) {
            throw param_error("dt", "hyperbolic CFL dt <= dr sqrt(tau/a) violated");
        }
    }
}

struct March {
    const PhysicalParams& p;
    const DerivedParams& dp;
    const Grid& g;
    Domain dom;
    std::vector<double> r;      // radii
    std::vector<double> src_y;  // source in y-space
    double y_outer;             // pinned outer value
    double guard;               // instability bound on |y|

    explicit March(const PhysicalParams& p_, const DerivedParams& dp_, const Grid& g_)
        : p(p_), dp(dp_), g(g_), dom(domain_of(p_, g_)) {
        check_stability(g, p, dp);
        r.resize(g.nr);
        src_y.resize(g.nr);
        const bool hyper = g.scheme == Scheme::ExplicitHyperbolic;
        const double scale = hyper ? 1.0 / p.tau : 1.0;
        for (int i = 0; i < g.nr; ++i) {
            r[i] = dom.r_in + i * g.dr;
            const double ri = r[i];
            if (ri > p.r0 * (1.0 + 1e-12)) {
                src_y[i] = scale * dp.beta / (ri * ri * ri); // r * beta/r^4
            } else {
                src_y[i] = 0.0; // continuation region carries no volume source
            }
        }
        r.back() = dom.r_out; // pin against accumulated rounding

        if (dom.origin) {
            // The even continuation kinks at the electrode: the static piece
            // -b/(2 r^2) continued by the constant -b/(2 r0^2) jumps in slope
            // by b/r0^2, so the extended problem carries a surface sink
            // -beta/r0^2 * delta(r - r0) in y-space (scaled by 1/tau for the
            // relaxing model). r0 is expected on (or next to) a grid node.
            const int i0 = static_cast<int>(std::llround((p.r0 - dom.r_in) / g.dr));
            if (i0 > 0 && i0 < g.nr - 1) {
                const double one_sided = scale * dp.beta / (p.r0 * p.r0 * p.r0);
                src_y[i0] = 0.5 * one_sided - scale * dp.beta / (p.r0 * p.r0 * g.dr);
            }
        } else {
            // electrode node carries the full volume source on the shell
            src_y[0] = scale * dp.beta / (p.r0 * p.r0 * p.r0);
        }

        y_outer = dom.r_out * p.T_ambient;
        const double amplitude = std::abs(y_outer) + dp.b / p.r0 + 1.0;
        guard = 10.0 * amplitude;
    }

    // y'' with the inner boundary handled: Robin ghost (Neumann in T) at the
    // electrode, nothing special at the pinned origin.
    double lap(const std::vector<double>& y, int i) const {
        const double inv = 1.0 / (g.dr * g.dr);
        if (i == 0) {
            // only called for the Neumann case
            return (2.0 * y[1] - 2.0 * y[0] * (1.0 + g.dr / p.r0)) * inv;
        }
        return (y[i + 1] - 2.0 * y[i] + y[i - 1]) * inv;
    }

    void check_sane(const std::vector<double>& y, long step) const {
        double peak = 0.0;
        for (double v : y) peak = std::max(peak, std::abs(v));
        if (!std::isfinite(peak) || peak > guard) {
            throw accuracy_error("fd_oracle: instability detected at step " +
                                     std::to_string(step) + " (|y| grew beyond 10x range)",
                                 peak, std::numeric_limits<double>::infinity());
        }
    }
};

void record(TemperatureProfile& out, const March& m, const std::vector<double>& y, double t) {
    out.times.push_back(t);
    const std::size_t base = out.T.size();
    out.T.resize(base + m.r.size());
    for (std::size_t i = 0; i < m.r.size(); ++i) {
        // T = y/r; at the origin y(0) = 0 and T is finite -> extrapolate.
        out.T[base + i] = m.r[i] > 0.0 ? y[i] / m.r[i] : y[1] / m.r[1];
    }
}

bool want_sample(const Grid& g, long step) {
    return step == g.nt || step % g.sample_stride == 0;
}

} // namespace

Grid make_grid(const PhysicalParams& p, const DerivedParams& dp, Scheme scheme, int nr,
               double t_end, double cfl_fraction, int max_slices, InnerBoundary inner) {
    if (!p.r1) throw param_error("r1", "fd_oracle needs a bounded domain");
    if (nr < 3) throw param_error("nr", "need at least 3 radial points");
    if (!(t_end > 0.0)) throw param_error("t_end", "must be positive");
    if (!(cfl_fraction > 0.0) || cfl_fraction > 1.0) {
        throw param_error("cfl_fraction", "must lie in (0, 1]");
    }
    Grid g;
    g.nr = nr;
    g.scheme = scheme;
    g.inner = inner;
    const double r_in = inner == InnerBoundary::OriginCauchy ? 0.0 : p.r0;
    g.dr = (*p.r1 - r_in) / (nr - 1);
    const double dt_max = scheme == Scheme::ExplicitParabolic
                              ? 0.5 * g.dr * g.dr / dp.a
                              : g.dr * std::sqrt(p.tau / dp.a);
    const double dt_want = cfl_fraction * dt_max;
    long nt = static_cast<long>(std::ceil(t_end / dt_want));
    const int stride = static_cast<int>(std::max(1L, (nt + max_slices - 1) / max_slices));
    nt = ((nt + stride - 1) / stride) * stride; // uniform slice spacing
    g.nt = nt;
    g.dt = t_end / static_cast<double>(nt);
    g.sample_stride = stride;
    validate_grid(g, p, dp);
    return g;
}

void validate_grid(const Grid& g, const PhysicalParams& p, const DerivedParams& dp) {
    check_stability(g, p, dp);
}

TemperatureProfile solve_parabolic(const PhysicalParams& p, const DerivedParams& dp,
                                   const Grid& g,
                                   const std::function<double(double)>& initial_temperature) {
    if (g.scheme != Scheme::ExplicitParabolic) {
        throw param_error("scheme", "solve_parabolic needs an ExplicitParabolic grid");
    }
    March m(p, dp, g);
    const int nr = g.nr;
    std::vector<double> y(nr), ynew(nr);
    for (int i = 0; i < nr; ++i) {
        y[i] = m.r[i] * (initial_temperature ? initial_temperature(m.r[i]) : p.T_ambient);
    }

    TemperatureProfile out;
    out.model = ProfileModel::OracleParabolic;
    out.radii = m.r;
    out.meta = dp;
    record(out, m, y, 0.0);

    const int i_start = m.dom.origin ? 1 : 0;
    for (long step = 1; step <= g.nt; ++step) {
        parallel_for(nr - 1 - i_start, [&](std::int64_t idx) {
            const int i = i_start + static_cast<int>(idx);
            ynew[i] = y[i] + g.dt * (dp.a * m.lap(y, i) + m.src_y[i]);
        });
        if (m.dom.origin) ynew[0] = 0.0;
        ynew[nr - 1] = m.y_outer;
        y.swap(ynew);
        if (step % 64 == 0) m.check_sane(y, step);
        if (want_sample(g, step)) record(out, m, y, step * g.dt);
    }
    m.check_sane(y, g.nt);
    return out;
}

TemperatureProfile solve_hyperbolic(const PhysicalParams& p, const DerivedParams& dp,
                                    const Grid& g,
                                    const std::function<double(double)>& initial_temperature) {
    if (g.scheme != Scheme::ExplicitHyperbolic) {
        throw param_error("scheme", "solve_hyperbolic needs an ExplicitHyperbolic grid");
    }
    March m(p, dp, g);
    const int nr = g.nr;
    const double v2 = dp.a / p.tau;
    std::vector<double> yprev(nr), y(nr), ynew(nr);
    for (int i = 0; i < nr; ++i) {
        yprev[i] = m.r[i] * (initial_temperature ? initial_temperature(m.r[i]) : p.T_ambient);
    }

    auto origin_value = [&](double t) {
        // Zero-mode trace of the continuation problem: y(0,t) = (b/r0)(1-e^{-t/tau}).
        return m.dom.origin ? dp.b / p.r0 * -std::expm1(-t / p.tau) : 0.0;
    };
    const double ydot0 = m.dom.origin ? dp.b / (p.r0 * p.tau) : 0.0;

    TemperatureProfile out;
    out.model = ProfileModel::OracleHyperbolic;
    out.radii = m.r;
    out.meta = dp;
    record(out, m, yprev, 0.0);

    const int i_start = m.dom.origin ? 1 : 0;

    // Second-order first step from T = T_ambient, dT/dt = ydot0/r.
    parallel_for(nr - 1 - i_start, [&](std::int64_t idx) {
        const int i = i_start + static_cast<int>(idx);
        const double acc = v2 * m.lap(yprev, i) + m.src_y[i] - ydot0 / p.tau;
        y[i] = yprev[i] + g.dt * ydot0 + 0.5 * g.dt * g.dt * acc;
    });
    if (m.dom.origin) y[0] = origin_value(g.dt);
    y[nr - 1] = m.y_outer;
    if (want_sample(g, 1)) record(out, m, y, g.dt);

    const double idt2 = 1.0 / (g.dt * g.dt);
    const double damp = 1.0 / (2.0 * p.tau * g.dt);
    const double denom = idt2 + damp;
    for (long step = 2; step <= g.nt; ++step) {
        parallel_for(nr - 1 - i_start, [&](std::int64_t idx) {
            const int i = i_start + static_cast<int>(idx);
            const double rhs = v2 * m.lap(y, i) + m.src_y[i] +
                               (2.0 * y[i] - yprev[i]) * idt2 + yprev[i] * damp;
            ynew[i] = rhs / denom;
        });
        if (m.dom.origin) ynew[0] = origin_value(step * g.dt);
        ynew[nr - 1] = m.y_outer;
        yprev.swap(y);
        y.swap(ynew);
        if (step % 64 == 0) m.check_sane(y, step);
        if (want_sample(g, step)) record(out, m, y, step * g.dt);
    }
    m.check_sane(y, g.nt);
    return out;
}

double compare(const TemperatureProfile& a, const TemperatureProfile& b, Norm norm) {
    if (a.times != b.times || a.radii != b.radii) {
        throw param_error("profiles", "mismatched (t, r) sample sets");
    }
    double linf = 0.0, sq = 0.0;
    for (std::size_t i = 0; i < a.T.size(); ++i) {
        const double d = a.T[i] - b.T[i];
        linf = std::max(linf, std::abs(d));
        sq += d * d;
    }
    return norm == Norm::Linf ? linf : std::sqrt(sq / static_cast<double>(a.T.size()));
}

std::vector<FrontPoint> detect_wavefront(const TemperatureProfile& profile,
                                         const FrontOptions& opt) {
    std::vector<FrontPoint> pts;
    const std::size_t M = profile.nt();
    const std::size_t N = profile.nr();
    if (M < 3 || N < 8) return pts;
    const int margin = std::max(1, opt.boundary_margin);
    const int window = std::max<int>(8, static_cast<int>(N) / 16);

    double t_scale = 0.0;
    for (double v : profile.T) t_scale = std::max(t_scale, std::abs(v));
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * (t_scale + 1.0);

    std::vector<double> w(N, 0.0);
    for (std::size_t mslice = 1; mslice + 1 < M; ++mslice) {
        const std::size_t lo = margin, hi = N - 1 - margin;
        double wmax = -1.0;
        std::size_t imax = lo;
        for (std::size_t i = lo; i <= hi; ++i) {
            w[i] = std::abs(profile.at(mslice + 1, i) - 2.0 * profile.at(mslice, i) +
                            profile.at(mslice - 1, i));
            if (w[i] > wmax) {
                wmax = w[i];
                imax = i;
            }
        }
        if (wmax <= floor) continue;

        std::vector<double> sorted(w.begin() + lo, w.begin() + hi + 1);
        std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
        const double med = sorted[sorted.size() / 2];
        const double ratio = wmax / std::max(med, floor * 1e-3);
        if (ratio < opt.threshold_factor) continue;

        // A traveling discontinuity is localized and clear of the walls: the
        // quiet zone ahead of it drops off within a window, while a diffusive
        // field stays flat on both sides of its (wall-hugging) maximum.
        if (imax < lo + window || imax + window > hi) continue;
        const double side = std::min(w[imax - window], w[imax + window]);
        if (wmax < opt.sharpness_factor * side) continue;

        pts.push_back({profile.times[mslice], profile.radii[imax], ratio});
    }
    return pts;
}

FrontFit fit_front(const std::vector<FrontPoint>& pts) {
    FrontFit fit;
    fit.points = static_cast<int>(pts.size());
    if (pts.size() < 5) return fit;
    double st = 0, sr = 0, stt = 0, str = 0;
    for (const FrontPoint& p : pts) {
        st += p.t;
        sr += p.r;
        stt += p.t * p.t;
        str += p.t * p.r;
    }
    const double n = static_cast<double>(pts.size());
    const double det = n * stt - st * st;
    if (std::abs(det) < 1e-300) return fit;
    fit.speed = (n * str - st * sr) / det;
    fit.intercept = (sr * stt - st * str) / det;
    fit.found = true;
    return fit;
}

} // namespace fd_oracle
} // namespace ablation
