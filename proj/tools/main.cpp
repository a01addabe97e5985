// ablation-heat: transients of the classical and relaxing (Cattaneo-Vernotte)
// heat conduction models for a Joule-heated spherical electrode, plus the
// finite-shell eigenfunction series and a finite-difference reference solver.
// All outputs are CSV for downstream plotting.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ablation/config.hpp"
#include "ablation/errors.hpp"
#include "ablation/fd_oracle.hpp"
#include "ablation/finite_spectral.hpp"
#include "ablation/infinite_hyperbolic.hpp"
#include "ablation/infinite_parabolic.hpp"
#include "ablation/parallel.hpp"
#include "ablation/params.hpp"
#include "ablation/profile.hpp"
#include "ablation/specfun.hpp"
#include "ablation/verify.hpp"

namespace {

using namespace ablation;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitAccuracy = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct ParamFlags {
    std::string config_path;
    std::map<std::string, std::string> overrides;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "configuration file (name = value lines)");
        for (const char* key :
             {"r0", "r1", "kappa", "rho", "c", "sigma", "V0", "tau", "T_ambient"}) {
            cmd->add_option_function<std::string>(
                std::string("--") + key,
                [this, key](const std::string& v) { overrides[key] = v; },
                std::string("override ") + key);
        }
    }

    PhysicalParams resolve() const {
        PhysicalParams p = default_case();
        if (!config_path.empty()) p = load_config(config_path, p);
        for (const auto& [k, v] : overrides) apply_override(p, k, v);
        return p;
    }
};

struct AxisFlags {
    double min = 0.0, max = 0.0;
    int count = 0;
    bool log_scale = false;

    void attach(CLI::App* cmd, const std::string& name, double dmin, double dmax, int dcount) {
        min = dmin;
        max = dmax;
        count = dcount;
        cmd->add_option("--" + name + "-min", min, name + " axis minimum");
        cmd->add_option("--" + name + "-max", max, name + " axis maximum");
        cmd->add_option("--" + name + "-count", count, name + " sample count");
        cmd->add_flag("--" + name + "-log", log_scale, name + " axis log spaced");
    }

    std::vector<double> build() const { return make_axis(min, max, count, log_scale); }
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw param_error("output", "cannot open '" + path + "'");
    return file;
}

int cmd_params(const ParamFlags& pf, bool dump, const std::string& output) {
    const PhysicalParams p = pf.resolve();
    const DerivedParams dp = derive_params(p);
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    if (dump) {
        dump_config(out, p);
        return kExitOk;
    }
    out << "name,value\n";
    out << "a," << fmt(dp.a) << "\n";
    out << "beta," << fmt(dp.beta) << "\n";
    out << "b," << fmt(dp.b) << "\n";
    out << "eps," << fmt(dp.eps) << "\n";
    out << "k0," << fmt(dp.k0) << "\n";
    out << "d," << fmt(dp.d) << "\n";
    out << "wave_speed," << fmt(dp.wave_speed) << "\n";
    return kExitOk;
}

ProfileModel parse_model(const std::string& name) {
    if (name == "parabolic-infinite") return ProfileModel::ParabolicInfinite;
    if (name == "hyperbolic-infinite") return ProfileModel::HyperbolicInfinite;
    if (name == "parabolic-finite") return ProfileModel::ParabolicFinite;
    if (name == "hyperbolic-finite") return ProfileModel::HyperbolicFinite;
    throw param_error("model", "unknown model '" + name + "'");
}

int cmd_steady(const ParamFlags& pf, const AxisFlags& raxis, const std::string& output) {
    const PhysicalParams p = pf.resolve();
    const DerivedParams dp = derive_params(p);
    TemperatureProfile prof;
    prof.model = p.finite() ? ProfileModel::ParabolicFinite : ProfileModel::ParabolicInfinite;
    prof.meta = dp;
    prof.times = {std::numeric_limits<double>::infinity()};
    prof.radii = raxis.build();
    prof.T.resize(prof.radii.size());
    for (std::size_t i = 0; i < prof.radii.size(); ++i) {
        prof.T[i] = p.finite() ? finite_spectral::steady_state_finite(prof.radii[i], p, dp)
                               : infinite_parabolic::steady_state(prof.radii[i], dp, p);
    }
    std::ofstream file;
    write_csv(open_output(output, file), prof);
    return kExitOk;
}

int cmd_transient(const ParamFlags& pf, const std::string& model_name, const AxisFlags& taxis,
                  const AxisFlags& raxis, const std::string& mode_name, int n_max,
                  const std::string& output) {
    const PhysicalParams p = pf.resolve();
    const DerivedParams dp = derive_params(p);
    const ProfileModel model = parse_model(model_name);

    TemperatureProfile prof;
    prof.model = model;
    prof.meta = dp;
    prof.times = taxis.build();
    prof.radii = raxis.build();
    prof.T.assign(prof.times.size() * prof.radii.size(), 0.0);

    std::vector<finite_spectral::EigenMode> modes;
    if (model == ProfileModel::ParabolicFinite || model == ProfileModel::HyperbolicFinite) {
        finite_spectral::SeriesControl sc;
        sc.n_max = n_max;
        modes = finite_spectral::eigen_modes(p, sc.n_max);
        finite_spectral::fourier_coefficients(modes, p, dp, sc);
        finite_spectral::coefficient_split_finite(
            modes, dp, p.tau,
            model == ProfileModel::ParabolicFinite ? finite_spectral::Model::Parabolic
                                                   : finite_spectral::Model::Hyperbolic);
    }
    const infinite_parabolic::Mode pmode = mode_name == "quadrature"
                                               ? infinite_parabolic::Mode::FullQuadrature
                                               : infinite_parabolic::Mode::SmallElectrodeClosedForm;

    const std::int64_t total =
        static_cast<std::int64_t>(prof.times.size()) * static_cast<std::int64_t>(prof.radii.size());
    std::vector<std::string> failures(prof.times.size() * prof.radii.size());
    parallel_for(total, [&](std::int64_t idx) {
        const std::size_t it = static_cast<std::size_t>(idx) / prof.radii.size();
        const std::size_t ir = static_cast<std::size_t>(idx) % prof.radii.size();
        const double t = prof.times[it];
        const double r = prof.radii[ir];
        try {
            switch (model) {
                case ProfileModel::ParabolicInfinite:
                    prof.T[idx] = infinite_parabolic::transient(t, r, dp, p, pmode);
                    break;
                case ProfileModel::HyperbolicInfinite:
                    prof.T[idx] = infinite_hyperbolic::temperature(t, r, dp, p);
                    break;
                default:
                    prof.T[idx] =
                        finite_spectral::series_temperature(
                            t, r, modes, p, dp,
                            model == ProfileModel::ParabolicFinite
                                ? finite_spectral::Model::Parabolic
                                : finite_spectral::Model::Hyperbolic)
                            .T;
            }
        } catch (const std::exception& e) {
            failures[idx] = e.what();
        }
    });
    for (const auto& f : failures) {
        if (!f.empty()) throw accuracy_error("transient evaluation failed: " + f, 0.0, 0.0);
    }

    std::ofstream file;
    write_csv(open_output(output, file), prof);
    return kExitOk;
}

int cmd_eigen(const ParamFlags& pf, int n_max, const std::string& output) {
    const PhysicalParams p = pf.resolve();
    const DerivedParams dp = derive_params(p);
    auto modes = finite_spectral::eigen_modes(p, n_max);
    finite_spectral::SeriesControl sc;
    sc.n_max = n_max;
    finite_spectral::fourier_coefficients(modes, p, dp, sc);
    finite_spectral::coefficient_split_finite(modes, dp, p.tau, finite_spectral::Model::Hyperbolic);

    std::ofstream file;
    std::ostream& out = open_output(output, file);
    out << "n,k_n,norm,c_n,branch\n";
    for (const auto& m : modes) {
        out << m.n << ',' << fmt(m.k_n) << ',' << fmt(m.norm) << ',' << fmt(m.c_n) << ','
            << to_string(m.branch) << "\n";
    }
    return kExitOk;
}

int cmd_oracle(const ParamFlags& pf, const std::string& scheme_name, int nr, double t_end,
               double cfl, int slices, const std::string& inner_name,
               const std::string& front_path, const std::string& output) {
    const PhysicalParams p = pf.resolve();
    const DerivedParams dp = derive_params(p);
    const auto scheme = scheme_name == "hyperbolic" ? fd_oracle::Scheme::ExplicitHyperbolic
                                                    : fd_oracle::Scheme::ExplicitParabolic;
    const auto inner = inner_name == "origin" ? fd_oracle::InnerBoundary::OriginCauchy
                                              : fd_oracle::InnerBoundary::ElectrodeNeumann;
    const fd_oracle::Grid g = fd_oracle::make_grid(p, dp, scheme, nr, t_end, cfl, slices, inner);
    const TemperatureProfile prof = scheme == fd_oracle::Scheme::ExplicitHyperbolic
                                        ? fd_oracle::solve_hyperbolic(p, dp, g)
                                        : fd_oracle::solve_parabolic(p, dp, g);
    if (!front_path.empty()) {
        const auto pts = fd_oracle::detect_wavefront(prof);
        std::ofstream front(front_path);
        if (!front) throw param_error("front", "cannot open '" + front_path + "'");
        front << "t,r_front\n";
        for (const auto& q : pts) front << fmt(q.t) << ',' << fmt(q.r) << "\n";
    }
    std::ofstream file;
    write_csv(open_output(output, file), prof);
    return kExitOk;
}

int cmd_specfun(const std::string& name, const std::vector<double>& args,
                const std::string& output) {
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    auto need = [&](std::size_t n) {
        if (args.size() != n) {
            throw param_error("specfun", name + " expects " + std::to_string(n) + " argument(s)");
        }
    };
    SpecfunValue v;
    if (name == "dawson") {
        need(1);
        v = {dawson(args[0]), 0.0};
    } else if (name == "si") {
        need(1);
        v = {sine_integral(args[0]), 0.0};
    } else if (name == "ci") {
        need(1);
        v = {cosine_integral(args[0]), 0.0};
    } else if (name == "m132") {
        need(1);
        v = {conf_hyp_m_1_32(args[0]), 0.0};
    } else if (name == "s1") {
        need(2);
        v = s1(args[0], args[1]);
    } else if (name == "s1_ds") {
        need(2);
        v = s1_ds(args[0], args[1]);
    } else if (name == "i1_plus" || name == "i1_minus") {
        need(2);
        v = i1_kernel(name == "i1_plus" ? +1 : -1, args[0], args[1]);
    } else if (name == "j2_plus" || name == "j2_minus") {
        need(2);
        v = j2(name == "j2_plus" ? +1 : -1, args[0], args[1]);
    } else if (name == "s2") {
        need(2);
        v = s2(args[0], args[1]);
    } else if (name == "s2_ds") {
        need(2);
        v = s2_ds(args[0], args[1]);
    } else {
        throw param_error("specfun", "unknown function '" + name + "'");
    }
    out << "name,value,est_error\n";
    out << name << ',' << fmt(v.value) << ',' << fmt(v.est_error) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite) {
    std::vector<verify::CheckResult> results;
    if (!verify::run_suite(suite, results)) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kExitValidation;
    }
    const bool ok = verify::report(std::cout, results);
    return ok ? kExitOk : kExitAccuracy;
}

int cmd_compare(const ParamFlags& pf, const AxisFlags& taxis, const AxisFlags& raxis, int n_max,
                int nr, const std::string& oracle_scheme, const std::string& output) {
    const PhysicalParams p = pf.resolve();
    const DerivedParams dp = derive_params(p);
    if (!p.finite()) throw param_error("r1", "compare needs the finite shell");

    const std::vector<double> ts = taxis.build();
    const std::vector<double> rs = raxis.build();

    finite_spectral::SeriesControl sc;
    sc.n_max = n_max;
    auto modes = finite_spectral::eigen_modes(p, sc.n_max);
    finite_spectral::fourier_coefficients(modes, p, dp, sc);

    const bool oracle_hyp = oracle_scheme != "parabolic";
    const double t_end = ts.back() > 0.0 ? ts.back() : 1.0;
    const auto scheme = oracle_hyp ? fd_oracle::Scheme::ExplicitHyperbolic
                                   : fd_oracle::Scheme::ExplicitParabolic;
    const fd_oracle::Grid g = fd_oracle::make_grid(p, dp, scheme, nr, t_end);
    const TemperatureProfile oracle = oracle_hyp ? fd_oracle::solve_hyperbolic(p, dp, g)
                                                 : fd_oracle::solve_parabolic(p, dp, g);

    auto oracle_at = [&](double t, double r) {
        // nearest recorded slice, linear interpolation in r
        std::size_t it = 0;
        for (std::size_t i = 1; i < oracle.nt(); ++i) {
            if (std::abs(oracle.times[i] - t) < std::abs(oracle.times[it] - t)) it = i;
        }
        const double x = (r - oracle.radii.front()) / (oracle.radii[1] - oracle.radii[0]);
        const std::size_t i0 = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(x))),
                                        oracle.nr() - 2);
        const double w = x - static_cast<double>(i0);
        return (1.0 - w) * oracle.at(it, i0) + w * oracle.at(it, i0 + 1);
    };

    std::ofstream file;
    std::ostream& out = open_output(output, file);
    out << "t,r,T_parabolic,T_hyperbolic,T_oracle\n";
    for (double t : ts) {
        double linf_ph = 0.0, linf_po = 0.0, linf_ho = 0.0;
        for (double r : rs) {
            const double tp =
                finite_spectral::series_temperature(t, r, modes, p, dp,
                                                    finite_spectral::Model::Parabolic)
                    .T;
            const double th =
                finite_spectral::series_temperature(t, r, modes, p, dp,
                                                    finite_spectral::Model::Hyperbolic)
                    .T;
            const double to = oracle_at(t, r);
            out << fmt(t) << ',' << fmt(r) << ',' << fmt(tp) << ',' << fmt(th) << ',' << fmt(to)
                << "\n";
            linf_ph = std::max(linf_ph, std::abs(tp - th));
            linf_po = std::max(linf_po, std::abs(tp - to));
            linf_ho = std::max(linf_ho, std::abs(th - to));
        }
        std::cerr << "slice_linf," << fmt(t) << ',' << fmt(linf_ph) << ',' << fmt(linf_po) << ','
                  << fmt(linf_ho) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    init_threads_from_env();

    CLI::App app{"spherical-electrode heat conduction: closed forms, series, oracle"};
    app.require_subcommand(1);

    ParamFlags pf;
    std::string output;

    // params
    auto* params_cmd = app.add_subcommand("params", "print derived constants");
    bool dump = false;
    ParamFlags pf_params;
    pf_params.attach(params_cmd);
    params_cmd->add_flag("--dump", dump, "write the configuration instead of derived values");
    params_cmd->add_option("--output", output, "output file (default stdout)");

    // steady
    auto* steady_cmd = app.add_subcommand("steady", "steady-state profile");
    ParamFlags pf_steady;
    pf_steady.attach(steady_cmd);
    AxisFlags steady_r;
    steady_r.attach(steady_cmd, "r", 1e-3, 50e-3, 64);
    std::string steady_out;
    steady_cmd->add_option("--output", steady_out, "output file");

    // transient
    auto* trans_cmd = app.add_subcommand("transient", "transient temperature profile");
    ParamFlags pf_trans;
    pf_trans.attach(trans_cmd);
    std::string model_name = "parabolic-infinite";
    trans_cmd->add_option("--model", model_name,
                          "parabolic-infinite | hyperbolic-infinite | parabolic-finite | "
                          "hyperbolic-finite");
    AxisFlags trans_t, trans_r;
    trans_t.attach(trans_cmd, "t", 0.0, 60.0, 25);
    trans_r.attach(trans_cmd, "r", 2e-3, 2e-3, 1);
    double trans_single_r = -1.0;
    trans_cmd->add_option("--r", trans_single_r, "single radius shorthand");
    std::string trans_mode = "closed-form";
    trans_cmd->add_option("--mode", trans_mode, "closed-form | quadrature (parabolic-infinite)");
    int trans_nmax = 400;
    trans_cmd->add_option("--n-max", trans_nmax, "series truncation (finite models)");
    std::string trans_out;
    trans_cmd->add_option("--output", trans_out, "output file");

    // eigen
    auto* eigen_cmd = app.add_subcommand("eigen", "finite-shell eigenvalue table");
    ParamFlags pf_eigen;
    pf_eigen.attach(eigen_cmd);
    int eigen_nmax = 50;
    eigen_cmd->add_option("--n-max", eigen_nmax, "number of modes");
    std::string eigen_out;
    eigen_cmd->add_option("--output", eigen_out, "output file");

    // series
    auto* series_cmd = app.add_subcommand("series", "finite-shell series profile");
    ParamFlags pf_series;
    pf_series.attach(series_cmd);
    std::string series_model = "hyperbolic-finite";
    series_cmd->add_option("--model", series_model, "parabolic-finite | hyperbolic-finite");
    AxisFlags series_t, series_r;
    series_t.attach(series_cmd, "t", 0.0, 100.0, 11);
    series_r.attach(series_cmd, "r", 1e-3, 50e-3, 32);
    int series_nmax = 400;
    series_cmd->add_option("--n-max", series_nmax, "series truncation");
    std::string series_out;
    series_cmd->add_option("--output", series_out, "output file");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "finite-difference reference solve");
    ParamFlags pf_oracle;
    pf_oracle.attach(oracle_cmd);
    std::string oracle_scheme = "parabolic";
    oracle_cmd->add_option("--scheme", oracle_scheme, "parabolic | hyperbolic");
    int oracle_nr = 1000;
    oracle_cmd->add_option("--nr", oracle_nr, "radial points");
    double oracle_tend = 10.0;
    oracle_cmd->add_option("--t-end", oracle_tend, "march duration [s]");
    double oracle_cfl = 0.9;
    oracle_cmd->add_option("--cfl", oracle_cfl, "fraction of the stability bound");
    int oracle_slices = 400;
    oracle_cmd->add_option("--slices", oracle_slices, "max recorded time slices");
    std::string oracle_inner = "neumann";
    oracle_cmd->add_option("--inner", oracle_inner, "neumann | origin (continuation problem)");
    std::string oracle_front;
    oracle_cmd->add_option("--front", oracle_front, "also write detected front to this CSV");
    std::string oracle_out;
    oracle_cmd->add_option("--output", oracle_out, "output file");

    // specfun
    auto* spec_cmd = app.add_subcommand("specfun", "evaluate one special function");
    std::string spec_name;
    spec_cmd->add_option("name", spec_name,
                         "dawson|si|ci|m132|s1|s1_ds|i1_plus|i1_minus|j2_plus|j2_minus|s2|s2_ds")
        ->required();
    std::vector<double> spec_args;
    spec_cmd->add_option("args", spec_args, "function arguments");
    std::string spec_out;
    spec_cmd->add_option("--output", spec_out, "output file");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite, "suite name or 'all'");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "side-by-side model comparison CSV");
    ParamFlags pf_compare;
    pf_compare.attach(compare_cmd);
    AxisFlags cmp_t, cmp_r;
    cmp_t.attach(compare_cmd, "t", 0.0, 100.0, 6);
    cmp_r.attach(compare_cmd, "r", 1e-3, 50e-3, 16);
    int cmp_nmax = 400;
    compare_cmd->add_option("--n-max", cmp_nmax, "series truncation");
    int cmp_nr = 1000;
    compare_cmd->add_option("--nr", cmp_nr, "oracle radial points");
    std::string cmp_scheme = "hyperbolic";
    compare_cmd->add_option("--oracle-scheme", cmp_scheme, "parabolic | hyperbolic");
    std::string cmp_out;
    compare_cmd->add_option("--output", cmp_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return kExitValidation;
    }

    try {
        if (params_cmd->parsed()) return cmd_params(pf_params, dump, output);
        if (steady_cmd->parsed()) return cmd_steady(pf_steady, steady_r, steady_out);
        if (trans_cmd->parsed()) {
            if (trans_single_r > 0.0) {
                trans_r.min = trans_r.max = trans_single_r;
                trans_r.count = 1;
            }
            return cmd_transient(pf_trans, model_name, trans_t, trans_r, trans_mode, trans_nmax,
                                 trans_out);
        }
        if (eigen_cmd->parsed()) return cmd_eigen(pf_eigen, eigen_nmax, eigen_out);
        if (series_cmd->parsed()) {
            return cmd_transient(pf_series, series_model, series_t, series_r, "closed-form",
                                 series_nmax, series_out);
        }
        if (oracle_cmd->parsed()) {
            return cmd_oracle(pf_oracle, oracle_scheme, oracle_nr, oracle_tend, oracle_cfl,
                              oracle_slices, oracle_inner, oracle_front, oracle_out);
        }
        if (spec_cmd->parsed()) return cmd_specfun(spec_name, spec_args, spec_out);
        if (verify_cmd->parsed()) return cmd_verify(suite);
        if (compare_cmd->parsed()) {
            return cmd_compare(pf_compare, cmp_t, cmp_r, cmp_nmax, cmp_nr, cmp_scheme, cmp_out);
        }
    } catch (const param_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const accuracy_error& e) {
        std::cerr << "accuracy error: " << e.what() << " (best estimate " << e.best_estimate()
                  << ", est error " << e.est_error() << ")\n";
        return kExitAccuracy;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
