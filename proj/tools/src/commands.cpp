#include "commands.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "nmqt/amplitude.hpp"
#include "nmqt/ensemble.hpp"
#include "nmqt/errors.hpp"
#include "nmqt/homodyne.hpp"
#include "nmqt/master.hpp"
#include "nmqt/mcwf.hpp"
#include "nmqt/memory_kernel.hpp"
#include "nmqt/spectral.hpp"
#include "nmqt/volterra.hpp"
#include "nmqt/zeno.hpp"
#include "version.hpp"

namespace nmqt::cli {

namespace {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Shared physics resolution

enum class Route { scaling, explicit_lambda };

struct Physics {
    Route route = Route::scaling;
    double gamma = 1.0;
    // scaling route
    double x = 0.0;
    double c = 0.0;
    // explicit route
    double lambda = 0.0;
    double tau = 0.0;  // 0 when absent
    double e = 0.0;
};

double resolve_gamma(const Config& cfg) {
    // Unit convention: gamma = 1 sets the time unit unless given explicitly
    // (or via the spectral height d0, gamma = 2*pi*d0).
    if (cfg.has("physics.d0")) {
        const double d0 = cfg.number("physics.d0");
        if (!(d0 > 0.0)) throw ConfigError("physics.d0 must be > 0");
        const double gamma = 2.0 * std::numbers::pi * d0;
        if (cfg.has("physics.gamma")) {
            const double g = cfg.number("physics.gamma");
            if (std::abs(g - gamma) > 1e-12 * gamma)
                throw ConfigError("physics.gamma conflicts with 2*pi*physics.d0");
        }
        cfg.note_derived("derived.gamma", gamma);
        return gamma;
    }
    return cfg.number_or("physics.gamma", 1.0);
}

Physics resolve_physics(const Config& cfg, std::vector<std::string>* notes) {
    const bool has_scaling = cfg.has("physics.x") || cfg.has("physics.c");
    const bool has_explicit = cfg.has("physics.lambda") || cfg.has("physics.tau");
    if (has_scaling && has_explicit)
        throw ConfigError("give exactly one parameterization: scaling (physics.x, "
                          "physics.c) or explicit (physics.lambda, physics.tau, physics.e)");
    if (!has_scaling && !has_explicit)
        throw ConfigError("missing physics: set physics.x (scaling) or physics.lambda "
                          "(explicit)");

    Physics p;
    p.gamma = resolve_gamma(cfg);
    if (has_scaling) {
        p.route = Route::scaling;
        p.x = cfg.number("physics.x");
        p.c = cfg.number_or("physics.c", 0.0);
        if (!(p.x > 0.0)) throw ConfigError("physics.x must be > 0");
    } else {
        p.route = Route::explicit_lambda;
        p.lambda = cfg.number("physics.lambda");
        if (!(p.lambda > 0.0)) throw ConfigError("physics.lambda must be > 0");
        p.e = cfg.number_or("physics.e", 0.0);
        // tau is optional with no default; echoing a sentinel would break the
        // run-from-header reproduction
        p.tau = cfg.has("physics.tau") ? cfg.number("physics.tau") : 0.0;
        if (cfg.has("physics.tau") && !(p.tau > 0.0))
            throw ConfigError("physics.tau must be > 0");
        if (p.tau > 0.0) {
            cfg.note_derived("derived.x", p.lambda * p.tau);
            cfg.note_derived("derived.c", p.e / p.lambda);
        }
        if (cfg.has("physics.omega0")) {
            const double omega0 = cfg.number("physics.omega0");
            const auto sdf = nmqt::lorentzian_from_gamma(p.gamma, omega0, p.lambda);
            if (notes && nmqt::zeno_regime_advisory(sdf))
                notes->push_back(
                    "advisory: omega0 < 5*lambda; the symmetric-spectrum model assumes "
                    "delta_eg > omega0 >> lambda and may need corrections here");
        }
    }
    return p;
}

nmqt::ScalingParams scaling_of(const Physics& p) {
    if (p.route == Route::scaling) return nmqt::make_scaling(p.x, p.c, p.gamma);
    return nmqt::scaling_from_explicit(p.lambda, p.tau, p.e, p.gamma);
}

// Effective decay for one coarse step dt; explicit route goes through the
// repeated-measurement amplitude, scaling route through the bracket formula.
nmqt::EffectiveDecay resolve_decay(const Physics& p, double dt) {
    if (p.route == Route::scaling)
        return nmqt::effective_decay_scaled(nmqt::make_scaling(p.x, p.c, p.gamma), dt);
    if (!(p.tau > 0.0))
        throw ConfigError("explicit-route trajectories need physics.tau");
    const double ratio = dt / p.tau;
    const long n = std::lround(ratio);
    if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * ratio)
        throw ConfigError("dynamics.dt must be an integer multiple of physics.tau");
    return nmqt::effective_decay_repeated(p.lambda, p.gamma, p.e,
                                          nmqt::make_schedule(p.tau, n));
}

nmqt::PureState resolve_initial(const Config& cfg) {
    const Complex alpha{cfg.number_or("initial.alpha_re", 1.0),
                        cfg.number_or("initial.alpha_im", 0.0)};
    const Complex beta{cfg.number_or("initial.beta_re", 0.0),
                       cfg.number_or("initial.beta_im", 0.0)};
    const double norm2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw ConfigError("initial state must be normalized: |alpha|^2 + |beta|^2 = " +
                          fmt_double(norm2));
    return {alpha, beta};
}

nmqt::DriveHamiltonian resolve_drive(const Config& cfg) {
    return {cfg.number_or("dynamics.delta", 0.0), cfg.number_or("dynamics.rabi", 0.0)};
}

// ---------------------------------------------------------------------------
// CSV assembly

class Csv {
  public:
    Csv(const std::string& command, const Config& cfg) : command_(command), cfg_(cfg) {}

    void note(const std::string& line) { notes_.push_back(line); }

    void columns(std::vector<std::string> names) { columns_ = std::move(names); }

    void row(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += ',';
            line += cells[i];
        }
        rows_.push_back(std::move(line));
    }

    CommandOutput finish() const {
        std::ostringstream out;
        out << "# nmqt " << kVersion << "\n";
        out << "# command = " << command_ << "\n";
        out << "# config:\n";
        for (const auto& [key, value] : cfg_.resolved())
            out << "#   " << key << " = " << value << "\n";
        if (!cfg_.derived().empty()) {
            out << "# derived:\n";
            for (const auto& [key, value] : cfg_.derived())
                out << "#   " << key << " = " << value << "\n";
        }
        for (const auto& n : notes_) out << "# note: " << n << "\n";
        std::string header;
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            if (i) header += ',';
            header += columns_[i];
        }
        out << header << "\n";
        for (const auto& r : rows_) out << r << "\n";
        return {out.str(), notes_};
    }

  private:
    std::string command_;
    const Config& cfg_;
    std::vector<std::string> columns_;
    std::vector<std::string> notes_;
    std::vector<std::string> rows_;
};

// Interaction-frame amplitude a(t) at out_points multiples of out_h from the
// memory-kernel path: solve with E_e = e (E_g = 0, omega0 = 0) on a finer
// subgrid and remove the free phase, so the result is directly comparable
// with amplitude_lorentzian.
std::vector<Complex> volterra_aligned(double lambda, double gamma, double e,
                                      double out_h, std::size_t out_points,
                                      double h_requested) {
    const auto substeps =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(out_h / h_requested)));
    const double h = out_h / static_cast<double>(substeps);
    const std::size_t fine_points = (out_points - 1) * substeps + 1;

    const nmqt::TimeGrid grid = nmqt::make_grid(h, fine_points);
    const nmqt::SpectralDensity sdf = nmqt::lorentzian_from_gamma(gamma, 0.0, lambda);
    const nmqt::MemoryKernel kernel = nmqt::memory_kernel(sdf, 0.0, grid);
    const nmqt::AmplitudeSeries series = nmqt::volterra_amplitude(kernel, e, grid);

    std::vector<Complex> out(out_points);
    for (std::size_t k = 0; k < out_points; ++k) {
        const double t = h * static_cast<double>(k * substeps);
        out[k] = series.values[k * substeps] * std::polar(1.0, e * t);
    }
    return out;
}

std::size_t grid_points(double t_final, double dt) {
    return 1 + static_cast<std::size_t>(std::floor(t_final / dt + 1e-9));
}

void push_complex_cells(std::vector<std::string>& cells, Complex v) {
    cells.push_back(fmt_double(std::real(v)));
    cells.push_back(fmt_double(std::imag(v)));
    cells.push_back(fmt_double(std::abs(v)));
}

// ---------------------------------------------------------------------------
// amplitude

CommandOutput cmd_amplitude(const Config& cfg) {
    std::vector<std::string> advisories;
    const Physics p = resolve_physics(cfg, &advisories);
    const std::string solver =
        cfg.choice_or("amplitude.solver", {"analytic", "scaled", "volterra", "all"}, "all");
    const double t_final = cfg.number_or("dynamics.t_final", 5.0 / p.gamma);
    if (!(t_final >= 0.0)) throw ConfigError("dynamics.t_final must be >= 0");

    Csv csv("amplitude", cfg);
    for (const auto& a : advisories) csv.note(a);

    const bool want_analytic = solver == "analytic" || solver == "all";
    const bool want_scaled = solver == "scaled" || solver == "all";
    const bool want_volterra = solver == "volterra" || solver == "all";

    std::vector<std::string> cols{"t"};
    const auto add_cols = [&](const char* name) {
        cols.push_back(std::string("re_") + name);
        cols.push_back(std::string("im_") + name);
        cols.push_back(std::string("abs_") + name);
    };

    if (p.route == Route::scaling) {
        if (solver != "scaled" && solver != "all")
            throw ConfigError("the scaling parameterization supports only the scaled "
                              "solver; give physics.lambda/physics.tau for the others");
        const nmqt::ScalingParams sc = scaling_of(p);
        cfg.note_derived("derived.gamma_eff", nmqt::effective_rate_scaled(sc));
        const double dt = cfg.number_or("dynamics.dt", t_final > 0 ? t_final / 200.0 : 1.0);
        if (!(dt > 0.0)) throw ConfigError("dynamics.dt must be > 0");
        const std::size_t points = grid_points(t_final, dt);
        add_cols("scaled");
        csv.columns(cols);
        for (std::size_t k = 0; k < points; ++k) {
            const double t = dt * static_cast<double>(k);
            std::vector<std::string> cells{fmt_double(t)};
            push_complex_cells(cells, nmqt::amplitude_scaled(t, sc));
            csv.row(cells);
        }
        return csv.finish();
    }

    if (p.tau > 0.0) {
        // survival mode: abar(t_n) = a(tau)^n on the measurement grid t_n = n*tau
        const nmqt::ScalingParams sc = scaling_of(p);
        cfg.note_derived("derived.gamma_eff", nmqt::effective_rate_scaled(sc));
        const auto n_max = static_cast<long>(std::floor(t_final / p.tau + 1e-9));

        Complex a_volterra{1.0, 0.0};
        if (want_volterra) {
            const double h_req = cfg.number_or("volterra.h", p.tau / 1000.0);
            if (!(h_req > 0.0)) throw ConfigError("volterra.h must be > 0");
            a_volterra = volterra_aligned(p.lambda, p.gamma, p.e, p.tau, 2, h_req)[1];
        }

        if (want_analytic) add_cols("analytic");
        if (want_scaled) add_cols("scaled");
        if (want_volterra) add_cols("volterra");
        csv.columns(cols);

        const Complex log_av = want_volterra ? std::log(a_volterra) : Complex{};
        for (long n = 0; n <= n_max; ++n) {
            const double t = static_cast<double>(n) * p.tau;
            std::vector<std::string> cells{fmt_double(t)};
            if (want_analytic)
                push_complex_cells(cells, n == 0 ? Complex{1.0, 0.0}
                                                 : nmqt::survival_repeated(p.tau, n, p.lambda,
                                                                           p.gamma, p.e));
            if (want_scaled) push_complex_cells(cells, nmqt::amplitude_scaled(t, sc));
            if (want_volterra)
                push_complex_cells(cells, n == 0 ? Complex{1.0, 0.0}
                                                 : std::exp(static_cast<double>(n) * log_av));
            csv.row(cells);
        }
        return csv.finish();
    }

    // single mode: uninterrupted amplitude a(t) on a uniform grid
    if (solver == "scaled")
        throw ConfigError("the scaled solver needs a measurement interval: set "
                          "physics.tau (or use the scaling parameterization)");
    const double dt = cfg.number_or("dynamics.dt", t_final > 0 ? t_final / 500.0 : 1.0);
    if (!(dt > 0.0)) throw ConfigError("dynamics.dt must be > 0");
    const std::size_t points = grid_points(t_final, dt);

    if (want_analytic) add_cols("analytic");
    if (want_volterra) add_cols("volterra");
    csv.columns(cols);

    std::vector<Complex> volterra_vals;
    if (want_volterra) {
        const double h_req = cfg.number_or("volterra.h", 1e-3 / p.gamma);
        if (!(h_req > 0.0)) throw ConfigError("volterra.h must be > 0");
        volterra_vals = volterra_aligned(p.lambda, p.gamma, p.e, dt, points, h_req);
    }
    for (std::size_t k = 0; k < points; ++k) {
        const double t = dt * static_cast<double>(k);
        std::vector<std::string> cells{fmt_double(t)};
        if (want_analytic)
            push_complex_cells(cells, nmqt::amplitude_lorentzian(t, p.lambda, p.gamma, p.e));
        if (want_volterra) push_complex_cells(cells, volterra_vals[k]);
        csv.row(cells);
    }
    return csv.finish();
}

// ---------------------------------------------------------------------------
// rate

CommandOutput cmd_rate(const Config& cfg) {
    const double gamma = resolve_gamma(cfg);
    const double c = cfg.number_or("physics.c", 0.0);
    const double x_min = cfg.number_or("rate.x_min", 1e-3);
    const double x_max = cfg.number_or("rate.x_max", 1e3);
    const long points = cfg.integer_or("rate.points", 121);
    const double dt = cfg.number_or("rate.dt", 1e-3 / gamma);
    if (!(x_min > 0.0) || !(x_max >= x_min))
        throw ConfigError("need 0 < rate.x_min <= rate.x_max");
    if (points < 1) throw ConfigError("rate.points must be >= 1");
    if (!(dt > 0.0)) throw ConfigError("rate.dt must be > 0");

    Csv csv("rate", cfg);
    csv.columns({"x", "rate_scaled", "rate_linear", "rate_log"});
    const double log_lo = std::log(x_min);
    const double log_hi = std::log(x_max);
    for (long j = 0; j < points; ++j) {
        const double f = points == 1 ? 0.0
                                     : static_cast<double>(j) / static_cast<double>(points - 1);
        const double x = std::exp(log_lo + f * (log_hi - log_lo));
        const nmqt::ScalingParams sc = nmqt::make_scaling(x, c, gamma);
        const Complex abar = nmqt::amplitude_scaled(dt, sc);
        csv.row({fmt_double(x),
                 fmt_double(nmqt::effective_rate_scaled(sc) / gamma),
                 fmt_double(nmqt::effective_rate_empirical(abar, dt, nmqt::RateFlavor::linear) / gamma),
                 fmt_double(nmqt::effective_rate_empirical(abar, dt, nmqt::RateFlavor::log) / gamma)});
    }
    return csv.finish();
}

// ---------------------------------------------------------------------------
// traj

CommandOutput cmd_traj(const Config& cfg) {
    std::vector<std::string> advisories;
    const Physics p = resolve_physics(cfg, &advisories);
    const std::string kind = cfg.choice_or("run.kind", {"mcwf", "homodyne"}, "mcwf");
    const double dt = cfg.number_or("dynamics.dt", 0.01 / p.gamma);
    const double t_final = cfg.number_or("dynamics.t_final", 50.0 / p.gamma);
    if (!(dt > 0.0)) throw ConfigError("dynamics.dt must be > 0");
    if (!(t_final >= 0.0)) throw ConfigError("dynamics.t_final must be >= 0");
    const auto seed = cfg.seed_or("ensemble.seed", 1);
    const nmqt::DriveHamiltonian drive = resolve_drive(cfg);
    const nmqt::PureState initial = resolve_initial(cfg);
    const nmqt::EffectiveDecay decay = resolve_decay(p, dt);
    cfg.note_derived("derived.gamma_eff", decay.gamma_eff);

    Csv csv("traj", cfg);
    for (const auto& a : advisories) csv.note(a);

    if (kind == "mcwf") {
        const auto rec = nmqt::mcwf_trajectory(initial, drive, decay, t_final, seed);
        csv.columns({"t", "rho_ee", "jump"});
        for (std::size_t k = 0; k < rec.times.size(); ++k)
            csv.row({fmt_double(rec.times[k]),
                     fmt_double(std::norm(rec.pure[k].alpha)),
                     k == 0 ? "0" : std::to_string(static_cast<int>(rec.jumps[k - 1]))});
    } else {
        const nmqt::HomodyneConfig hc{cfg.number_or("homodyne.phi", 0.0), dt};
        const auto rec = nmqt::homodyne_trajectory(nmqt::DensityMatrix::pure(initial),
                                                   drive, decay.gamma_eff, hc, t_final, seed);
        if (rec.clamp_count > 0)
            csv.note("positivity clamps: " + std::to_string(rec.clamp_count));
        csv.columns({"t", "rho_ee", "current"});
        for (std::size_t k = 0; k < rec.times.size(); ++k)
            csv.row({fmt_double(rec.times[k]),
                     fmt_double(rec.rho[k].rho_ee),
                     k == 0 ? "0" : fmt_double(rec.current[k - 1])});
    }
    return csv.finish();
}

// ---------------------------------------------------------------------------
// ensemble

CommandOutput cmd_ensemble(const Config& cfg) {
    std::vector<std::string> advisories;
    const Physics p = resolve_physics(cfg, &advisories);
    const std::string kind = cfg.choice_or("run.kind", {"mcwf", "homodyne"}, "mcwf");
    const double dt = cfg.number_or("dynamics.dt", 0.01 / p.gamma);
    const double t_final = cfg.number_or("dynamics.t_final", 50.0 / p.gamma);
    const long n_traj = cfg.integer_or("ensemble.n", 2000);
    const long samples = cfg.integer_or("ensemble.samples", 50);
    const auto seed = cfg.seed_or("ensemble.seed", 1);
    const long threads = cfg.integer_or_silent("ensemble.threads", 0);
    const double z_threshold = cfg.number_or("ensemble.z_threshold", 3.0);
    if (!(dt > 0.0)) throw ConfigError("dynamics.dt must be > 0");
    if (!(t_final > 0.0)) throw ConfigError("dynamics.t_final must be > 0");
    if (n_traj < 1) throw ConfigError("ensemble.n must be >= 1");
    if (samples < 1) throw ConfigError("ensemble.samples must be >= 1");
    if (threads < 0) throw ConfigError("ensemble.threads must be >= 0");

    const nmqt::DriveHamiltonian drive = resolve_drive(cfg);
    const nmqt::PureState initial = resolve_initial(cfg);
    const nmqt::EffectiveDecay decay = resolve_decay(p, dt);
    cfg.note_derived("derived.gamma_eff", decay.gamma_eff);

    nmqt::EnsembleConfig econfig;
    econfig.n_traj = n_traj;
    econfig.kind = kind == "mcwf" ? nmqt::TrajectoryKind::mcwf : nmqt::TrajectoryKind::homodyne;
    econfig.master_seed = seed;
    econfig.threads = static_cast<unsigned>(threads);
    for (long j = 1; j <= samples; ++j)
        econfig.sample_times.push_back(t_final * static_cast<double>(j) /
                                       static_cast<double>(samples));

    nmqt::EnsemblePhysics ephysics;
    ephysics.drive = drive;
    ephysics.decay = decay;
    ephysics.initial = initial;
    ephysics.t_final = t_final;
    ephysics.homodyne_phi = cfg.number_or("homodyne.phi", 0.0);

    const nmqt::EnsembleResult result = nmqt::run_ensemble(econfig, ephysics);
    const nmqt::DensitySeries master =
        nmqt::master_evolve(nmqt::DensityMatrix::pure(initial), drive, decay.gamma_eff,
                            t_final, dt);

    std::vector<double> mean_ee, stderr_ee, master_ee;
    for (std::size_t k = 0; k < result.times.size(); ++k) {
        mean_ee.push_back(result.mean_rho[k].rho_ee);
        stderr_ee.push_back(result.stderr_rho[k].ee);
        const auto idx = static_cast<std::size_t>(std::llround(result.times[k] / dt));
        master_ee.push_back(master.states[idx].rho_ee);
    }

    Csv csv("ensemble", cfg);
    for (const auto& a : advisories) csv.note(a);
    if (!result.stderr_valid)
        csv.note("stderr undefined for a single trajectory (ensemble.n = 1)");
    if (result.clamp_count > 0)
        csv.note("positivity clamps: " + std::to_string(result.clamp_count));

    if (result.stderr_valid) {
        const auto report = nmqt::compare_series(mean_ee, master_ee, stderr_ee, z_threshold);
        std::ostringstream line;
        line << "compare: max_z = " << fmt_double(report.max_z) << " at t = "
             << fmt_double(result.times[report.argmax]) << " (threshold "
             << fmt_double(report.threshold) << ") -> " << (report.pass ? "PASS" : "FAIL");
        csv.note(line.str());
    }

    csv.columns({"t", "mean_rho_ee", "stderr_rho_ee", "master_rho_ee", "z"});
    for (std::size_t k = 0; k < result.times.size(); ++k) {
        const double se = stderr_ee[k];
        const double diff = std::abs(mean_ee[k] - master_ee[k]);
        const double z = se > 0.0 ? diff / se
                                  : (diff == 0.0 ? 0.0
                                                 : std::numeric_limits<double>::infinity());
        csv.row({fmt_double(result.times[k]), fmt_double(mean_ee[k]), fmt_double(se),
                 fmt_double(master_ee[k]),
                 result.stderr_valid ? fmt_double(z)
                                     : fmt_double(std::numeric_limits<double>::quiet_NaN())});
    }
    return csv.finish();
}

// ---------------------------------------------------------------------------
// zeno

CommandOutput cmd_zeno(const Config& cfg) {
    const double gamma = resolve_gamma(cfg);
    double k_coupling = 0.0;
    if (cfg.has("zeno.k")) {
        k_coupling = cfg.number("zeno.k");
    } else if (cfg.has("physics.lambda")) {
        // integrated Lorentzian spectrum: K = gamma * lambda / 2
        const double lambda = cfg.number("physics.lambda");
        if (!(lambda > 0.0)) throw ConfigError("physics.lambda must be > 0");
        k_coupling = 0.5 * gamma * lambda;
        cfg.note_derived("derived.k", k_coupling);
    } else {
        throw ConfigError("zeno needs zeno.k or physics.lambda (K = gamma*lambda/2)");
    }
    if (!(k_coupling >= 0.0)) throw ConfigError("zeno.k must be >= 0");

    const double t = cfg.number_or("zeno.t", 1.0 / gamma);
    const long n_min = cfg.integer_or("zeno.n_min", 8);
    const long doublings = cfg.integer_or("zeno.doublings", 8);
    if (!(t > 0.0)) throw ConfigError("zeno.t must be > 0");
    if (n_min < 1) throw ConfigError("zeno.n_min must be >= 1");
    if (doublings < 1) throw ConfigError("zeno.doublings must be >= 1");
    const nmqt::PureState initial = resolve_initial(cfg);

    Csv csv("zeno", cfg);
    csv.columns({"tau", "fidelity", "deviation"});
    bool warned = false;
    for (long j = doublings - 1; j >= 0; --j) {
        const long n = n_min << j;
        const double tau = t / static_cast<double>(n);
        const auto params = nmqt::make_zeno_params(k_coupling, tau, n);
        const double fidelity = nmqt::zeno_survival_fidelity(params, initial.alpha, initial.beta);
        if (!warned && k_coupling * tau * tau >= 0.01) {
            csv.note("K*tau^2 >= 0.01 at tau = " + fmt_double(tau) +
                     "; the short-time expansion is marginal there");
            warned = true;
        }
        csv.row({fmt_double(tau), fmt_double(fidelity), fmt_double(1.0 - fidelity)});
    }
    return csv.finish();
}

}  // namespace

CommandOutput run_command(const std::string& name, const Config& cfg) {
    cfg.validate_keys();
    if (name == "amplitude") return cmd_amplitude(cfg);
    if (name == "rate") return cmd_rate(cfg);
    if (name == "traj") return cmd_traj(cfg);
    if (name == "ensemble") return cmd_ensemble(cfg);
    if (name == "zeno") return cmd_zeno(cfg);
    throw ConfigError("unknown command '" + name + "'");
}

}  // namespace nmqt::cli
