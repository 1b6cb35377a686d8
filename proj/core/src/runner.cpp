#include "fraclab/runner.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include <json.hpp>

#include "fraclab/csv.hpp"
#include "fraclab/errors.hpp"
#include "fraclab/version.hpp"

namespace fraclab {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string compact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void write_manifest(const fs::path& path, const ExperimentConfig& config,
                    const std::string& label, Scale scale,
                    const std::vector<std::string>& run_lines) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot write manifest at " + path.string());
    os << "# label = " << label << "\n";
    os << "# scale = " << to_string(scale) << "\n";
    os << "# version = " << version_string << "\n";
    os << "# fftw = " << fftw_version << "\n";
    os << "# derivation = dt = t_end/N_t with N_t = " << config.n_steps() << "\n";
    for (const std::string& line : run_lines) os << "# " << line << "\n";
    os << render_config(config);
}

json to_json(const BlowupFit& fit) {
    return json{{"t_star", fit.t_star},   {"kappa1", fit.kappa1},
                {"kappa2", fit.kappa2},   {"window", {fit.t_lo, fit.t_hi}},
                {"residual", fit.rms_residual}, {"boundary", fit.boundary}};
}

json to_json(const AsymptoticFit& fit) {
    // mu carries the usual caveat: the exponential rate delta is the reliable
    // parameter, the algebraic exponent much less so.
    return json{{"delta", fit.delta},
                {"mu_plus_1", fit.mu_plus_1},
                {"mu_reliability", "low; delta is the trustworthy parameter"},
                {"offset", fit.offset},
                {"window", {fit.k_lo, fit.k_hi}},
                {"residual", fit.rms_residual}};
}

RunOutcome run_one(const ExperimentConfig& config, const FitPlan& plan, const std::string& label,
                   Scale scale, const fs::path& out_root, bool commoving, double commoving_eps) {
    config.validate();
    RunOutcome outcome;
    outcome.config = config;
    outcome.dir = out_root / config.name;
    fs::create_directories(outcome.dir);

    const SpectralField u0 = config.initial_data();
    if (commoving) {
        outcome.diagnostics =
            evolve_commoving_fbbm(config.alpha, commoving_eps, u0, config.to_evolve_config());
    } else {
        outcome.diagnostics = evolve(config.to_model(), u0, config.to_evolve_config());
    }
    const RunDiagnostics& diag = outcome.diagnostics;

    write_diagnostics_csv(outcome.dir / "diagnostics.csv", diag);
    for (const auto& [t, field] : diag.snapshots)
        write_field_csv(outcome.dir / ("snapshot_t" + compact(t) + ".csv"), field);
    write_field_csv(outcome.dir / "final_state.csv", diag.final_state);

    if (config.track_delta) {
        Table dtab;
        dtab.header = {"t", "delta", "mu_plus_1"};
        dtab.columns = {diag.times, diag.delta, diag.mu_plus_1};
        write_table_file((outcome.dir / "delta.csv").string(), dtab);
    }

    json fits = json::object();

    if (plan.norm_fits) {
        // the last reliable sample: resolution floor still below 1e-2 (blow-up
        // runs develop a junk tail in their final few steps)
        double last_reliable = diag.times.back();
        for (std::size_t i = 0; i < diag.times.size(); ++i) {
            if (diag.floor_[i] > 1e-2) {
                last_reliable = diag.times[i > 0 ? i - 1 : 0];
                break;
            }
        }
        double lo = config.fit_t_lo;
        if (std::isnan(lo)) lo = last_reliable - plan.tail_window;
        double hi = std::isnan(config.fit_t_hi) ? last_reliable : config.fit_t_hi;
        hi = std::min(hi, diag.times.back());
        try {
            const BlowupFit f = fit_blowup_norms(diag.times, diag.sup, lo, hi);
            outcome.sup_fit = f;
            fits["sup_norm"] = to_json(f);
        } catch (const NumericalError& e) {
            outcome.errors.push_back(std::string("sup_norm fit: ") + e.what());
        }
        try {
            std::vector<double> grad_sq(diag.grad_l2.size());
            for (std::size_t i = 0; i < grad_sq.size(); ++i)
                grad_sq[i] = diag.grad_l2[i] * diag.grad_l2[i];
            const BlowupFit f = fit_blowup_norms(diag.times, grad_sq, lo, hi);
            outcome.grad_sq_fit = f;
            fits["grad_l2_sq"] = to_json(f);
        } catch (const NumericalError& e) {
            outcome.errors.push_back(std::string("grad_l2_sq fit: ") + e.what());
        }
    }

    if (plan.fourier_at_end) {
        try {
            const AsymptoticFit f = fit_fourier_asymptotics(diag.final_state);
            outcome.fourier_fit = f;
            fits["fourier"] = to_json(f);
            fits["fourier"]["t"] = diag.final_time;
        } catch (const NumericalError& e) {
            outcome.errors.push_back(std::string("fourier fit: ") + e.what());
        }
    }

    if (plan.delta_time) {
        try {
            outcome.delta_time = singularity_time_from_delta(diag.times, diag.delta, 1e-6);
            fits["delta_crossing"] = {{"t_star", *outcome.delta_time}, {"threshold", 1e-6}};
        } catch (const NumericalError& e) {
            outcome.errors.push_back(std::string("delta crossing: ") + e.what());
        }
    }

    if (!fits.empty()) {
        std::ofstream os(outcome.dir / "fits.json");
        os << fits.dump(2) << "\n";
    }

    std::vector<std::string> run_lines;
    run_lines.push_back(std::string("stop_reason = ") + to_string(diag.stop_reason));
    run_lines.push_back("stop_time = " + format_double(diag.stop_time));
    if (commoving) run_lines.push_back("frame = commoving with the tracked maximum");
    for (const std::string& err : outcome.errors) run_lines.push_back("error = " + err);
    write_manifest(outcome.dir / "manifest.txt", config, label, scale, run_lines);

    return outcome;
}

}  // namespace

void write_field_csv(const fs::path& path, const SpectralField& field) {
    Table t;
    t.header = {"x", "u"};
    t.columns = {field.grid().nodes(), field.physical()};
    write_table_file(path.string(), t);
}

void write_diagnostics_csv(const fs::path& path, const RunDiagnostics& diag) {
    Table t;
    t.header = {"t", "sup_norm", "grad_l2", "mass", "hamiltonian", "energy_drift", "floor"};
    t.columns = {diag.times, diag.sup, diag.grad_l2, diag.mass, diag.hamil, diag.drift, diag.floor_};
    write_table_file(path.string(), t);
}

RunOutcome run_experiment(const std::string& preset_name, Scale scale,
                          const fs::path& out_root) {
    const Preset& preset = find_preset(preset_name);
    if (preset.kind != PresetKind::evolve)
        throw ConfigError("preset '" + preset_name + "' is not a plain evolution run");
    const ExperimentConfig config = scaled_config(preset.config, scale);
    return run_one(config, preset.fits, preset.label, scale, out_root, false, 0.0);
}

RunOutcome run_experiment(const ExperimentConfig& config, const FitPlan& fits,
                          const std::string& label, const fs::path& out_root) {
    return run_one(config, fits, label, Scale::full, out_root, false, 0.0);
}

SweepOutcome run_sweep(const std::string& preset_name, Scale scale,
                       std::vector<double> eps_override, int max_parallel,
                       const fs::path& out_root) {
    const Preset& preset = find_preset(preset_name);
    if (preset.kind != PresetKind::sweep_fkdv && preset.kind != PresetKind::sweep_fbbm)
        throw ConfigError("preset '" + preset_name + "' is not an eps sweep");

    std::vector<double> eps = eps_override.empty() ? preset.eps_values : std::move(eps_override);
    for (double e : eps)
        if (!(e > 0.0)) throw ConfigError("sweep: eps values must be strictly positive");
    std::sort(eps.begin(), eps.end());
    if (eps.size() < 3)
        throw NumericalError("sweep: regression needs at least 3 successful runs");

    SweepOutcome outcome;
    outcome.dir = out_root / preset_name;
    fs::create_directories(outcome.dir / "runs");

    const ExperimentConfig base = scaled_config(preset.config, scale);
    const long steps = base.n_steps();
    const bool fbbm = preset.kind == PresetKind::sweep_fbbm;

    auto one = [&](double e) -> RunOutcome {
        ExperimentConfig cfg = base;
        cfg.name = "eps" + compact(e);
        cfg.beta = e;  // u0 = eps * sech^2
        cfg.t_end = std::ceil(preset.sweep_t_end_coef / e);
        cfg.dt = cfg.t_end / static_cast<double>(steps);
        FitPlan plan;
        if (fbbm) {
            cfg.bbm_eps = e;
            plan.delta_time = true;
        } else {
            cfg.eps_disp = e;
        }
        std::ostringstream label;
        label << preset.label << " (eps = " << e << ")";
        return run_one(cfg, plan, label.str(), scale, outcome.dir / "runs", fbbm, e);
    };

    const int jobs = std::max(1, max_parallel);
    std::vector<std::pair<double, std::string>> failures;
    std::vector<std::pair<double, double>> points;

    for (std::size_t start = 0; start < eps.size(); start += jobs) {
        std::vector<std::pair<double, std::future<RunOutcome>>> batch;
        const std::size_t end = std::min(eps.size(), start + jobs);
        for (std::size_t i = start; i < end; ++i)
            batch.emplace_back(eps[i], std::async(std::launch::async, one, eps[i]));
        for (auto& [e, fut] : batch) {
            try {
                RunOutcome run = fut.get();
                double t_star = 0.0;
                if (fbbm) {
                    if (!run.delta_time)
                        throw NumericalError("no delta crossing before the run stopped");
                    t_star = *run.delta_time;
                } else {
                    if (run.diagnostics.stop_reason != StopReason::newton_divergence)
                        throw NumericalError(
                            std::string("expected the stage iteration to diverge, got ") +
                            to_string(run.diagnostics.stop_reason));
                    t_star = run.diagnostics.stop_time;
                }
                points.emplace_back(e, t_star);
            } catch (const Error& err) {
                failures.emplace_back(e, err.what());
            }
        }
    }

    for (const auto& [e, t] : points) {
        outcome.eps.push_back(e);
        outcome.t_star.push_back(t);
    }
    outcome.failures = failures;

    Table sweep_table;
    sweep_table.header = {"epsilon", "t_star"};
    sweep_table.columns = {outcome.eps, outcome.t_star};
    write_table_file((outcome.dir / "sweep.csv").string(), sweep_table);

    json report = json::object();
    for (const auto& [e, why] : failures) report["failures"][compact(e)] = why;
    if (outcome.eps.size() >= 3) {
        const LogLogFit reg = loglog_regression(outcome.eps, outcome.t_star);
        outcome.regression = reg;
        report["regression"] = {{"a", reg.a},
                                {"b", reg.b},
                                {"sigma_a", reg.sigma_a},
                                {"r", reg.r},
                                {"residual", reg.rms_residual}};
    } else {
        outcome.errors.push_back("regression needs at least 3 successful runs");
        report["error"] = outcome.errors.back();
    }
    {
        std::ofstream os(outcome.dir / "regression.json");
        os << report.dump(2) << "\n";
    }
    std::vector<std::string> run_lines = {std::string("kind = sweep"),
                                          "t_end(eps) = ceil(" +
                                              compact(preset.sweep_t_end_coef) + "/eps)"};
    for (const auto& [e, why] : failures)
        run_lines.push_back("failure eps=" + compact(e) + ": " + why);
    write_manifest(outcome.dir / "manifest.txt", base, preset.label, scale, run_lines);

    if (outcome.eps.size() < 3)
        throw NumericalError("sweep: regression needs at least 3 successful runs");
    return outcome;
}

FamilyOutcome run_family(const std::string& preset_name, Scale scale, const fs::path& out_root) {
    const Preset& preset = find_preset(preset_name);
    if (preset.kind != PresetKind::soliton_family)
        throw ConfigError("preset '" + preset_name + "' is not a soliton family scan");

    ContinuationOptions options;
    options.w = preset.family_w;
    options.n = scale == Scale::desk ? std::max(1 << 10, preset.family_n / 4) : preset.family_n;

    FamilyOutcome outcome;
    outcome.dir = out_root / preset_name;
    fs::create_directories(outcome.dir);
    outcome.rows = soliton_family_scan(preset.family_alphas, options);

    Table t;
    t.header = {"alpha", "max", "mass", "energy"};
    t.columns.assign(4, {});
    for (const FamilyRow& row : outcome.rows) {
        t.columns[0].push_back(row.alpha);
        t.columns[1].push_back(row.peak);
        t.columns[2].push_back(row.mass);
        t.columns[3].push_back(row.energy);
    }
    write_table_file((outcome.dir / "family.csv").string(), t);

    std::ofstream os(outcome.dir / "manifest.txt");
    os << "# label = " << preset.label << "\n";
    os << "# scale = " << to_string(scale) << "\n";
    os << "# version = " << version_string << "\n";
    os << "# n = " << options.n << ", w = " << format_double(options.w) << ", c = 1\n";
    return outcome;
}

}  // namespace fraclab
