// Command-line front end: run presets or config files, sweep eps, construct
// solitons, and fit diagnostics files.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "fraclab/csv.hpp"
#include "fraclab/errors.hpp"
#include "fraclab/runner.hpp"
#include "fraclab/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw fraclab::ConfigError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

int do_run(const std::string& target, const std::string& scale_name, const std::string& out_dir,
           const std::vector<double>& eps, int jobs) {
    using namespace fraclab;
    const Scale scale = scale_from_string(scale_name);
    const fs::path out(out_dir);

    if (fs::exists(target) && !preset_registry().count(target)) {
        const ExperimentConfig config = scaled_config(parse_config(slurp(target)), scale);
        const RunOutcome run = run_experiment(config, FitPlan{}, "config file " + target, out);
        std::cout << "wrote " << run.dir.string() << " (stop: "
                  << to_string(run.diagnostics.stop_reason) << " at t = "
                  << format_double(run.diagnostics.stop_time) << ")\n";
        return run.errors.empty() ? 0 : 3;
    }

    const Preset& preset = find_preset(target);
    switch (preset.kind) {
        case PresetKind::evolve: {
            const RunOutcome run = run_experiment(target, scale, out);
            std::cout << "wrote " << run.dir.string() << " (stop: "
                      << to_string(run.diagnostics.stop_reason) << " at t = "
                      << format_double(run.diagnostics.stop_time) << ")\n";
            for (const std::string& e : run.errors) std::cerr << "error: " << e << "\n";
            return run.errors.empty() ? 0 : 3;
        }
        case PresetKind::sweep_fkdv:
        case PresetKind::sweep_fbbm: {
            const SweepOutcome sweep = run_sweep(target, scale, eps, jobs, out);
            std::cout << "wrote " << sweep.dir.string();
            if (sweep.regression)
                std::cout << " (slope a = " << format_double(sweep.regression->a) << ")";
            std::cout << "\n";
            return 0;
        }
        case PresetKind::soliton_family: {
            const FamilyOutcome family = run_family(target, scale, out);
            std::cout << "wrote " << family.dir.string() << " (" << family.rows.size()
                      << " rows)\n";
            return 0;
        }
    }
    return 2;
}

int do_soliton(double alpha, double c, int n, double w, double tol, const std::string& out_dir) {
    using namespace fraclab;
    ContinuationOptions options;
    options.w = w;
    options.n = n;
    options.newton.tol = tol;

    SolitonProfile profile;
    if (alpha == 1.0) {
        const Grid grid(options.n > 0 ? options.n : 1 << 14, w);
        SpectralField init = bo_soliton(1.0, grid);
        cvec scaled = init.spectrum();
        for (auto& z : scaled) z *= 1.1;
        profile = newton_gmres_soliton(SpectralField::from_spectrum(grid, scaled),
                                       symbol_fractional(1.0), 1.0, options.newton, 1.0);
    } else {
        profile = continue_in_alpha(alpha, options);
    }
    if (c != 1.0) {
        profile.values = rescale_soliton(profile, c);
        profile.c = c;
        const SpectralField res = soliton_residual(profile.values, symbol_fractional(alpha), c);
        double rn = 0.0;
        for (const auto& z : res.spectrum()) rn = std::max(rn, std::abs(z));
        profile.residual_norm = rn;
    }

    const fs::path dir = fs::path(out_dir);
    fs::create_directories(dir);
    const fs::path csv = dir / ("soliton_a" + std::to_string(alpha).substr(0, 4) + ".csv");
    Table t;
    t.header = {"x", "Q"};
    t.columns = {profile.values.grid().nodes(), profile.values.physical()};
    write_table_file(csv.string(), t);

    std::ofstream meta(csv.string() + ".meta");
    meta << "alpha = " << format_double(profile.alpha) << "\n";
    meta << "c = " << format_double(profile.c) << "\n";
    meta << "residual_norm = " << format_double(profile.residual_norm) << "\n";
    meta << "n = " << profile.values.grid().size() << "\n";
    meta << "w = " << format_double(profile.values.grid().scale()) << "\n";
    meta << "provenance = "
         << (profile.provenance == SolitonProfile::Provenance::analytic
                 ? "analytic"
                 : profile.provenance == SolitonProfile::Provenance::newton ? "newton"
                                                                            : "continuation")
         << "\n";

    const double mass = l2_norm(profile.values) * l2_norm(profile.values);
    const double semi = h_alpha_seminorm(profile.values, profile.alpha);
    std::cout << "wrote " << csv.string() << "\n"
              << "alpha = " << profile.alpha << ", c = " << profile.c
              << ", residual = " << profile.residual_norm << ", mass = " << mass
              << ", energy = " << 0.5 * semi * semi - integral_cubed(profile.values) / 6.0
              << "\n";
    return 0;
}

int do_fit_fourier(const std::string& path, double noise_floor) {
    using namespace fraclab;
    const Table t = read_table_file(path);
    const auto& x = t.column("x");
    const auto& u = t.column("u");
    if (x.size() < 8) throw ConfigError("fit fourier: too few samples");
    // deduce the grid: x_0 = -pi*w and uniform spacing
    const double w = -x.front() / std::numbers::pi;
    const Grid grid(static_cast<int>(x.size()), w);
    for (std::size_t j = 0; j < x.size(); ++j)
        if (std::abs(x[j] - grid.node(static_cast<int>(j))) > 1e-9 * grid.length())
            throw ConfigError("fit fourier: sample abscissas are not a fraclab grid");
    const SpectralField field = SpectralField::from_samples(grid, u);
    const AsymptoticFit fit = fit_fourier_asymptotics(field, noise_floor);
    json out = {{"delta", fit.delta},
                {"mu_plus_1", fit.mu_plus_1},
                {"mu_reliability", "low; delta is the trustworthy parameter"},
                {"offset", fit.offset},
                {"window", {fit.k_lo, fit.k_hi}},
                {"residual", fit.rms_residual}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int do_fit_norms(const std::string& path, const std::string& quantity, double t_lo, double t_hi) {
    using namespace fraclab;
    const Table t = read_table_file(path);
    const auto& times = t.column("t");
    std::vector<double> values;
    if (quantity == "sup_norm") {
        values = t.column("sup_norm");
    } else if (quantity == "grad_l2_sq") {
        values = t.column("grad_l2");
        for (double& v : values) v *= v;
    } else {
        throw ConfigError("fit norms: quantity must be sup_norm or grad_l2_sq");
    }
    if (std::isnan(t_hi)) t_hi = times.back();
    const BlowupFit fit = fit_blowup_norms(times, values, t_lo, t_hi);
    json out = {{"quantity", quantity},
                {"t_star", fit.t_star},
                {"kappa1", fit.kappa1},
                {"kappa2", fit.kappa2},
                {"window", {fit.t_lo, fit.t_hi}},
                {"residual", fit.rms_residual},
                {"boundary", fit.boundary}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fraclab: periodic spectral solver suite for dispersive Burgers-type equations"};
    app.set_version_flag("--version", fraclab::version_string);
    app.require_subcommand(1);

    std::string target, scale = "full", out_dir = "out";
    std::vector<double> eps;
    int jobs = 2;
    CLI::App* run = app.add_subcommand("run", "run a named preset or a config file");
    run->add_option("target", target, "preset name or config path")->required();
    run->add_option("--scale", scale, "full or desk")->check(CLI::IsMember({"full", "desk"}));
    run->add_option("--out", out_dir, "output directory");

    CLI::App* sweep = app.add_subcommand("sweep", "run an eps sweep preset");
    std::string sweep_target;
    sweep->add_option("target", sweep_target, "sweep preset name")->required();
    sweep->add_option("--eps", eps, "comma-separated eps values")->delimiter(',');
    sweep->add_option("--scale", scale, "full or desk")->check(CLI::IsMember({"full", "desk"}));
    sweep->add_option("--out", out_dir, "output directory");
    sweep->add_option("--jobs", jobs, "maximum concurrent runs");

    CLI::App* soliton = app.add_subcommand("soliton", "construct a solitary wave");
    double alpha = 1.0, c = 1.0, w = 100.0, tol = 1e-8;
    int n = 0;
    soliton->add_option("--alpha", alpha, "dispersion exponent in [0.4, 1]")->required();
    soliton->add_option("--c", c, "wave speed (constructed at c=1, then rescaled)");
    soliton->add_option("--n", n, "grid size (default: 2^14 for alpha >= 0.6, 2^18 below)");
    soliton->add_option("--w", w, "domain scale");
    soliton->add_option("--tol", tol, "residual tolerance");
    soliton->add_option("--out", out_dir, "output directory");

    CLI::App* fit = app.add_subcommand("fit", "fit saved run artifacts");
    fit->require_subcommand(1);
    CLI::App* fit_fourier = fit->add_subcommand("fourier", "singularity fit of a snapshot x,u CSV");
    std::string fit_path;
    double noise_floor = 1e-13;
    fit_fourier->add_option("file", fit_path, "snapshot CSV")->required();
    fit_fourier->add_option("--noise-floor", noise_floor, "smallest usable |coefficient|");
    CLI::App* fit_norms = fit->add_subcommand("norms", "blow-up fit of a diagnostics CSV");
    std::string norms_path, quantity = "sup_norm";
    double t_lo = 0.0, t_hi = std::nan("");
    fit_norms->add_option("file", norms_path, "diagnostics CSV")->required();
    fit_norms->add_option("--quantity", quantity, "sup_norm or grad_l2_sq");
    fit_norms->add_option("--t-lo", t_lo, "window start")->required();
    fit_norms->add_option("--t-hi", t_hi, "window end (default: last sample)");

    CLI::App* presets = app.add_subcommand("presets", "list preset names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return do_run(target, scale, out_dir, {}, jobs);
        if (sweep->parsed()) return do_run(sweep_target, scale, out_dir, eps, jobs);
        if (soliton->parsed()) return do_soliton(alpha, c, n, w, tol, out_dir);
        if (fit_fourier->parsed()) return do_fit_fourier(fit_path, noise_floor);
        if (fit_norms->parsed()) return do_fit_norms(norms_path, quantity, t_lo, t_hi);
        if (presets->parsed()) {
            for (const std::string& name : fraclab::preset_names())
                std::cout << name << "\n";
            return 0;
        }
    } catch (const fraclab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fraclab::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
