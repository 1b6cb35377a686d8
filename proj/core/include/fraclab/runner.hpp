#ifndef FRACLAB_RUNNER_HPP
#define FRACLAB_RUNNER_HPP

#include <filesystem>
#include <optional>

#include "fraclab/fits.hpp"
#include "fraclab/presets.hpp"

namespace fraclab {

/** Everything a finished run left behind: the artifact directory plus the
 *  in-memory diagnostics and the fits requested by the preset plan. */
struct RunOutcome {
    std::filesystem::path dir;
    ExperimentConfig config;                   // as actually run (after scaling)
    RunDiagnostics diagnostics;
    std::optional<BlowupFit> sup_fit;
    std::optional<BlowupFit> grad_sq_fit;      // fit of ||u_x||_2^2
    std::optional<AsymptoticFit> fourier_fit;  // of the final state
    std::optional<double> delta_time;          // t* from the delta crossing
    std::vector<std::string> errors;           // fit/solver failures, also in the manifest
};

/** Run a named evolve preset (throws ConfigError for sweep/family presets). */
RunOutcome run_experiment(const std::string& preset_name, Scale scale,
                          const std::filesystem::path& out_root);

/** Run an explicit configuration with an optional fit plan. */
RunOutcome run_experiment(const ExperimentConfig& config, const FitPlan& fits,
                          const std::string& label, const std::filesystem::path& out_root);

struct SweepOutcome {
    std::filesystem::path dir;
    std::vector<double> eps;                   // successful runs
    std::vector<double> t_star;
    std::vector<std::pair<double, std::string>> failures;
    std::optional<LogLogFit> regression;
    std::vector<std::string> errors;
};

/** Run an eps sweep preset. eps_override (when non-empty) replaces the preset
 *  value list; values must be positive and are sorted ascending. */
SweepOutcome run_sweep(const std::string& preset_name, Scale scale,
                       std::vector<double> eps_override, int max_parallel,
                       const std::filesystem::path& out_root);

struct FamilyOutcome {
    std::filesystem::path dir;
    std::vector<FamilyRow> rows;
};

FamilyOutcome run_family(const std::string& preset_name, Scale scale,
                         const std::filesystem::path& out_root);

/** Write the x,u snapshot format (17 significant digits). */
void write_field_csv(const std::filesystem::path& path, const SpectralField& field);

/** Diagnostics CSV with header t,sup_norm,grad_l2,mass,hamiltonian,energy_drift,floor. */
void write_diagnostics_csv(const std::filesystem::path& path, const RunDiagnostics& diag);

}  // namespace fraclab

#endif
