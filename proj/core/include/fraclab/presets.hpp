#ifndef FRACLAB_PRESETS_HPP
#define FRACLAB_PRESETS_HPP

#include <map>
#include <string>
#include <vector>

#include "fraclab/config.hpp"

namespace fraclab {

enum class Scale { full, desk };

Scale scale_from_string(const std::string& s);
const char* to_string(Scale s);

enum class PresetKind { evolve, sweep_fkdv, sweep_fbbm, soliton_family };

/** Post-run fitting plan attached to a preset. */
struct FitPlan {
    bool norm_fits = false;          // kappa fits of sup and grad^2 over [fit_t_lo, fit_t_hi]
    bool fourier_at_end = false;     // asymptotic fit of the final state
    bool delta_time = false;         // report t* from the delta crossing
    // For norm fits: when fit_t_lo is NaN in the config, use the last
    // `tail_window` time units before the stop instead.
    double tail_window = 0.0;
};

struct Preset {
    PresetKind kind = PresetKind::evolve;
    std::string label;               // human-readable description of the run
    ExperimentConfig config;         // full-scale parameters (evolve/commoving/sweep base)
    FitPlan fits;
    std::vector<double> eps_values;  // sweep presets
    double sweep_t_end_coef = 0.0;   // per-eps t_end = ceil(coef/eps)
    std::vector<double> family_alphas;
    int family_n = 0;
    double family_w = 100.0;
};

const std::map<std::string, Preset>& preset_registry();
std::vector<std::string> preset_names();
const Preset& find_preset(const std::string& name);

/** Desk scale halves n and the step count twice (n/4, dt*4). */
ExperimentConfig scaled_config(const ExperimentConfig& config, Scale scale);

}  // namespace fraclab

#endif
