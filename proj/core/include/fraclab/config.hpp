#ifndef FRACLAB_CONFIG_HPP
#define FRACLAB_CONFIG_HPP

#include <limits>
#include <string>
#include <vector>

#include "fraclab/evolve.hpp"
#include "fraclab/model.hpp"

namespace fraclab {

/** One time-evolution experiment, as written in a line-based `key = value`
 *  file. Required keys: model, alpha, beta, n, w, dt, t_end. `#` starts a
 *  comment; unknown keys are rejected with the offending line number. */
struct ExperimentConfig {
    std::string name = "run";
    ModelKind model = ModelKind::fkdv;
    double alpha = 0.0;
    double beta = 1.0;            // u0 = beta * sech^2(x) unless u0 overrides
    std::string u0 = "sech2";     // sech2 | bo_soliton | fbbm_soliton
    double u0_speed = 2.0;        // soliton initial data speed
    double beta_st = 0.0;
    double eps_nl = 1.0;
    double eps_disp = 1.0;
    double bbm_eps = 1.0;
    double transport = 1.0;
    int n = 0;
    double w = 0.0;
    double dt = 0.0;
    double t_end = 0.0;
    long diag_stride = 1;
    bool dealias = false;
    double newton_tol = 1e-12;
    int newton_max_iter = 30;
    double energy_stop = 1e-3;
    bool track_delta = false;
    double delta_stop = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> snapshot_times;
    double fit_t_lo = std::numeric_limits<double>::quiet_NaN();
    double fit_t_hi = std::numeric_limits<double>::quiet_NaN();

    void validate() const;
    ModelSpec to_model() const;
    EvolveConfig to_evolve_config() const;
    SpectralField initial_data() const;
    long n_steps() const;

    bool operator==(const ExperimentConfig& other) const;
};

/** Parse the `key = value` format. Errors name the offending line. */
ExperimentConfig parse_config(const std::string& text);

/** Render a config so that parse_config(render_config(c)) == c. */
std::string render_config(const ExperimentConfig& config);

}  // namespace fraclab

#endif
