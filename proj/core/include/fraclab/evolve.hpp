#ifndef FRACLAB_EVOLVE_HPP
#define FRACLAB_EVOLVE_HPP

#include <limits>
#include <utility>
#include <vector>

#include "fraclab/integrator.hpp"

namespace fraclab {

struct EvolveConfig {
    double dt = 1e-3;
    long n_steps = 1000;
    long diag_stride = 1;                 // must divide n_steps
    std::vector<double> snapshot_times;   // sorted
    double newton_tol = 1e-12;
    int newton_max_iter = 30;
    double energy_stop = 1e-3;            // stop when Delta exceeds this
    bool dealias = false;

    // Singularity tracing: fit the Fourier asymptotics at every diagnostics
    // sample; with a finite delta_stop the run halts once delta falls below it.
    bool track_delta = false;
    double delta_stop = std::numeric_limits<double>::quiet_NaN();
    double noise_floor = 1e-13;

    void validate() const;
};

enum class StopReason {
    completed,
    energy_drift_exceeded,
    newton_divergence,
    non_finite,
    delta_floor,
};

const char* to_string(StopReason reason);

/** Time series sampled every diag_stride steps, plus snapshots and the final
 *  state. The stop time records where the run halted; blow-up times always
 *  come from the fitting procedures, never from the stop time itself. */
struct RunDiagnostics {
    std::vector<double> times;
    std::vector<double> sup;        // ||u||_inf on the grid
    std::vector<double> grad_l2;    // ||u_x||_2
    std::vector<double> mass;       // int u^2 dx
    std::vector<double> mean;       // int u dx (exactly invariant for all models)
    std::vector<double> hamil;      // model Hamiltonian
    std::vector<double> energy;     // conserved energy driving Delta
    std::vector<double> drift;      // Delta = |E(t)/E(0) - 1|
    std::vector<double> floor_;     // spectral resolution floor
    std::vector<double> delta;      // singularity distance (track_delta only, else empty)
    std::vector<double> mu_plus_1;  // algebraic exponent of the Fourier fit

    StopReason stop_reason = StopReason::completed;
    double stop_time = 0.0;

    std::vector<std::pair<double, SpectralField>> snapshots;
    SpectralField final_state;
    double final_time = 0.0;
};

RunDiagnostics evolve(const ModelSpec& model, const SpectralField& u0, const EvolveConfig& config);

/** fBBM in a frame commoving with the tracked maximum:
 *      U_t - V U_y + (1 + eps D^alpha)^{-1}(U_y + U U_y) = 0,
 *  with V = (1 + eps D^alpha)^{-1}(U_y + U U_y) / U_yy evaluated at the peak,
 *  recomputed every step. The peak is the grid argmax refined by local
 *  quadratic interpolation. Tracks the frame speed series in `frame_speed`. */
struct CommovingDiagnostics : RunDiagnostics {
    std::vector<double> frame_speed;
};

CommovingDiagnostics evolve_commoving_fbbm(double alpha, double eps, const SpectralField& u0,
                                           const EvolveConfig& config);

}  // namespace fraclab

#endif
