#include "fraclab/evolve.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclab/errors.hpp"
#include "fraclab/fits.hpp"

namespace fraclab {

void EvolveConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("EvolveConfig: dt must be positive");
    if (n_steps <= 0) throw std::invalid_argument("EvolveConfig: n_steps must be positive");
    if (diag_stride <= 0 || n_steps % diag_stride != 0)
        throw std::invalid_argument("EvolveConfig: diag_stride must divide n_steps");
    if (newton_max_iter <= 0)
        throw std::invalid_argument("EvolveConfig: newton_max_iter must be positive");
    for (std::size_t i = 1; i < snapshot_times.size(); ++i)
        if (snapshot_times[i] < snapshot_times[i - 1])
            throw std::invalid_argument("EvolveConfig: snapshot times must be sorted");
}

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::completed: return "completed";
        case StopReason::energy_drift_exceeded: return "energy_drift_exceeded";
        case StopReason::newton_divergence: return "newton_divergence";
        case StopReason::non_finite: return "non_finite";
        case StopReason::delta_floor: return "delta_floor";
    }
    return "?";
}

namespace {

double drift_of(double e0, double e) {
    if (e0 == 0.0) return e == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::abs(e / e0 - 1.0);
}

struct Recorder {
    const ModelSpec& model;
    const EvolveConfig& config;
    RunDiagnostics& out;
    double e0 = 0.0;

    // Returns the freshly built field so callers can reuse it.
    SpectralField record(double t, const cvec& uhat, const Grid& grid) {
        SpectralField field = SpectralField::from_spectrum(grid, uhat);
        const double l2 = l2_norm(field);
        const double energy = conserved_energy(model, field);
        if (out.times.empty()) e0 = energy;
        out.times.push_back(t);
        out.sup.push_back(sup_norm(field));
        out.grad_l2.push_back(grad_l2_norm(field));
        out.mass.push_back(l2 * l2);
        out.mean.push_back(integrate(field));
        out.hamil.push_back(hamiltonian(model, field));
        out.energy.push_back(energy);
        out.drift.push_back(drift_of(e0, energy));
        double floor_val = 0.0;
        if (sup_norm(field) > 0.0) floor_val = resolution_floor(field);
        out.floor_.push_back(floor_val);
        if (config.track_delta) {
            double d = std::numeric_limits<double>::quiet_NaN();
            double mu = std::numeric_limits<double>::quiet_NaN();
            try {
                const AsymptoticFit fit = fit_fourier_asymptotics(field, config.noise_floor);
                d = fit.delta;
                mu = fit.mu_plus_1;
            } catch (const NumericalError&) {
                // too few resolved modes at this sample; leave NaN
            }
            out.delta.push_back(d);
            out.mu_plus_1.push_back(mu);
        }
        return field;
    }

    SpectralField record_or_build(bool do_record, double t, const cvec& uhat, const Grid& grid) {
        if (do_record) return record(t, uhat, grid);
        return SpectralField::from_spectrum(grid, uhat);
    }
};

// Shared main loop; `pre_step` runs before every step (commoving frame update).
template <typename Diag, typename PreStep>
Diag run_loop(const ModelSpec& model, const SpectralField& u0, const EvolveConfig& config,
              GaussStepper& stepper, PreStep&& pre_step, Diag diag) {
    config.validate();
    const Grid& grid = u0.grid();

    cvec uhat = u0.spectrum();
    Recorder rec{model, config, diag};
    SpectralField last_field = rec.record(0.0, uhat, grid);
    double last_time = 0.0;

    std::size_t snap_idx = 0;
    while (snap_idx < config.snapshot_times.size() &&
           config.snapshot_times[snap_idx] <= 0.5 * config.dt) {
        diag.snapshots.emplace_back(0.0, last_field);
        ++snap_idx;
    }

    diag.stop_reason = StopReason::completed;
    diag.stop_time = config.n_steps * config.dt;

    for (long m = 1; m <= config.n_steps; ++m) {
        const double t = m * config.dt;
        pre_step(uhat, diag);
        const StepStatus status = stepper.step(uhat);
        if (status != StepStatus::ok) {
            diag.stop_reason = status == StepStatus::newton_divergence
                                   ? StopReason::newton_divergence
                                   : StopReason::non_finite;
            diag.stop_time = t;
            break;
        }
        last_time = t;

        const bool diag_due = m % config.diag_stride == 0;
        const bool snap_due = snap_idx < config.snapshot_times.size() &&
                              t >= config.snapshot_times[snap_idx] - 0.5 * config.dt;
        if (!diag_due && !snap_due) continue;

        SpectralField field = rec.record_or_build(diag_due, t, uhat, grid);
        last_field = field;
        while (snap_idx < config.snapshot_times.size() &&
               t >= config.snapshot_times[snap_idx] - 0.5 * config.dt) {
            diag.snapshots.emplace_back(t, field);
            ++snap_idx;
        }
        if (diag_due) {
            if (diag.drift.back() > config.energy_stop) {
                diag.stop_reason = StopReason::energy_drift_exceeded;
                diag.stop_time = t;
                break;
            }
            if (config.track_delta && std::isfinite(config.delta_stop) &&
                std::isfinite(diag.delta.back()) && diag.delta.back() <= config.delta_stop) {
                diag.stop_reason = StopReason::delta_floor;
                diag.stop_time = t;
                break;
            }
        }
    }

    diag.final_state = last_field;
    diag.final_time = last_time;
    return diag;
}

}  // namespace

RunDiagnostics evolve(const ModelSpec& model, const SpectralField& u0, const EvolveConfig& config) {
    model.validate();
    StageControls controls{config.newton_tol, config.newton_max_iter, config.dealias};
    GaussStepper stepper(model, u0.grid(), config.dt, controls);
    return run_loop(model, u0, config, stepper, [](cvec&, RunDiagnostics&) {}, RunDiagnostics{});
}

CommovingDiagnostics evolve_commoving_fbbm(double alpha, double eps, const SpectralField& u0,
                                           const EvolveConfig& config) {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw std::invalid_argument("evolve_commoving_fbbm: alpha must lie in (0,2]");
    if (!(eps > 0.0)) throw std::invalid_argument("evolve_commoving_fbbm: eps must be positive");

    const ModelSpec model = ModelSpec::fbbm(alpha, /*bbm_eps=*/eps, /*eps_nl=*/1.0, /*transport=*/1.0);
    const Grid& grid = u0.grid();
    const int n = grid.size();

    StageControls controls{config.newton_tol, config.newton_max_iter, config.dealias};
    GaussStepper stepper(model, grid, config.dt, controls);

    // Frame speed from peak stationarity, U_ty(y*) = 0: differentiate the flux
    // once more in y, so V = [(1 + eps D^alpha)^{-1} d_yy (U + U^2/2)](y*) / U_yy(y*).
    // On an exact travelling wave this gives V = c identically; the undifferentiated
    // flux would vanish at any tracked maximum and track nothing.
    const int h = n / 2 + 1;
    cvec adv_table(h), uyy_table(h);
    for (int k = 0; k < h; ++k) {
        const double xi = k == n / 2 ? grid.nyquist_xi() : grid.xi(k);
        adv_table[k] = -xi * xi / (1.0 + eps * std::pow(std::abs(xi), alpha));
        uyy_table[k] = -xi * xi;
    }

    std::vector<double> phys(n), numer(n), uyy(n);
    cvec uh(h), tmp(h);

    auto peak_of = [&](const std::vector<double>& u) {
        int jmax = 0;
        for (int j = 1; j < n; ++j)
            if (u[j] > u[jmax]) jmax = j;
        const double um = u[(jmax + n - 1) % n], u0v = u[jmax], up = u[(jmax + 1) % n];
        const double curv = um - 2.0 * u0v + up;
        double x = grid.node(jmax);
        if (std::abs(curv) > 1e-300) x += 0.5 * (um - up) / curv * grid.spacing();
        return x;
    };

    auto update_frame = [&](cvec& uhat, CommovingDiagnostics& diag) {
        spectral::full_to_half(uhat, uh);
        spectral::to_physical_half(grid, uh, phys);
        const double x_peak = peak_of(phys);
        for (int j = 0; j < n; ++j) phys[j] += 0.5 * phys[j] * phys[j];
        spectral::to_spectrum_half(grid, phys, tmp);
        for (int k = 0; k < h; ++k) tmp[k] *= adv_table[k];
        spectral::to_physical_half(grid, tmp, numer);
        for (int k = 0; k < h; ++k) tmp[k] = uh[k] * uyy_table[k];
        spectral::to_physical_half(grid, tmp, uyy);

        const double curv = interpolate_quadratic(grid, uyy, x_peak);
        if (std::abs(curv) < 1e-12)
            throw SolverError(SolverError::Kind::degenerate_peak,
                              "evolve_commoving_fbbm: |U_yy| < 1e-12 at the tracked peak");
        const double v = interpolate_quadratic(grid, numer, x_peak) / curv;
        stepper.set_advection_shift(v);
        diag.frame_speed.push_back(v);
    };

    return run_loop(model, u0, config, stepper, update_frame, CommovingDiagnostics{});
}

}  // namespace fraclab
