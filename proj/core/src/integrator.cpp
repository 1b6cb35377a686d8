#include "fraclab/integrator.hpp"

#include <cmath>

namespace fraclab {

namespace {
const double root3_over_6 = std::sqrt(3.0) / 6.0;
const double a11 = 0.25, a12 = 0.25 - root3_over_6;
const double a21 = 0.25 + root3_over_6, a22 = 0.25;
constexpr std::complex<double> I{0.0, 1.0};
}  // namespace

// Real solutions carry conjugate-symmetric spectra, so all stage algebra runs
// on the k = 0..n/2 half spectrum; the caller-facing state stays full-length.
GaussStepper::GaussStepper(const ModelSpec& model, const Grid& grid, double dt,
                           StageControls controls)
    : model_(model), grid_(grid), dt_(dt), controls_(controls) {
    if (dt == 0.0 || !std::isfinite(dt))
        throw std::invalid_argument("GaussStepper: dt must be nonzero and finite");
    model_.validate();
    const int h = grid_.size() / 2 + 1;
    const auto lin_full = symbol_table(linear_multiplier(model_), grid_);
    const auto flux_full = symbol_table(flux_multiplier(model_), grid_);
    lin_base_.assign(lin_full.begin(), lin_full.begin() + h);
    lin_ = lin_base_;
    flux_table_.assign(flux_full.begin(), flux_full.begin() + h);
    rebuild_stage_inverse();
    k1_.resize(h); k2_.resize(h); n1_.resize(h); n2_.resize(h);
    arg_.resize(h); slope_.resize(h); uh_.resize(h);
    phys_.resize(grid_.size());
}

void GaussStepper::set_advection_shift(double v) {
    const int h = static_cast<int>(lin_.size());
    for (int k = 0; k < h; ++k) {
        // odd multiplier: the unpaired Nyquist mode stays zeroed
        const double xi = k == h - 1 ? 0.0 : grid_.xi(k);
        lin_[k] = lin_base_[k] + I * xi * v;
    }
    rebuild_stage_inverse();
}

void GaussStepper::rebuild_stage_inverse() {
    const int h = static_cast<int>(lin_.size());
    inv11_.resize(h); inv12_.resize(h); inv21_.resize(h); inv22_.resize(h);
    for (int k = 0; k < h; ++k) {
        const std::complex<double> hL = dt_ * lin_[k];
        const std::complex<double> m11 = 1.0 - a11 * hL;
        const std::complex<double> m12 = -a12 * hL;
        const std::complex<double> m21 = -a21 * hL;
        const std::complex<double> m22 = 1.0 - a22 * hL;
        const std::complex<double> det = m11 * m22 - m12 * m21;
        inv11_[k] = m22 / det;
        inv12_[k] = -m12 / det;
        inv21_[k] = -m21 / det;
        inv22_[k] = m11 / det;
    }
}

void GaussStepper::flux(const cvec& vhat, cvec& out) {
    const int n = grid_.size();
    spectral::to_physical_half(grid_, vhat, phys_);
    for (int j = 0; j < n; ++j) phys_[j] = 0.5 * phys_[j] * phys_[j];
    spectral::to_spectrum_half(grid_, phys_, out);
    if (controls_.dealias) {
        for (int k = 0; k <= n / 2; ++k)
            if (3 * k >= n) out[k] = 0.0;
    }
    for (int k = 0; k <= n / 2; ++k) out[k] *= flux_table_[k];
}

StepStatus GaussStepper::step(cvec& uhat) {
    const int h = static_cast<int>(lin_.size());
    const double hdt = dt_;
    spectral::full_to_half(uhat, uh_);

    // initial iterate: the explicit slope F(u_m) + L u_m for both stages
    flux(uh_, slope_);
    for (int k = 0; k < h; ++k) slope_[k] += lin_[k] * uh_[k];
    k1_ = slope_;
    k2_ = slope_;

    bool converged = false;
    int it = 0;
    for (; it < controls_.max_iter; ++it) {
        for (int k = 0; k < h; ++k) arg_[k] = uh_[k] + hdt * (a11 * k1_[k] + a12 * k2_[k]);
        flux(arg_, n1_);
        for (int k = 0; k < h; ++k) arg_[k] = uh_[k] + hdt * (a21 * k1_[k] + a22 * k2_[k]);
        flux(arg_, n2_);

        double diff = 0.0;
        for (int k = 0; k < h; ++k) {
            const std::complex<double> lu = lin_[k] * uh_[k];
            const std::complex<double> r1 = n1_[k] + lu;
            const std::complex<double> r2 = n2_[k] + lu;
            const std::complex<double> new1 = inv11_[k] * r1 + inv12_[k] * r2;
            const std::complex<double> new2 = inv21_[k] * r1 + inv22_[k] * r2;
            diff = std::max(diff, std::abs(new1 - k1_[k]));
            diff = std::max(diff, std::abs(new2 - k2_[k]));
            k1_[k] = new1;
            k2_[k] = new2;
        }
        if (!std::isfinite(diff)) {
            last_iterations_ = it + 1;
            return StepStatus::non_finite;
        }
        if (diff < controls_.tol) {
            converged = true;
            ++it;
            break;
        }
    }
    last_iterations_ = it;
    if (!converged) return StepStatus::newton_divergence;

    for (int k = 0; k < h; ++k) uh_[k] += 0.5 * hdt * (k1_[k] + k2_[k]);
    spectral::half_to_full(uh_, uhat);
    return StepStatus::ok;
}

}  // namespace fraclab
