#ifndef FRACLAB_FITS_HPP
#define FRACLAB_FITS_HPP

#include <span>
#include <vector>

#include "fraclab/field.hpp"
#include "fraclab/solitons.hpp"

namespace fraclab {

/** Result of fitting ln|hat u_k| = offset - (mu+1) ln(xi_k) - delta xi_k over
 *  the upper half of the resolved positive-wavenumber band. delta estimates
 *  the distance of the nearest complex singularity from the real axis; the
 *  algebraic exponent mu is the less reliable of the two. */
struct AsymptoticFit {
    double delta = 0.0;
    double mu_plus_1 = 0.0;
    double offset = 0.0;
    int k_lo = 0;    // first fitted integer wavenumber
    int k_hi = 0;    // last fitted integer wavenumber
    double rms_residual = 0.0;
};

AsymptoticFit fit_fourier_asymptotics(const SpectralField& field, double noise_floor = 1e-13);

/** Result of the blow-up norm fit ln(v) ~ kappa1 ln(t* - t) + kappa2 with t*
 *  found by a derivative-free 1-D search nested around a linear solve. */
struct BlowupFit {
    double t_star = 0.0;
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    double rms_residual = 0.0;
    bool boundary = false;   // minimizer pinned at the search-interval boundary
};

BlowupFit fit_blowup_norms(std::span<const double> times, std::span<const double> values,
                           double t_lo, double t_hi);

enum class ScalingRegime { critical, supercritical_exponential };

/** Predicted positive blow-up exponents: ||u_x||_2^2 ~ (t*-t)^(-e_grad),
 *  ||u||_inf ~ (t*-t)^(-e_sup). Critical regime: e = (2a+1)/(1+a-1/gamma) and
 *  a/(1+a-1/gamma); exponential regime: (2a+1)/(1+a) and a/(1+a). */
struct ScalingPrediction {
    ScalingRegime regime;
    double exponent_grad_l2_sq;
    double exponent_sup;
};

ScalingPrediction predicted_exponents(double alpha, ScalingRegime regime, double gamma = 1.0);

/** Rescaling factor série L(t) = (||u_x(0)||_2 / ||u_x(t)||_2)^(1/(alpha+1/2)). */
std::vector<double> scaling_factor_L(std::span<const double> grad_l2_series, double alpha);

/** a = int(U^2 U_yyy) / ((2 alpha + 1) ||U_y||_2^2), the log-derivative of the
 *  rescaling factor under the constant-||U_y|| normalization. */
double rescaling_rate_a(const SpectralField& u, double alpha);

/** Peak speed v = U0 + (D^alpha U_y)(y*) / U_yy(y*) with y* the refined peak. */
double peak_speed_v(const SpectralField& u, double alpha, double u0);

/** Read the rescaling factor off the peak: L = (Q1(0)/max u)^(1/alpha); the
 *  misfit compares u with L^(-alpha) Q1((x - x_m)/L) near the peak. */
struct ProfileFitResult {
    double L;
    double x_m;
    double misfit;
};

ProfileFitResult blowup_profile_fit(const SpectralField& u, const SolitonProfile& q1, double alpha);

/** Interpolated time at which delta(t) first crosses the threshold from above. */
double singularity_time_from_delta(std::span<const double> times, std::span<const double> deltas,
                                   double threshold = 1e-6);

/** Ordinary least squares of log10(t*) against log10(eps). */
struct LogLogFit {
    double a = 0.0;        // slope
    double b = 0.0;        // intercept
    double sigma_a = 0.0;  // standard error of the slope
    double r = 0.0;        // Pearson correlation of the log data
    double rms_residual = 0.0;
};

LogLogFit loglog_regression(std::span<const double> eps, std::span<const double> t_star);

}  // namespace fraclab

#endif
