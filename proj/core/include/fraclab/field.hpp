#ifndef FRACLAB_FIELD_HPP
#define FRACLAB_FIELD_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fraclab/grid.hpp"
#include "fraclab/symbols.hpp"

namespace fraclab {

using cvec = std::vector<std::complex<double>>;

namespace spectral {

/** Forward transform with the fraclab convention:
 *  hat_k = (1/n) * sum_j phys_j * exp(-i*xi_k*x_j), i.e. the rectangle-rule
 *  discretization of the Fourier-series coefficient on x in w*[-pi,pi). */
void to_spectrum(const Grid& grid, std::span<const double> phys, std::span<std::complex<double>> hat);

/** Inverse transform, phys_j = sum_k hat_k * exp(+i*xi_k*x_j), keeping the
 *  real part. If max_imag is non-null it receives the largest |imaginary part|
 *  seen during synthesis. */
void to_physical(const Grid& grid, std::span<const std::complex<double>> hat,
                 std::span<double> phys, double* max_imag = nullptr);

// Half-spectrum variants for real fields: storage k = 0..n/2 (n/2+1 entries),
// the implicit negative modes being the conjugates. Used in the integration
// hot path where conjugate symmetry holds by construction.
void to_spectrum_half(const Grid& grid, std::span<const double> phys,
                      std::span<std::complex<double>> half);
void to_physical_half(const Grid& grid, std::span<const std::complex<double>> half,
                      std::span<double> phys);
void full_to_half(std::span<const std::complex<double>> full,
                  std::span<std::complex<double>> half);
void half_to_full(std::span<const std::complex<double>> half,
                  std::span<std::complex<double>> full);

}  // namespace spectral

/** A real periodic sample set paired with its discrete Fourier coefficients.
 *
 * Both representations are stored and kept transform-consistent; synthesis
 * rejects spectra whose inverse transform carries an imaginary part above
 * 1e-10 (that guard catches symbol-symmetry bugs early).
 */
class SpectralField {
  public:
    SpectralField() : grid_(8, 1.0), physical_(8, 0.0), spectral_(8) {}

    static SpectralField from_samples(const Grid& grid, std::vector<double> samples);
    static SpectralField from_spectrum(const Grid& grid, cvec coefficients);
    static SpectralField from_function(const Grid& grid, const std::function<double(double)>& f);
    static SpectralField zero(const Grid& grid);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& physical() const { return physical_; }
    const cvec& spectrum() const { return spectral_; }

    /** Evaluate the trigonometric interpolant at an arbitrary point. */
    double evaluate(double x) const;

    /** Evaluate at the affine point set x_i = origin + stride*i, i = 0..count-1.
     *  Uses per-mode phase recurrences, O(count*n) multiplies. */
    std::vector<double> evaluate_affine(double origin, double stride, int count) const;

  private:
    SpectralField(Grid grid, std::vector<double> phys, cvec spec)
        : grid_(grid), physical_(std::move(phys)), spectral_(std::move(spec)) {}

    Grid grid_;
    std::vector<double> physical_;
    cvec spectral_;
};

/** Forward transform of a sample vector (spec operation name). */
SpectralField analyze(std::span<const double> samples, const Grid& grid);

/** Physical samples of a field (spec operation name). */
std::vector<double> synthesize(const SpectralField& field);

/** Multiply the spectrum pointwise by a symbol (with the Nyquist rule). */
SpectralField apply_symbol(const SpectralField& field, const FourierSymbol& symbol);

/** Zero every coefficient with |k| >= n/3. Idempotent projection. */
SpectralField dealias_two_thirds(const SpectralField& field);

/** max|hat_u| over the top 10% of wavenumbers divided by max|hat_u| overall.
 *  Throws on the zero field. */
double resolution_floor(const SpectralField& field);

/** Integral of u over the domain (k=0 coefficient times domain length). */
double integrate(const SpectralField& field);

/** L2 norm via the Parseval sum. */
double l2_norm(const SpectralField& field);

/** L2 norm of u_x via the Parseval sum (Nyquist mode dropped, odd symbol). */
double grad_l2_norm(const SpectralField& field);

/** ||D^(alpha/2) u||_2. The xi=0 term is dropped for alpha != 0, which is the
 *  continuum limit and keeps the seminorm finite for negative alpha. */
double h_alpha_seminorm(const SpectralField& field, double alpha);

/** Parseval sum with an arbitrary nonnegative even weight q(xi):
 *  sqrt(2*pi*w * sum_k q(xi_k)*|hat_u_k|^2). */
double weighted_l2_norm(const SpectralField& field, const std::function<double(double)>& weight);

/** Grid maximum of |u|. */
double sup_norm(const SpectralField& field);

/** Integral of u^3 by physical-space quadrature. */
double integral_cubed(const SpectralField& field);

/** Location of the global maximum of u, refined by quadratic interpolation
 *  through the three neighboring nodes (periodic). */
struct PeakLocation {
    int index;      // grid index of the discrete maximum
    double x;       // refined abscissa
    double value;   // refined peak value
};

PeakLocation locate_peak(const SpectralField& field);

/** Quadratic interpolation of periodic samples at an arbitrary point. */
double interpolate_quadratic(const Grid& grid, std::span<const double> samples, double x);

}  // namespace fraclab

#endif
