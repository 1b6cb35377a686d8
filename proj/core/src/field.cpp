#include "fraclab/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fraclab/errors.hpp"
#include "fraclab/fft.hpp"

namespace fraclab {

namespace spectral {

// The nodes start at -pi*w, so the plain DFT kernel exp(-2*pi*i*j*m/n) picks
// up the phase exp(+i*pi*k) = (-1)^m relative to exp(-i*xi_k*x_j).
void to_spectrum(const Grid& grid, std::span<const double> phys,
                 std::span<std::complex<double>> hat) {
    const int n = grid.size();
    if (static_cast<int>(phys.size()) != n || static_cast<int>(hat.size()) != n)
        throw std::invalid_argument("to_spectrum: length mismatch with grid");
    thread_local cvec tmp;
    tmp.resize(n);
    for (int j = 0; j < n; ++j) tmp[j] = phys[j];
    detail::dft_forward(tmp, hat);
    const double inv_n = 1.0 / n;
    for (int m = 0; m < n; ++m) hat[m] *= (m & 1) ? -inv_n : inv_n;
}

void to_physical(const Grid& grid, std::span<const std::complex<double>> hat,
                 std::span<double> phys, double* max_imag) {
    const int n = grid.size();
    if (static_cast<int>(phys.size()) != n || static_cast<int>(hat.size()) != n)
        throw std::invalid_argument("to_physical: length mismatch with grid");
    thread_local cvec tmp, out;
    tmp.resize(n);
    out.resize(n);
    for (int m = 0; m < n; ++m) tmp[m] = (m & 1) ? -hat[m] : hat[m];
    detail::dft_backward(tmp, out);
    double imag_max = 0.0;
    for (int j = 0; j < n; ++j) {
        phys[j] = out[j].real();
        imag_max = std::max(imag_max, std::abs(out[j].imag()));
    }
    if (max_imag) *max_imag = imag_max;
}

void to_spectrum_half(const Grid& grid, std::span<const double> phys,
                      std::span<std::complex<double>> half) {
    const int n = grid.size();
    if (static_cast<int>(phys.size()) != n || static_cast<int>(half.size()) != n / 2 + 1)
        throw std::invalid_argument("to_spectrum_half: length mismatch with grid");
    detail::rdft_forward(phys, half);
    const double inv_n = 1.0 / n;
    for (int k = 0; k <= n / 2; ++k) half[k] *= (k & 1) ? -inv_n : inv_n;
}

void to_physical_half(const Grid& grid, std::span<const std::complex<double>> half,
                      std::span<double> phys) {
    const int n = grid.size();
    if (static_cast<int>(phys.size()) != n || static_cast<int>(half.size()) != n / 2 + 1)
        throw std::invalid_argument("to_physical_half: length mismatch with grid");
    thread_local cvec tmp;
    tmp.resize(n / 2 + 1);
    for (int k = 0; k <= n / 2; ++k) tmp[k] = (k & 1) ? -half[k] : half[k];
    detail::rdft_backward(tmp, phys);
}

void full_to_half(std::span<const std::complex<double>> full,
                  std::span<std::complex<double>> half) {
    const int n = static_cast<int>(full.size());
    for (int k = 0; k <= n / 2; ++k) half[k] = full[k];
    // fold any conjugate-asymmetric roundoff onto the real-field subspace
    for (int k = 1; k < n / 2; ++k) half[k] = 0.5 * (half[k] + std::conj(full[n - k]));
    half[n / 2] = half[n / 2].real();
    half[0] = half[0].real();
}

void half_to_full(std::span<const std::complex<double>> half,
                  std::span<std::complex<double>> full) {
    const int n = static_cast<int>(full.size());
    for (int k = 0; k <= n / 2; ++k) full[k] = half[k];
    for (int k = 1; k < n / 2; ++k) full[n - k] = std::conj(half[k]);
}

}  // namespace spectral

SpectralField SpectralField::from_samples(const Grid& grid, std::vector<double> samples) {
    if (static_cast<int>(samples.size()) != grid.size())
        throw std::invalid_argument("SpectralField: sample count does not match grid");
    cvec spec(grid.size());
    spectral::to_spectrum(grid, samples, spec);
    return SpectralField(grid, std::move(samples), std::move(spec));
}

SpectralField SpectralField::from_spectrum(const Grid& grid, cvec coefficients) {
    if (static_cast<int>(coefficients.size()) != grid.size())
        throw std::invalid_argument("SpectralField: coefficient count does not match grid");
    std::vector<double> phys(grid.size());
    double imag_max = 0.0;
    spectral::to_physical(grid, coefficients, phys, &imag_max);
    if (imag_max > 1e-10) {
        std::ostringstream msg;
        msg << "SpectralField: synthesis produced imaginary part " << imag_max
            << " (> 1e-10); spectrum is not conjugate-symmetric";
        throw NumericalError(msg.str());
    }
    return SpectralField(grid, std::move(phys), std::move(coefficients));
}

SpectralField SpectralField::from_function(const Grid& grid,
                                           const std::function<double(double)>& f) {
    std::vector<double> samples(grid.size());
    for (int j = 0; j < grid.size(); ++j) samples[j] = f(grid.node(j));
    return from_samples(grid, std::move(samples));
}

SpectralField SpectralField::zero(const Grid& grid) {
    return SpectralField(grid, std::vector<double>(grid.size(), 0.0), cvec(grid.size()));
}

double SpectralField::evaluate(double x) const {
    std::complex<double> acc = 0.0;
    for (int m = 0; m < grid_.size(); ++m)
        acc += spectral_[m] * std::polar(1.0, grid_.xi(m) * x);
    return acc.real();
}

std::vector<double> SpectralField::evaluate_affine(double origin, double stride, int count) const {
    const int n = grid_.size();
    std::vector<std::complex<double>> acc(count, 0.0);
    for (int m = 0; m < n; ++m) {
        const std::complex<double> c = spectral_[m];
        if (c == 0.0) continue;
        const double xi = grid_.xi(m);
        std::complex<double> phase = std::polar(1.0, xi * origin);
        const std::complex<double> step = std::polar(1.0, xi * stride);
        for (int i = 0; i < count; ++i) {
            acc[i] += c * phase;
            phase *= step;
        }
    }
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = acc[i].real();
    return out;
}

SpectralField analyze(std::span<const double> samples, const Grid& grid) {
    return SpectralField::from_samples(grid, std::vector<double>(samples.begin(), samples.end()));
}

std::vector<double> synthesize(const SpectralField& field) { return field.physical(); }

SpectralField apply_symbol(const SpectralField& field, const FourierSymbol& symbol) {
    const auto table = symbol_table(symbol, field.grid());
    cvec spec = field.spectrum();
    for (std::size_t m = 0; m < spec.size(); ++m) spec[m] *= table[m];
    return SpectralField::from_spectrum(field.grid(), std::move(spec));
}

SpectralField dealias_two_thirds(const SpectralField& field) {
    const int n = field.grid().size();
    cvec spec = field.spectrum();
    for (int m = 0; m < n; ++m)
        if (3 * std::abs(field.grid().mode(m)) >= n) spec[m] = 0.0;
    return SpectralField::from_spectrum(field.grid(), std::move(spec));
}

double resolution_floor(const SpectralField& field) {
    const int n = field.grid().size();
    const int k_min = (9 * (n / 2)) / 10;  // top 10% of |k|
    double top = 0.0, overall = 0.0;
    for (int m = 0; m < n; ++m) {
        const double a = std::abs(field.spectrum()[m]);
        overall = std::max(overall, a);
        if (std::abs(field.grid().mode(m)) >= k_min) top = std::max(top, a);
    }
    if (overall == 0.0) throw std::invalid_argument("resolution_floor: zero field");
    return top / overall;
}

double integrate(const SpectralField& field) {
    return field.spectrum()[0].real() * field.grid().length();
}

double l2_norm(const SpectralField& field) {
    double s = 0.0;
    for (const auto& c : field.spectrum()) s += std::norm(c);
    return std::sqrt(field.grid().length() * s);
}

double grad_l2_norm(const SpectralField& field) {
    const int n = field.grid().size();
    double s = 0.0;
    for (int m = 0; m < n; ++m) {
        if (field.grid().mode(m) == -n / 2) continue;
        const double xi = field.grid().xi(m);
        s += xi * xi * std::norm(field.spectrum()[m]);
    }
    return std::sqrt(field.grid().length() * s);
}

double h_alpha_seminorm(const SpectralField& field, double alpha) {
    const int n = field.grid().size();
    double s = 0.0;
    for (int m = 0; m < n; ++m) {
        const double axi = m == n / 2 ? field.grid().nyquist_xi() : std::abs(field.grid().xi(m));
        if (axi == 0.0) {
            if (alpha == 0.0) s += std::norm(field.spectrum()[m]);
            continue;
        }
        s += std::pow(axi, alpha) * std::norm(field.spectrum()[m]);
    }
    return std::sqrt(field.grid().length() * s);
}

double weighted_l2_norm(const SpectralField& field,
                        const std::function<double(double)>& weight) {
    const int n = field.grid().size();
    double s = 0.0;
    for (int m = 0; m < n; ++m) {
        const double axi = m == n / 2 ? field.grid().nyquist_xi() : std::abs(field.grid().xi(m));
        s += weight(axi) * std::norm(field.spectrum()[m]);
    }
    return std::sqrt(field.grid().length() * s);
}

double sup_norm(const SpectralField& field) {
    double m = 0.0;
    for (double v : field.physical()) m = std::max(m, std::abs(v));
    return m;
}

double integral_cubed(const SpectralField& field) {
    double s = 0.0;
    for (double v : field.physical()) s += v * v * v;
    return s * field.grid().spacing();
}

PeakLocation locate_peak(const SpectralField& field) {
    const auto& u = field.physical();
    const int n = field.grid().size();
    int jmax = 0;
    for (int j = 1; j < n; ++j)
        if (u[j] > u[jmax]) jmax = j;
    const double um = u[(jmax + n - 1) % n];
    const double u0 = u[jmax];
    const double up = u[(jmax + 1) % n];
    const double curvature = um - 2.0 * u0 + up;
    double x = field.grid().node(jmax);
    double value = u0;
    if (std::abs(curvature) > 1e-300) {
        const double shift = 0.5 * (um - up) / curvature;
        x += shift * field.grid().spacing();
        value = u0 - 0.125 * (up - um) * (up - um) / curvature;
    }
    return {jmax, x, value};
}

double interpolate_quadratic(const Grid& grid, std::span<const double> samples, double x) {
    const int n = grid.size();
    const double h = grid.spacing();
    // nearest node, wrapped into [0, n)
    double rel = (x - grid.node(0)) / h;
    long j0 = std::lround(rel);
    const double theta = rel - static_cast<double>(j0);
    j0 = ((j0 % n) + n) % n;
    const double fm = samples[(j0 + n - 1) % n];
    const double f0 = samples[j0];
    const double fp = samples[(j0 + 1) % n];
    return f0 + 0.5 * theta * (fp - fm) + 0.5 * theta * theta * (fp - 2.0 * f0 + fm);
}

}  // namespace fraclab
