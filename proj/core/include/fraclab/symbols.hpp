#ifndef FRACLAB_SYMBOLS_HPP
#define FRACLAB_SYMBOLS_HPP

#include <complex>
#include <functional>
#include <vector>

#include "fraclab/grid.hpp"

namespace fraclab {

/** Parity of a Fourier multiplier in xi.
 *
 * Odd symbols are purely imaginary and odd (skew dispersion operators); even
 * symbols are real and even. The parity decides the treatment of the unpaired
 * Nyquist mode k = -n/2 on even grids: odd symbols zero it, even symbols are
 * evaluated at +(n/2)/w. Both choices keep real fields real.
 */
enum class SymbolParity { even, odd };

class FourierSymbol {
  public:
    FourierSymbol(SymbolParity parity, std::function<std::complex<double>(double)> eval)
        : parity_(parity), eval_(std::move(eval)) {}

    std::complex<double> operator()(double xi) const { return eval_(xi); }
    SymbolParity parity() const { return parity_; }

  private:
    SymbolParity parity_;
    std::function<std::complex<double>(double)> eval_;
};

/** Dispersion of the fractional KdV family: xi -> i*xi*|xi|^alpha, 0 at xi=0.
 *  Requires alpha > -1 so the combined symbol stays continuous at 0. */
FourierSymbol symbol_fkdv_dispersion(double alpha);

/** Whitham dispersion with optional surface tension: xi -> i*xi*p_S(xi) with
 *  p_S(xi) = (1 + beta*xi^2)^(1/2) * (tanh(xi)/xi)^(1/2), p_S(0) = 1. */
FourierSymbol symbol_whitham(double beta_st);

/** The scalar phase-speed factor p_S(xi) itself. */
double whitham_phase_speed(double xi, double beta_st);

/** BBM stage prefactor: xi -> 1/(1 + eps*|xi|^alpha). Real, even, bounded by 1. */
FourierSymbol symbol_bbm_prefactor(double alpha, double eps);

/** |xi|^alpha (the multiplier of D^alpha), alpha > 0. */
FourierSymbol symbol_fractional(double alpha);

/** Whitham phase-speed multiplier p_S(xi) as an even symbol. */
FourierSymbol symbol_whitham_phase(double beta_st);

/** First derivative, xi -> i*xi. */
FourierSymbol symbol_derivative();

/** Sample a symbol at every grid wavenumber in transform order, applying the
 *  Nyquist rule for the unpaired mode. Throws NumericalError if any sampled
 *  value is non-finite. */
std::vector<std::complex<double>> symbol_table(const FourierSymbol& symbol, const Grid& grid);

}  // namespace fraclab

#endif
