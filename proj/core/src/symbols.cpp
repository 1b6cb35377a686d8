#include "fraclab/symbols.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fraclab/errors.hpp"

namespace fraclab {

namespace {
constexpr std::complex<double> I{0.0, 1.0};
}

FourierSymbol symbol_fkdv_dispersion(double alpha) {
    if (!(alpha > -1.0))
        throw std::invalid_argument("symbol_fkdv_dispersion: need alpha > -1");
    return FourierSymbol(SymbolParity::odd, [alpha](double xi) -> std::complex<double> {
        if (xi == 0.0) return {0.0, 0.0};
        return I * xi * std::pow(std::abs(xi), alpha);
    });
}

double whitham_phase_speed(double xi, double beta_st) {
    // tanh(xi)/xi is even with limit 1 at xi = 0.
    const double t = std::abs(xi) < 1e-10 ? 1.0 - xi * xi / 3.0 : std::tanh(xi) / xi;
    return std::sqrt(1.0 + beta_st * xi * xi) * std::sqrt(t);
}

FourierSymbol symbol_whitham(double beta_st) {
    if (beta_st < 0.0)
        throw std::invalid_argument("symbol_whitham: surface tension must be >= 0");
    return FourierSymbol(SymbolParity::odd, [beta_st](double xi) -> std::complex<double> {
        return I * xi * whitham_phase_speed(xi, beta_st);
    });
}

FourierSymbol symbol_whitham_phase(double beta_st) {
    if (beta_st < 0.0)
        throw std::invalid_argument("symbol_whitham_phase: surface tension must be >= 0");
    return FourierSymbol(SymbolParity::even, [beta_st](double xi) -> std::complex<double> {
        return {whitham_phase_speed(xi, beta_st), 0.0};
    });
}

FourierSymbol symbol_bbm_prefactor(double alpha, double eps) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("symbol_bbm_prefactor: need alpha > 0");
    if (!(eps > 0.0))
        throw std::invalid_argument("symbol_bbm_prefactor: need eps > 0");
    return FourierSymbol(SymbolParity::even, [alpha, eps](double xi) -> std::complex<double> {
        return {1.0 / (1.0 + eps * std::pow(std::abs(xi), alpha)), 0.0};
    });
}

FourierSymbol symbol_fractional(double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("symbol_fractional: need alpha > 0");
    return FourierSymbol(SymbolParity::even, [alpha](double xi) -> std::complex<double> {
        return {std::pow(std::abs(xi), alpha), 0.0};
    });
}

FourierSymbol symbol_derivative() {
    return FourierSymbol(SymbolParity::odd,
                         [](double xi) -> std::complex<double> { return I * xi; });
}

std::vector<std::complex<double>> symbol_table(const FourierSymbol& symbol, const Grid& grid) {
    const int n = grid.size();
    std::vector<std::complex<double>> table(n);
    for (int m = 0; m < n; ++m) {
        std::complex<double> v;
        if (grid.mode(m) == -n / 2)
            v = symbol.parity() == SymbolParity::odd ? std::complex<double>{0.0, 0.0}
                                                     : symbol(grid.nyquist_xi());
        else
            v = symbol(grid.xi(m));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::ostringstream msg;
            msg << "symbol_table: non-finite symbol value at xi = " << grid.xi(m);
            throw NumericalError(msg.str());
        }
        table[m] = v;
    }
    return table;
}

}  // namespace fraclab
