#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fraclab/errors.hpp"
#include "fraclab/field.hpp"
#include "fraclab/grid.hpp"
#include "fraclab/symbols.hpp"

using namespace fraclab;
using std::numbers::pi;

namespace {

std::vector<double> random_field(const Grid& grid, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> u(grid.size());
    for (double& v : u) v = dist(rng);
    return u;
}

// independent oracle: the defining DFT sum, O(n^2)
cvec naive_spectrum(const Grid& grid, const std::vector<double>& u) {
    const int n = grid.size();
    cvec hat(n);
    for (int m = 0; m < n; ++m) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += u[j] * std::polar(1.0, -grid.xi(m) * grid.node(j));
        hat[m] = acc / static_cast<double>(n);
    }
    return hat;
}

std::vector<double> naive_synthesis(const Grid& grid, const cvec& hat) {
    const int n = grid.size();
    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) {
        std::complex<double> acc = 0.0;
        for (int m = 0; m < n; ++m) acc += hat[m] * std::polar(1.0, grid.xi(m) * grid.node(j));
        u[j] = acc.real();
    }
    return u;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST_CASE("grid wavenumbers follow transform ordering") {
    const Grid g(8, 1.0);
    const std::vector<double> expected = {0, 1, 2, 3, -4, -3, -2, -1};
    for (int m = 0; m < 8; ++m) CHECK(g.xi(m) == doctest::Approx(expected[m]).epsilon(1e-15));
}

TEST_CASE("grid spacing and extreme wavenumber at the large test resolution") {
    const Grid g(1 << 14, 100.0);
    CHECK(g.spacing() == doctest::Approx(2.0 * pi / (1 << 14) * 100.0).epsilon(1e-15));
    CHECK(g.spacing() == doctest::Approx(0.03835).epsilon(1e-3));
    double max_xi = 0.0;
    for (int m = 0; m < g.size(); ++m) max_xi = std::max(max_xi, g.xi(m));
    CHECK(max_xi == doctest::Approx(81.91).epsilon(1e-12));
    CHECK(g.node(0) == doctest::Approx(-100.0 * pi));
}

TEST_CASE("grid rejects invalid sizes") {
    CHECK_THROWS_AS(make_grid(16, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(12, 1.0), std::invalid_argument);   // not a power of two
    CHECK_THROWS_AS(make_grid(4, 1.0), std::invalid_argument);    // too small
    CHECK_THROWS_AS(make_grid(16, -2.0), std::invalid_argument);
    CHECK_NOTHROW(make_grid(8, 1.0));
}

TEST_CASE("round-trip transform identity for random fields") {
    for (int n : {8, 64, 1024, 1 << 16}) {
        const Grid g(n, 3.7);
        const auto u = random_field(g, 42 + n);
        const SpectralField f = analyze(u, g);
        const auto back = synthesize(f);
        CHECK(max_abs_diff(u, back) < 1e-12);
    }
}

TEST_CASE("constant field concentrates at k = 0") {
    const Grid g(64, 2.0);
    const SpectralField f = SpectralField::from_function(g, [](double) { return 1.0; });
    CHECK(std::abs(f.spectrum()[0] - 1.0) < 1e-14);
    for (int m = 1; m < 64; ++m) CHECK(std::abs(f.spectrum()[m]) < 1e-14);
}

TEST_CASE("sin(x) has exactly two modes at k = +-1") {
    const Grid g(64, 1.0);
    const SpectralField f = SpectralField::from_function(g, [](double x) { return std::sin(x); });
    for (int m = 0; m < 64; ++m) {
        const int k = g.mode(m);
        if (k == 1) {
            CHECK(std::abs(f.spectrum()[m] - std::complex<double>(0, -0.5)) < 1e-14);
        } else if (k == -1) {
            CHECK(std::abs(f.spectrum()[m] - std::complex<double>(0, 0.5)) < 1e-14);
        } else {
            CHECK(std::abs(f.spectrum()[m]) < 1e-14);
        }
    }
}

TEST_CASE("sech^2 coefficients match the defining DFT sum and the continuum transform") {
    const Grid g(1 << 10, 10.0);
    const SpectralField f = SpectralField::from_function(g, [](double x) {
        const double s = 1.0 / std::cosh(x);
        return s * s;
    });
    const cvec direct = naive_spectrum(g, f.physical());
    double worst = 0.0;
    for (int m = 0; m < g.size(); ++m) worst = std::max(worst, std::abs(f.spectrum()[m] - direct[m]));
    CHECK(worst < 1e-8);

    // continuum Fourier transform of sech^2 is pi*xi/sinh(pi*xi/2); as a series
    // coefficient that is divided by the domain length 2*pi*w
    for (int k : {1, 2, 5, 10}) {
        const double xi = g.xi(k);
        const double exact = pi * xi / std::sinh(pi * xi / 2.0) / g.length();
        CHECK(std::abs(f.spectrum()[k].real() - exact) < 1e-12);
        CHECK(std::abs(f.spectrum()[k].imag()) < 1e-12);
    }
}

TEST_CASE("conjugate symmetry holds for real input") {
    const Grid g(256, 5.0);
    const SpectralField f = analyze(random_field(g, 7), g);
    for (int m = 1; m < 256; ++m) {
        const int mirror = (256 - m) % 256;
        CHECK(std::abs(f.spectrum()[m] - std::conj(f.spectrum()[mirror])) < 1e-13);
    }
}

TEST_CASE("analyze rejects length mismatch") {
    const Grid g(64, 1.0);
    std::vector<double> bad(63, 0.0);
    CHECK_THROWS_AS(analyze(bad, g), std::invalid_argument);
}

TEST_CASE("apply_symbol: zero field stays zero") {
    const Grid g(64, 1.0);
    const SpectralField z = SpectralField::zero(g);
    const SpectralField out = apply_symbol(z, symbol_fkdv_dispersion(0.5));
    CHECK(sup_norm(out) == 0.0);
}

TEST_CASE("apply_symbol: i*xi on sin gives cos") {
    const Grid g(128, 1.0);
    const SpectralField f = SpectralField::from_function(g, [](double x) { return std::sin(x); });
    const SpectralField d = apply_symbol(f, symbol_derivative());
    for (int j = 0; j < g.size(); ++j)
        CHECK(d.physical()[j] == doctest::Approx(std::cos(g.node(j))).epsilon(1e-12));
}

TEST_CASE("apply_symbol: even real symbol keeps random fields real, matches direct sums") {
    const Grid g(256, 4.0);
    const SpectralField f = analyze(random_field(g, 99), g);
    const SpectralField out = apply_symbol(f, symbol_fractional(0.5));
    // from_spectrum would have thrown if synthesis drifted off the real axis;
    // cross-check values against naive synthesis of the multiplied spectrum
    cvec hat = f.spectrum();
    for (int m = 0; m < g.size(); ++m) {
        const double axi = g.mode(m) == -128 ? g.nyquist_xi() : std::abs(g.xi(m));
        hat[m] *= std::sqrt(axi);
    }
    const auto direct = naive_synthesis(g, hat);
    CHECK(max_abs_diff(out.physical(), direct) < 1e-10);
}

TEST_CASE("apply_symbol rejects non-finite symbol values") {
    const Grid g(64, 1.0);
    const SpectralField f = SpectralField::from_function(g, [](double x) { return std::sin(x); });
    const FourierSymbol bad(SymbolParity::even, [](double xi) {
        return std::complex<double>(1.0 / xi, 0.0);  // infinite at xi = 0
    });
    CHECK_THROWS_AS(apply_symbol(f, bad), NumericalError);
}

TEST_CASE("fkdv dispersion symbol values") {
    const auto s = symbol_fkdv_dispersion(0.5);
    CHECK(std::abs(s(2.0) - std::complex<double>(0.0, 2.0 * std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(s(0.0)) == 0.0);
    const auto s2 = symbol_fkdv_dispersion(-0.5);
    CHECK(std::abs(s2(4.0) - std::complex<double>(0.0, 2.0)) < 1e-12);
    CHECK_THROWS_AS(symbol_fkdv_dispersion(-1.0), std::invalid_argument);
    // odd and purely imaginary, pointwise
    for (double xi : {0.3, 1.7, 55.0}) {
        CHECK(s(xi).real() == 0.0);
        CHECK(std::abs(s(xi) + s(-xi)) < 1e-14);
    }
}

TEST_CASE("whitham phase speed") {
    CHECK(whitham_phase_speed(0.0, 0.0) == doctest::Approx(1.0));
    CHECK(std::abs(symbol_whitham(0.0)(0.0)) == 0.0);
    CHECK(whitham_phase_speed(1.0, 0.0) == doctest::Approx(std::sqrt(std::tanh(1.0))).epsilon(1e-14));
    CHECK(whitham_phase_speed(1.0, 0.0) == doctest::Approx(0.8727).epsilon(1e-4));
    // high-wavenumber decay ~ |xi|^{-1/2}
    CHECK(whitham_phase_speed(100.0, 0.0) ==
          doctest::Approx(std::pow(100.0, -0.5)).epsilon(0.05));
    CHECK_THROWS_AS(symbol_whitham(-0.1), std::invalid_argument);
    // surface tension raises the phase speed
    CHECK(whitham_phase_speed(2.0, 1.0) > whitham_phase_speed(2.0, 0.0));
}

TEST_CASE("bbm prefactor values") {
    const auto s = symbol_bbm_prefactor(1.0, 1.0);
    CHECK(s(0.0).real() == doctest::Approx(1.0));
    CHECK(s(3.0).real() == doctest::Approx(0.25));
    const auto s2 = symbol_bbm_prefactor(0.2, 0.05);
    CHECK(s2(10.0).real() == doctest::Approx(1.0 / (1.0 + 0.05 * std::pow(10.0, 0.2))).epsilon(1e-12));
    CHECK(s2(10.0).real() == doctest::Approx(0.9266).epsilon(1e-3));
    CHECK_THROWS_AS(symbol_bbm_prefactor(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(symbol_bbm_prefactor(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("dealias: band-limited fields pass through, high modes vanish") {
    const Grid g(128, 1.0);
    {
        cvec hat(g.size(), 0.0);
        hat[3] = {0.2, 0.1};
        hat[g.size() - 3] = std::conj(hat[3]);
        const SpectralField f = SpectralField::from_spectrum(g, hat);
        const SpectralField d = dealias_two_thirds(f);
        for (int m = 0; m < g.size(); ++m)
            CHECK(std::abs(d.spectrum()[m] - f.spectrum()[m]) == 0.0);
    }
    {
        cvec hat(g.size(), 0.0);
        const int m = g.size() / 2 - 1;  // k = n/2 - 1
        hat[m] = {0.5, 0.0};
        hat[g.size() - m] = std::conj(hat[m]);
        const SpectralField f = SpectralField::from_spectrum(g, hat);
        const SpectralField d = dealias_two_thirds(f);
        CHECK(sup_norm(d) == 0.0);
    }
}

TEST_CASE("dealias is an idempotent projection") {
    const Grid g(256, 2.0);
    const SpectralField f = analyze(random_field(g, 5), g);
    const SpectralField once = dealias_two_thirds(f);
    const SpectralField twice = dealias_two_thirds(once);
    for (int m = 0; m < g.size(); ++m) {
        CHECK(once.spectrum()[m] == twice.spectrum()[m]);
        CHECK(std::abs(once.spectrum()[m]) <= std::abs(f.spectrum()[m]) + 1e-18);
    }
}

TEST_CASE("resolution floor") {
    // resolved smooth data: floor below 1e-10
    const Grid wide(1 << 12, 10.0);
    const SpectralField s = SpectralField::from_function(wide, [](double x) {
        const double c = 1.0 / std::cosh(x);
        return c * c;
    });
    CHECK(resolution_floor(s) < 1e-10);

    // a single mode adjacent to Nyquist: floor is 1
    cvec hat(wide.size(), 0.0);
    const int m = wide.size() / 2 - 1;
    hat[m] = {1.0, 0.0};
    hat[wide.size() - m] = {1.0, 0.0};
    const SpectralField spike = SpectralField::from_spectrum(wide, hat);
    CHECK(resolution_floor(spike) == doctest::Approx(1.0));

    CHECK_THROWS_AS(resolution_floor(SpectralField::zero(wide)), std::invalid_argument);
}

TEST_CASE("quadrature: masses and integrals") {
    const Grid g(1 << 12, 15.0);
    const SpectralField s1 = SpectralField::from_function(g, [](double x) {
        const double c = 1.0 / std::cosh(x);
        return c * c;
    });
    const double m1 = l2_norm(s1) * l2_norm(s1);
    CHECK(m1 == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    const SpectralField s3 = SpectralField::from_function(g, [](double x) {
        const double c = 1.0 / std::cosh(x);
        return 3.0 * c * c;
    });
    const double m3 = l2_norm(s3) * l2_norm(s3);
    CHECK(m3 == doctest::Approx(12.0).epsilon(1e-12));

    const Grid g1(128, 1.0);
    const SpectralField sn = SpectralField::from_function(g1, [](double x) { return std::sin(x); });
    CHECK(std::abs(integrate(sn)) < 1e-12);
    CHECK(integrate(s1) == doctest::Approx(2.0).epsilon(1e-12));  // int sech^2 = 2
}

TEST_CASE("Parseval matches physical-space quadrature for smooth fields") {
    const Grid g(1 << 10, 8.0);
    const SpectralField f = SpectralField::from_function(g, [](double x) {
        return std::exp(-x * x / 4.0) * (1.0 + 0.3 * std::sin(2.0 * x));
    });
    double quad = 0.0;
    for (double v : f.physical()) quad += v * v;
    quad = std::sqrt(quad * g.spacing());
    CHECK(l2_norm(f) == doctest::Approx(quad).epsilon(1e-10));
}

TEST_CASE("alpha = 2 dispersion acts as the third-derivative multiplier") {
    const Grid g(128, 1.0);
    // trigonometric polynomial with known third derivative
    const SpectralField f = SpectralField::from_function(g, [](double x) {
        return std::sin(x) + 0.5 * std::cos(3.0 * x) - 0.2 * std::sin(7.0 * x);
    });
    const SpectralField d3 = apply_symbol(f, symbol_fkdv_dispersion(2.0));
    // i*xi*|xi|^2 = -(i xi)^3, so the result is minus the third derivative
    for (int j = 0; j < g.size(); ++j) {
        const double x = g.node(j);
        const double exact = -std::cos(x) + 0.5 * 27.0 * std::sin(3.0 * x) + 0.2 * 343.0 * std::cos(7.0 * x);
        CHECK(d3.physical()[j] == doctest::Approx(-exact).epsilon(1e-10));
    }
}

TEST_CASE("h_alpha seminorm agrees with the derivative norm at alpha = 2") {
    const Grid g(256, 3.0);
    const SpectralField f = SpectralField::from_function(g, [](double x) {
        return std::exp(std::cos(x / 3.0));
    });
    CHECK(h_alpha_seminorm(f, 2.0) == doctest::Approx(grad_l2_norm(f)).epsilon(1e-12));
}

TEST_CASE("from_spectrum rejects non-symmetric spectra") {
    const Grid g(64, 1.0);
    cvec hat(64, 0.0);
    hat[3] = {1.0, 0.0};  // no conjugate partner
    CHECK_THROWS_AS(SpectralField::from_spectrum(g, hat), NumericalError);
}

TEST_CASE("peak location refinement") {
    const Grid g(512, 4.0);
    const double x0 = 0.7341;
    const SpectralField f = SpectralField::from_function(g, [x0](double x) {
        const double c = 1.0 / std::cosh(x - x0);
        return 2.5 * c * c;
    });
    const PeakLocation p = locate_peak(f);
    CHECK(p.x == doctest::Approx(x0).epsilon(1e-3));
    CHECK(p.value == doctest::Approx(2.5).epsilon(1e-4));
}
