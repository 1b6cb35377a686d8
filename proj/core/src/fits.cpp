#include "fraclab/fits.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "fraclab/errors.hpp"

namespace fraclab {

namespace {

// Least squares for a 3-column design matrix by modified Gram-Schmidt QR.
// Returns the coefficient triple; rms receives the residual RMS.
std::array<double, 3> lsq3(const std::vector<std::array<double, 3>>& rows,
                           const std::vector<double>& rhs, double* rms) {
    const std::size_t m = rows.size();
    std::array<std::vector<double>, 3> q;
    for (auto& col : q) col.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        for (int j = 0; j < 3; ++j) q[j][i] = rows[i][j];

    double r[3][3] = {};
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < j; ++i) {
            double dot = 0.0;
            for (std::size_t t = 0; t < m; ++t) dot += q[i][t] * q[j][t];
            r[i][j] = dot;
            for (std::size_t t = 0; t < m; ++t) q[j][t] -= dot * q[i][t];
        }
        double nrm = 0.0;
        for (std::size_t t = 0; t < m; ++t) nrm += q[j][t] * q[j][t];
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) throw FitError("lsq3: rank-deficient design matrix");
        r[j][j] = nrm;
        for (std::size_t t = 0; t < m; ++t) q[j][t] /= nrm;
    }

    double qtb[3];
    for (int j = 0; j < 3; ++j) {
        double dot = 0.0;
        for (std::size_t t = 0; t < m; ++t) dot += q[j][t] * rhs[t];
        qtb[j] = dot;
    }
    std::array<double, 3> coef{};
    for (int j = 2; j >= 0; --j) {
        double s = qtb[j];
        for (int t = j + 1; t < 3; ++t) s -= r[j][t] * coef[t];
        coef[j] = s / r[j][j];
    }
    if (rms) {
        double ss = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double fit =
                coef[0] * rows[i][0] + coef[1] * rows[i][1] + coef[2] * rows[i][2];
            ss += (rhs[i] - fit) * (rhs[i] - fit);
        }
        *rms = std::sqrt(ss / m);
    }
    return coef;
}

struct LineFit {
    double slope, intercept, rms;
};

LineFit lsq_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t m = x.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < m; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw FitError("lsq_line: degenerate abscissas");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = y[i] - (slope * x[i] + intercept);
        ss += r * r;
    }
    return {slope, intercept, std::sqrt(ss / m)};
}

double golden_minimize(const std::function<double(double)>& f, double lo, double hi, int iters) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

AsymptoticFit fit_fourier_asymptotics(const SpectralField& field, double noise_floor) {
    const Grid& grid = field.grid();
    const int n = grid.size();

    // resolved band: positive wavenumbers above the noise floor
    std::vector<int> resolved;
    for (int k = 1; k < n / 2; ++k)
        if (std::abs(field.spectrum()[k]) > noise_floor) resolved.push_back(k);
    if (resolved.size() < 32) {
        std::ostringstream msg;
        msg << "fit_fourier_asymptotics: only " << resolved.size()
            << " positive modes above the noise floor (need 32)";
        throw FitError(msg.str());
    }

    // fit window: from the median resolved wavenumber up to the last resolved one
    const int k_median = resolved[resolved.size() / 2];
    std::vector<std::array<double, 3>> rows;
    std::vector<double> rhs;
    int k_lo = 0, k_hi = 0;
    for (int k : resolved) {
        if (k < k_median) continue;
        const double xi = static_cast<double>(k) / grid.scale();
        rows.push_back({1.0, std::log(xi), xi});
        rhs.push_back(std::log(std::abs(field.spectrum()[k])));
        if (k_lo == 0) k_lo = k;
        k_hi = k;
    }

    AsymptoticFit fit;
    double rms = 0.0;
    const auto coef = lsq3(rows, rhs, &rms);
    fit.offset = coef[0];
    fit.mu_plus_1 = -coef[1];
    fit.delta = -coef[2];
    fit.k_lo = k_lo;
    fit.k_hi = k_hi;
    fit.rms_residual = rms;
    return fit;
}

BlowupFit fit_blowup_norms(std::span<const double> times, std::span<const double> values,
                           double t_lo, double t_hi) {
    if (times.size() != values.size()) throw std::invalid_argument("fit_blowup_norms: size mismatch");
    if (!(t_hi > t_lo)) throw std::invalid_argument("fit_blowup_norms: empty window");
    if (!times.empty() && (t_lo < times.front() - 1e-12 || t_hi > times.back() + 1e-12))
        throw FitError("fit_blowup_norms: window outside the recorded times");

    std::vector<double> t, v;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < t_lo || times[i] > t_hi) continue;
        t.push_back(times[i]);
        v.push_back(values[i]);
    }
    if (t.size() < 20) throw FitError("fit_blowup_norms: fewer than 20 samples in window");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0)) throw FitError("fit_blowup_norms: values must be positive");
        if (i > 0 && v[i] < v[i - 1] * (1.0 - 1e-9))
            throw FitError("fit_blowup_norms: values are not increasing over the window");
    }

    std::vector<double> logv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) logv[i] = std::log(v[i]);

    const double span = t_hi - t_lo;
    auto misfit = [&](double t_star) {
        std::vector<double> x(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) x[i] = std::log(t_star - t[i]);
        return lsq_line(x, logv).rms;
    };

    const double lo = t_hi + 1e-8 * span;
    const double hi = t_hi + 10.0 * span;
    const double t_star = golden_minimize(misfit, lo, hi, 80);

    std::vector<double> x(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) x[i] = std::log(t_star - t[i]);
    const LineFit line = lsq_line(x, logv);

    BlowupFit fit;
    fit.t_star = t_star;
    fit.kappa1 = line.slope;
    fit.kappa2 = line.intercept;
    fit.t_lo = t_lo;
    fit.t_hi = t_hi;
    fit.rms_residual = line.rms;
    fit.boundary = (t_star - lo) < 1e-6 * span || (hi - t_star) < 1e-6 * span;
    return fit;
}

ScalingPrediction predicted_exponents(double alpha, ScalingRegime regime, double gamma) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("predicted_exponents: alpha must lie in (0,1)");
    double denom = 1.0 + alpha;
    if (regime == ScalingRegime::critical) {
        if (!(gamma > 1.0 / (1.0 + alpha)))
            throw std::invalid_argument("predicted_exponents: need gamma > 1/(1+alpha)");
        denom = 1.0 + alpha - 1.0 / gamma;
    }
    return {regime, (2.0 * alpha + 1.0) / denom, alpha / denom};
}

std::vector<double> scaling_factor_L(std::span<const double> grad_l2_series, double alpha) {
    if (grad_l2_series.empty()) throw std::invalid_argument("scaling_factor_L: empty series");
    const double g0 = grad_l2_series.front();
    if (!(g0 > 0.0)) throw FitError("scaling_factor_L: zero gradient norm");
    const double p = 1.0 / (alpha + 0.5);
    std::vector<double> L(grad_l2_series.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (!(grad_l2_series[i] > 0.0)) throw FitError("scaling_factor_L: zero gradient norm");
        L[i] = std::pow(g0 / grad_l2_series[i], p);
    }
    return L;
}

double rescaling_rate_a(const SpectralField& u, double alpha) {
    const double grad = grad_l2_norm(u);
    if (!(grad > 0.0)) throw FitError("rescaling_rate_a: zero gradient");
    const SpectralField uyyy = apply_symbol(u, FourierSymbol(SymbolParity::odd, [](double xi) {
                                                return std::complex<double>(0.0, -xi * xi * xi);
                                            }));
    double integral = 0.0;
    for (int j = 0; j < u.grid().size(); ++j) {
        const double v = u.physical()[j];
        integral += v * v * uyyy.physical()[j];
    }
    integral *= u.grid().spacing();
    return integral / ((2.0 * alpha + 1.0) * grad * grad);
}

double peak_speed_v(const SpectralField& u, double alpha, double u0) {
    const PeakLocation peak = locate_peak(u);
    const SpectralField uyy = apply_symbol(u, FourierSymbol(SymbolParity::even, [](double xi) {
                                               return std::complex<double>(-xi * xi, 0.0);
                                           }));
    // D^alpha u_y: |xi|^alpha * i xi, odd
    const SpectralField dau_y =
        apply_symbol(u, FourierSymbol(SymbolParity::odd, [alpha](double xi) {
                         if (xi == 0.0) return std::complex<double>(0.0, 0.0);
                         return std::complex<double>(0.0, xi * std::pow(std::abs(xi), alpha));
                     }));
    const double curv = uyy.evaluate(peak.x);
    if (std::abs(curv) < 1e-12)
        throw SolverError(SolverError::Kind::degenerate_peak,
                          "peak_speed_v: |U_yy| < 1e-12 at the peak");
    return u0 + dau_y.evaluate(peak.x) / curv;
}

ProfileFitResult blowup_profile_fit(const SpectralField& u, const SolitonProfile& q1,
                                    double alpha) {
    const auto humps = [&] {
        const PeakLocation p = locate_peak(u);
        if (!(p.value > 0.0)) throw NumericalError("blowup_profile_fit: no dominant peak");
        return p;
    }();

    const double q10 = q1.values.evaluate(0.0);
    const double L = std::pow(q10 / humps.value, 1.0 / alpha);
    const Grid& grid = u.grid();

    // misfit of u against L^(-alpha) Q1((x - x_m)/L) over a window of width 20 L
    const int half = std::max(2, static_cast<int>(std::lround(10.0 * L / grid.spacing())));
    const int count = std::min(2 * half + 1, grid.size());
    const int j_lo = humps.index - count / 2;
    const double x_lo = grid.node(0) + j_lo * grid.spacing();
    const double amp = std::pow(L, -alpha);

    const std::vector<double> model =
        q1.values.evaluate_affine((x_lo - humps.x) / L, grid.spacing() / L, count);
    double misfit = 0.0;
    for (int i = 0; i < count; ++i) {
        const int j = ((j_lo + i) % grid.size() + grid.size()) % grid.size();
        misfit = std::max(misfit, std::abs(u.physical()[j] - amp * model[i]));
    }
    return {L, humps.x, misfit};
}

double singularity_time_from_delta(std::span<const double> times, std::span<const double> deltas,
                                   double threshold) {
    if (times.size() != deltas.size())
        throw std::invalid_argument("singularity_time_from_delta: size mismatch");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!std::isfinite(deltas[i - 1]) || !std::isfinite(deltas[i])) continue;
        if (deltas[i - 1] > threshold && deltas[i] <= threshold) {
            const double f = (deltas[i - 1] - threshold) / (deltas[i - 1] - deltas[i]);
            return times[i - 1] + f * (times[i] - times[i - 1]);
        }
    }
    throw FitError("singularity_time_from_delta: no crossing of the threshold");
}

LogLogFit loglog_regression(std::span<const double> eps, std::span<const double> t_star) {
    if (eps.size() != t_star.size())
        throw std::invalid_argument("loglog_regression: size mismatch");
    if (eps.size() < 3) throw FitError("loglog_regression: need at least 3 points");
    std::vector<double> x(eps.size()), y(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!(eps[i] > 0.0) || !(t_star[i] > 0.0))
            throw FitError("loglog_regression: data must be positive");
        x[i] = std::log10(eps[i]);
        y[i] = std::log10(t_star[i]);
    }
    const std::size_t m = x.size();
    const LineFit line = lsq_line(x, y);

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) { mx += x[i]; my += y[i]; }
    mx /= m; my /= m;
    double sxx = 0.0, syy = 0.0, sxy = 0.0, ss_res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
        sxy += (x[i] - mx) * (y[i] - my);
        const double r = y[i] - (line.slope * x[i] + line.intercept);
        ss_res += r * r;
    }

    LogLogFit fit;
    fit.a = line.slope;
    fit.b = line.intercept;
    fit.rms_residual = line.rms;
    fit.sigma_a = m > 2 ? std::sqrt(ss_res / (m - 2) / sxx) : 0.0;
    fit.r = syy > 0.0 ? sxy / std::sqrt(sxx * syy) : 0.0;
    return fit;
}

}  // namespace fraclab
