#include "fraclab/solitons.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fraclab/errors.hpp"

namespace fraclab {

namespace {

// The profile equation is solved for the coefficient vector, so the stopping
// norm is the max-norm over spectral coefficients.
double residual_max_norm(const SpectralField& f) {
    double m = 0.0;
    for (const auto& z : f.spectrum()) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace

SpectralField bo_soliton(double c, const Grid& grid) {
    if (!(c > 0.0)) throw std::invalid_argument("bo_soliton: need c > 0");
    return SpectralField::from_function(
        grid, [c](double x) { return 4.0 * c / (1.0 + c * c * x * x); });
}

SolitonProfile bo_soliton_profile(double c, const Grid& grid) {
    SolitonProfile p;
    p.alpha = 1.0;
    p.c = c;
    p.values = bo_soliton(c, grid);
    p.residual_norm = residual_max_norm(soliton_residual(p.values, symbol_fractional(1.0), c));
    p.provenance = SolitonProfile::Provenance::analytic;
    return p;
}

SpectralField fbbm_bo_soliton(double c, const Grid& grid) {
    if (!(c > 1.0)) throw std::invalid_argument("fbbm_bo_soliton: need c > 1");
    const double ct = 1.0 - 1.0 / c;
    return SpectralField::from_function(
        grid, [c, ct](double x) { return 4.0 * (c - 1.0) / (1.0 + ct * ct * x * x); });
}

SpectralField kdv_soliton(double c, const Grid& grid) {
    if (!(c + 1.0 < 0.0)) throw std::invalid_argument("kdv_soliton: need c + 1 < 0");
    const double k = std::sqrt(-1.5 * (c + 1.0));
    return SpectralField::from_function(grid, [c, k](double x) {
        const double s = 1.0 / std::cosh(k * x);
        return 3.0 * (c + 1.0) * s * s;
    });
}

SpectralField soliton_residual(const SpectralField& q, const FourierSymbol& dispersion, double c) {
    const Grid& grid = q.grid();
    const int n = grid.size();
    const auto p = symbol_table(dispersion, grid);

    std::vector<double> half_sq(n);
    for (int j = 0; j < n; ++j) {
        const double v = q.physical()[j];
        half_sq[j] = 0.5 * v * v;
    }
    cvec sq_hat(n);
    spectral::to_spectrum(grid, half_sq, sq_hat);

    cvec f(n);
    for (int m = 0; m < n; ++m) f[m] = (p[m] + c) * q.spectrum()[m] - sq_hat[m];
    return SpectralField::from_spectrum(grid, std::move(f));
}

SolitonProfile newton_gmres_soliton(const SpectralField& initial, const FourierSymbol& dispersion,
                                    double c, const NewtonOptions& options, double alpha_tag) {
    const Grid& grid = initial.grid();
    const int n = grid.size();
    const auto p = symbol_table(dispersion, grid);

    SpectralField q = initial;
    double residual = residual_max_norm(soliton_residual(q, dispersion, c));
    double best = residual;
    int since_improvement = 0;
    int iterations = 0;
    std::vector<double> history;

    std::vector<double> qx(n), xphys(n);
    cvec work(n);

    while (residual >= options.tol) {
        if (iterations >= options.max_iter)
            throw SolverError(SolverError::Kind::newton_stall,
                              "newton_gmres_soliton: iteration limit reached");

        // Jacobian action at the current iterate: X -> (p + c) X^ - (Q X)^
        const std::vector<double>& qphys = q.physical();
        LinearOperator jac = [&](std::span<const std::complex<double>> xin,
                                 std::span<std::complex<double>> out) {
            spectral::to_physical(grid, xin, xphys);
            for (int j = 0; j < n; ++j) xphys[j] *= qphys[j];
            spectral::to_spectrum(grid, xphys, out);
            for (int m = 0; m < n; ++m) out[m] = (p[m] + c) * xin[m] - out[m];
        };

        const SpectralField f = soliton_residual(q, dispersion, c);
        std::vector<std::complex<double>> dq(n, {0.0, 0.0});
        const GmresReport rep = gmres_solve(jac, f.spectrum(), dq, options.gmres);
        if (!rep.converged) {
            std::ostringstream msg;
            msg << "newton_gmres_soliton: GMRES " << (rep.breakdown ? "breakdown" : "stagnation")
                << " (relative residual " << rep.rel_residual << ")";
            throw SolverError(SolverError::Kind::gmres_breakdown, msg.str());
        }

        cvec qhat = q.spectrum();
        for (int m = 0; m < n; ++m) qhat[m] -= dq[m];
        // GMRES roundoff leaves a tiny conjugate-asymmetric component; project
        // back onto real fields
        for (int m = 1; m <= n / 2; ++m) {
            const int mm = (n - m) % n;
            const std::complex<double> sym = 0.5 * (qhat[m] + std::conj(qhat[mm]));
            qhat[m] = sym;
            qhat[mm] = std::conj(sym);
        }
        qhat[0] = qhat[0].real();
        q = SpectralField::from_spectrum(grid, std::move(qhat));
        ++iterations;

        residual = residual_max_norm(soliton_residual(q, dispersion, c));
        history.push_back(residual);
        if (residual < best) {
            best = residual;
            since_improvement = 0;
        } else if (++since_improvement >= options.stall_window) {
            std::ostringstream msg;
            msg << "newton_gmres_soliton: no residual decrease over " << options.stall_window
                << " iterations (residual " << residual << ")";
            throw SolverError(SolverError::Kind::newton_stall, msg.str());
        }
    }

    if (sup_norm(q) < 1e-6)
        throw SolverError(SolverError::Kind::converged_to_zero,
                          "newton_gmres_soliton: converged to the trivial zero solution");

    SolitonProfile profile;
    profile.alpha = alpha_tag;
    profile.c = c;
    profile.values = std::move(q);
    profile.residual_norm = residual;
    profile.provenance = SolitonProfile::Provenance::newton;
    profile.newton_iterations = iterations;
    profile.residual_history = std::move(history);
    return profile;
}

SolitonProfile continue_alpha_path(SolitonProfile from, double alpha_target,
                                   const NewtonOptions& options) {
    double alpha = from.alpha;
    if (alpha_target > alpha)
        throw std::invalid_argument("continue_alpha_path: target above the starting alpha");

    while (alpha > alpha_target + 1e-12) {
        const double coarse = alpha > 0.6 + 1e-9 ? 0.1 : 0.01;
        double next = std::max(alpha - coarse, alpha_target);
        if (alpha > 0.6 && next < 0.6) next = 0.6;

        double step = alpha - next;
        for (;;) {
            const double attempt = alpha - step;
            try {
                SolitonProfile p = newton_gmres_soliton(from.values, symbol_fractional(attempt),
                                                        from.c, options, attempt);
                p.provenance = SolitonProfile::Provenance::continuation;
                from = std::move(p);
                alpha = attempt;
                break;
            } catch (SolverError& err) {
                step *= 0.5;
                if (step < 1e-3) {
                    err.alpha = attempt;
                    err.has_alpha = true;
                    throw;
                }
            }
        }
    }
    return from;
}

SolitonProfile continue_in_alpha(double alpha_target, const ContinuationOptions& options) {
    if (!(alpha_target >= 0.4) || !(alpha_target <= 1.0))
        throw std::invalid_argument("continue_in_alpha: target must lie in [0.4, 1]");
    const int n = options.n > 0 ? options.n : (alpha_target >= 0.6 ? 1 << 14 : 1 << 18);
    const Grid grid(n, options.w);
    SolitonProfile start = bo_soliton_profile(options.c, grid);
    if (alpha_target == 1.0) return start;
    return continue_alpha_path(std::move(start), alpha_target, options.newton);
}

SpectralField rescale_soliton(const SolitonProfile& q1, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("rescale_soliton: need c > 0");
    const Grid& grid = q1.values.grid();
    if (c == 1.0) return q1.values;
    const double stretch = std::pow(c, 1.0 / q1.alpha);
    const int n = grid.size();
    const double edge = grid.scale() * std::numbers::pi;

    // Stretched coordinates outside the principal period would wrap around
    // and alias soliton images back in; clamp them to the far-tail value.
    std::vector<double> vals(n, q1.values.evaluate(edge));
    int j_lo = 0, j_hi = n - 1;  // contiguous block with |x_j * stretch| <= edge
    if (stretch > 1.0) {
        const double x_max = edge / stretch;
        j_lo = static_cast<int>(std::ceil((-x_max - grid.node(0)) / grid.spacing()));
        j_hi = static_cast<int>(std::floor((x_max - grid.node(0)) / grid.spacing()));
        j_lo = std::max(j_lo, 0);
        j_hi = std::min(j_hi, n - 1);
    }
    const int count = j_hi - j_lo + 1;
    const std::vector<double> inner =
        q1.values.evaluate_affine(grid.node(j_lo) * stretch, grid.spacing() * stretch, count);
    for (int i = 0; i < count; ++i) vals[j_lo + i] = inner[i];
    for (double& v : vals) v *= c;
    return SpectralField::from_samples(grid, std::move(vals));
}

std::vector<FamilyRow> soliton_family_scan(std::vector<double> alphas,
                                           const ContinuationOptions& options) {
    std::sort(alphas.begin(), alphas.end(), std::greater<double>());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    if (alphas.empty()) return {};
    if (!(alphas.front() <= 1.0) || !(alphas.back() >= 0.4))
        throw std::invalid_argument("soliton_family_scan: alphas must lie in [0.4, 1]");

    const int n = options.n > 0 ? options.n : (alphas.back() >= 0.6 ? 1 << 14 : 1 << 18);
    const Grid grid(n, options.w);
    SolitonProfile current = bo_soliton_profile(options.c, grid);

    std::vector<FamilyRow> rows;
    for (double a : alphas) {
        current = a == 1.0 ? std::move(current)
                           : continue_alpha_path(std::move(current), a, options.newton);
        const double mass = l2_norm(current.values);
        const double semi = h_alpha_seminorm(current.values, a);
        rows.push_back({a, sup_norm(current.values), mass * mass,
                        0.5 * semi * semi - integral_cubed(current.values) / 6.0});
    }
    return rows;
}

namespace {

// local maxima above 10% of the global max, at least 32 nodes apart
std::vector<PeakLocation> detect_humps(const SpectralField& u) {
    const auto& v = u.physical();
    const int n = u.grid().size();
    double global = *std::max_element(v.begin(), v.end());
    if (!(global > 0.0)) return {};

    std::vector<int> candidates;
    for (int j = 0; j < n; ++j) {
        const double l = v[(j + n - 1) % n], r = v[(j + 1) % n];
        if (v[j] > l && v[j] >= r && v[j] >= 0.1 * global) candidates.push_back(j);
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](int a, int b) { return v[a] > v[b]; });

    std::vector<int> kept;
    for (int j : candidates) {
        bool ok = true;
        for (int k : kept) {
            const int d = std::abs(j - k);
            if (std::min(d, n - d) < 32) { ok = false; break; }
        }
        if (ok) kept.push_back(j);
    }
    std::sort(kept.begin(), kept.end());

    std::vector<PeakLocation> humps;
    for (int j : kept) {
        const double um = v[(j + n - 1) % n], u0 = v[j], up = v[(j + 1) % n];
        const double curv = um - 2.0 * u0 + up;
        double x = u.grid().node(j), val = u0;
        if (std::abs(curv) > 1e-300) {
            x += 0.5 * (um - up) / curv * u.grid().spacing();
            val = u0 - 0.125 * (up - um) * (up - um) / curv;
        }
        humps.push_back({j, x, val});
    }
    return humps;
}

}  // namespace

std::vector<HumpFit> fit_solitons_to_humps(const SpectralField& u, double alpha,
                                           const SolitonProfile& unit_profile, WaveFamily family) {
    const auto humps = detect_humps(u);
    if (humps.empty()) throw NumericalError("fit_solitons_to_humps: no humps found");

    const double q10 = unit_profile.values.evaluate(0.0);
    const Grid& grid = u.grid();
    std::vector<HumpFit> fits;
    for (const PeakLocation& hump : humps) {
        // speed matching the peak height, then the self-similar width scale
        double c = 0.0, amp = 0.0, stretch = 0.0;
        if (family == WaveFamily::fkdv) {
            c = hump.value / q10;                      // peak = c Q1(0)
            amp = c;
            stretch = std::pow(c, 1.0 / alpha);
        } else {
            c = 1.0 + hump.value / q10;                // peak = (c-1) Q1(0)
            const double ct = 1.0 - 1.0 / c;
            amp = c * ct;
            stretch = std::pow(ct, 1.0 / alpha);
        }
        const double width = 1.0 / stretch;

        // window of width 10 L on the grid lattice, centered at the peak
        const int half = std::max(2, static_cast<int>(std::lround(5.0 * width / grid.spacing())));
        const int count = std::min(2 * half + 1, grid.size());
        const int j_lo = hump.index - count / 2;
        const double x_lo = grid.node(0) + j_lo * grid.spacing();

        const std::vector<double> model = unit_profile.values.evaluate_affine(
            (x_lo - hump.x) * stretch, grid.spacing() * stretch, count);

        double misfit = 0.0;
        for (int i = 0; i < count; ++i) {
            const int j = ((j_lo + i) % grid.size() + grid.size()) % grid.size();
            misfit = std::max(misfit, std::abs(u.physical()[j] - amp * model[i]));
        }
        fits.push_back({hump.x, hump.value, c, misfit});
    }
    return fits;
}

}  // namespace fraclab
