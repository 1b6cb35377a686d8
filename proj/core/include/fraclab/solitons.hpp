#ifndef FRACLAB_SOLITONS_HPP
#define FRACLAB_SOLITONS_HPP

#include <vector>

#include "fraclab/field.hpp"
#include "fraclab/gmres.hpp"
#include "fraclab/symbols.hpp"

namespace fraclab {

/** A solitary-wave profile Q_c solving p(D)Q + c Q - Q^2/2 = 0. */
struct SolitonProfile {
    enum class Provenance { analytic, newton, continuation };

    double alpha = 1.0;
    double c = 1.0;
    SpectralField values;
    double residual_norm = 0.0;
    Provenance provenance = Provenance::analytic;
    int newton_iterations = 0;                  // of the final solve
    std::vector<double> residual_history;       // sup|F| after each Newton update
};

/** Benjamin-Ono soliton Q_c(x) = 4c/(1 + (c x)^2), exact for alpha = 1. */
SpectralField bo_soliton(double c, const Grid& grid);
SolitonProfile bo_soliton_profile(double c, const Grid& grid);

/** fBBM travelling wave for alpha = 1 at t = 0:
 *  u(x) = 4(c-1)/(1 + ct^2 x^2) with ct = 1 - 1/c. Requires c > 1. */
SpectralField fbbm_bo_soliton(double c, const Grid& grid);

/** KdV soliton of u_t + u u_x - (1/6) u_xxx = 0 (the long-wave Whitham limit):
 *  Q_c(x) = 3(c+1) sech^2( sqrt(-1.5(c+1)) x ). Requires c + 1 < 0. */
SpectralField kdv_soliton(double c, const Grid& grid);

/** Residual field F with hat F = (p(xi) + c) hat Q - hat(Q^2)/2. */
SpectralField soliton_residual(const SpectralField& q, const FourierSymbol& dispersion, double c);

struct NewtonOptions {
    double tol = 1e-8;     // stop when sup|F| < tol
    int max_iter = 50;
    int stall_window = 3;  // error out after this many non-improving iterations
    GmresOptions gmres{};
};

/** Newton iteration hat Q <- hat Q - Jac^{-1} F(hat Q) with the linear solve by
 *  GMRES on the Jacobian action  X -> (p(xi) + c) hat X - hat(Q X).
 *  Throws SolverError on stall, GMRES breakdown, or convergence to the trivial
 *  zero solution. */
SolitonProfile newton_gmres_soliton(const SpectralField& initial, const FourierSymbol& dispersion,
                                    double c, const NewtonOptions& options = {},
                                    double alpha_tag = 1.0);

struct ContinuationOptions {
    double c = 1.0;
    double w = 100.0;
    int n = 0;              // 0: 2^14 for alpha >= 0.6, 2^18 below
    NewtonOptions newton{};
};

/** Walk alpha down from `from.alpha` to alpha_target, re-solving at each step
 *  with the previous profile as the initial iterate (0.1 steps down to 0.6,
 *  0.01 steps below; on failure the step is halved, giving up below 1e-3). */
SolitonProfile continue_alpha_path(SolitonProfile from, double alpha_target,
                                   const NewtonOptions& options = {});

/** Continuation from the exact BO soliton at alpha = 1, c = 1. Valid targets
 *  lie in [0.4, 1]. */
SolitonProfile continue_in_alpha(double alpha_target, const ContinuationOptions& options = {});

/** Speed rescaling Q_c(z) = c Q_1(z c^(1/alpha)), sampled on the same grid by
 *  spectral interpolation. */
SpectralField rescale_soliton(const SolitonProfile& q1, double c);

struct FamilyRow {
    double alpha;
    double peak;
    double mass;     // int Q^2
    double energy;   // int(|D^(alpha/2)Q|^2/2 - Q^3/6)
};

/** Mass/energy table along the c = 1 family (monotone: mass increases with
 *  alpha, energy decreases). */
std::vector<FamilyRow> soliton_family_scan(std::vector<double> alphas,
                                           const ContinuationOptions& options = {});

/** Which travelling-wave family a hump is matched against. */
enum class WaveFamily { fkdv, fbbm };

struct HumpFit {
    double location;   // refined peak abscissa
    double peak;       // refined peak value
    double c_fit;      // speed matching the peak height
    double misfit;     // max-norm misfit over a window of width 10 L around the peak
};

/** Detect humps (local maxima above 10% of the global maximum, separated by at
 *  least 32 nodes) and fit shifted/rescaled solitons to each. */
std::vector<HumpFit> fit_solitons_to_humps(const SpectralField& u, double alpha,
                                           const SolitonProfile& unit_profile,
                                           WaveFamily family = WaveFamily::fkdv);

}  // namespace fraclab

#endif
