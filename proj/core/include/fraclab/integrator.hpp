#ifndef FRACLAB_INTEGRATOR_HPP
#define FRACLAB_INTEGRATOR_HPP

#include "fraclab/model.hpp"

namespace fraclab {

enum class StepStatus { ok, newton_divergence, non_finite };

struct StageControls {
    double tol = 1e-12;    // max-norm tolerance on the stage increment (spectral)
    int max_iter = 30;
    bool dealias = false;
};

/** One step of the two-stage Gauss collocation scheme (classical order 4).
 *
 * Butcher data: a11 = a22 = 1/4, a12 = 1/4 - sqrt(3)/6, a21 = 1/4 + sqrt(3)/6,
 * c = 1/2 -+ sqrt(3)/6, weights h/2 each. The stage system is solved by a
 * simplified Newton iteration: the 2x2 block matrix
 *     [[1 - h*a11*L, -h*a12*L], [-h*a21*L, 1 - h*a22*L]]
 * is inverted in closed form per mode (L is diagonal in xi) and applied to the
 * right-hand side evaluated at the current stage iterate, until the spectral
 * max-norm change of (K1, K2) falls below the tolerance.
 */
class GaussStepper {
  public:
    GaussStepper(const ModelSpec& model, const Grid& grid, double dt, StageControls controls = {});

    /** Advance one step in place. On failure the state is left unchanged. */
    StepStatus step(cvec& uhat);

    /** Stage iterations used by the last successful or failed step. */
    int last_iterations() const { return last_iterations_; }

    /** Replace the advection shift: L <- L_base + i*xi*v (commoving frame). */
    void set_advection_shift(double v);

    double dt() const { return dt_; }
    const Grid& grid() const { return grid_; }

  private:
    void rebuild_stage_inverse();
    void flux(const cvec& vhat, cvec& out);

    ModelSpec model_;
    Grid grid_;
    double dt_;
    StageControls controls_;
    int last_iterations_ = 0;

    // all spectral workspaces hold the k = 0..n/2 half spectrum
    cvec lin_base_;                      // model multiplier on the grid
    cvec lin_;                           // with advection shift
    cvec flux_table_;                    // flux multiplier on the grid
    cvec inv11_, inv12_, inv21_, inv22_; // closed-form stage-matrix inverse
    cvec k1_, k2_, n1_, n2_, arg_, slope_, uh_;
    std::vector<double> phys_;
};

}  // namespace fraclab

#endif
