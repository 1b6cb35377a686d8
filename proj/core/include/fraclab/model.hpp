#ifndef FRACLAB_MODEL_HPP
#define FRACLAB_MODEL_HPP

#include <string>

#include "fraclab/field.hpp"
#include "fraclab/symbols.hpp"

namespace fraclab {

enum class ModelKind { fkdv, fbbm, whitham };

const char* to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

/** The equation being integrated, in the Fourier form
 *      hat_u_t = L(xi) hat_u + F(u),
 * with L the (purely imaginary) linear multiplier and F the quadratic flux.
 *
 *   fkdv    : L = eps_disp * i*xi*|xi|^alpha,                F = -eps_nl * i*xi * hat(u^2)/2
 *   whitham : L = i*xi*p_S(xi),                              F as for fkdv
 *   fbbm    : L = -i*xi*transport/(1 + bbm_eps*|xi|^alpha),  F = -eps_nl * i*xi/(1 + bbm_eps*|xi|^alpha) * hat(u^2)/2
 */
struct ModelSpec {
    ModelKind kind = ModelKind::fkdv;
    double alpha = 1.0;       // dispersion exponent (ignored for whitham)
    double beta_st = 0.0;     // Whitham surface tension
    double eps_disp = 1.0;    // coefficient on the dispersive term
    double eps_nl = 1.0;      // coefficient on the quadratic nonlinearity
    double transport = 1.0;   // the "+u_x" term (fbbm only), 0 or 1
    double bbm_eps = 1.0;     // eps inside the BBM prefactor

    void validate() const;

    static ModelSpec fkdv(double alpha, double eps_disp = 1.0, double eps_nl = 1.0);
    static ModelSpec fbbm(double alpha, double bbm_eps = 1.0, double eps_nl = 1.0,
                          double transport = 1.0);
    static ModelSpec whitham(double beta_st = 0.0);
};

/** Linear multiplier L(xi) of the model (odd symbol). */
FourierSymbol linear_multiplier(const ModelSpec& model);

/** Multiplier applied to hat(u^2)/2 in the flux (odd symbol). */
FourierSymbol flux_multiplier(const ModelSpec& model);

/** Quadratic term F(u), computed pseudospectrally. With dealias=true the
 *  product spectrum is projected by the 2/3 rule before the flux multiplier. */
SpectralField nonlinear_term(const ModelSpec& model, const SpectralField& u, bool dealias = false);

/** Model Hamiltonian.
 *  fkdv/whitham: int( |D^(alpha/2)u|^2/2 - u^3/6 ) dx, with p_S replacing
 *  |xi|^alpha for whitham. fbbm: (1/2) int( u^2 + u^3/3 ) dx. */
double hamiltonian(const ModelSpec& model, const SpectralField& u);

/** fBBM energy int( u^2 + |D^(alpha/2)u|^2 ) dx. */
double fbbm_energy(const SpectralField& u, double alpha);

/** The conserved quantity used for the accuracy indicator Delta:
 *  the Hamiltonian for fkdv/whitham, the energy for fbbm. */
double conserved_energy(const ModelSpec& model, const SpectralField& u);

/** The model's quadratic invariant: mass int(u^2) for fkdv/whitham, the
 *  energy for fbbm. Gauss collocation preserves these exactly. */
double quadratic_invariant(const ModelSpec& model, const SpectralField& u);

/** Gradient-catastrophe time of the Burgers solution for u0 = beta*sech^2(x):
 *  t_c = 3^(3/2) / (4*|beta|*eps). Returns +infinity for beta = 0. */
double burgers_breakup_time(double beta, double eps);

}  // namespace fraclab

#endif
