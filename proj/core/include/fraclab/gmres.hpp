#ifndef FRACLAB_GMRES_HPP
#define FRACLAB_GMRES_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace fraclab {

struct GmresOptions {
    double rel_tol = 1e-10;
    int restart = 50;
    int max_iter = 400;
};

struct GmresReport {
    bool converged = false;
    int iterations = 0;
    double rel_residual = 0.0;
    bool breakdown = false;
};

using LinearOperator =
    std::function<void(std::span<const std::complex<double>>, std::span<std::complex<double>>)>;

/** Restarted GMRES for a matrix-free complex operator. x holds the initial
 *  guess on entry and the solution on exit. */
GmresReport gmres_solve(const LinearOperator& apply, std::span<const std::complex<double>> rhs,
                        std::vector<std::complex<double>>& x, const GmresOptions& options = {});

}  // namespace fraclab

#endif
