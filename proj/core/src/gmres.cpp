#include "fraclab/gmres.hpp"

#include <cmath>
#include <stdexcept>

namespace fraclab {

namespace {

using cd = std::complex<double>;

double norm2(std::span<const cd> v) {
    double s = 0.0;
    for (const cd& z : v) s += std::norm(z);
    return std::sqrt(s);
}

cd dot(std::span<const cd> a, std::span<const cd> b) {
    cd s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

}  // namespace

GmresReport gmres_solve(const LinearOperator& apply, std::span<const cd> rhs,
                        std::vector<cd>& x, const GmresOptions& options) {
    const std::size_t n = rhs.size();
    if (x.size() != n) throw std::invalid_argument("gmres_solve: size mismatch");
    const int restart = std::max(1, options.restart);

    GmresReport report;
    const double bnorm = norm2(rhs);
    if (bnorm == 0.0) {
        std::fill(x.begin(), x.end(), cd{0.0, 0.0});
        report.converged = true;
        return report;
    }

    std::vector<std::vector<cd>> basis(restart + 1, std::vector<cd>(n));
    // Hessenberg kept column-wise: hess[j] has j+2 entries for Arnoldi step j.
    std::vector<std::vector<cd>> hess(restart);
    std::vector<cd> givens_c(restart), givens_s(restart), g(restart + 1);
    std::vector<cd> work(n);

    while (report.iterations < options.max_iter) {
        // residual of the current iterate
        apply(x, work);
        for (std::size_t i = 0; i < n; ++i) work[i] = rhs[i] - work[i];
        double rnorm = norm2(work);
        report.rel_residual = rnorm / bnorm;
        if (report.rel_residual < options.rel_tol) {
            report.converged = true;
            return report;
        }

        for (std::size_t i = 0; i < n; ++i) basis[0][i] = work[i] / rnorm;
        std::fill(g.begin(), g.end(), cd{0.0, 0.0});
        g[0] = rnorm;

        int j = 0;
        bool happy = false;
        for (; j < restart && report.iterations < options.max_iter; ++j) {
            ++report.iterations;
            apply(basis[j], work);
            hess[j].assign(j + 2, cd{0.0, 0.0});
            // modified Gram-Schmidt
            for (int i = 0; i <= j; ++i) {
                const cd h = dot(basis[i], work);
                hess[j][i] = h;
                for (std::size_t t = 0; t < n; ++t) work[t] -= h * basis[i][t];
            }
            const double hnext = norm2(work);
            hess[j][j + 1] = hnext;
            if (hnext > 1e-14 * bnorm) {
                for (std::size_t t = 0; t < n; ++t) basis[j + 1][t] = work[t] / hnext;
            } else {
                happy = true;  // invariant subspace reached
            }

            // apply accumulated Givens rotations to the new column
            for (int i = 0; i < j; ++i) {
                const cd tmp = std::conj(givens_c[i]) * hess[j][i] +
                               std::conj(givens_s[i]) * hess[j][i + 1];
                hess[j][i + 1] = -givens_s[i] * hess[j][i] + givens_c[i] * hess[j][i + 1];
                hess[j][i] = tmp;
            }
            const cd h0 = hess[j][j];
            const cd h1 = hess[j][j + 1];
            const double denom = std::sqrt(std::norm(h0) + std::norm(h1));
            if (denom == 0.0) {
                report.breakdown = true;
                return report;
            }
            givens_c[j] = h0 / denom;
            givens_s[j] = h1 / denom;
            hess[j][j] = std::conj(givens_c[j]) * h0 + std::conj(givens_s[j]) * h1;
            hess[j][j + 1] = 0.0;
            g[j + 1] = -givens_s[j] * g[j];
            g[j] = std::conj(givens_c[j]) * g[j];

            report.rel_residual = std::abs(g[j + 1]) / bnorm;
            if (report.rel_residual < options.rel_tol || happy) {
                ++j;
                break;
            }
        }

        // back-substitute and update x
        std::vector<cd> y(j);
        for (int i = j - 1; i >= 0; --i) {
            cd s = g[i];
            for (int t = i + 1; t < j; ++t) s -= hess[t][i] * y[t];
            if (std::abs(hess[i][i]) == 0.0) {
                report.breakdown = true;
                return report;
            }
            y[i] = s / hess[i][i];
        }
        for (int i = 0; i < j; ++i)
            for (std::size_t t = 0; t < n; ++t) x[t] += y[i] * basis[i][t];

        if (report.rel_residual < options.rel_tol || happy) {
            report.converged = report.rel_residual < options.rel_tol || happy;
            return report;
        }
    }

    // final residual check
    apply(x, work);
    for (std::size_t i = 0; i < n; ++i) work[i] = rhs[i] - work[i];
    report.rel_residual = norm2(work) / bnorm;
    report.converged = report.rel_residual < options.rel_tol;
    return report;
}

}  // namespace fraclab
