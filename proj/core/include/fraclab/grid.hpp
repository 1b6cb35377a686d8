#ifndef FRACLAB_GRID_HPP
#define FRACLAB_GRID_HPP

#include <numbers>
#include <stdexcept>
#include <vector>

namespace fraclab {

/** Uniform periodic grid on x in w*[-pi, pi).
 *
 * Collocation nodes are x_j = w*(-pi + 2*pi*j/n) for j = 0..n-1, and the
 * associated wavenumbers are xi_k = k/w for integer k. Spectral data is kept
 * in transform order: storage index m holds k = m for m < n/2 and k = m - n
 * for m >= n/2, so for n = 8 the k sequence is {0,1,2,3,-4,-3,-2,-1}.
 */
class Grid {
  public:
    Grid(int n, double w) : n_(n), w_(w) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("Grid: n must be a power of two with n >= 8");
        if (!(w > 0.0))
            throw std::invalid_argument("Grid: domain scale w must be positive");
    }

    int size() const { return n_; }
    double scale() const { return w_; }

    /** Physical length of the periodic domain, 2*pi*w. */
    double length() const { return 2.0 * std::numbers::pi * w_; }
    /** Node spacing, 2*pi*w/n. */
    double spacing() const { return length() / n_; }

    double node(int j) const { return w_ * (-std::numbers::pi + 2.0 * std::numbers::pi * j / n_); }

    /** Signed integer wavenumber k for storage index m. */
    int mode(int m) const { return m < n_ / 2 ? m : m - n_; }
    /** Continuous wavenumber xi_k = k/w for storage index m. */
    double xi(int m) const { return mode(m) / w_; }
    /** |xi| of the unpaired Nyquist mode, (n/2)/w. */
    double nyquist_xi() const { return (n_ / 2) / w_; }

    std::vector<double> nodes() const {
        std::vector<double> x(n_);
        for (int j = 0; j < n_; ++j) x[j] = node(j);
        return x;
    }

    std::vector<double> wavenumbers() const {
        std::vector<double> k(n_);
        for (int m = 0; m < n_; ++m) k[m] = xi(m);
        return k;
    }

    bool operator==(const Grid&) const = default;

  private:
    int n_;
    double w_;
};

inline Grid make_grid(int n, double w) { return Grid(n, w); }

}  // namespace fraclab

#endif
