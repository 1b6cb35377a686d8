#ifndef FRACLAB_FFT_HPP
#define FRACLAB_FFT_HPP

#include <complex>
#include <span>

namespace fraclab::detail {

/** Unnormalized DFT, out_k = sum_j in_j exp(-2*pi*i*j*k/n). Power-of-two n. */
void dft_forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

/** Unnormalized inverse kernel, out_j = sum_k in_k exp(+2*pi*i*j*k/n). */
void dft_backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

/** Real-input DFT: out_k for k = 0..n/2 (length n/2+1), unnormalized. */
void rdft_forward(std::span<const double> in, std::span<std::complex<double>> out);

/** Inverse of rdft_forward (unnormalized); `in` holds n/2+1 coefficients. */
void rdft_backward(std::span<const std::complex<double>> in, std::span<double> out);

}  // namespace fraclab::detail

#endif
