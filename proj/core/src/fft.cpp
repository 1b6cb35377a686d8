#include "fraclab/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace fraclab::detail {

namespace {

// The FFTW planner is not reentrant; plan creation/destruction is serialized.
std::mutex planner_mutex;

struct PlanEntry {
    explicit PlanEntry(int n_) : n(n_) {
        in = fftw_alloc_complex(n);
        out = fftw_alloc_complex(n);
        real = fftw_alloc_real(n);
        half = fftw_alloc_complex(n / 2 + 1);
        std::lock_guard<std::mutex> lock(planner_mutex);
        fwd = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
        r2c = fftw_plan_dft_r2c_1d(n, real, half, FFTW_ESTIMATE);
        c2r = fftw_plan_dft_c2r_1d(n, half, real, FFTW_ESTIMATE);
    }

    ~PlanEntry() {
        {
            std::lock_guard<std::mutex> lock(planner_mutex);
            if (fwd) fftw_destroy_plan(fwd);
            if (bwd) fftw_destroy_plan(bwd);
            if (r2c) fftw_destroy_plan(r2c);
            if (c2r) fftw_destroy_plan(c2r);
        }
        fftw_free(in);
        fftw_free(out);
        fftw_free(real);
        fftw_free(half);
    }

    PlanEntry(const PlanEntry&) = delete;
    PlanEntry& operator=(const PlanEntry&) = delete;

    int n;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    double* real = nullptr;
    fftw_complex* half = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

// One cache per thread: concurrent runs never share plans or buffers.
PlanEntry& entry_for(int n) {
    thread_local std::map<int, std::unique_ptr<PlanEntry>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<PlanEntry>(n);
    return *slot;
}

void execute(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
             bool forward) {
    const int n = static_cast<int>(in.size());
    if (out.size() != in.size()) throw std::invalid_argument("dft: size mismatch");
    PlanEntry& e = entry_for(n);
    std::memcpy(e.in, in.data(), sizeof(fftw_complex) * n);
    fftw_execute(forward ? e.fwd : e.bwd);
    std::memcpy(out.data(), e.out, sizeof(fftw_complex) * n);
}

}  // namespace

void dft_forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    execute(in, out, true);
}

void dft_backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    execute(in, out, false);
}

void rdft_forward(std::span<const double> in, std::span<std::complex<double>> out) {
    const int n = static_cast<int>(in.size());
    if (static_cast<int>(out.size()) != n / 2 + 1)
        throw std::invalid_argument("rdft_forward: output must hold n/2+1 coefficients");
    PlanEntry& e = entry_for(n);
    std::memcpy(e.real, in.data(), sizeof(double) * n);
    fftw_execute(e.r2c);
    std::memcpy(out.data(), e.half, sizeof(fftw_complex) * (n / 2 + 1));
}

void rdft_backward(std::span<const std::complex<double>> in, std::span<double> out) {
    const int n = static_cast<int>(out.size());
    if (static_cast<int>(in.size()) != n / 2 + 1)
        throw std::invalid_argument("rdft_backward: input must hold n/2+1 coefficients");
    PlanEntry& e = entry_for(n);
    std::memcpy(e.half, in.data(), sizeof(fftw_complex) * (n / 2 + 1));
    fftw_execute(e.c2r);
    std::memcpy(out.data(), e.real, sizeof(double) * n);
}

}  // namespace fraclab::detail
