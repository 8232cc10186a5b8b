#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace wgqed::kernels {

using cplx = std::complex<double>;

// Data-parallel inner loops shared by the quadrature, finite-time transform
// and pulse-synthesis paths. Every kernel exists as a scalar reference and,
// on x86-64 with AVX2+FMA, as a vectorized variant selected at runtime.
// The two variants are equivalence-tested against each other and against an
// exact per-element evaluation.
//
//   phased_sum   : sum_m a[m] * exp(i*(theta0 + m*dtheta))
//   norm_sum     : sum_m |a[m]|^2
//   axpy_phased  : out[m] += scale * exp(i*(phi0 + m*dphi)) * x[m]
struct Backend {
    const char* name;
    cplx (*phased_sum)(const cplx* a, std::size_t n, double theta0, double dtheta);
    double (*norm_sum)(const cplx* a, std::size_t n);
    void (*axpy_phased)(cplx* out, const cplx* x, std::size_t n, cplx scale, double phi0,
                        double dphi);
};

const Backend& scalar_backend();
// Exact per-element phases, no recurrence. Slow; used as the test oracle.
const Backend& reference_backend();
// Null when the build or the running CPU lacks AVX2/FMA.
const Backend* avx2_backend();

// Active backend: AVX2 when available, else scalar. WGQED_KERNEL=scalar|avx2|reference
// overrides the automatic choice at process start.
const Backend& active_backend();
void set_active_backend(const Backend& b);
bool select_backend(std::string_view name);

inline cplx phased_sum(const cplx* a, std::size_t n, double theta0, double dtheta) {
    return active_backend().phased_sum(a, n, theta0, dtheta);
}
inline double norm_sum(const cplx* a, std::size_t n) { return active_backend().norm_sum(a, n); }
inline void axpy_phased(cplx* out, const cplx* x, std::size_t n, cplx scale, double phi0,
                        double dphi) {
    active_backend().axpy_phased(out, x, n, scale, phi0, dphi);
}

// Composite-trapezoid variants: half weight on the first and last element.
// The grid step is applied by the caller.
cplx phased_sum_trapezoid(const cplx* a, std::size_t n, double theta0, double dtheta);
double norm_sum_trapezoid(const cplx* a, std::size_t n);

}  // namespace wgqed::kernels
