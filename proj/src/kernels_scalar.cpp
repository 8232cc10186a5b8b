#include <cmath>
#include <complex>
#include <cstddef>

#include "wgqed/kernels.hpp"

namespace wgqed::kernels {

// The phase e^{i(theta0 + m dtheta)} is advanced by complex rotation and
// re-anchored from sincos every RESYNC elements to stop drift; the relative
// error stays below a few hundred ulp regardless of n.
namespace detail {
constexpr std::size_t kResync = 512;
}

namespace {

cplx phased_sum_scalar(const cplx* a, std::size_t n, double theta0, double dtheta) {
    cplx acc{0.0, 0.0};
    const cplx rot = std::polar(1.0, dtheta);
    std::size_t i = 0;
    while (i < n) {
        const std::size_t stop = std::min(n, i + detail::kResync);
        cplx ph = std::polar(1.0, theta0 + dtheta * static_cast<double>(i));
        for (; i < stop; ++i) {
            acc += a[i] * ph;
            ph *= rot;
        }
    }
    return acc;
}

double norm_sum_scalar(const cplx* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::norm(a[i]);
    return acc;
}

void axpy_phased_scalar(cplx* out, const cplx* x, std::size_t n, cplx scale, double phi0,
                        double dphi) {
    const cplx rot = std::polar(1.0, dphi);
    std::size_t i = 0;
    while (i < n) {
        const std::size_t stop = std::min(n, i + detail::kResync);
        cplx ph = scale * std::polar(1.0, phi0 + dphi * static_cast<double>(i));
        for (; i < stop; ++i) {
            out[i] += x[i] * ph;
            ph *= rot;
        }
    }
}

cplx phased_sum_ref(const cplx* a, std::size_t n, double theta0, double dtheta) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * std::polar(1.0, theta0 + dtheta * static_cast<double>(i));
    return acc;
}

void axpy_phased_ref(cplx* out, const cplx* x, std::size_t n, cplx scale, double phi0,
                     double dphi) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] += x[i] * scale * std::polar(1.0, phi0 + dphi * static_cast<double>(i));
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend b{"scalar", &phased_sum_scalar, &norm_sum_scalar, &axpy_phased_scalar};
    return b;
}

const Backend& reference_backend() {
    static const Backend b{"reference", &phased_sum_ref, &norm_sum_scalar, &axpy_phased_ref};
    return b;
}

}  // namespace wgqed::kernels
