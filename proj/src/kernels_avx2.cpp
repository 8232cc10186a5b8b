// AVX2 variants of the phased kernels. Two interleaved complex doubles per
// __m256d, two accumulators to hide FMA latency, and the same 512-element
// phase resync cadence as the scalar path.
#if defined(__x86_64__)

#include <immintrin.h>

#include <cmath>
#include <complex>
#include <cstddef>

#include "wgqed/kernels.hpp"

namespace wgqed::kernels {

namespace {

constexpr std::size_t kResync = 512;

// [ar ai br bi] * [cr ci dr di] with complex lane semantics.
inline __m256d cmul(__m256d a, __m256d b) {
    __m256d bre = _mm256_movedup_pd(b);
    __m256d bim = _mm256_permute_pd(b, 0xF);
    __m256d aswap = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, bre, _mm256_mul_pd(aswap, bim));
}

inline __m256d phase_pair(double th0, double dth, std::size_t i) {
    const double t0 = th0 + dth * static_cast<double>(i);
    const double t1 = t0 + dth;
    return _mm256_setr_pd(std::cos(t0), std::sin(t0), std::cos(t1), std::sin(t1));
}

inline std::complex<double> reduce_pair(__m256d v) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    return {lane[0] + lane[2], lane[1] + lane[3]};
}

cplx phased_sum_avx2(const cplx* a, std::size_t n, double theta0, double dtheta) {
    const double* p = reinterpret_cast<const double*>(a);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    const cplx r4c = std::polar(1.0, 4.0 * dtheta);
    const __m256d rot4 = _mm256_setr_pd(r4c.real(), r4c.imag(), r4c.real(), r4c.imag());
    std::size_t i = 0;
    while (i + 4 <= n) {
        const std::size_t stop = std::min(n - (n - i) % 4, i + kResync);
        __m256d ph0 = phase_pair(theta0, dtheta, i);
        __m256d ph1 = phase_pair(theta0, dtheta, i + 2);
        for (; i + 4 <= stop; i += 4) {
            acc0 = _mm256_add_pd(acc0, cmul(_mm256_loadu_pd(p + 2 * i), ph0));
            acc1 = _mm256_add_pd(acc1, cmul(_mm256_loadu_pd(p + 2 * i + 4), ph1));
            ph0 = cmul(ph0, rot4);
            ph1 = cmul(ph1, rot4);
        }
    }
    cplx acc = reduce_pair(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        acc += a[i] * std::polar(1.0, theta0 + dtheta * static_cast<double>(i));
    return acc;
}

double norm_sum_avx2(const cplx* a, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(p + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double s = lane[0] + lane[1] + lane[2] + lane[3];
    for (; i < n; ++i) s += std::norm(a[i]);
    return s;
}

void axpy_phased_avx2(cplx* out, const cplx* x, std::size_t n, cplx scale, double phi0,
                      double dphi) {
    double* po = reinterpret_cast<double*>(out);
    const double* px = reinterpret_cast<const double*>(x);
    const cplx r4c = std::polar(1.0, 4.0 * dphi);
    const __m256d rot4 = _mm256_setr_pd(r4c.real(), r4c.imag(), r4c.real(), r4c.imag());
    const __m256d sc = _mm256_setr_pd(scale.real(), scale.imag(), scale.real(), scale.imag());
    std::size_t i = 0;
    while (i + 4 <= n) {
        const std::size_t stop = std::min(n - (n - i) % 4, i + kResync);
        __m256d ph0 = cmul(sc, phase_pair(phi0, dphi, i));
        __m256d ph1 = cmul(sc, phase_pair(phi0, dphi, i + 2));
        for (; i + 4 <= stop; i += 4) {
            __m256d o0 = _mm256_loadu_pd(po + 2 * i);
            __m256d o1 = _mm256_loadu_pd(po + 2 * i + 4);
            o0 = _mm256_add_pd(o0, cmul(_mm256_loadu_pd(px + 2 * i), ph0));
            o1 = _mm256_add_pd(o1, cmul(_mm256_loadu_pd(px + 2 * i + 4), ph1));
            _mm256_storeu_pd(po + 2 * i, o0);
            _mm256_storeu_pd(po + 2 * i + 4, o1);
            ph0 = cmul(ph0, rot4);
            ph1 = cmul(ph1, rot4);
        }
    }
    for (; i < n; ++i)
        out[i] += x[i] * scale * std::polar(1.0, phi0 + dphi * static_cast<double>(i));
}

}  // namespace

const Backend* avx2_backend() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Backend b{"avx2", &phased_sum_avx2, &norm_sum_avx2, &axpy_phased_avx2};
    return &b;
}

}  // namespace wgqed::kernels

#endif  // __x86_64__
