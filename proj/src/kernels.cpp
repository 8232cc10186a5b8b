#include "wgqed/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace wgqed::kernels {

#if !defined(WGQED_HAVE_AVX2_SOURCES)
const Backend* avx2_backend() { return nullptr; }
#endif

namespace {

const Backend* initial_backend() {
    if (const char* env = std::getenv("WGQED_KERNEL")) {
        std::string_view want{env};
        if (want == "scalar") return &scalar_backend();
        if (want == "reference") return &reference_backend();
        if (want == "avx2" && avx2_backend()) return avx2_backend();
    }
    if (const Backend* simd = avx2_backend()) return simd;
    return &scalar_backend();
}

std::atomic<const Backend*> g_active{nullptr};

}  // namespace

const Backend& active_backend() {
    const Backend* b = g_active.load(std::memory_order_acquire);
    if (!b) {
        b = initial_backend();
        g_active.store(b, std::memory_order_release);
    }
    return *b;
}

void set_active_backend(const Backend& b) { g_active.store(&b, std::memory_order_release); }

bool select_backend(std::string_view name) {
    if (name == "scalar") {
        set_active_backend(scalar_backend());
        return true;
    }
    if (name == "reference") {
        set_active_backend(reference_backend());
        return true;
    }
    if (name == "avx2") {
        if (const Backend* simd = avx2_backend()) {
            set_active_backend(*simd);
            return true;
        }
        return false;
    }
    return false;
}

cplx phased_sum_trapezoid(const cplx* a, std::size_t n, double theta0, double dtheta) {
    if (n < 2) return {0.0, 0.0};
    cplx s = phased_sum(a, n, theta0, dtheta);
    s -= 0.5 * a[0] * std::polar(1.0, theta0);
    s -= 0.5 * a[n - 1] * std::polar(1.0, theta0 + dtheta * static_cast<double>(n - 1));
    return s;
}

double norm_sum_trapezoid(const cplx* a, std::size_t n) {
    if (n < 2) return 0.0;
    return norm_sum(a, n) - 0.5 * std::norm(a[0]) - 0.5 * std::norm(a[n - 1]);
}

}  // namespace wgqed::kernels
