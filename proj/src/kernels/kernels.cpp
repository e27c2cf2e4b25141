#include "uwbd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace uwbd::kernels {

namespace scalar {

void subband_capacity(const double* bs_hz, double* out_bps, std::size_t count,
                      double d_spread_s) {
    for (std::size_t i = 0; i < count; ++i) {
        out_bps[i] = 1.0 / (1.0 / bs_hz[i] + d_spread_s);
    }
}

void subband_duty_cycle(const double* bs_hz, double* out, std::size_t count,
                        double d_spread_s) {
    for (std::size_t i = 0; i < count; ++i) {
        const double tp = 1.0 / bs_hz[i];
        out[i] = tp / (tp + d_spread_s);
    }
}

} // namespace scalar

namespace {

Backend detect_best() {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2::supported()) {
        return Backend::avx2;
    }
#elif defined(__aarch64__)
    return Backend::neon;
#endif
    return Backend::scalar;
}

bool backend_supported(Backend backend) {
    switch (backend) {
    case Backend::scalar:
        return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return avx2::supported();
#else
        return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Backend initial_backend() {
    if (const char* env = std::getenv("UWBD_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) {
            return Backend::scalar;
        }
        if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::avx2)) {
            return Backend::avx2;
        }
        if (std::strcmp(env, "neon") == 0 && backend_supported(Backend::neon)) {
            return Backend::neon;
        }
    }
    return detect_best();
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{initial_backend()};
    return slot;
}

} // namespace

Backend best_backend() {
    static const Backend best = detect_best();
    return best;
}

Backend active_backend() {
    return backend_slot().load(std::memory_order_relaxed);
}

bool set_backend(Backend backend) {
    if (!backend_supported(backend)) {
        return false;
    }
    backend_slot().store(backend, std::memory_order_relaxed);
    return true;
}

const char* backend_name(Backend backend) {
    switch (backend) {
    case Backend::scalar:
        return "scalar";
    case Backend::avx2:
        return "avx2";
    case Backend::neon:
        return "neon";
    }
    return "unknown";
}

void subband_capacity(const double* bs_hz, double* out_bps, std::size_t count,
                      double d_spread_s) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
        avx2::subband_capacity(bs_hz, out_bps, count, d_spread_s);
        return;
#endif
#if defined(__aarch64__)
    case Backend::neon:
        neon::subband_capacity(bs_hz, out_bps, count, d_spread_s);
        return;
#endif
    default:
        scalar::subband_capacity(bs_hz, out_bps, count, d_spread_s);
        return;
    }
}

void subband_duty_cycle(const double* bs_hz, double* out, std::size_t count,
                        double d_spread_s) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
        avx2::subband_duty_cycle(bs_hz, out, count, d_spread_s);
        return;
#endif
#if defined(__aarch64__)
    case Backend::neon:
        neon::subband_duty_cycle(bs_hz, out, count, d_spread_s);
        return;
#endif
    default:
        scalar::subband_duty_cycle(bs_hz, out, count, d_spread_s);
        return;
    }
}

} // namespace uwbd::kernels
