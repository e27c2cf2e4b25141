#include "uwbd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

// Compiled with -mavx2; callers reach this TU only after avx2::supported().
// vdivpd/vaddpd are exactly rounded, so results match the scalar kernels bit
// for bit. No FMA anywhere: contraction would change the rounding sequence.

namespace uwbd::kernels::avx2 {

bool supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

void subband_capacity(const double* bs_hz, double* out_bps, std::size_t count,
                      double d_spread_s) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d d = _mm256_set1_pd(d_spread_s);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d bs = _mm256_loadu_pd(bs_hz + i);
        const __m256d tp = _mm256_div_pd(one, bs);
        const __m256d symbol = _mm256_add_pd(tp, d);
        _mm256_storeu_pd(out_bps + i, _mm256_div_pd(one, symbol));
    }
    for (; i < count; ++i) {
        out_bps[i] = 1.0 / (1.0 / bs_hz[i] + d_spread_s);
    }
}

void subband_duty_cycle(const double* bs_hz, double* out, std::size_t count,
                        double d_spread_s) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d d = _mm256_set1_pd(d_spread_s);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d bs = _mm256_loadu_pd(bs_hz + i);
        const __m256d tp = _mm256_div_pd(one, bs);
        const __m256d symbol = _mm256_add_pd(tp, d);
        _mm256_storeu_pd(out + i, _mm256_div_pd(tp, symbol));
    }
    for (; i < count; ++i) {
        const double tp = 1.0 / bs_hz[i];
        out[i] = tp / (tp + d_spread_s);
    }
}

} // namespace uwbd::kernels::avx2

#endif
