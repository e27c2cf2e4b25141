#include "uwbd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

// NEON float64x2 is baseline on aarch64. vdivq_f64/vaddq_f64 are exactly
// rounded, so results match the scalar kernels bit for bit.

namespace uwbd::kernels::neon {

void subband_capacity(const double* bs_hz, double* out_bps, std::size_t count,
                      double d_spread_s) {
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t d = vdupq_n_f64(d_spread_s);
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const float64x2_t bs = vld1q_f64(bs_hz + i);
        const float64x2_t tp = vdivq_f64(one, bs);
        const float64x2_t symbol = vaddq_f64(tp, d);
        vst1q_f64(out_bps + i, vdivq_f64(one, symbol));
    }
    for (; i < count; ++i) {
        out_bps[i] = 1.0 / (1.0 / bs_hz[i] + d_spread_s);
    }
}

void subband_duty_cycle(const double* bs_hz, double* out, std::size_t count,
                        double d_spread_s) {
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t d = vdupq_n_f64(d_spread_s);
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const float64x2_t bs = vld1q_f64(bs_hz + i);
        const float64x2_t tp = vdivq_f64(one, bs);
        const float64x2_t symbol = vaddq_f64(tp, d);
        vst1q_f64(out + i, vdivq_f64(tp, symbol));
    }
    for (; i < count; ++i) {
        const double tp = 1.0 / bs_hz[i];
        out[i] = tp / (tp + d_spread_s);
    }
}

} // namespace uwbd::kernels::neon

#endif
