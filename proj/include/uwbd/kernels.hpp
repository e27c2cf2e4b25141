#pragma once

#include <cstddef>

// Batch kernels for the grid-shaped inner loops (design-space sweeps, figure
// series, brute-force search). Every backend performs the same IEEE-754
// double operations (divide, add) in the same order, and those operations are
// exactly rounded on every target, so scalar, AVX2 and NEON results are
// bit-identical. The equivalence tests assert exact equality, no tolerance.

namespace uwbd::kernels {

enum class Backend {
    scalar,
    avx2,
    neon,
};

// Best backend this CPU supports: AVX2 behind a runtime check on x86-64,
// NEON unconditionally on aarch64, scalar everywhere else.
Backend best_backend();

// Backend used by the dispatching entry points below. Defaults to
// best_backend(); the UWBD_KERNELS environment variable (scalar|avx2|neon)
// overrides it at startup.
Backend active_backend();

// Force a backend. Returns false (and leaves the selection unchanged) if the
// CPU does not support it. Not intended to race against in-flight kernels.
bool set_backend(Backend backend);

const char* backend_name(Backend backend);

// out[i] = 1 / (1/bs[i] + d_spread)   -- symbol rate of a subband whose
// pulse duration is the reciprocal of its bandwidth.
void subband_capacity(const double* bs_hz, double* out_bps, std::size_t count,
                      double d_spread_s);

// tp = 1/bs[i]; out[i] = tp / (tp + d_spread)
void subband_duty_cycle(const double* bs_hz, double* out, std::size_t count,
                        double d_spread_s);

namespace scalar {
void subband_capacity(const double* bs_hz, double* out_bps, std::size_t count,
                      double d_spread_s);
void subband_duty_cycle(const double* bs_hz, double* out, std::size_t count,
                        double d_spread_s);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool supported();
void subband_capacity(const double* bs_hz, double* out_bps, std::size_t count,
                      double d_spread_s);
void subband_duty_cycle(const double* bs_hz, double* out, std::size_t count,
                        double d_spread_s);
} // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void subband_capacity(const double* bs_hz, double* out_bps, std::size_t count,
                      double d_spread_s);
void subband_duty_cycle(const double* bs_hz, double* out, std::size_t count,
                        double d_spread_s);
} // namespace neon
#endif

} // namespace uwbd::kernels
