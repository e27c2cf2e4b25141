#pragma once

#include <optional>
#include <vector>

#include "uwbd/errors.hpp"

// Capacity and duty-cycle model for impulse-radio UWB links. All quantities
// are SI base units (Hz, s, W); unit suffixes exist only at the I/O boundary.

namespace uwbd {

// The propagation environment reduced to its delay spread. Zero is the
// degenerate pulse-only case; the optimizer refuses it, the capacity and
// duty-cycle evaluations accept it.
struct ChannelProfile {
    double delay_spread_s = 0.0;

    explicit ChannelProfile(double delay_spread_seconds);
};

// AWGN link description: bandwidth plus either (signal power, noise spectral
// density) or a pre-formed linear SNR, never both.
class AwgnLinkParams {
public:
    static AwgnLinkParams from_power(double bandwidth_hz, double signal_power_w,
                                     double noise_density_w_per_hz);
    static AwgnLinkParams from_snr(double bandwidth_hz, double snr);

    double bandwidth_hz() const noexcept { return bandwidth_hz_; }
    // Ps / (B * N0) for the power form.
    double snr() const noexcept;
    bool has_power_form() const noexcept { return !snr_.has_value(); }
    double signal_power_w() const noexcept { return signal_power_w_; }
    double noise_density_w_per_hz() const noexcept { return noise_density_w_per_hz_; }

private:
    AwgnLinkParams() = default;

    double bandwidth_hz_ = 0.0;
    double signal_power_w_ = 0.0;
    double noise_density_w_per_hz_ = 0.0;
    std::optional<double> snr_;
};

struct PulseConfig {
    double pulse_duration_s = 0.0;
    // True when the duration was derived as the reciprocal of a subband
    // bandwidth, so non-reciprocal pulse models can be told apart later.
    bool derived_from_bandwidth = false;

    static PulseConfig from_duration(double pulse_duration_seconds);
};

// B * log2(1 + SNR) in bits/s. Zero exactly when the SNR is zero.
double shannon_capacity(const AwgnLinkParams& link);

// 1 / (Tp + d_spread) in bits/s: one binary symbol per pulse, the receiver
// waits out the multipath tail between pulses.
double ir_uwb_capacity(const PulseConfig& pulse, const ChannelProfile& channel);

// Tp / (Tp + d_spread), the emitted fraction of time, in (0, 1].
double duty_cycle(const PulseConfig& pulse, const ChannelProfile& channel);

// PulseConfig with duration 1/bandwidth and the derived flag set.
PulseConfig pulse_from_bandwidth(double subband_bandwidth_hz);

// Optional validity gate for capacity-vs-bandwidth series: rows whose
// Ps/(B*N0) comes out at or below min_snr_db are flagged, not altered.
struct SnrGate {
    double signal_power_w = 0.0;
    double noise_density_w_per_hz = 0.0;
    double min_snr_db = 3.0;
};

struct Fig1Options {
    std::vector<double> delay_spreads_s;
    double bandwidth_min_hz = 0.0;
    double bandwidth_max_hz = 0.0;
    int points = 2;
    bool log_grid = true;
    std::optional<SnrGate> snr_gate;
};

struct Fig1Row {
    double delay_spread_s = 0.0;
    // +infinity on asymptote rows (the B -> inf limit 1/d_spread).
    double bandwidth_hz = 0.0;
    double capacity_bps = 0.0;
    bool asymptote = false;
    bool snr_ok = true;
};

// Capacity-versus-bandwidth curves with Tp = 1/B, one asymptote row per
// delay spread appended after its curve. Grid is log-spaced unless
// log_grid is false; both range endpoints are always grid points.
std::vector<Fig1Row> fig1_series(const Fig1Options& options);

} // namespace uwbd
