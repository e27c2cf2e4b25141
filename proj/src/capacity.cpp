#include "uwbd/capacity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "uwbd/kernels.hpp"

namespace uwbd {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw invalid_parameter(std::string(name) + " must be finite");
    }
}

} // namespace

ChannelProfile::ChannelProfile(double delay_spread_seconds)
    : delay_spread_s(delay_spread_seconds) {
    require_finite(delay_spread_seconds, "delay_spread");
    if (delay_spread_seconds < 0.0) {
        throw invalid_parameter("delay_spread must be >= 0");
    }
}

AwgnLinkParams AwgnLinkParams::from_power(double bandwidth_hz, double signal_power_w,
                                          double noise_density_w_per_hz) {
    require_finite(bandwidth_hz, "bandwidth");
    require_finite(signal_power_w, "signal_power");
    require_finite(noise_density_w_per_hz, "noise_spectral_density");
    if (bandwidth_hz <= 0.0) {
        throw invalid_parameter("bandwidth must be > 0");
    }
    if (signal_power_w < 0.0) {
        throw invalid_parameter("signal_power must be >= 0");
    }
    if (noise_density_w_per_hz <= 0.0) {
        throw invalid_parameter("noise_spectral_density must be > 0");
    }
    AwgnLinkParams p;
    p.bandwidth_hz_ = bandwidth_hz;
    p.signal_power_w_ = signal_power_w;
    p.noise_density_w_per_hz_ = noise_density_w_per_hz;
    return p;
}

AwgnLinkParams AwgnLinkParams::from_snr(double bandwidth_hz, double snr) {
    require_finite(bandwidth_hz, "bandwidth");
    require_finite(snr, "snr");
    if (bandwidth_hz <= 0.0) {
        throw invalid_parameter("bandwidth must be > 0");
    }
    if (snr < 0.0) {
        throw invalid_parameter("snr must be >= 0");
    }
    AwgnLinkParams p;
    p.bandwidth_hz_ = bandwidth_hz;
    p.snr_ = snr;
    return p;
}

double AwgnLinkParams::snr() const noexcept {
    if (snr_.has_value()) {
        return *snr_;
    }
    return signal_power_w_ / (bandwidth_hz_ * noise_density_w_per_hz_);
}

PulseConfig PulseConfig::from_duration(double pulse_duration_seconds) {
    require_finite(pulse_duration_seconds, "pulse_duration");
    if (pulse_duration_seconds <= 0.0) {
        throw invalid_parameter("pulse_duration must be > 0");
    }
    return PulseConfig{pulse_duration_seconds, false};
}

double shannon_capacity(const AwgnLinkParams& link) {
    // log1p keeps "zero capacity iff zero SNR" true down to denormal SNRs.
    return link.bandwidth_hz() * (std::log1p(link.snr()) / std::numbers::ln2);
}

double ir_uwb_capacity(const PulseConfig& pulse, const ChannelProfile& channel) {
    require_finite(pulse.pulse_duration_s, "pulse_duration");
    if (pulse.pulse_duration_s <= 0.0) {
        throw invalid_parameter("pulse_duration must be > 0");
    }
    if (!(channel.delay_spread_s >= 0.0)) {
        throw invalid_parameter("delay_spread must be >= 0");
    }
    return 1.0 / (pulse.pulse_duration_s + channel.delay_spread_s);
}

double duty_cycle(const PulseConfig& pulse, const ChannelProfile& channel) {
    require_finite(pulse.pulse_duration_s, "pulse_duration");
    if (pulse.pulse_duration_s <= 0.0) {
        throw invalid_parameter("pulse_duration must be > 0");
    }
    if (!(channel.delay_spread_s >= 0.0)) {
        throw invalid_parameter("delay_spread must be >= 0");
    }
    return pulse.pulse_duration_s / (pulse.pulse_duration_s + channel.delay_spread_s);
}

PulseConfig pulse_from_bandwidth(double subband_bandwidth_hz) {
    require_finite(subband_bandwidth_hz, "subband_bandwidth");
    if (subband_bandwidth_hz <= 0.0) {
        throw invalid_parameter("subband_bandwidth must be > 0");
    }
    return PulseConfig{1.0 / subband_bandwidth_hz, true};
}

std::vector<Fig1Row> fig1_series(const Fig1Options& options) {
    if (options.delay_spreads_s.empty()) {
        throw invalid_parameter("fig1: delay spread list is empty");
    }
    for (double d : options.delay_spreads_s) {
        if (!std::isfinite(d) || d <= 0.0) {
            throw invalid_parameter("fig1: delay spreads must be > 0");
        }
    }
    const double lo = options.bandwidth_min_hz;
    const double hi = options.bandwidth_max_hz;
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo <= 0.0 || hi <= lo) {
        throw invalid_parameter("fig1: bandwidth range must satisfy 0 < min < max");
    }
    if (options.points < 2) {
        throw invalid_parameter("fig1: points must be >= 2");
    }
    if (options.snr_gate) {
        const SnrGate& g = *options.snr_gate;
        if (!(g.signal_power_w >= 0.0) || !(g.noise_density_w_per_hz > 0.0)) {
            throw invalid_parameter("fig1: snr gate needs signal_power >= 0 and noise density > 0");
        }
    }

    const int points = options.points;
    std::vector<double> grid(static_cast<std::size_t>(points));
    grid.front() = lo;
    grid.back() = hi;
    if (options.log_grid) {
        const double llo = std::log(lo);
        const double span = std::log(hi) - llo;
        for (int i = 1; i + 1 < points; ++i) {
            grid[static_cast<std::size_t>(i)] = std::exp(llo + span * i / (points - 1));
        }
    } else {
        const double span = hi - lo;
        for (int i = 1; i + 1 < points; ++i) {
            grid[static_cast<std::size_t>(i)] = lo + span * i / (points - 1);
        }
    }

    const double snr_floor =
        options.snr_gate ? std::pow(10.0, options.snr_gate->min_snr_db / 10.0) : 0.0;

    std::vector<Fig1Row> rows;
    rows.reserve(options.delay_spreads_s.size() * (grid.size() + 1));
    std::vector<double> caps(grid.size());
    for (double d : options.delay_spreads_s) {
        kernels::subband_capacity(grid.data(), caps.data(), grid.size(), d);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            bool snr_ok = true;
            if (options.snr_gate) {
                const double snr = options.snr_gate->signal_power_w /
                                   (grid[i] * options.snr_gate->noise_density_w_per_hz);
                snr_ok = snr > snr_floor;
            }
            rows.push_back(Fig1Row{d, grid[i], caps[i], false, snr_ok});
        }
        rows.push_back(Fig1Row{d, std::numeric_limits<double>::infinity(),
                               1.0 / d, true, true});
    }
    return rows;
}

} // namespace uwbd
