#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "uwbd/errors.hpp"

// Power-delay-profile ingest: parse measured or model-generated tap lists
// and reduce them to the scalar delay spread the capacity model consumes.

namespace uwbd {

struct PdpTap {
    double delay_s = 0.0;
    double power = 0.0; // linear watts or relative linear gain
};

struct PowerDelayProfile {
    std::vector<PdpTap> taps; // sorted, strictly increasing delays
    std::string source_label;

    // Throws invalid_profile unless there is at least one tap, delays are
    // non-negative and strictly increasing, and powers are >= 0 with at
    // least one positive.
    void validate() const;
};

enum class PdpFormat {
    csv_ns_db,     // rows (delay_ns, power_dB), power = 10^(dB/10)
    csv_ns_linear, // rows (delay_ns, linear_power)
};

enum class DelaySpreadStatistic {
    rms,        // square root of the power-weighted second central moment
    max_excess, // last minus first positive-power tap delay
};

// sqrt( sum p*t^2 / sum p  -  (sum p*t / sum p)^2 ), computed as a two-pass
// central moment around the first tap. Invariant to uniform power scaling
// and to a common delay offset.
double rms_delay_spread(const PowerDelayProfile& pdp);

double max_excess_delay(const PowerDelayProfile& pdp);

double delay_spread(const PowerDelayProfile& pdp, DelaySpreadStatistic statistic);

// CSV with comma separators; delays in nanoseconds; '#' lines are comments;
// an optional header row is detected by a non-numeric first field. Rows may
// arrive out of order and are sorted before validation.
PowerDelayProfile parse_pdp(std::istream& in, PdpFormat format,
                            std::string source_label = {});
PowerDelayProfile load_pdp(const std::filesystem::path& path, PdpFormat format);

void write_pdp(std::ostream& out, const PowerDelayProfile& pdp, PdpFormat format);

const char* pdp_format_name(PdpFormat format);
const char* delay_spread_statistic_name(DelaySpreadStatistic statistic);

} // namespace uwbd
