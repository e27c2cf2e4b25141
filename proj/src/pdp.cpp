#include "uwbd/pdp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace uwbd {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

bool parse_field(std::string_view field, double& out) {
    field = trim(field);
    if (field.empty()) {
        return false;
    }
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

double to_linear(double value, PdpFormat format) {
    return format == PdpFormat::csv_ns_db ? std::pow(10.0, value / 10.0) : value;
}

double from_linear(double power, PdpFormat format) {
    return format == PdpFormat::csv_ns_db ? 10.0 * std::log10(power) : power;
}

} // namespace

void PowerDelayProfile::validate() const {
    if (taps.empty()) {
        throw invalid_profile("profile has no taps");
    }
    bool any_power = false;
    double prev = -1.0;
    for (const PdpTap& tap : taps) {
        if (!std::isfinite(tap.delay_s) || tap.delay_s < 0.0) {
            throw invalid_profile("tap delays must be finite and >= 0");
        }
        if (!std::isfinite(tap.power) || tap.power < 0.0) {
            throw invalid_profile("tap powers must be finite and >= 0");
        }
        if (tap.delay_s <= prev) {
            throw invalid_profile("tap delays must be strictly increasing");
        }
        prev = tap.delay_s;
        any_power = any_power || tap.power > 0.0;
    }
    if (!any_power) {
        throw invalid_profile("profile carries no power");
    }
}

double rms_delay_spread(const PowerDelayProfile& pdp) {
    pdp.validate();
    // Working relative to the first tap keeps the sums small when all the
    // delays share a big offset, which is what makes the shift invariance
    // hold to the last bit that matters.
    const double t0 = pdp.taps.front().delay_s;
    double power_sum = 0.0;
    double mean_acc = 0.0;
    for (const PdpTap& tap : pdp.taps) {
        power_sum += tap.power;
        mean_acc += tap.power * (tap.delay_s - t0);
    }
    const double mean = mean_acc / power_sum;
    double var_acc = 0.0;
    for (const PdpTap& tap : pdp.taps) {
        const double dev = (tap.delay_s - t0) - mean;
        var_acc += tap.power * dev * dev;
    }
    return std::sqrt(var_acc / power_sum);
}

double max_excess_delay(const PowerDelayProfile& pdp) {
    pdp.validate();
    double first = -1.0;
    double last = -1.0;
    for (const PdpTap& tap : pdp.taps) {
        if (tap.power > 0.0) {
            if (first < 0.0) {
                first = tap.delay_s;
            }
            last = tap.delay_s;
        }
    }
    return last - first;
}

double delay_spread(const PowerDelayProfile& pdp, DelaySpreadStatistic statistic) {
    switch (statistic) {
    case DelaySpreadStatistic::rms:
        return rms_delay_spread(pdp);
    case DelaySpreadStatistic::max_excess:
        return max_excess_delay(pdp);
    }
    throw invalid_parameter("unknown delay spread statistic");
}

PowerDelayProfile parse_pdp(std::istream& in, PdpFormat format, std::string source_label) {
    PowerDelayProfile pdp;
    pdp.source_label = std::move(source_label);

    std::string raw;
    long line_no = 0;
    bool seen_data = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw parse_error("expected two comma-separated fields", line_no);
        }
        if (line.find(',', comma + 1) != std::string_view::npos) {
            throw parse_error("expected exactly two fields", line_no);
        }
        double delay_ns = 0.0;
        double value = 0.0;
        if (!parse_field(line.substr(0, comma), delay_ns)) {
            // One non-numeric leading row is a column header, but only before
            // any data row.
            if (!seen_data) {
                seen_data = true;
                continue;
            }
            throw parse_error("delay field is not a number", line_no);
        }
        if (!parse_field(line.substr(comma + 1), value)) {
            throw parse_error("power field is not a number", line_no);
        }
        seen_data = true;
        pdp.taps.push_back({delay_ns * 1e-9, to_linear(value, format)});
    }
    if (in.bad()) {
        throw parse_error("read failure");
    }
    std::sort(pdp.taps.begin(), pdp.taps.end(),
              [](const PdpTap& a, const PdpTap& b) { return a.delay_s < b.delay_s; });
    pdp.validate();
    return pdp;
}

PowerDelayProfile load_pdp(const std::filesystem::path& path, PdpFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open " + path.string());
    }
    return parse_pdp(in, format, path.filename().string());
}

void write_pdp(std::ostream& out, const PowerDelayProfile& pdp, PdpFormat format) {
    out << "delay_ns," << (format == PdpFormat::csv_ns_db ? "power_db" : "power_linear")
        << '\n';
    char buf[64];
    for (const PdpTap& tap : pdp.taps) {
        std::snprintf(buf, sizeof buf, "%.17g", tap.delay_s * 1e9);
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.17g", from_linear(tap.power, format));
        out << buf << '\n';
    }
}

const char* pdp_format_name(PdpFormat format) {
    switch (format) {
    case PdpFormat::csv_ns_db:
        return "csv-ns-db";
    case PdpFormat::csv_ns_linear:
        return "csv-ns-linear";
    }
    return "unknown";
}

const char* delay_spread_statistic_name(DelaySpreadStatistic statistic) {
    switch (statistic) {
    case DelaySpreadStatistic::rms:
        return "rms";
    case DelaySpreadStatistic::max_excess:
        return "max-excess";
    }
    return "unknown";
}

} // namespace uwbd
