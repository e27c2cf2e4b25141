#include "uwbd/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace uwbd::units {

namespace {

struct Suffix {
    std::string_view text;
    double scale;
};

// Longest suffix first so "MHz" is not read as "Hz" with a stray M.
constexpr std::array<Suffix, 4> frequency_suffixes{{
    {"kHz", 1e3},
    {"MHz", 1e6},
    {"GHz", 1e9},
    {"Hz", 1.0},
}};

constexpr std::array<Suffix, 4> time_suffixes{{
    {"ms", 1e-3},
    {"us", 1e-6},
    {"ns", 1e-9},
    {"s", 1.0},
}};

std::string_view trim(std::string_view s) {
    const char* ws = " \t";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view text, double& out) {
    if (text.empty()) {
        return false;
    }
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

// A bare magnitude is only accepted where no plausible unit confusion
// exists: zero, or a value that could not be a mistyped kilo/nano cousin
// of itself within the tool's working ranges.
bool bare_magnitude_ok(double v) {
    if (v == 0.0) {
        return true;
    }
    const double m = std::abs(v);
    return m >= 1e-3 && m <= 1e12;
}

template <std::size_t N>
double parse_quantity(std::string_view text, const std::array<Suffix, N>& suffixes,
                      const char* what) {
    const std::string_view s = trim(text);
    if (s.empty()) {
        throw invalid_parameter(std::string(what) + ": empty value");
    }
    for (const Suffix& suffix : suffixes) {
        if (s.size() > suffix.text.size() && s.ends_with(suffix.text)) {
            double v = 0.0;
            const auto body = trim(s.substr(0, s.size() - suffix.text.size()));
            if (!parse_number(body, v)) {
                throw invalid_parameter(std::string(what) + ": malformed number in '" +
                                        std::string(text) + "'");
            }
            return v * suffix.scale;
        }
    }
    double v = 0.0;
    if (!parse_number(s, v)) {
        throw invalid_parameter(std::string(what) + ": cannot parse '" +
                                std::string(text) + "'");
    }
    if (!bare_magnitude_ok(v)) {
        throw invalid_parameter(std::string(what) + ": bare value '" + std::string(text) +
                                "' is outside the unambiguous range; add a unit suffix");
    }
    return v;
}

} // namespace

double parse_frequency(std::string_view text) {
    return parse_quantity(text, frequency_suffixes, "frequency");
}

double parse_time(std::string_view text) {
    return parse_quantity(text, time_suffixes, "time");
}

double parse_double(std::string_view text) {
    double v = 0.0;
    if (!parse_number(trim(text), v)) {
        throw invalid_parameter("cannot parse number '" + std::string(text) + "'");
    }
    return v;
}

std::string format_si(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

} // namespace uwbd::units
