#pragma once

#include <string>
#include <string_view>

#include "uwbd/errors.hpp"

// Quantity parsing for the I/O boundary. Internally everything is SI base
// units; suffixes exist so a user can write 750MHz instead of counting
// zeros, and so 9 cannot silently mean either 9 s or 9 ns.

namespace uwbd::units {

// "750MHz", "0.75GHz", "7.5e8". Suffixes: Hz, kHz, MHz, GHz (exact case:
// mHz would be ambiguous). A bare number is accepted only when its SI
// magnitude is already unambiguous: zero, or |v| within [1e-3, 1e12].
double parse_frequency(std::string_view text);

// "9ns", "0.009us", "9e-9s". Suffixes: s, ms, us, ns. Same bare-number rule.
double parse_time(std::string_view text);

// Plain double, full-string match required.
double parse_double(std::string_view text);

// Shortest %g form at the given number of significant digits.
std::string format_si(double value, int significant_digits);

} // namespace uwbd::units
