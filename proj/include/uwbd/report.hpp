#pragma once

#include <string>
#include <vector>

#include "uwbd/capacity.hpp"
#include "uwbd/optimizer.hpp"

// CSV emission. Output is deterministic byte-for-byte for identical inputs;
// display values are rounded to 4 significant digits while all computation
// stays in full precision (the JSON path carries full-precision numbers).

namespace uwbd::report {

// Columns: bs_hz,n,bt_hz,per_subband_capacity_bps,total_capacity_bps,duty_cycle
std::string to_csv(const SweepTable& table);

// Columns: delay_spread_s,bandwidth_hz,capacity_bps,kind,snr_ok
// Asymptote rows leave bandwidth_hz empty.
std::string to_csv(const std::vector<Fig1Row>& rows);

// key,value listing: feasibility, bs_min and its branch, then the optimum
// point and binding constraints when present.
std::string to_csv(const OptimizationResult& result);

std::string format_value(double v);
std::string join_labels(const std::vector<ConstraintLabel>& labels);

} // namespace uwbd::report
