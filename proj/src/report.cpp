#include "uwbd/report.hpp"

#include <cmath>

#include "uwbd/units.hpp"

namespace uwbd::report {

namespace {

constexpr int kDisplayDigits = 4;

void append_point_fields(std::string& out, const DesignPoint& p) {
    out += std::to_string(p.n);
    out += ',';
    out += format_value(p.bt_hz);
    out += ',';
    out += format_value(p.per_subband_capacity_bps);
    out += ',';
    out += format_value(p.total_capacity_bps);
    out += ',';
    out += format_value(p.duty_cycle);
}

} // namespace

std::string format_value(double v) {
    return units::format_si(v, kDisplayDigits);
}

std::string join_labels(const std::vector<ConstraintLabel>& labels) {
    std::string out;
    for (const ConstraintLabel label : labels) {
        if (!out.empty()) {
            out += ';';
        }
        out += constraint_label_name(label);
    }
    return out;
}

std::string to_csv(const SweepTable& table) {
    std::string out = "bs_hz,n,bt_hz,per_subband_capacity_bps,total_capacity_bps,duty_cycle\n";
    for (const DesignPoint& p : table.rows) {
        out += format_value(p.bs_hz);
        out += ',';
        append_point_fields(out, p);
        out += '\n';
    }
    return out;
}

std::string to_csv(const std::vector<Fig1Row>& rows) {
    std::string out = "delay_spread_s,bandwidth_hz,capacity_bps,kind,snr_ok\n";
    for (const Fig1Row& row : rows) {
        out += format_value(row.delay_spread_s);
        out += ',';
        if (!row.asymptote) {
            out += format_value(row.bandwidth_hz);
        }
        out += ',';
        out += format_value(row.capacity_bps);
        out += ',';
        out += row.asymptote ? "asymptote" : "curve";
        out += ',';
        out += row.snr_ok ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string to_csv(const OptimizationResult& result) {
    std::string out = "key,value\n";
    out += "feasible,";
    out += result.feasible ? "1" : "0";
    out += "\nbs_min_hz,";
    out += format_value(result.bs_min_hz);
    out += "\nbs_min_branch,";
    out += bs_min_branch_name(result.bs_min_branch);
    out += '\n';
    if (result.optimum) {
        const DesignPoint& p = *result.optimum;
        out += "n,";
        out += std::to_string(p.n);
        out += "\nbs_hz,";
        out += format_value(p.bs_hz);
        out += "\nbt_hz,";
        out += format_value(p.bt_hz);
        out += "\nper_subband_capacity_bps,";
        out += format_value(p.per_subband_capacity_bps);
        out += "\ntotal_capacity_bps,";
        out += format_value(p.total_capacity_bps);
        out += "\nduty_cycle,";
        out += format_value(p.duty_cycle);
        out += "\nbinding_constraints,";
        out += join_labels(result.binding_constraints);
        out += '\n';
    }
    return out;
}

} // namespace uwbd::report
