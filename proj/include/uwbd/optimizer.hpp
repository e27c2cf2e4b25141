#pragma once

#include <optional>
#include <vector>

#include "uwbd/capacity.hpp"
#include "uwbd/errors.hpp"

// Constrained capacity maximization for multiband IR-UWB: pick the subband
// count n and per-subband bandwidth Bs maximizing n / (1/Bs + d_spread)
// subject to hardware and regulatory caps.

namespace uwbd {

struct DesignConstraints {
    int n_max = 1;          // most subbands the hardware can form
    double bs_max_hz = 0.0; // widest subband the pulse generator supports
    double bt_max_hz = 0.0; // total band the regulator allows
    double alpha_max = 1.0; // highest authorized duty cycle, in (0, 1]
    ChannelProfile channel{0.0};

    // Throws invalid_parameter on any violated invariant
    // (n_max >= 1, 0 < bs_max <= bt_max, 0 < alpha_max <= 1, finite values).
    void validate() const;
};

struct DesignPoint {
    int n = 0;
    double bs_hz = 0.0;
    double bt_hz = 0.0; // n * bs, always derived
    double per_subband_capacity_bps = 0.0;
    double total_capacity_bps = 0.0;
    double duty_cycle = 0.0;
};

enum class ConstraintLabel {
    n_max,
    bs_max,
    bt_max,
    alpha_max,
};

const char* constraint_label_name(ConstraintLabel label);

struct ConstraintViolation {
    ConstraintLabel label;
    // Amount by which the constraint is exceeded: a count for n_max,
    // hertz for the three bandwidth-shaped bounds.
    double margin;
};

struct PointEvaluation {
    std::optional<DesignPoint> point; // populated iff violations is empty
    std::vector<ConstraintViolation> violations;

    bool valid() const noexcept { return point.has_value(); }
};

// Which branch of the feasibility bound max[Bt_max/n_max ; (1/a_max - 1)/d]
// produced it.
enum class BsMinBranch {
    bandwidth_split, // Bt_max / n_max
    duty_cycle,      // (1/alpha_max - 1) / d_spread
    both,            // equal
};

const char* bs_min_branch_name(BsMinBranch branch);

struct BsMinResult {
    double value_hz;
    BsMinBranch branch;
};

struct OptimizationResult {
    bool feasible = false;
    double bs_min_hz = 0.0;
    BsMinBranch bs_min_branch = BsMinBranch::bandwidth_split;
    std::optional<DesignPoint> optimum; // present iff feasible
    // Constraints active (equality within 1e-9 relative) at the optimum,
    // in canonical {n_max, bs_max, bt_max, alpha_max} order.
    std::vector<ConstraintLabel> binding_constraints;
};

// Infeasible design space, thrown by sweep (the optimizer itself reports
// infeasibility as a structured result).
class infeasible_design : public std::runtime_error {
public:
    infeasible_design(double bs_min_hz, BsMinBranch branch);

    double bs_min_hz() const noexcept { return bs_min_hz_; }
    BsMinBranch branch() const noexcept { return branch_; }

private:
    double bs_min_hz_;
    BsMinBranch branch_;
};

// Smallest feasible subband bandwidth, max[Bt_max/n_max ; (1/a_max - 1)/d].
// The total-bandwidth term uses the cap Bt_max: the bandwidth actually used
// is unknown before solving, and the cap is the binding value.
// Throws invalid_parameter when d_spread = 0 while alpha_max < 1 (the
// duty-cycle bound degenerates).
BsMinResult bs_min_detail(const DesignConstraints& constraints);
double bs_min(const DesignConstraints& constraints);

// n * (1 / (1/bs + d_spread)). Shares its arithmetic with ir_uwb_capacity,
// so n * ir_uwb_capacity(pulse_from_bandwidth(bs), channel) is bit-identical.
double mb_capacity(int n, double bs_hz, const ChannelProfile& channel);

// Checks one (n, bs) configuration against every constraint. Returns the
// populated DesignPoint when all hold, otherwise the violated labels with
// their margins. n_max is treated inclusively (n <= n_max).
PointEvaluation evaluate_point(int n, double bs_hz, const DesignConstraints& constraints);

// Closed-form solution: n* = min(n_max, floor(Bt_max / bs_min)),
// bs* = min(bs_max, Bt_max / n*), both fixed up so n* x bs* never exceeds
// Bt_max in double arithmetic. Capacity ties break toward larger n, then
// larger bs. Requires d_spread > 0.
OptimizationResult optimize(const DesignConstraints& constraints);

// Independent oracle: exhaustive enumeration of n in [1, n_max] against a
// bs grid from bs_min to bs_max (spacing bs_step, endpoints included),
// keeping the best constraint-satisfying point under the same tie-breaking.
OptimizationResult brute_force_optimize(const DesignConstraints& constraints,
                                        double bs_step_hz);

struct SweepTable {
    std::vector<DesignPoint> rows; // strictly increasing in bs
    double step_hz = 0.0;
    DesignConstraints constraints;
};

inline constexpr double default_sweep_step_hz = 0.1e6;

// One row per grid bandwidth from bs_min to bs_max (endpoints always
// included), with n(bs) = min(n_max, floor(Bt_max/bs)); rows where that
// count falls below 1 are omitted. Throws infeasible_design when
// bs_max < bs_min.
SweepTable sweep(const DesignConstraints& constraints,
                 double bs_step_hz = default_sweep_step_hz);

} // namespace uwbd
