#include "uwbd/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "uwbd/kernels.hpp"

namespace uwbd {

namespace {

constexpr double kBindingRelTol = 1e-9;
// Refuses grids that would not fit in memory; far beyond any useful step.
constexpr double kMaxGridPoints = 2e7;

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= kBindingRelTol * std::max(std::abs(a), std::abs(b));
}

// Lower bound the duty-cycle cap places on bs: duty <= alpha_max inverts to
// bs >= (1/alpha_max - 1) / d_spread. +inf encodes "unsatisfiable" (zero
// delay spread with a duty-cycle cap below 1).
double duty_cycle_bs_bound(double alpha_max, double d_spread_s) {
    if (alpha_max >= 1.0) {
        return 0.0;
    }
    if (d_spread_s <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return (1.0 / alpha_max - 1.0) / d_spread_s;
}

// Largest n with n * bs <= bt_max in double arithmetic, capped at n_max.
// The rounded quotient can land one off in either direction, so walk the
// exact predicate both ways from the floored guess.
int subbands_within_budget(double bt_max, double bs, int n_max) {
    const double q = std::floor(bt_max / bs);
    int n = q >= static_cast<double>(n_max) ? n_max : static_cast<int>(q);
    while (n < n_max && static_cast<double>(n + 1) * bs <= bt_max) {
        ++n;
    }
    while (n >= 1 && static_cast<double>(n) * bs > bt_max) {
        --n;
    }
    return n;
}

// Largest bs with n * bs <= bt_max in double arithmetic.
double max_bs_within_budget(double bt_max, int n) {
    double bs = bt_max / static_cast<double>(n);
    while (static_cast<double>(n) * bs > bt_max) {
        bs = std::nextafter(bs, 0.0);
    }
    return bs;
}

std::vector<double> make_bs_grid(double lo, double hi, double step) {
    if (!std::isfinite(step) || step <= 0.0) {
        throw invalid_parameter("bs_step must be > 0");
    }
    if ((hi - lo) / step > kMaxGridPoints) {
        throw invalid_parameter("bs_step too small for the requested span");
    }
    std::vector<double> grid;
    grid.push_back(lo);
    for (long i = 1;; ++i) {
        const double v = lo + static_cast<double>(i) * step;
        if (v >= hi) {
            break;
        }
        if (v > grid.back()) { // guards against sub-ulp steps
            grid.push_back(v);
        }
    }
    if (grid.back() < hi) {
        grid.push_back(hi);
    }
    return grid;
}

std::vector<ConstraintLabel> binding_constraints_at(const DesignPoint& p,
                                                    const DesignConstraints& c) {
    std::vector<ConstraintLabel> labels;
    if (p.n == c.n_max) {
        labels.push_back(ConstraintLabel::n_max);
    }
    if (nearly_equal(p.bs_hz, c.bs_max_hz)) {
        labels.push_back(ConstraintLabel::bs_max);
    }
    if (nearly_equal(p.bt_hz, c.bt_max_hz)) {
        labels.push_back(ConstraintLabel::bt_max);
    }
    const double duty_bound = duty_cycle_bs_bound(c.alpha_max, c.channel.delay_spread_s);
    if (duty_bound > 0.0 && std::isfinite(duty_bound) && nearly_equal(p.bs_hz, duty_bound)) {
        labels.push_back(ConstraintLabel::alpha_max);
    }
    return labels;
}

DesignPoint make_point_checked(int n, double bs, const DesignConstraints& c) {
    PointEvaluation ev = evaluate_point(n, bs, c);
    if (!ev.valid()) {
        throw std::logic_error("optimizer produced an infeasible point");
    }
    return *ev.point;
}

struct Candidate {
    double capacity = -1.0;
    int n = 0;
    double bs = 0.0;

    // Capacity first; ties prefer more subbands, then more bandwidth.
    bool beats(const Candidate& other) const {
        if (capacity != other.capacity) {
            return capacity > other.capacity;
        }
        if (n != other.n) {
            return n > other.n;
        }
        return bs > other.bs;
    }
};

} // namespace

void DesignConstraints::validate() const {
    if (n_max < 1) {
        throw invalid_parameter("n_max must be >= 1");
    }
    if (!std::isfinite(bs_max_hz) || bs_max_hz <= 0.0) {
        throw invalid_parameter("bs_max must be > 0");
    }
    if (!std::isfinite(bt_max_hz) || bt_max_hz <= 0.0) {
        throw invalid_parameter("bt_max must be > 0");
    }
    if (!std::isfinite(alpha_max) || alpha_max <= 0.0 || alpha_max > 1.0) {
        throw invalid_parameter("alpha_max must be in (0, 1]");
    }
    if (bs_max_hz > bt_max_hz) {
        throw invalid_parameter("bs_max cannot exceed bt_max");
    }
    if (!(channel.delay_spread_s >= 0.0) || !std::isfinite(channel.delay_spread_s)) {
        throw invalid_parameter("delay_spread must be >= 0 and finite");
    }
}

const char* constraint_label_name(ConstraintLabel label) {
    switch (label) {
    case ConstraintLabel::n_max:
        return "n_max";
    case ConstraintLabel::bs_max:
        return "bs_max";
    case ConstraintLabel::bt_max:
        return "bt_max";
    case ConstraintLabel::alpha_max:
        return "alpha_max";
    }
    return "unknown";
}

const char* bs_min_branch_name(BsMinBranch branch) {
    switch (branch) {
    case BsMinBranch::bandwidth_split:
        return "bandwidth_split";
    case BsMinBranch::duty_cycle:
        return "duty_cycle";
    case BsMinBranch::both:
        return "both";
    }
    return "unknown";
}

infeasible_design::infeasible_design(double bs_min_hz, BsMinBranch branch)
    : std::runtime_error("infeasible design: bs_max < bs_min = " +
                         std::to_string(bs_min_hz) + " Hz (binding: " +
                         bs_min_branch_name(branch) + ")"),
      bs_min_hz_(bs_min_hz),
      branch_(branch) {}

BsMinResult bs_min_detail(const DesignConstraints& constraints) {
    constraints.validate();
    const double split = constraints.bt_max_hz / static_cast<double>(constraints.n_max);
    if (constraints.alpha_max < 1.0 && constraints.channel.delay_spread_s <= 0.0) {
        throw invalid_parameter(
            "bs_min: duty-cycle bound needs delay_spread > 0 when alpha_max < 1");
    }
    const double duty =
        duty_cycle_bs_bound(constraints.alpha_max, constraints.channel.delay_spread_s);
    if (split > duty) {
        return {split, BsMinBranch::bandwidth_split};
    }
    if (duty > split) {
        return {duty, BsMinBranch::duty_cycle};
    }
    return {split, BsMinBranch::both};
}

double bs_min(const DesignConstraints& constraints) {
    return bs_min_detail(constraints).value_hz;
}

double mb_capacity(int n, double bs_hz, const ChannelProfile& channel) {
    if (n < 1) {
        throw invalid_parameter("n must be >= 1");
    }
    return static_cast<double>(n) * ir_uwb_capacity(pulse_from_bandwidth(bs_hz), channel);
}

PointEvaluation evaluate_point(int n, double bs_hz, const DesignConstraints& constraints) {
    constraints.validate();
    if (!std::isfinite(bs_hz) || bs_hz <= 0.0) {
        throw invalid_parameter("bs must be > 0");
    }

    PointEvaluation ev;
    if (n < 1) {
        ev.violations.push_back({ConstraintLabel::n_max, static_cast<double>(1 - n)});
    } else if (n > constraints.n_max) {
        ev.violations.push_back(
            {ConstraintLabel::n_max, static_cast<double>(n - constraints.n_max)});
    }
    if (bs_hz > constraints.bs_max_hz) {
        ev.violations.push_back({ConstraintLabel::bs_max, bs_hz - constraints.bs_max_hz});
    }
    const double bt = static_cast<double>(n) * bs_hz;
    if (bt > constraints.bt_max_hz) {
        ev.violations.push_back({ConstraintLabel::bt_max, bt - constraints.bt_max_hz});
    }
    const double duty_bound =
        duty_cycle_bs_bound(constraints.alpha_max, constraints.channel.delay_spread_s);
    if (bs_hz < duty_bound) {
        ev.violations.push_back({ConstraintLabel::alpha_max, duty_bound - bs_hz});
    }
    if (!ev.violations.empty()) {
        return ev;
    }

    const PulseConfig pulse = pulse_from_bandwidth(bs_hz);
    const double per = ir_uwb_capacity(pulse, constraints.channel);
    DesignPoint p;
    p.n = n;
    p.bs_hz = bs_hz;
    p.bt_hz = bt;
    p.per_subband_capacity_bps = per;
    p.total_capacity_bps = static_cast<double>(n) * per;
    p.duty_cycle = duty_cycle(pulse, constraints.channel);
    ev.point = p;
    return ev;
}

OptimizationResult optimize(const DesignConstraints& constraints) {
    constraints.validate();
    if (constraints.channel.delay_spread_s <= 0.0) {
        throw invalid_parameter("optimize requires delay_spread > 0");
    }
    const BsMinResult bound = bs_min_detail(constraints);

    OptimizationResult result;
    result.bs_min_hz = bound.value_hz;
    result.bs_min_branch = bound.branch;
    if (constraints.bs_max_hz < bound.value_hz) {
        result.feasible = false;
        return result;
    }
    result.feasible = true;

    // Capacity rises with n on both branches of bs(n) = min(bs_max, Bt/n),
    // so the optimum sits at the largest n that leaves room for bs_min.
    const int n_star =
        subbands_within_budget(constraints.bt_max_hz, bound.value_hz, constraints.n_max);
    const double bs_star = std::min(constraints.bs_max_hz,
                                    max_bs_within_budget(constraints.bt_max_hz, n_star));
    result.optimum = make_point_checked(n_star, bs_star, constraints);
    result.binding_constraints = binding_constraints_at(*result.optimum, constraints);
    return result;
}

OptimizationResult brute_force_optimize(const DesignConstraints& constraints,
                                        double bs_step_hz) {
    constraints.validate();
    if (constraints.channel.delay_spread_s <= 0.0) {
        throw invalid_parameter("optimize requires delay_spread > 0");
    }
    const BsMinResult bound = bs_min_detail(constraints);

    OptimizationResult result;
    result.bs_min_hz = bound.value_hz;
    result.bs_min_branch = bound.branch;
    if (constraints.bs_max_hz < bound.value_hz) {
        result.feasible = false;
        return result;
    }
    result.feasible = true;

    const std::vector<double> grid =
        make_bs_grid(bound.value_hz, constraints.bs_max_hz, bs_step_hz);
    std::vector<double> caps(grid.size());
    kernels::subband_capacity(grid.data(), caps.data(), grid.size(),
                              constraints.channel.delay_spread_s);

    const double duty_bound =
        duty_cycle_bs_bound(constraints.alpha_max, constraints.channel.delay_spread_s);
    Candidate best;
    for (int n = 1; n <= constraints.n_max; ++n) {
        const double dn = static_cast<double>(n);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double bs = grid[i];
            if (bs > constraints.bs_max_hz || dn * bs > constraints.bt_max_hz ||
                bs < duty_bound) {
                continue;
            }
            const Candidate cand{dn * caps[i], n, bs};
            if (cand.beats(best)) {
                best = cand;
            }
        }
    }
    if (best.n < 1) {
        // Cannot happen: the grid starts at bs_min, feasible for n = 1.
        throw std::logic_error("brute force found no feasible grid point");
    }
    result.optimum = make_point_checked(best.n, best.bs, constraints);
    result.binding_constraints = binding_constraints_at(*result.optimum, constraints);
    return result;
}

SweepTable sweep(const DesignConstraints& constraints, double bs_step_hz) {
    constraints.validate();
    const BsMinResult bound = bs_min_detail(constraints);
    if (constraints.bs_max_hz < bound.value_hz) {
        throw infeasible_design(bound.value_hz, bound.branch);
    }

    SweepTable table;
    table.step_hz = bs_step_hz;
    table.constraints = constraints;

    const std::vector<double> grid =
        make_bs_grid(bound.value_hz, constraints.bs_max_hz, bs_step_hz);
    std::vector<double> caps(grid.size());
    std::vector<double> duties(grid.size());
    const double d = constraints.channel.delay_spread_s;
    kernels::subband_capacity(grid.data(), caps.data(), grid.size(), d);
    kernels::subband_duty_cycle(grid.data(), duties.data(), grid.size(), d);

    table.rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const int n =
            subbands_within_budget(constraints.bt_max_hz, grid[i], constraints.n_max);
        if (n < 1) {
            continue;
        }
        DesignPoint p;
        p.n = n;
        p.bs_hz = grid[i];
        p.bt_hz = static_cast<double>(n) * grid[i];
        p.per_subband_capacity_bps = caps[i];
        p.total_capacity_bps = static_cast<double>(n) * caps[i];
        p.duty_cycle = duties[i];
        table.rows.push_back(p);
    }
    return table;
}

} // namespace uwbd
