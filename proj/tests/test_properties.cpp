#include <cmath>

#include "uwbd/capacity.hpp"
#include "uwbd/optimizer.hpp"

#include "property_suites.hpp"
#include "test_util.hpp"

using namespace uwbd;

// Feasibility flips exactly at bs_max == bs_min.
static void feasibility_boundary_cases(int cases, std::uint64_t seed) {
    testutil::Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        DesignConstraints c = suites::random_feasible(rng);
        const double floor_hz = uwbd::bs_min(c);

        c.bs_max_hz = floor_hz;
        const OptimizationResult at = optimize(c);
        T_CHECK(at.feasible);
        if (at.optimum) {
            T_CHECK(at.optimum->bs_hz == floor_hz);
        }

        c.bs_max_hz = std::nextafter(floor_hz, 0.0);
        if (c.bs_max_hz > 0.0) {
            const OptimizationResult below = optimize(c);
            T_CHECK(!below.feasible);
            T_CHECK(!below.optimum.has_value());
        }
    }
}

// No feasible point sampled at random beats the reported optimum.
static void optimum_dominance_cases(int cases, std::uint64_t seed) {
    testutil::Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        const DesignConstraints c = suites::random_feasible(rng);
        const OptimizationResult r = optimize(c);
        T_CHECK(r.feasible && r.optimum.has_value());
        if (!r.optimum) {
            continue;
        }
        const double best = r.optimum->total_capacity_bps;
        for (int k = 0; k < 40; ++k) {
            const int n = rng.uniform_int(1, c.n_max);
            const double bs = rng.uniform(r.bs_min_hz, c.bs_max_hz);
            const PointEvaluation eval = evaluate_point(n, bs, c);
            if (!eval.valid()) {
                continue;
            }
            T_CHECK(eval.point->total_capacity_bps <= best * (1.0 + 1e-12));
        }
    }
}

// At B = 100 / d the capacity sits at 1/1.01 of the 1/d ceiling, which is
// the usual working definition of "bandwidth stops paying off".
static void asymptote_approach_cases(int cases, std::uint64_t seed) {
    testutil::Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        const double d = rng.log_uniform(1e-9, 1e-7);
        const double cap = ir_uwb_capacity(pulse_from_bandwidth(100.0 / d),
                                           ChannelProfile(d));
        const double ratio = cap * d;
        T_CLOSE(ratio, 100.0 / 101.0, 1e-12);
        T_CHECK(ratio < 1.0);
    }
}

int main() {
    suites::oracle_equivalence(200, 0x5eed0001);
    suites::duty_cycle_identity(400, 0x5eed0002);
    suites::monotonicity(150, 0x5eed0003);
    suites::sawtooth(60, 0x5eed0004);
    suites::bandwidth_budget(120, 0x5eed0005);
    suites::scale_covariance(150, 0x5eed0006);
    suites::pdp_invariance(300, 0x5eed0007);
    feasibility_boundary_cases(150, 0x5eed0008);
    optimum_dominance_cases(120, 0x5eed0009);
    asymptote_approach_cases(200, 0x5eed000a);
    return testutil::finish("randomized properties");
}
