#include "uwbd/report.hpp"

#include <limits>
#include <string>
#include <vector>

#include "test_util.hpp"

using namespace uwbd;

static DesignConstraints scenario() {
    return DesignConstraints{30, 750e6, 7.5e9, 0.2, ChannelProfile(9e-9)};
}

static void sweep_csv_cases() {
    SweepTable table;
    table.rows = {
        DesignPoint{16, 464e6, 7.424e9, 89644513.137558, 1434312210.2009275,
                    0.19319938176197837},
        DesignPoint{10, 750e6, 7.5e9, 96774193.548387, 967741935.48387,
                    0.12903225806451613},
    };
    table.step_hz = 50e6;
    table.constraints = scenario();

    const std::string expected =
        "bs_hz,n,bt_hz,per_subband_capacity_bps,total_capacity_bps,duty_cycle\n"
        "4.64e+08,16,7.424e+09,8.964e+07,1.434e+09,0.1932\n"
        "7.5e+08,10,7.5e+09,9.677e+07,9.677e+08,0.129\n";
    T_CHECK(report::to_csv(table) == expected);

    table.rows.clear();
    T_CHECK(report::to_csv(table) ==
            "bs_hz,n,bt_hz,per_subband_capacity_bps,total_capacity_bps,duty_cycle\n");
}

static void fig1_csv_cases() {
    const double inf = std::numeric_limits<double>::infinity();
    const std::vector<Fig1Row> rows = {
        Fig1Row{1e-8, 1e8, 5e7, false, true},
        Fig1Row{5e-8, 1e10, 1.996e7, false, false},
        Fig1Row{1e-8, inf, 1e8, true, true},
    };

    // asymptote rows leave the bandwidth column empty
    const std::string expected =
        "delay_spread_s,bandwidth_hz,capacity_bps,kind,snr_ok\n"
        "1e-08,1e+08,5e+07,curve,1\n"
        "5e-08,1e+10,1.996e+07,curve,0\n"
        "1e-08,,1e+08,asymptote,1\n";
    T_CHECK(report::to_csv(rows) == expected);
}

static void optimization_csv_cases() {
    OptimizationResult feasible;
    feasible.feasible = true;
    feasible.bs_min_hz = 444444444.4444445;
    feasible.bs_min_branch = BsMinBranch::duty_cycle;
    feasible.optimum = DesignPoint{16, 468750000.0, 7.5e9, 89820359.28143713,
                                   1437125748.502994, 0.19161676646706588};
    feasible.binding_constraints = {ConstraintLabel::bt_max};

    const std::string expected_feasible =
        "key,value\n"
        "feasible,1\n"
        "bs_min_hz,4.444e+08\n"
        "bs_min_branch,duty_cycle\n"
        "n,16\n"
        "bs_hz,4.688e+08\n"
        "bt_hz,7.5e+09\n"
        "per_subband_capacity_bps,8.982e+07\n"
        "total_capacity_bps,1.437e+09\n"
        "duty_cycle,0.1916\n"
        "binding_constraints,bt_max\n";
    T_CHECK(report::to_csv(feasible) == expected_feasible);

    OptimizationResult infeasible;
    infeasible.feasible = false;
    infeasible.bs_min_hz = 5e8;
    infeasible.bs_min_branch = BsMinBranch::bandwidth_split;

    const std::string expected_infeasible =
        "key,value\n"
        "feasible,0\n"
        "bs_min_hz,5e+08\n"
        "bs_min_branch,bandwidth_split\n";
    T_CHECK(report::to_csv(infeasible) == expected_infeasible);
}

static void label_join_cases() {
    T_CHECK(report::join_labels({}) == "");
    T_CHECK(report::join_labels({ConstraintLabel::bt_max}) == "bt_max");
    T_CHECK(report::join_labels({ConstraintLabel::n_max, ConstraintLabel::bs_max,
                                 ConstraintLabel::bt_max, ConstraintLabel::alpha_max}) ==
            "n_max;bs_max;bt_max;alpha_max");

    T_CHECK(report::format_value(0.2) == "0.2");
    T_CHECK(report::format_value(444444444.4444445) == "4.444e+08");
}

int main() {
    sweep_csv_cases();
    fig1_csv_cases();
    optimization_csv_cases();
    label_join_cases();
    return testutil::finish("report formatting");
}
