// uwbd: design-space exploration for multiband impulse-radio UWB links.
// Subcommands wrap the library; all policy here is I/O policy (flag parsing,
// config-file merge, CSV/JSON emission, exit codes).
//
// Exit codes: 0 success, 2 invalid input, 3 infeasible design.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "uwbd/capacity.hpp"
#include "uwbd/optimizer.hpp"
#include "uwbd/pdp.hpp"
#include "uwbd/report.hpp"
#include "uwbd/units.hpp"

namespace {

using nlohmann::ordered_json;
using namespace uwbd;

// Where a merged-config value came from. Flags beat the config file; two
// delay-spread sources at the same precedence are a user error.
enum class Source { none, config_file, flag };

struct Merged {
    std::optional<int> n_max;
    std::optional<double> bs_max_hz;
    std::optional<double> bt_max_hz;
    std::optional<double> alpha_max;
    std::optional<double> step_hz;
    std::optional<double> delay_spread_s;
    Source delay_spread_source = Source::none;
    std::optional<std::string> pdp_path;
    Source pdp_source = Source::none;
    PdpFormat pdp_format = PdpFormat::csv_ns_db;
    DelaySpreadStatistic statistic = DelaySpreadStatistic::rms;
};

using KvRows = std::vector<std::pair<std::string, std::string>>;

std::string kv_csv(const KvRows& rows) {
    std::string out = "key,value\n";
    for (const auto& [key, value] : rows) {
        out += key;
        out += ',';
        out += value;
        out += '\n';
    }
    return out;
}

double freq_flag(const std::string& raw, const char* flag) {
    double v = 0.0;
    try {
        v = units::parse_frequency(raw);
    } catch (const invalid_parameter& e) {
        throw invalid_parameter(std::string(flag) + ": " + e.what());
    }
    if (v <= 0.0) {
        throw invalid_parameter(std::string(flag) + ": must be > 0");
    }
    return v;
}

double time_flag(const std::string& raw, const char* flag, bool require_positive) {
    double v = 0.0;
    try {
        v = units::parse_time(raw);
    } catch (const invalid_parameter& e) {
        throw invalid_parameter(std::string(flag) + ": " + e.what());
    }
    if (v < 0.0 || (require_positive && v == 0.0)) {
        throw invalid_parameter(std::string(flag) +
                                (require_positive ? ": must be > 0" : ": must be >= 0"));
    }
    return v;
}

double ratio_flag(const std::string& raw, const char* flag) {
    double v = 0.0;
    try {
        v = units::parse_double(raw);
    } catch (const invalid_parameter& e) {
        throw invalid_parameter(std::string(flag) + ": " + e.what());
    }
    if (!(v > 0.0) || v > 1.0) {
        throw invalid_parameter(std::string(flag) + ": must be in (0, 1]");
    }
    return v;
}

int count_flag(const std::string& raw, const char* flag) {
    int v = 0;
    const char* begin = raw.data();
    const char* end = begin + raw.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end || v < 1) {
        throw invalid_parameter(std::string(flag) + ": must be an integer >= 1");
    }
    return v;
}

PdpFormat pdp_format_from(const std::string& name, const char* where) {
    if (name == "csv-ns-db") {
        return PdpFormat::csv_ns_db;
    }
    if (name == "csv-ns-linear") {
        return PdpFormat::csv_ns_linear;
    }
    throw invalid_parameter(std::string(where) + ": unknown PDP format '" + name +
                            "' (csv-ns-db, csv-ns-linear)");
}

DelaySpreadStatistic statistic_from(const std::string& name, const char* where) {
    if (name == "rms") {
        return DelaySpreadStatistic::rms;
    }
    if (name == "max-excess") {
        return DelaySpreadStatistic::max_excess;
    }
    throw invalid_parameter(std::string(where) + ": unknown statistic '" + name +
                            "' (rms, max-excess)");
}

// Config-file values: plain JSON numbers are SI base units, strings may carry
// a unit suffix.
double config_quantity(const ordered_json& v, const std::string& key,
                       double (*parse)(std::string_view)) {
    try {
        if (v.is_number()) {
            return v.get<double>();
        }
        if (v.is_string()) {
            return parse(v.get<std::string>());
        }
    } catch (const invalid_parameter& e) {
        throw invalid_parameter("config: " + key + ": " + e.what());
    }
    throw invalid_parameter("config: " + key + " must be a number or a unit string");
}

Merged config_from_json(const ordered_json& j) {
    if (!j.is_object()) {
        throw invalid_parameter("config: top level must be a JSON object");
    }
    Merged m;
    for (const auto& [key, v] : j.items()) {
        if (key == "n_max") {
            if (!v.is_number_integer() || v.get<long long>() < 1) {
                throw invalid_parameter("config: n_max must be an integer >= 1");
            }
            m.n_max = v.get<int>();
        } else if (key == "bs_max" || key == "bs_max_hz") {
            m.bs_max_hz = config_quantity(v, key, units::parse_frequency);
        } else if (key == "bt_max" || key == "bt_max_hz") {
            m.bt_max_hz = config_quantity(v, key, units::parse_frequency);
        } else if (key == "alpha_max") {
            if (!v.is_number()) {
                throw invalid_parameter("config: alpha_max must be a number");
            }
            m.alpha_max = v.get<double>();
        } else if (key == "delay_spread" || key == "delay_spread_s") {
            m.delay_spread_s = config_quantity(v, key, units::parse_time);
            m.delay_spread_source = Source::config_file;
        } else if (key == "channel") {
            if (!v.is_object() || v.size() != 1 || !v.contains("delay_spread_s") ||
                !v["delay_spread_s"].is_number()) {
                throw invalid_parameter(
                    "config: channel must be {\"delay_spread_s\": <number>}");
            }
            m.delay_spread_s = v["delay_spread_s"].get<double>();
            m.delay_spread_source = Source::config_file;
        } else if (key == "step" || key == "step_hz") {
            m.step_hz = config_quantity(v, key, units::parse_frequency);
        } else if (key == "pdp") {
            if (!v.is_string()) {
                throw invalid_parameter("config: pdp must be a path string");
            }
            m.pdp_path = v.get<std::string>();
            m.pdp_source = Source::config_file;
        } else if (key == "pdp_format") {
            if (!v.is_string()) {
                throw invalid_parameter("config: pdp_format must be a string");
            }
            m.pdp_format = pdp_format_from(v.get<std::string>(), "config: pdp_format");
        } else if (key == "statistic") {
            if (!v.is_string()) {
                throw invalid_parameter("config: statistic must be a string");
            }
            m.statistic = statistic_from(v.get<std::string>(), "config: statistic");
        } else {
            throw invalid_parameter("config: unknown key '" + key + "'");
        }
    }
    return m;
}

Merged load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw invalid_parameter("--config: cannot open " + path);
    }
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw parse_error("config " + path + ": " + e.what());
    }
    return config_from_json(j);
}

ordered_json point_json(const DesignPoint& p) {
    ordered_json j;
    j["n"] = p.n;
    j["bs_hz"] = p.bs_hz;
    j["bt_hz"] = p.bt_hz;
    j["per_subband_capacity_bps"] = p.per_subband_capacity_bps;
    j["total_capacity_bps"] = p.total_capacity_bps;
    j["duty_cycle"] = p.duty_cycle;
    return j;
}

ordered_json optimization_json(const OptimizationResult& r) {
    ordered_json j;
    j["feasible"] = r.feasible;
    j["bs_min_hz"] = r.bs_min_hz;
    j["bs_min_branch"] = bs_min_branch_name(r.bs_min_branch);
    if (r.optimum) {
        j["optimum"] = point_json(*r.optimum);
        ordered_json labels = ordered_json::array();
        for (const ConstraintLabel label : r.binding_constraints) {
            labels.push_back(constraint_label_name(label));
        }
        j["binding_constraints"] = labels;
    }
    return j;
}

// to_csv(OptimizationResult) minus its "key,value" header line, for appending
// to an existing key,value table.
std::string optimization_kv_body(const OptimizationResult& r) {
    const std::string full = report::to_csv(r);
    return full.substr(full.find('\n') + 1);
}

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) {
            return parts;
        }
        start = comma + 1;
    }
}

} // namespace

int run(int argc, char** argv);

int main(int argc, char** argv) {
    return run(argc, argv);
}

int run(int argc, char** argv) {
    CLI::App app{"Design-space exploration for multiband impulse-radio UWB links"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format = "csv";
    std::string output_path;
    app.add_option("--config", config_path,
                   "JSON config file; flags override its values")
        ->envname("UWBD_CONFIG");
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", output_path, "Write the report to this file");

    // Scenario flags live on the root so every subcommand shares one merge
    // path; subcommands that do not use a value ignore it.
    std::string f_bt_max, f_bs_max, f_alpha_max, f_n_max, f_delay_spread, f_pdp,
        f_pdp_format, f_statistic, f_step;
    auto* o_bt_max = app.add_option("--bt-max", f_bt_max, "Total bandwidth cap, e.g. 7.5GHz");
    auto* o_bs_max = app.add_option("--bs-max", f_bs_max, "Widest allowed subband");
    auto* o_alpha_max =
        app.add_option("--alpha-max", f_alpha_max, "Duty-cycle cap in (0, 1]");
    auto* o_n_max = app.add_option("--n-max", f_n_max, "Most subbands the hardware can form");
    auto* o_delay_spread =
        app.add_option("--delay-spread", f_delay_spread, "Channel delay spread, e.g. 9ns");
    auto* o_pdp =
        app.add_option("--pdp", f_pdp, "Power-delay-profile file to take the delay spread from");
    auto* o_pdp_format = app.add_option("--pdp-format", f_pdp_format, "PDP file format")
                             ->check(CLI::IsMember({"csv-ns-db", "csv-ns-linear"}));
    auto* o_statistic = app.add_option("--statistic", f_statistic, "Delay-spread statistic")
                            ->check(CLI::IsMember({"rms", "max-excess"}));
    auto* o_step = app.add_option("--step", f_step, "Sweep grid spacing, e.g. 0.1MHz");
    o_delay_spread->excludes(o_pdp);

    auto* cmd_capacity = app.add_subcommand(
        "capacity", "Capacity and duty cycle for one pulse/bandwidth configuration");
    cmd_capacity->fallthrough();
    std::string f_subband_bw, f_pulse_duration, f_sh_bandwidth;
    bool want_shannon = false;
    double f_snr = 0.0, f_signal_power = 0.0, f_noise_density = 0.0;
    auto* o_subband_bw = cmd_capacity->add_option(
        "--subband-bandwidth", f_subband_bw,
        "Subband bandwidth; the pulse duration is its reciprocal");
    auto* o_pulse_duration = cmd_capacity->add_option(
        "--pulse-duration", f_pulse_duration, "Pulse duration given directly");
    o_subband_bw->excludes(o_pulse_duration);
    cmd_capacity->add_flag("--shannon", want_shannon, "Also print AWGN Shannon capacity");
    auto* o_sh_bandwidth =
        cmd_capacity->add_option("--bandwidth", f_sh_bandwidth, "Bandwidth for --shannon");
    auto* o_snr = cmd_capacity->add_option("--snr", f_snr, "Linear SNR for --shannon");
    auto* o_signal_power = cmd_capacity->add_option(
        "--signal-power", f_signal_power, "Signal power in W (with --noise-density)");
    auto* o_noise_density = cmd_capacity->add_option(
        "--noise-density", f_noise_density, "Noise spectral density in W/Hz");
    o_snr->excludes(o_signal_power);
    o_snr->excludes(o_noise_density);

    auto* cmd_optimize = app.add_subcommand(
        "optimize", "Best feasible subband count and bandwidth under the constraints");
    cmd_optimize->fallthrough();

    auto* cmd_sweep = app.add_subcommand(
        "sweep", "Design table over the feasible subband-bandwidth range");
    cmd_sweep->fallthrough();

    auto* cmd_fig1 = app.add_subcommand(
        "fig1", "Capacity-versus-bandwidth curves with their 1/d_spread asymptotes");
    cmd_fig1->fallthrough();
    std::string f_spreads = "10ns,20ns,50ns";
    std::string f_bw_single, f_bw_min = "10MHz", f_bw_max = "100GHz";
    int f_points = 50;
    bool f_linear_grid = false;
    double g_signal_power = 0.0, g_noise_density = 0.0, g_min_snr_db = 3.0;
    cmd_fig1->add_option("--delay-spreads", f_spreads, "Comma-separated delay spreads")
        ->capture_default_str();
    auto* o_bw_single = cmd_fig1->add_option(
        "--bandwidth", f_bw_single, "Evaluate one bandwidth instead of a range");
    auto* o_bw_min = cmd_fig1->add_option("--bandwidth-min", f_bw_min, "Range start")
                         ->capture_default_str();
    auto* o_bw_max = cmd_fig1->add_option("--bandwidth-max", f_bw_max, "Range end")
                         ->capture_default_str();
    auto* o_points = cmd_fig1->add_option("--points", f_points, "Grid points per curve")
                         ->capture_default_str();
    auto* o_linear_grid =
        cmd_fig1->add_flag("--linear-grid", f_linear_grid, "Linear grid spacing (default log)");
    auto* o_g_signal = cmd_fig1->add_option("--signal-power", g_signal_power,
                                            "Signal power in W for the SNR validity gate");
    auto* o_g_noise = cmd_fig1->add_option("--noise-density", g_noise_density,
                                           "Noise spectral density in W/Hz for the gate");
    cmd_fig1->add_option("--min-snr-db", g_min_snr_db, "SNR gate threshold in dB")
        ->capture_default_str();
    o_bw_single->excludes(o_bw_min);
    o_bw_single->excludes(o_bw_max);
    o_bw_single->excludes(o_points);
    o_bw_single->excludes(o_linear_grid);

    auto* cmd_ingest = app.add_subcommand(
        "ingest-pdp", "Delay spread of a power-delay-profile file");
    cmd_ingest->fallthrough();
    bool chain_optimize = false;
    cmd_ingest->add_flag("--optimize", chain_optimize,
                         "Chain into the optimizer using the computed delay spread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Merged m;
        if (!config_path.empty()) {
            m = load_config(config_path);
        }
        if (o_bt_max->count()) {
            m.bt_max_hz = freq_flag(f_bt_max, "--bt-max");
        }
        if (o_bs_max->count()) {
            m.bs_max_hz = freq_flag(f_bs_max, "--bs-max");
        }
        if (o_alpha_max->count()) {
            m.alpha_max = ratio_flag(f_alpha_max, "--alpha-max");
        }
        if (o_n_max->count()) {
            m.n_max = count_flag(f_n_max, "--n-max");
        }
        if (o_step->count()) {
            m.step_hz = freq_flag(f_step, "--step");
        }
        if (o_pdp_format->count()) {
            m.pdp_format = pdp_format_from(f_pdp_format, "--pdp-format");
        }
        if (o_statistic->count()) {
            m.statistic = statistic_from(f_statistic, "--statistic");
        }
        if (o_delay_spread->count()) {
            m.delay_spread_s = time_flag(f_delay_spread, "--delay-spread", false);
            m.delay_spread_source = Source::flag;
        }
        if (o_pdp->count()) {
            m.pdp_path = f_pdp;
            m.pdp_source = Source::flag;
        }
        // A flag-level source displaces a config-file one; two sources at the
        // same level cannot be ranked.
        if (m.delay_spread_s && m.pdp_path) {
            if (m.delay_spread_source == Source::flag && m.pdp_source != Source::flag) {
                m.pdp_path.reset();
                m.pdp_source = Source::none;
            } else if (m.pdp_source == Source::flag &&
                       m.delay_spread_source != Source::flag) {
                m.delay_spread_s.reset();
                m.delay_spread_source = Source::none;
            } else {
                throw invalid_parameter(
                    "exactly one delay-spread source: --delay-spread or --pdp");
            }
        }

        // Resolving turns a PDP path into a number once; afterwards the echo
        // and any chained command see the same delay_spread_s.
        auto resolve_delay_spread = [&m]() -> double {
            if (m.delay_spread_s) {
                return *m.delay_spread_s;
            }
            if (m.pdp_path) {
                const PowerDelayProfile pdp = load_pdp(*m.pdp_path, m.pdp_format);
                m.delay_spread_s = delay_spread(pdp, m.statistic);
                return *m.delay_spread_s;
            }
            throw invalid_parameter(
                "a delay-spread source is required: --delay-spread or --pdp");
        };

        auto build_constraints = [&]() -> DesignConstraints {
            std::string missing;
            auto note = [&missing](const char* flag) {
                if (!missing.empty()) {
                    missing += ", ";
                }
                missing += flag;
            };
            if (!m.bt_max_hz) {
                note("--bt-max");
            }
            if (!m.bs_max_hz) {
                note("--bs-max");
            }
            if (!m.alpha_max) {
                note("--alpha-max");
            }
            if (!m.n_max) {
                note("--n-max");
            }
            if (!m.delay_spread_s && !m.pdp_path) {
                note("--delay-spread (or --pdp)");
            }
            if (!missing.empty()) {
                throw invalid_parameter("missing required: " + missing);
            }
            DesignConstraints c{*m.n_max, *m.bs_max_hz, *m.bt_max_hz, *m.alpha_max,
                                ChannelProfile(resolve_delay_spread())};
            c.validate();
            return c;
        };

        auto config_echo = [&]() -> ordered_json {
            ordered_json j;
            j["format"] = format;
            if (!output_path.empty()) {
                j["output"] = output_path;
            }
            if (m.n_max) {
                j["n_max"] = *m.n_max;
            }
            if (m.bs_max_hz) {
                j["bs_max_hz"] = *m.bs_max_hz;
            }
            if (m.bt_max_hz) {
                j["bt_max_hz"] = *m.bt_max_hz;
            }
            if (m.alpha_max) {
                j["alpha_max"] = *m.alpha_max;
            }
            if (m.delay_spread_s) {
                j["delay_spread_s"] = *m.delay_spread_s;
            }
            if (m.pdp_path) {
                j["pdp"] = *m.pdp_path;
                j["pdp_format"] = pdp_format_name(m.pdp_format);
                j["statistic"] = delay_spread_statistic_name(m.statistic);
            }
            j["step_hz"] = m.step_hz.value_or(default_sweep_step_hz);
            return j;
        };

        auto emit = [&](const std::string& text) {
            if (output_path.empty()) {
                std::cout << text;
                return;
            }
            std::ofstream out(output_path, std::ios::binary);
            if (!out) {
                throw invalid_parameter("--output: cannot open " + output_path);
            }
            out << text;
            out.flush();
            if (!out) {
                throw invalid_parameter("--output: write to " + output_path + " failed");
            }
        };

        if (*cmd_capacity) {
            const bool want_ir = o_subband_bw->count() || o_pulse_duration->count();
            if (!want_ir && !want_shannon) {
                throw invalid_parameter("capacity: nothing to compute; give "
                                        "--subband-bandwidth, --pulse-duration, or --shannon");
            }
            KvRows rows;
            ordered_json results;
            if (want_ir) {
                const PulseConfig pulse =
                    o_subband_bw->count()
                        ? pulse_from_bandwidth(freq_flag(f_subband_bw, "--subband-bandwidth"))
                        : PulseConfig::from_duration(
                              time_flag(f_pulse_duration, "--pulse-duration", true));
                const ChannelProfile channel(resolve_delay_spread());
                const double per = ir_uwb_capacity(pulse, channel);
                const double duty = duty_cycle(pulse, channel);
                rows.emplace_back("pulse_duration_s",
                                  report::format_value(pulse.pulse_duration_s));
                rows.emplace_back("delay_spread_s",
                                  report::format_value(channel.delay_spread_s));
                rows.emplace_back("per_subband_capacity_bps", report::format_value(per));
                rows.emplace_back("duty_cycle", report::format_value(duty));
                ordered_json ir;
                ir["pulse_duration_s"] = pulse.pulse_duration_s;
                ir["delay_spread_s"] = channel.delay_spread_s;
                ir["per_subband_capacity_bps"] = per;
                ir["duty_cycle"] = duty;
                results["ir_uwb"] = ir;
            }
            if (want_shannon) {
                if (!o_sh_bandwidth->count()) {
                    throw invalid_parameter("--shannon requires --bandwidth");
                }
                const double b = freq_flag(f_sh_bandwidth, "--bandwidth");
                AwgnLinkParams link = AwgnLinkParams::from_snr(b, 0.0);
                if (o_snr->count()) {
                    if (f_snr < 0.0) {
                        throw invalid_parameter("--snr: must be >= 0");
                    }
                    link = AwgnLinkParams::from_snr(b, f_snr);
                } else if (o_signal_power->count() && o_noise_density->count()) {
                    if (f_signal_power <= 0.0) {
                        throw invalid_parameter("--signal-power: must be > 0");
                    }
                    if (f_noise_density <= 0.0) {
                        throw invalid_parameter("--noise-density: must be > 0");
                    }
                    link = AwgnLinkParams::from_power(b, f_signal_power, f_noise_density);
                } else {
                    throw invalid_parameter(
                        "--shannon needs --snr or both --signal-power and --noise-density");
                }
                const double c = shannon_capacity(link);
                rows.emplace_back("shannon_bandwidth_hz", report::format_value(b));
                rows.emplace_back("shannon_snr", report::format_value(link.snr()));
                rows.emplace_back("shannon_capacity_bps", report::format_value(c));
                ordered_json sh;
                sh["bandwidth_hz"] = b;
                sh["snr"] = link.snr();
                sh["capacity_bps"] = c;
                results["shannon"] = sh;
            }
            if (format == "json") {
                ordered_json j;
                j["config"] = config_echo();
                j["results"] = results;
                emit(j.dump(2) + "\n");
            } else {
                emit(kv_csv(rows));
            }
            return 0;
        }

        if (*cmd_optimize) {
            const DesignConstraints c = build_constraints();
            const OptimizationResult r = optimize(c);
            if (format == "json") {
                ordered_json j;
                j["config"] = config_echo();
                j["result"] = optimization_json(r);
                emit(j.dump(2) + "\n");
            } else {
                emit(report::to_csv(r));
            }
            if (!r.feasible) {
                std::cerr << "design infeasible: bs_max "
                          << report::format_value(c.bs_max_hz) << " Hz < bs_min "
                          << report::format_value(r.bs_min_hz) << " Hz ("
                          << bs_min_branch_name(r.bs_min_branch) << " branch)\n";
                return 3;
            }
            return 0;
        }

        if (*cmd_sweep) {
            const DesignConstraints c = build_constraints();
            const double step = m.step_hz.value_or(default_sweep_step_hz);
            const SweepTable table = sweep(c, step);
            if (format == "json") {
                ordered_json j;
                j["config"] = config_echo();
                ordered_json rows = ordered_json::array();
                for (const DesignPoint& p : table.rows) {
                    ordered_json row;
                    row["bs_hz"] = p.bs_hz;
                    row["n"] = p.n;
                    row["bt_hz"] = p.bt_hz;
                    row["per_subband_capacity_bps"] = p.per_subband_capacity_bps;
                    row["total_capacity_bps"] = p.total_capacity_bps;
                    row["duty_cycle"] = p.duty_cycle;
                    rows.push_back(row);
                }
                j["rows"] = rows;
                emit(j.dump(2) + "\n");
            } else {
                emit(report::to_csv(table));
            }
            return 0;
        }

        if (*cmd_fig1) {
            std::vector<double> spreads;
            for (const std::string& part : split_csv_list(f_spreads)) {
                spreads.push_back(time_flag(part, "--delay-spreads", true));
            }
            std::optional<SnrGate> gate;
            if (o_g_signal->count() != o_g_noise->count()) {
                throw invalid_parameter(
                    "the SNR gate needs both --signal-power and --noise-density");
            }
            if (o_g_signal->count()) {
                if (g_signal_power <= 0.0) {
                    throw invalid_parameter("--signal-power: must be > 0");
                }
                if (g_noise_density <= 0.0) {
                    throw invalid_parameter("--noise-density: must be > 0");
                }
                gate = SnrGate{g_signal_power, g_noise_density, g_min_snr_db};
            }

            std::vector<Fig1Row> rows;
            ordered_json echo = config_echo();
            {
                ordered_json arr = ordered_json::array();
                for (const double d : spreads) {
                    arr.push_back(d);
                }
                echo["delay_spreads_s"] = arr;
            }
            if (o_bw_single->count()) {
                const double b = freq_flag(f_bw_single, "--bandwidth");
                bool snr_ok = true;
                if (gate) {
                    const double snr =
                        gate->signal_power_w / (b * gate->noise_density_w_per_hz);
                    snr_ok = snr > std::pow(10.0, gate->min_snr_db / 10.0);
                }
                const PulseConfig pulse = pulse_from_bandwidth(b);
                for (const double d : spreads) {
                    const ChannelProfile channel(d);
                    rows.push_back({d, b, ir_uwb_capacity(pulse, channel), false, snr_ok});
                    rows.push_back({d, std::numeric_limits<double>::infinity(), 1.0 / d,
                                    true, true});
                }
                echo["bandwidth_hz"] = b;
            } else {
                if (f_points < 2) {
                    throw invalid_parameter("--points: need at least 2 grid points");
                }
                Fig1Options options;
                options.delay_spreads_s = spreads;
                options.bandwidth_min_hz = freq_flag(f_bw_min, "--bandwidth-min");
                options.bandwidth_max_hz = freq_flag(f_bw_max, "--bandwidth-max");
                options.points = f_points;
                options.log_grid = !f_linear_grid;
                options.snr_gate = gate;
                rows = fig1_series(options);
                echo["bandwidth_min_hz"] = options.bandwidth_min_hz;
                echo["bandwidth_max_hz"] = options.bandwidth_max_hz;
                echo["points"] = options.points;
                echo["log_grid"] = options.log_grid;
            }
            if (gate) {
                ordered_json g;
                g["signal_power_w"] = gate->signal_power_w;
                g["noise_density_w_per_hz"] = gate->noise_density_w_per_hz;
                g["min_snr_db"] = gate->min_snr_db;
                echo["snr_gate"] = g;
            }
            if (format == "json") {
                ordered_json j;
                j["config"] = echo;
                ordered_json out_rows = ordered_json::array();
                for (const Fig1Row& r : rows) {
                    ordered_json row;
                    row["delay_spread_s"] = r.delay_spread_s;
                    if (r.asymptote) {
                        row["bandwidth_hz"] = nullptr;
                    } else {
                        row["bandwidth_hz"] = r.bandwidth_hz;
                    }
                    row["capacity_bps"] = r.capacity_bps;
                    row["kind"] = r.asymptote ? "asymptote" : "curve";
                    row["snr_ok"] = r.snr_ok;
                    out_rows.push_back(row);
                }
                j["rows"] = out_rows;
                emit(j.dump(2) + "\n");
            } else {
                emit(report::to_csv(rows));
            }
            return 0;
        }

        if (*cmd_ingest) {
            if (!m.pdp_path) {
                throw invalid_parameter("ingest-pdp requires --pdp");
            }
            const PowerDelayProfile pdp = load_pdp(*m.pdp_path, m.pdp_format);
            const double d = delay_spread(pdp, m.statistic);
            m.delay_spread_s = d;

            KvRows rows;
            rows.emplace_back("pdp", *m.pdp_path);
            rows.emplace_back("pdp_format", pdp_format_name(m.pdp_format));
            rows.emplace_back("statistic", delay_spread_statistic_name(m.statistic));
            rows.emplace_back("tap_count", std::to_string(pdp.taps.size()));
            rows.emplace_back("delay_spread_s", report::format_value(d));
            ordered_json result;
            result["pdp"] = *m.pdp_path;
            result["pdp_format"] = pdp_format_name(m.pdp_format);
            result["statistic"] = delay_spread_statistic_name(m.statistic);
            result["tap_count"] = pdp.taps.size();
            result["delay_spread_s"] = d;

            int code = 0;
            std::string csv_tail;
            if (chain_optimize) {
                const DesignConstraints c = build_constraints();
                const OptimizationResult r = optimize(c);
                result["optimization"] = optimization_json(r);
                csv_tail = optimization_kv_body(r);
                if (!r.feasible) {
                    std::cerr << "design infeasible: bs_max "
                              << report::format_value(c.bs_max_hz) << " Hz < bs_min "
                              << report::format_value(r.bs_min_hz) << " Hz ("
                              << bs_min_branch_name(r.bs_min_branch) << " branch)\n";
                    code = 3;
                }
            }
            if (format == "json") {
                ordered_json j;
                j["config"] = config_echo();
                j["result"] = result;
                emit(j.dump(2) + "\n");
            } else {
                emit(kv_csv(rows) + csv_tail);
            }
            return code;
        }

        throw invalid_parameter("no subcommand selected");
    } catch (const infeasible_design& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const invalid_profile& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const invalid_parameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
