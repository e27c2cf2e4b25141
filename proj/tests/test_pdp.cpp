#include "uwbd/pdp.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "test_util.hpp"

using namespace uwbd;

#ifndef UWBD_SOURCE_ROOT
#error "UWBD_SOURCE_ROOT must point at the repository root"
#endif

static PowerDelayProfile make_pdp(std::initializer_list<PdpTap> taps) {
    PowerDelayProfile pdp;
    pdp.taps = taps;
    return pdp;
}

static void statistic_cases() {
    // three taps with powers 1, 1/2, 1/4: variance is exactly 5200/49 ns^2
    const PowerDelayProfile tri =
        make_pdp({{0.0, 1.0}, {10e-9, 0.5}, {30e-9, 0.25}});
    T_CLOSE(rms_delay_spread(tri), 10.301575072754256e-9, 1e-12);
    T_CHECK(max_excess_delay(tri) == 30e-9);

    // symmetric pair: RMS equals half the separation, exactly
    const PowerDelayProfile pair = make_pdp({{0.0, 1.0}, {20e-9, 1.0}});
    T_CHECK(rms_delay_spread(pair) == 1e-8);
    T_CHECK(max_excess_delay(pair) == 2e-8);

    const PowerDelayProfile single = make_pdp({{5e-9, 1.0}});
    T_CHECK(rms_delay_spread(single) == 0.0);
    T_CHECK(max_excess_delay(single) == 0.0);

    // zero-power taps carry no delay information
    const PowerDelayProfile padded =
        make_pdp({{0.0, 0.0}, {5e-9, 1.0}, {9e-9, 1.0}, {20e-9, 0.0}});
    T_CLOSE(max_excess_delay(padded), 4e-9, 1e-15);
    T_CLOSE(rms_delay_spread(padded), 2e-9, 1e-13);

    T_CHECK(delay_spread(tri, DelaySpreadStatistic::rms) == rms_delay_spread(tri));
    T_CHECK(delay_spread(tri, DelaySpreadStatistic::max_excess) ==
            max_excess_delay(tri));
}

static void validation_cases() {
    T_THROWS(rms_delay_spread(make_pdp({})), invalid_profile);
    T_THROWS(rms_delay_spread(make_pdp({{-1e-9, 1.0}})), invalid_profile);
    T_THROWS(rms_delay_spread(make_pdp({{0.0, -1.0}})), invalid_profile);
    T_THROWS(rms_delay_spread(make_pdp({{0.0, 1.0}, {0.0, 1.0}})), invalid_profile);
    T_THROWS(rms_delay_spread(make_pdp({{5e-9, 1.0}, {2e-9, 1.0}})), invalid_profile);
    T_THROWS(rms_delay_spread(make_pdp({{0.0, 0.0}, {1e-9, 0.0}})), invalid_profile);
}

static void parse_cases() {
    // header, comments, blank lines, CRLF, out-of-order rows
    std::istringstream in("# measured profile\r\n"
                          "delay_ns,power_db\r\n"
                          "\r\n"
                          "10,-3\r\n"
                          "0,0\r\n"
                          "20,-10\r\n");
    const PowerDelayProfile pdp = parse_pdp(in, PdpFormat::csv_ns_db, "inline");
    T_CHECK(pdp.taps.size() == 3);
    T_CHECK(pdp.taps[0].delay_s == 0.0);
    T_CHECK(pdp.taps[0].power == 1.0);
    T_CHECK(pdp.taps[1].delay_s == 10 * 1e-9); // nanosecond columns scale once
    T_CLOSE(pdp.taps[1].power, 0.5011872336272722, 1e-15); // 10^(-0.3)
    T_CLOSE(pdp.taps[2].power, 0.1, 1e-15);
    T_CHECK(pdp.source_label == "inline");

    std::istringstream linear("0,1.0\n4,0.25\n");
    const PowerDelayProfile lin = parse_pdp(linear, PdpFormat::csv_ns_linear);
    T_CHECK(lin.taps[1].power == 0.25);
    T_CHECK(lin.taps[1].delay_s == 4 * 1e-9);
}

static void parse_error_cases() {
    auto parse_line_of = [](const char* text) -> long {
        std::istringstream in(text);
        try {
            parse_pdp(in, PdpFormat::csv_ns_linear);
        } catch (const parse_error& e) {
            return e.line();
        } catch (const invalid_profile&) {
        }
        return -1;
    };
    // a non-numeric first field only reads as a header before any data row
    T_CHECK(parse_line_of("0,1\nbad,2\n") == 2);
    T_CHECK(parse_line_of("0,1\n5,oops\n") == 2);
    T_CHECK(parse_line_of("0,1\n5\n") == 2);
    T_CHECK(parse_line_of("0,1,2\n") == 1);
    T_CHECK(parse_line_of("# only comments\n") == -1); // invalid_profile instead
    {
        std::istringstream in("# only comments\n");
        T_THROWS(parse_pdp(in, PdpFormat::csv_ns_linear), invalid_profile);
    }
    // the message carries the line number for diagnostics
    std::istringstream in("0,1\nx,2\n");
    try {
        parse_pdp(in, PdpFormat::csv_ns_linear);
        T_CHECK(false);
    } catch (const parse_error& e) {
        T_CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

static void round_trip_cases() {
    const PowerDelayProfile pdp =
        make_pdp({{0.0, 1.0}, {3.7e-9, 0.42}, {11.1e-9, 0.07}});
    for (const PdpFormat format : {PdpFormat::csv_ns_db, PdpFormat::csv_ns_linear}) {
        std::ostringstream out;
        write_pdp(out, pdp, format);
        std::istringstream in(out.str());
        const PowerDelayProfile back = parse_pdp(in, format);
        T_CHECK(back.taps.size() == pdp.taps.size());
        for (std::size_t i = 0; i < pdp.taps.size(); ++i) {
            T_CLOSE(back.taps[i].delay_s, pdp.taps[i].delay_s, 1e-12);
            T_CLOSE(back.taps[i].power, pdp.taps[i].power, 1e-12);
        }
        T_CLOSE(rms_delay_spread(back), rms_delay_spread(pdp), 1e-9);
    }
}

static void bundled_profile_cases() {
    const std::string path =
        std::string(UWBD_SOURCE_ROOT) + "/data/synthetic_pdp_9ns.csv";
    const PowerDelayProfile pdp = load_pdp(path, PdpFormat::csv_ns_db);
    T_CHECK(pdp.taps.size() == 13);
    T_CHECK(pdp.source_label == "synthetic_pdp_9ns.csv");
    // the file is constructed to land on 9 ns RMS within a femtosecond
    T_CLOSE_ABS(rms_delay_spread(pdp), 9e-9, 1e-12);
    T_CLOSE(max_excess_delay(pdp), 36e-9, 1e-15);

    T_THROWS(load_pdp(std::string(UWBD_SOURCE_ROOT) + "/data/missing.csv",
                      PdpFormat::csv_ns_db),
             parse_error);
}

static void name_cases() {
    T_CHECK(std::string(pdp_format_name(PdpFormat::csv_ns_db)) == "csv-ns-db");
    T_CHECK(std::string(pdp_format_name(PdpFormat::csv_ns_linear)) == "csv-ns-linear");
    T_CHECK(std::string(delay_spread_statistic_name(DelaySpreadStatistic::rms)) ==
            "rms");
    T_CHECK(std::string(delay_spread_statistic_name(
                DelaySpreadStatistic::max_excess)) == "max-excess");
}

int main() {
    statistic_cases();
    validation_cases();
    parse_cases();
    parse_error_cases();
    round_trip_cases();
    bundled_profile_cases();
    name_cases();
    return testutil::finish("power delay profile");
}
