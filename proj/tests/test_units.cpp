#include "uwbd/units.hpp"

#include <string>

#include "test_util.hpp"

using namespace uwbd;

static void frequency_cases() {
    T_CHECK(units::parse_frequency("750MHz") == 750e6);
    T_CHECK(units::parse_frequency("7.5GHz") == 7.5e9);
    T_CHECK(units::parse_frequency("5kHz") == 5000.0);
    T_CHECK(units::parse_frequency("100Hz") == 100.0);
    T_CHECK(units::parse_frequency("0.1MHz") == 100000.0);
    T_CLOSE(units::parse_frequency("444.4MHz"), 444.4e6, 1e-15);
    T_CHECK(units::parse_frequency(" 10 MHz ") == 10e6); // embedded spaces
    T_CHECK(units::parse_frequency("7.5e8") == 7.5e8);
    T_CHECK(units::parse_frequency("0") == 0.0);
    T_CHECK(units::parse_frequency("-5MHz") == -5e6); // sign checks live at call sites

    // bare numbers only inside the unambiguous magnitude window
    T_CHECK(units::parse_frequency("1e12") == 1e12);
    T_CHECK(units::parse_frequency("1e-3") == 1e-3);
    T_THROWS(units::parse_frequency("1.1e12"), invalid_parameter);
    T_THROWS(units::parse_frequency("9.9e-4"), invalid_parameter);
    T_THROWS(units::parse_frequency("1e-5"), invalid_parameter);

    T_THROWS(units::parse_frequency(""), invalid_parameter);
    T_THROWS(units::parse_frequency("MHz"), invalid_parameter);
    T_THROWS(units::parse_frequency("tenMHz"), invalid_parameter);
    T_THROWS(units::parse_frequency("10MHzz"), invalid_parameter);
    T_THROWS(units::parse_frequency("nan"), invalid_parameter);
    T_THROWS(units::parse_frequency("inf"), invalid_parameter);
    // suffixes are exact-case: mHz/mhz would be a different unit
    T_THROWS(units::parse_frequency("750mHz"), invalid_parameter);
    T_THROWS(units::parse_frequency("750mhz"), invalid_parameter);
    T_THROWS(units::parse_frequency("750MHZ"), invalid_parameter);
}

static void time_cases() {
    T_CHECK(units::parse_time("1ns") == 1e-9);
    T_CHECK(units::parse_time("1us") == 1e-6);
    T_CHECK(units::parse_time("1ms") == 1e-3);
    T_CHECK(units::parse_time("0.5s") == 0.5);
    T_CLOSE(units::parse_time("9ns"), 9e-9, 1e-15);
    T_CLOSE(units::parse_time("0.009us"), 9e-9, 1e-15);
    T_CHECK(units::parse_time("9e-9s") == 9e-9);
    T_CHECK(units::parse_time("0") == 0.0);

    T_THROWS(units::parse_time("1e-9"), invalid_parameter); // needs a suffix
    T_THROWS(units::parse_time("9NS"), invalid_parameter);
    T_THROWS(units::parse_time("9 n s"), invalid_parameter);
    T_THROWS(units::parse_time(""), invalid_parameter);
}

static void double_cases() {
    T_CHECK(units::parse_double("0.2") == 0.2);
    T_CHECK(units::parse_double("-3.5e2") == -350.0);
    T_CHECK(units::parse_double(" 1 ") == 1.0);
    T_THROWS(units::parse_double("abc"), invalid_parameter);
    T_THROWS(units::parse_double("1.5x"), invalid_parameter);
    T_THROWS(units::parse_double(""), invalid_parameter);
}

static void format_cases() {
    T_CHECK(units::format_si(444444444.4444445, 4) == "4.444e+08");
    T_CHECK(units::format_si(96774193.548387, 4) == "9.677e+07");
    T_CHECK(units::format_si(0.2, 4) == "0.2");
    T_CHECK(units::format_si(1e9, 4) == "1e+09");
    T_CHECK(units::format_si(1.0, 4) == "1");
    T_CHECK(units::format_si(0.0, 4) == "0");
    T_CHECK(units::format_si(0.19319938176197837, 4) == "0.1932");
    T_CHECK(units::format_si(1434312210.2009275, 17) == "1434312210.2009275");
}

int main() {
    frequency_cases();
    time_cases();
    double_cases();
    format_cases();
    return testutil::finish("unit parsing");
}
