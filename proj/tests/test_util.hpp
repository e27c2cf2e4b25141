#pragma once

// Minimal harness shared by the test binaries: failing checks are counted
// and printed instead of aborting, so one run reports every broken case.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>

#include <sys/wait.h>

namespace testutil {

inline int g_checks = 0;
inline int g_failures = 0;

inline bool near_rel(double a, double b, double rel) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel * scale;
}

inline bool near_abs(double a, double b, double abs_tol) {
    return std::abs(a - b) <= abs_tol;
}

// Prints the summary line and returns the process exit code.
inline int finish(const char* suite) {
    if (g_failures == 0) {
        std::printf("%s: %d checks passed\n", suite, g_checks);
        return 0;
    }
    std::printf("%s: %d of %d checks FAILED\n", suite, g_failures, g_checks);
    return 1;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing whatever it writes to stdout.
inline CommandResult run_command(const std::string& shell_command) {
    CommandResult r;
    FILE* pipe = popen(shell_command.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.output.append(buf, got);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Deterministic per-suite generator; every suite seeds its own stream so
// case k is reproducible in isolation.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(engine);
    }
};

} // namespace testutil

#define T_CHECK(cond)                                                                  \
    do {                                                                               \
        ++testutil::g_checks;                                                          \
        if (!(cond)) {                                                                 \
            ++testutil::g_failures;                                                    \
            std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);                \
        }                                                                              \
    } while (0)

#define T_CLOSE(a, b, rel)                                                             \
    do {                                                                               \
        ++testutil::g_checks;                                                          \
        const double t_a = (a);                                                        \
        const double t_b = (b);                                                        \
        if (!testutil::near_rel(t_a, t_b, (rel))) {                                    \
            ++testutil::g_failures;                                                    \
            std::printf("FAIL %s:%d: %s ~ %s (%.17g vs %.17g)\n", __FILE__, __LINE__,  \
                        #a, #b, t_a, t_b);                                             \
        }                                                                              \
    } while (0)

#define T_CLOSE_ABS(a, b, tol)                                                         \
    do {                                                                               \
        ++testutil::g_checks;                                                          \
        const double t_a = (a);                                                        \
        const double t_b = (b);                                                        \
        if (!testutil::near_abs(t_a, t_b, (tol))) {                                    \
            ++testutil::g_failures;                                                    \
            std::printf("FAIL %s:%d: %s ~ %s (%.17g vs %.17g)\n", __FILE__, __LINE__,  \
                        #a, #b, t_a, t_b);                                             \
        }                                                                              \
    } while (0)

#define T_THROWS(expr, ExceptionType)                                                  \
    do {                                                                               \
        ++testutil::g_checks;                                                          \
        bool t_caught = false;                                                         \
        try {                                                                          \
            (void)(expr);                                                              \
        } catch (const ExceptionType&) {                                               \
            t_caught = true;                                                           \
        } catch (...) {                                                                \
        }                                                                              \
        if (!t_caught) {                                                               \
            ++testutil::g_failures;                                                    \
            std::printf("FAIL %s:%d: expected %s from %s\n", __FILE__, __LINE__,       \
                        #ExceptionType, #expr);                                        \
        }                                                                              \
    } while (0)
