#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hgauss::harness {

struct CheckResult {
    std::string id;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double wall_seconds = 0.0;

    bool passed() const;
};

/// Seed used when neither a flag nor HGAUSS_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteOptions {
    /// Replaces the tolerance of every check in the suite when set.
    std::optional<double> tolerance;
    std::uint64_t seed = kDefaultSeed;
};

/// HGAUSS_SEED when set and valid, otherwise kDefaultSeed. Throws
/// std::invalid_argument for a malformed value.
std::uint64_t seed_from_environment();

const std::vector<std::string> &suite_names();

/// Runs the named suite. Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string &name, const SuiteOptions &options = {});

/// One numbered acceptance criterion, runnable on its own.
struct Criterion {
    int number = 0;
    std::string title;
    std::string suite;
    std::function<CheckResult(const SuiteOptions &)> run;
};

const std::vector<Criterion> &acceptance_criteria();

/// Formats a report as one line per check followed by a summary line.
std::string format_report(const SuiteReport &report);

/// Deterministic source of random smooth test functions f(x, y): bounded
/// polynomial terms of degree at most four, mixed with sin, cos, sinh and
/// cosh of linear forms. The result is expression text in x and y.
class RandomSurfaceGenerator {
public:
    explicit RandomSurfaceGenerator(std::uint64_t seed) : rng_(seed) {}

    std::string next();
    /// Polynomial terms only.
    std::string next_polynomial();
    /// Nested expression exercising every function and operator, built so
    /// that it is defined on all of R^2.
    std::string next_expression(int depth = 3);

    /// Uniform on [lo, hi) from the top 53 bits of the engine.
    double uniform(double lo, double hi);

private:
    std::string polynomial_terms();
    std::string number(double lo, double hi);
    std::size_t pick(std::size_t n);
    std::mt19937_64 rng_;
};

} // namespace hgauss::harness
