// Runs the twelve acceptance criteria and prints one line per criterion.
// Exits 0 when the failing criteria are exactly those named by --expect-fail.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <vector>

#include <CLI11.hpp>

#include "hgauss/grid.hpp"
#include "hgauss/harness.hpp"

int main(int argc, char **argv)
{
    CLI::App app{"Acceptance criteria"};
    std::vector<int> expect_fail;
    std::optional<std::uint64_t> seed;
    app.add_option("--expect-fail", expect_fail, "Criteria known to be unattainable");
    app.add_option("--seed", seed, "Random seed (default: HGAUSS_SEED, then a fixed seed)");
    CLI11_PARSE(app, argc, argv);

    hgauss::harness::SuiteOptions options;
    try {
        options.seed = seed ? *seed : hgauss::harness::seed_from_environment();
    } catch (const std::exception &e) {
        std::cerr << "acceptance: " << e.what() << '\n';
        return 2;
    }
    const std::set<int> expected(expect_fail.begin(), expect_fail.end());

    std::set<int> failed;
    const auto start = std::chrono::steady_clock::now();
    for (const auto &c : hgauss::harness::acceptance_criteria()) {
        hgauss::harness::CheckResult r;
        try {
            r = c.run(options);
        } catch (const std::exception &e) {
            r = {"criterion", 0.0, 0.0, false, std::string("threw: ") + e.what()};
        }
        if (!r.pass) failed.insert(c.number);
        char head[96];
        std::snprintf(head, sizeof head, "criterion %2d %-32s %s", c.number, c.title.c_str(), r.pass ? "PASS" : "FAIL");
        std::cout << head << "  max=" << hgauss::grid::format_short(r.max_residual)
                  << "  tol=" << hgauss::grid::format_short(r.tolerance);
        if (!r.pass && expected.contains(c.number)) std::cout << "  (known unattainable)";
        if (!r.note.empty()) std::cout << "  [" << r.note << "]";
        std::cout << '\n';
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "acceptance: " << 12 - failed.size() << "/12 criteria passed, seed " << options.seed << ", "
              << hgauss::grid::format_short(secs) << " s\n";

    bool ok = true;
    for (int n : failed) {
        if (!expected.contains(n)) {
            std::cout << "unexpected failure: criterion " << n << '\n';
            ok = false;
        }
    }
    for (int n : expected) {
        if (!failed.contains(n)) {
            std::cout << "criterion " << n << " is listed as unattainable but passed; update --expect-fail\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}
