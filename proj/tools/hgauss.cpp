// hgauss: command-line front end for sampling surfaces, integrating Gans
// geodesics and running the verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgauss/gans.hpp"
#include "hgauss/gaussmap.hpp"
#include "hgauss/grid.hpp"
#include "hgauss/harness.hpp"
#include "hgauss/surface.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::array<double, 2> parse_pair(const std::string &text, const char *what)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError(std::string(what) + " must be two comma-separated numbers");
    try {
        std::size_t a = 0, b = 0;
        const double first = std::stod(text.substr(0, comma), &a);
        const double second = std::stod(text.substr(comma + 1), &b);
        if (a != comma || b != text.size() - comma - 1) throw std::invalid_argument("trailing text");
        return {first, second};
    } catch (const std::exception &) {
        throw UsageError(std::string(what) + " must be two comma-separated numbers, got '" + text + "'");
    }
}

void write_output(const std::string &path, const std::string &content)
{
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw UsageError("failed writing '" + path + "'");
}

bool wants_json(const std::string &path) { return path.size() >= 5 && path.ends_with(".json"); }

int cmd_eval(const std::string &ref_text, const std::string &at, bool json)
{
    const auto spec = hgauss::grid::resolve(hgauss::grid::parse_surface_ref(ref_text));
    const auto [a, b] = parse_pair(at, "--at");
    const auto row = hgauss::grid::sample_point(spec, a, b);
    if (json) {
        std::string text = hgauss::grid::to_json({row});
        // A single object rather than a one-element array.
        auto parsed = nlohmann::ordered_json::parse(text);
        auto obj = parsed.at(0);
        if (hgauss::surface::is_graph(spec)) {
            const auto d = hgauss::surface::graph_point(spec, a, b);
            const auto r = hgauss::gaussmap::hg_residual(d);
            const auto cd = hgauss::gaussmap::conformality_defect(d);
            obj["hg_r1"] = r.r1;
            obj["hg_r2"] = r.r2;
            obj["conformality_defect"] = cd.defect;
            obj["lambda"] = cd.lambda;
        }
        std::cout << obj.dump(2) << '\n';
        return kExitPass;
    }
    const auto &names = hgauss::grid::column_names();
    const auto csv = hgauss::grid::to_csv({row});
    // Second CSV line holds the values in column order.
    const auto values = csv.substr(csv.find('\n') + 1);
    std::size_t start = 0;
    for (const auto &name : names) {
        const auto end = values.find_first_of(",\n", start);
        std::cout << name << " = " << values.substr(start, end - start) << '\n';
        start = end + 1;
    }
    return kExitPass;
}

int cmd_grid(const std::string &ref_text, std::size_t nx, std::size_t ny, const std::string &domain,
             const std::string &out)
{
    const auto spec = hgauss::grid::resolve(hgauss::grid::parse_surface_ref(ref_text));
    std::optional<hgauss::surface::Domain> dom;
    if (!domain.empty()) dom = hgauss::grid::parse_domain(domain);
    const auto rows = hgauss::grid::sample_grid(spec, nx, ny, dom);
    write_output(out, wants_json(out) ? hgauss::grid::to_json(rows) : hgauss::grid::to_csv(rows));
    return kExitPass;
}

int cmd_geodesic(const std::string &from, const std::string &dir, double tmax, double step, const std::string &out)
{
    const auto [u, v] = parse_pair(from, "--from");
    const auto [du, dv] = parse_pair(dir, "--dir");
    const auto path = hgauss::gans::geodesic({u, v}, {du, dv}, tmax, step);
    std::string csv = "t,u,v,du,dv\n";
    for (const auto &s : path) {
        for (double x : {s.t, s.point.u, s.point.v, s.velocity[0]}) csv += hgauss::grid::format_double(x) + ",";
        csv += hgauss::grid::format_double(s.velocity[1]) + "\n";
    }
    write_output(out, csv);
    return kExitPass;
}

int cmd_check(const std::string &suite, std::optional<double> tol, std::optional<std::uint64_t> seed)
{
    hgauss::harness::SuiteOptions options;
    options.tolerance = tol;
    options.seed = seed ? *seed : hgauss::harness::seed_from_environment();
    bool known = false;
    for (const auto &n : hgauss::harness::suite_names()) known = known || n == suite;
    if (!known) throw UsageError("unknown suite '" + suite + "'");
    const auto report = hgauss::harness::run_suite(suite, options);
    std::cout << hgauss::harness::format_report(report);
    return report.passed() ? kExitPass : kExitFail;
}

int cmd_catalog()
{
    for (const auto &e : hgauss::surface::catalog_entries()) {
        std::cout << e.name;
        for (const auto &[k, v] : e.defaults) std::cout << ' ' << k << '=' << hgauss::grid::format_short(v);
        std::cout << "\n    " << e.description << '\n';
    }
    return kExitPass;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Gauss maps of surfaces in the Heisenberg group"};
    app.require_subcommand(1);

    std::string surface, at, domain, out, from, dir, suite;
    bool json = false;
    std::size_t nx = 0, ny = 0;
    double tmax = 0.0, step = 1e-3;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;

    auto *eval = app.add_subcommand("eval", "Evaluate every column at one parameter point");
    eval->add_option("--surface", surface, "catalog:NAME?k=v or expr:TEXT?k=v&domain=x0,x1,y0,y1")->required();
    eval->add_option("--at", at, "x,y (or x,s / t,s)")->required();
    eval->add_flag("--json", json, "Print a JSON object");

    auto *grid = app.add_subcommand("grid", "Sample a surface on a rectangular grid");
    grid->add_option("--surface", surface, "Surface reference")->required();
    grid->add_option("--nx", nx, "Nodes along x")->required()->check(CLI::Range(2, 100000));
    grid->add_option("--ny", ny, "Nodes along y")->required()->check(CLI::Range(2, 100000));
    grid->add_option("--domain", domain, "x0,x1,y0,y1 (overrides the reference)");
    grid->add_option("--out", out, "Output file; .json selects JSON, anything else CSV, - or none for stdout");

    auto *geo = app.add_subcommand("geodesic", "Integrate a unit-speed Gans geodesic");
    geo->add_option("--from", from, "u,v")->required();
    geo->add_option("--dir", dir, "du,dv")->required();
    geo->add_option("--tmax", tmax, "Final time")->required();
    geo->add_option("--step", step, "RK4 step")->capture_default_str();
    geo->add_option("--out", out, "Output CSV file, - or none for stdout");

    auto *check = app.add_subcommand("check", "Run a verification suite");
    check->add_option("--suite", suite, "gans, heis, forms, minimal, tension, equivariance, conformal or all")
        ->required();
    check->add_option("--tol", tol, "Replace every tolerance in the suite");
    check->add_option("--seed", seed, "Random seed (default: HGAUSS_SEED, then a fixed seed)");

    auto *cat = app.add_subcommand("catalog", "List catalog surfaces and their default parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(surface, at, json);
        if (*grid) return cmd_grid(surface, nx, ny, domain, out);
        if (*geo) return cmd_geodesic(from, dir, tmax, step, out);
        if (*check) return cmd_check(suite, tol, seed);
        if (*cat) return cmd_catalog();
    } catch (const std::exception &e) {
        std::cerr << "hgauss: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
