// Command-line front end: emits plot-ready CSV / JSON for the geometry,
// effective potential, spectrum and resonance pipelines, plus an identity
// verification suite. All energies in units where hbar^2/(2m) = 1.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wormhole/errors.hpp"
#include "wormhole/geometry.hpp"
#include "wormhole/potential.hpp"
#include "wormhole/resonance.hpp"
#include "wormhole/solver.hpp"
#include "wormhole/verify.hpp"

using json = nlohmann::ordered_json;
using namespace wormhole;

namespace {

constexpr const char* kUnits = "hbar2_over_2m=1";

constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitVerification = 3;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Write atomically: temp file in the same directory, then rename.
void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file: " + tmp);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

struct CommonOpts {
    std::string shape = "gaussian";
    double b0 = 1.0;
    int L = 0;
    double lmax = 12.0;
    int n = 6001;
    std::string format = "csv";
    std::string out;
    std::string config;
};

ShapeFunction make_shape(const CommonOpts& o) {
    if (o.shape == "zero")
        return ShapeFunction::zero();
    if (o.shape == "constant")
        return ShapeFunction::constant(o.b0);
    if (o.shape == "gaussian")
        return ShapeFunction::gaussian(o.b0);
    throw CLI::ValidationError("--shape", "unknown shape: " + o.shape);
}

void validate_common(const CommonOpts& o, bool allow_zero) {
    if (o.n % 2 == 0 || o.n < 5)
        throw CLI::ValidationError("--n", "n must be an odd integer >= 5");
    if (o.L < 0)
        throw CLI::ValidationError("--L", "L must be >= 0");
    if (o.shape != "zero" && o.b0 <= 0.0)
        throw CLI::ValidationError("--b0", "b0 must be positive");
    if (!allow_zero && o.shape == "zero")
        throw CLI::ValidationError("--shape",
                                   "this command requires shape != zero");
    if (o.format != "csv" && o.format != "json")
        throw CLI::ValidationError("--format", "format must be csv or json");
}

// Flat key=value config with '#' comments.
std::vector<std::pair<std::string, std::string>> read_config(
    const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("--config", "cannot read " + path);
    std::string line;
    std::vector<std::pair<std::string, std::string>> kv;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string()
                                          : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty())
            kv.emplace_back(key, val);
    }
    return kv;
}

json shape_json(const CommonOpts& o) {
    json j;
    j["kind"] = o.shape;
    if (o.shape != "zero")
        j["b0"] = o.b0;
    return j;
}

json grid_json(const Grid& g) {
    return json{{"l_max", g.l_max}, {"n", g.n}};
}

// ---- geometry ----

int cmd_geometry(const CommonOpts& o, bool extrema) {
    validate_common(o, /*allow_zero=*/true);
    const ShapeFunction sf = make_shape(o);
    const Grid grid = Grid::make(o.lmax, o.n);

    std::vector<StretchExtremum> ex;
    if (extrema)
        ex = stretch_extrema(sf, -o.lmax, o.lmax);

    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "l,b,f\n";
        for (int i = 0; i < grid.n; ++i) {
            const auto s = radial_factor(sf, grid.node(i));
            csv << num(s.l) << ',' << num(s.b) << ',' << num(s.f) << '\n';
        }
        for (const auto& e : ex)
            csv << "# extremum," << num(e.l) << ',' << num(e.f) << ','
                << (e.kind == ExtremumKind::Maximum ? "max" : "min") << '\n';
        emit(o.out, csv.str());
    } else {
        json j;
        j["units"] = kUnits;
        j["shape"] = shape_json(o);
        j["grid"] = grid_json(grid);
        json rows = json::array();
        for (int i = 0; i < grid.n; ++i) {
            const auto s = radial_factor(sf, grid.node(i));
            rows.push_back({s.l, s.b, s.f});
        }
        j["columns"] = {"l", "b", "f"};
        j["data"] = rows;
        if (extrema) {
            json je = json::array();
            for (const auto& e : ex)
                je.push_back(
                    {{"l", e.l},
                     {"f", e.f},
                     {"kind",
                      e.kind == ExtremumKind::Maximum ? "max" : "min"}});
            j["extrema"] = je;
        }
        emit(o.out, j.dump(2) + "\n");
    }
    return 0;
}

// ---- potential ----

int cmd_potential(const CommonOpts& o) {
    validate_common(o, /*allow_zero=*/false);
    const ShapeFunction sf = make_shape(o);
    const Grid grid = Grid::make(o.lmax, o.n);
    const PotentialProfile profile = total_potential(sf, o.L, grid);
    const BarrierAnalysis ba = barrier_analysis(profile);

    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "l,v_eff,v_centrifugal,v_total\n";
        for (int i = 0; i < grid.n; ++i) {
            const double l = grid.node(i);
            const double vc = centrifugal(sf, o.L, l);
            csv << num(l) << ',' << num(profile.values[i] - vc) << ','
                << num(vc) << ',' << num(profile.values[i]) << '\n';
        }
        emit(o.out, csv.str());
    } else {
        json j;
        j["units"] = kUnits;
        j["shape"] = shape_json(o);
        j["L"] = o.L;
        j["grid"] = grid_json(grid);
        json rows = json::array();
        for (int i = 0; i < grid.n; ++i) {
            const double l = grid.node(i);
            const double vc = centrifugal(sf, o.L, l);
            rows.push_back({l, profile.values[i] - vc, vc, profile.values[i]});
        }
        j["columns"] = {"l", "v_eff", "v_centrifugal", "v_total"};
        j["data"] = rows;
        j["barrier_analysis"] = {{"v_origin", ba.v_origin},
                                 {"v_barrier_max", ba.v_barrier_max},
                                 {"l_barrier", ba.l_barrier},
                                 {"v_asymptotic", ba.v_asymptotic},
                                 {"classification",
                                  to_string(ba.classification)}};
        emit(o.out, j.dump(2) + "\n");
    }
    return 0;
}

// ---- spectrum ----

int run_selfcheck(const CommonOpts& o, const std::string& which, int k) {
    Grid grid = which == "box" ? Grid::make(1.0, 2001) : Grid::make(8.0, 4001);
    PotentialProfile p;
    p.grid = grid;
    p.values.resize(grid.n);
    std::vector<double> exact;
    for (int i = 0; i < grid.n; ++i)
        p.values[i] = which == "box" ? 0.0 : grid.node(i) * grid.node(i);
    for (int s = 0; s < k; ++s)
        exact.push_back(which == "box"
                            ? std::pow((s + 1) * std::numbers::pi /
                                           (2.0 * grid.l_max),
                                       2)
                            : 2.0 * s + 1.0);
    const auto e = eigen_lowest(discretize(p, grid), k);

    json j;
    j["units"] = kUnits;
    j["selfcheck"] = which;
    j["energies"] = e;
    j["exact"] = exact;
    double worst = 0.0;
    for (int s = 0; s < k; ++s)
        worst = std::max(worst, std::abs(e[s] - exact[s]) / exact[s]);
    j["max_rel_error"] = worst;
    const double tol = which == "box" ? 1e-3 : 1e-4;
    j["passed"] = worst < tol;
    emit(o.out, j.dump(2) + "\n");
    return worst < tol ? 0 : kExitVerification;
}

int cmd_spectrum(const CommonOpts& o, int k, const std::string& selfcheck,
                 const std::string& wf_csv) {
    if (!selfcheck.empty()) {
        if (selfcheck != "box" && selfcheck != "harmonic")
            throw CLI::ValidationError("--selfcheck", "must be box or harmonic");
        return run_selfcheck(o, selfcheck, k);
    }
    validate_common(o, /*allow_zero=*/false);
    const ShapeFunction sf = make_shape(o);
    const Grid grid = Grid::make(o.lmax, o.n);
    const Spectrum spec = bound_states(sf, o.L, grid, k);
    const ConvergenceReport conv = convergence_check(sf, o.L, o.lmax, o.n);

    json j;
    j["units"] = kUnits;
    j["shape"] = shape_json(o);
    j["L"] = o.L;
    j["grid"] = grid_json(grid);
    j["v_asymptotic"] = spec.v_asymptotic;
    j["energies"] = spec.energies;
    j["bound_count"] = spec.energies.size();
    j["convergence"] = {{"E_coarse", conv.e_coarse},
                        {"E_fine", conv.e_fine},
                        {"richardson", conv.richardson},
                        {"converged", conv.converged}};
    emit(o.out, j.dump(2) + "\n");

    if (!wf_csv.empty() && !spec.wavefunctions.empty()) {
        std::ostringstream csv;
        csv << "l";
        for (size_t s = 0; s < spec.wavefunctions.size(); ++s)
            csv << ",phi" << s;
        csv << '\n';
        for (int i = 0; i < grid.n; ++i) {
            csv << num(grid.node(i));
            for (const auto& wf : spec.wavefunctions)
                csv << ',' << num(wf[i]);
            csv << '\n';
        }
        emit(wf_csv, csv.str());
    }
    return 0;
}

// ---- resonance ----

int cmd_resonance(const CommonOpts& o, const std::vector<double>& boxes,
                  double rel_tol, int k, int n_per_box,
                  const std::string& scan_csv) {
    validate_common(o, /*allow_zero=*/false);
    if (boxes.size() < 4)
        throw CLI::ValidationError("--boxes", "need at least 4 box sizes");
    const ShapeFunction sf = make_shape(o);

    const StabilizationScan scan =
        stabilization_scan(sf, o.L, boxes, n_per_box, k);
    const auto estimates = detect_plateaus(scan, rel_tol);

    json j;
    j["units"] = kUnits;
    j["shape"] = shape_json(o);
    j["L"] = o.L;
    j["h"] = scan.h;
    j["box_sizes"] = scan.box_sizes;
    j["well_window"] = {{"v_origin", scan.v_origin},
                        {"v_barrier_max", scan.v_barrier_max}};
    json jr = json::array();
    for (const auto& e : estimates)
        jr.push_back({{"energy", e.energy},
                      {"spread", e.spread},
                      {"plateau_range",
                       {e.plateau_range.first, e.plateau_range.second}},
                      {"inside_well", e.inside_well}});
    j["resonances"] = jr;
    emit(o.out, j.dump(2) + "\n");

    if (!scan_csv.empty()) {
        std::ostringstream csv;
        csv << "box_size";
        for (int s = 0; s < k; ++s)
            csv << ",E" << s;
        csv << '\n';
        for (size_t r = 0; r < scan.box_sizes.size(); ++r) {
            csv << num(scan.box_sizes[r]);
            for (double e : scan.levels[r])
                csv << ',' << num(e);
            csv << '\n';
        }
        emit(scan_csv, csv.str());
    }
    return 0;
}

// ---- verify ----

int cmd_verify(const CommonOpts& o, bool as_json) {
    const auto results = run_verification();
    if (as_json) {
        json j;
        j["units"] = kUnits;
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back({{"name", r.name},
                              {"passed", r.passed},
                              {"residual", r.residual},
                              {"tolerance", r.tolerance}});
        j["checks"] = checks;
        j["all_passed"] = all_passed(results);
        emit(o.out, j.dump(2) + "\n");
    } else {
        std::ostringstream txt;
        txt << "units: " << kUnits << "\n";
        for (const auto& r : results)
            txt << (r.passed ? "PASS" : "FAIL") << "  " << r.name
                << "  (residual " << num(r.residual) << ", tol "
                << num(r.tolerance) << ")\n";
        txt << (all_passed(results) ? "all checks passed\n"
                                    : "VERIFICATION FAILED\n");
        emit(o.out, txt.str());
    }
    return all_passed(results) ? 0 : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Quantum mechanics on a spatial wormhole: effective potentials, "
        "spectra and quasi-bound states (units: hbar^2/2m = 1)"};
    app.require_subcommand(1);

    CommonOpts o;
    bool extrema = false;
    bool verify_json = false;
    int k = 10;
    int n_per_box = 1601;
    double rel_tol = 0.05;
    std::string selfcheck, wf_csv, scan_csv;
    std::vector<double> boxes;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--shape", o.shape, "zero|constant|gaussian");
        cmd->add_option("--b0", o.b0, "throat radius");
        cmd->add_option("--L", o.L, "angular momentum quantum number");
        cmd->add_option("--lmax", o.lmax, "half-width of the radial box");
        cmd->add_option("--n", o.n, "grid points (odd)");
        cmd->add_option("--format", o.format, "csv|json");
        cmd->add_option("--out", o.out, "output path (default stdout)");
        cmd->add_option("--config", o.config, "key=value config file");
    };

    CLI::App* geo = app.add_subcommand("geometry", "shape and areal radius");
    add_common(geo);
    geo->add_flag("--extrema", extrema, "report stationary points of f(l)");

    CLI::App* pot = app.add_subcommand("potential", "effective potential");
    add_common(pot);

    CLI::App* spectrum = app.add_subcommand("spectrum", "bound-state spectrum");
    add_common(spectrum);
    spectrum->add_option("--k", k, "number of eigenvalues");
    spectrum->add_option("--selfcheck", selfcheck,
                         "box|harmonic analytic oracle");
    spectrum->add_option("--wavefunctions", wf_csv,
                         "write per-state wavefunction CSV here");

    CLI::App* res = app.add_subcommand("resonance", "stabilization scan");
    add_common(res);
    res->add_option("--boxes", boxes, "box half-widths (comma separated)")
        ->delimiter(',');
    res->add_option("--rel-tol", rel_tol, "plateau relative-spread tolerance");
    res->add_option("--k", k, "levels tracked per box");
    res->add_option("--n-per-box", n_per_box,
                    "grid points for the smallest box (fixes h)");
    res->add_option("--scan-csv", scan_csv, "write the raw scan table here");

    CLI::App* verify = app.add_subcommand("verify", "identity suite");
    add_common(verify);
    verify->add_flag("--json", verify_json, "JSON report");

    try {
        app.parse(argc, argv);
        CLI::App* active = app.get_subcommands().front();
        if (!o.config.empty()) {
            // flags on the command line override config-file values
            auto unset = [&](const char* name) {
                CLI::Option* opt = active->get_option_no_throw(name);
                return opt != nullptr && opt->count() == 0;
            };
            for (const auto& [key, val] : read_config(o.config)) {
                const std::string flag = "--" + key;
                if (active->get_option_no_throw(flag) == nullptr)
                    throw CLI::ValidationError("--config",
                                               "unknown key: " + key);
                if (!unset(flag.c_str()))
                    continue;
                if (key == "shape")
                    o.shape = val;
                else if (key == "b0")
                    o.b0 = std::stod(val);
                else if (key == "L")
                    o.L = std::stoi(val);
                else if (key == "lmax")
                    o.lmax = std::stod(val);
                else if (key == "n")
                    o.n = std::stoi(val);
                else if (key == "format")
                    o.format = val;
                else if (key == "out")
                    o.out = val;
                else if (key == "k")
                    k = std::stoi(val);
                else if (key == "rel-tol")
                    rel_tol = std::stod(val);
                else if (key == "n-per-box")
                    n_per_box = std::stoi(val);
                else if (key == "selfcheck")
                    selfcheck = val;
                else if (key == "boxes") {
                    boxes.clear();
                    std::stringstream ss(val);
                    std::string tok;
                    while (std::getline(ss, tok, ','))
                        boxes.push_back(std::stod(tok));
                } else
                    throw CLI::ValidationError("--config",
                                               "unsupported key: " + key);
            }
        }

        if (active == geo)
            return cmd_geometry(o, extrema);
        if (active == pot)
            return cmd_potential(o);
        if (active == spectrum)
            return cmd_spectrum(o, k, selfcheck, wf_csv);
        if (active == res) {
            if (boxes.empty())
                boxes = {8.0, 10.0, 12.0, 14.0, 16.0};
            return cmd_resonance(o, boxes, rel_tol, k, n_per_box, scan_csv);
        }
        if (active == verify)
            return cmd_verify(o, verify_json);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
