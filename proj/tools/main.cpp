// netmoment: synthetic fields, moment estimates, radius sweeps and
// special-function checks from the command line.
//
// Exit codes: 0 success, 1 configuration error, 2 numerical-domain error
// (including failed verify-specfun checks).

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netmoment/estimate.hpp"
#include "netmoment/field.hpp"
#include "netmoment/io.hpp"
#include "netmoment/noise.hpp"
#include "netmoment/quad.hpp"
#include "netmoment/scene.hpp"
#include "netmoment/verify.hpp"

namespace nm = netmoment;
using nlohmann::json;

namespace {

struct Options {
    std::string scene;
    std::string field_csv;
    std::optional<double> radius;
    std::vector<double> radii;
    std::optional<double> radius_min, radius_max;
    int radius_count = 24;
    bool log_spacing = false;
    int n_radial = nm::kDefaultRadial;
    int n_angular = nm::kDefaultAngular;
    std::vector<std::string> specs;
    double snr_db = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;
    std::optional<int> detrend_window;
    std::string out;
    std::vector<std::string> checks;
    bool checks_given = false;
    std::string perturb;
};

// Writes to --out when given, else to stdout.
void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + o.out + "'");
    f << text;
    if (!f) throw std::runtime_error("failed writing '" + o.out + "'");
}

std::vector<nm::EstimatorSpec> chosen_specs(const Options& o) {
    if (o.specs.empty()) return nm::all_specs();
    std::vector<nm::EstimatorSpec> v;
    for (const auto& s : o.specs) v.push_back(nm::parse_spec(s));
    return v;
}

std::optional<nm::NoiseSpec> noise_of(const Options& o) {
    if (std::isinf(o.snr_db) && o.snr_db > 0) return std::nullopt;
    if (!std::isfinite(o.snr_db)) throw std::invalid_argument("--snr-db must be finite");
    nm::NoiseSpec n;
    n.snr_db = o.snr_db;
    n.seed = o.seed;
    return n;
}

double require_radius(const Options& o) {
    if (!o.radius) throw std::invalid_argument("--radius is required");
    if (!(*o.radius > 0.0)) throw std::invalid_argument("--radius must be positive");
    return *o.radius;
}

int cmd_synth(const Options& o) {
    const auto scene = nm::load_scene(o.scene);
    auto map = nm::sample_field(scene, nm::build_grid(require_radius(o), o.n_radial, o.n_angular));
    if (auto n = noise_of(o)) map = nm::add_noise(map, *n);
    std::ostringstream ss;
    nm::write_field_csv(ss, map);
    emit(o, ss.str());
    return 0;
}

int cmd_estimate(const Options& o) {
    if (o.scene.empty() == o.field_csv.empty()) {
        throw std::invalid_argument("estimate needs exactly one of --scene or --field-csv");
    }
    std::optional<nm::DipoleScene> scene;
    nm::FieldMap map;
    if (!o.scene.empty()) {
        scene = nm::load_scene(o.scene);
        map = nm::sample_field(*scene, nm::build_grid(require_radius(o), o.n_radial, o.n_angular));
    } else {
        std::ifstream in(o.field_csv);
        if (!in) throw std::invalid_argument("field csv: cannot open '" + o.field_csv + "'");
        map = nm::read_field_csv(in, o.radius);
    }
    if (auto n = noise_of(o)) map = nm::add_noise(map, *n);

    json report;
    report["radius"] = map.grid.radius;
    report["nodes"] = map.samples.size();
    report["noisy"] = map.provenance.noisy;
    if (map.provenance.noisy) {
        report["snr_db"] = map.provenance.snr_db;
        report["seed"] = map.provenance.seed;
    }
    std::optional<nm::MomentVector> truth;
    if (scene) {
        truth = nm::net_moment(*scene);
        const double margin = nm::asympt_condition_margin(*scene, map.grid.radius);
        report["condition_margin"] = margin;
        report["condition_satisfied"] = margin < 1.0;
    }
    report["estimates"] = json::array();
    for (const auto& spec : chosen_specs(o)) {
        json e;
        e["spec"] = nm::to_string(spec);
        e["estimate"] = nm::estimate_moment(map, spec);
        if (truth) {
            const double t = (*truth)[static_cast<int>(spec.component) + 1];
            e["truth"] = t;
            e["abs_error"] = std::fabs(e["estimate"].get<double>() - t);
        }
        report["estimates"].push_back(e);
    }
    emit(o, report.dump(2) + "\n");
    return 0;
}

int cmd_sweep(const Options& o) {
    const auto scene = nm::load_scene(o.scene);
    std::vector<double> A = o.radii;
    if (A.empty()) {
        if (!o.radius_min || !o.radius_max) {
            throw std::invalid_argument("sweep needs --radius (repeatable) or --radius-min/--radius-max");
        }
        A = o.log_spacing ? nm::log_spaced(*o.radius_min, *o.radius_max, o.radius_count)
                          : nm::lin_spaced(*o.radius_min, *o.radius_max, o.radius_count);
    }
    const auto result =
        nm::sweep(scene, A, chosen_specs(o), {o.n_radial, o.n_angular}, noise_of(o));
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
    std::ostringstream ss;
    nm::write_sweep_csv(ss, result, o.detrend_window);
    emit(o, ss.str());
    return 0;
}

int cmd_verify(const Options& o) {
    nm::CheckOptions opt;
    opt.prefixes = o.checks;
    opt.filter = o.checks_given;
    opt.perturb = o.perturb;
    const auto rows = nm::run_specfun_checks(opt);
    std::ostringstream ss;
    ss << "check,value,reference,abs_error,rel_error,tolerance,mode,pass\n";
    bool ok = true;
    for (const auto& r : rows) {
        ss << r.name << ',' << nm::format_double(r.value) << ',' << nm::format_double(r.reference)
           << ',' << nm::format_double(r.abs_error) << ',' << nm::format_double(r.rel_error) << ','
           << nm::format_double(r.tolerance) << ',' << (r.relative ? "rel" : "abs") << ','
           << (r.pass ? "PASS" : "FAIL") << '\n';
        ok = ok && r.pass;
    }
    emit(o, ss.str());
    return ok ? 0 : 2;
}

int cmd_validate(const Options& o) {
    const auto scene = nm::load_scene(o.scene);
    const auto m = nm::net_moment(scene);
    json r;
    r["valid"] = true;
    r["unit_system"] = scene.units() == nm::UnitSystem::si ? "si" : "natural";
    r["dipoles"] = scene.dipoles().size();
    r["height"] = scene.height();
    r["net_moment"] = {m.m1, m.m2, m.m3};
    emit(o, r.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Net magnetic moment estimation from normal-field disk data"};
    app.require_subcommand(1);
    Options o;

    auto add_grid = [&](CLI::App* c) {
        c->add_option("--n-radial", o.n_radial, "Gauss-Legendre radial nodes");
        c->add_option("--n-angular", o.n_angular, "Uniform angular nodes (even)");
    };
    auto add_noise = [&](CLI::App* c) {
        c->add_option("--snr-db", o.snr_db, "Additive white noise SNR in dB (default: none)");
        c->add_option("--seed", o.seed, "Noise seed");
    };
    auto add_specs = [&](CLI::App* c) {
        c->add_option("--spec", o.specs, "Estimator component:order[:axis] (repeatable)");
    };

    auto* synth = app.add_subcommand("synth", "Write a field-map CSV for a scene");
    synth->add_option("--scene", o.scene, "Scene JSON")->required();
    synth->add_option("--radius", o.radius, "Disk radius")->required();
    add_grid(synth);
    add_noise(synth);
    synth->add_option("--out", o.out, "Output file (default stdout)");

    auto* est = app.add_subcommand("estimate", "Estimate moments on one disk (JSON report)");
    est->add_option("--scene", o.scene, "Scene JSON");
    est->add_option("--field-csv", o.field_csv, "Field-map CSV (x1,x2,weight,b3)");
    est->add_option("--radius", o.radius, "Disk radius");
    add_grid(est);
    add_specs(est);
    add_noise(est);
    est->add_option("--out", o.out, "Output file (default stdout)");

    auto* sw = app.add_subcommand("sweep", "Estimate over a list of radii (CSV)");
    sw->add_option("--scene", o.scene, "Scene JSON")->required();
    sw->add_option("--radius", o.radii, "Radius (repeatable)");
    sw->add_option("--radius-min", o.radius_min, "Smallest radius");
    sw->add_option("--radius-max", o.radius_max, "Largest radius");
    sw->add_option("--radius-count", o.radius_count, "Number of radii")->check(CLI::Range(2, 100000));
    sw->add_flag("--log-spacing", o.log_spacing, "Log-spaced radii");
    add_grid(sw);
    add_specs(sw);
    add_noise(sw);
    sw->add_option("--detrend-window", o.detrend_window, "Add backward-detrended m3 columns")
        ->check(CLI::Range(3, 100000));
    sw->add_option("--out", o.out, "Output file (default stdout)");

    auto* ver = app.add_subcommand("verify-specfun", "Check special-function identities (CSV)");
    auto* check_opt = ver->add_option("--check", o.checks, "Keep checks with this name prefix (repeatable)");
    ver->add_option("--perturb", o.perturb, "Testing hook: add 1e-6 to checks with this prefix");
    ver->add_option("--out", o.out, "Output file (default stdout)");

    auto* val = app.add_subcommand("validate-scene", "Validate a scene file");
    val->add_option("--scene", o.scene, "Scene JSON")->required();
    val->add_option("--out", o.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    o.checks_given = check_opt->count() > 0;

    try {
        if (*synth) return cmd_synth(o);
        if (*est) return cmd_estimate(o);
        if (*sw) return cmd_sweep(o);
        if (*ver) return cmd_verify(o);
        if (*val) return cmd_validate(o);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
