// gromet: build model surfaces and plane domains, profile metric balls,
// measure Gromov hyperbolicity, and validate the separation machinery.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gromet/ball_profile.hpp"
#include "gromet/builders.hpp"
#include "gromet/comparison.hpp"
#include "gromet/config.hpp"
#include "gromet/decomposition.hpp"
#include "gromet/delta.hpp"
#include "gromet/distance.hpp"
#include "gromet/finite_metric.hpp"
#include "gromet/mesh_io.hpp"
#include "gromet/ode.hpp"
#include "gromet/plane_domain.hpp"
#include "gromet/separation.hpp"
#include "gromet/synthetic.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace gromet;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    std::string scenario;
    std::uint64_t seed = 12345;
    double tol = -1.0;
    int threads = 0;
};

class Runner {
public:
    explicit Runner(CommonOpts opts) : opts_(std::move(opts)) {
        fs::create_directories(opts_.out_dir);
    }

    const CommonOpts& opts() const { return opts_; }

    void load_config() {
        if (opts_.config_path.empty()) {
            throw std::invalid_argument("this subcommand needs --config <file>");
        }
        cfg_ = parse_config_file(opts_.config_path);
    }

    const Config& cfg() const { return cfg_; }

    const ConfigBlock& scenario_block(const std::string& type) {
        for (const auto& b : cfg_.blocks) {
            if (b.type != "scenario") {
                continue;
            }
            if (!opts_.scenario.empty() && b.name != opts_.scenario) {
                continue;
            }
            if (b.get_or("type", "") == type) {
                return b;
            }
        }
        throw std::invalid_argument("no [scenario ...] block of type '" + type + "'" +
                                    (opts_.scenario.empty() ? ""
                                                            : " named '" + opts_.scenario + "'"));
    }

    BuildSpec build_spec(const ConfigBlock& b) const {
        BuildSpec spec;
        spec.kind = surface_kind_from_string(b.get("kind"));
        spec.resolution = b.number_or("resolution", 0.05);
        spec.radius = b.number_or("radius", 3.0);
        spec.circumference = b.number_or("circumference", 2.0);
        spec.height = b.number_or("height", 10.0);
        spec.boundary_length = b.number_or("boundary_length", 1.0);
        spec.t_max = b.number_or("t_max", 4.0);
        spec.l1 = b.number_or("l1", 1.0);
        spec.l2 = b.number_or("l2", 1.0);
        spec.l3 = b.number_or("l3", 1.0);
        spec.depth = static_cast<int>(b.integer_or("depth", 0));
        spec.loop_length = b.number_or("loop_length", 1.0);
        spec.delete_holes = !b.flag_or("keep_holes", false);
        for (const auto& h : b.all("hole")) {
            std::istringstream hs(h);
            Hole hole;
            hs >> hole.x >> hole.y >> hole.radius;
            if (!hs) {
                throw std::invalid_argument("malformed hole '" + h + "' (want: x y radius)");
            }
            spec.holes.push_back(hole);
        }
        return spec;
    }

    TriMesh build_mesh(const std::string& name,
                       std::optional<bool> delete_holes = std::nullopt) const {
        const ConfigBlock& b = cfg_.require("build", name);
        if (b.has("file")) {
            return read_trimesh_file(b.get("file"));
        }
        BuildSpec spec = build_spec(b);
        if (delete_holes) {
            spec.delete_holes = *delete_holes;
        }
        return build(spec);
    }

    PlaneDomain domain_from(const std::string& name) const {
        const ConfigBlock& b = cfg_.require("domain", name);
        PlaneDomain dom;
        const std::string outer = b.get_or("outer", "disk");
        if (outer == "disk") {
            dom.unit_disk_outer = true;
        } else if (outer == "plane") {
            dom.unit_disk_outer = false;
        } else {
            throw std::invalid_argument("outer must be 'disk' or 'plane'");
        }
        for (const auto& h : b.all("hole")) {
            std::istringstream hs(h);
            double x, y, r;
            hs >> x >> y >> r;
            if (!hs) {
                throw std::invalid_argument("malformed hole '" + h + "'");
            }
            dom.holes.push_back({Complex(x, y), r});
        }
        dom.validate();
        return dom;
    }

    int basepoint_of(const TriMesh& mesh, const ConfigBlock& b) const {
        if (b.has("basepoint")) {
            const long v = b.integer("basepoint");
            if (v < 0 || static_cast<std::size_t>(v) >= mesh.vertex_count()) {
                throw std::invalid_argument("basepoint out of range");
            }
            return static_cast<int>(v);
        }
        if (mesh.has_label("basepoint") && !mesh.label("basepoint").empty()) {
            return mesh.label("basepoint")[0];
        }
        return 0;
    }

    void fail(const std::string& scenario, const std::string& check,
              const std::string& message) {
        ordered_json f;
        f["scenario"] = scenario;
        f["check"] = check;
        f["message"] = message;
        failures_.push_back(f);
    }

    void assert_check(bool ok, const std::string& scenario, const std::string& check,
                      const std::string& message) {
        if (!ok) {
            fail(scenario, check, message);
        }
    }

    void write_json(const std::string& file, const ordered_json& j) const {
        std::ofstream out(fs::path(opts_.out_dir) / file);
        if (!out) {
            throw std::runtime_error("cannot write " + file);
        }
        out << j.dump(2) << "\n";
    }

    int finish() {
        if (failures_.empty()) {
            return 0;
        }
        ordered_json j;
        j["failures"] = ordered_json::array();
        for (const auto& f : failures_) {
            j["failures"].push_back(f);
        }
        write_json("failures.json", j);
        std::cerr << failures_.size() << " check(s) failed; see failures.json\n";
        return 1;
    }

    int config_error(const std::string& what) {
        ordered_json j;
        j["failures"] = ordered_json::array();
        ordered_json f;
        f["scenario"] = "config";
        f["check"] = "config";
        f["message"] = what;
        j["failures"].push_back(f);
        write_json("failures.json", j);
        std::cerr << "config error: " << what << "\n";
        return 2;
    }

private:
    CommonOpts opts_;
    Config cfg_;
    std::vector<ordered_json> failures_;
};

ordered_json delta_json(const DeltaReport& rep) {
    ordered_json j;
    j["delta"] = rep.delta;
    j["witness"] = {rep.witness[0], rep.witness[1], rep.witness[2], rep.witness[3]};
    j["mode"] = rep.mode == DeltaMode::exact ? "exact" : "sampled";
    j["samples"] = rep.samples;
    return j;
}

ordered_json separation_json(const SeparationReport& rep) {
    ordered_json j;
    j["pass"] = rep.pass;
    j["min_clearance"] = rep.min_clearance;
    j["max_boundary_length"] = rep.max_boundary_length;
    j["max_loop_count"] = rep.max_loop_count;
    j["conditions"] = {
        {"clearance", rep.conditions.clearance},
        {"boundary_length", rep.conditions.boundary_length},
        {"loop_count", rep.conditions.loop_count},
        {"complement_connected", rep.conditions.complement_connected},
        {"mutual_distance", rep.conditions.mutual_distance},
    };
    if (std::isfinite(rep.min_mutual_distance)) {
        j["min_mutual_distance"] = rep.min_mutual_distance;
    } else {
        j["min_mutual_distance"] = nullptr;
    }
    j["loops_per_set"] = rep.loops_per_set;
    j["boundary_length_per_set"] = rep.boundary_length_per_set;
    return j;
}

ordered_json dstar_json(const DStarReport& rep) {
    ordered_json j;
    j["infinite"] = rep.infinite;
    if (rep.infinite) {
        j["value"] = nullptr;
    } else {
        j["value"] = rep.value;
    }
    j["qualifying_pairs"] = rep.qualifying_pairs;
    return j;
}

SeparationSpec separation_spec_from(Runner& r, const ConfigBlock& b, const TriMesh& mesh) {
    SeparationSpec spec;
    spec.host = &mesh;
    spec.r = b.number("r");
    spec.s = b.number("s");
    spec.N = static_cast<int>(b.integer("N"));

    std::vector<std::string> e_labels;
    if (b.get_or("e_labels", "auto") == "auto") {
        for (const auto& [name, verts] : mesh.labels()) {
            (void)verts;
            if (name.size() > 1 && name[0] == 'e' &&
                name.find_first_not_of("0123456789", 1) == std::string::npos) {
                e_labels.push_back(name);
            }
        }
    } else {
        e_labels = b.tokens("e_labels");
    }
    if (e_labels.empty()) {
        throw std::invalid_argument("no E-set labels found on the mesh");
    }
    for (const auto& name : e_labels) {
        spec.e_sets.push_back(mesh.label(name));
    }

    if (b.has("v_labels")) {
        for (const auto& name : b.tokens("v_labels")) {
            spec.v_sets.push_back(mesh.label(name));
        }
    } else {
        const double v_radius = b.number("v_radius");
        for (const auto& e_set : spec.e_sets) {
            const auto dist = multi_source_distance(mesh, e_set);
            std::vector<int> v_set;
            for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
                if (dist[v] <= v_radius) {
                    v_set.push_back(static_cast<int>(v));
                }
            }
            spec.v_sets.push_back(std::move(v_set));
        }
    }
    (void)r;
    return spec;
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

void run_build(Runner& r) {
    for (const ConfigBlock* b : r.cfg().of_type("build")) {
        const TriMesh mesh = r.build_mesh(b->name);
        write_trimesh_file(mesh, (fs::path(r.opts().out_dir) / (b->name + ".trimesh")).string());
        std::cout << "built " << b->name << ": " << mesh.vertex_count() << " vertices, "
                  << mesh.triangles().size() << " triangles\n";
    }
}

void run_ball_profile(Runner& r) {
    const ConfigBlock& sc = r.scenario_block("ball-profile");
    const std::string mesh_name = sc.get("mesh");
    const TriMesh mesh = r.build_mesh(mesh_name);
    const DistanceField field = distance_field(mesh, r.basepoint_of(mesh, sc));

    ComparisonParams params;
    params.k = sc.number_or("k", 1.0);
    params.c = sc.number_or("c", 1.0);
    params.r0 = sc.number_or("r0", 1.0);

    const double mesh_tol =
        r.opts().tol > 0.0 ? r.opts().tol : sc.number_or("mesh_tol", 0.05);
    const double r_min = sc.number_or("r_min", 0.25);
    const double r_max = sc.number_or("r_max", params.r0 + params.c / params.k);
    const int count = static_cast<int>(sc.integer_or("radii", 60));
    std::vector<double> radii;
    for (int i = 0; i < count; ++i) {
        radii.push_back(r_min + (r_max - r_min) * (i + 1) / count);
    }
    const BallProfile prof = ball_profile(mesh, field, radii);
    write_profile_csv_file(prof, (fs::path(r.opts().out_dir) / (sc.name + "_profile.csv")).string());

    ordered_json checks;

    {
        double worst = 0.0;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            worst = std::max(worst, prof.boundary_length[i] /
                                        comparison_boundary_length(params.k, radii[i]));
        }
        const bool ok = worst <= 1.0 + mesh_tol;
        checks["boundary-length-bound"] = {{"pass", ok}, {"max_ratio", worst},
                                           {"tolerance", mesh_tol}};
        r.assert_check(ok, sc.name, "boundary-length-bound",
                       "ell(r) exceeds the curvature bound");
    }
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            worst = std::max(worst, prof.area[i] / comparison_area(params.k, radii[i]));
        }
        const bool ok = worst <= 1.0 + mesh_tol;
        checks["area-bound"] = {{"pass", ok}, {"max_ratio", worst}, {"tolerance", mesh_tol}};
        r.assert_check(ok, sc.name, "area-bound", "a(r) exceeds the curvature bound");
    }
    {
        const ScalarProfile a = prof.area_profile();
        const ScalarProfile chi = prof.chi_profile();
        const double tol = 5.0 * fundamental_error_estimate(a, params.k);
        const auto fc = check_fundamental_inequality(a, chi, params.k, tol);
        checks["area-curvature-inequality"] = {{"pass", fc.pass},
                                               {"max_violation", fc.max_violation},
                                               {"tolerance", tol},
                                               {"points_checked", fc.points_checked}};
        r.assert_check(fc.pass, sc.name, "area-curvature-inequality",
                       "a'' - k^2 a <= 2 pi chi violated beyond tolerance");
    }
    {
        const double slack = sc.number_or("slack", 1.0);
        const auto scan = scan_topology_bound(mesh, field, params, slack);
        checks["topology-bound-scan"] = {{"pass", scan.pass},
                                         {"r_prime", scan.r_prime},
                                         {"n_at_r_prime", scan.n_at_r_prime},
                                         {"bound", scan.bound},
                                         {"ell_outer", scan.ell_outer},
                                         {"slack", scan.slack}};
        r.assert_check(scan.pass, sc.name, "topology-bound-scan",
                       "no radius with n(r') below the topology bound");
    }

    ordered_json out;
    out["scenario"] = sc.name;
    out["type"] = "ball-profile";
    out["mesh"] = mesh_name;
    out["k"] = params.k;
    out["c"] = params.c;
    out["r0"] = params.r0;
    out["checks"] = checks;
    r.write_json(sc.name + "_report.json", out);
}

void run_delta(Runner& r) {
    const ConfigBlock& sc = r.scenario_block("delta");
    FiniteMetric metric = [&]() {
        if (sc.has("metric")) {
            return read_metric_csv_file(sc.get("metric"));
        }
        const TriMesh mesh = r.build_mesh(sc.get("mesh"));
        const int count = static_cast<int>(sc.integer_or("sample", 120));
        const auto sample = farthest_point_sample(mesh, r.basepoint_of(mesh, sc), count);
        return FiniteMetric::from_mesh_sample(mesh, sample);
    }();

    const std::string mode_str = sc.get_or("mode", "auto");
    DeltaMode mode;
    if (mode_str == "exact") {
        mode = DeltaMode::exact;
    } else if (mode_str == "sampled") {
        mode = DeltaMode::sampled;
    } else if (mode_str == "auto") {
        mode = metric.size() <= 300 ? DeltaMode::exact : DeltaMode::sampled;
    } else {
        throw std::invalid_argument("mode must be exact, sampled or auto");
    }
    const std::uint64_t budget =
        static_cast<std::uint64_t>(sc.integer_or("budget", 10000000));
    const DeltaReport rep =
        delta_four_point(metric, mode, budget, r.opts().seed, r.opts().threads);
    r.write_json(sc.name + "_delta.json", delta_json(rep));

    if (sc.has("expect_delta")) {
        const double want = sc.number("expect_delta");
        const double tol = sc.number_or("expect_tol", 0.0);
        r.assert_check(std::abs(rep.delta - want) <= tol, sc.name, "delta-value",
                       "delta " + std::to_string(rep.delta) + " != expected " +
                           std::to_string(want));
    }
}

void run_tree_decomp(Runner& r) {
    const ConfigBlock& sc = r.scenario_block("tree-decomp");
    const TriMesh mesh = r.build_mesh(sc.get("mesh"));
    const WeightedGraph host = mesh_graph(mesh);

    DecompositionSpec spec;
    spec.k_claimed = sc.number("k_claimed");
    if (sc.has("piece_labels")) {
        for (const auto& name : sc.tokens("piece_labels")) {
            spec.pieces.push_back(mesh.label(name));
        }
    } else {
        for (const auto& [name, verts] : mesh.labels()) {
            if (name.rfind("piece", 0) == 0) {
                spec.pieces.push_back(verts);
            }
        }
    }
    const std::uint64_t budget =
        static_cast<std::uint64_t>(sc.integer_or("budget", 200000));
    const auto rep = validate_tree_decomposition(spec, host, budget, r.opts().seed);

    ordered_json j;
    j["valid"] = rep.valid;
    j["reason"] = rep.reason;
    j["k_measured"] = rep.k_measured;
    j["k_claimed"] = spec.k_claimed;
    j["delta_host"] = rep.delta_host;
    j["delta_pieces"] = rep.delta_pieces;
    r.write_json(sc.name + "_treedecomp.json", j);

    if (sc.flag_or("expect_valid", true)) {
        r.assert_check(rep.valid, sc.name, "tree-decomposition",
                       rep.reason.empty() ? "invalid" : rep.reason);
    }
}

// Separation-style scenarios run on the full surface with the marked sets
// still present unless the config says otherwise.
std::optional<bool> host_deletion(const ConfigBlock& sc) {
    const std::string host = sc.get_or("host", "full");
    if (host == "full") {
        return false;
    }
    if (host == "deleted") {
        return true;
    }
    throw std::invalid_argument("host must be 'full' or 'deleted'");
}

void run_separation(Runner& r) {
    const ConfigBlock& sc = r.scenario_block("separation");
    const TriMesh mesh = r.build_mesh(sc.get("mesh"), host_deletion(sc));
    const SeparationSpec spec = separation_spec_from(r, sc, mesh);
    const auto rep = validate_uniform_separation(spec);
    r.write_json(sc.name + "_separation.json", separation_json(rep));
    const std::string expect = sc.get_or("expect", "pass");
    if (expect == "pass") {
        r.assert_check(rep.pass, sc.name, "uniform-separation",
                       "separation conditions violated");
    } else if (expect == "fail") {
        r.assert_check(!rep.pass, sc.name, "uniform-separation",
                       "separation unexpectedly passed");
    }
}

void run_dstar(Runner& r) {
    const ConfigBlock& sc = r.scenario_block("dstar");
    const TriMesh mesh = r.build_mesh(sc.get("mesh"), host_deletion(sc));
    const SeparationSpec spec = separation_spec_from(r, sc, mesh);
    const auto rep = estimate_D_star(spec);
    r.write_json(sc.name + "_dstar.json", dstar_json(rep));
    if (sc.flag_or("expect_zero", false)) {
        r.assert_check(!rep.infinite && rep.value == 0.0, sc.name, "dstar-zero",
                       "D* is not exactly zero");
    }
}

void run_s_vs_sstar(Runner& r) {
    const ConfigBlock& sc = r.scenario_block("s-vs-sstar");
    const std::string build_name = sc.get("build");
    const TriMesh surface = r.build_mesh(build_name, false);
    const TriMesh deleted = r.build_mesh(build_name, true);

    const int sample = static_cast<int>(sc.integer_or("sample", 120));
    auto measure = [&](const TriMesh& mesh) {
        const int base = mesh.has_label("basepoint") ? mesh.label("basepoint")[0] : 0;
        const auto pts = farthest_point_sample(mesh, base, sample);
        const FiniteMetric metric = FiniteMetric::from_mesh_sample(mesh, pts);
        const DeltaMode mode = metric.size() <= 300 ? DeltaMode::exact : DeltaMode::sampled;
        return delta_four_point(metric, mode,
                                static_cast<std::uint64_t>(sc.integer_or("budget", 10000000)),
                                r.opts().seed, r.opts().threads);
    };
    const DeltaReport delta_s = measure(surface);
    const DeltaReport delta_sstar = measure(deleted);

    const SeparationSpec spec = separation_spec_from(r, sc, surface);
    const auto sep = validate_uniform_separation(spec);
    const auto dstar = estimate_D_star(spec);

    ordered_json j;
    j["scenario"] = sc.name;
    j["type"] = "s-vs-sstar";
    j["delta_s"] = delta_json(delta_s);
    j["delta_sstar"] = delta_json(delta_sstar);
    j["separation"] = separation_json(sep);
    j["dstar"] = dstar_json(dstar);
    r.write_json(sc.name + "_svsstar.json", j);

    if (sc.flag_or("expect_separated", true)) {
        r.assert_check(sep.pass, sc.name, "uniform-separation",
                       "separation conditions violated");
    }
    if (sc.flag_or("expect_genus0", true)) {
        r.assert_check(!dstar.infinite && dstar.value == 0.0, sc.name, "dstar-genus0",
                       "D* must vanish on a genus-zero host");
    }
}

void run_domain(Runner& r) {
    const ConfigBlock& sc = r.scenario_block("domain");
    const PlaneDomain dom = r.domain_from(sc.get("domain"));
    const auto checks = sc.has("checks")
                            ? sc.tokens("checks")
                            : std::vector<std::string>{"uniform-perfect", "minlen"};
    ordered_json out;
    out["scenario"] = sc.name;
    out["type"] = "domain";

    for (const auto& check : checks) {
        if (check == "uniform-perfect") {
            const auto w = uniformly_perfect_constant(dom);
            out["uniform_perfect"] = {{"modulus", w.modulus},
                                      {"center", {w.center.real(), w.center.imag()}},
                                      {"rho1", w.rho1},
                                      {"rho2", w.rho2}};
            if (sc.has("min_modulus")) {
                r.assert_check(w.modulus >= sc.number("min_modulus"), sc.name,
                               "uniform-perfect",
                               "best separating modulus below the expected floor");
            }
        } else if (check == "minlen") {
            const int count = static_cast<int>(sc.integer_or("minlen_count", 200));
            const int segments = static_cast<int>(sc.integer_or("minlen_segments", 4));
            int passed = 0;
            double worst_margin = std::numeric_limits<double>::infinity();
            for (int i = 0; i < count; ++i) {
                const auto poly = random_polyline(dom, segments, r.opts().seed + i);
                const auto rep = check_minlen_bound(dom, poly);
                passed += rep.pass ? 1 : 0;
                worst_margin = std::min(worst_margin, rep.quasihyperbolic - rep.lower_bound);
            }
            out["minlen"] = {{"count", count}, {"passed", passed},
                             {"worst_margin", worst_margin}};
            r.assert_check(passed == count, sc.name, "quasihyperbolic-minlen",
                           "length lower bound violated on a random polyline");
        } else if (check == "length-ratio") {
            const int count = static_cast<int>(sc.integer_or("ratio_count", 100));
            int passed = 0;
            for (int i = 0; i < count; ++i) {
                const double rho = 0.01 + 0.98 * uniform01(r.opts().seed, 7000 + i);
                passed += check_length_ratio_punctured(rho).pass ? 1 : 0;
            }
            const auto mid = check_length_ratio_punctured(0.5);
            out["length_ratio"] = {{"count", count}, {"passed", passed},
                                   {"ratio_at_half", mid.ratio}};
            r.assert_check(passed == count, sc.name, "length-ratio",
                           "two-sided length ratio bound violated");
        } else if (check == "density-disk") {
            const int count = static_cast<int>(sc.integer_or("density_count", 10000));
            PlaneDomain disk;
            double lo = std::numeric_limits<double>::infinity();
            double hi = 0.0;
            for (int i = 0; i < count; ++i) {
                const Complex z = random_domain_point(disk, r.opts().seed, 9000 + i);
                const double v = model_poincare_density(ModelDomain::disk, z) *
                                 boundary_distance(disk, z);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            out["density_disk"] = {{"count", count}, {"min", lo}, {"max", hi}};
            r.assert_check(lo >= 1.0 - 1e-12 && hi <= 2.0 + 1e-12, sc.name, "density-disk",
                           "lambda * delta left the interval [1, 2]");
        } else if (check == "density-punctured") {
            PlaneDomain punctured;
            punctured.holes.push_back({Complex(0, 0), 0.0});
            const double rr = std::exp(-6.0);
            const double v = model_poincare_density(ModelDomain::punctured_disk,
                                                    Complex(rr, 0.0)) *
                             boundary_distance(punctured, Complex(rr, 0.0));
            const auto w = uniformly_perfect_constant(punctured);
            out["density_punctured"] = {{"lambda_delta_at_exp_minus6", v},
                                        {"annulus_modulus", w.modulus}};
            r.assert_check(v <= 0.2, sc.name, "density-punctured",
                           "puncture signature lambda*delta not small");
            r.assert_check(w.modulus >= 0.9, sc.name, "density-punctured",
                           "puncture admits no large separating annulus");
        } else {
            throw std::invalid_argument("unknown domain check '" + check + "'");
        }
    }
    r.write_json(sc.name + "_domain.json", out);
}

void run_verify_all(Runner& r) {
    ordered_json out;
    out["type"] = "verify-all";

    // trees are 0-hyperbolic, exactly
    {
        bool ok = true;
        for (int t = 0; t < 10; ++t) {
            const WeightedGraph g = random_tree(80 + 7 * t, r.opts().seed + t);
            const FiniteMetric m = FiniteMetric::from_graph(g);
            const auto rep = delta_four_point(m, DeltaMode::exact, 0, 0, r.opts().threads);
            ok = ok && rep.delta == 0.0;
        }
        out["tree_delta_zero"] = ok;
        r.assert_check(ok, "verify-all", "tree-delta", "tree metric with nonzero delta");
    }
    // unit 4-cycle
    {
        WeightedGraph g;
        g.n = 4;
        g.adj.resize(4);
        g.add_edge(0, 1, 1.0);
        g.add_edge(1, 2, 1.0);
        g.add_edge(2, 3, 1.0);
        g.add_edge(3, 0, 1.0);
        const FiniteMetric m = FiniteMetric::from_graph(g);
        const double dh = delta_four_point(m, DeltaMode::exact).delta;
        const double dt = delta_thin(g);
        const auto rips = check_rips(dh, dt);
        out["four_cycle"] = {{"delta", dh}, {"thin", dt}, {"rips_pass", rips.pass}};
        r.assert_check(dh == 1.0 && dt == 1.0 && rips.pass, "verify-all", "four-cycle",
                       "unit 4-cycle measurements are off");
    }
    // comparison closed forms
    {
        const double e0 = eps0(1.0, 2.0, 1.0);
        const double target = 1.0 / std::expm1(2.0);
        const bool ok = std::abs(clearance_profile(1.0, e0) - target) <= 1e-10;
        out["eps0_roundtrip"] = ok;
        r.assert_check(ok, "verify-all", "eps0", "clearance inversion residual too large");
    }
    // a small hyperbolic disk end to end
    {
        BuildSpec spec;
        spec.kind = SurfaceKind::hyperbolic_disk;
        spec.radius = 2.2;
        spec.resolution = 0.08;
        const TriMesh mesh = build(spec);
        const DistanceField field = distance_field(mesh, mesh.label("basepoint")[0]);
        std::vector<double> radii;
        for (int i = 1; i <= 40; ++i) {
            radii.push_back(0.25 + (2.0 - 0.25) * i / 40.0);
        }
        const BallProfile prof = ball_profile(mesh, field, radii);
        double worst = 0.0;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            worst = std::max(worst,
                             prof.boundary_length[i] / comparison_boundary_length(1.0, radii[i]));
            worst = std::max(worst, prof.area[i] / comparison_area(1.0, radii[i]));
        }
        ComparisonParams params{1.0, 1.0, 1.0};
        const auto scan = scan_topology_bound(mesh, field, params);
        out["disk_profile"] = {{"max_bound_ratio", worst},
                               {"scan_pass", scan.pass},
                               {"scan_n", scan.n_at_r_prime}};
        r.assert_check(worst <= 1.05 && scan.pass, "verify-all", "disk-profile",
                       "hyperbolic disk comparison failed");
    }
    // quasihyperbolic bound and density window
    {
        PlaneDomain dom;
        dom.holes.push_back({Complex(0.3, 0.1), 0.12});
        dom.holes.push_back({Complex(-0.4, -0.2), 0.1});
        bool ok = true;
        for (int i = 0; i < 50; ++i) {
            ok = ok && check_minlen_bound(dom, random_polyline(dom, 3, r.opts().seed + i)).pass;
        }
        out["minlen"] = ok;
        r.assert_check(ok, "verify-all", "minlen", "quasihyperbolic bound violated");

        bool ratio_ok = true;
        for (int i = 0; i < 25; ++i) {
            const double rho = 0.01 + 0.98 * uniform01(r.opts().seed, 300 + i);
            ratio_ok = ratio_ok && check_length_ratio_punctured(rho).pass;
        }
        out["length_ratio"] = ratio_ok;
        r.assert_check(ratio_ok, "verify-all", "length-ratio", "length ratio bound violated");
    }
    r.write_json("verify_all.json", out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric-ball topology profiles and Gromov hyperbolicity measurements"};
    app.require_subcommand(1);
    app.fallthrough(true);

    CommonOpts opts;
    app.add_option("--config", opts.config_path, "config file with [build]/[domain]/[scenario] blocks");
    app.add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    app.add_option("--seed", opts.seed, "random seed")->capture_default_str();
    app.add_option("--tol", opts.tol, "tolerance override for mesh-bound checks");
    app.add_option("--threads", opts.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    app.add_option("--scenario", opts.scenario, "scenario block name (default: first match)");

    auto* cmd_build = app.add_subcommand("build", "build meshes for every [build] block");
    auto* cmd_profile = app.add_subcommand("ball-profile", "metric-ball profile and bounds");
    auto* cmd_delta = app.add_subcommand("delta", "four-point hyperbolicity of a metric");
    auto* cmd_tree = app.add_subcommand("tree-decomp", "validate a tree decomposition");
    auto* cmd_sep = app.add_subcommand("separation", "validate uniform separation");
    auto* cmd_dstar = app.add_subcommand("dstar", "estimate the handle criterion D*");
    auto* cmd_svs = app.add_subcommand("s-vs-sstar", "compare a surface and its deletion");
    auto* cmd_domain = app.add_subcommand("domain", "plane-domain measurements");
    auto* cmd_verify = app.add_subcommand("verify-all", "built-in verification battery");

    CLI11_PARSE(app, argc, argv);

    Runner runner(opts);
    try {
        if (cmd_verify->parsed()) {
            run_verify_all(runner);
            return runner.finish();
        }
        runner.load_config();
        if (cmd_build->parsed()) {
            run_build(runner);
        } else if (cmd_profile->parsed()) {
            run_ball_profile(runner);
        } else if (cmd_delta->parsed()) {
            run_delta(runner);
        } else if (cmd_tree->parsed()) {
            run_tree_decomp(runner);
        } else if (cmd_sep->parsed()) {
            run_separation(runner);
        } else if (cmd_dstar->parsed()) {
            run_dstar(runner);
        } else if (cmd_svs->parsed()) {
            run_s_vs_sstar(runner);
        } else if (cmd_domain->parsed()) {
            run_domain(runner);
        }
    } catch (const std::exception& e) {
        return runner.config_error(e.what());
    }
    return runner.finish();
}
