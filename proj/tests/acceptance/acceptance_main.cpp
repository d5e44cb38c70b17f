// Acceptance suite: every criterion prints one PASS/FAIL line; the exit code
// is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gromet/ball_profile.hpp"
#include "gromet/builders.hpp"
#include "gromet/comparison.hpp"
#include "gromet/delta.hpp"
#include "gromet/distance.hpp"
#include "gromet/finite_metric.hpp"
#include "gromet/ode.hpp"
#include "gromet/plane_domain.hpp"
#include "gromet/separation.hpp"
#include "gromet/synthetic.hpp"

namespace fs = std::filesystem;
using namespace gromet;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %2d %s: %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------- 1
void criterion_tree_delta() {
    const auto t0 = std::chrono::steady_clock::now();
    bool all_zero = true;
    for (int t = 0; t < 50; ++t) {
        const int n = 150 + (static_cast<int>(mix64(777 + t)) & 31) + (t % 20);
        const FiniteMetric m = FiniteMetric::from_graph(random_tree(n, 1000 + t));
        const auto rep = delta_four_point(m, DeltaMode::exact);
        all_zero = all_zero && rep.delta == 0.0;
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream d;
    d << "50 tree metrics, exact four-point delta all zero=" << (all_zero ? "yes" : "no")
      << ", " << elapsed << " s";
    report(1, all_zero && elapsed <= 60.0, d.str());
}

// ---------------------------------------------------------------------- 2
void criterion_four_cycle() {
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
    std::ostringstream d;
    d << "unit 4-cycle: delta=" << dh << " thin=" << dt << " rips=" << rips.pass;
    report(2, dh == 1.0 && dt == 1.0 && rips.pass, d.str());
}

// ------------------------------------------------------------------- 3, 4
struct DiskRun {
    double worst_rel_ell = 0.0;
    double worst_rel_area = 0.0;
    double worst_ratio_ell = 0.0;
    double worst_ratio_area = 0.0;
    BallProfile profile;
    bool fundamental_pass = false;
};

DiskRun disk_run(double h) {
    BuildSpec spec;
    spec.kind = SurfaceKind::hyperbolic_disk;
    spec.radius = 3.0;
    spec.resolution = h;
    const TriMesh disk = build(spec);
    const DistanceField field = distance_field(disk, disk.label("basepoint")[0]);
    std::vector<double> radii;
    for (int i = 0; i <= 45; ++i) {
        radii.push_back(0.25 + 0.05 * i); // 0.25 .. 2.5
    }
    DiskRun run;
    run.profile = ball_profile(disk, field, radii);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double lt = comparison_boundary_length(1.0, radii[i]);
        const double at = comparison_area(1.0, radii[i]);
        run.worst_rel_ell =
            std::max(run.worst_rel_ell, std::abs(run.profile.boundary_length[i] - lt) / lt);
        run.worst_rel_area =
            std::max(run.worst_rel_area, std::abs(run.profile.area[i] - at) / at);
        run.worst_ratio_ell = std::max(run.worst_ratio_ell, run.profile.boundary_length[i] / lt);
        run.worst_ratio_area = std::max(run.worst_ratio_area, run.profile.area[i] / at);
    }
    const ScalarProfile a = run.profile.area_profile();
    const ScalarProfile chi = run.profile.chi_profile();
    const double tol = 5.0 * fundamental_error_estimate(a, 1.0);
    run.fundamental_pass = check_fundamental_inequality(a, chi, 1.0, tol).pass;
    return run;
}

void criterions_disk(DiskRun* coarse_out) {
    const auto t0 = std::chrono::steady_clock::now();
    const DiskRun coarse = disk_run(0.05);
    const DiskRun fine = disk_run(0.025);
    const double elapsed = seconds_since(t0);

    const bool bounds_ok = coarse.worst_ratio_ell <= 1.05 && coarse.worst_ratio_area <= 1.05;
    const bool rel_ok = coarse.worst_rel_ell <= 0.05 && coarse.worst_rel_area <= 0.05;
    const double worst_coarse = std::max(coarse.worst_rel_ell, coarse.worst_rel_area);
    const double worst_fine = std::max(fine.worst_rel_ell, fine.worst_rel_area);
    const bool halving_ok = worst_coarse / worst_fine >= 1.5;

    std::ostringstream d;
    d << "rel err ell=" << coarse.worst_rel_ell << " area=" << coarse.worst_rel_area
      << "; halving ratio=" << worst_coarse / worst_fine << "; " << elapsed << " s";
    report(3, bounds_ok && rel_ok && halving_ok && elapsed <= 120.0, d.str());
    *coarse_out = coarse;
}

void criterion_fundamental(const DiskRun& disk_coarse) {
    bool all = disk_coarse.fundamental_pass;
    std::ostringstream d;
    d << "disk=" << disk_coarse.fundamental_pass;

    auto run_mesh = [&](const char* name, const BuildSpec& spec, double r_lo, double r_hi) {
        const TriMesh mesh = build(spec);
        const DistanceField field = distance_field(mesh, mesh.label("basepoint")[0]);
        std::vector<double> radii;
        const int count = 60;
        for (int i = 0; i <= count; ++i) {
            radii.push_back(r_lo + (r_hi - r_lo) * i / count);
        }
        const BallProfile prof = ball_profile(mesh, field, radii);
        const ScalarProfile a = prof.area_profile();
        const ScalarProfile chi = prof.chi_profile();
        const double tol = 5.0 * fundamental_error_estimate(a, 1.0);
        const bool pass = check_fundamental_inequality(a, chi, 1.0, tol).pass;
        all = all && pass;
        d << " " << name << "=" << pass;
    };

    BuildSpec cyl;
    cyl.kind = SurfaceKind::flat_cylinder;
    cyl.circumference = 2.0;
    cyl.height = 10.0;
    cyl.resolution = 0.05;
    run_mesh("cylinder", cyl, 0.3, 4.5);

    BuildSpec funnel;
    funnel.kind = SurfaceKind::funnel;
    funnel.boundary_length = 1.0;
    funnel.t_max = 4.0;
    funnel.resolution = 0.05;
    run_mesh("funnel", funnel, 0.3, 1.9);

    BuildSpec tree;
    tree.kind = SurfaceKind::pants_tree;
    tree.depth = 2;
    tree.loop_length = 1.0;
    tree.resolution = 0.1;
    run_mesh("pants_tree", tree, 0.5, 4.0);

    // exact closed-form profile at the pinned 1e-9 tolerance
    {
        std::vector<double> g;
        std::vector<double> av, cv;
        for (int i = 1; i <= 59; ++i) {
            const double r = 0.05 * i;
            g.push_back(r);
            av.push_back(2.0 * kPi * (std::cosh(r) - 1.0));
            cv.push_back(1.0);
        }
        const ScalarProfile a(g, av, ProfileKind::area);
        const ScalarProfile chi(g, cv, ProfileKind::euler_char);
        const auto rep = check_fundamental_inequality(a, chi, 1.0, 1e-9);
        all = all && rep.pass;
        d << " closed-form=" << rep.pass << " (max violation " << rep.max_violation << ")";
    }
    report(4, all, d.str());
}

// ---------------------------------------------------------------------- 5
void criterion_pants_tree_bound() {
    BuildSpec spec;
    spec.kind = SurfaceKind::pants_tree;
    spec.depth = 4;
    spec.loop_length = 1.0;
    spec.resolution = 0.1;
    const TriMesh tree = build(spec);
    const DistanceField field = distance_field(tree, tree.label("basepoint")[0]);

    bool scans_ok = true;
    std::ostringstream d;
    for (double r0 = 1.0; r0 <= 4.01; r0 += 0.5) {
        ComparisonParams params{1.0, 1.0, r0};
        const auto rep = scan_topology_bound(tree, field, params, 1.0);
        scans_ok = scans_ok && rep.pass;
        if (r0 == 1.0 || r0 == 4.0) {
            d << "r0=" << r0 << ": n=" << rep.n_at_r_prime << " bound=" << rep.bound << "; ";
        }
    }

    std::vector<double> radii;
    for (int i = 0; i <= 45; ++i) {
        radii.push_back(0.5 + 0.1 * i); // 0.5 .. 5.0
    }
    const BallProfile prof = ball_profile(tree, field, radii);
    bool crude_ok = true;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int fit_n = 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double crude = std::sinh(radii[i] + 1.0) / std::sinh(1.0);
        crude_ok = crude_ok && prof.n_gen[i] <= crude;
        if (radii[i] >= 2.0 && radii[i] <= 5.0) {
            const double x = radii[i];
            const double y = std::log(std::max(prof.n_gen[i], 1));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++fit_n;
        }
    }
    const double slope = (fit_n * sxy - sx * sy) / (fit_n * sxx - sx * sx);
    d << "crude bound=" << crude_ok << " growth slope=" << slope;
    report(5, scans_ok && crude_ok && slope > 0.0, d.str());
}

// ---------------------------------------------------------------------- 6
void criterion_ode() {
    bool compare_ok = true;
    std::vector<double> g;
    for (int i = 0; i <= 400; ++i) {
        g.push_back(2.0 * i / 400.0);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const double k = 0.4 + 2.0 * uniform01(61, 5 * trial);
        const double amp = uniform01(61, 5 * trial + 1);
        const double ph = 2.0 * kPi * uniform01(61, 5 * trial + 2);
        const double gap = 0.5 * uniform01(61, 5 * trial + 3);
        const double u0 = uniform01(61, 5 * trial + 4);
        std::vector<double> fv, fbv;
        for (double r : g) {
            const double base = amp * std::sin(3.0 * r + ph);
            fv.push_back(base);
            fbv.push_back(base + gap * (1.0 + std::cos(r)));
        }
        const auto u = solve_linear_ode_with_derivative(k, 0.0, u0, 0.2,
                                                        ScalarProfile(g, fv));
        const auto ub = solve_linear_ode_with_derivative(k, 0.0, u0, 0.2,
                                                         ScalarProfile(g, fbv));
        for (std::size_t i = 0; i < g.size(); ++i) {
            compare_ok = compare_ok && u.u.values[i] <= ub.u.values[i] + 1e-9;
            const double su = u.u_prime.values[i] - k * u.u.values[i];
            const double sb = ub.u_prime.values[i] - k * ub.u.values[i];
            compare_ok = compare_ok && su <= sb + 1e-9;
        }
    }

    // RK4 agreement at step 1e-3
    double worst = 0.0;
    {
        const int steps = 2000;
        const double dr = 2.0 / steps;
        auto f = [](double r) { return 0.7 * std::sin(r + 0.3) - 0.4 * std::cos(2.0 * r); };
        std::vector<double> gg, fv;
        for (int i = 0; i <= steps; ++i) {
            gg.push_back(dr * i);
            fv.push_back(f(gg.back()));
        }
        const auto u = solve_linear_ode(1.0, 0.0, 0.5, 0.3, ScalarProfile(gg, fv));
        // independent 4th-order oracle
        double uu = 0.5, vv = 0.3;
        double max_err = 0.0;
        for (int i = 0; i < steps; ++i) {
            const double r = dr * i;
            auto dv = [&](double rr, double x) { return x + f(rr); };
            const double k1u = vv, k1v = dv(r, uu);
            const double k2u = vv + 0.5 * dr * k1v, k2v = dv(r + 0.5 * dr, uu + 0.5 * dr * k1u);
            const double k3u = vv + 0.5 * dr * k2v, k3v = dv(r + 0.5 * dr, uu + 0.5 * dr * k2u);
            const double k4u = vv + dr * k3v, k4v = dv(r + dr, uu + dr * k3u);
            uu += dr / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u);
            vv += dr / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
            max_err = std::max(max_err, std::abs(uu - u.values[i + 1]));
        }
        worst = max_err;
    }
    std::ostringstream d;
    d << "100 ordered pairs dominated=" << compare_ok << "; rk4 max err=" << worst;
    report(6, compare_ok && worst <= 1e-6, d.str());
}

// ---------------------------------------------------------------------- 7
void criterion_collars() {
    BuildSpec spec;
    spec.kind = SurfaceKind::pants_tree;
    spec.depth = 1;
    spec.loop_length = 1.0;
    spec.resolution = 0.05;
    const TriMesh tree = build(spec);
    const double width = collar_width(1.0) - 0.1;
    const auto d0 = multi_source_distance(tree, tree.label("glue0"));
    const auto d1 = multi_source_distance(tree, tree.label("glue1"));
    bool disjoint = true;
    for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
        if (d0[v] <= width && d1[v] <= width) {
            disjoint = false;
            break;
        }
    }
    std::ostringstream d;
    d << "collar width " << width << ", neighborhoods disjoint=" << disjoint;
    report(7, disjoint, d.str());
}

// ---------------------------------------------------------------------- 8
void criterion_genus0_dstar() {
    bool all_zero = true;
    std::ostringstream d;
    auto dilate = [](const TriMesh& mesh, const std::vector<int>& e_set, double radius) {
        const auto dist = multi_source_distance(mesh, e_set);
        std::vector<int> v_set;
        for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
            if (dist[v] <= radius) {
                v_set.push_back(static_cast<int>(v));
            }
        }
        return v_set;
    };

    {
        BuildSpec spec;
        spec.kind = SurfaceKind::disk_minus_disks;
        spec.radius = 2.2;
        spec.resolution = 0.07;
        spec.holes = {{0.35, 0.0, 0.1}, {-0.4, 0.1, 0.08}, {0.0, -0.45, 0.0}};
        spec.delete_holes = false;
        const TriMesh surf = build(spec);
        for (double rad : {0.12, 0.25, 0.4}) {
            SeparationSpec sep;
            sep.host = &surf;
            sep.r = 0.05;
            sep.s = 30.0;
            sep.N = 4;
            for (int k = 0; k < 3; ++k) {
                sep.e_sets.push_back(surf.label("e" + std::to_string(k)));
                sep.v_sets.push_back(dilate(surf, sep.e_sets.back(), rad));
            }
            const auto rep = estimate_D_star(sep);
            all_zero = all_zero && !rep.infinite && rep.value == 0.0;
        }
        d << "disk with holes ok=" << all_zero;
    }
    {
        BuildSpec spec;
        spec.kind = SurfaceKind::pants_tree;
        spec.depth = 1;
        spec.loop_length = 1.0;
        spec.resolution = 0.1;
        const TriMesh tree = build(spec);
        SeparationSpec sep;
        sep.host = &tree;
        sep.r = 0.05;
        sep.s = 30.0;
        sep.N = 4;
        sep.e_sets.push_back(tree.label("glue0"));
        sep.v_sets.push_back(dilate(tree, sep.e_sets.back(), 0.3));
        const auto rep = estimate_D_star(sep);
        all_zero = all_zero && !rep.infinite && rep.value == 0.0;
        d << "; pants tree ok=" << (!rep.infinite && rep.value == 0.0);
    }
    report(8, all_zero, d.str());
}

// ---------------------------------------------------------------------- 9
void criterion_quasihyperbolic() {
    PlaneDomain dom;
    // three random disjoint disks, deterministic given the seed
    std::uint64_t c = 0;
    while (dom.holes.size() < 3) {
        const double x = 1.2 * uniform01(91, c++) - 0.6;
        const double y = 1.2 * uniform01(91, c++) - 0.6;
        const double r = 0.05 + 0.1 * uniform01(91, c++);
        PlaneDomain trial = dom;
        trial.holes.push_back({Complex(x, y), r});
        try {
            trial.validate();
            dom = trial;
        } catch (const std::exception&) {
        }
    }
    bool all_pass = true;
    for (int i = 0; i < 1000; ++i) {
        const auto poly = random_polyline(dom, 4, 9000 + i);
        all_pass = all_pass && check_minlen_bound(dom, poly).pass;
    }
    PlaneDomain disk;
    const double radial =
        quasihyperbolic_length(disk, {Complex(0, 0), Complex(1.0 - std::exp(-1.0), 0)});
    std::ostringstream d;
    d << "1000 polylines pass=" << all_pass << "; radial=" << radial;
    report(9, all_pass && std::abs(radial - 1.0) <= 1e-6, d.str());
}

// --------------------------------------------------------------------- 10
void criterion_density() {
    PlaneDomain disk;
    double lo = 10.0, hi = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Complex z = random_domain_point(disk, 101, i);
        const double v =
            model_poincare_density(ModelDomain::disk, z) * boundary_distance(disk, z);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    PlaneDomain punctured;
    punctured.holes.push_back({Complex(0, 0), 0.0});
    const double r = std::exp(-6.0);
    const double pv = model_poincare_density(ModelDomain::punctured_disk, Complex(r, 0)) *
                      boundary_distance(punctured, Complex(r, 0));
    const auto w = uniformly_perfect_constant(punctured);
    std::ostringstream d;
    d << "disk window [" << lo << ", " << hi << "]; puncture lambda*delta=" << pv
      << " modulus=" << w.modulus;
    report(10,
           lo >= 1.0 - 1e-12 && hi <= 2.0 + 1e-12 && pv <= 0.2 && w.modulus >= 0.9,
           d.str());
}

// --------------------------------------------------------------------- 11
void criterion_length_ratio() {
    bool all = true;
    for (int i = 0; i < 100; ++i) {
        const double rho = 0.01 + 0.98 * uniform01(111, i);
        all = all && check_length_ratio_punctured(rho).pass;
    }
    for (double rho : {0.1, 0.5, 0.99}) {
        all = all && check_length_ratio_punctured(rho).pass;
    }
    const double ratio = check_length_ratio_punctured(0.5).ratio;
    const double closed = 0.75 / std::log(2.0);
    std::ostringstream d;
    d << "ratio(0.5)=" << ratio << " closed form=" << closed;
    report(11, all && std::abs(ratio - closed) <= 1e-4 && std::abs(ratio - 1.0820) <= 1e-3,
           d.str());
}

// --------------------------------------------------------------------- 12
void criterion_eps0() {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double c = 0.1 + 4.9 * uniform01(121, 3 * i);
        const double l = 0.1 + 4.9 * uniform01(121, 3 * i + 1);
        const double c1 = 0.1 + 4.9 * uniform01(121, 3 * i + 2);
        const double e0 = eps0(c, l, c1);
        const double target = c / std::expm1(l / c1);
        worst = std::max(worst, std::abs(clearance_profile(c, e0) - target));
    }
    std::ostringstream d;
    d << "worst residual=" << worst;
    report(12, worst <= 1e-10, d.str());
}

// --------------------------------------------------------------------- 13
std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_determinism() {
    const fs::path base = fs::temp_directory_path() / "gromet_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);
    const std::string cfg = R"(
[build surf]
kind = disk_minus_disks
radius = 2.0
resolution = 0.1
hole = 0.35 0.0 0.1
hole = -0.4 0.1 0.08

[build tree]
kind = pants_tree
depth = 1
loop_length = 1.0
resolution = 0.15

[domain threeholes]
outer = disk
hole = 0.4 0.1 0.12
hole = -0.3 -0.3 0.1
hole = -0.1 0.45 0.08

[scenario prof]
type = ball-profile
mesh = surf
k = 1
c = 1
r0 = 0.8
radii = 30
slack = 2

[scenario del]
type = delta
mesh = surf
sample = 50

[scenario dec]
type = tree-decomp
mesh = tree
k_claimed = 1.2

[scenario sep]
type = separation
mesh = surf
v_radius = 0.25
r = 0.1
s = 8.0
N = 2

[scenario dst]
type = dstar
mesh = surf
v_radius = 0.25
r = 0.1
s = 8.0
N = 2
expect_zero = true

[scenario svs]
type = s-vs-sstar
build = surf
v_radius = 0.25
r = 0.1
s = 8.0
N = 2
sample = 50

[scenario dom]
type = domain
domain = threeholes
checks = uniform-perfect minlen
minlen_count = 30
)";
    const fs::path cfg_path = base / "run.cfg";
    {
        std::ofstream out(cfg_path);
        out << cfg;
    }
    const std::vector<std::string> subs = {"build",      "ball-profile", "delta",
                                           "tree-decomp", "separation",   "dstar",
                                           "s-vs-sstar", "domain"};
    bool all_ok = true;
    std::string first_diff;
    for (const auto& sub : subs) {
        const fs::path d1 = base / (sub + "_1");
        const fs::path d2 = base / (sub + "_2");
        fs::create_directories(d1);
        fs::create_directories(d2);
        for (const fs::path& dir : {d1, d2}) {
            const std::string cmd = std::string(GROMET_CLI_PATH) + " " + sub + " --config " +
                                    cfg_path.string() + " --seed 424242 --threads 2 --out " +
                                    dir.string() + " >/dev/null 2>&1";
            const int rc = std::system(cmd.c_str());
            if (WEXITSTATUS(rc) != 0) {
                all_ok = false;
                first_diff = sub + " exited nonzero";
            }
        }
        for (const auto& entry : fs::directory_iterator(d1)) {
            const fs::path other = d2 / entry.path().filename();
            if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
                all_ok = false;
                if (first_diff.empty()) {
                    first_diff = sub + ": " + entry.path().filename().string();
                }
            }
        }
    }
    std::ostringstream d;
    d << "8 subcommands, two runs each";
    if (!first_diff.empty()) {
        d << "; first difference: " << first_diff;
    }
    report(13, all_ok, d.str());
}

} // namespace

int main() {
    DiskRun disk_coarse;
    criterion_tree_delta();
    criterion_four_cycle();
    criterions_disk(&disk_coarse);
    criterion_fundamental(disk_coarse);
    criterion_pants_tree_bound();
    criterion_ode();
    criterion_collars();
    criterion_genus0_dstar();
    criterion_quasihyperbolic();
    criterion_density();
    criterion_length_ratio();
    criterion_eps0();
    criterion_determinism();
    std::printf("%s: %d of 13 criteria failed\n", g_failures == 0 ? "OK" : "NOT OK",
                g_failures);
    return g_failures;
}
