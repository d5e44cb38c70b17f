#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gromet/builders.hpp"
#include "gromet/distance.hpp"
#include "gromet/gauss_bonnet.hpp"
#include "gromet/trimesh.hpp"
#include "support/oracles.hpp"

using namespace gromet;

namespace {

constexpr double kPi = 3.14159265358979323846;

TriMesh octahedron() {
    TriMesh::Input in;
    in.vertex_count = 6;
    in.triangles = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                    {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
    for (const auto& t : in.triangles) {
        for (int i = 0; i < 3; ++i) {
            const int u = t[i], v = t[(i + 1) % 3];
            in.edge_lengths.emplace_back(u, v, 1.0);
        }
    }
    // dedupe
    std::sort(in.edge_lengths.begin(), in.edge_lengths.end(),
              [](const auto& a, const auto& b) {
                  return std::minmax(std::get<0>(a), std::get<1>(a)) <
                         std::minmax(std::get<0>(b), std::get<1>(b));
              });
    in.edge_lengths.erase(
        std::unique(in.edge_lengths.begin(), in.edge_lengths.end(),
                    [](const auto& a, const auto& b) {
                        return std::minmax(std::get<0>(a), std::get<1>(a)) ==
                               std::minmax(std::get<0>(b), std::get<1>(b));
                    }),
        in.edge_lengths.end());
    return TriMesh::build(std::move(in));
}

// n x n flat grid of unit squares split along one diagonal
TriMesh flat_grid(int n) {
    TriMesh::Input in;
    in.vertex_count = static_cast<std::size_t>(n) * n;
    auto id = [n](int i, int j) { return i * n + j; };
    const double diag = std::sqrt(2.0);
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) {
            in.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            in.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i + 1 < n) {
                in.edge_lengths.emplace_back(id(i, j), id(i + 1, j), 1.0);
            }
            if (j + 1 < n) {
                in.edge_lengths.emplace_back(id(i, j), id(i, j + 1), 1.0);
            }
            if (i + 1 < n && j + 1 < n) {
                in.edge_lengths.emplace_back(id(i, j), id(i + 1, j + 1), diag);
            }
        }
    }
    return TriMesh::build(std::move(in));
}

} // namespace

TEST_CASE("octahedron validates and carries total defect 4 pi") {
    const TriMesh m = octahedron();
    CHECK(m.vertex_count() == 6);
    CHECK(m.edges().size() == 12);
    CHECK(m.boundary_loops().empty());
    double defect = 0.0;
    for (int v = 0; v < 6; ++v) {
        CHECK_FALSE(m.is_boundary_vertex(v));
        defect += m.angle_defect(v);
    }
    CHECK(defect == doctest::Approx(4.0 * kPi).epsilon(1e-12));

    std::vector<int> all(m.triangles().size());
    for (std::size_t t = 0; t < all.size(); ++t) {
        all[t] = static_cast<int>(t);
    }
    const auto gb = discrete_gauss_bonnet(m, all);
    CHECK(gb.chi == 2);
    CHECK(std::abs(gb.residual) <= 1e-9);
}

TEST_CASE("mesh validation rejects bad complexes") {
    SUBCASE("triangle inequality") {
        TriMesh::Input in;
        in.vertex_count = 3;
        in.triangles = {{0, 1, 2}};
        in.edge_lengths = {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}};
        CHECK_THROWS_AS(TriMesh::build(std::move(in)), std::invalid_argument);
    }
    SUBCASE("missing edge length") {
        TriMesh::Input in;
        in.vertex_count = 3;
        in.triangles = {{0, 1, 2}};
        in.edge_lengths = {{0, 1, 1.0}, {1, 2, 1.0}};
        CHECK_THROWS_AS(TriMesh::build(std::move(in)), std::invalid_argument);
    }
    SUBCASE("disconnected") {
        TriMesh::Input in;
        in.vertex_count = 6;
        in.triangles = {{0, 1, 2}, {3, 4, 5}};
        in.edge_lengths = {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                           {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}};
        CHECK_THROWS_WITH_AS(TriMesh::build(std::move(in)),
                             doctest::Contains("disconnected"), std::invalid_argument);
    }
    SUBCASE("pinched vertex") {
        TriMesh::Input in;
        in.vertex_count = 5;
        in.triangles = {{0, 1, 2}, {0, 3, 4}};
        in.edge_lengths = {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                           {0, 3, 1.0}, {3, 4, 1.0}, {0, 4, 1.0}};
        CHECK_THROWS_WITH_AS(TriMesh::build(std::move(in)), doctest::Contains("pinched"),
                             std::invalid_argument);
    }
    SUBCASE("non-orientable strip") {
        // minimal Moebius triangulation
        TriMesh::Input in;
        in.vertex_count = 5;
        in.triangles = {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}};
        auto add = [&](int u, int v) { in.edge_lengths.emplace_back(u, v, 1.0); };
        add(0, 1);
        add(1, 2);
        add(2, 3);
        add(3, 4);
        add(4, 0);
        add(0, 2);
        add(1, 3);
        add(2, 4);
        add(3, 0);
        add(4, 1);
        CHECK_THROWS_WITH_AS(TriMesh::build(std::move(in)),
                             doctest::Contains("orientable"), std::invalid_argument);
    }
    SUBCASE("overfull edge") {
        TriMesh::Input in;
        in.vertex_count = 5;
        in.triangles = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}};
        in.edge_lengths = {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {1, 3, 1.0},
                           {0, 3, 1.0}, {1, 4, 1.0}, {0, 4, 1.0}};
        CHECK_THROWS_WITH_AS(TriMesh::build(std::move(in)),
                             doctest::Contains("more than two"), std::invalid_argument);
    }
}

TEST_CASE("distance fields") {
    const TriMesh grid = flat_grid(21);
    const DistanceField f = distance_field(grid, 0);
    CHECK(f.dist[0] == 0.0);
    SUBCASE("corner to corner within 9 percent of the Euclidean diagonal") {
        const double d = f.dist[21 * 21 - 1];
        const double euclid = 20.0 * std::sqrt(2.0);
        CHECK(d >= euclid - 1e-9);
        CHECK(d <= euclid * 1.09);
    }
    SUBCASE("agrees with a naive Dijkstra oracle") {
        const auto naive = oracles::naive_dijkstra(grid, 0);
        for (std::size_t v = 0; v < grid.vertex_count(); ++v) {
            CHECK(f.dist[v] == doctest::Approx(naive[v]).epsilon(1e-12));
        }
    }
    SUBCASE("edge-Lipschitz invariant") {
        for (std::size_t e = 0; e < grid.edges().size(); ++e) {
            const auto [u, v] = grid.edges()[e];
            CHECK(std::abs(f.dist[u] - f.dist[v]) <= grid.edge_lengths()[e] + 1e-12);
        }
    }
}

TEST_CASE("subsurface distances") {
    BuildSpec spec;
    spec.kind = SurfaceKind::flat_cylinder;
    spec.circumference = 2.0;
    spec.height = 4.0;
    spec.resolution = 0.1;
    const TriMesh cyl = build(spec);
    const DistanceField f = distance_field(cyl, 0);

    SUBCASE("allowed = everything matches the distance field") {
        std::vector<char> all(cyl.vertex_count(), 1);
        for (int v : {5, 100, 500}) {
            const auto d = subsurface_distance(cyl, all, 0, v);
            REQUIRE(d.has_value());
            CHECK(*d == doctest::Approx(f.dist[v]).epsilon(1e-12));
        }
    }
    SUBCASE("removing a full ring disconnects the tube") {
        // forbid a band of heights around the middle
        const auto dist0 = multi_source_distance(cyl, cyl.label("boundary0"));
        std::vector<char> allowed(cyl.vertex_count(), 1);
        for (std::size_t v = 0; v < cyl.vertex_count(); ++v) {
            if (dist0[v] > 1.9 && dist0[v] < 2.1) {
                allowed[v] = 0;
            }
        }
        const int bottom = cyl.label("boundary0")[0];
        const int top = cyl.label("boundary1")[0];
        REQUIRE(allowed[bottom]);
        REQUIRE(allowed[top]);
        CHECK_FALSE(subsurface_distance(cyl, allowed, bottom, top).has_value());
    }
    SUBCASE("intrinsic dominates extrinsic on an annular region") {
        const auto dist0 = multi_source_distance(cyl, cyl.label("boundary0"));
        std::vector<char> annulus(cyl.vertex_count(), 0);
        std::vector<int> members;
        for (std::size_t v = 0; v < cyl.vertex_count(); ++v) {
            if (dist0[v] > 0.9 && dist0[v] < 3.1) {
                annulus[v] = 1;
                members.push_back(static_cast<int>(v));
            }
        }
        for (int i = 0; i < 50; ++i) {
            const int u = members[(i * 37) % members.size()];
            const int v = members[(i * 101 + 13) % members.size()];
            const DistanceField fu = distance_field(cyl, u);
            const auto intrinsic = subsurface_distance(cyl, annulus, u, v);
            REQUIRE(intrinsic.has_value());
            CHECK(*intrinsic >= fu.dist[v] - 1e-12);
        }
    }
    SUBCASE("endpoints outside the allowed set are rejected") {
        std::vector<char> allowed(cyl.vertex_count(), 1);
        allowed[0] = 0;
        CHECK_THROWS_AS(subsurface_distance(cyl, allowed, 0, 5), std::invalid_argument);
    }
}

TEST_CASE("discrete Gauss-Bonnet on regions") {
    SUBCASE("flat square region has turning 2 pi") {
        const TriMesh grid = flat_grid(12);
        std::vector<int> region;
        for (std::size_t t = 0; t < grid.triangles().size(); ++t) {
            bool inside = true;
            for (int v : grid.triangles()[t]) {
                const int i = v / 12, j = v % 12;
                inside = inside && i >= 3 && i <= 8 && j >= 3 && j <= 8;
            }
            if (inside) {
                region.push_back(static_cast<int>(t));
            }
        }
        const auto gb = discrete_gauss_bonnet(grid, region);
        CHECK(gb.chi == 1);
        CHECK(gb.curvature_term == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(gb.turning_term == doctest::Approx(2.0 * kPi).epsilon(1e-9));
        CHECK(std::abs(gb.residual) <= 1e-9);
    }
    SUBCASE("hyperbolic region curvature matches minus the area") {
        BuildSpec spec;
        spec.kind = SurfaceKind::hyperbolic_disk;
        spec.radius = 2.6;
        spec.resolution = 0.06;
        const TriMesh disk = build(spec);
        const DistanceField f = distance_field(disk, disk.label("basepoint")[0]);
        // triangles touching the radius-2 ball; the one-ring rim of the
        // region accounts for the few-percent slack below
        std::vector<int> region;
        double region_area = 0.0;
        for (std::size_t t = 0; t < disk.triangles().size(); ++t) {
            bool touches = false;
            for (int v : disk.triangles()[t]) {
                touches = touches || f.dist[v] <= 2.0;
            }
            if (touches) {
                region.push_back(static_cast<int>(t));
                region_area += disk.triangle_areas()[t];
            }
        }
        const auto gb = discrete_gauss_bonnet(disk, region);
        CHECK(std::abs(gb.residual) <= 1e-9);
        CHECK(gb.curvature_term == doctest::Approx(-region_area).epsilon(0.07));
        CHECK(gb.curvature_term ==
              doctest::Approx(-2.0 * kPi * (std::cosh(2.0) - 1.0)).epsilon(0.05));
    }
    SUBCASE("pinched regions are rejected") {
        const TriMesh grid = flat_grid(8);
        // two triangles meeting only at vertex id(1,1): triangle at (0,0) and (1,1)
        const auto& tris = grid.triangles();
        int t1 = -1, t2 = -1;
        auto id = [](int i, int j) { return i * 8 + j; };
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const auto& tr = tris[t];
            const bool has = [&](int v) {
                return tr[0] == v || tr[1] == v || tr[2] == v;
            }(id(1, 1));
            if (!has) {
                continue;
            }
            const bool low = tr[0] <= id(1, 1) && tr[1] <= id(1, 1) && tr[2] <= id(1, 1);
            if (low && t1 < 0) {
                t1 = static_cast<int>(t);
            }
            const bool high = tr[0] >= id(1, 1) && tr[1] >= id(1, 1) && tr[2] >= id(1, 1);
            if (high && t2 < 0) {
                t2 = static_cast<int>(t);
            }
        }
        REQUIRE(t1 >= 0);
        REQUIRE(t2 >= 0);
        CHECK_THROWS_WITH_AS(discrete_gauss_bonnet(grid, {t1, t2}),
                             doctest::Contains("pinched"), std::invalid_argument);
    }
    SUBCASE("duplicates rejected") {
        const TriMesh grid = flat_grid(4);
        CHECK_THROWS_AS(discrete_gauss_bonnet(grid, {0, 0}), std::invalid_argument);
    }
}

TEST_CASE("label handling and triangle removal") {
    BuildSpec spec;
    spec.kind = SurfaceKind::flat_cylinder;
    spec.circumference = 1.0;
    spec.height = 1.0;
    spec.resolution = 0.2;
    const TriMesh cyl = build(spec);
    CHECK(cyl.has_label("boundary0"));
    CHECK_THROWS_AS(cyl.label("nope"), std::invalid_argument);

    // drop one interior triangle (its corners keep single fans)
    std::vector<char> remove(cyl.triangles().size(), 0);
    for (std::size_t t = 0; t < cyl.triangles().size(); ++t) {
        bool interior = true;
        for (int v : cyl.triangles()[t]) {
            interior = interior && !cyl.is_boundary_vertex(v);
        }
        if (interior) {
            remove[t] = 1;
            break;
        }
    }
    const TriMesh cut = cyl.remove_triangles(remove);
    CHECK(cut.triangles().size() == cyl.triangles().size() - 1);
    CHECK(cut.has_label("boundary0"));
}
