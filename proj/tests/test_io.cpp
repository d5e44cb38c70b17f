#include <doctest.h>

#include <sstream>

#include "gromet/builders.hpp"
#include "gromet/config.hpp"
#include "gromet/mesh_io.hpp"
#include "gromet/synthetic.hpp"

using namespace gromet;

TEST_CASE("config parsing") {
    const std::string text = R"(
# experiment description
[build disk]
kind = hyperbolic_disk
radius = 3.0   # inline comment
hole = 0.3 0.0 0.1
hole = -0.4 0.1 0.08

[scenario main]
type = ball-profile
mesh = disk
k = 1
)";
    const Config cfg = parse_config(text);
    REQUIRE(cfg.blocks.size() == 2);
    const ConfigBlock& b = cfg.require("build", "disk");
    CHECK(b.get("kind") == "hyperbolic_disk");
    CHECK(b.number("radius") == 3.0);
    CHECK(b.all("hole").size() == 2);
    CHECK(b.number_or("missing", 7.0) == 7.0);
    CHECK(cfg.find("build", "nope") == nullptr);
    CHECK_THROWS_WITH_AS(cfg.require("build", "nope"),
                         doctest::Contains("missing config block"),
                         std::invalid_argument);
    CHECK_THROWS_AS(b.number("kind"), std::invalid_argument);

    CHECK_THROWS_AS(parse_config("key = value\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("[unterminated\n"), std::invalid_argument);
}

TEST_CASE("trimesh round trip is byte-identical") {
    BuildSpec spec;
    spec.kind = SurfaceKind::ypiece;
    spec.l1 = 1.0;
    spec.l2 = 0.9;
    spec.l3 = 1.1;
    spec.resolution = 0.15;
    const TriMesh mesh = build(spec);

    std::ostringstream first;
    write_trimesh(mesh, first);
    std::istringstream back(first.str());
    const TriMesh reread = read_trimesh(back);
    std::ostringstream second;
    write_trimesh(reread, second);
    CHECK(first.str() == second.str());
    CHECK(reread.vertex_count() == mesh.vertex_count());
    CHECK(reread.labels().size() == mesh.labels().size());

    std::istringstream bad("not a mesh\n");
    CHECK_THROWS_AS(read_trimesh(bad), std::runtime_error);
}

TEST_CASE("metric CSV round trip") {
    const FiniteMetric m = FiniteMetric::from_graph(random_tree(17, 42));
    std::ostringstream out;
    write_metric_csv(m, out);
    std::istringstream in(out.str());
    const FiniteMetric back = read_metric_csv(in);
    REQUIRE(back.size() == m.size());
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            CHECK(back(i, j) == m(i, j));
        }
    }
    std::istringstream ragged("1.0\n2.0\n");
    CHECK_THROWS_AS(read_metric_csv(ragged), std::runtime_error);
}

TEST_CASE("scalar profile CSV") {
    const gromet::ScalarProfile p({0.5, 1.0, 1.5}, {2.0, 3.0, 5.0});
    std::ostringstream out;
    gromet::write_scalar_profile_csv(p, out);
    CHECK(out.str().rfind("r,value\n0.5,2\n", 0) == 0);
}

TEST_CASE("profile CSV carries the documented header") {
    BallProfile prof;
    prof.radii = {0.5, 1.0};
    prof.boundary_length = {3.0, 6.5};
    prof.area = {0.8, 3.1};
    prof.euler_char = {1, 1};
    prof.n_gen = {0, 0};
    prof.component_count = {1, 1};
    std::ostringstream out;
    write_profile_csv(prof, out);
    CHECK(out.str().rfind("r,ell,area,chi,n,components\n", 0) == 0);
}
