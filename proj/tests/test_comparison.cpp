#include <doctest.h>

#include <cmath>
#include <complex>

#include "gromet/comparison.hpp"
#include "gromet/synthetic.hpp"

using namespace gromet;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("boundary length of model balls") {
    CHECK(comparison_boundary_length(1.0, 0.0) == 0.0);
    CHECK(comparison_boundary_length(1.0, 1.0) ==
          doctest::Approx(2.0 * kPi * std::sinh(1.0)).epsilon(1e-12));
    CHECK(comparison_boundary_length(1.0, 1.0) == doctest::Approx(7.3842).epsilon(1e-4));
    // Euclidean limit
    const double r = 1e-6;
    CHECK(comparison_boundary_length(1.0, r) / (2.0 * kPi * r) ==
          doctest::Approx(1.0).epsilon(1e-9));
    // strictly increasing
    double prev = 0.0;
    for (int i = 1; i <= 40; ++i) {
        const double v = comparison_boundary_length(0.7, 0.1 * i);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(comparison_boundary_length(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(comparison_boundary_length(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(comparison_boundary_length(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("model ball area and its derivative") {
    CHECK(comparison_area(1.0, 0.0) == 0.0);
    CHECK(comparison_area(1.0, 1.0) == doctest::Approx(3.4123).epsilon(1e-4));
    // derivative matches the boundary length at (1, 1)
    const double h = 1e-5;
    const double fd = (comparison_area(1.0, 1.0 + h) - comparison_area(1.0, 1.0 - h)) / (2 * h);
    CHECK(fd == doctest::Approx(comparison_boundary_length(1.0, 1.0)).epsilon(1e-6));
    // and at 100 random (k, r)
    for (int i = 0; i < 100; ++i) {
        const double k = 0.2 + 2.8 * uniform01(7, 2 * i);
        const double r = 0.1 + 2.4 * uniform01(7, 2 * i + 1);
        const double d = (comparison_area(k, r + h) - comparison_area(k, r - h)) / (2 * h);
        CHECK(d == doctest::Approx(comparison_boundary_length(k, r)).epsilon(1e-6));
    }
}

TEST_CASE("topology bound") {
    ComparisonParams p{1.0, 1.0, 1.0};
    SUBCASE("equality case cancels") {
        const double bound = topology_bound(p, comparison_boundary_length(1.0, 2.0));
        CHECK(std::abs(bound) <= 1e-13);
    }
    SUBCASE("crude bound at zero boundary length") {
        CHECK(topology_bound(p, 0.0) ==
              doctest::Approx(std::sinh(2.0) / std::sinh(1.0)).epsilon(1e-12));
        CHECK(topology_bound(p, 0.0) == doctest::Approx(3.0862).epsilon(1e-4));
    }
    SUBCASE("strictly decreasing in the boundary length") {
        double prev = topology_bound(p, 0.0);
        for (int i = 1; i <= 20; ++i) {
            const double v = topology_bound(p, 0.5 * i);
            CHECK(v < prev);
            prev = v;
        }
    }
    SUBCASE("vanishes for all parameters at the model boundary length") {
        for (int i = 0; i < 50; ++i) {
            ComparisonParams q;
            q.k = 0.2 + 3.0 * uniform01(11, 3 * i);
            q.c = 0.1 + 2.0 * uniform01(11, 3 * i + 1);
            q.r0 = 0.1 + 2.0 * uniform01(11, 3 * i + 2);
            const double ell = comparison_boundary_length(q.k, q.r0 + q.c / q.k);
            CHECK(std::abs(topology_bound(q, ell)) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(topology_bound(p, -1.0), std::invalid_argument);
}

TEST_CASE("collar width") {
    CHECK(collar_width(2.0) == doctest::Approx(std::acosh(1.0 / std::tanh(1.0))).epsilon(1e-12));
    CHECK(collar_width(2.0) == doctest::Approx(0.77193).epsilon(1e-4));
    CHECK(collar_width(50.0) < 1e-10); // wide curves have no collar
    CHECK(collar_width(0.1) > collar_width(1.0));
    // cosh(w) tanh(L/2) = 1
    for (int i = 1; i <= 30; ++i) {
        const double L = 0.05 + 0.3 * i;
        CHECK(std::cosh(collar_width(L)) * std::tanh(L / 2.0) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(collar_width(0.0), std::invalid_argument);
    CHECK_THROWS_AS(collar_width(-1.0), std::invalid_argument);
}

TEST_CASE("disk distance") {
    using C = std::complex<double>;
    CHECK(disk_distance(C(0, 0), C(0, 0)) == 0.0);
    CHECK(disk_distance(C(0, 0), C(0.5, 0)) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(disk_distance(C(0, 0), C(0.5, 0)) ==
          doctest::Approx(disk_distance(C(0, 0), C(0, 0.5))).epsilon(1e-12));
    CHECK(disk_distance(C(0.3, 0.2), C(0.3, 0.2)) == 0.0);
    // symmetric
    CHECK(disk_distance(C(0.1, -0.4), C(-0.2, 0.6)) ==
          doctest::Approx(disk_distance(C(-0.2, 0.6), C(0.1, -0.4))).epsilon(1e-12));
    // triangle inequality on 1000 random triples
    auto pt = [](int i, int j) {
        const double a = 0.95 * std::sqrt(uniform01(13, 2 * (i * 3 + j)));
        const double t = 2 * kPi * uniform01(13, 2 * (i * 3 + j) + 1);
        return C(a * std::cos(t), a * std::sin(t));
    };
    for (int i = 0; i < 1000; ++i) {
        const C a = pt(i, 0), b = pt(i, 1), c = pt(i, 2);
        CHECK(disk_distance(a, c) <=
              disk_distance(a, b) + disk_distance(b, c) + 1e-12);
    }
    CHECK_THROWS_AS(disk_distance(C(1.0, 0), C(0, 0)), std::domain_error);
    CHECK_THROWS_AS(disk_distance(C(0, 0), C(0, 1.2)), std::domain_error);
}

TEST_CASE("round annulus modulus") {
    CHECK(round_annulus_modulus(std::exp(2.0 * kPi)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(round_annulus_modulus(1.0 + 1e-12) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(std::isinf(round_annulus_modulus(std::numeric_limits<double>::infinity())));
    CHECK_THROWS_AS(round_annulus_modulus(1.0), std::domain_error);
    CHECK_THROWS_AS(round_annulus_modulus(0.5), std::domain_error);
}

TEST_CASE("clearance profile and its inverse") {
    CHECK(clearance_profile(1.0, 0.0) == 0.0);
    CHECK(clearance_profile(0.4, 0.0) == 0.0);
    const double c1 = std::cosh(1.0);
    CHECK(clearance_profile(1.0, 1.0) ==
          doctest::Approx(2.0 * std::tanh(0.5) * c1 * c1).epsilon(1e-12));
    CHECK(clearance_profile(1.0, 1.0) == doctest::Approx(2.2007).epsilon(1e-4));
    // monotone increasing
    double prev = 0.0;
    for (int i = 1; i <= 30; ++i) {
        const double v = clearance_profile(0.7, 0.2 * i);
        CHECK(v > prev);
        prev = v;
    }
    // round trip
    for (int i = 0; i < 100; ++i) {
        const double c = 0.1 + 4.9 * uniform01(17, 3 * i);
        const double l = 0.1 + 4.9 * uniform01(17, 3 * i + 1);
        const double k = 0.1 + 4.9 * uniform01(17, 3 * i + 2);
        const double e0 = eps0(c, l, k);
        const double target = c / std::expm1(l / k);
        CHECK(std::abs(clearance_profile(c, e0) - target) <= 1e-10);
    }
    CHECK_THROWS_AS(eps0(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("surface classification") {
    SUBCASE("chi zero requires every loop controlled") {
        SurfaceClassSpec s;
        s.genus = 0;
        s.n_outer = 2;
        s.outer_loop_lengths = {0.5, 100.0};
        s.l = 1.0;
        s.a = 0;
        const auto c = classify_surface(s);
        CHECK(c.chi == 0);
        CHECK_FALSE(c.in_F);
        CHECK_FALSE(c.in_S);
    }
    SUBCASE("one long loop allowed when chi < 0") {
        SurfaceClassSpec s;
        s.genus = 0;
        s.n_outer = 3;
        s.outer_loop_lengths = {0.5, 0.5, 100.0};
        s.l = 1.0;
        s.a = 1;
        const auto c = classify_surface(s);
        CHECK(c.chi == -1);
        CHECK(c.in_F);
        CHECK_FALSE(c.in_S);
    }
    SUBCASE("genus excludes membership") {
        SurfaceClassSpec s;
        s.genus = 1;
        s.n_outer = 2;
        s.outer_loop_lengths = {0.1, 0.1};
        s.l = 1.0;
        s.a = 5;
        CHECK_FALSE(classify_surface(s).in_F);
    }
    SUBCASE("punctures count as zero-length loops") {
        SurfaceClassSpec s;
        s.genus = 0;
        s.n_outer = 3;
        s.outer_loop_lengths = {0.0, 0.0, 0.0};
        s.l = 0.5;
        s.a = 1;
        const auto c = classify_surface(s);
        CHECK(c.in_F);
        CHECK(c.in_S);
    }
    SUBCASE("membership properties on random specs") {
        for (int i = 0; i < 300; ++i) {
            SurfaceClassSpec s;
            s.genus = static_cast<int>(mix64(100 + i) % 2);
            s.n_outer = 2 + static_cast<int>(mix64(200 + i) % 4);
            for (int j = 0; j < s.n_outer; ++j) {
                s.outer_loop_lengths.push_back(3.0 * uniform01(19, i * 8 + j));
            }
            s.l = 0.5 + 2.0 * uniform01(19, i * 8 + 6);
            s.a = static_cast<int>(mix64(300 + i) % 4);
            s.boundary_length = uniform01(19, i * 8 + 7) < 0.5 ? 0.0 : s.l * 0.9;
            const auto c = classify_surface(s);
            if (c.in_S) {
                CHECK(c.in_F);
            }
            if (s.a == 0) {
                CHECK(c.in_F == c.in_S);
            }
        }
    }
    SUBCASE("negative lengths rejected") {
        SurfaceClassSpec s;
        s.genus = 0;
        s.n_outer = 2;
        s.outer_loop_lengths = {-0.1, 0.5};
        CHECK_THROWS_AS(classify_surface(s), std::invalid_argument);
    }
}
