#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "gromet/ode.hpp"
#include "gromet/synthetic.hpp"
#include "support/oracles.hpp"

using namespace gromet;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> grid(double a, double b, int n) {
    std::vector<double> g(n + 1);
    for (int i = 0; i <= n; ++i) {
        g[i] = a + (b - a) * i / n;
    }
    return g;
}

ScalarProfile sample(const std::vector<double>& g, const std::function<double(double)>& f,
                     ProfileKind kind = ProfileKind::generic) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        v[i] = f(g[i]);
    }
    return ScalarProfile(g, v, kind);
}

} // namespace

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(ScalarProfile({1.0, 1.0}, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ScalarProfile({1.0, 0.5}, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ScalarProfile({0.0, 1.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ScalarProfile({0.0, 1.0}, {1.0, 0.5}, ProfileKind::area),
                    std::invalid_argument);
    CHECK_THROWS_AS(ScalarProfile({0.0, 1.0}, {-1.0, 0.5}, ProfileKind::area),
                    std::invalid_argument);
}

TEST_CASE("homogeneous solution is exponential") {
    const auto g = grid(0.5, 3.0, 500);
    const double k = 1.3;
    const auto f = sample(g, [](double) { return 0.0; });
    const auto u = solve_linear_ode(k, 0.5, 1.0, k, f);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(u.values[i] == doctest::Approx(std::exp(k * (g[i] - 0.5))).epsilon(1e-11));
    }
}

TEST_CASE("constant forcing reproduces the cosh/sinh closed form") {
    // u = (a0 + 2 pi chi0 / k^2) cosh(k (r - r0)) + (l0 / k) sinh(k (r - r0))
    //     - 2 pi chi0 / k^2, for f = 2 pi chi0
    const double k = 1.0, r0 = 0.0, a0 = 0.7, l0 = 2.2, chi0 = 1.0;
    const auto g = grid(r0, r0 + 1.0, 1000); // step 1e-3
    const auto f = sample(g, [&](double) { return 2.0 * kPi * chi0; });
    const auto u = solve_linear_ode(k, r0, a0, l0, f);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double s = g[i] - r0;
        const double want = (a0 + 2.0 * kPi * chi0 / (k * k)) * std::cosh(k * s) +
                            (l0 / k) * std::sinh(k * s) - 2.0 * kPi * chi0 / (k * k);
        worst = std::max(worst, std::abs(u.values[i] - want));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("randomized forcing agrees with the RK4 oracle") {
    const double k = 1.0;
    double worst_coarse = 0.0, worst_fine = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const double a1 = 2.0 * uniform01(23, 4 * trial) - 1.0;
        const double a2 = 2.0 * uniform01(23, 4 * trial + 1) - 1.0;
        const double p1 = 2.0 * kPi * uniform01(23, 4 * trial + 2);
        const double u0 = uniform01(23, 4 * trial + 3);
        auto f = [&](double r) { return a1 * std::sin(r + p1) + a2 * std::cos(2.0 * r); };

        for (int halve = 0; halve < 2; ++halve) {
            const int steps = halve ? 4000 : 2000; // dr = 5e-4 resp. 1e-3
            const double dr = 2.0 / steps;
            const auto g = grid(0.0, 2.0, steps);
            const auto fp = sample(g, f);
            const auto u = solve_linear_ode(k, 0.0, u0, 0.3, fp);
            const auto oracle = oracles::rk4_linear_ode(k, 0.0, u0, 0.3, f, dr, steps);
            double worst = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                worst = std::max(worst, std::abs(u.values[i] - oracle[i]));
            }
            (halve ? worst_fine : worst_coarse) = std::max(
                halve ? worst_fine : worst_coarse, worst);
        }
    }
    CHECK(worst_coarse <= 1e-6);
    // second-order convergence: halving the step reduces the error
    CHECK(worst_coarse / worst_fine >= 3.5);
}

TEST_CASE("comparison conclusions hold for ordered forcings") {
    const auto g = grid(0.0, 2.0, 400);
    for (int trial = 0; trial < 100; ++trial) {
        const double k = 0.4 + 2.0 * uniform01(29, 5 * trial);
        const double amp = uniform01(29, 5 * trial + 1);
        const double ph = 2.0 * kPi * uniform01(29, 5 * trial + 2);
        const double gap = 0.5 * uniform01(29, 5 * trial + 3);
        const double u0 = uniform01(29, 5 * trial + 4);
        const auto f = sample(g, [&](double r) { return amp * std::sin(3.0 * r + ph); });
        const auto fbar = sample(g, [&](double r) {
            return amp * std::sin(3.0 * r + ph) + gap * (1.0 + std::cos(r));
        });
        const auto u = solve_linear_ode_with_derivative(k, 0.0, u0, 0.2, f);
        const auto ubar = solve_linear_ode_with_derivative(k, 0.0, u0, 0.2, fbar);
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(u.u.values[i] <= ubar.u.values[i] + 1e-9);
            const double su = u.u_prime.values[i] - k * u.u.values[i];
            const double sb = ubar.u_prime.values[i] - k * ubar.u.values[i];
            CHECK(su <= sb + 1e-9);
        }
    }
}

TEST_CASE("check_comparison flags and margins") {
    const auto g = grid(0.0, 1.5, 300);
    const double k = 1.0;
    const auto f0 = sample(g, [](double) { return 0.0; });
    const auto f1 = sample(g, [](double) { return 1.0; });
    const auto u = solve_linear_ode(k, 0.0, 1.0, 0.5, f0);
    SUBCASE("identical inputs pass with zero margins") {
        const auto rep = check_comparison(u, u, k, 1e-12);
        CHECK(rep.pass);
        CHECK(rep.min_value_margin == 0.0);
        CHECK(rep.min_slope_margin == 0.0);
    }
    SUBCASE("larger forcing dominates strictly") {
        const auto ubar = solve_linear_ode(k, 0.0, 1.0, 0.5, f1);
        const auto rep = check_comparison(u, ubar, k, 1e-12);
        CHECK(rep.pass);
        for (std::size_t i = 1; i < g.size(); ++i) {
            CHECK(rep.value_margin[i] > 0.0);
        }
    }
    SUBCASE("forced violation is flagged") {
        auto ubar = solve_linear_ode(k, 0.0, 1.0, 0.5, f1);
        for (double& v : ubar.values) {
            v *= 0.5;
        }
        const auto rep = check_comparison(u, ubar, k, 1e-9);
        CHECK_FALSE(rep.pass);
    }
    SUBCASE("mismatched grids rejected") {
        const auto g2 = grid(0.0, 1.5, 200);
        const auto other = sample(g2, [](double) { return 1.0; });
        CHECK_THROWS_AS(check_comparison(u, other, k, 1e-9), std::invalid_argument);
    }
}

TEST_CASE("fundamental inequality check") {
    SUBCASE("exact model profile passes at 1e-9") {
        const auto g = grid(0.05, 3.0, 59); // step 0.05
        const auto a = sample(g, [](double r) { return 2.0 * kPi * (std::cosh(r) - 1.0); },
                              ProfileKind::area);
        const auto chi = sample(g, [](double) { return 1.0; }, ProfileKind::euler_char);
        const auto rep = check_fundamental_inequality(a, chi, 1.0, 1e-9);
        CHECK(rep.pass);
        CHECK(std::abs(rep.max_violation) <= 1e-9);
    }
    SUBCASE("flat disk profile passes") {
        const auto g = grid(0.05, 2.0, 100);
        const auto a = sample(g, [](double r) { return kPi * r * r; }, ProfileKind::area);
        const auto chi = sample(g, [](double) { return 1.0; }, ProfileKind::euler_char);
        CHECK(check_fundamental_inequality(a, chi, 1.0, 1e-9).pass);
    }
    SUBCASE("exponential growth with chi = 0 fails") {
        const auto g = grid(0.05, 2.0, 100);
        const auto a = sample(g, [](double r) { return std::exp(2.0 * r); },
                              ProfileKind::generic);
        const auto chi = sample(g, [](double) { return 0.0; }, ProfileKind::euler_char);
        const auto rep = check_fundamental_inequality(a, chi, 1.0, 1e-6);
        CHECK_FALSE(rep.pass);
        CHECK(rep.max_violation > 1.0);
    }
    SUBCASE("points near chi jumps are skipped") {
        const auto g = grid(0.0, 1.0, 20);
        std::vector<double> av(g.size(), 1.0), cv(g.size(), 1.0);
        for (std::size_t i = 10; i < g.size(); ++i) {
            cv[i] = 0.0;
        }
        const ScalarProfile a(g, av, ProfileKind::generic);
        const ScalarProfile chi(g, cv, ProfileKind::euler_char);
        const auto rep = check_fundamental_inequality(a, chi, 1.0, 10.0);
        for (std::size_t j = 8; j <= 11; ++j) {
            CHECK(std::find(rep.skipped.begin(), rep.skipped.end(), j) != rep.skipped.end());
        }
    }
    SUBCASE("short grids rejected") {
        const ScalarProfile a({0.0, 1.0}, {0.0, 1.0});
        const ScalarProfile chi({0.0, 1.0}, {1.0, 1.0});
        CHECK_THROWS_AS(check_fundamental_inequality(a, chi, 1.0, 1e-9),
                        std::invalid_argument);
    }
}
