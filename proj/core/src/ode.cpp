#include "gromet/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gromet {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ScalarProfile::ScalarProfile(std::vector<double> g, std::vector<double> v, ProfileKind k)
    : grid(std::move(g)), values(std::move(v)), kind(k) {
    validate();
}

void ScalarProfile::validate() const {
    if (grid.empty()) {
        throw std::invalid_argument("profile grid is empty");
    }
    if (grid.size() != values.size()) {
        throw std::invalid_argument("profile grid and values differ in length");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("profile grid must be strictly increasing");
        }
    }
    if (kind == ProfileKind::area) {
        double peak = 0.0;
        for (double v : values) {
            peak = std::max(peak, std::abs(v));
        }
        const double tol = 1e-9 * (1.0 + peak);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] < -tol) {
                throw std::invalid_argument("area profile must be non-negative");
            }
            if (i > 0 && values[i] < values[i - 1] - tol) {
                throw std::invalid_argument("area profile must be non-decreasing");
            }
        }
    }
}

OdeSolution solve_linear_ode_with_derivative(double k, double r_start, double u0,
                                             double u0_prime, const ScalarProfile& f) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("k must be positive");
    }
    f.validate();
    const double scale = std::max(1.0, std::abs(r_start));
    if (std::abs(f.grid.front() - r_start) > 1e-12 * scale) {
        throw std::invalid_argument("r_start must coincide with the first gridpoint of f");
    }

    const std::size_t n = f.size();
    std::vector<double> u(n), up(n);
    u[0] = u0;
    up[0] = u0_prime;
    const double k2 = k * k;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double dr = f.grid[i + 1] - f.grid[i];
        const double slope = (f.values[i + 1] - f.values[i]) / dr;
        // Exact solution over the panel for the affine interpolant of f:
        //   u = A cosh(k s) + B sinh(k s) - (f_i + slope s) / k^2,  s = r - r_i.
        const double A = u[i] + f.values[i] / k2;
        const double B = (up[i] + slope / k2) / k;
        const double ch = std::cosh(k * dr);
        const double sh = std::sinh(k * dr);
        u[i + 1] = A * ch + B * sh - f.values[i + 1] / k2;
        up[i + 1] = k * (A * sh + B * ch) - slope / k2;
    }
    OdeSolution out;
    out.u = ScalarProfile(f.grid, std::move(u), ProfileKind::generic);
    out.u_prime = ScalarProfile(f.grid, std::move(up), ProfileKind::generic);
    return out;
}

ScalarProfile solve_linear_ode(double k, double r_start, double u0, double u0_prime,
                               const ScalarProfile& f) {
    return solve_linear_ode_with_derivative(k, r_start, u0, u0_prime, f).u;
}

namespace {

void require_shared_grid(const ScalarProfile& a, const ScalarProfile& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("profiles must share a grid");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double scale = std::max(1.0, std::abs(a.grid[i]));
        if (std::abs(a.grid[i] - b.grid[i]) > 1e-12 * scale) {
            throw std::invalid_argument("profiles must share a grid");
        }
    }
}

} // namespace

ComparisonCheck check_comparison(const ScalarProfile& u, const ScalarProfile& u_bar,
                                 double k, double tol) {
    u.validate();
    u_bar.validate();
    require_shared_grid(u, u_bar);
    const std::size_t n = u.size();
    if (n < 3) {
        throw std::invalid_argument("comparison check needs at least 3 gridpoints");
    }

    ComparisonCheck out;
    out.value_margin.resize(n);
    out.slope_margin.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        out.value_margin[i] = u_bar.values[i] - u.values[i];
    }
    auto deriv = [&](const ScalarProfile& p, std::size_t i) {
        if (i == 0) {
            return (p.values[1] - p.values[0]) / (p.grid[1] - p.grid[0]);
        }
        if (i + 1 == n) {
            return (p.values[n - 1] - p.values[n - 2]) / (p.grid[n - 1] - p.grid[n - 2]);
        }
        return (p.values[i + 1] - p.values[i - 1]) / (p.grid[i + 1] - p.grid[i - 1]);
    };
    for (std::size_t i = 0; i < n; ++i) {
        const double su = deriv(u, i) - k * u.values[i];
        const double sb = deriv(u_bar, i) - k * u_bar.values[i];
        out.slope_margin[i] = sb - su;
    }

    out.min_value_margin = *std::min_element(out.value_margin.begin(), out.value_margin.end());
    // Endpoint derivatives are one-sided; they are reported but do not decide.
    out.min_slope_margin = *std::min_element(out.slope_margin.begin() + 1,
                                             out.slope_margin.end() - 1);
    out.pass = out.min_value_margin >= -tol && out.min_slope_margin >= -tol;
    return out;
}

FundamentalCheck check_fundamental_inequality(const ScalarProfile& a,
                                              const ScalarProfile& chi, double k,
                                              double tol) {
    if (a.size() < 3) {
        throw std::invalid_argument("fundamental inequality check needs at least 3 gridpoints");
    }
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("k must be positive");
    }
    a.validate();
    chi.validate();
    require_shared_grid(a, chi);
    const std::size_t n = a.size();

    std::vector<bool> skip(n, false);
    skip[0] = true;
    skip[n - 1] = true;
    // Second differences across a topology-change radius are meaningless:
    // exclude two gridpoints on each side of every jump of chi.
    for (std::size_t i = 1; i < n; ++i) {
        if (chi.values[i] != chi.values[i - 1]) {
            const std::size_t lo = i >= 2 ? i - 2 : 0;
            const std::size_t hi = std::min(n - 1, i + 1);
            for (std::size_t j = lo; j <= hi; ++j) {
                skip[j] = true;
            }
        }
    }

    FundamentalCheck out;
    out.max_violation = -std::numeric_limits<double>::infinity();
    const double k2 = k * k;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (skip[i]) {
            continue;
        }
        const double dl = a.grid[i] - a.grid[i - 1];
        const double dr = a.grid[i + 1] - a.grid[i];
        double second;
        if (std::abs(dl - dr) <= 1e-9 * dr) {
            // cosh-compensated stencil, exact on the cosh/sinh/constant family
            const double sh = std::sinh(k * dr / 2.0);
            second = k2 * (a.values[i + 1] - 2.0 * a.values[i] + a.values[i - 1]) /
                     (4.0 * sh * sh);
        } else {
            second = 2.0 * (dl * a.values[i + 1] - (dl + dr) * a.values[i] + dr * a.values[i - 1]) /
                     (dl * dr * (dl + dr));
        }
        const double violation = second - k2 * a.values[i] - 2.0 * kPi * chi.values[i];
        ++out.points_checked;
        if (violation > out.max_violation) {
            out.max_violation = violation;
            out.worst_index = i;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (skip[i]) {
            out.skipped.push_back(i);
        }
    }
    if (out.points_checked == 0) {
        throw std::invalid_argument("no gridpoints left after jump exclusion");
    }
    out.pass = out.max_violation <= tol;
    return out;
}

double quadratic_fit_noise(const ScalarProfile& p) {
    p.validate();
    const std::size_t n = p.size();
    if (n < 5) {
        return 0.0;
    }
    // The centered fourth difference annihilates cubics; for uniform grids it
    // is proportional to the local residual against a quadratic fit.
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double d4 = p.values[i - 2] - 4.0 * p.values[i - 1] + 6.0 * p.values[i] -
                          4.0 * p.values[i + 1] + p.values[i + 2];
        worst = std::max(worst, std::abs(d4) / 6.0);
    }
    return worst;
}

double fundamental_error_estimate(const ScalarProfile& a, double k) {
    a.validate();
    const std::size_t n = a.size();
    if (n < 2) {
        return 1e-9;
    }
    double dmin = std::numeric_limits<double>::infinity();
    double peak = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        dmin = std::min(dmin, a.grid[i] - a.grid[i - 1]);
    }
    for (double v : a.values) {
        peak = std::max(peak, std::abs(v));
    }
    const double noise = quadratic_fit_noise(a);
    return 4.0 * noise / (dmin * dmin) + k * k * noise + 1e-9 * (1.0 + peak);
}

} // namespace gromet
