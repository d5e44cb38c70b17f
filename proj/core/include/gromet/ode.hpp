#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gromet {

enum class ProfileKind { generic, area, boundary_length, euler_char };

/// A sampled scalar function of the radius on a strictly increasing grid.
struct ScalarProfile {
    std::vector<double> grid;
    std::vector<double> values;
    ProfileKind kind = ProfileKind::generic;

    ScalarProfile() = default;
    ScalarProfile(std::vector<double> g, std::vector<double> v,
                  ProfileKind k = ProfileKind::generic);

    std::size_t size() const { return grid.size(); }
    void validate() const;
};

/// Solves u'' - k^2 u = f on f's grid with u(r_start) = u0 and
/// u'(r_start) = u0_prime. The solver propagates the exact solution of the
/// equation with f replaced by its piecewise-linear interpolant, panel by
/// panel, so it is exact (up to rounding) whenever f is affine and is
/// second-order accurate otherwise.
ScalarProfile solve_linear_ode(double k, double r_start, double u0, double u0_prime,
                               const ScalarProfile& f);

/// First derivative of the solution produced by solve_linear_ode on the same
/// grid (the propagator carries it exactly alongside the values).
struct OdeSolution {
    ScalarProfile u;
    ScalarProfile u_prime;
};
OdeSolution solve_linear_ode_with_derivative(double k, double r_start, double u0,
                                             double u0_prime, const ScalarProfile& f);

/// Pointwise margins of the comparison conclusions u <= ubar and
/// u' - k u <= ubar' - k ubar, derivatives by central differences.
struct ComparisonCheck {
    bool pass = true;
    std::vector<double> value_margin; // ubar - u per gridpoint
    std::vector<double> slope_margin; // (ubar' - k ubar) - (u' - k u), interior points
    double min_value_margin = 0.0;
    double min_slope_margin = 0.0;
};
ComparisonCheck check_comparison(const ScalarProfile& u, const ScalarProfile& u_bar,
                                 double k, double tol);

/// Verdict for the differential inequality a'' - k^2 a <= 2 pi chi on a
/// sampled area profile. Second differences use the cosh-compensated stencil
///   a''(r) ~ k^2 (a(r+d) - 2 cosh(k d) a(r) + a(r-d)) / (2 (cosh(k d) - 1)) + k^2 a(r)
/// which annihilates the cosh/sinh/constant solution family exactly, so the
/// equality case passes at rounding level. Gridpoints within two steps of a
/// jump of chi are skipped, as are the two endpoints.
struct FundamentalCheck {
    bool pass = true;
    double max_violation = 0.0; // max of a'' - k^2 a - 2 pi chi over retained points
    std::size_t worst_index = 0;
    std::size_t points_checked = 0;
    std::vector<std::size_t> skipped; // indices excluded around chi jumps
};
FundamentalCheck check_fundamental_inequality(const ScalarProfile& a,
                                              const ScalarProfile& chi, double k,
                                              double tol);

/// Estimate of the noise floor that second differences of this profile see:
/// the maximum absolute residual of centered 5-point quadratic fits, which
/// kills smooth curvature but keeps grid-scale jitter.
double quadratic_fit_noise(const ScalarProfile& p);

/// Error estimate for the quantity a'' - k^2 a - 2 pi chi measured on a mesh
/// profile: noise amplified by the second-difference stencil plus the k^2 a
/// term, with a tiny absolute floor.
double fundamental_error_estimate(const ScalarProfile& a, double k);

} // namespace gromet
