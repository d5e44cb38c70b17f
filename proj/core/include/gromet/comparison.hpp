#pragma once

#include <complex>
#include <vector>

namespace gromet {

/// Parameters of a constant-curvature comparison: curvature scale k (the
/// model space has curvature -k^2), slack c and base radius r0.
struct ComparisonParams {
    double k = 1.0;
    double c = 1.0;
    double r0 = 1.0;

    void validate() const;
};

/// Length of the boundary circle of a radius-r ball in the model surface of
/// curvature -k^2: (2*pi/k) * sinh(k*r).
double comparison_boundary_length(double k, double r);

/// Area of a radius-r ball in the model surface: (2*pi/k^2) * (cosh(k*r) - 1).
double comparison_area(double k, double r);

/// Upper bound for the number of fundamental-group generators of some ball
/// of radius strictly between r0 and r0 + c/k, given the boundary length
/// `ell_outer` measured at radius r0 + c/k:
///
///     (1/sinh c) * (sinh(k*r0 + c) - k*ell_outer / (2*pi)).
///
/// The raw real value is returned; a negative result means the hypotheses
/// were contradicted at the caller's tolerance.
double topology_bound(const ComparisonParams& params, double ell_outer);

/// Half-width of the embedded tubular neighborhood guaranteed around a
/// simple closed geodesic of length L on a curvature -1 surface:
/// arccosh(coth(L/2)).
double collar_width(double L);

/// Distance between two points of the unit disk in the metric
/// ds = 2|dz| / (1 - |z|^2): 2 * artanh |(z - w) / (1 - conj(z) w)|.
double disk_distance(std::complex<double> z, std::complex<double> w);

/// Modulus of a round annulus conformally equivalent to {1 < |z-a| < R}:
/// log(R) / (2*pi). R = +infinity (a puncture) yields +infinity.
double round_annulus_modulus(double R);

/// The increasing clearance profile f_c(eps) = 2 tanh(eps/2) cosh^2((eps+c)/2)
/// used to convert a length budget into a minimum clearance.
double clearance_profile(double c, double eps);

/// Minimum clearance eps0 = f_c^{-1}( c / (e^{l/c1} - 1) ), computed by
/// bisection on the strictly increasing clearance profile. The residual
/// |f_c(eps0) - target| is at most 1e-10 * (1 + target) and also at most
/// 1e-10 in absolute value.
double eps0(double c, double l, double c1);

/// Description of a finite-type surface by its classifying data. Punctures
/// are recorded as outer loops of length zero.
struct SurfaceClassSpec {
    int genus = 0;
    int n_outer = 0;                        // boundary loops plus punctures
    std::vector<double> outer_loop_lengths; // one entry per outer loop
    double boundary_length = 0.0;           // total length of the border, 0 if none
    int a = 0;                              // class parameter
    double l = 1.0;                         // class length parameter

    void validate() const;
};

struct SurfaceClass {
    bool in_F = false;
    bool in_S = false;
    int chi = 0;
};

/// Membership test for the two families of genus-zero surfaces with length-
/// controlled outer loops. in_S requires every outer loop to have length
/// <= l; in_F exempts at most one loop when chi < 0. in_S implies in_F, and
/// the two coincide exactly when a = 0.
SurfaceClass classify_surface(const SurfaceClassSpec& spec);

} // namespace gromet
