#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace gromet {

using Complex = std::complex<double>;

/// Plane domain: the unit disk (or the whole plane) minus round closed disks
/// and isolated points. Radius-zero holes are punctures.
struct PlaneDomain {
    struct Disk {
        Complex center;
        double radius = 0.0;
    };
    bool unit_disk_outer = true;
    std::vector<Disk> holes;

    void validate() const;
    bool contains(Complex z) const; // strictly inside
};

/// Distance from z to the domain boundary (exact for round data).
double boundary_distance(const PlaneDomain& domain, Complex z);

/// Whether the closed segment [a, b] stays inside the domain (exact
/// segment-circle tests for round data).
bool segment_in_domain(const PlaneDomain& domain, Complex a, Complex b);

/// Quasihyperbolic length of a polyline: per segment, midpoint quadrature
/// refined until the relative change drops below 1e-6. Segments leaving the
/// domain raise an error naming the offending segment.
double quasihyperbolic_length(const PlaneDomain& domain,
                              const std::vector<Complex>& polyline);

/// Lower bound log(1 + s / dist(x)) for the quasihyperbolic length of a
/// curve of Euclidean length s starting at x.
struct MinLenReport {
    double quasihyperbolic = 0.0;
    double lower_bound = 0.0;
    bool pass = false;
};
MinLenReport check_minlen_bound(const PlaneDomain& domain,
                                const std::vector<Complex>& polyline);

/// Quasihyperbolic distance upper bound via shortest paths on an 8-neighbor
/// grid graph with `cells` cells per side; endpoints join the graph as extra
/// nodes. Nested grids (cells doubling) can only shorten the result.
std::optional<double> quasihyperbolic_distance(const PlaneDomain& domain, Complex z,
                                               Complex w, int cells = 256);

/// Best separating round annulus: searches annuli {rho1 < |z-a| < rho2}
/// contained in the domain whose complement components both meet the
/// boundary, maximizing the modulus log(rho2/rho1) / (2 pi). Centers are the
/// hole centers and pairwise/outward midpoints; for round data the maximal
/// radii per center are exact interval-gap computations. Punctures floor the
/// inner radius at 1e-6.
struct AnnulusWitness {
    double modulus = 0.0;
    Complex center;
    double rho1 = 0.0;
    double rho2 = 0.0;
};
AnnulusWitness uniformly_perfect_constant(const PlaneDomain& domain);

enum class ModelDomain { disk, punctured_disk, annulus };

/// Densities of the complete curvature -1 metric on the three model domains;
/// `annulus_R` names the outer radius of {1 < |z| < R}.
double model_poincare_density(ModelDomain model, Complex z, double annulus_R = 0.0);

/// Two-sided comparison of the circle |z| = rho in the disk versus the
/// punctured disk: the length ratio must lie strictly between 1 and
/// coth(eps/2) with eps the disk distance from the puncture to the circle.
struct LengthRatioReport {
    double ratio = 0.0;
    double eps = 0.0;
    double upper = 0.0; // coth(eps/2)
    bool pass = false;
};
LengthRatioReport check_length_ratio_punctured(double rho);

} // namespace gromet
