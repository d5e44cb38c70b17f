#include "gromet/comparison.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gromet {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_finite_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::invalid_argument(std::string(name) + " must be finite and positive");
    }
}

} // namespace

void ComparisonParams::validate() const {
    require_finite_positive(k, "k");
    require_finite_positive(c, "c");
    require_finite_positive(r0, "r0");
}

double comparison_boundary_length(double k, double r) {
    require_finite_positive(k, "k");
    if (!std::isfinite(r) || r < 0.0) {
        throw std::invalid_argument("r must be finite and non-negative");
    }
    return (2.0 * kPi / k) * std::sinh(k * r);
}

double comparison_area(double k, double r) {
    require_finite_positive(k, "k");
    if (!std::isfinite(r) || r < 0.0) {
        throw std::invalid_argument("r must be finite and non-negative");
    }
    // expm1-based form keeps accuracy near r = 0.
    const double kr = k * r;
    const double cosh_minus_one = 0.5 * (std::expm1(kr) + std::expm1(-kr));
    return (2.0 * kPi / (k * k)) * cosh_minus_one;
}

double topology_bound(const ComparisonParams& params, double ell_outer) {
    params.validate();
    if (!std::isfinite(ell_outer) || ell_outer < 0.0) {
        throw std::invalid_argument("ell_outer must be finite and non-negative");
    }
    const double lhs = std::sinh(params.k * params.r0 + params.c);
    return (lhs - params.k * ell_outer / (2.0 * kPi)) / std::sinh(params.c);
}

double collar_width(double L) {
    require_finite_positive(L, "L");
    // cosh d0 = coth(L/2), so d0 = arccosh(coth(L/2)).
    const double x = 1.0 / std::tanh(L / 2.0);
    return std::acosh(x);
}

double disk_distance(std::complex<double> z, std::complex<double> w) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0) {
        throw std::domain_error("disk_distance requires |z| < 1 and |w| < 1");
    }
    const std::complex<double> num = z - w;
    const std::complex<double> den = 1.0 - std::conj(z) * w;
    const double m = std::abs(num / den);
    return 2.0 * std::atanh(m);
}

double round_annulus_modulus(double R) {
    if (std::isnan(R) || R <= 1.0) {
        throw std::domain_error("annulus modulus requires R > 1");
    }
    if (std::isinf(R)) {
        return std::numeric_limits<double>::infinity();
    }
    return std::log(R) / (2.0 * kPi);
}

double clearance_profile(double c, double eps) {
    require_finite_positive(c, "c");
    if (!std::isfinite(eps) || eps < 0.0) {
        throw std::invalid_argument("eps must be finite and non-negative");
    }
    const double ch = std::cosh((eps + c) / 2.0);
    return 2.0 * std::tanh(eps / 2.0) * ch * ch;
}

double eps0(double c, double l, double c1) {
    require_finite_positive(c, "c");
    require_finite_positive(l, "l");
    require_finite_positive(c1, "c1");
    const double target = c / std::expm1(l / c1);
    if (!std::isfinite(target) || target <= 0.0) {
        throw std::invalid_argument("eps0 target value is not finite and positive");
    }
    const double atol = std::min(1e-10, 1e-10 * (1.0 + target)) * 0.9;

    double hi = 1.0;
    while (clearance_profile(c, hi) < target) {
        hi *= 2.0;
        if (hi > 1e9) {
            throw std::invalid_argument("eps0 bracket expansion failed");
        }
    }
    double lo = 0.0;
    double mid = hi / 2.0;
    for (int iter = 0; iter < 400; ++iter) {
        mid = 0.5 * (lo + hi);
        const double f = clearance_profile(c, mid);
        if (std::abs(f - target) <= atol) {
            return mid;
        }
        if (f < target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= std::numeric_limits<double>::min()) {
            break;
        }
    }
    return mid;
}

void SurfaceClassSpec::validate() const {
    if (genus < 0 || n_outer < 0 || a < 0) {
        throw std::invalid_argument("genus, n_outer and a must be non-negative");
    }
    if (!std::isfinite(l) || l <= 0.0) {
        throw std::invalid_argument("class length l must be positive");
    }
    if (boundary_length < 0.0) {
        throw std::invalid_argument("boundary_length must be non-negative");
    }
    if (static_cast<int>(outer_loop_lengths.size()) != n_outer) {
        throw std::invalid_argument("outer_loop_lengths must have n_outer entries");
    }
    for (double len : outer_loop_lengths) {
        if (!std::isfinite(len) || len < 0.0) {
            throw std::invalid_argument("outer loop lengths must be non-negative");
        }
    }
}

SurfaceClass classify_surface(const SurfaceClassSpec& spec) {
    spec.validate();
    SurfaceClass out;
    out.chi = 2 - 2 * spec.genus - spec.n_outer;

    int over_budget = 0;
    for (double len : spec.outer_loop_lengths) {
        if (len > spec.l) {
            ++over_budget;
        }
    }
    const bool chi_in_range = out.chi <= 0 && out.chi >= -spec.a;
    const bool border_ok = spec.boundary_length <= 0.0 || spec.boundary_length <= spec.l;
    // With chi = 0 every outer loop is controlled; with chi < 0 at most one
    // may exceed the budget.
    const bool loops_ok_f = (out.chi == 0) ? (over_budget == 0) : (over_budget <= 1);

    out.in_F = spec.genus == 0 && chi_in_range && loops_ok_f && border_ok;
    out.in_S = out.in_F && over_budget == 0;
    return out;
}

} // namespace gromet
