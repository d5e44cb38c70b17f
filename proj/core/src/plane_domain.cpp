#include "gromet/plane_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace gromet {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPunctureFloor = 1e-6;
} // namespace

void PlaneDomain::validate() const {
    for (std::size_t i = 0; i < holes.size(); ++i) {
        const auto& h = holes[i];
        if (h.radius < 0.0 || !std::isfinite(h.radius) || !std::isfinite(h.center.real()) ||
            !std::isfinite(h.center.imag())) {
            throw std::invalid_argument("invalid hole");
        }
        if (unit_disk_outer && std::abs(h.center) + h.radius >= 1.0) {
            throw std::invalid_argument("hole " + std::to_string(i) +
                                        " not strictly inside the unit disk");
        }
        for (std::size_t j = i + 1; j < holes.size(); ++j) {
            if (std::abs(h.center - holes[j].center) <= h.radius + holes[j].radius) {
                throw std::invalid_argument("holes " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are not disjoint");
            }
        }
    }
    if (!unit_disk_outer && holes.empty()) {
        throw std::invalid_argument("the whole plane has no boundary");
    }
}

bool PlaneDomain::contains(Complex z) const {
    if (unit_disk_outer && std::abs(z) >= 1.0) {
        return false;
    }
    for (const auto& h : holes) {
        if (std::abs(z - h.center) <= h.radius) {
            return false;
        }
    }
    return true;
}

double boundary_distance(const PlaneDomain& domain, Complex z) {
    if (!domain.contains(z)) {
        throw std::domain_error("point outside the domain");
    }
    double d = domain.unit_disk_outer ? 1.0 - std::abs(z) : kInf;
    for (const auto& h : domain.holes) {
        d = std::min(d, std::abs(z - h.center) - h.radius);
    }
    return d;
}


namespace {

// Exact test whether the closed segment [a, b] stays inside the domain.
bool segment_inside(const PlaneDomain& domain, Complex a, Complex b) {
    if (!domain.contains(a) || !domain.contains(b)) {
        return false;
    }
    // endpoints inside the unit disk keep the whole segment inside it
    const Complex d = b - a;
    const double len2 = std::norm(d);
    for (const auto& h : domain.holes) {
        if (h.radius == 0.0) {
            continue; // a puncture has measure zero; quadrature never hits it
        }
        if (len2 == 0.0) {
            continue;
        }
        const Complex w = a - h.center;
        double t = -(w.real() * d.real() + w.imag() * d.imag()) / len2;
        t = std::clamp(t, 0.0, 1.0);
        if (std::abs(w + t * d) <= h.radius) {
            return false;
        }
    }
    return true;
}

double segment_quasihyperbolic(const PlaneDomain& domain, Complex a, Complex b) {
    const double len = std::abs(b - a);
    if (len == 0.0) {
        return 0.0;
    }
    double prev = 0.0;
    for (int n = 1; n <= (1 << 20); n *= 2) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double t = (i + 0.5) / n;
            const Complex z = a + t * (b - a);
            sum += 1.0 / boundary_distance(domain, z);
        }
        const double val = sum * len / n;
        if (n >= 4 && std::abs(val - prev) <= 1e-6 * std::abs(val)) {
            return val;
        }
        prev = val;
    }
    return prev;
}

} // namespace

bool segment_in_domain(const PlaneDomain& domain, Complex a, Complex b) {
    return segment_inside(domain, a, b);
}

double quasihyperbolic_length(const PlaneDomain& domain,
                              const std::vector<Complex>& polyline) {
    domain.validate();
    if (polyline.empty()) {
        throw std::invalid_argument("empty polyline");
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        if (!segment_inside(domain, polyline[i], polyline[i + 1])) {
            throw std::domain_error("polyline segment " + std::to_string(i) +
                                    " exits the domain");
        }
        total += segment_quasihyperbolic(domain, polyline[i], polyline[i + 1]);
    }
    return total;
}

MinLenReport check_minlen_bound(const PlaneDomain& domain,
                                const std::vector<Complex>& polyline) {
    MinLenReport rep;
    rep.quasihyperbolic = quasihyperbolic_length(domain, polyline);
    double euclid = 0.0;
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        euclid += std::abs(polyline[i + 1] - polyline[i]);
    }
    rep.lower_bound = std::log1p(euclid / boundary_distance(domain, polyline.front()));
    rep.pass = rep.quasihyperbolic >= rep.lower_bound - 1e-9;
    return rep;
}

std::optional<double> quasihyperbolic_distance(const PlaneDomain& domain, Complex z,
                                               Complex w, int cells) {
    domain.validate();
    if (!domain.contains(z) || !domain.contains(w)) {
        throw std::domain_error("endpoint outside the domain");
    }
    if (cells < 2) {
        throw std::invalid_argument("grid needs at least 2 cells per side");
    }
    const int side = cells + 1;
    const double x0 = -1.0, step = 2.0 / cells;
    auto node_pos = [&](int i, int j) {
        return Complex(x0 + step * i, x0 + step * j);
    };
    const int grid_nodes = side * side;
    const int nz = grid_nodes;
    const int nw = grid_nodes + 1;
    std::vector<char> open(grid_nodes, 0);
    for (int i = 0; i < side; ++i) {
        for (int j = 0; j < side; ++j) {
            open[i * side + j] = domain.contains(node_pos(i, j)) ? 1 : 0;
        }
    }

    // lazy edge weights: quadrature on pop
    auto weight = [&](Complex a, Complex b) -> double {
        if (!segment_inside(domain, a, b)) {
            return kInf;
        }
        return segment_quasihyperbolic(domain, a, b);
    };

    std::vector<double> dist(grid_nodes + 2, kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[nz] = 0.0;
    heap.push({0.0, nz});

    auto pos_of = [&](int id) -> Complex {
        if (id == nz) {
            return z;
        }
        if (id == nw) {
            return w;
        }
        return node_pos(id / side, id % side);
    };
    // endpoints connect to the nodes of a small surrounding patch
    auto patch_nodes = [&](Complex p) {
        std::vector<int> out;
        const int ci = static_cast<int>(std::floor((p.real() - x0) / step));
        const int cj = static_cast<int>(std::floor((p.imag() - x0) / step));
        for (int di = -1; di <= 2; ++di) {
            for (int dj = -1; dj <= 2; ++dj) {
                const int i = ci + di, j = cj + dj;
                if (i >= 0 && j >= 0 && i < side && j < side && open[i * side + j]) {
                    out.push_back(i * side + j);
                }
            }
        }
        return out;
    };
    const auto z_patch = patch_nodes(z);
    const auto w_patch = patch_nodes(w);

    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) {
            continue;
        }
        if (v == nw) {
            return d;
        }
        const Complex pv = pos_of(v);
        auto relax = [&](int u) {
            const double wgt = weight(pv, pos_of(u));
            if (std::isfinite(wgt) && d + wgt < dist[u]) {
                dist[u] = d + wgt;
                heap.push({d + wgt, u});
            }
        };
        if (v == nz) {
            for (int u : z_patch) {
                relax(u);
            }
            relax(nw); // direct segment when unobstructed
            continue;
        }
        const int i = v / side, j = v % side;
        for (int di = -1; di <= 1; ++di) {
            for (int dj = -1; dj <= 1; ++dj) {
                if (di == 0 && dj == 0) {
                    continue;
                }
                const int i2 = i + di, j2 = j + dj;
                if (i2 < 0 || j2 < 0 || i2 >= side || j2 >= side ||
                    !open[i2 * side + j2]) {
                    continue;
                }
                relax(i2 * side + j2);
            }
        }
        for (int u : w_patch) {
            if (u == v) {
                relax(nw);
            }
        }
    }
    return std::nullopt;
}

AnnulusWitness uniformly_perfect_constant(const PlaneDomain& domain) {
    domain.validate();
    const std::size_t boundary_components =
        domain.holes.size() + (domain.unit_disk_outer ? 1 : 0);
    if (boundary_components < 2) {
        throw std::domain_error("no separating annulus in a simply connected domain");
    }

    std::vector<Complex> centers;
    for (const auto& h : domain.holes) {
        centers.push_back(h.center);
    }
    for (std::size_t i = 0; i < domain.holes.size(); ++i) {
        for (std::size_t j = i + 1; j < domain.holes.size(); ++j) {
            centers.push_back(0.5 * (domain.holes[i].center + domain.holes[j].center));
        }
        if (domain.unit_disk_outer) {
            const Complex c = domain.holes[i].center;
            const double a = std::abs(c);
            if (a > 1e-12) {
                // midpoint of the radial gap between the hole and the circle
                const double mid = 0.5 * (a + domain.holes[i].radius + 1.0);
                centers.push_back(c / a * mid);
            }
        }
    }

    AnnulusWitness best;
    for (const Complex a : centers) {
        // radial obstruction intervals per boundary component
        struct Interval {
            double lo, hi;
        };
        std::vector<Interval> obs;
        for (const auto& h : domain.holes) {
            const double c = std::abs(a - h.center);
            obs.push_back({std::max(0.0, c - h.radius), c + h.radius});
        }
        if (domain.unit_disk_outer) {
            obs.push_back({1.0 - std::abs(a), kInf});
        }
        std::sort(obs.begin(), obs.end(),
                  [](const Interval& x, const Interval& y) { return x.lo < y.lo; });

        // merge into clusters and scan the gaps
        double cluster_hi = obs[0].hi;
        for (std::size_t i = 1; i < obs.size(); ++i) {
            if (obs[i].lo > cluster_hi) {
                // gap (cluster_hi, obs[i].lo): separating iff components on
                // both sides, which holds since below >= 1 and i < size
                const double rho1 = std::max(cluster_hi, kPunctureFloor);
                const double rho2 = obs[i].lo;
                if (rho2 > rho1) {
                    const double mod = std::log(rho2 / rho1) / (2.0 * kPi);
                    if (mod > best.modulus) {
                        best = {mod, a, rho1, rho2};
                    }
                }
            }
            cluster_hi = std::max(cluster_hi, obs[i].hi);
        }
    }
    if (best.modulus <= 0.0) {
        throw std::domain_error("no separating round annulus found");
    }
    return best;
}

double model_poincare_density(ModelDomain model, Complex z, double annulus_R) {
    const double r = std::abs(z);
    switch (model) {
        case ModelDomain::disk:
            if (r >= 1.0) {
                throw std::domain_error("point outside the unit disk");
            }
            return 2.0 / (1.0 - r * r);
        case ModelDomain::punctured_disk:
            if (r >= 1.0 || r == 0.0) {
                throw std::domain_error("point outside the punctured disk");
            }
            return 1.0 / (r * std::log(1.0 / r));
        case ModelDomain::annulus: {
            if (!(annulus_R > 1.0)) {
                throw std::invalid_argument("annulus needs R > 1");
            }
            if (r <= 1.0 || r >= annulus_R) {
                throw std::domain_error("point outside the annulus");
            }
            const double logR = std::log(annulus_R);
            return (kPi / logR) / (r * std::sin(kPi * std::log(r) / logR));
        }
    }
    throw std::logic_error("unhandled model domain");
}

LengthRatioReport check_length_ratio_punctured(double rho) {
    if (!(rho > 0.0) || !(rho < 1.0)) {
        throw std::invalid_argument("rho must lie in (0, 1)");
    }
    LengthRatioReport rep;
    const double len_disk = 2.0 * kPi * rho * 2.0 / (1.0 - rho * rho);
    const double len_punctured = 2.0 * kPi / std::log(1.0 / rho);
    rep.ratio = len_punctured / len_disk;
    rep.eps = 2.0 * std::atanh(rho);
    rep.upper = 1.0 / std::tanh(rep.eps / 2.0);
    rep.pass = rep.ratio > 1.0 && rep.ratio < rep.upper;
    return rep;
}

} // namespace gromet
