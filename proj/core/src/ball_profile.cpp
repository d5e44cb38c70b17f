#include "gromet/ball_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gromet {

namespace {

/// Union-find over the clipped complex: ids [0, n) are mesh vertices,
/// [n, n + #edges) are level-crossing points per cut edge.
class UnionFind {
public:
    void reset(std::size_t n) {
        parent_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            parent_[i] = static_cast<int>(i);
        }
    }
    int find(int x) {
        while (parent_[x] != x) {
            x = parent_[x] = parent_[parent_[x]];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[a] = b;
        }
    }

private:
    std::vector<int> parent_;
};

struct Layout {
    double p1x;           // corner 1 at (p1x, 0)
    double p2x, p2y;      // corner 2
};

Layout layout_triangle(double l01, double l02, double l12, double area) {
    Layout lay;
    lay.p1x = l01;
    lay.p2x = (l02 * l02 + l01 * l01 - l12 * l12) / (2.0 * l01);
    lay.p2y = 2.0 * area / l01;
    return lay;
}

} // namespace

ScalarProfile BallProfile::area_profile() const {
    return ScalarProfile(radii, area, ProfileKind::area);
}

ScalarProfile BallProfile::ell_profile() const {
    return ScalarProfile(radii, boundary_length, ProfileKind::boundary_length);
}

ScalarProfile BallProfile::chi_profile() const {
    std::vector<double> vals(euler_char.begin(), euler_char.end());
    return ScalarProfile(radii, vals, ProfileKind::euler_char);
}

BallProfile ball_profile(const TriMesh& mesh, const DistanceField& field,
                         std::vector<double> radii) {
    if (field.dist.size() != mesh.vertex_count()) {
        throw std::invalid_argument("distance field does not match the mesh");
    }
    if (radii.empty()) {
        throw std::invalid_argument("empty radius grid");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) {
            throw std::invalid_argument("radii must be positive");
        }
        if (i > 0 && !(radii[i] > radii[i - 1])) {
            throw std::invalid_argument("radii must be strictly increasing");
        }
    }
    const double dist_max = field.max();
    if (radii.back() > dist_max * (1.0 + 1e-12)) {
        throw std::invalid_argument("max radius exceeds the distance field range");
    }

    const std::size_t n = mesh.vertex_count();
    const auto& d = field.dist;
    const auto& edges = mesh.edges();
    const auto& elen = mesh.edge_lengths();
    const auto& tris = mesh.triangles();
    const auto& tri_edges = mesh.triangle_edges();
    const auto& areas = mesh.triangle_areas();

    double h_min = elen.empty() ? 1.0 : *std::min_element(elen.begin(), elen.end());
    std::vector<double> sorted_d(d);
    std::sort(sorted_d.begin(), sorted_d.end());
    auto hits_vertex = [&](double r) {
        return std::binary_search(sorted_d.begin(), sorted_d.end(), r);
    };

    BallProfile out;
    out.radii = radii;
    UnionFind uf;
    std::vector<int> seen_root;
    std::vector<int> seen_epoch(n + edges.size(), -1);

    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        double r = radii[ri];
        int guard = 0;
        while (hits_vertex(r)) {
            r += 1e-9 * h_min;
            if (++guard > 64) {
                throw std::runtime_error("could not perturb radius away from vertex distances");
            }
        }

        uf.reset(n + edges.size());

        // Pass 1: unions.
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const int u = edges[e][0];
            const int v = edges[e][1];
            const bool iu = d[u] < r;
            const bool iv = d[v] < r;
            if (iu && iv) {
                uf.unite(u, v);
            } else if (iu != iv) {
                uf.unite(iu ? u : v, static_cast<int>(n + e));
            }
        }
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const int v0 = tris[t][0], v1 = tris[t][1], v2 = tris[t][2];
            const int inside = (d[v0] < r) + (d[v1] < r) + (d[v2] < r);
            if (inside == 1 || inside == 2) {
                // the two cut edges of this triangle
                int cut[2];
                int k = 0;
                for (int side = 0; side < 3; ++side) {
                    const int e = tri_edges[t][side];
                    const bool a = d[edges[e][0]] < r;
                    const bool b = d[edges[e][1]] < r;
                    if (a != b) {
                        cut[k++] = e;
                    }
                }
                uf.unite(static_cast<int>(n + cut[0]), static_cast<int>(n + cut[1]));
            }
        }

        // Pass 2: counts, lengths, areas.
        long v_in = 0, e_full = 0, e_chord = 0, faces = 0;
        long src_v = 0, src_e_full = 0, src_e_chord = 0, src_f = 0;
        const int src_root = uf.find(field.source);
        double ell = 0.0, ball_area = 0.0;
        int components = 0;
        const int epoch = static_cast<int>(ri);
        auto touch_component = [&](int id) {
            const int root = uf.find(id);
            if (seen_epoch[root] != epoch) {
                seen_epoch[root] = epoch;
                ++components;
            }
        };

        for (std::size_t v = 0; v < n; ++v) {
            if (d[v] < r) {
                ++v_in;
                if (uf.find(static_cast<int>(v)) == src_root) {
                    ++src_v;
                }
                touch_component(static_cast<int>(v));
            }
        }
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const bool iu = d[edges[e][0]] < r;
            const bool iv = d[edges[e][1]] < r;
            if (iu && iv) {
                ++e_full;
                if (uf.find(edges[e][0]) == src_root) {
                    ++src_e_full;
                }
            } else if (iu != iv) {
                touch_component(static_cast<int>(n + e));
            }
        }
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const int v0 = tris[t][0], v1 = tris[t][1], v2 = tris[t][2];
            const double d0 = d[v0], d1 = d[v1], d2 = d[v2];
            const int inside = (d0 < r) + (d1 < r) + (d2 < r);
            if (inside == 0) {
                continue;
            }
            ++faces;
            const bool in_src = uf.find(d0 < r ? v0 : (d1 < r ? v1 : v2)) == src_root;
            if (in_src) {
                ++src_f;
            }
            if (inside == 3) {
                ball_area += areas[t];
                continue;
            }
            ++e_chord;
            if (in_src) {
                ++src_e_chord;
            }

            // Corner lengths: edge opposite corner i.
            const double l12 = elen[tri_edges[t][0]];
            const double l02 = elen[tri_edges[t][1]];
            const double l01 = elen[tri_edges[t][2]];
            const Layout lay = layout_triangle(l01, l02, l12, areas[t]);
            const double px[3] = {0.0, lay.p1x, lay.p2x};
            const double py[3] = {0.0, 0.0, lay.p2y};
            const double dv[3] = {d0, d1, d2};

            auto crossing = [&](int i, int j, double* qx, double* qy) {
                const double tfrac = (r - dv[i]) / (dv[j] - dv[i]);
                *qx = px[i] + tfrac * (px[j] - px[i]);
                *qy = py[i] + tfrac * (py[j] - py[i]);
            };

            if (inside == 1) {
                const int u = d0 < r ? 0 : (d1 < r ? 1 : 2);
                const int a = (u + 1) % 3;
                const int b = (u + 2) % 3;
                double q1x, q1y, q2x, q2y;
                crossing(u, a, &q1x, &q1y);
                crossing(u, b, &q2x, &q2y);
                ell += std::hypot(q1x - q2x, q1y - q2y);
                const double ta = (r - dv[u]) / (dv[a] - dv[u]);
                const double tb = (r - dv[u]) / (dv[b] - dv[u]);
                ball_area += areas[t] * ta * tb;
            } else {
                const int w = !(d0 < r) ? 0 : (!(d1 < r) ? 1 : 2);
                const int a = (w + 1) % 3;
                const int b = (w + 2) % 3;
                double q1x, q1y, q2x, q2y;
                crossing(a, w, &q1x, &q1y);
                crossing(b, w, &q2x, &q2y);
                ell += std::hypot(q1x - q2x, q1y - q2y);
                const double sa = (dv[w] - r) / (dv[w] - dv[a]);
                const double sb = (dv[w] - r) / (dv[w] - dv[b]);
                ball_area += areas[t] * (1.0 - sa * sb);
            }
        }

        // Each cut edge contributes one crossing vertex and one edge fragment,
        // which cancel in V - E + F.
        const long chi = v_in - e_full - e_chord + faces;
        const long src_chi = src_v - src_e_full - src_e_chord + src_f;

        out.boundary_length.push_back(ell);
        out.area.push_back(ball_area);
        out.euler_char.push_back(static_cast<int>(chi));
        out.n_gen.push_back(static_cast<int>(1 - src_chi));
        out.component_count.push_back(components);
    }
    return out;
}

TopologyBoundReport scan_topology_bound(const TriMesh& mesh, const DistanceField& field,
                                        const ComparisonParams& params, double slack,
                                        int grid_points) {
    params.validate();
    if (grid_points < 1) {
        throw std::invalid_argument("grid_points must be positive");
    }
    const double r_end = params.r0 + params.c / params.k;
    if (r_end > field.max() * (1.0 + 1e-12)) {
        throw std::invalid_argument("r0 + c/k exceeds the distance field range");
    }

    // Interior gridpoints only: "strictly between" excludes both endpoints.
    std::vector<double> radii;
    const double step = (params.c / params.k) / (grid_points + 1);
    for (int i = 1; i <= grid_points; ++i) {
        radii.push_back(params.r0 + step * i);
    }
    radii.push_back(r_end);
    const BallProfile prof = ball_profile(mesh, field, radii);

    TopologyBoundReport rep;
    rep.ell_outer = prof.boundary_length.back();
    rep.bound = topology_bound(params, rep.ell_outer);
    rep.slack = slack;

    int best = -1;
    for (int i = 0; i < grid_points; ++i) {
        if (best < 0 || prof.n_gen[i] < prof.n_gen[best]) {
            best = i;
        }
        rep.scanned_radii.push_back(prof.radii[i]);
        rep.scanned_n.push_back(prof.n_gen[i]);
    }
    rep.r_prime = prof.radii[best];
    rep.n_at_r_prime = prof.n_gen[best];
    rep.pass = rep.n_at_r_prime <= rep.bound + slack;
    return rep;
}

} // namespace gromet
