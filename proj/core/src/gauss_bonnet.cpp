#include "gromet/gauss_bonnet.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace gromet {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

GaussBonnetReport discrete_gauss_bonnet(const TriMesh& mesh,
                                        const std::vector<int>& region) {
    if (region.empty()) {
        throw std::invalid_argument("empty region");
    }
    std::vector<char> in_region(mesh.triangles().size(), 0);
    for (int t : region) {
        if (t < 0 || static_cast<std::size_t>(t) >= mesh.triangles().size()) {
            throw std::invalid_argument("region triangle index out of range");
        }
        if (in_region[t]) {
            throw std::invalid_argument("duplicate triangle in region");
        }
        in_region[t] = 1;
    }

    const auto& tris = mesh.triangles();
    const auto& tri_edges = mesh.triangle_edges();
    const auto& edge_tris = mesh.edge_triangles();
    const auto& angles = mesh.corner_angles();

    // Edge usage within the region.
    std::unordered_map<int, int> edge_count;
    std::unordered_set<int> verts;
    for (int t : region) {
        for (int side = 0; side < 3; ++side) {
            ++edge_count[tri_edges[t][side]];
        }
        for (int v : tris[t]) {
            verts.insert(v);
        }
    }

    std::unordered_set<int> boundary_verts;
    long e_count = 0;
    for (const auto& [e, cnt] : edge_count) {
        ++e_count;
        const bool region_boundary =
            cnt == 1; // either a mesh border edge or facing a removed triangle
        if (region_boundary) {
            boundary_verts.insert(mesh.edges()[e][0]);
            boundary_verts.insert(mesh.edges()[e][1]);
        }
    }

    // Vertex-manifoldness within the region: the incident region triangles of
    // each vertex must form a single fan connected through region-interior
    // edges at that vertex.
    {
        std::unordered_map<int, std::vector<int>> fan; // vertex -> region tris
        for (int t : region) {
            for (int v : tris[t]) {
                fan[v].push_back(t);
            }
        }
        for (const auto& [v, list] : fan) {
            if (list.size() <= 1) {
                continue;
            }
            std::unordered_map<int, int> parent;
            for (int t : list) {
                parent[t] = t;
            }
            std::function<int(int)> find = [&](int x) {
                while (parent[x] != x) {
                    x = parent[x] = parent[parent[x]];
                }
                return x;
            };
            for (int t : list) {
                for (int side = 0; side < 3; ++side) {
                    if (tris[t][side] == v) {
                        continue; // the edge at `side` is opposite v
                    }
                    const int e = tri_edges[t][side];
                    const int other = edge_tris[e][0] == t ? edge_tris[e][1] : edge_tris[e][0];
                    if (other >= 0 && in_region[other]) {
                        parent[find(t)] = find(other);
                    }
                }
            }
            int roots = 0;
            for (int t : list) {
                if (find(t) == t) {
                    ++roots;
                }
            }
            if (roots != 1) {
                throw std::invalid_argument("region pinched at vertex " + std::to_string(v));
            }
        }
    }

    // Angle sums within the region.
    std::unordered_map<int, double> angle_sum;
    for (int t : region) {
        for (int corner = 0; corner < 3; ++corner) {
            angle_sum[tris[t][corner]] += angles[t][corner];
        }
    }

    GaussBonnetReport rep;
    for (int v : verts) {
        const double sum = angle_sum[v];
        if (boundary_verts.count(v)) {
            rep.turning_term += kPi - sum;
        } else {
            rep.curvature_term += 2.0 * kPi - sum;
        }
    }
    rep.chi = static_cast<int>(static_cast<long>(verts.size()) - e_count +
                               static_cast<long>(region.size()));
    rep.lhs = rep.curvature_term + rep.turning_term;
    rep.rhs = 2.0 * kPi * rep.chi;
    rep.residual = rep.lhs - rep.rhs;
    return rep;
}

} // namespace gromet
