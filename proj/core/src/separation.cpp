#include "gromet/separation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "gromet/distance.hpp"

namespace gromet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RegionBoundary {
    std::vector<int> vertices;          // all boundary vertices
    std::vector<std::vector<int>> loops; // vertex cycles
    double total_length = 0.0;
};

// Boundary structure of the subsurface spanned by triangles whose corners
// all lie in `in_set`. With an empty region the whole set acts as boundary.
RegionBoundary region_boundary(const TriMesh& mesh, const std::vector<char>& in_set,
                               const std::vector<int>& fallback) {
    std::vector<char> region(mesh.triangles().size(), 0);
    bool any = false;
    for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
        const auto& tri = mesh.triangles()[t];
        if (in_set[tri[0]] && in_set[tri[1]] && in_set[tri[2]]) {
            region[t] = 1;
            any = true;
        }
    }
    RegionBoundary rb;
    if (!any) {
        rb.vertices = fallback;
        return rb;
    }

    // directed boundary edges in the region's induced orientation
    std::unordered_map<int, std::vector<int>> next;
    std::unordered_set<int> bverts;
    for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
        if (!region[t]) {
            continue;
        }
        for (int corner = 0; corner < 3; ++corner) {
            const int e = mesh.triangle_edges()[t][corner];
            const auto& owners = mesh.edge_triangles()[e];
            const int other = owners[0] == static_cast<int>(t) ? owners[1] : owners[0];
            const bool boundary = other < 0 || !region[other];
            if (!boundary) {
                continue;
            }
            const int u = mesh.triangles()[t][(corner + 1) % 3];
            const int v = mesh.triangles()[t][(corner + 2) % 3];
            next[u].push_back(v);
            bverts.insert(u);
            bverts.insert(v);
            rb.total_length += mesh.edge_lengths()[e];
        }
    }
    rb.vertices.assign(bverts.begin(), bverts.end());
    std::sort(rb.vertices.begin(), rb.vertices.end());

    // chain directed edges into loops; at a pinch take the smallest unused
    // continuation, which still counts loops deterministically
    std::unordered_map<int, std::vector<char>> used;
    for (auto& [u, outs] : next) {
        std::sort(outs.begin(), outs.end());
        used[u].assign(outs.size(), 0);
    }
    for (auto& [u, outs] : next) {
        for (std::size_t slot = 0; slot < outs.size(); ++slot) {
            if (used[u][slot]) {
                continue;
            }
            std::vector<int> loop;
            int cur = u;
            std::size_t cur_slot = slot;
            while (true) {
                used[cur][cur_slot] = 1;
                loop.push_back(cur);
                const int to = next[cur][cur_slot];
                const auto it = next.find(to);
                if (it == next.end()) {
                    break; // dangling; treat as an open chain
                }
                bool found = false;
                cur = to;
                for (std::size_t s2 = 0; s2 < it->second.size(); ++s2) {
                    if (!used[cur][s2]) {
                        cur_slot = s2;
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    break;
                }
            }
            rb.loops.push_back(std::move(loop));
        }
    }
    return rb;
}

} // namespace

void SeparationSpec::validate() const {
    if (host == nullptr) {
        throw std::invalid_argument("separation spec needs a host mesh");
    }
    if (e_sets.size() != v_sets.size() || e_sets.empty()) {
        throw std::invalid_argument("need matching nonempty E and V set lists");
    }
    if (!(r > 0.0) || !(s > 0.0) || N < 1) {
        throw std::invalid_argument("need r > 0, s > 0 and N >= 1");
    }
    const std::size_t n = host->vertex_count();
    std::vector<int> owner(n, -1);
    for (std::size_t k = 0; k < v_sets.size(); ++k) {
        if (v_sets[k].empty() || e_sets[k].empty()) {
            throw std::invalid_argument("empty E or V set");
        }
        std::unordered_set<int> vset;
        for (int v : v_sets[k]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                throw std::invalid_argument("V set vertex out of range");
            }
            if (owner[v] >= 0 && owner[v] != static_cast<int>(k)) {
                throw std::invalid_argument("V sets are not pairwise disjoint");
            }
            owner[v] = static_cast<int>(k);
            vset.insert(v);
        }
        for (int v : e_sets[k]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || !vset.count(v)) {
                throw std::invalid_argument("E set not contained in its V set");
            }
        }
    }
}

SeparationReport validate_uniform_separation(const SeparationSpec& spec) {
    spec.validate();
    const TriMesh& mesh = *spec.host;
    const std::size_t nv = mesh.vertex_count();
    const std::size_t ns = spec.v_sets.size();

    SeparationReport rep;
    rep.min_clearance = kInf;
    rep.min_mutual_distance = kInf;
    rep.conditions = {true, true, true, true, true};

    for (std::size_t k = 0; k < ns; ++k) {
        std::vector<char> in_v(nv, 0);
        for (int v : spec.v_sets[k]) {
            in_v[v] = 1;
        }
        const RegionBoundary rb = region_boundary(mesh, in_v, spec.v_sets[k]);

        rep.loops_per_set.push_back(static_cast<int>(rb.loops.size()));
        rep.boundary_length_per_set.push_back(rb.total_length);
        rep.max_boundary_length = std::max(rep.max_boundary_length, rb.total_length);
        rep.max_loop_count = std::max(rep.max_loop_count,
                                      static_cast<int>(rb.loops.size()));

        if (!rb.vertices.empty()) {
            const auto dist = multi_source_distance(mesh, rb.vertices);
            double clear = kInf;
            for (int v : spec.e_sets[k]) {
                clear = std::min(clear, dist[v]);
            }
            rep.min_clearance = std::min(rep.min_clearance, clear);
        } else {
            rep.min_clearance = 0.0;
        }

        // V minus E connected?
        std::vector<char> allowed(nv, 0);
        for (int v : spec.v_sets[k]) {
            allowed[v] = 1;
        }
        for (int v : spec.e_sets[k]) {
            allowed[v] = 0;
        }
        int start = -1;
        std::size_t allowed_count = 0;
        for (std::size_t v = 0; v < nv; ++v) {
            if (allowed[v]) {
                ++allowed_count;
                if (start < 0) {
                    start = static_cast<int>(v);
                }
            }
        }
        if (start < 0) {
            rep.conditions.complement_connected = false;
        } else {
            std::queue<int> q;
            std::vector<char> seen(nv, 0);
            q.push(start);
            seen[start] = 1;
            std::size_t reached = 1;
            while (!q.empty()) {
                const int v = q.front();
                q.pop();
                for (const auto& [w, len] : mesh.adjacency()[v]) {
                    (void)len;
                    if (allowed[w] && !seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        q.push(w);
                    }
                }
            }
            if (reached != allowed_count) {
                rep.conditions.complement_connected = false;
            }
        }
    }

    if (ns > 1) {
        for (std::size_t k = 0; k < ns; ++k) {
            const auto dist = multi_source_distance(mesh, spec.v_sets[k]);
            for (std::size_t j = 0; j < ns; ++j) {
                if (j == k) {
                    continue;
                }
                for (int v : spec.v_sets[j]) {
                    rep.min_mutual_distance = std::min(rep.min_mutual_distance, dist[v]);
                }
            }
        }
    }

    rep.conditions.clearance = rep.min_clearance >= spec.r;
    rep.conditions.boundary_length = rep.max_boundary_length <= spec.s;
    rep.conditions.loop_count = rep.max_loop_count <= spec.N;
    rep.conditions.mutual_distance = ns <= 1 || rep.min_mutual_distance >= spec.r;
    rep.pass = rep.conditions.clearance && rep.conditions.boundary_length &&
               rep.conditions.loop_count && rep.conditions.complement_connected &&
               rep.conditions.mutual_distance;
    return rep;
}

DStarReport estimate_D_star(const SeparationSpec& spec) {
    spec.validate();
    const TriMesh& mesh = *spec.host;
    const std::size_t nv = mesh.vertex_count();

    DStarReport rep;
    for (std::size_t k = 0; k < spec.v_sets.size(); ++k) {
        std::vector<char> in_v(nv, 0);
        for (int v : spec.v_sets[k]) {
            in_v[v] = 1;
        }
        std::vector<char> region(mesh.triangles().size(), 0);
        for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
            const auto& tri = mesh.triangles()[t];
            region[t] = in_v[tri[0]] && in_v[tri[1]] && in_v[tri[2]];
        }
        const RegionBoundary rb = region_boundary(mesh, in_v, spec.v_sets[k]);
        if (rb.loops.size() < 2) {
            continue;
        }

        // components of the complex outside the open neighborhood: vertices
        // joined by edges of surviving (non-region) triangles
        std::vector<int> comp(nv, -1);
        {
            std::vector<std::vector<int>> adj(nv);
            for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
                if (region[t]) {
                    continue;
                }
                const auto& tri = mesh.triangles()[t];
                for (int i = 0; i < 3; ++i) {
                    adj[tri[i]].push_back(tri[(i + 1) % 3]);
                    adj[tri[(i + 1) % 3]].push_back(tri[i]);
                }
            }
            int c = 0;
            for (std::size_t sv = 0; sv < nv; ++sv) {
                if (comp[sv] >= 0 || adj[sv].empty()) {
                    continue;
                }
                std::queue<int> q;
                q.push(static_cast<int>(sv));
                comp[sv] = c;
                while (!q.empty()) {
                    const int v = q.front();
                    q.pop();
                    for (int w : adj[v]) {
                        if (comp[w] < 0) {
                            comp[w] = c;
                            q.push(w);
                        }
                    }
                }
                ++c;
            }
        }

        auto touched = [&](const std::vector<int>& loop) {
            std::unordered_set<int> cs;
            for (int v : loop) {
                if (comp[v] >= 0) {
                    cs.insert(comp[v]);
                }
            }
            return cs;
        };
        std::vector<std::unordered_set<int>> loop_comps;
        loop_comps.reserve(rb.loops.size());
        for (const auto& loop : rb.loops) {
            loop_comps.push_back(touched(loop));
        }

        // intrinsic distances inside V minus E
        std::vector<char> allowed(nv, 0);
        for (int v : spec.v_sets[k]) {
            allowed[v] = 1;
        }
        for (int v : spec.e_sets[k]) {
            allowed[v] = 0;
        }

        for (std::size_t i = 0; i < rb.loops.size(); ++i) {
            for (std::size_t j = i + 1; j < rb.loops.size(); ++j) {
                bool joined_outside = false;
                for (int c : loop_comps[i]) {
                    joined_outside = joined_outside || loop_comps[j].count(c) > 0;
                }
                if (!joined_outside) {
                    continue;
                }
                ++rep.qualifying_pairs;
                std::vector<int> sources;
                for (int v : rb.loops[i]) {
                    if (allowed[v]) {
                        sources.push_back(v);
                    }
                }
                double best = kInf;
                if (!sources.empty()) {
                    const auto dist =
                        restricted_multi_source_distance(mesh, allowed, sources);
                    for (int v : rb.loops[j]) {
                        if (allowed[v]) {
                            best = std::min(best, dist[v]);
                        }
                    }
                }
                if (std::isinf(best)) {
                    rep.infinite = true;
                } else {
                    rep.value = std::max(rep.value, best);
                }
            }
        }
    }
    if (rep.infinite) {
        rep.value = kInf;
    }
    return rep;
}

} // namespace gromet
