#include "gromet/trimesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace gromet {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t edge_key(int u, int v) {
    if (u > v) {
        std::swap(u, v);
    }
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

double heron_area(double a, double b, double c) {
    // Kahan's numerically stable ordering: a >= b >= c.
    if (a < b) std::swap(a, b);
    if (b < c) std::swap(b, c);
    if (a < b) std::swap(a, b);
    const double t = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    return 0.25 * std::sqrt(std::max(0.0, t));
}

} // namespace

TriMesh TriMesh::build(Input in) {
    TriMesh m;
    m.n_ = in.vertex_count;
    m.tris_ = std::move(in.triangles);
    m.labels_ = std::move(in.labels);
    if (m.n_ == 0 || m.tris_.empty()) {
        throw std::invalid_argument("mesh needs vertices and triangles");
    }
    for (const auto& t : m.tris_) {
        for (int v : t) {
            if (v < 0 || static_cast<std::size_t>(v) >= m.n_) {
                throw std::invalid_argument("triangle vertex index out of range");
            }
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            throw std::invalid_argument("degenerate triangle with repeated vertex");
        }
    }
    for (const auto& [name, verts] : m.labels_) {
        for (int v : verts) {
            if (v < 0 || static_cast<std::size_t>(v) >= m.n_) {
                throw std::invalid_argument("label '" + name + "' has vertex out of range");
            }
        }
    }

    std::unordered_map<std::uint64_t, int> edge_of;
    edge_of.reserve(in.edge_lengths.size() * 2);
    for (const auto& [u, v, len] : in.edge_lengths) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= m.n_ ||
            static_cast<std::size_t>(v) >= m.n_ || u == v) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (!(len > 0.0) || !std::isfinite(len)) {
            throw std::invalid_argument("edge length must be positive and finite");
        }
        const auto key = edge_key(u, v);
        if (edge_of.count(key)) {
            throw std::invalid_argument("duplicate edge length entry");
        }
        edge_of[key] = static_cast<int>(m.edges_.size());
        m.edges_.push_back({std::min(u, v), std::max(u, v)});
        m.elen_.push_back(len);
    }

    m.tri_edges_.resize(m.tris_.size());
    m.edge_tris_.assign(m.edges_.size(), {-1, -1});
    for (std::size_t t = 0; t < m.tris_.size(); ++t) {
        const auto& tri = m.tris_[t];
        for (int corner = 0; corner < 3; ++corner) {
            const int u = tri[(corner + 1) % 3];
            const int v = tri[(corner + 2) % 3];
            const auto it = edge_of.find(edge_key(u, v));
            if (it == edge_of.end()) {
                throw std::invalid_argument("triangle edge " + std::to_string(u) + "-" +
                                            std::to_string(v) + " has no length");
            }
            const int e = it->second;
            m.tri_edges_[t][corner] = e;
            if (m.edge_tris_[e][0] < 0) {
                m.edge_tris_[e][0] = static_cast<int>(t);
            } else if (m.edge_tris_[e][1] < 0) {
                m.edge_tris_[e][1] = static_cast<int>(t);
            } else {
                throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                            std::to_string(v) +
                                            " borders more than two triangles");
            }
        }
    }
    for (std::size_t e = 0; e < m.edges_.size(); ++e) {
        if (m.edge_tris_[e][0] < 0) {
            throw std::invalid_argument("edge without incident triangle");
        }
    }

    m.edge_of_ = std::move(edge_of);
    m.finalize();
    return m;
}

void TriMesh::finalize() {
    // Strict triangle inequality.
    for (std::size_t t = 0; t < tris_.size(); ++t) {
        const double a = elen_[tri_edges_[t][0]];
        const double b = elen_[tri_edges_[t][1]];
        const double c = elen_[tri_edges_[t][2]];
        if (!(a + b > c && b + c > a && a + c > b)) {
            throw std::invalid_argument("triangle " + std::to_string(t) +
                                        " violates the strict triangle inequality");
        }
    }

    // Orient consistently, flipping triangles where needed. Two triangles
    // agree across a shared edge iff they traverse it in opposite directions.
    {
        std::vector<int> state(tris_.size(), 0); // 0 unseen, 1 kept, 2 flipped
        auto traverses_forward = [&](std::size_t t, int u, int v) {
            const auto& tri = tris_[t];
            for (int i = 0; i < 3; ++i) {
                if (tri[i] == u && tri[(i + 1) % 3] == v) {
                    return true;
                }
            }
            return false;
        };
        for (std::size_t seed = 0; seed < tris_.size(); ++seed) {
            if (state[seed] != 0) {
                continue;
            }
            state[seed] = 1;
            std::queue<std::size_t> q;
            q.push(seed);
            while (!q.empty()) {
                const std::size_t t = q.front();
                q.pop();
                for (int corner = 0; corner < 3; ++corner) {
                    const int e = tri_edges_[t][corner];
                    const int other =
                        edge_tris_[e][0] == static_cast<int>(t) ? edge_tris_[e][1]
                                                                : edge_tris_[e][0];
                    if (other < 0) {
                        continue;
                    }
                    const int u = tris_[t][(corner + 1) % 3];
                    const int v = tris_[t][(corner + 2) % 3];
                    // t originally traverses u->v here; its effective direction
                    // flips with its state.
                    const bool t_effective_forward = state[t] == 1;
                    const bool other_forward =
                        traverses_forward(static_cast<std::size_t>(other), u, v);
                    // Opposite effective directions required.
                    const int want = (other_forward == t_effective_forward) ? 2 : 1;
                    if (state[other] == 0) {
                        state[other] = want;
                        q.push(static_cast<std::size_t>(other));
                    } else if (state[other] != want) {
                        throw std::invalid_argument("mesh is not orientable");
                    }
                }
            }
        }
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            if (state[t] == 2) {
                std::swap(tris_[t][1], tris_[t][2]);
                std::swap(tri_edges_[t][1], tri_edges_[t][2]);
            }
        }
    }

    adj_.assign(n_, {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        adj_[edges_[e][0]].push_back({edges_[e][1], elen_[e]});
        adj_[edges_[e][1]].push_back({edges_[e][0], elen_[e]});
    }

    // Connectivity.
    {
        std::vector<char> seen(n_, 0);
        std::queue<int> q;
        q.push(tris_[0][0]);
        seen[tris_[0][0]] = 1;
        std::size_t reached = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const auto& [w, len] : adj_[v]) {
                (void)len;
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    q.push(w);
                }
            }
        }
        if (reached != n_) {
            int witness = -1;
            for (std::size_t v = 0; v < n_; ++v) {
                if (!seen[v]) {
                    witness = static_cast<int>(v);
                    break;
                }
            }
            throw std::invalid_argument(
                "mesh is disconnected: vertex " + std::to_string(witness) +
                " unreachable (" + std::to_string(n_ - reached) + " vertices cut off)");
        }
    }

    angles_.resize(tris_.size());
    areas_.resize(tris_.size());
    for (std::size_t t = 0; t < tris_.size(); ++t) {
        const double a = elen_[tri_edges_[t][0]];
        const double b = elen_[tri_edges_[t][1]];
        const double c = elen_[tri_edges_[t][2]];
        auto corner = [](double opp, double s1, double s2) {
            const double cosv = (s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2);
            return std::acos(std::clamp(cosv, -1.0, 1.0));
        };
        angles_[t][0] = corner(a, b, c);
        angles_[t][1] = corner(b, a, c);
        angles_[t][2] = corner(c, a, b);
        areas_[t] = heron_area(a, b, c);
    }

    boundary_vertex_.assign(n_, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edge_tris_[e][1] < 0) {
            boundary_vertex_[edges_[e][0]] = 1;
            boundary_vertex_[edges_[e][1]] = 1;
        }
    }

    vertex_tris_.assign(n_, {});
    for (std::size_t t = 0; t < tris_.size(); ++t) {
        for (int corner = 0; corner < 3; ++corner) {
            vertex_tris_[tris_[t][corner]].push_back({static_cast<int>(t), corner});
        }
    }

    // Vertex-manifoldness: the triangle fan around every vertex must be a
    // single disk or half-disk.
    for (std::size_t v = 0; v < n_; ++v) {
        const auto& fan = vertex_tris_[v];
        if (fan.empty()) {
            throw std::invalid_argument("isolated vertex " + std::to_string(v));
        }
        std::unordered_map<int, int> comp;
        for (const auto& [t, corner] : fan) {
            (void)corner;
            comp[t] = t;
        }
        std::function<int(int)> find = [&](int x) {
            while (comp[x] != x) {
                x = comp[x] = comp[comp[x]];
            }
            return x;
        };
        for (const auto& [t, corner] : fan) {
            for (int side = 0; side < 3; ++side) {
                if (side == corner) {
                    continue; // opposite edge does not touch v
                }
                const int e = tri_edges_[t][side];
                const int other = edge_tris_[e][0] == t ? edge_tris_[e][1] : edge_tris_[e][0];
                if (other >= 0 && comp.count(other)) {
                    comp[find(t)] = find(other);
                }
            }
        }
        int roots = 0;
        for (const auto& [t, corner] : fan) {
            (void)corner;
            if (find(t) == t) {
                ++roots;
            }
        }
        if (roots != 1) {
            throw std::invalid_argument("pinched (non-manifold) vertex " + std::to_string(v));
        }
    }
}

const std::vector<int>& TriMesh::label(const std::string& name) const {
    const auto it = labels_.find(name);
    if (it == labels_.end()) {
        throw std::invalid_argument("unknown label '" + name + "'");
    }
    return it->second;
}

bool TriMesh::has_label(const std::string& name) const {
    return labels_.count(name) > 0;
}

int TriMesh::edge_index(int u, int v) const {
    const auto it = edge_of_.find(edge_key(u, v));
    return it == edge_of_.end() ? -1 : it->second;
}

double TriMesh::edge_length(int u, int v) const {
    const int e = edge_index(u, v);
    if (e < 0) {
        throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    return elen_[e];
}

std::vector<std::vector<int>> TriMesh::boundary_loops() const {
    std::vector<int> next(n_, -1);
    std::vector<char> on_boundary(n_, 0);
    for (std::size_t t = 0; t < tris_.size(); ++t) {
        for (int corner = 0; corner < 3; ++corner) {
            const int e = tri_edges_[t][corner];
            if (edge_tris_[e][1] >= 0) {
                continue;
            }
            // Oriented boundary: the triangle traverses (u, v); the loop keeps
            // that direction. Manifoldness gives each boundary vertex exactly
            // one outgoing boundary edge.
            const int u = tris_[t][(corner + 1) % 3];
            const int v = tris_[t][(corner + 2) % 3];
            next[u] = v;
            on_boundary[u] = 1;
            on_boundary[v] = 1;
        }
    }
    std::vector<std::vector<int>> loops;
    std::vector<char> used(n_, 0);
    for (std::size_t s = 0; s < n_; ++s) {
        if (!on_boundary[s] || used[s]) {
            continue;
        }
        std::vector<int> loop;
        int v = static_cast<int>(s);
        while (!used[v]) {
            used[v] = 1;
            loop.push_back(v);
            v = next[v];
            if (v < 0) {
                throw std::invalid_argument("boundary chain is not closed");
            }
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

double TriMesh::angle_defect(int v) const {
    double sum = 0.0;
    for (const auto& [t, corner] : vertex_tris_[v]) {
        sum += angles_[t][corner];
    }
    return (boundary_vertex_[v] ? kPi : 2.0 * kPi) - sum;
}

double TriMesh::dual_area(int v) const {
    double sum = 0.0;
    for (const auto& [t, corner] : vertex_tris_[v]) {
        (void)corner;
        sum += areas_[t];
    }
    return sum / 3.0;
}

std::vector<int> TriMesh::ordered_neighbors(int v) const {
    // successor map around v from the consistent orientation: triangle
    // (v, a, b) makes b follow a.
    std::unordered_map<int, int> succ;
    std::unordered_map<int, int> pred;
    for (const auto& [t, corner] : vertex_tris_[v]) {
        const int a = tris_[t][(corner + 1) % 3];
        const int b = tris_[t][(corner + 2) % 3];
        succ[a] = b;
        pred[b] = a;
    }
    if (succ.empty()) {
        return {};
    }
    int start = succ.begin()->first;
    if (boundary_vertex_[v]) {
        for (const auto& [a, b] : succ) {
            (void)b;
            if (!pred.count(a)) {
                start = a;
            }
        }
    }
    std::vector<int> order;
    order.reserve(succ.size() + 1);
    int cur = start;
    for (std::size_t step = 0; step <= succ.size(); ++step) {
        order.push_back(cur);
        const auto it = succ.find(cur);
        if (it == succ.end()) {
            break;
        }
        cur = it->second;
        if (cur == start) {
            break;
        }
    }
    return order;
}

TriMesh TriMesh::remove_triangles(const std::vector<char>& remove_flag) const {
    if (remove_flag.size() != tris_.size()) {
        throw std::invalid_argument("removal flag size mismatch");
    }
    std::vector<char> keep_vertex(n_, 0);
    Input in;
    for (std::size_t t = 0; t < tris_.size(); ++t) {
        if (remove_flag[t]) {
            continue;
        }
        in.triangles.push_back(tris_[t]);
        for (int v : tris_[t]) {
            keep_vertex[v] = 1;
        }
    }
    std::vector<int> remap(n_, -1);
    int next_id = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        if (keep_vertex[v]) {
            remap[v] = next_id++;
        }
    }
    in.vertex_count = static_cast<std::size_t>(next_id);
    for (auto& tri : in.triangles) {
        for (int& v : tri) {
            v = remap[v];
        }
    }
    std::vector<char> edge_used(edges_.size(), 0);
    for (std::size_t t = 0; t < tris_.size(); ++t) {
        if (remove_flag[t]) {
            continue;
        }
        for (int e : tri_edges_[t]) {
            edge_used[e] = 1;
        }
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edge_used[e]) {
            in.edge_lengths.emplace_back(remap[edges_[e][0]], remap[edges_[e][1]], elen_[e]);
        }
    }
    for (const auto& [name, verts] : labels_) {
        std::vector<int> mapped;
        for (int v : verts) {
            if (remap[v] >= 0) {
                mapped.push_back(remap[v]);
            }
        }
        in.labels[name] = std::move(mapped);
    }
    return build(std::move(in));
}

} // namespace gromet
