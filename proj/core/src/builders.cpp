#include "gromet/builders.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "gromet/distance.hpp"
#include "gromet/hyperbolic.hpp"

namespace gromet {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t ekey(int u, int v) {
    if (u > v) {
        std::swap(u, v);
    }
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

double wrap_angle(double a) {
    while (a > kPi) {
        a -= 2.0 * kPi;
    }
    while (a <= -kPi) {
        a += 2.0 * kPi;
    }
    return a;
}

// ---------------------------------------------------------------------------
// Warped-product band meshes: metric dt^2 + w(t)^2 dtheta^2 with the circle
// coordinate theta. Edge lengths are exact geodesic distances, available in
// closed form for all four model metrics.
// ---------------------------------------------------------------------------

struct BandMetric {
    enum class Type { hyperbolic_polar, flat, funnel, cusp } type;
    double scale = 1.0; // circumference / 2 pi for flat, funnel, cusp

    double w(double t) const {
        switch (type) {
            case Type::hyperbolic_polar: return std::sinh(t);
            case Type::flat: return scale;
            case Type::funnel: return scale * std::cosh(t);
            case Type::cusp: return scale * std::exp(-t);
        }
        return 0.0;
    }

    double chord(double t1, double th1, double t2, double th2) const {
        const double dth = wrap_angle(th2 - th1);
        switch (type) {
            case Type::hyperbolic_polar: {
                const double c = std::cosh(t1) * std::cosh(t2) -
                                 std::sinh(t1) * std::sinh(t2) * std::cos(dth);
                return std::acosh(std::max(1.0, c));
            }
            case Type::flat:
                return std::hypot(t2 - t1, scale * dth);
            case Type::funnel: {
                const double dx = scale * dth;
                const double c = std::cosh(t1) * std::cosh(t2) * std::cosh(dx) -
                                 std::sinh(t1) * std::sinh(t2);
                return std::acosh(std::max(1.0, c));
            }
            case Type::cusp: {
                const double dx = scale * dth;
                const double y1 = std::exp(t1);
                const double y2 = std::exp(t2);
                const double c =
                    1.0 + (dx * dx + (y1 - y2) * (y1 - y2)) / (2.0 * y1 * y2);
                return std::acosh(std::max(1.0, c));
            }
        }
        return 0.0;
    }
};

struct BandMesh {
    TriMesh::Input in;
    std::vector<double> vt;  // parameter t per vertex
    std::vector<double> vth; // parameter theta per vertex
    int center = -1;
    int mid_vertex = 0; // a vertex on the middle ring
    std::vector<int> first_ring;
    std::vector<int> last_ring;
};

class BandBuilder {
public:
    BandBuilder(BandMetric metric, double h) : metric_(metric), h_(h) {}

    int add_vertex(double t, double th) {
        mesh_.vt.push_back(t);
        mesh_.vth.push_back(th);
        return static_cast<int>(mesh_.vt.size()) - 1;
    }

    void add_edge(int u, int v) {
        const auto key = ekey(u, v);
        if (edge_seen_.count(key)) {
            return;
        }
        edge_seen_.insert(key);
        const double len =
            metric_.chord(mesh_.vt[u], mesh_.vth[u], mesh_.vt[v], mesh_.vth[v]);
        mesh_.in.edge_lengths.emplace_back(u, v, len);
    }

    void add_tri(int a, int b, int c) {
        mesh_.in.triangles.push_back({a, b, c});
        add_edge(a, b);
        add_edge(b, c);
        add_edge(a, c);
    }

    std::vector<int> make_ring(double t, int m) {
        std::vector<int> ring(m);
        for (int i = 0; i < m; ++i) {
            ring[i] = add_vertex(t, 2.0 * kPi * i / m);
        }
        for (int i = 0; i < m; ++i) {
            add_edge(ring[i], ring[(i + 1) % m]);
        }
        return ring;
    }

    void connect(const std::vector<int>& A, const std::vector<int>& B) {
        const int ma = static_cast<int>(A.size());
        if (static_cast<int>(B.size()) != ma) {
            throw std::logic_error("ring sizes must match");
        }
        for (int i = 0; i < ma; ++i) {
            const int j = (i + 1) % ma;
            add_tri(A[i], B[i], B[j]);
            add_tri(A[i], B[j], A[j]);
        }
    }

    BandMesh run(double t0, double t1, bool cap) {
        const int bands = std::max(1, static_cast<int>(std::ceil((t1 - t0) / h_)));
        const double dt = (t1 - t0) / bands;

        // One fixed ring size, chosen for the widest ring. Every vertex then
        // sits on a full radial spoke, which keeps graph distances from the
        // cap/base exact on every ring (the warp w is monotone for all four
        // metrics, so the extremes bound it).
        const double w_max = std::max(metric_.w(t0 + (cap ? dt : 0.0)), metric_.w(t1));
        const int m = std::max(8, static_cast<int>(std::ceil(2.0 * kPi * w_max / h_)));

        int j0 = 0;
        std::vector<int> prev;
        if (cap) {
            mesh_.center = add_vertex(t0, 0.0);
            j0 = 1;
            prev = make_ring(t0 + dt, m);
            for (int i = 0; i < m; ++i) {
                add_tri(mesh_.center, prev[i], prev[(i + 1) % m]);
            }
            mesh_.first_ring = prev;
        } else {
            prev = make_ring(t0, m);
            mesh_.first_ring = prev;
        }
        mesh_.mid_vertex = prev[0];
        for (int j = j0 + 1; j <= bands; ++j) {
            const double t = t0 + dt * j;
            std::vector<int> ring = make_ring(t, m);
            connect(prev, ring);
            prev = std::move(ring);
            if (j == (bands + 1) / 2) {
                mesh_.mid_vertex = prev[0];
            }
        }
        mesh_.last_ring = prev;
        mesh_.in.vertex_count = mesh_.vt.size();
        return std::move(mesh_);
    }

private:
    BandMetric metric_;
    double h_;
    BandMesh mesh_;
    std::unordered_set<std::uint64_t> edge_seen_;
};

// ---------------------------------------------------------------------------
// Right-angled hexagon in the hyperboloid model, refined to edge length <= h.
// The hexagon walk alternates pant-boundary half-sides and seams; double the
// resulting mesh across the seams to obtain the pair of pants.
// ---------------------------------------------------------------------------

struct HexSides {
    // side order: A1, s3, A2, s1, A3, s2 with A_k = l_k / 2
    std::array<double, 6> len;
};

HexSides hexagon_sides(double l1, double l2, double l3) {
    const double a1 = l1 / 2.0, a2 = l2 / 2.0, a3 = l3 / 2.0;
    auto seam = [](double opp, double adj1, double adj2) {
        const double c = (std::cosh(opp) + std::cosh(adj1) * std::cosh(adj2)) /
                         (std::sinh(adj1) * std::sinh(adj2));
        return std::acosh(c);
    };
    HexSides s;
    s.len[0] = a1;
    s.len[1] = seam(a3, a1, a2); // s3 between A1 and A2
    s.len[2] = a2;
    s.len[3] = seam(a1, a2, a3); // s1 between A2 and A3
    s.len[4] = a3;
    s.len[5] = seam(a2, a3, a1); // s2 between A3 and A1
    return s;
}

std::array<hyp::Vec3, 6> hexagon_walk(const HexSides& sides) {
    auto attempt = [&](double turn, std::array<hyp::Vec3, 6>* out) {
        hyp::Mat3 frame = hyp::identity();
        for (int i = 0; i < 6; ++i) {
            (*out)[i] = hyp::apply(frame, hyp::origin());
            frame = hyp::mul(frame, hyp::mul(hyp::translation_x(sides.len[i]),
                                             hyp::rotation(turn)));
        }
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                worst = std::max(worst,
                                 std::abs(frame[i][j] - (i == j ? 1.0 : 0.0)));
            }
        }
        return worst;
    };
    std::array<hyp::Vec3, 6> verts;
    if (attempt(kPi / 2.0, &verts) < 1e-6) {
        return verts;
    }
    if (attempt(-kPi / 2.0, &verts) < 1e-6) {
        return verts;
    }
    throw std::runtime_error("Y-piece hexagon walk failed to close");
}

hyp::Vec3 geodesic_point(const hyp::Vec3& p, const hyp::Vec3& q, double frac) {
    const double s = hyp::distance(p, q);
    if (s == 0.0) {
        return p;
    }
    const double ch = std::cosh(s);
    const double sh = std::sinh(s);
    const hyp::Vec3 tangent{(q.x - ch * p.x) / sh, (q.y - ch * p.y) / sh,
                            (q.z - ch * p.z) / sh};
    const double cs = std::cosh(frac * s);
    const double sn = std::sinh(frac * s);
    return hyp::Vec3{cs * p.x + sn * tangent.x, cs * p.y + sn * tangent.y,
                     cs * p.z + sn * tangent.z};
}

struct HexMesh {
    std::vector<hyp::Vec3> pts;
    std::vector<std::array<int, 3>> tris;
    std::vector<char> alive;
    std::unordered_map<std::uint64_t, std::array<int, 2>> edge_tris;
    std::vector<char> boundary_pt; // fixed during smoothing
    std::array<std::vector<int>, 6> side_chain; // ordered ids per hexagon side

    double dist(int a, int b) const { return hyp::distance(pts[a], pts[b]); }

    void attach(std::uint64_t key, int t) {
        auto& slot = edge_tris.try_emplace(key, std::array<int, 2>{-1, -1}).first->second;
        if (slot[0] < 0 || slot[0] == t) {
            slot[0] = t;
        } else if (slot[1] < 0 || slot[1] == t) {
            slot[1] = t;
        } else {
            throw std::runtime_error("hexagon refinement produced a non-manifold edge");
        }
    }

    void detach(std::uint64_t key, int t) {
        auto it = edge_tris.find(key);
        if (it == edge_tris.end()) {
            return;
        }
        if (it->second[0] == t) {
            it->second[0] = it->second[1];
        } else if (it->second[1] != t) {
            return;
        }
        it->second[1] = -1;
        if (it->second[0] < 0) {
            edge_tris.erase(it);
        }
    }

    int add_tri(int a, int b, int c) {
        const int id = static_cast<int>(tris.size());
        tris.push_back({a, b, c});
        alive.push_back(1);
        attach(ekey(a, b), id);
        attach(ekey(b, c), id);
        attach(ekey(a, c), id);
        return id;
    }

    void kill_tri(int t) {
        alive[t] = 0;
        const auto& tri = tris[t];
        detach(ekey(tri[0], tri[1]), t);
        detach(ekey(tri[1], tri[2]), t);
        detach(ekey(tri[0], tri[2]), t);
    }

    int neighbor_across(int t, int u, int v) const {
        const auto it = edge_tris.find(ekey(u, v));
        if (it == edge_tris.end()) {
            return -1;
        }
        return it->second[0] == t ? it->second[1] : it->second[0];
    }

    // longest edge of a triangle as an (u, v) pair
    std::pair<int, int> longest_edge(int t) const {
        const auto& tri = tris[t];
        std::pair<int, int> best{tri[0], tri[1]};
        double len = dist(tri[0], tri[1]);
        if (const double d = dist(tri[1], tri[2]); d > len) {
            len = d;
            best = {tri[1], tri[2]};
        }
        if (const double d = dist(tri[0], tri[2]); d > len) {
            best = {tri[0], tri[2]};
        }
        return best;
    }

    double longest_len(int t) const {
        const auto [u, v] = longest_edge(t);
        return dist(u, v);
    }
};

// Splits edge (u, v): insert the geodesic midpoint into the one or two alive
// triangles containing it.
void split_edge(HexMesh& hx, int u, int v) {
    const auto it = hx.edge_tris.find(ekey(u, v));
    if (it == hx.edge_tris.end()) {
        throw std::logic_error("split of a non-existent edge");
    }
    const std::array<int, 2> owners = it->second;
    const int mid = static_cast<int>(hx.pts.size());
    hx.pts.push_back(hyp::midpoint(hx.pts[u], hx.pts[v]));
    hx.boundary_pt.push_back(0);
    for (int t : owners) {
        if (t < 0 || !hx.alive[t]) {
            continue;
        }
        const auto tri = hx.tris[t];
        int w = -1;
        for (int x : tri) {
            if (x != u && x != v) {
                w = x;
            }
        }
        hx.kill_tri(t);
        hx.add_tri(u, mid, w);
        hx.add_tri(mid, v, w);
    }
}

// Rivara-style refinement: repeatedly follow the longest-edge propagation
// path to a terminal pair and split it, until every edge is at most h.
// Boundary edges are pre-split below h and are never the longest edge of an
// oversized triangle, so side chains stay fixed.
void refine_to(HexMesh& hx, double h) {
    std::deque<int> work;
    for (std::size_t t = 0; t < hx.tris.size(); ++t) {
        if (hx.alive[t] && hx.longest_len(static_cast<int>(t)) > h) {
            work.push_back(static_cast<int>(t));
        }
    }
    std::size_t safety = 0;
    while (!work.empty()) {
        if (++safety > 20'000'000) {
            throw std::runtime_error("hexagon refinement did not terminate");
        }
        const int t0 = work.front();
        if (!hx.alive[t0] || hx.longest_len(t0) <= h) {
            work.pop_front();
            continue;
        }
        // longest-edge propagation
        int t = t0;
        for (int guard = 0; guard < 100000; ++guard) {
            const auto [u, v] = hx.longest_edge(t);
            const int other = hx.neighbor_across(t, u, v);
            if (other < 0) {
                split_edge(hx, u, v);
                break;
            }
            const auto [ou, ov] = hx.longest_edge(other);
            if (ekey(ou, ov) == ekey(u, v)) {
                split_edge(hx, u, v);
                break;
            }
            t = other;
        }
        const std::size_t old_count = work.size();
        (void)old_count;
        // newly created triangles: scan tail of the arena
        for (std::size_t nt = hx.tris.size() >= 4 ? hx.tris.size() - 4 : 0;
             nt < hx.tris.size(); ++nt) {
            if (hx.alive[nt] && hx.longest_len(static_cast<int>(nt)) > h) {
                work.push_back(static_cast<int>(nt));
            }
        }
    }
}

// Klein-coordinate neighborhood averaging of interior points; boundary
// chains stay fixed, so gluing counts are unaffected.
void smooth(HexMesh& hx, int sweeps) {
    for (int s = 0; s < sweeps; ++s) {
        std::vector<std::vector<int>> adj(hx.pts.size());
        for (const auto& [key, owners] : hx.edge_tris) {
            (void)owners;
            const int u = static_cast<int>(key >> 32);
            const int v = static_cast<int>(key & 0xffffffffu);
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (std::size_t p = 0; p < hx.pts.size(); ++p) {
            if (hx.boundary_pt[p] || adj[p].empty()) {
                continue;
            }
            double kx = 0.0, ky = 0.0;
            for (int q : adj[p]) {
                const auto k = hyp::to_klein(hx.pts[q]);
                kx += k.x;
                ky += k.y;
            }
            kx /= static_cast<double>(adj[p].size());
            ky /= static_cast<double>(adj[p].size());
            const double n2 = kx * kx + ky * ky;
            if (n2 >= 1.0) {
                continue;
            }
            const double z = 1.0 / std::sqrt(1.0 - n2);
            hx.pts[p] = hyp::Vec3{kx * z, ky * z, z};
        }
    }
}

HexMesh build_hexagon_mesh(double l1, double l2, double l3, double h) {
    const HexSides sides = hexagon_sides(l1, l2, l3);
    const auto corners = hexagon_walk(sides);

    HexMesh hx;
    for (int i = 0; i < 6; ++i) {
        hx.pts.push_back(corners[i]);
        hx.boundary_pt.push_back(1);
    }

    // Pre-split every side into equal geodesic pieces below the target edge
    // length; midpoints of the seam sides become chain vertices.
    const double hb = 0.75 * h;
    std::array<int, 6> mid_id{-1, -1, -1, -1, -1, -1};
    for (int s = 0; s < 6; ++s) {
        const int a = s;
        const int b = (s + 1) % 6;
        std::vector<int> chain;
        chain.push_back(a);
        if (s % 2 == 1) {
            // seam side: force the midpoint to be a chain vertex
            const int halves = std::max(1, static_cast<int>(std::ceil(sides.len[s] / 2.0 / hb)));
            const hyp::Vec3 mid = geodesic_point(corners[a], corners[b], 0.5);
            for (int i = 1; i <= halves; ++i) {
                const double f = 0.5 * i / halves;
                if (i == halves) {
                    mid_id[s] = static_cast<int>(hx.pts.size());
                }
                hx.pts.push_back(geodesic_point(corners[a], corners[b], f));
                hx.boundary_pt.push_back(1);
                chain.push_back(static_cast<int>(hx.pts.size()) - 1);
            }
            (void)mid;
            for (int i = 1; i < halves; ++i) {
                const double f = 0.5 + 0.5 * i / halves;
                hx.pts.push_back(geodesic_point(corners[a], corners[b], f));
                hx.boundary_pt.push_back(1);
                chain.push_back(static_cast<int>(hx.pts.size()) - 1);
            }
        } else {
            const int pieces = std::max(1, static_cast<int>(std::ceil(sides.len[s] / hb)));
            for (int i = 1; i < pieces; ++i) {
                hx.pts.push_back(geodesic_point(corners[a], corners[b],
                                                static_cast<double>(i) / pieces));
                hx.boundary_pt.push_back(1);
                chain.push_back(static_cast<int>(hx.pts.size()) - 1);
            }
        }
        chain.push_back(b);
        hx.side_chain[s] = std::move(chain);
    }

    const int m1 = mid_id[1];
    const int m3 = mid_id[3];
    const int m5 = mid_id[5];

    auto centroid = [&](const std::vector<int>& ids) {
        hyp::Vec3 sum{0, 0, 0};
        for (int id : ids) {
            sum.x += hx.pts[id].x;
            sum.y += hx.pts[id].y;
            sum.z += hx.pts[id].z;
        }
        const int g = static_cast<int>(hx.pts.size());
        hx.pts.push_back(hyp::normalize_point(sum));
        hx.boundary_pt.push_back(0);
        return g;
    };

    auto chain_segment = [&](int side, int from, int to) {
        const auto& c = hx.side_chain[side];
        const auto ia = std::find(c.begin(), c.end(), from);
        const auto ib = std::find(c.begin(), c.end(), to);
        std::vector<int> out;
        if (ia <= ib) {
            out.assign(ia, ib + 1);
        } else {
            out.assign(ib, ia + 1);
            std::reverse(out.begin(), out.end());
        }
        return out;
    };

    // Fan the three corner regions from interior centroids; the central
    // triangle (M1, M3, M5) closes the hexagon.
    auto fan_region = [&](const std::vector<int>& polyline) {
        const int g = centroid(polyline);
        for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
            hx.add_tri(g, polyline[i], polyline[i + 1]);
        }
        hx.add_tri(g, polyline.back(), polyline.front());
    };

    auto concat = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin() + 1, b.end());
        return a;
    };

    // region around side 0 (corners V0, V1): M5 -> V0 -> V1 -> M1
    fan_region(concat(concat(chain_segment(5, m5, 0), chain_segment(0, 0, 1)),
                      chain_segment(1, 1, m1)));
    // region around side 2 (V2, V3): M1 -> V2 -> V3 -> M3
    fan_region(concat(concat(chain_segment(1, m1, 2), chain_segment(2, 2, 3)),
                      chain_segment(3, 3, m3)));
    // region around side 4 (V4, V5): M3 -> V4 -> V5 -> M5
    fan_region(concat(concat(chain_segment(3, m3, 4), chain_segment(4, 4, 5)),
                      chain_segment(5, 5, m5)));
    hx.add_tri(m1, m3, m5);

    refine_to(hx, 0.95 * h);
    smooth(hx, 8);
    refine_to(hx, h);
    smooth(hx, 2);
    refine_to(hx, h);

    return hx;
}

struct PantsMesh {
    TriMesh::Input in;
    std::array<std::vector<int>, 3> rings; // ordered boundary cycles
    int basepoint = -1;
};

// Double the hexagon across its seam sides (1, 3, 5). Boundary ring k comes
// from side 2k of the two copies.
PantsMesh assemble_pants(const HexMesh& hx) {
    const std::size_t np = hx.pts.size();
    std::vector<char> on_seam(np, 0);
    for (int s : {1, 3, 5}) {
        for (int id : hx.side_chain[s]) {
            on_seam[id] = 1;
        }
    }

    std::vector<int> mirror(np, -1);
    int next_id = static_cast<int>(np);
    for (std::size_t p = 0; p < np; ++p) {
        mirror[p] = on_seam[p] ? static_cast<int>(p) : next_id++;
    }

    PantsMesh pants;
    pants.in.vertex_count = static_cast<std::size_t>(next_id);

    std::unordered_map<std::uint64_t, double> edge_len;
    auto add_edge = [&](int u, int v, double len) {
        const auto key = ekey(u, v);
        const auto it = edge_len.find(key);
        if (it == edge_len.end()) {
            edge_len[key] = len;
        }
    };
    for (std::size_t t = 0; t < hx.tris.size(); ++t) {
        if (!hx.alive[t]) {
            continue;
        }
        const auto& tri = hx.tris[t];
        pants.in.triangles.push_back(tri);
        pants.in.triangles.push_back(
            {mirror[tri[0]], mirror[tri[2]], mirror[tri[1]]});
        for (int i = 0; i < 3; ++i) {
            const int u = tri[i];
            const int v = tri[(i + 1) % 3];
            const double len = hx.dist(u, v);
            add_edge(u, v, len);
            add_edge(mirror[u], mirror[v], len);
        }
    }
    for (const auto& [key, len] : edge_len) {
        pants.in.edge_lengths.emplace_back(static_cast<int>(key >> 32),
                                           static_cast<int>(key & 0xffffffffu), len);
    }

    for (int k = 0; k < 3; ++k) {
        const auto& chain = hx.side_chain[2 * k];
        std::vector<int> ring(chain);
        for (std::size_t i = chain.size() - 2; i >= 1; --i) {
            ring.push_back(mirror[chain[i]]);
        }
        pants.rings[k] = std::move(ring);
    }
    // the seam midpoint of side 1 is an interior vertex of the pants
    pants.basepoint = hx.side_chain[1][hx.side_chain[1].size() / 2];
    return pants;
}

PantsMesh build_pants(double l1, double l2, double l3, double h) {
    const HexMesh hx = build_hexagon_mesh(l1, l2, l3, h);
    return assemble_pants(hx);
}

TriMesh finish_ypiece(const PantsMesh& pants) {
    TriMesh::Input in = pants.in;
    in.labels["boundary0"] = pants.rings[0];
    in.labels["boundary1"] = pants.rings[1];
    in.labels["boundary2"] = pants.rings[2];
    in.labels["basepoint"] = {pants.basepoint};
    return TriMesh::build(std::move(in));
}

// ---------------------------------------------------------------------------
// Pants tree: complete binary tree of identical pants, parent ring 1/2 glued
// to the child's ring 0 with reversed orientation and corner-aligned (zero
// twist).
// ---------------------------------------------------------------------------

class MergeMap {
public:
    explicit MergeMap(std::size_t n) : parent_(n) {
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
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

TriMesh build_pants_tree(int depth, double l, double h) {
    const PantsMesh pants = build_pants(l, l, l, h);
    const int node_count = (1 << (depth + 1)) - 1;
    const int P = static_cast<int>(pants.in.vertex_count);
    const std::size_t total = static_cast<std::size_t>(node_count) * P;

    MergeMap merge(total);
    auto gid = [&](int node, int local) { return node * P + local; };

    struct Gluing {
        int parent, child; // node indices; parent ring 1/2 to child ring 0
        int parent_ring;
    };
    std::vector<Gluing> gluings;
    for (int node = 0; node < node_count; ++node) {
        const int c1 = 2 * node + 1;
        const int c2 = 2 * node + 2;
        if (c1 < node_count) {
            gluings.push_back({node, c1, 1});
        }
        if (c2 < node_count) {
            gluings.push_back({node, c2, 2});
        }
    }
    const int m = static_cast<int>(pants.rings[0].size());
    for (const auto& g : gluings) {
        const auto& pring = pants.rings[g.parent_ring];
        const auto& cring = pants.rings[0];
        for (int j = 0; j < m; ++j) {
            merge.unite(gid(g.parent, pring[j]), gid(g.child, cring[(m - j) % m]));
        }
    }

    std::vector<int> compact(total, -1);
    int next_id = 0;
    for (std::size_t i = 0; i < total; ++i) {
        const int root = merge.find(static_cast<int>(i));
        if (compact[root] < 0) {
            compact[root] = next_id++;
        }
        compact[i] = compact[root];
    }

    TriMesh::Input in;
    in.vertex_count = static_cast<std::size_t>(next_id);
    std::unordered_map<std::uint64_t, double> edge_len;
    for (int node = 0; node < node_count; ++node) {
        for (const auto& tri : pants.in.triangles) {
            in.triangles.push_back({compact[gid(node, tri[0])],
                                    compact[gid(node, tri[1])],
                                    compact[gid(node, tri[2])]});
        }
        for (const auto& [u, v, len] : pants.in.edge_lengths) {
            const int gu = compact[gid(node, u)];
            const int gv = compact[gid(node, v)];
            const auto key = ekey(gu, gv);
            const auto it = edge_len.find(key);
            if (it == edge_len.end()) {
                edge_len[key] = len;
            } else if (std::abs(it->second - len) > 1e-9 * len) {
                throw std::runtime_error("pants gluing produced inconsistent edge lengths");
            }
        }
    }
    for (const auto& [key, len] : edge_len) {
        in.edge_lengths.emplace_back(static_cast<int>(key >> 32),
                                     static_cast<int>(key & 0xffffffffu), len);
    }

    auto map_ring = [&](int node, const std::vector<int>& ring) {
        std::vector<int> out;
        out.reserve(ring.size());
        for (int v : ring) {
            out.push_back(compact[gid(node, v)]);
        }
        return out;
    };

    int glue_idx = 0;
    for (const auto& g : gluings) {
        in.labels["glue" + std::to_string(glue_idx++)] =
            map_ring(g.parent, pants.rings[g.parent_ring]);
    }
    int boundary_idx = 0;
    in.labels["boundary" + std::to_string(boundary_idx++)] = map_ring(0, pants.rings[0]);
    for (int node = 0; node < node_count; ++node) {
        for (int r = 1; r <= 2; ++r) {
            const bool glued = (2 * node + r) < node_count;
            if (!glued) {
                in.labels["boundary" + std::to_string(boundary_idx++)] =
                    map_ring(node, pants.rings[r]);
            }
        }
    }
    for (int node = 0; node < node_count; ++node) {
        std::vector<int> piece;
        piece.reserve(pants.in.vertex_count);
        std::unordered_set<int> seen;
        for (int local = 0; local < P; ++local) {
            const int v = compact[gid(node, local)];
            if (seen.insert(v).second) {
                piece.push_back(v);
            }
        }
        std::sort(piece.begin(), piece.end());
        in.labels["piece" + std::to_string(node)] = std::move(piece);
    }
    in.labels["basepoint"] = {compact[gid(0, pants.basepoint)]};

    return TriMesh::build(std::move(in));
}

// ---------------------------------------------------------------------------
// Disk with round holes in the Euclidean picture; the metric is the ambient
// hyperbolic-disk metric throughout.
// ---------------------------------------------------------------------------

TriMesh build_disk_with_holes(const BuildSpec& spec) {
    BandMetric metric{BandMetric::Type::hyperbolic_polar, 1.0};
    BandBuilder builder(metric, spec.resolution);
    BandMesh band = builder.run(0.0, spec.radius, true);

    const std::size_t n = band.in.vertex_count;
    std::vector<double> ex(n), ey(n);
    for (std::size_t v = 0; v < n; ++v) {
        const double rho = std::tanh(band.vt[v] / 2.0);
        ex[v] = rho * std::cos(band.vth[v]);
        ey[v] = rho * std::sin(band.vth[v]);
    }

    band.in.labels["boundary0"] = band.last_ring;
    band.in.labels["basepoint"] = {band.center};

    std::vector<std::vector<int>> e_sets;
    for (std::size_t k = 0; k < spec.holes.size(); ++k) {
        const Hole& hole = spec.holes[k];
        std::vector<int> set;
        if (hole.radius > 0.0) {
            for (std::size_t v = 0; v < n; ++v) {
                if (std::hypot(ex[v] - hole.x, ey[v] - hole.y) <= hole.radius) {
                    set.push_back(static_cast<int>(v));
                }
            }
            if (set.empty()) {
                throw std::runtime_error("hole " + std::to_string(k) +
                                         " contains no mesh vertex; refine the mesh");
            }
        } else {
            int best = -1;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t v = 0; v < n; ++v) {
                const double d = std::hypot(ex[v] - hole.x, ey[v] - hole.y);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(v);
                }
            }
            set.push_back(best);
        }
        band.in.labels["e" + std::to_string(k)] = set;
        e_sets.push_back(std::move(set));
    }

    TriMesh full = TriMesh::build(std::move(band.in));
    if (!spec.delete_holes) {
        // punctures still get a rim marker for the surrounding-curve search
        auto labels = full.labels();
        for (std::size_t k = 0; k < spec.holes.size(); ++k) {
            if (spec.holes[k].radius == 0.0) {
                labels["hole" + std::to_string(k)] = labels["e" + std::to_string(k)];
            }
        }
        TriMesh::Input again;
        again.vertex_count = full.vertex_count();
        again.triangles = full.triangles();
        for (std::size_t e = 0; e < full.edges().size(); ++e) {
            again.edge_lengths.emplace_back(full.edges()[e][0], full.edges()[e][1],
                                            full.edge_lengths()[e]);
        }
        again.labels = std::move(labels);
        return TriMesh::build(std::move(again));
    }

    std::vector<char> in_e(full.vertex_count(), 0);
    for (const auto& set : e_sets) {
        for (int v : set) {
            in_e[v] = 1;
        }
    }
    std::vector<char> remove(full.triangles().size(), 0);
    for (std::size_t t = 0; t < full.triangles().size(); ++t) {
        const auto& tri = full.triangles()[t];
        if (in_e[tri[0]] && in_e[tri[1]] && in_e[tri[2]]) {
            remove[t] = 1;
        }
    }
    TriMesh deleted = full.remove_triangles(remove);
    // surviving e-vertices are exactly the jagged rims
    auto labels = deleted.labels();
    for (std::size_t k = 0; k < spec.holes.size(); ++k) {
        labels["hole" + std::to_string(k)] = labels["e" + std::to_string(k)];
    }
    TriMesh::Input again;
    again.vertex_count = deleted.vertex_count();
    again.triangles = deleted.triangles();
    for (std::size_t e = 0; e < deleted.edges().size(); ++e) {
        again.edge_lengths.emplace_back(deleted.edges()[e][0], deleted.edges()[e][1],
                                        deleted.edge_lengths()[e]);
    }
    again.labels = std::move(labels);
    return TriMesh::build(std::move(again));
}

} // namespace

SurfaceKind surface_kind_from_string(const std::string& s) {
    if (s == "hyperbolic_disk") return SurfaceKind::hyperbolic_disk;
    if (s == "flat_cylinder") return SurfaceKind::flat_cylinder;
    if (s == "funnel") return SurfaceKind::funnel;
    if (s == "cusp") return SurfaceKind::cusp;
    if (s == "ypiece") return SurfaceKind::ypiece;
    if (s == "pants_tree") return SurfaceKind::pants_tree;
    if (s == "disk_minus_disks") return SurfaceKind::disk_minus_disks;
    throw std::invalid_argument("unknown surface kind '" + s + "'");
}

std::string to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::hyperbolic_disk: return "hyperbolic_disk";
        case SurfaceKind::flat_cylinder: return "flat_cylinder";
        case SurfaceKind::funnel: return "funnel";
        case SurfaceKind::cusp: return "cusp";
        case SurfaceKind::ypiece: return "ypiece";
        case SurfaceKind::pants_tree: return "pants_tree";
        case SurfaceKind::disk_minus_disks: return "disk_minus_disks";
    }
    return "?";
}

void BuildSpec::validate() const {
    if (!(resolution > 0.0) || resolution > 1.0) {
        throw std::invalid_argument("resolution must be in (0, 1]");
    }
    switch (kind) {
        case SurfaceKind::hyperbolic_disk:
            if (!(radius > 0.0)) {
                throw std::invalid_argument("disk radius must be positive");
            }
            break;
        case SurfaceKind::flat_cylinder:
            if (!(circumference > 0.0) || !(height > 0.0)) {
                throw std::invalid_argument("cylinder needs positive circumference and height");
            }
            break;
        case SurfaceKind::funnel:
        case SurfaceKind::cusp:
            if (!(boundary_length > 0.0) || !(t_max > 0.0)) {
                throw std::invalid_argument("funnel/cusp needs positive boundary length and t_max");
            }
            break;
        case SurfaceKind::ypiece:
            if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0)) {
                throw std::invalid_argument("Y-piece boundary lengths must be positive");
            }
            break;
        case SurfaceKind::pants_tree:
            if (depth < 0 || !(loop_length > 0.0)) {
                throw std::invalid_argument("pants tree needs depth >= 0 and positive loop length");
            }
            break;
        case SurfaceKind::disk_minus_disks: {
            if (!(radius > 0.0)) {
                throw std::invalid_argument("disk radius must be positive");
            }
            const double rho_max = std::tanh(radius / 2.0);
            for (std::size_t i = 0; i < holes.size(); ++i) {
                const auto& h = holes[i];
                if (h.radius < 0.0) {
                    throw std::invalid_argument("hole radius must be non-negative");
                }
                const double c = std::hypot(h.x, h.y);
                if (c + h.radius >= rho_max) {
                    throw std::invalid_argument("hole " + std::to_string(i) +
                                                " is not strictly inside the meshed disk");
                }
                if (c <= h.radius) {
                    throw std::invalid_argument("hole " + std::to_string(i) +
                                                " must not cover the disk center");
                }
                for (std::size_t j = i + 1; j < holes.size(); ++j) {
                    const auto& g = holes[j];
                    if (std::hypot(h.x - g.x, h.y - g.y) <= h.radius + g.radius) {
                        throw std::invalid_argument("holes " + std::to_string(i) + " and " +
                                                    std::to_string(j) + " are not disjoint");
                    }
                }
            }
            break;
        }
    }
}

TriMesh build(const BuildSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case SurfaceKind::hyperbolic_disk: {
            BandMetric metric{BandMetric::Type::hyperbolic_polar, 1.0};
            BandBuilder builder(metric, spec.resolution);
            BandMesh band = builder.run(0.0, spec.radius, true);
            band.in.labels["boundary0"] = band.last_ring;
            band.in.labels["basepoint"] = {band.center};
            return TriMesh::build(std::move(band.in));
        }
        case SurfaceKind::flat_cylinder: {
            BandMetric metric{BandMetric::Type::flat, spec.circumference / (2.0 * kPi)};
            BandBuilder builder(metric, spec.resolution);
            BandMesh band = builder.run(0.0, spec.height, false);
            band.in.labels["boundary0"] = band.first_ring;
            band.in.labels["boundary1"] = band.last_ring;
            band.in.labels["basepoint"] = {band.mid_vertex};
            return TriMesh::build(std::move(band.in));
        }
        case SurfaceKind::funnel: {
            BandMetric metric{BandMetric::Type::funnel,
                              spec.boundary_length / (2.0 * kPi)};
            BandBuilder builder(metric, spec.resolution);
            BandMesh band = builder.run(0.0, spec.t_max, false);
            band.in.labels["boundary0"] = band.first_ring;
            band.in.labels["boundary1"] = band.last_ring;
            band.in.labels["basepoint"] = {band.mid_vertex};
            return TriMesh::build(std::move(band.in));
        }
        case SurfaceKind::cusp: {
            BandMetric metric{BandMetric::Type::cusp,
                              spec.boundary_length / (2.0 * kPi)};
            BandBuilder builder(metric, spec.resolution);
            BandMesh band = builder.run(0.0, spec.t_max, false);
            band.in.labels["boundary0"] = band.first_ring;
            band.in.labels["boundary1"] = band.last_ring;
            band.in.labels["basepoint"] = {band.mid_vertex};
            return TriMesh::build(std::move(band.in));
        }
        case SurfaceKind::ypiece:
            return finish_ypiece(build_pants(spec.l1, spec.l2, spec.l3, spec.resolution));
        case SurfaceKind::pants_tree:
            return build_pants_tree(spec.depth, spec.loop_length, spec.resolution);
        case SurfaceKind::disk_minus_disks:
            return build_disk_with_holes(spec);
    }
    throw std::logic_error("unhandled surface kind");
}

// ---------------------------------------------------------------------------
// Shortest essential cycle around a hole.
// ---------------------------------------------------------------------------

namespace {

double cycle_length(const TriMesh& mesh, const std::vector<int>& cycle) {
    double len = 0.0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        len += mesh.edge_length(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    return len;
}

// The mesh-side representative of a labeled hole: the single marked vertex
// for a puncture, otherwise the rim vertices on the mesh border.
std::vector<int> hole_representative(const TriMesh& mesh, const std::vector<int>& label) {
    if (label.size() == 1) {
        return label;
    }
    std::vector<int> rep;
    for (int v : label) {
        if (mesh.is_boundary_vertex(v)) {
            rep.push_back(v);
        }
    }
    return rep;
}

bool check_separation(const TriMesh& mesh, const std::vector<int>& cycle,
                      const std::string& hole_label) {
    std::vector<char> blocked(mesh.vertex_count(), 0);
    for (int v : cycle) {
        blocked[v] = 1;
    }
    std::vector<int> comp(mesh.vertex_count(), -1);
    int comp_count = 0;
    for (std::size_t s = 0; s < mesh.vertex_count(); ++s) {
        if (blocked[s] || comp[s] >= 0) {
            continue;
        }
        const int c = comp_count++;
        std::queue<int> q;
        q.push(static_cast<int>(s));
        comp[s] = c;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const auto& [w, len] : mesh.adjacency()[v]) {
                (void)len;
                if (!blocked[w] && comp[w] < 0) {
                    comp[w] = c;
                    q.push(w);
                }
            }
        }
    }
    std::unordered_set<int> own;
    for (int v : hole_representative(mesh, mesh.label(hole_label))) {
        if (!blocked[v]) {
            own.insert(comp[v]);
        }
    }
    for (const auto& [name, verts] : mesh.labels()) {
        if (name == hole_label || name.rfind("hole", 0) != 0) {
            continue;
        }
        for (int v : hole_representative(mesh, verts)) {
            if (!blocked[v] && own.count(comp[v])) {
                return false;
            }
        }
    }
    return true;
}

struct CutCandidate {
    std::vector<int> cycle; // original vertex ids
    double length = 0.0;
};

// Cuts the annular submesh along `path` (sub ids) and finds the shortest
// left-to-right reconnection, i.e. the shortest cycle crossing the cut once.
std::optional<CutCandidate> cut_and_search(const TriMesh& sub,
                                           const std::vector<int>& to_orig,
                                           const std::vector<int>& path) {
    const int n = static_cast<int>(sub.vertex_count());
    const int m = static_cast<int>(path.size());
    std::vector<int> path_pos(n, -1);
    for (int i = 0; i < m; ++i) {
        path_pos[path[i]] = i;
    }

    // side of neighbor w around path vertex index i: 0 = left, 1 = right
    std::vector<std::unordered_map<int, int>> side(m);
    for (int i = 0; i < m; ++i) {
        const int v = path[i];
        const auto order = sub.ordered_neighbors(v);
        const int prev = i > 0 ? path[i - 1] : -1;
        const int next = i + 1 < m ? path[i + 1] : -1;
        const int k = static_cast<int>(order.size());
        auto pos = [&](int w) {
            for (int x = 0; x < k; ++x) {
                if (order[x] == w) {
                    return x;
                }
            }
            return -1;
        };
        const int pn = next >= 0 ? pos(next) : -1;
        const int pp = prev >= 0 ? pos(prev) : -1;
        if ((next >= 0 && pn < 0) || (prev >= 0 && pp < 0)) {
            return std::nullopt;
        }
        for (int x = 0; x < k; ++x) {
            const int w = order[x];
            if (w == prev || w == next) {
                continue;
            }
            int s;
            if (prev >= 0 && next >= 0) {
                // between next and prev in cyclic forward order -> left
                const int rel = (x - pn + k) % k;
                const int rel_prev = (pp - pn + k) % k;
                s = (rel > 0 && rel < rel_prev) ? 0 : 1;
            } else if (next >= 0) {
                s = x > pn ? 0 : 1; // path start: after the outgoing edge -> left
            } else {
                s = x < pp ? 0 : 1; // path end: before the incoming edge -> left
            }
            side[i][w] = s;
        }
    }

    // cut graph: non-path vertices keep their id; path vertex i becomes
    // n + 2i (left copy) and n + 2i + 1 (right copy).
    const int cut_n = n + 2 * m;
    std::vector<std::vector<std::pair<int, double>>> adj(cut_n);
    auto add = [&](int a, int b, double len) {
        adj[a].push_back({b, len});
        adj[b].push_back({a, len});
    };
    auto copy_of = [&](int i, int s) { return n + 2 * i + s; };

    for (std::size_t e = 0; e < sub.edges().size(); ++e) {
        const int u = sub.edges()[e][0];
        const int v = sub.edges()[e][1];
        const double len = sub.edge_lengths()[e];
        const int iu = path_pos[u];
        const int iv = path_pos[v];
        if (iu < 0 && iv < 0) {
            add(u, v, len);
        } else if (iu >= 0 && iv < 0) {
            add(copy_of(iu, side[iu].at(v)), v, len);
        } else if (iu < 0 && iv >= 0) {
            add(u, copy_of(iv, side[iv].at(u)), len);
        } else if (std::abs(iu - iv) == 1) {
            add(copy_of(iu, 0), copy_of(iv, 0), len);
            add(copy_of(iu, 1), copy_of(iv, 1), len);
        } else {
            add(copy_of(iu, side[iu].at(v)), copy_of(iv, side[iv].at(u)), len);
        }
    }

    const double inf = std::numeric_limits<double>::infinity();
    CutCandidate best;
    best.length = inf;
    for (int i = 0; i < m; ++i) {
        const int src = copy_of(i, 0);
        const int dst = copy_of(i, 1);
        std::vector<double> dist(cut_n, inf);
        std::vector<int> parent(cut_n, -1);
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        dist[src] = 0.0;
        heap.push({0.0, src});
        while (!heap.empty()) {
            const auto [d, v] = heap.top();
            heap.pop();
            if (d > dist[v]) {
                continue;
            }
            if (v == dst) {
                break;
            }
            for (const auto& [w, len] : adj[v]) {
                if (d + len < dist[w]) {
                    dist[w] = d + len;
                    parent[w] = v;
                    heap.push({d + len, w});
                }
            }
        }
        if (dist[dst] >= best.length) {
            continue;
        }
        std::vector<int> cyc;
        for (int v = dst; v >= 0; v = parent[v]) {
            const int sub_id = v < n ? v : path[(v - n) / 2];
            cyc.push_back(to_orig[sub_id]);
        }
        cyc.pop_back(); // src and dst map to the same vertex
        std::unordered_set<int> uniq(cyc.begin(), cyc.end());
        if (uniq.size() != cyc.size()) {
            continue; // not simple
        }
        best.length = dist[dst];
        best.cycle = std::move(cyc);
    }
    if (best.cycle.empty()) {
        return std::nullopt;
    }
    return best;
}

std::optional<CutCandidate> essential_cycle_search(const TriMesh& mesh,
                                                   const std::vector<int>& rim,
                                                   const std::string& hole_label) {
    const auto dring = multi_source_distance(mesh, rim);
    std::unordered_set<int> rim_set(rim.begin(), rim.end());

    double obstacle = std::numeric_limits<double>::infinity();
    for (const auto& [name, verts] : mesh.labels()) {
        if (name == hole_label || (name.rfind("hole", 0) != 0 && name.rfind("e", 0) != 0)) {
            continue;
        }
        for (int v : verts) {
            if (!rim_set.count(v)) {
                obstacle = std::min(obstacle, dring[v]);
            }
        }
    }
    for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
        if (mesh.is_boundary_vertex(static_cast<int>(v)) && !rim_set.count(static_cast<int>(v)) &&
            dring[v] > 0.0) {
            // other boundary loops (including the outer rim)
            obstacle = std::min(obstacle, dring[v]);
        }
    }
    double rho = std::isinf(obstacle)
                     ? 0.5 * *std::max_element(dring.begin(), dring.end())
                     : 0.5 * obstacle;

    // annular submesh around the rim
    std::vector<char> keep_tri(mesh.triangles().size(), 0);
    bool any = false;
    for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
        const auto& tri = mesh.triangles()[t];
        if (dring[tri[0]] <= rho && dring[tri[1]] <= rho && dring[tri[2]] <= rho) {
            keep_tri[t] = 1;
            any = true;
        }
    }
    if (!any) {
        return std::nullopt;
    }

    TriMesh::Input in;
    std::vector<int> to_sub(mesh.vertex_count(), -1);
    std::vector<int> to_orig;
    for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
        if (!keep_tri[t]) {
            continue;
        }
        std::array<int, 3> tri;
        for (int i = 0; i < 3; ++i) {
            const int v = mesh.triangles()[t][i];
            if (to_sub[v] < 0) {
                to_sub[v] = static_cast<int>(to_orig.size());
                to_orig.push_back(v);
            }
            tri[i] = to_sub[v];
        }
        in.triangles.push_back(tri);
    }
    in.vertex_count = to_orig.size();
    std::unordered_set<std::uint64_t> edge_seen;
    for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
        if (!keep_tri[t]) {
            continue;
        }
        for (int i = 0; i < 3; ++i) {
            const int u = mesh.triangles()[t][i];
            const int v = mesh.triangles()[t][(i + 1) % 3];
            const auto key = ekey(to_sub[u], to_sub[v]);
            if (edge_seen.insert(key).second) {
                in.edge_lengths.emplace_back(to_sub[u], to_sub[v],
                                             mesh.edge_length(u, v));
            }
        }
    }
    TriMesh sub = TriMesh::build(std::move(in)); // may throw on ragged annuli

    // cut path: from a rim vertex to the nearest vertex of a different
    // boundary loop of the submesh
    int start = -1;
    for (int v : rim) {
        if (to_sub[v] >= 0) {
            start = to_sub[v];
            break;
        }
    }
    if (start < 0) {
        return std::nullopt;
    }
    std::vector<char> sub_rim(sub.vertex_count(), 0);
    for (int v : rim) {
        if (to_sub[v] >= 0) {
            sub_rim[to_sub[v]] = 1;
        }
    }

    const auto& adj = sub.adjacency();
    std::vector<double> dist(sub.vertex_count(),
                             std::numeric_limits<double>::infinity());
    std::vector<int> parent(sub.vertex_count(), -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[start] = 0.0;
    heap.push({0.0, start});
    int goal = -1;
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) {
            continue;
        }
        if (sub.is_boundary_vertex(v) && !sub_rim[v]) {
            goal = v;
            break;
        }
        for (const auto& [w, len] : adj[v]) {
            if (d + len < dist[w]) {
                dist[w] = d + len;
                parent[w] = v;
                heap.push({d + len, w});
            }
        }
    }
    if (goal < 0) {
        return std::nullopt;
    }
    std::vector<int> path;
    for (int v = goal; v >= 0; v = parent[v]) {
        path.push_back(v);
    }
    std::reverse(path.begin(), path.end()); // starts on the rim

    return cut_and_search(sub, to_orig, path);
}

} // namespace

SurroundingCurve mark_surrounding_curve(const TriMesh& mesh, const std::string& hole_label) {
    const auto& lab = mesh.label(hole_label);
    if (lab.empty()) {
        throw std::invalid_argument("hole label '" + hole_label + "' is empty");
    }

    SurroundingCurve out;
    if (lab.size() == 1) {
        // puncture: its one-ring is the surrounding cycle
        out.cycle = mesh.ordered_neighbors(lab[0]);
        if (out.cycle.size() < 3 || mesh.is_boundary_vertex(lab[0])) {
            throw std::invalid_argument("puncture vertex has no interior one-ring");
        }
        out.length = cycle_length(mesh, out.cycle);
        out.separates = check_separation(mesh, out.cycle, hole_label);
        return out;
    }

    std::unordered_set<int> lab_set(lab.begin(), lab.end());
    const std::vector<int>* rim = nullptr;
    auto loops = mesh.boundary_loops();
    for (const auto& loop : loops) {
        bool all = loop.size() >= 3;
        for (int v : loop) {
            if (!lab_set.count(v)) {
                all = false;
                break;
            }
        }
        if (all) {
            rim = &loop;
            break;
        }
    }
    if (rim == nullptr) {
        throw std::invalid_argument("label '" + hole_label +
                                    "' does not mark a hole rim loop");
    }

    out.cycle = *rim;
    out.length = cycle_length(mesh, *rim);

    try {
        const auto found = essential_cycle_search(mesh, *rim, hole_label);
        if (found && found->length < out.length &&
            check_separation(mesh, found->cycle, hole_label)) {
            out.cycle = found->cycle;
            out.length = found->length;
        }
    } catch (const std::exception&) {
        // ragged annulus; the rim itself is a valid answer
    }
    out.separates = check_separation(mesh, out.cycle, hole_label);
    return out;
}

TriMesh glue_boundary_loops(const TriMesh& mesh, const std::string& label_a,
                            const std::string& label_b) {
    const auto& ring_a = mesh.label(label_a);
    const auto& ring_b = mesh.label(label_b);
    const int m = static_cast<int>(ring_a.size());
    if (m < 3 || ring_b.size() != ring_a.size()) {
        throw std::invalid_argument("boundary loops must have equal size >= 3");
    }
    {
        std::unordered_set<int> sa(ring_a.begin(), ring_a.end());
        for (int v : ring_b) {
            if (sa.count(v)) {
                throw std::invalid_argument("boundary loops overlap");
            }
        }
        for (int i = 0; i < m; ++i) {
            if (mesh.edge_index(ring_a[i], ring_a[(i + 1) % m]) < 0 ||
                mesh.edge_index(ring_b[i], ring_b[(i + 1) % m]) < 0) {
                throw std::invalid_argument("labels are not ordered boundary cycles");
            }
        }
    }

    auto attempt = [&](bool reversed) {
        MergeMap merge(mesh.vertex_count());
        for (int j = 0; j < m; ++j) {
            const int b = reversed ? ring_b[(m - j) % m] : ring_b[j];
            merge.unite(ring_a[j], b);
        }
        std::vector<int> compact(mesh.vertex_count(), -1);
        int next_id = 0;
        for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
            const int root = merge.find(static_cast<int>(v));
            if (compact[root] < 0) {
                compact[root] = next_id++;
            }
            compact[v] = compact[root];
        }
        TriMesh::Input in;
        in.vertex_count = static_cast<std::size_t>(next_id);
        for (const auto& tri : mesh.triangles()) {
            in.triangles.push_back({compact[tri[0]], compact[tri[1]], compact[tri[2]]});
        }
        std::unordered_map<std::uint64_t, double> edge_len;
        for (std::size_t e = 0; e < mesh.edges().size(); ++e) {
            const int u = compact[mesh.edges()[e][0]];
            const int v = compact[mesh.edges()[e][1]];
            const double len = mesh.edge_lengths()[e];
            const auto key = ekey(u, v);
            const auto it = edge_len.find(key);
            if (it == edge_len.end()) {
                edge_len[key] = len;
            } else if (std::abs(it->second - len) > 1e-9 * len) {
                throw std::invalid_argument("loops are not metrically compatible");
            }
        }
        for (const auto& [key, len] : edge_len) {
            in.edge_lengths.emplace_back(static_cast<int>(key >> 32),
                                         static_cast<int>(key & 0xffffffffu), len);
        }
        for (const auto& [name, verts] : mesh.labels()) {
            std::vector<int> mapped;
            std::unordered_set<int> seen;
            for (int v : verts) {
                const int w = compact[v];
                if (seen.insert(w).second) {
                    mapped.push_back(w);
                }
            }
            in.labels[name] = std::move(mapped);
        }
        int glue_idx = 0;
        while (in.labels.count("glue" + std::to_string(glue_idx))) {
            ++glue_idx;
        }
        std::vector<int> glued;
        for (int v : ring_a) {
            glued.push_back(compact[v]);
        }
        in.labels["glue" + std::to_string(glue_idx)] = std::move(glued);
        return TriMesh::build(std::move(in));
    };

    try {
        return attempt(true);
    } catch (const std::invalid_argument&) {
        return attempt(false);
    }
}

TriMesh remove_labeled_region(const TriMesh& mesh, const std::string& label) {
    const auto& verts = mesh.label(label);
    std::vector<char> in_set(mesh.vertex_count(), 0);
    for (int v : verts) {
        in_set[v] = 1;
    }
    std::vector<char> remove(mesh.triangles().size(), 0);
    for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
        const auto& tri = mesh.triangles()[t];
        if (in_set[tri[0]] && in_set[tri[1]] && in_set[tri[2]]) {
            remove[t] = 1;
        }
    }
    return mesh.remove_triangles(remove);
}

} // namespace gromet
