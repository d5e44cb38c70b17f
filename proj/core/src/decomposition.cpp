#include "gromet/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace gromet {

namespace {

// Connected components of the host graph with a vertex subset removed.
std::vector<int> components_without(const WeightedGraph& g,
                                    const std::vector<char>& removed) {
    std::vector<int> comp(g.n, -1);
    int c = 0;
    for (int s = 0; s < g.n; ++s) {
        if (removed[s] || comp[s] >= 0) {
            continue;
        }
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const auto& [w, len] : g.adj[v]) {
                (void)len;
                if (!removed[w] && comp[w] < 0) {
                    comp[w] = c;
                    q.push(w);
                }
            }
        }
        ++c;
    }
    return comp;
}

// Induced subgraph on a piece, with the id map back to the host.
WeightedGraph induced(const WeightedGraph& g, const std::vector<int>& piece,
                      std::vector<int>* to_host) {
    std::vector<int> to_sub(g.n, -1);
    for (std::size_t i = 0; i < piece.size(); ++i) {
        to_sub[piece[i]] = static_cast<int>(i);
    }
    WeightedGraph sub;
    sub.n = static_cast<int>(piece.size());
    sub.adj.resize(sub.n);
    for (int v : piece) {
        for (const auto& [w, len] : g.adj[v]) {
            if (to_sub[w] > to_sub[v]) {
                sub.add_edge(to_sub[v], to_sub[w], len);
            }
        }
    }
    *to_host = piece;
    return sub;
}

} // namespace

DecompositionReport validate_tree_decomposition(const DecompositionSpec& spec,
                                                const WeightedGraph& host,
                                                std::uint64_t delta_budget,
                                                std::uint64_t seed) {
    DecompositionReport rep;
    if (spec.pieces.empty()) {
        rep.reason = "no pieces";
        return rep;
    }
    std::vector<char> covered(host.n, 0);
    for (const auto& piece : spec.pieces) {
        for (int v : piece) {
            if (v < 0 || v >= host.n) {
                throw std::invalid_argument("piece vertex out of range");
            }
            covered[v] = 1;
        }
    }
    for (int v = 0; v < host.n; ++v) {
        if (!covered[v]) {
            rep.reason = "pieces do not cover vertex " + std::to_string(v);
            return rep;
        }
    }

    const std::size_t np = spec.pieces.size();
    std::vector<std::vector<int>> piece_maps(np);
    std::vector<WeightedGraph> subs(np);
    for (std::size_t p = 0; p < np; ++p) {
        subs[p] = induced(host, spec.pieces[p], &piece_maps[p]);
        if (!subs[p].connected()) {
            rep.reason = "piece " + std::to_string(p) + " is not connected";
            return rep;
        }
    }

    // intrinsic distances inside each piece, on demand per intersection
    auto intrinsic_diameter = [&](std::size_t p, const std::vector<int>& subset) {
        std::vector<int> to_sub(host.n, -1);
        for (std::size_t i = 0; i < spec.pieces[p].size(); ++i) {
            to_sub[spec.pieces[p][i]] = static_cast<int>(i);
        }
        double diam = 0.0;
        for (int v : subset) {
            const auto dist = subs[p].dijkstra(to_sub[v]);
            for (int w : subset) {
                diam = std::max(diam, dist[to_sub[w]]);
            }
        }
        return diam;
    };

    rep.k_measured = 0.0;
    for (std::size_t p = 0; p < np; ++p) {
        std::unordered_set<int> in_p(spec.pieces[p].begin(), spec.pieces[p].end());
        double sum = 0.0;
        for (std::size_t q = 0; q < np; ++q) {
            if (q == p) {
                continue;
            }
            std::vector<int> eta;
            for (int v : spec.pieces[q]) {
                if (in_p.count(v)) {
                    eta.push_back(v);
                }
            }
            if (eta.empty()) {
                continue;
            }
            // separation: removing eta must disconnect the host with the two
            // piece remainders in distinct component sets
            std::vector<char> removed(host.n, 0);
            for (int v : eta) {
                removed[v] = 1;
            }
            const auto comp = components_without(host, removed);
            std::unordered_set<int> comp_p, comp_q;
            for (int v : spec.pieces[p]) {
                if (!removed[v]) {
                    comp_p.insert(comp[v]);
                }
            }
            std::unordered_set<int> eta_set(eta.begin(), eta.end());
            for (int v : spec.pieces[q]) {
                if (!removed[v] && !eta_set.count(v)) {
                    comp_q.insert(comp[v]);
                }
            }
            bool overlap = false;
            for (int c : comp_p) {
                overlap = overlap || comp_q.count(c) > 0;
            }
            if (overlap) {
                rep.reason = "intersection of pieces " + std::to_string(p) + " and " +
                             std::to_string(q) + " does not separate them";
                return rep;
            }
            sum += intrinsic_diameter(p, eta);
        }
        rep.k_measured = std::max(rep.k_measured, sum);
    }

    for (std::size_t p = 0; p < np; ++p) {
        const FiniteMetric mp = FiniteMetric::from_graph(subs[p]);
        const DeltaMode mode = mp.size() <= 120 ? DeltaMode::exact : DeltaMode::sampled;
        rep.delta_pieces.push_back(
            delta_four_point(mp, mode, delta_budget, seed + p).delta);
    }
    {
        const FiniteMetric mh = FiniteMetric::from_graph(host);
        const DeltaMode mode = mh.size() <= 120 ? DeltaMode::exact : DeltaMode::sampled;
        rep.delta_host = delta_four_point(mh, mode, delta_budget, seed).delta;
    }

    rep.valid = rep.k_measured <= spec.k_claimed;
    if (!rep.valid) {
        rep.reason = "k_measured exceeds k_claimed";
    }
    return rep;
}

} // namespace gromet
