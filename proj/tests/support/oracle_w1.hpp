#pragma once

// Test-only transport oracle, independent of the cumulative-median algorithm:
// minimizes cost over all vertices of the transportation polytope. Basic
// feasible solutions correspond to spanning trees of the bipartite support
// graph; the tree flows are forced by leaf elimination. Exponential in the
// support sizes, fine for the tiny grids used in tests.

#include "equivart/circle_measure.hpp"

#include <optional>
#include <vector>

namespace equivart::testing {

inline Rational w1_bruteforce_turns(const CircleMeasure& mu, const CircleMeasure& nu) {
    const auto& rows = mu.atoms();
    const auto& cols = nu.atoms();
    const int p = static_cast<int>(rows.size());
    const int q = static_cast<int>(cols.size());
    const int edges = p * q;
    const int need = p + q - 1;

    std::vector<std::pair<int, int>> edge(edges);
    std::vector<Rational> cost(edges);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            edge[i * q + j] = {i, j};
            cost[i * q + j] = geodesic_distance_turns(rows[i].angle, cols[j].angle);
        }

    std::optional<Rational> best;
    std::vector<int> comb(need);
    for (int i = 0; i < need; ++i) comb[i] = i;

    auto advance = [&]() {
        int pos = need - 1;
        while (pos >= 0 && comb[pos] == edges - need + pos) --pos;
        if (pos < 0) return false;
        ++comb[pos];
        for (int i = pos + 1; i < need; ++i) comb[i] = comb[i - 1] + 1;
        return true;
    };

    do {
        // Spanning tree on p + q nodes? Check by leaf elimination directly:
        // degrees, then peel leaves computing forced flows.
        std::vector<int> degree(p + q, 0);
        for (int e : comb) {
            degree[edge[e].first] += 1;
            degree[p + edge[e].second] += 1;
        }
        bool connected_tree = true;
        for (int v = 0; v < p + q; ++v)
            if (degree[v] == 0) connected_tree = false;
        if (!connected_tree) continue;

        std::vector<Rational> remaining(p + q);
        for (int i = 0; i < p; ++i) remaining[i] = rows[i].weight;
        for (int j = 0; j < q; ++j) remaining[p + j] = cols[j].weight;

        std::vector<bool> used(need, false);
        std::vector<Rational> flow(need, Rational(0));
        bool feasible = true;
        for (int step = 0; step < need; ++step) {
            int leaf_edge = -1;
            for (int e = 0; e < need; ++e) {
                if (used[e]) continue;
                int a = edge[comb[e]].first;
                int b = p + edge[comb[e]].second;
                if (degree[a] == 1 || degree[b] == 1) {
                    leaf_edge = e;
                    break;
                }
            }
            if (leaf_edge < 0) {  // cycle among remaining edges: not a tree
                feasible = false;
                break;
            }
            int a = edge[comb[leaf_edge]].first;
            int b = p + edge[comb[leaf_edge]].second;
            int leaf = degree[a] == 1 ? a : b;
            Rational f = remaining[leaf];
            if (f < 0) {
                feasible = false;
                break;
            }
            flow[leaf_edge] = f;
            remaining[a] -= f;
            remaining[b] -= f;
            used[leaf_edge] = true;
            degree[a] -= 1;
            degree[b] -= 1;
        }
        if (!feasible) continue;
        for (int v = 0; v < p + q; ++v)
            if (remaining[v] != 0) feasible = false;
        if (!feasible) continue;

        Rational total = 0;
        for (int e = 0; e < need; ++e) total += flow[e] * cost[comb[e]];
        if (!best || total < *best) best = total;
    } while (advance());

    if (!best) throw std::logic_error("no feasible transport plan found");
    return *best;
}

}  // namespace equivart::testing
