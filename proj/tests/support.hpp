#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cotan/graph.hpp"

namespace cotan::testing {

// Pair slots of a labeled graph on n vertices: all i<j first, then the n
// loops when requested.
inline std::vector<std::pair<int, int>> pair_slots(int n, bool loops)
{
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            slots.emplace_back(i, j);
        }
    }
    if (loops) {
        for (int i = 0; i < n; ++i) {
            slots.emplace_back(i, i);
        }
    }
    return slots;
}

// Adjacency rows as bitmasks (loops excluded).
inline std::vector<std::uint32_t> adjacency_rows(int n, const std::vector<std::pair<int, int>>& slots,
                                                 std::uint64_t mask)
{
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t k = 0; k < slots.size(); ++k) {
        if ((mask >> k) & 1) {
            auto [i, j] = slots[k];
            if (i != j) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
        }
    }
    return adj;
}

inline bool connected_rows(const std::vector<std::uint32_t>& adj)
{
    const int n = static_cast<int>(adj.size());
    if (n == 0) {
        return false;
    }
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v) {
            if ((frontier >> v) & 1) {
                next |= adj[v];
            }
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

// Induced k-cycle on some k-subset, by checking that the subset induces a
// connected 2-regular graph.
inline bool has_induced_cycle(const std::vector<std::uint32_t>& adj, int k)
{
    const int n = static_cast<int>(adj.size());
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != k) {
            continue;
        }
        bool regular = true;
        int first = -1;
        for (int v = 0; v < n && regular; ++v) {
            if ((s >> v) & 1) {
                regular = __builtin_popcount(adj[v] & s) == 2;
                first = first < 0 ? v : first;
            }
        }
        if (!regular) {
            continue;
        }
        std::uint32_t seen = 1u << first;
        std::uint32_t frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v) {
                if ((frontier >> v) & 1) {
                    next |= adj[v] & s;
                }
            }
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == s) {
            return true;
        }
    }
    return false;
}

inline std::vector<std::string> vertex_names(int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        names.push_back("a" + std::to_string(i));
    }
    return names;
}

inline Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& slots, std::uint64_t mask)
{
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k) {
        if ((mask >> k) & 1) {
            edges.push_back({static_cast<Vertex>(slots[k].first), static_cast<Vertex>(slots[k].second)});
        }
    }
    return Graph(vertex_names(n), edges);
}

// Calls f(graph, adjacency rows) for every labeled simple connected graph on
// exactly n vertices.
inline void for_each_connected(int n, const std::function<void(const Graph&, const std::vector<std::uint32_t>&)>& f)
{
    auto slots = pair_slots(n, false);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        auto adj = adjacency_rows(n, slots, mask);
        if (connected_rows(adj)) {
            f(graph_from_mask(n, slots, mask), adj);
        }
    }
}

}  // namespace cotan::testing
