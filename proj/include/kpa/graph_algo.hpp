#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "kpa/kgraph.hpp"

namespace kpa {

/// Raw edge word of a shortest walk (range `from`, source `to`); empty when
/// from == to. An empty color mask allows every color.
inline std::optional<std::vector<EdgeId>> shortest_word(const KGraph& g, VertexId from, VertexId to,
                                                        const std::vector<bool>& colors = {},
                                                        const std::function<bool(VertexId)>& allowed = {}) {
    if (from == to) return std::vector<EdgeId>{};
    auto color_ok = [&](std::uint32_t c) { return colors.empty() || colors[c]; };
    std::vector<std::optional<EdgeId>> via(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (std::uint32_t c = 0; c < g.rank(); ++c) {
            if (!color_ok(c)) continue;
            for (EdgeId e : g.edges_into(u, c)) {
                VertexId w = g.edge(e).source;
                if (seen[w] || (allowed && !allowed(w))) continue;
                seen[w] = true;
                via[w] = e;
                if (w == to) {
                    std::vector<EdgeId> word;
                    for (VertexId x = to; x != from; x = g.edge(*via[x]).range) word.push_back(*via[x]);
                    std::reverse(word.begin(), word.end());
                    return word;
                }
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

/// Shortest skeleton walk with range `from` and source `to`, as a path.
inline std::optional<Path> shortest_walk(const KGraph& g, VertexId from, VertexId to,
                                         const std::vector<bool>& colors = {},
                                         const std::function<bool(VertexId)>& allowed = {}) {
    auto word = shortest_word(g, from, to, colors, allowed);
    if (!word) return std::nullopt;
    if (word->empty()) return g.vertex_path(from);
    return g.path_from_word(*word);
}

/// Strongly connected components of the skeleton restricted to a color mask,
/// each sorted, listed by smallest member.
inline std::vector<std::vector<VertexId>> strongly_connected_components(const KGraph& g,
                                                                        const std::vector<bool>& colors) {
    const std::size_t n = g.vertex_count();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> out;
    int counter = 0;
    std::function<void(VertexId)> visit = [&](VertexId u) {
        index[u] = low[u] = counter++;
        stack.push_back(u);
        on_stack[u] = true;
        for (std::uint32_t c = 0; c < g.rank(); ++c) {
            if (!colors[c]) continue;
            for (EdgeId e : g.edges_into(u, c)) {
                VertexId w = g.edge(e).source;
                if (index[w] < 0) {
                    visit(w);
                    low[u] = std::min(low[u], low[w]);
                } else if (on_stack[w]) {
                    low[u] = std::min(low[u], index[w]);
                }
            }
        }
        if (low[u] == index[u]) {
            std::vector<VertexId> comp;
            VertexId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != u);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    };
    for (VertexId v = 0; v < n; ++v)
        if (index[v] < 0) visit(v);
    std::sort(out.begin(), out.end());
    return out;
}

/// Edges of the allowed colors with both endpoints in `comp`.
inline std::vector<EdgeId> internal_edges(const KGraph& g, const std::vector<VertexId>& comp,
                                          const std::vector<bool>& colors) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (colors[ed.color] && std::binary_search(comp.begin(), comp.end(), ed.range) &&
            std::binary_search(comp.begin(), comp.end(), ed.source))
            out.push_back(e);
    }
    return out;
}

inline bool is_acyclic(const KGraph& g) {
    const std::vector<bool> all(g.rank(), true);
    for (const auto& comp : strongly_connected_components(g, all))
        if (!internal_edges(g, comp, all).empty()) return false;
    return true;
}

}  // namespace kpa
