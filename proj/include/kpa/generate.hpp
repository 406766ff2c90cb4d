#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kpa/kgraph.hpp"

namespace kpa {

struct GeneratorConfig {
    std::size_t rank = 2;
    std::size_t vertices = 3;
    /// Each color gets a uniformly drawn number of edges in [min_edges, max_edges].
    std::size_t min_edges = 1;
    std::size_t max_edges = 3;
    std::uint64_t seed = 1;
    std::size_t max_attempts = 20000;
};

namespace detail {

using Matrix = std::vector<std::vector<std::uint32_t>>;

inline Matrix adjacency(std::size_t n, const std::vector<Edge>& edges, std::uint32_t color) {
    Matrix m(n, std::vector<std::uint32_t>(n, 0));
    for (const auto& e : edges)
        if (e.color == color) ++m[e.range][e.source];
    return m;
}

inline Matrix product(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline std::string color_letter(std::uint32_t color) {
    return color < 26 ? std::string(1, static_cast<char>('a' + color)) : "c" + std::to_string(color + 1) + "_";
}

}  // namespace detail

/// A seeded random k-graph. The skeleton is resampled until the adjacency
/// matrices commute; squares are a random bijection per endpoint pair, resampled
/// for k >= 3 until the cube condition holds.
inline KGraph generate_graph(const GeneratorConfig& cfg) {
    if (cfg.rank == 0 || cfg.vertices == 0) throw Error("generator needs rank and vertex count at least 1");
    if (cfg.min_edges > cfg.max_edges) throw Error("generator: min_edges exceeds max_edges");
    std::mt19937_64 rng(cfg.seed);
    const std::size_t n = cfg.vertices, k = cfg.rank;
    std::uniform_int_distribution<std::size_t> pick_vertex(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_count(cfg.min_edges, cfg.max_edges);

    for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (std::uint32_t c = 0; c < k; ++c) {
            const std::size_t count = pick_count(rng);
            for (std::size_t t = 0; t < count; ++t)
                edges.push_back(Edge{detail::color_letter(c) + std::to_string(t), c,
                                     static_cast<VertexId>(pick_vertex(rng)),
                                     static_cast<VertexId>(pick_vertex(rng))});
        }
        std::vector<detail::Matrix> adj;
        for (std::uint32_t c = 0; c < k; ++c) adj.push_back(detail::adjacency(n, edges, c));
        bool commute = true;
        for (std::uint32_t i = 0; i < k && commute; ++i)
            for (std::uint32_t j = i + 1; j < k && commute; ++j)
                commute = detail::product(adj[i], adj[j]) == detail::product(adj[j], adj[i]);
        if (!commute) continue;

        for (int assignment = 0; assignment < (k >= 3 ? 50 : 1); ++assignment) {
            GraphBuilder b(k);
            for (std::size_t v = 0; v < n; ++v) b.vertex("v" + std::to_string(v));
            auto vname = [](VertexId v) { return "v" + std::to_string(v); };
            for (const auto& e : edges) b.edge(e.name, e.color + 1, vname(e.source), vname(e.range));
            for (std::uint32_t i = 0; i < k; ++i)
                for (std::uint32_t j = i + 1; j < k; ++j) {
                    // (range, source) -> composable pairs in each color order.
                    std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<std::size_t, std::size_t>>> ij, ji;
                    for (std::size_t f = 0; f < edges.size(); ++f)
                        for (std::size_t g = 0; g < edges.size(); ++g) {
                            if (edges[f].source != edges[g].range) continue;
                            auto key = std::pair{edges[f].range, edges[g].source};
                            if (edges[f].color == i && edges[g].color == j) ij[key].push_back({f, g});
                            if (edges[f].color == j && edges[g].color == i) ji[key].push_back({f, g});
                        }
                    for (auto& [key, pairs] : ij) {
                        auto& other = ji[key];
                        std::shuffle(other.begin(), other.end(), rng);
                        for (std::size_t t = 0; t < pairs.size(); ++t)
                            b.square(edges[pairs[t].first].name, edges[pairs[t].second].name,
                                     edges[other[t].first].name, edges[other[t].second].name);
                    }
                }
            try {
                return b.build();
            } catch (const FactorizationError&) {
                if (k < 3) throw;
            }
        }
    }
    throw Error("generator: no valid graph found within the attempt limit");
}

}  // namespace kpa
