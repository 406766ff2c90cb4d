#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kpa/degree.hpp"
#include "kpa/errors.hpp"

namespace kpa {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// A skeleton edge; `color` is 0-based internally (the text format is 1-based).
struct Edge {
    std::string name;
    std::uint32_t color = 0;
    VertexId range = 0;
    VertexId source = 0;
};

/// Records first_outer * first_inner == second_outer * second_inner, where the
/// outer edge of each factorization is the one on the range side and
/// color(first_outer) == color(second_inner) < color(first_inner) == color(second_outer).
struct Square {
    EdgeId first_outer = 0;
    EdgeId first_inner = 0;
    EdgeId second_outer = 0;
    EdgeId second_inner = 0;
};

/// A morphism in color-ordered normal form. The word reads range to source:
/// word[t].source == word[t+1].range, colors nondecreasing.
struct Path {
    VertexId range = 0;
    VertexId source = 0;
    DegreeVector degree;
    std::vector<EdgeId> word;

    bool is_vertex() const noexcept { return word.empty(); }

    friend bool operator==(const Path& a, const Path& b) {
        return a.range == b.range && a.source == b.source && a.word == b.word;
    }
    // Total degree first, so "minimal" witnesses are minimal in degree.
    friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
        if (auto c = a.degree.total() <=> b.degree.total(); c != 0) return c;
        if (auto c = a.degree <=> b.degree; c != 0) return c;
        if (auto c = a.range <=> b.range; c != 0) return c;
        if (auto c = a.word <=> b.word; c != 0) return c;
        return a.source <=> b.source;
    }
};

class GraphBuilder;

/// A finite k-graph presented by its colored 1-skeleton and factorization
/// squares. Immutable once built; every instance has passed validation.
class KGraph {
public:
    std::size_t rank() const noexcept { return rank_; }
    std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Square>& squares() const noexcept { return squares_; }
    const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
    const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }

    std::optional<VertexId> find_vertex(const std::string& name) const {
        auto it = vertex_index_.find(name);
        if (it == vertex_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<EdgeId> find_edge(const std::string& name) const {
        auto it = edge_index_.find(name);
        if (it == edge_index_.end()) return std::nullopt;
        return it->second;
    }

    /// Edges of the given color whose range is v (the set v Lambda^{e_color}).
    const std::vector<EdgeId>& edges_into(VertexId v, std::uint32_t color) const {
        return into_.at(v).at(color);
    }
    bool receives(VertexId v, std::uint32_t color) const { return !edges_into(v, color).empty(); }
    bool receives_any(VertexId v) const {
        for (std::uint32_t c = 0; c < rank_; ++c)
            if (receives(v, c)) return true;
        return false;
    }

    std::size_t edges_of_color(std::uint32_t color) const {
        return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(),
                                                      [&](const Edge& e) { return e.color == color; }));
    }

    // --- paths -------------------------------------------------------------

    Path vertex_path(VertexId v) const {
        if (v >= vertex_count()) throw Error("vertex id out of range");
        return Path{v, v, DegreeVector::zero(rank_), {}};
    }
    Path edge_path(EdgeId e) const {
        const Edge& ed = edges_.at(e);
        return Path{ed.range, ed.source, DegreeVector::unit(rank_, ed.color), {e}};
    }

    /// Builds a path from any composable edge word; the word is renormalized.
    Path path_from_word(const std::vector<EdgeId>& word) const {
        if (word.empty()) throw ComposabilityError("empty word needs a vertex");
        for (std::size_t t = 0; t + 1 < word.size(); ++t)
            if (edges_.at(word[t]).source != edges_.at(word[t + 1]).range)
                throw ComposabilityError("edges " + edges_[word[t]].name + " and " +
                                         edges_[word[t + 1]].name + " are not composable");
        Path p;
        p.range = edges_.at(word.front()).range;
        p.source = edges_.at(word.back()).source;
        p.degree = DegreeVector::zero(rank_);
        for (EdgeId e : word) p.degree[edges_[e].color] += 1;
        p.word = reordered(word, sorted_colors(word));
        return p;
    }

    /// The composite lambda*mu; requires r(mu) == s(lambda).
    Path compose(const Path& lambda, const Path& mu) const {
        if (mu.range != lambda.source)
            throw ComposabilityError("cannot compose: source of first path is " +
                                     vertex_name(lambda.source) + ", range of second is " +
                                     vertex_name(mu.range));
        if (lambda.is_vertex()) return mu;
        if (mu.is_vertex()) return lambda;
        std::vector<EdgeId> word = lambda.word;
        word.insert(word.end(), mu.word.begin(), mu.word.end());
        Path p{lambda.range, mu.source, lambda.degree + mu.degree, {}};
        p.word = reordered(word, sorted_colors(word));
        return p;
    }

    /// (lambda(0,m), lambda(m,d(lambda))).
    std::pair<Path, Path> factorize(const Path& lambda, const DegreeVector& m) const {
        if (!m.le(lambda.degree))
            throw DegreeError("factorization degree " + m.str() + " exceeds " + lambda.degree.str());
        if (m.is_zero()) return {vertex_path(lambda.range), lambda};
        if (m == lambda.degree) return {lambda, vertex_path(lambda.source)};
        std::vector<std::uint32_t> target;
        for (std::uint32_t c = 0; c < rank_; ++c) target.insert(target.end(), m[c], c);
        const std::size_t split = target.size();
        for (std::uint32_t c = 0; c < rank_; ++c) target.insert(target.end(), lambda.degree[c] - m[c], c);
        std::vector<EdgeId> word = reordered(lambda.word, target);
        std::vector<EdgeId> head(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(split));
        std::vector<EdgeId> tail(word.begin() + static_cast<std::ptrdiff_t>(split), word.end());
        Path first{lambda.range, edges_[head.back()].source, m, std::move(head)};
        Path second{edges_[tail.front()].range, lambda.source, lambda.degree - m, std::move(tail)};
        return {std::move(first), std::move(second)};
    }

    /// lambda(p,q) for p <= q <= d(lambda).
    Path subpath(const Path& lambda, const DegreeVector& p, const DegreeVector& q) const {
        if (!p.le(q) || !q.le(lambda.degree))
            throw DegreeError("subpath needs " + p.str() + " <= " + q.str() + " <= " +
                              lambda.degree.str());
        Path prefix = factorize(lambda, q).first;
        return factorize(prefix, p).second;
    }

    /// The vertex lambda(p).
    VertexId vertex_at(const Path& lambda, const DegreeVector& p) const {
        return factorize(lambda, p).first.source;
    }

    /// All paths of degree exactly n, sorted, optionally filtered by endpoints.
    std::vector<Path> paths_of_degree(const DegreeVector& n, std::optional<VertexId> range_filter = {},
                                      std::optional<VertexId> source_filter = {}) const {
        std::vector<Path> out;
        std::vector<std::uint32_t> colors;
        for (std::uint32_t c = 0; c < rank_; ++c) colors.insert(colors.end(), n[c], c);
        std::vector<EdgeId> word;
        auto rec = [&](auto&& self, VertexId start, VertexId at, std::size_t pos) -> void {
            if (pos == colors.size()) {
                if (source_filter && at != *source_filter) return;
                out.push_back(Path{start, at, n, word});
                return;
            }
            for (EdgeId e : edges_into(at, colors[pos])) {
                word.push_back(e);
                self(self, start, edges_[e].source, pos + 1);
                word.pop_back();
            }
        };
        for (VertexId v = 0; v < vertex_count(); ++v) {
            if (range_filter && v != *range_filter) continue;
            rec(rec, v, v, 0);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// All paths with range v and degree <= bound, sorted.
    std::vector<Path> paths_up_to(VertexId v, const DegreeVector& bound) const {
        std::vector<Path> out;
        for (const auto& n : degrees_up_to(bound)) {
            auto ps = paths_of_degree(n, v);
            out.insert(out.end(), ps.begin(), ps.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// All lambda*alpha with d(alpha) == m.
    std::vector<Path> extensions(const Path& lambda, const DegreeVector& m) const {
        std::vector<Path> out;
        for (const auto& alpha : paths_of_degree(m, lambda.source)) out.push_back(compose(lambda, alpha));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// mu is lambda(0, d(mu)).
    bool has_prefix(const Path& lambda, const Path& mu) const {
        if (lambda.range != mu.range || !mu.degree.le(lambda.degree)) return false;
        return factorize(lambda, mu.degree).first == mu;
    }

    std::string path_str(const Path& p) const {
        if (p.is_vertex()) return vertex_name(p.range);
        std::string s;
        for (std::size_t t = 0; t < p.word.size(); ++t) {
            if (t) s += '.';
            s += edges_[p.word[t]].name;
        }
        return s;
    }

    /// Swaps an adjacent pair of differently colored edges using the square data.
    std::pair<EdgeId, EdgeId> flip(EdgeId x, EdgeId y) const {
        auto it = flips_.find(key(x, y));
        if (it == flips_.end())
            throw FactorizationError("no square for edge pair (" + edges_[x].name + ", " +
                                     edges_[y].name + ")");
        return it->second;
    }

    /// The unique word for the same morphism whose color sequence is `target`.
    std::vector<EdgeId> reordered(std::vector<EdgeId> word, const std::vector<std::uint32_t>& target) const {
        for (std::size_t p = 0; p < word.size(); ++p) {
            std::size_t q = p;
            while (q < word.size() && edges_[word[q]].color != target[p]) ++q;
            if (q == word.size()) throw DegreeError("target color sequence does not match word");
            for (std::size_t t = q; t > p; --t) {
                auto [a, b] = flip(word[t - 1], word[t]);
                word[t - 1] = a;
                word[t] = b;
            }
        }
        return word;
    }

private:
    friend class GraphBuilder;
    KGraph() = default;

    static std::uint64_t key(EdgeId x, EdgeId y) { return (static_cast<std::uint64_t>(x) << 32) | y; }

    std::vector<std::uint32_t> sorted_colors(const std::vector<EdgeId>& word) const {
        std::vector<std::uint32_t> c;
        c.reserve(word.size());
        for (EdgeId e : word) c.push_back(edges_[e].color);
        std::sort(c.begin(), c.end());
        return c;
    }

    std::size_t rank_ = 1;
    std::vector<std::string> vertex_names_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, EdgeId> edge_index_;
    std::vector<Square> squares_;
    std::vector<std::vector<std::vector<EdgeId>>> into_;
    std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> flips_;
};

using GraphPtr = std::shared_ptr<const KGraph>;

/// Accumulates skeleton data by name and validates it into a KGraph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t rank) : rank_(rank) {
        if (rank == 0) throw Error("rank must be at least 1");
    }

    std::size_t rank() const noexcept { return rank_; }

    GraphBuilder& vertex(const std::string& name) {
        if (std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end())
            throw Error("duplicate vertex '" + name + "'");
        vertices_.push_back(name);
        return *this;
    }

    /// `color` is 1-based, matching the text format.
    GraphBuilder& edge(const std::string& name, std::uint32_t color, const std::string& source,
                       const std::string& range) {
        edges_.push_back({name, color, source, range});
        return *this;
    }

    /// first_outer*first_inner == second_outer*second_inner.
    GraphBuilder& square(const std::string& f, const std::string& g, const std::string& g2,
                         const std::string& f2) {
        squares_.push_back({f, g, g2, f2});
        return *this;
    }

    KGraph build() const {
        KGraph k;
        k.rank_ = rank_;
        for (const auto& v : vertices_) {
            k.vertex_index_.emplace(v, static_cast<VertexId>(k.vertex_names_.size()));
            k.vertex_names_.push_back(v);
        }
        auto vid = [&](const std::string& name) {
            auto it = k.vertex_index_.find(name);
            if (it == k.vertex_index_.end()) throw Error("unknown vertex '" + name + "'");
            return it->second;
        };
        for (const auto& e : edges_) {
            if (k.edge_index_.count(e.name) || k.vertex_index_.count(e.name))
                throw Error("duplicate identifier '" + e.name + "'");
            if (e.color < 1 || e.color > rank_)
                throw Error("edge '" + e.name + "' has color " + std::to_string(e.color) +
                            " outside 1.." + std::to_string(rank_));
            k.edge_index_.emplace(e.name, static_cast<EdgeId>(k.edges_.size()));
            k.edges_.push_back(Edge{e.name, e.color - 1, vid(e.range), vid(e.source)});
        }
        k.into_.assign(k.vertex_names_.size(), std::vector<std::vector<EdgeId>>(rank_));
        for (EdgeId e = 0; e < k.edges_.size(); ++e) k.into_[k.edges_[e].range][k.edges_[e].color].push_back(e);

        auto eid = [&](const std::string& name) {
            auto it = k.edge_index_.find(name);
            if (it == k.edge_index_.end()) throw FactorizationError("square names unknown edge '" + name + "'");
            return it->second;
        };
        const auto& E = k.edges_;
        for (const auto& s : squares_) {
            Square sq{eid(s.f), eid(s.g), eid(s.g2), eid(s.f2)};
            const Edge &f = E[sq.first_outer], &g = E[sq.first_inner], &g2 = E[sq.second_outer],
                       &f2 = E[sq.second_inner];
            const std::string label = "square " + s.f + " " + s.g + " = " + s.g2 + " " + s.f2;
            if (f.color != f2.color || g.color != g2.color || f.color >= g.color)
                throw FactorizationError(label + ": needs color(f)=color(f') < color(g)=color(g')");
            if (f.source != g.range || g2.source != f2.range)
                throw FactorizationError(label + ": factors are not composable");
            if (f.range != g2.range || g.source != f2.source)
                throw FactorizationError(label + ": endpoints do not match");
            if (!k.flips_.emplace(KGraph::key(sq.first_outer, sq.first_inner),
                                  std::pair{sq.second_outer, sq.second_inner})
                     .second)
                throw FactorizationError("duplicate square for edge pair (" + s.f + ", " + s.g + ")");
            if (!k.flips_.emplace(KGraph::key(sq.second_outer, sq.second_inner),
                                  std::pair{sq.first_outer, sq.first_inner})
                     .second)
                throw FactorizationError("duplicate square for edge pair (" + s.g2 + ", " + s.f2 + ")");
            k.squares_.push_back(sq);
        }
        // Every composable pair of distinct colors must be covered.
        for (EdgeId x = 0; x < E.size(); ++x) {
            for (std::uint32_t c = 0; c < rank_; ++c) {
                if (c == E[x].color) continue;
                for (EdgeId y : k.into_[E[x].source][c])
                    if (!k.flips_.count(KGraph::key(x, y)))
                        throw FactorizationError("missing square for edge pair (" + E[x].name + ", " +
                                                 E[y].name + ")");
            }
        }
        if (rank_ >= 3) check_cubes(k);
        return k;
    }

private:
    struct EdgeSpec {
        std::string name;
        std::uint32_t color;
        std::string source, range;
    };
    struct SquareSpec {
        std::string f, g, g2, f2;
    };

    static void check_cubes(const KGraph& k) {
        const auto& E = k.edges_;
        for (EdgeId x = 0; x < E.size(); ++x) {
            for (std::uint32_t cy = E[x].color + 1; cy < k.rank_; ++cy) {
                for (EdgeId y : k.into_[E[x].source][cy]) {
                    for (std::uint32_t cz = cy + 1; cz < k.rank_; ++cz) {
                        for (EdgeId z : k.into_[E[y].source][cz]) {
                            // Reverse x y z two ways and compare.
                            auto [z1, y1] = k.flip(y, z);
                            auto [z2, x1] = k.flip(x, z1);
                            auto [y2, x2] = k.flip(x1, y1);
                            auto [yb, xb] = k.flip(x, y);
                            auto [zb, xc] = k.flip(xb, z);
                            auto [zc, yc] = k.flip(yb, zb);
                            if (z2 != zc || y2 != yc || x2 != xc)
                                throw FactorizationError("cube condition fails for edges (" + E[x].name +
                                                         ", " + E[y].name + ", " + E[z].name + ")");
                        }
                    }
                }
            }
        }
    }

    std::size_t rank_;
    std::vector<std::string> vertices_;
    std::vector<EdgeSpec> edges_;
    std::vector<SquareSpec> squares_;
};

/// "p1_0" for the point (1,0).
inline std::string omega_vertex_name(const DegreeVector& p) {
    std::string s = "p";
    for (std::size_t i = 0; i < p.rank(); ++i) s += (i ? "_" : "") + std::to_string(p[i]);
    return s;
}

/// Omega_{k,m}: vertices p <= m, one color-i edge from p+e_i to p.
inline KGraph omega_graph(std::size_t k, const DegreeVector& m) {
    if (k == 0) throw Error("omega_graph needs k >= 1");
    if (m.rank() != k) throw DegreeError("omega_graph: degree " + m.str() + " does not have rank " + std::to_string(k));
    GraphBuilder b(k);
    auto pts = degrees_up_to(m);
    std::sort(pts.begin(), pts.end());
    auto edge_name = [](std::size_t color, const DegreeVector& p) {
        return "c" + std::to_string(color + 1) + "_" + omega_vertex_name(p);
    };
    for (const auto& p : pts) b.vertex(omega_vertex_name(p));
    for (const auto& p : pts)
        for (std::size_t i = 0; i < k; ++i) {
            auto q = p + DegreeVector::unit(k, i);
            if (q.le(m)) b.edge(edge_name(i, p), static_cast<std::uint32_t>(i + 1), omega_vertex_name(q), omega_vertex_name(p));
        }
    for (const auto& p : pts)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                auto pi = p + DegreeVector::unit(k, i);
                auto pj = p + DegreeVector::unit(k, j);
                if (!(pi + DegreeVector::unit(k, j)).le(m)) continue;
                b.square(edge_name(i, p), edge_name(j, pi), edge_name(j, p), edge_name(i, pj));
            }
    return b.build();
}

}  // namespace kpa
