#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpa/kgraph.hpp"

namespace kpa {

/// (alpha, beta) with mu*alpha == nu*beta at degree d(mu) v d(nu).
struct MinimalPair {
    Path alpha;
    Path beta;
    friend bool operator==(const MinimalPair&, const MinimalPair&) = default;
    friend auto operator<=>(const MinimalPair& a, const MinimalPair& b) {
        if (auto c = a.alpha <=> b.alpha; c != 0) return c;
        return a.beta <=> b.beta;
    }
};

/// Minimal common extensions of mu and nu, sorted.
inline std::vector<Path> mce(const KGraph& g, const Path& mu, const Path& nu) {
    if (mu.range != nu.range) return {};
    const DegreeVector join = mu.degree.join(nu.degree);
    std::vector<Path> out;
    for (const auto& alpha : g.paths_of_degree(join - mu.degree, mu.source)) {
        Path lambda = g.compose(mu, alpha);
        if (g.has_prefix(lambda, nu)) out.push_back(std::move(lambda));
    }
    return out;
}

inline bool have_common_extension(const KGraph& g, const Path& mu, const Path& nu) {
    if (mu.range != nu.range) return false;
    const DegreeVector join = mu.degree.join(nu.degree);
    for (const auto& alpha : g.paths_of_degree(join - mu.degree, mu.source))
        if (g.has_prefix(g.compose(mu, alpha), nu)) return true;
    return false;
}

inline std::vector<MinimalPair> lambda_min(const KGraph& g, const Path& mu, const Path& nu) {
    std::vector<MinimalPair> out;
    for (const auto& lambda : mce(g, mu, nu))
        out.push_back({g.factorize(lambda, mu.degree).second, g.factorize(lambda, nu.degree).second});
    std::sort(out.begin(), out.end());
    return out;
}

/// Ext(mu; E).
inline std::vector<Path> ext_set(const KGraph& g, const Path& mu, const std::vector<Path>& E) {
    std::set<Path> out;
    for (const auto& nu : E)
        for (auto& p : lambda_min(g, mu, nu)) out.insert(std::move(p.alpha));
    return {out.begin(), out.end()};
}

/// v Lambda^{<= n}.
inline std::vector<Path> le_paths(const KGraph& g, VertexId v, const DegreeVector& n) {
    std::vector<Path> out;
    for (auto& lambda : g.paths_up_to(v, n)) {
        bool ok = true;
        for (std::uint32_t i = 0; i < g.rank() && ok; ++i)
            if (lambda.degree[i] < n[i] && g.receives(lambda.source, i)) ok = false;
        if (ok) out.push_back(std::move(lambda));
    }
    return out;
}

enum class Exhaustiveness { Exhaustive, NotExhaustive, ExhaustiveUpToBound };

inline const char* to_string(Exhaustiveness e) {
    switch (e) {
        case Exhaustiveness::Exhaustive: return "Exhaustive";
        case Exhaustiveness::NotExhaustive: return "NotExhaustive";
        case Exhaustiveness::ExhaustiveUpToBound: return "ExhaustiveUpToBound";
    }
    return "?";
}

struct ExhaustivenessVerdict {
    Exhaustiveness status = Exhaustiveness::ExhaustiveUpToBound;
    std::optional<Path> witness;
    DegreeVector bound_used;

    bool exhaustive() const { return status == Exhaustiveness::Exhaustive; }
    bool refuted() const { return status == Exhaustiveness::NotExhaustive; }
    bool decided() const { return status != Exhaustiveness::ExhaustiveUpToBound; }
};

inline DegreeVector join_of_degrees(std::size_t rank, const std::vector<Path>& E) {
    DegreeVector n = DegreeVector::zero(rank);
    for (const auto& mu : E) n = n.join(mu.degree);
    return n;
}

/// N + (1,...,1) where N is the join of the degrees in E.
inline DegreeVector default_exhaustive_bound(std::size_t rank, const std::vector<Path>& E) {
    return join_of_degrees(rank, E) + DegreeVector::filled(rank, 1);
}

/// Vertices reachable from v along skeleton edges whose colors are in `colors`
/// (moving from range to source), including v.
inline std::vector<VertexId> reachable_by_colors(const KGraph& g, VertexId v, const std::vector<bool>& colors) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack{v}, out;
    seen[v] = true;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (std::uint32_t c = 0; c < g.rank(); ++c) {
            if (!colors[c]) continue;
            for (EdgeId e : g.edges_into(u, c)) {
                VertexId w = g.edge(e).source;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Some mu in E is forced on every extension of lambda that leaves the bound.
inline bool frontier_closes(const KGraph& g, const Path& lambda, const std::vector<Path>& E,
                            const DegreeVector& bound) {
    std::vector<bool> leaving(g.rank(), false);
    bool any = false;
    for (std::uint32_t i = 0; i < g.rank(); ++i)
        if (lambda.degree[i] == bound[i] && g.receives(lambda.source, i)) leaving[i] = any = true;
    if (!any) return true;
    const auto fan = reachable_by_colors(g, lambda.source, leaving);
    for (const auto& mu : E) {
        const DegreeVector m = mu.degree.monus(lambda.degree);
        auto alphas = g.paths_of_degree(m, lambda.source);
        if (alphas.empty()) continue;
        bool forced = true;
        for (const auto& alpha : alphas)
            if (!g.has_prefix(g.compose(lambda, alpha), mu)) {
                forced = false;
                break;
            }
        if (!forced) continue;
        bool extendable = true;
        for (VertexId u : fan)
            if (g.paths_of_degree(m, u).empty()) {
                extendable = false;
                break;
            }
        if (extendable) return true;
    }
    return false;
}

}  // namespace detail

/// First lambda in v Lambda with d(lambda) <= bound meeting no member of E, if any.
inline std::optional<Path> exhaustiveness_witness(const KGraph& g, VertexId v, const std::vector<Path>& E,
                                                  const DegreeVector& bound) {
    for (const auto& lambda : g.paths_up_to(v, bound)) {
        bool met = false;
        for (const auto& mu : E)
            if (have_common_extension(g, lambda, mu)) {
                met = true;
                break;
            }
        if (!met) return lambda;
    }
    return std::nullopt;
}

/// Decides whether E is exhaustive at v. Exhaustive is only returned with a
/// frontier certificate: every tested path whose extensions may leave the
/// bound is shown to be compatible with some member of E along all of them.
inline ExhaustivenessVerdict is_exhaustive(const KGraph& g, VertexId v, const std::vector<Path>& E,
                                           std::optional<DegreeVector> bound = {}) {
    ExhaustivenessVerdict out;
    out.bound_used = bound ? *bound : default_exhaustive_bound(g.rank(), E);
    for (const auto& mu : E)
        if (mu.range != v) throw EndpointError("family member " + g.path_str(mu) + " does not have range " + g.vertex_name(v));
    if (E.empty()) {
        out.status = Exhaustiveness::NotExhaustive;
        out.witness = g.vertex_path(v);
        return out;
    }
    if (auto w = exhaustiveness_witness(g, v, E, out.bound_used)) {
        out.status = Exhaustiveness::NotExhaustive;
        out.witness = std::move(w);
        return out;
    }
    const DegreeVector needed = default_exhaustive_bound(g.rank(), E);
    if (!needed.le(out.bound_used)) {
        out.status = Exhaustiveness::ExhaustiveUpToBound;
        return out;
    }
    for (const auto& lambda : g.paths_up_to(v, out.bound_used))
        if (!detail::frontier_closes(g, lambda, E, out.bound_used)) {
            out.status = Exhaustiveness::ExhaustiveUpToBound;
            return out;
        }
    out.status = Exhaustiveness::Exhaustive;
    return out;
}

enum class Frontier { BoundReached, NoEdges };

/// A path of v Lambda^{<= depth}, standing in for the truncation of a boundary path.
struct BoundarySegment {
    Path path;
    DegreeVector depth;
    std::vector<Frontier> frontier;
    friend bool operator==(const BoundarySegment&, const BoundarySegment&) = default;
};

inline std::vector<BoundarySegment> boundary_segments(const KGraph& g, VertexId v, const DegreeVector& depth) {
    std::vector<BoundarySegment> out;
    for (auto& p : le_paths(g, v, depth)) {
        BoundarySegment seg{std::move(p), depth, std::vector<Frontier>(g.rank())};
        for (std::uint32_t i = 0; i < g.rank(); ++i)
            seg.frontier[i] = g.receives(seg.path.source, i) ? Frontier::BoundReached : Frontier::NoEdges;
        out.push_back(std::move(seg));
    }
    return out;
}

/// sigma^n on a segment.
inline BoundarySegment shift(const KGraph& g, const BoundarySegment& seg, const DegreeVector& n) {
    if (!n.le(seg.path.degree))
        throw DegreeError("shift by " + n.str() + " exceeds segment degree " + seg.path.degree.str());
    return BoundarySegment{g.factorize(seg.path, n).second, seg.depth - n, seg.frontier};
}

}  // namespace kpa
