#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpa/graph_algo.hpp"
#include "kpa/path_calculus.hpp"

namespace kpa {

using VertexSet = std::set<VertexId>;

inline std::string set_str(const KGraph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (VertexId v : s) {
        out += (first ? "" : ",") + g.vertex_name(v);
        first = false;
    }
    return out + "}";
}

inline VertexSet all_vertices(const KGraph& g) {
    VertexSet s;
    for (VertexId v = 0; v < g.vertex_count(); ++v) s.insert(v);
    return s;
}

enum class Tri { Yes, No, Unknown };

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Unknown: return "unknown";
    }
    return "?";
}

/// Smallest hereditary superset: everything reachable from S toward sources.
inline VertexSet hereditary_closure(const KGraph& g, const VertexSet& S) {
    VertexSet out;
    for (VertexId v : S)
        for (VertexId w : reachable_by_colors(g, v, std::vector<bool>(g.rank(), true))) out.insert(w);
    return out;
}

inline bool is_hereditary(const KGraph& g, const VertexSet& H) { return hereditary_closure(g, H) == H; }

/// Why a vertex outside a hereditary set H can never be forced into it.
struct NonAddability {
    enum class Kind {
        /// `path` has range v and its source sees nothing of H.
        EscapePath,
        /// `path` has range v and source r(cycle); `cycle` is initial with range outside H.
        InitialCycle
    } kind = Kind::EscapePath;
    Path path;
    std::optional<Path> cycle;
};

/// A family E in v FE(Lambda) with s(E) inside the set, certified exhaustive.
struct SaturationStep {
    VertexId vertex = 0;
    std::vector<Path> family;
    DegreeVector family_degree;
};

struct SaturationResult {
    VertexSet closure;
    /// True when every vertex left out carries a NonAddability certificate, so
    /// `closure` is exactly the saturation.
    bool exact = false;
    std::vector<SaturationStep> steps;
    std::map<VertexId, NonAddability> excluded;
    DegreeVector bound_used;
};

namespace detail {

/// Drops members that extend another member; exhaustiveness is unaffected.
inline std::vector<Path> minimal_members(const KGraph& g, std::vector<Path> E) {
    std::sort(E.begin(), E.end());
    std::vector<Path> out;
    for (const auto& lambda : E) {
        bool dominated = false;
        for (const auto& mu : out)
            if (g.has_prefix(lambda, mu)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(lambda);
    }
    return out;
}

}  // namespace detail

/// A certificate that v cannot join H through any finite exhaustive family.
/// Cycle detection uses the initial cycles supplied by the caller.
inline std::optional<NonAddability> non_addability(const KGraph& g, const VertexSet& H, VertexId v,
                                                   const std::vector<Path>& initial_cycles) {
    if (H.count(v)) return std::nullopt;
    const std::vector<bool> all(g.rank(), true);
    const auto reach = reachable_by_colors(g, v, all);
    for (VertexId w : reach) {
        bool clean = true;
        for (VertexId u : reachable_by_colors(g, w, all))
            if (H.count(u)) {
                clean = false;
                break;
            }
        if (clean) return NonAddability{NonAddability::Kind::EscapePath, *shortest_walk(g, v, w), std::nullopt};
    }
    for (const auto& c : initial_cycles) {
        if (H.count(c.range)) continue;
        if (auto p = shortest_walk(g, v, c.range))
            return NonAddability{NonAddability::Kind::InitialCycle, *p, c};
    }
    return std::nullopt;
}

/// Least saturated hereditary set containing H, as far as certificates reach.
/// Candidate families at v are the prefix-minimal members of
/// { lambda in v Lambda : 0 != d(lambda) <= n, s(lambda) in current set } for
/// n = (1,...,1), (2,...,2), ... capped by `cap`.
inline SaturationResult saturated_closure(const KGraph& g, const VertexSet& H0, const DegreeVector& cap,
                                          const std::vector<Path>& initial_cycles) {
    SaturationResult res;
    res.bound_used = cap;
    res.closure = hereditary_closure(g, H0);
    std::uint32_t top = 0;
    for (std::size_t i = 0; i < cap.rank(); ++i) top = std::max(top, cap[i]);
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (res.closure.count(v)) continue;
            if (non_addability(g, res.closure, v, initial_cycles)) continue;
            for (std::uint32_t t = 1; t <= top; ++t) {
                const DegreeVector n = DegreeVector::filled(g.rank(), t).meet(cap);
                std::vector<Path> E;
                for (auto& lambda : g.paths_up_to(v, n))
                    if (!lambda.degree.is_zero() && res.closure.count(lambda.source)) E.push_back(std::move(lambda));
                E = detail::minimal_members(g, std::move(E));
                if (E.empty()) continue;
                if (is_exhaustive(g, v, E).exhaustive()) {
                    res.steps.push_back({v, E, n});
                    res.closure.insert(v);
                    res.closure = hereditary_closure(g, res.closure);
                    changed = true;
                    break;
                }
            }
        }
    }
    res.exact = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (res.closure.count(v)) continue;
        if (auto na = non_addability(g, res.closure, v, initial_cycles))
            res.excluded.emplace(v, std::move(*na));
        else
            res.exact = false;
    }
    return res;
}

struct LatticeResult {
    std::vector<VertexSet> sets;
    bool exact = true;
};

/// All saturated hereditary subsets: saturations of unions of per-vertex
/// saturations, grown to a fixed point.
inline LatticeResult sat_hereditary_lattice(const KGraph& g, const DegreeVector& cap,
                                            const std::vector<Path>& initial_cycles, std::size_t vertex_limit = 20) {
    if (g.vertex_count() > vertex_limit)
        throw SizeLimitError("lattice enumeration limited to " + std::to_string(vertex_limit) + " vertices");
    LatticeResult out;
    auto close = [&](const VertexSet& s) {
        auto r = saturated_closure(g, s, cap, initial_cycles);
        out.exact = out.exact && r.exact;
        return r.closure;
    };
    std::vector<VertexSet> singles;
    for (VertexId v = 0; v < g.vertex_count(); ++v) singles.push_back(close({v}));
    std::set<VertexSet> seen{close({})};
    std::deque<VertexSet> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        VertexSet cur = queue.front();
        queue.pop_front();
        for (const auto& s : singles) {
            if (std::includes(cur.begin(), cur.end(), s.begin(), s.end())) continue;
            VertexSet u = cur;
            u.insert(s.begin(), s.end());
            u = close(u);
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    out.sets.assign(seen.begin(), seen.end());
    std::sort(out.sets.begin(), out.sets.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

struct CofinalityResult {
    Tri status = Tri::Unknown;
    /// For No: a saturated hereditary set other than the empty set and Lambda^0.
    std::optional<VertexSet> witness;
    std::optional<VertexId> witness_vertex;
    DegreeVector bound_used;
};

/// Cofinal exactly when every vertex saturates to all of Lambda^0.
inline CofinalityResult is_cofinal(const KGraph& g, const DegreeVector& cap, const std::vector<Path>& initial_cycles) {
    CofinalityResult res;
    res.bound_used = cap;
    const VertexSet everything = all_vertices(g);
    bool unknown = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto r = saturated_closure(g, {v}, cap, initial_cycles);
        if (r.closure == everything) continue;
        if (r.exact) {
            res.status = Tri::No;
            res.witness = r.closure;
            res.witness_vertex = v;
            return res;
        }
        unknown = true;
    }
    res.status = unknown ? Tri::Unknown : Tri::Yes;
    return res;
}

/// Checks H against the definition with the available certificates.
inline bool is_certified_saturated_hereditary(const KGraph& g, const VertexSet& H, const DegreeVector& cap,
                                              const std::vector<Path>& initial_cycles) {
    if (!is_hereditary(g, H)) return false;
    auto r = saturated_closure(g, H, cap, initial_cycles);
    return r.closure == H && r.exact;
}

/// The k-graph Lambda \ Lambda H.
inline KGraph quotient_graph(const KGraph& g, const VertexSet& H, const DegreeVector& cap,
                             const std::vector<Path>& initial_cycles) {
    if (!is_certified_saturated_hereditary(g, H, cap, initial_cycles))
        throw NotSaturatedHereditaryError(set_str(g, H) + " is not certified saturated and hereditary");
    GraphBuilder b(g.rank());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!H.count(v)) b.vertex(g.vertex_name(v));
    auto kept = [&](EdgeId e) { return !H.count(g.edge(e).source); };
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (kept(e)) {
            const auto& ed = g.edge(e);
            b.edge(ed.name, ed.color + 1, g.vertex_name(ed.source), g.vertex_name(ed.range));
        }
    for (const auto& s : g.squares())
        if (kept(s.first_inner))
            b.square(g.edge(s.first_outer).name, g.edge(s.first_inner).name, g.edge(s.second_outer).name,
                     g.edge(s.second_inner).name);
    return b.build();
}

}  // namespace kpa
