#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpa/graph_algo.hpp"
#include "kpa/path_calculus.hpp"
#include "kpa/structure.hpp"

namespace kpa {

inline bool is_cycle(const Path& p) { return !p.degree.is_zero() && p.range == p.source; }

/// r(mu) receives no color missing from d(mu).
inline bool is_initial_cycle(const KGraph& g, const Path& mu) {
    if (!is_cycle(mu)) return false;
    for (std::uint32_t i = 0; i < g.rank(); ++i)
        if (mu.degree[i] == 0 && g.receives(mu.range, i)) return false;
    return true;
}

namespace detail {

inline std::vector<bool> colors_of(const KGraph& g, const std::vector<EdgeId>& edges) {
    std::vector<bool> present(g.rank(), false);
    for (EdgeId e : edges) present[g.edge(e).color] = true;
    return present;
}

/// A closed walk at `base` inside `comp` using every color of `colors` at least once.
inline Path closed_walk_covering(const KGraph& g, const std::vector<VertexId>& comp, const std::vector<bool>& colors,
                                 VertexId base) {
    auto inside = [&](VertexId v) { return std::binary_search(comp.begin(), comp.end(), v); };
    const auto edges = internal_edges(g, comp, colors);
    std::vector<EdgeId> word;
    for (std::uint32_t c = 0; c < g.rank(); ++c) {
        if (!colors[c]) continue;
        auto it = std::find_if(edges.begin(), edges.end(), [&](EdgeId e) { return g.edge(e).color == c; });
        if (it == edges.end()) throw Error("component lacks a requested color");
        const Edge& e = g.edge(*it);
        auto in = shortest_word(g, base, e.range, colors, inside);
        auto out = shortest_word(g, e.source, base, colors, inside);
        if (!in || !out) throw Error("component is not strongly connected");
        word.insert(word.end(), in->begin(), in->end());
        word.push_back(*it);
        word.insert(word.end(), out->begin(), out->end());
    }
    return g.path_from_word(word);
}

}  // namespace detail

/// For each skeleton component with an internal edge and each color occurring
/// inside it, a shortest cycle through an edge of that color.
inline std::vector<Path> find_cycles(const KGraph& g) {
    const std::vector<bool> all(g.rank(), true);
    std::set<Path> out;
    for (const auto& comp : strongly_connected_components(g, all)) {
        const auto edges = internal_edges(g, comp, all);
        auto inside = [&](VertexId v) { return std::binary_search(comp.begin(), comp.end(), v); };
        for (std::uint32_t c = 0; c < g.rank(); ++c) {
            std::optional<std::vector<EdgeId>> best;
            for (EdgeId e : edges) {
                if (g.edge(e).color != c) continue;
                auto back = shortest_word(g, g.edge(e).source, g.edge(e).range, all, inside);
                if (!back) continue;
                std::vector<EdgeId> word{e};
                word.insert(word.end(), back->begin(), back->end());
                if (!best || word.size() < best->size()) best = std::move(word);
            }
            if (best) out.insert(g.path_from_word(*best));
        }
    }
    return {out.begin(), out.end()};
}

/// Initial cycles: for every color set C and every component of the
/// C-colored skeleton using exactly the colors C, a closed walk covering C at
/// each vertex of the component that receives no color outside C.
inline std::vector<Path> find_initial_cycles(const KGraph& g) {
    std::set<Path> out;
    const std::size_t k = g.rank();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<bool> colors(k);
        for (std::size_t i = 0; i < k; ++i) colors[i] = (mask >> i) & 1;
        for (const auto& comp : strongly_connected_components(g, colors)) {
            const auto edges = internal_edges(g, comp, colors);
            if (edges.empty() || detail::colors_of(g, edges) != colors) continue;
            for (VertexId b : comp) {
                bool clean = true;
                for (std::size_t i = 0; i < k; ++i)
                    if (!colors[i] && g.receives(b, static_cast<std::uint32_t>(i))) clean = false;
                if (clean) out.insert(detail::closed_walk_covering(g, comp, colors, b));
            }
        }
    }
    return {out.begin(), out.end()};
}

/// A pair (mu, nu) of distinct paths with common endpoints such that every
/// extension of mu meets nu.
struct GeneralizedCycle {
    Path mu;
    Path nu;
    std::optional<Path> entrance;
    DegreeVector verified_bound;
};

struct GeneralizedCycleCheck {
    Tri status = Tri::Unknown;
    ExhaustivenessVerdict verdict;
};

inline void check_cycle_endpoints(const KGraph& g, const Path& mu, const Path& nu) {
    if (mu == nu || mu.source != nu.source || mu.range != nu.range)
        throw EndpointError("(" + g.path_str(mu) + ", " + g.path_str(nu) +
                            ") needs distinct paths with equal ranges and equal sources");
}

/// Tests exhaustiveness of Ext(mu; {nu}) at s(mu).
inline GeneralizedCycleCheck is_generalized_cycle(const KGraph& g, const Path& mu, const Path& nu,
                                                  std::optional<DegreeVector> bound = {}) {
    check_cycle_endpoints(g, mu, nu);
    GeneralizedCycleCheck out;
    const auto ext = ext_set(g, mu, {nu});
    out.verdict = is_exhaustive(g, mu.source, ext, bound);
    out.status = out.verdict.exhaustive() ? Tri::Yes : out.verdict.refuted() ? Tri::No : Tri::Unknown;
    return out;
}

/// The least tau in s(nu) Lambda with d(tau) <= bound and MCE(mu, nu tau) empty.
inline std::optional<Path> find_entrance(const KGraph& g, const Path& mu, const Path& nu, const DegreeVector& bound) {
    for (const auto& tau : g.paths_up_to(nu.source, bound))
        if (!have_common_extension(g, mu, g.compose(nu, tau))) return tau;
    return std::nullopt;
}

inline std::optional<Path> find_entrance(const KGraph& g, const GeneralizedCycle& c, const DegreeVector& bound) {
    return find_entrance(g, c.mu, c.nu, bound);
}

/// Every certified generalized cycle with both degrees at most `cap`,
/// annotated with an entrance of degree at most `entrance_bound` when one exists.
inline std::vector<GeneralizedCycle> find_generalized_cycles(const KGraph& g, const DegreeVector& cap,
                                                             const DegreeVector& entrance_bound) {
    std::vector<GeneralizedCycle> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto paths = g.paths_up_to(v, cap);
        for (const auto& mu : paths)
            for (const auto& nu : paths) {
                if (mu == nu || mu.source != nu.source) continue;
                auto check = is_generalized_cycle(g, mu, nu);
                if (check.status != Tri::Yes) continue;
                out.push_back({mu, nu, find_entrance(g, mu, nu, entrance_bound), check.verdict.bound_used});
            }
    }
    return out;
}

/// The output of the constructive initial-cycle argument.
struct InitialCycleReach {
    Path initial_cycle;
    /// Range r(cycle), source r(initial_cycle).
    Path connecting_path;
    Path rho;
    Path lambda;
    std::size_t r = 0;
    std::size_t s = 0;
};

/// Follows the proof that every cycle is reached from an initial cycle: inside
/// H = {w : r(mu) <= w} take a cycle rho of maximal color content, a path lambda
/// at r(rho) maximal in the colors rho misses, factor rho^t lambda = alpha beta
/// with t = |H| and d(alpha) = d(lambda), and cut beta where the vertices
/// beta(j d(rho)) repeat.
inline InitialCycleReach initial_cycle_reaching(const KGraph& g, const Path& mu) {
    if (!is_cycle(mu)) throw NoCycleError(g.path_str(mu) + " is not a cycle");
    const std::vector<bool> all(g.rank(), true);
    const VertexSet H = hereditary_closure(g, {mu.range});
    const std::size_t t = H.size();

    std::optional<std::vector<VertexId>> best;
    std::size_t best_colors = 0;
    for (const auto& comp : strongly_connected_components(g, all)) {
        if (!H.count(comp.front())) continue;
        const auto edges = internal_edges(g, comp, all);
        if (edges.empty()) continue;
        const auto present = detail::colors_of(g, edges);
        const auto count = static_cast<std::size_t>(std::count(present.begin(), present.end(), true));
        if (count > best_colors) {
            best_colors = count;
            best = comp;
        }
    }
    if (!best) throw Error("no cycle below r(mu); the input cycle should have provided one");
    const auto present = detail::colors_of(g, internal_edges(g, *best, all));
    InitialCycleReach out{g.vertex_path(0), g.vertex_path(0), detail::closed_walk_covering(g, *best, present, best->front()),
                          g.vertex_path(0), 0, 0};

    std::vector<EdgeId> word;
    VertexId at = out.rho.range;
    for (std::size_t steps = 0;; ++steps) {
        if (steps > t * g.rank() + 1) throw Error("off-cycle path did not terminate");
        std::optional<EdgeId> next;
        for (std::uint32_t c = 0; c < g.rank() && !next; ++c)
            if (!present[c] && g.receives(at, c)) next = g.edges_into(at, c).front();
        if (!next) break;
        word.push_back(*next);
        at = g.edge(*next).source;
    }
    out.lambda = word.empty() ? g.vertex_path(out.rho.range) : g.path_from_word(word);

    Path walk = out.lambda;
    for (std::size_t j = 0; j < t; ++j) walk = g.compose(out.rho, walk);
    const Path beta = g.factorize(walk, out.lambda.degree).second;
    std::vector<VertexId> marks;
    for (std::size_t j = 0; j <= t; ++j) marks.push_back(g.vertex_at(beta, out.rho.degree.scaled(static_cast<std::uint32_t>(j))));
    bool found = false;
    for (std::size_t s = 1; s <= t && !found; ++s)
        for (std::size_t r = 0; r < s && !found; ++r)
            if (marks[r] == marks[s]) {
                out.r = r;
                out.s = s;
                found = true;
            }
    if (!found) throw Error("pigeonhole failed");
    out.initial_cycle = g.subpath(beta, out.rho.degree.scaled(static_cast<std::uint32_t>(out.r)),
                                  out.rho.degree.scaled(static_cast<std::uint32_t>(out.s)));
    auto link = shortest_walk(g, mu.range, out.initial_cycle.range);
    if (!link) throw Error("initial cycle is not reachable from r(mu)");
    out.connecting_path = *link;
    return out;
}

/// Local periodicity m, n at `vertex`, with its entrance-free generalized cycle.
struct PeriodicityWitness {
    VertexId vertex = 0;
    DegreeVector m;
    DegreeVector n;
    GeneralizedCycle cycle;
    /// The initial cycle c with r(c) dLambda = {c^infinity}.
    Path initial_cycle;
    DegreeVector confirmation_depth;
};

struct AperiodicityResult {
    Tri status = Tri::Unknown;
    std::optional<PeriodicityWitness> witness;
    std::string basis;
    DegreeVector bound_used;
};

namespace detail {

inline Path power(const KGraph& g, const Path& c, std::uint32_t t) {
    Path out = g.vertex_path(c.range);
    for (std::uint32_t j = 0; j < t; ++j) out = g.compose(out, c);
    return out;
}

inline std::uint32_t copies_needed(const DegreeVector& reach, const DegreeVector& d) {
    std::uint32_t t = 1;
    for (std::size_t i = 0; i < d.rank(); ++i)
        if (d[i]) t = std::max(t, (reach[i] + d[i] - 1) / d[i]);
    return t;
}

/// Whether sigma^m and sigma^n agree on all boundary segments at v of the given depth.
inline bool segments_confirm(const KGraph& g, VertexId v, const DegreeVector& m, const DegreeVector& n,
                             const DegreeVector& depth) {
    const DegreeVector top = m.join(n);
    const auto segs = boundary_segments(g, v, depth);
    if (segs.empty()) return false;
    for (const auto& x : segs) {
        if (!top.le(x.path.degree)) return false;
        const DegreeVector len = x.path.degree - top;
        if (g.subpath(x.path, m, m + len) != g.subpath(x.path, n, n + len)) return false;
    }
    return true;
}

/// Condition (L) for 1-graphs: some skeleton component is a bare cycle whose
/// vertices receive only the cycle's edges.
inline bool has_exitless_cycle(const KGraph& g) {
    const std::vector<bool> all(g.rank(), true);
    for (const auto& comp : strongly_connected_components(g, all)) {
        if (internal_edges(g, comp, all).empty()) continue;
        bool bare = true;
        for (VertexId v : comp) {
            std::size_t in = 0;
            for (std::uint32_t c = 0; c < g.rank(); ++c) in += g.edges_into(v, c).size();
            if (in != 1) bare = false;
        }
        if (bare) return true;
    }
    return false;
}

}  // namespace detail

/// Searches an entrance-free initial cycle c; then r(c) dLambda = {c^infinity}
/// and every pair m != n below d(c) with matching d(c)-blocks of c^infinity is
/// a local periodicity. Pairs are ranked by max(|m|,|n|), then by ||m|-|n||.
inline std::optional<PeriodicityWitness> periodicity_from_cycle(const KGraph& g, const Path& c,
                                                                const DegreeVector& depth_bound) {
    if (!is_initial_cycle(g, c)) return std::nullopt;
    if (!is_exhaustive(g, c.range, {c}).exhaustive()) return std::nullopt;
    const DegreeVector& d = c.degree;
    auto candidates = degrees_up_to(d);
    struct Pair {
        DegreeVector m, n;
    };
    std::vector<Pair> pairs;
    for (const auto& p : candidates)
        for (const auto& q : candidates) {
            if (p == q) continue;
            // Orient so that |m| < |n|, or |m| == |n| with m lexicographically larger.
            if (p.total() > q.total() || (p.total() == q.total() && !(q < p))) continue;
            pairs.push_back({p, q});
        }
    auto rank = [](const Pair& x) {
        const auto a = x.m.total(), b = x.n.total();
        return std::tuple{std::max(a, b), b - a, a + b};
    };
    std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& x, const Pair& y) { return rank(x) < rank(y); });
    for (const auto& [m, n] : pairs) {
        const Path x = detail::power(g, c, detail::copies_needed(m.join(n) + d, d));
        if (g.subpath(x, m, m + d) != g.subpath(x, n, n + d)) continue;
        const DegreeVector top = m.join(n);
        const DegreeVector other = n + (top - m);
        const Path lx = detail::power(g, c, detail::copies_needed(other.join(top), d));
        PeriodicityWitness w;
        w.vertex = c.range;
        w.m = m;
        w.n = n;
        w.initial_cycle = c;
        w.cycle.mu = g.subpath(lx, DegreeVector::zero(g.rank()), top);
        w.cycle.nu = g.subpath(lx, DegreeVector::zero(g.rank()), other);
        w.confirmation_depth = depth_bound.join(other) + DegreeVector::filled(g.rank(), 2);
        // Colors outside d(c) never occur at r(c); clamp them to keep the segment set finite.
        for (std::size_t i = 0; i < g.rank(); ++i)
            if (d[i] == 0) w.confirmation_depth[i] = 0;
        if (!detail::segments_confirm(g, w.vertex, m, n, w.confirmation_depth)) continue;
        auto gc = is_generalized_cycle(g, w.cycle.mu, w.cycle.nu);
        if (gc.status != Tri::Yes) continue;
        w.cycle.verified_bound = gc.verdict.bound_used;
        w.cycle.entrance = find_entrance(g, w.cycle, w.confirmation_depth);
        if (w.cycle.entrance) continue;
        return w;
    }
    return std::nullopt;
}

inline AperiodicityResult aperiodicity_analysis(const KGraph& g, const DegreeVector& cap) {
    AperiodicityResult out;
    out.bound_used = cap;
    if (is_acyclic(g)) {
        out.status = Tri::Yes;
        out.basis = "acyclic: every boundary path has finite degree";
        return out;
    }
    for (const auto& c : find_initial_cycles(g))
        if (auto w = periodicity_from_cycle(g, c, cap)) {
            out.status = Tri::No;
            out.witness = std::move(w);
            out.basis = "initial cycle without entrance";
            return out;
        }
    if (g.rank() == 1) {
        if (!detail::has_exitless_cycle(g)) {
            out.status = Tri::Yes;
            out.basis = "every cycle has an exit";
        } else {
            out.basis = "cycle without exit could not be confirmed";
        }
        return out;
    }
    out.basis = "no entrance-free initial cycle; no finite criterion applies";
    return out;
}

}  // namespace kpa
