#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpa/witnesses.hpp"

namespace kpa {

/// Search bounds: saturation families, generalized-cycle degrees, entrance degrees.
struct Caps {
    DegreeVector saturation;
    DegreeVector cycles;
    DegreeVector entrance;

    static Caps defaults(const KGraph& g) {
        const auto n = static_cast<std::uint32_t>(g.vertex_count() + 1);
        return {DegreeVector::filled(g.rank(), n), DegreeVector::filled(g.rank(), 2), DegreeVector::filled(g.rank(), 2)};
    }

    /// A user bound for cycles and entrances; saturation never drops below the default.
    static Caps with_bound(const KGraph& g, const DegreeVector& bound) {
        if (bound.rank() != g.rank()) throw DegreeError("bound " + bound.str() + " does not have rank " + std::to_string(g.rank()));
        Caps c = defaults(g);
        c.saturation = c.saturation.join(bound);
        c.cycles = bound;
        c.entrance = bound;
        return c;
    }
};

/// A generalized cycle with entrance whose source is reached from `vertex` along `connecting`.
struct ReachWitness {
    VertexId vertex = 0;
    GeneralizedCycle cycle;
    Path connecting;
};

/// Direct re-check of a witness from its definition.
inline bool verify_reach_witness(const KGraph& g, const ReachWitness& w) {
    const auto& c = w.cycle;
    if (!c.entrance || w.connecting.range != w.vertex || w.connecting.source != c.mu.source) return false;
    if (c.entrance->range != c.nu.source) return false;
    if (have_common_extension(g, c.mu, g.compose(c.nu, *c.entrance))) return false;
    return is_generalized_cycle(g, c.mu, c.nu).status == Tri::Yes;
}

namespace detail {

/// Cycle in her(v), then an initial cycle reached from it; (c, r(c)) with an entrance.
inline std::optional<ReachWitness> reach_by_construction(const KGraph& g, VertexId v, const Caps& caps) {
    const VertexSet H = hereditary_closure(g, {v});
    for (const auto& cyc : find_cycles(g)) {
        if (!H.count(cyc.range)) continue;
        const auto reach = initial_cycle_reaching(g, cyc);
        const Path& c = reach.initial_cycle;
        const Path base = g.vertex_path(c.range);
        auto tau = find_entrance(g, c, base, caps.entrance);
        if (!tau) continue;
        auto lead = shortest_walk(g, v, cyc.range);
        if (!lead) continue;
        ReachWitness w{v, {c, base, tau, caps.entrance}, g.compose(*lead, reach.connecting_path)};
        if (verify_reach_witness(g, w)) return w;
    }
    return std::nullopt;
}

}  // namespace detail

struct EntranceReachReport {
    std::vector<std::optional<ReachWitness>> per_vertex;
    bool complete() const {
        for (const auto& w : per_vertex)
            if (!w) return false;
        return !per_vertex.empty();
    }
};

/// For each vertex, a generalized cycle with entrance reached from it.
inline EntranceReachReport check_entrance_reach(const KGraph& g, const Caps& caps) {
    EntranceReachReport out;
    std::optional<std::vector<GeneralizedCycle>> searched;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto w = detail::reach_by_construction(g, v, caps);
        if (!w) {
            if (!searched) searched = find_generalized_cycles(g, caps.cycles, caps.entrance);
            for (const auto& c : *searched) {
                if (!c.entrance) continue;
                auto lead = shortest_walk(g, v, c.mu.source);
                if (!lead) continue;
                ReachWitness cand{v, c, *lead};
                if (verify_reach_witness(g, cand)) {
                    w = cand;
                    break;
                }
            }
        }
        out.per_vertex.push_back(std::move(w));
    }
    return out;
}

struct SimplicityResult {
    Tri status = Tri::Unknown;
    CofinalityResult cofinality;
    AperiodicityResult aperiodicity;
    /// Over a field "simple"; otherwise "every ideal is J KP_R".
    std::string meaning;
};

inline SimplicityResult check_simplicity(const KGraph& g, const Ring& ring, const Caps& caps) {
    SimplicityResult out;
    out.cofinality = is_cofinal(g, caps.saturation, find_initial_cycles(g));
    out.aperiodicity = aperiodicity_analysis(g, caps.cycles);
    const Tri a = out.cofinality.status, b = out.aperiodicity.status;
    out.status = (a == Tri::No || b == Tri::No) ? Tri::No : (a == Tri::Yes && b == Tri::Yes) ? Tri::Yes : Tri::Unknown;
    out.meaning = ring.is_field() ? "simple" : "every ideal is J KP_R for an ideal J of R";
    return out;
}

enum class Outcome { PurelyInfiniteSimple, LocallyMatricial, NotSimple, Indeterminate };

inline std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::PurelyInfiniteSimple: return "PurelyInfiniteSimple";
        case Outcome::LocallyMatricial: return "LocallyMatricial";
        case Outcome::NotSimple: return "NotSimple";
        case Outcome::Indeterminate: return "Indeterminate";
    }
    return "?";
}

struct Verdict {
    Outcome outcome = Outcome::Indeterminate;
    std::string ring;
    bool ring_is_field = false;
    Caps bounds;
    SimplicityResult simplicity;
    std::optional<Path> cycle;
    std::vector<ReachWitness> reach;
    std::optional<MatrixUnitReport> matrix;
    std::optional<std::size_t> boundary_dimension;
    std::optional<VertexSet> hereditary_witness;
    std::optional<PeriodicityWitness> periodicity;
    std::vector<std::string> unknowns;
    std::vector<std::string> notes;
    bool unverified = false;
};

namespace detail {

inline bool verify_hereditary_witness(const KGraph& g, const VertexSet& H, const Caps& caps) {
    return !H.empty() && H.size() < g.vertex_count() &&
           is_certified_saturated_hereditary(g, H, caps.saturation, find_initial_cycles(g));
}

inline bool verify_periodicity(const GraphPtr& g, const Ring& ring, const PeriodicityWitness& w, Verdict& out) {
    if (is_generalized_cycle(*g, w.cycle.mu, w.cycle.nu).status != Tri::Yes) return false;
    if (!is_initial_cycle(*g, w.initial_cycle) || !is_cycle(w.initial_cycle)) return false;
    if (w.m == w.n) return false;
    auto cmp = generalized_cycle_comparison(g, ring, GeneralizedCycle{w.cycle.mu, w.cycle.nu, std::nullopt, w.cycle.verified_bound});
    out.unverified = out.unverified || cmp.unverified;
    return cmp.below && cmp.equal;
}

}  // namespace detail

inline Verdict classify(const GraphPtr& gp, const Ring& ring, const Caps& caps) {
    const KGraph& g = *gp;
    Verdict out;
    out.ring = ring.name();
    out.ring_is_field = ring.is_field();
    out.bounds = caps;
    out.simplicity = check_simplicity(g, ring, caps);
    const auto& cof = out.simplicity.cofinality;
    const auto& ap = out.simplicity.aperiodicity;

    if (cof.status == Tri::No && cof.witness && detail::verify_hereditary_witness(g, *cof.witness, caps)) {
        out.outcome = Outcome::NotSimple;
        out.hereditary_witness = cof.witness;
        out.notes.push_back("nontrivial saturated hereditary set");
        return out;
    }
    if (ap.status == Tri::No && ap.witness && detail::verify_periodicity(gp, ring, *ap.witness, out)) {
        out.outcome = Outcome::NotSimple;
        out.periodicity = ap.witness;
        out.notes.push_back("local periodicity at an entrance-free cycle");
        return out;
    }
    if (cof.status != Tri::Yes) out.unknowns.push_back("cofinality");
    if (ap.status != Tri::Yes) out.unknowns.push_back("aperiodicity");
    if (!ring.is_field()) {
        out.notes.push_back("field required: " + ring.name() + " is not a field");
        return out;
    }
    if (!out.unknowns.empty()) return out;

    const auto cycles = find_cycles(g);
    if (!cycles.empty()) {
        out.cycle = cycles.front();
        auto t54 = check_entrance_reach(g, caps);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const auto& w = t54.per_vertex[v];
            if (!w) {
                out.unknowns.push_back("generalized cycle with entrance reached from " + g.vertex_name(v));
                continue;
            }
            auto iso = entrance_isometries(gp, ring, w->cycle, 2);
            out.unverified = out.unverified || iso.unverified;
            if (!iso.passed()) {
                out.unknowns.push_back("entrance isometries at " + g.vertex_name(v));
                continue;
            }
            out.reach.push_back(*w);
        }
        if (out.reach.size() == g.vertex_count())
            out.outcome = Outcome::PurelyInfiniteSimple;
        else
            out.reach.clear();
        return out;
    }

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.receives_any(v)) continue;
        try {
            out.matrix = matrix_unit_ideal(gp, ring, v);
        } catch (const SizeLimitError& e) {
            out.unknowns.push_back(std::string("matrix units: ") + e.what());
            return out;
        }
        break;
    }
    if (!out.matrix || !out.matrix->verified) {
        out.unknowns.push_back("matrix-unit ideal at a vertex receiving no edges");
        out.matrix.reset();
        return out;
    }
    out.unverified = out.unverified || out.matrix->unverified;
    try {
        out.boundary_dimension = boundary_representation(gp, ring).dimension();
    } catch (const SizeLimitError&) {
    }
    if (out.boundary_dimension && *out.boundary_dimension != out.matrix->size()) {
        out.unknowns.push_back("boundary dimension differs from matrix size");
        return out;
    }
    out.outcome = Outcome::LocallyMatricial;
    return out;
}

inline int exit_code(const Verdict& v) { return v.outcome == Outcome::Indeterminate ? 2 : 0; }

}  // namespace kpa
