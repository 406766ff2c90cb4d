#pragma once

#include <optional>
#include <string>
#include <typeinfo>

#include "kpa/classify.hpp"
#include "kpa/expression.hpp"
#include "kpa/generate.hpp"
#include "kpa/graph_spec.hpp"
#include "kpa/report.hpp"

namespace kpa {

struct CommandResult {
    Report report;
    int exit_code = 0;
};

inline std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const FactorizationError*>(&e)) return "FactorizationError";
    if (dynamic_cast<const ComposabilityError*>(&e)) return "ComposabilityError";
    if (dynamic_cast<const DegreeError*>(&e)) return "DegreeError";
    if (dynamic_cast<const EndpointError*>(&e)) return "EndpointError";
    if (dynamic_cast<const RingMismatchError*>(&e)) return "RingMismatchError";
    if (dynamic_cast<const SizeLimitError*>(&e)) return "SizeLimitError";
    if (dynamic_cast<const ClosureDivergedError*>(&e)) return "ClosureDivergedError";
    if (dynamic_cast<const Error*>(&e)) return "Error";
    return "InternalError";
}

inline CommandResult error_result(const std::string& command, const std::exception& e) {
    CommandResult out;
    out.report.section("command").add("name", command);
    out.report.section("error").add("kind", error_kind(e)).add("message", std::string(e.what()));
    if (auto* p = dynamic_cast<const ParseError*>(&e); p && p->line()) out.report.add("line", p->line());
    out.exit_code = 1;
    return out;
}

namespace detail {

inline std::string path_list(const KGraph& g, const std::vector<Path>& ps) {
    std::string s = "[";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + g.path_str(ps[i]);
    return s + "]";
}

inline void add_periodicity(Report& r, const KGraph& g, const PeriodicityWitness& w) {
    r.add("periodicity.vertex", g.vertex_name(w.vertex));
    r.add("periodicity.m", w.m.str());
    r.add("periodicity.n", w.n.str());
    r.add("periodicity.cycle", "(" + g.path_str(w.cycle.mu) + ", " + g.path_str(w.cycle.nu) + ")");
    r.add("periodicity.initial_cycle", g.path_str(w.initial_cycle));
}

inline Caps caps_for(const KGraph& g, const std::optional<DegreeVector>& bound) {
    return bound ? Caps::with_bound(g, *bound) : Caps::defaults(g);
}

template <class F>
CommandResult guarded(const std::string& command, F&& body) {
    try {
        CommandResult out;
        out.report.section("command").add("name", command);
        body(out);
        return out;
    } catch (const std::exception& e) {
        return error_result(command, e);
    }
}

}  // namespace detail

inline CommandResult run_validate(const std::string& spec) {
    return detail::guarded("validate", [&](CommandResult& out) {
        const KGraph g = parse_graph_spec(spec);
        add_graph_summary(out.report, g);
        out.report.section("result").add("status", "valid");
    });
}

inline CommandResult run_analyze(const std::string& spec, const std::optional<DegreeVector>& bound) {
    return detail::guarded("analyze", [&](CommandResult& out) {
        const KGraph g = parse_graph_spec(spec);
        const Caps caps = detail::caps_for(g, bound);
        Report& r = out.report;
        add_graph_summary(r, g);
        r.section("bounds").add("saturation", caps.saturation.str()).add("cycles", caps.cycles.str()).add("entrance", caps.entrance.str());
        const auto initial = find_initial_cycles(g);
        r.section("lattice");
        try {
            auto lat = sat_hereditary_lattice(g, caps.saturation, initial);
            r.add("size", lat.sets.size());
            r.add("exact", lat.exact);
            for (std::size_t i = 0; i < lat.sets.size(); ++i) r.add("set" + std::to_string(i), set_str(g, lat.sets[i]));
        } catch (const SizeLimitError& e) {
            r.add("status", "skipped").add("reason", std::string(e.what()));
        }
        auto cof = is_cofinal(g, caps.saturation, initial);
        r.section("cofinality").add("status", to_string(cof.status));
        if (cof.witness) r.add("witness", set_str(g, *cof.witness));
        if (cof.witness_vertex) r.add("witness_vertex", g.vertex_name(*cof.witness_vertex));
        const auto cycles = find_cycles(g);
        r.section("cycles").add("count", cycles.size()).add("list", detail::path_list(g, cycles));
        r.add("initial", detail::path_list(g, initial));
        const auto gen = find_generalized_cycles(g, caps.cycles, caps.entrance);
        std::size_t with_entrance = 0;
        for (const auto& c : gen) with_entrance += c.entrance.has_value();
        r.section("generalized_cycles").add("count", gen.size()).add("with_entrance", with_entrance);
        auto ap = aperiodicity_analysis(g, caps.cycles);
        r.section("aperiodicity").add("status", to_string(ap.status)).add("basis", ap.basis);
        if (ap.witness) detail::add_periodicity(r, g, *ap.witness);
    });
}

inline CommandResult run_classify(const std::string& spec, const Ring& ring, const std::optional<DegreeVector>& bound) {
    return detail::guarded("classify", [&](CommandResult& out) {
        auto g = std::make_shared<const KGraph>(parse_graph_spec(spec));
        const Caps caps = detail::caps_for(*g, bound);
        Report& r = out.report;
        add_graph_summary(r, *g);
        const Verdict v = classify(g, ring, caps);
        r.section("ring").add("name", v.ring).add("field", v.ring_is_field);
        r.section("bounds").add("saturation", caps.saturation.str()).add("cycles", caps.cycles.str()).add("entrance", caps.entrance.str());
        r.section("verdict").add("outcome", to_string(v.outcome));
        r.add("cofinal", to_string(v.simplicity.cofinality.status));
        r.add("aperiodic", to_string(v.simplicity.aperiodicity.status));
        r.add("simplicity", to_string(v.simplicity.status));
        r.add("simplicity.meaning", v.simplicity.meaning);
        r.add("unverified", v.unverified);
        r.section("witnesses");
        if (v.cycle) r.add("cycle", g->path_str(*v.cycle));
        for (const auto& w : v.reach)
            r.add("reach." + g->vertex_name(w.vertex), "cycle (" + g->path_str(w.cycle.mu) + ", " + g->path_str(w.cycle.nu) +
                                                          ") entrance " + g->path_str(*w.cycle.entrance) + " via " +
                                                          g->path_str(w.connecting));
        if (v.matrix) {
            r.add("matrix.vertex", g->vertex_name(v.matrix->vertex));
            r.add("matrix.size", v.matrix->size());
            r.add("matrix.claim", "KP_" + v.ring + " = M_" + std::to_string(v.matrix->size()) + "(" + v.ring + ")");
        }
        if (v.boundary_dimension) r.add("boundary.dimension", *v.boundary_dimension);
        if (v.hereditary_witness) r.add("hereditary", set_str(*g, *v.hereditary_witness));
        if (v.periodicity) detail::add_periodicity(r, *g, *v.periodicity);
        for (std::size_t i = 0; i < v.unknowns.size(); ++i) r.add("unknown" + std::to_string(i), v.unknowns[i]);
        for (std::size_t i = 0; i < v.notes.size(); ++i) r.add("note" + std::to_string(i), v.notes[i]);
        out.exit_code = exit_code(v);
    });
}

inline CommandResult run_eval(const std::string& spec, const Ring& ring, const std::string& expression) {
    return detail::guarded("eval", [&](CommandResult& out) {
        auto g = std::make_shared<const KGraph>(parse_graph_spec(spec));
        const AlgebraElement a = parse_element(g, ring, expression);
        Report& r = out.report;
        r.section("ring").add("name", ring.name());
        r.section("element").add("input", expression).add("span", a.str()).add("terms", a.size());
        const NormalForm nf = normal_form(a);
        r.section("normal_form").add("zero", nf.is_zero()).add("unverified", nf.unverified).add("coordinates", nf.coordinate_count());
        std::size_t i = 0;
        for (const auto& b : nf.blocks)
            for (const auto& [pr, c] : b.coords)
                r.add("coord" + std::to_string(i++), "grade " + grade_str(b.key.grade) + " corner (" + g->path_str(b.key.alpha) + ", " +
                                                          g->path_str(b.key.beta) + ") Theta(" + g->path_str(pr.first) + ", " +
                                                          g->path_str(pr.second) + ") = " + scalar_str(c));
        r.section("grading");
        for (const auto& [n, part] : a.grading_decompose()) r.add(grade_str(n), part.str());
    });
}

inline CommandResult run_generate(const GeneratorConfig& cfg, std::string& spec_out) {
    return detail::guarded("generate", [&](CommandResult& out) {
        const KGraph g = generate_graph(cfg);
        spec_out = write_graph_spec(g);
        add_graph_summary(out.report, g);
        out.report.section("generator").add("seed", std::to_string(cfg.seed));
    });
}

}  // namespace kpa
