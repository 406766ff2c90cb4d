#include <gtest/gtest.h>

#include <random>

#include "kpa/corpus.hpp"
#include "kpa/cycles.hpp"
#include "kpa/generate.hpp"
#include "kpa/structure.hpp"
#include "oracles.hpp"

using namespace kpa;

namespace {

Path edge(const KGraph& g, const char* name) { return g.edge_path(*g.find_edge(name)); }
VertexId vx(const KGraph& g, const char* name) { return *g.find_vertex(name); }
DegreeVector sat_cap(const KGraph& g) {
    return DegreeVector::filled(g.rank(), static_cast<std::uint32_t>(g.vertex_count() + 1));
}
SaturationResult sat(const KGraph& g, const VertexSet& H) {
    return saturated_closure(g, H, sat_cap(g), find_initial_cycles(g));
}

}  // namespace

TEST(Hereditary, Examples) {
    auto g = corpus::line();
    EXPECT_TRUE(hereditary_closure(g, {}).empty());
    EXPECT_EQ(hereditary_closure(g, all_vertices(g)), all_vertices(g));
    EXPECT_EQ(hereditary_closure(g, {vx(g, "v")}), all_vertices(g));
    EXPECT_EQ(hereditary_closure(g, {vx(g, "w")}), VertexSet{vx(g, "w")});
}

TEST(Hereditary, IsClosureOperator) {
    std::mt19937 rng(3);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratorConfig cfg;
        cfg.vertices = 5;
        cfg.seed = seed;
        cfg.min_edges = 0;
        auto g = generate_graph(cfg);
        for (int t = 0; t < 10; ++t) {
            VertexSet a, b;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (rng() % 2) a.insert(v);
                if (rng() % 2) b.insert(v);
            }
            VertexSet ab = a;
            ab.insert(b.begin(), b.end());
            auto ca = hereditary_closure(g, a);
            EXPECT_TRUE(std::includes(ca.begin(), ca.end(), a.begin(), a.end()));
            EXPECT_EQ(hereditary_closure(g, ca), ca);
            auto cab = hereditary_closure(g, ab);
            EXPECT_TRUE(std::includes(cab.begin(), cab.end(), ca.begin(), ca.end()));
        }
    }
}

TEST(Saturation, Examples) {
    auto g = corpus::line();
    auto full = sat(g, all_vertices(g));
    EXPECT_EQ(full.closure, all_vertices(g));
    EXPECT_TRUE(full.exact);
    auto r = sat(g, {vx(g, "w")});
    EXPECT_EQ(r.closure, all_vertices(g));
    ASSERT_EQ(r.steps.size(), 1u);
    EXPECT_EQ(r.steps[0].family, std::vector<Path>{edge(g, "e")});

    auto h = GraphBuilder(1).vertex("v").vertex("w").vertex("x").edge("e", 1, "w", "v").edge("f", 1, "x", "v").build();
    auto s = sat(h, {vx(h, "w")});
    EXPECT_EQ(s.closure, VertexSet{vx(h, "w")});
    EXPECT_TRUE(s.exact);
    EXPECT_EQ(s.excluded.at(vx(h, "v")).kind, NonAddability::Kind::EscapePath);
}

TEST(Saturation, InitialCycleCertificate) {
    // v receives from w and from a loop vertex u that also leads into w.
    auto g = GraphBuilder(1).vertex("v").vertex("u").vertex("w").edge("a", 1, "u", "u").edge("e", 1, "u", "v")
                 .edge("f", 1, "w", "v").edge("g", 1, "w", "u").build();
    auto r = sat(g, {vx(g, "w")});
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.closure, VertexSet{vx(g, "w")});
    EXPECT_EQ(r.excluded.at(vx(g, "v")).kind, NonAddability::Kind::InitialCycle);
}

TEST(Lattice, Examples) {
    auto loop = corpus::single_loop();
    auto l = sat_hereditary_lattice(loop, sat_cap(loop), find_initial_cycles(loop));
    EXPECT_EQ(l.sets, (std::vector<VertexSet>{{}, {0}}));
    auto two = corpus::two_points();
    EXPECT_EQ(sat_hereditary_lattice(two, sat_cap(two), {}).sets, (std::vector<VertexSet>{{}, {0}, {1}, {0, 1}}));
    auto line = corpus::line();
    auto ll = sat_hereditary_lattice(line, sat_cap(line), {});
    EXPECT_TRUE(ll.exact);
    EXPECT_EQ(ll.sets, (std::vector<VertexSet>{{}, {0, 1}}));
}

TEST(Lattice, MatchesBruteForceOnCorpus) {
    for (const auto& [name, g] : corpus::all()) {
        if (g.vertex_count() > 5 || g.rank() > 2) continue;
        auto l = sat_hereditary_lattice(g, sat_cap(g), find_initial_cycles(g));
        EXPECT_TRUE(l.exact) << name;
        const auto two = DegreeVector::filled(g.rank(), 2);
        auto brute = oracle::brute_lattice(g, two, two + two);
        EXPECT_EQ(l.sets, brute) << name;
    }
}

TEST(Lattice, SizeLimit) {
    GraphBuilder b(1);
    for (int i = 0; i < 4; ++i) b.vertex("v" + std::to_string(i));
    auto g = b.build();
    EXPECT_THROW(sat_hereditary_lattice(g, {1}, {}, 3), SizeLimitError);
}

TEST(Cofinal, Examples) {
    auto l2 = corpus::rose(2);
    EXPECT_EQ(is_cofinal(l2, sat_cap(l2), find_initial_cycles(l2)).status, Tri::Yes);
    auto two = corpus::two_points();
    auto r = is_cofinal(two, sat_cap(two), {});
    EXPECT_EQ(r.status, Tri::No);
    EXPECT_EQ(*r.witness, VertexSet{0});
    auto line = corpus::line();
    EXPECT_EQ(is_cofinal(line, sat_cap(line), {}).status, Tri::Yes);
}

TEST(Cofinal, AgreesWithBoundarySegmentCheck) {
    for (const auto& [name, g] : corpus::all()) {
        if (g.rank() > 2) continue;
        auto r = is_cofinal(g, sat_cap(g), find_initial_cycles(g));
        ASSERT_NE(r.status, Tri::Unknown) << name;
        bool every = true;
        const auto depth = DegreeVector::filled(g.rank(), 3);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (VertexId w = 0; w < g.vertex_count(); ++w)
                for (const auto& x : boundary_segments(g, w, depth)) {
                    bool hit = false;
                    for (const auto& n : degrees_up_to(x.path.degree))
                        if (shortest_walk(g, v, g.vertex_at(x.path, n))) hit = true;
                    every = every && hit;
                }
        EXPECT_EQ(every, r.status == Tri::Yes) << name;
    }
}

TEST(Cycles, Examples) {
    EXPECT_TRUE(find_cycles(corpus::line()).empty());
    auto loop = corpus::single_loop();
    EXPECT_EQ(find_cycles(loop), std::vector<Path>{edge(loop, "a")});
    auto c = corpus::commuting_loops();
    EXPECT_EQ(find_cycles(c), (std::vector<Path>{edge(c, "b"), edge(c, "a")}));
}

TEST(GeneralizedCycle, Examples) {
    auto loop = corpus::single_loop();
    auto a = edge(loop, "a");
    auto v = loop.vertex_path(0);
    EXPECT_EQ(is_generalized_cycle(loop, a, v).status, Tri::Yes);
    auto aa = loop.compose(a, a);
    EXPECT_EQ(is_generalized_cycle(loop, aa, a).status, Tri::Yes);
    auto l2 = corpus::rose(2);
    EXPECT_EQ(is_generalized_cycle(l2, edge(l2, "a"), edge(l2, "b")).status, Tri::No);
    EXPECT_THROW(is_generalized_cycle(l2, edge(l2, "a"), edge(l2, "a")), EndpointError);
    auto line = corpus::line();
    EXPECT_THROW(is_generalized_cycle(line, edge(line, "e"), line.vertex_path(0)), EndpointError);
}

TEST(GeneralizedCycle, AgreesWithBruteForce) {
    for (const auto& [name, g] : corpus::all()) {
        if (g.rank() > 2) continue;
        const auto cap = DegreeVector::filled(g.rank(), 1);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto ps = g.paths_up_to(v, cap);
            for (const auto& mu : ps)
                for (const auto& nu : ps) {
                    if (mu == nu || mu.source != nu.source) continue;
                    auto r = is_generalized_cycle(g, mu, nu);
                    ASSERT_NE(r.status, Tri::Unknown) << name;
                    auto ext = ext_set(g, mu, {nu});
                    const auto big = r.verdict.bound_used + DegreeVector::filled(g.rank(), 2);
                    EXPECT_EQ(r.status == Tri::Yes, oracle::maximal_paths_covered(g, mu.source, ext, big)) << name;
                }
        }
    }
}

TEST(GeneralizedCycle, SearchExamples) {
    auto line = corpus::line();
    EXPECT_TRUE(find_generalized_cycles(line, {2}, {2}).empty());
    auto loop = corpus::single_loop();
    auto a = edge(loop, "a");
    auto found = find_generalized_cycles(loop, {2}, {2});
    auto has = [&](const Path& mu, const Path& nu) {
        return std::any_of(found.begin(), found.end(), [&](const auto& c) { return c.mu == mu && c.nu == nu; });
    };
    EXPECT_TRUE(has(a, loop.vertex_path(0)));
    EXPECT_TRUE(has(loop.compose(a, a), a));
    for (const auto& c : found) EXPECT_FALSE(c.entrance);
    auto l2 = corpus::rose(2);
    for (const auto& c : find_generalized_cycles(l2, {1}, {1}))
        EXPECT_FALSE(c.mu.degree.total() == 1 && c.nu.degree.total() == 1);
}

TEST(Entrance, Examples) {
    auto l2 = corpus::rose(2);
    auto e = find_entrance(l2, edge(l2, "a"), l2.vertex_path(0), {2});
    ASSERT_TRUE(e);
    EXPECT_EQ(*e, edge(l2, "b"));
    auto loop = corpus::single_loop();
    EXPECT_FALSE(find_entrance(loop, edge(loop, "a"), loop.vertex_path(0), {6}));
}

TEST(InitialCycles, Examples) {
    auto loop = corpus::single_loop();
    EXPECT_EQ(find_initial_cycles(loop), std::vector<Path>{edge(loop, "a")});
    auto t = corpus::loop_into_torus();
    EXPECT_FALSE(is_initial_cycle(t, edge(t, "a")));
    for (const auto& c : find_initial_cycles(t)) {
        EXPECT_EQ(c.range, vx(t, "w"));
        EXPECT_TRUE(is_initial_cycle(t, c));
    }
    auto c = corpus::commuting_loops();
    auto ic = find_initial_cycles(c);
    ASSERT_FALSE(ic.empty());
    for (const auto& p : ic) EXPECT_EQ(p.degree, DegreeVector({1, 1}));
}

TEST(InitialCycles, ExistenceMatchesBruteForce) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        GeneratorConfig cfg;
        cfg.vertices = 1 + seed % 4;
        cfg.seed = seed;
        cfg.min_edges = 0;
        auto g = generate_graph(cfg);
        bool brute = false;
        for (VertexId v = 0; v < g.vertex_count() && !brute; ++v)
            for (const auto& p : g.paths_up_to(v, DegreeVector::filled(2, static_cast<std::uint32_t>(g.vertex_count()))))
                if (p.source == v && is_initial_cycle(g, p)) brute = true;
        EXPECT_EQ(!find_initial_cycles(g).empty(), brute) << seed;
    }
}

TEST(InitialCycleReaching, Examples) {
    auto loop = corpus::single_loop();
    auto r = initial_cycle_reaching(loop, edge(loop, "a"));
    EXPECT_EQ(r.initial_cycle, edge(loop, "a"));
    EXPECT_EQ(r.connecting_path, loop.vertex_path(0));
    auto t = corpus::loop_into_torus();
    auto s = initial_cycle_reaching(t, edge(t, "a"));
    EXPECT_TRUE(is_initial_cycle(t, s.initial_cycle));
    EXPECT_EQ(s.initial_cycle.range, vx(t, "w"));
    EXPECT_EQ(s.connecting_path, edge(t, "c"));
    EXPECT_THROW(initial_cycle_reaching(t, t.vertex_path(0)), NoCycleError);
}

TEST(InitialCycleReaching, CertifiedOnRandomGraphs) {
    std::size_t checked = 0;
    for (std::uint64_t seed = 1; checked < 30 && seed < 400; ++seed) {
        GeneratorConfig cfg;
        cfg.rank = 1 + seed % 2;
        cfg.vertices = 2 + seed % 4;
        cfg.seed = seed;
        auto g = generate_graph(cfg);
        for (const auto& c : find_cycles(g)) {
            auto r = initial_cycle_reaching(g, c);
            ASSERT_TRUE(is_initial_cycle(g, r.initial_cycle));
            ASSERT_EQ(r.connecting_path.range, c.range);
            ASSERT_EQ(r.connecting_path.source, r.initial_cycle.range);
            ++checked;
        }
    }
    EXPECT_GE(checked, 30u);
}

TEST(Aperiodicity, Examples) {
    auto loop = corpus::single_loop();
    auto a = aperiodicity_analysis(loop, {2});
    ASSERT_EQ(a.status, Tri::No);
    EXPECT_EQ(a.witness->m, DegreeVector({0}));
    EXPECT_EQ(a.witness->n, DegreeVector({1}));
    EXPECT_EQ(aperiodicity_analysis(corpus::rose(2), {2}).status, Tri::Yes);
    auto c = aperiodicity_analysis(corpus::commuting_loops(), {2, 2});
    ASSERT_EQ(c.status, Tri::No);
    EXPECT_EQ(c.witness->m, DegreeVector({1, 0}));
    EXPECT_EQ(c.witness->n, DegreeVector({0, 1}));
    EXPECT_EQ(aperiodicity_analysis(corpus::line(), {2}).status, Tri::Yes);
}

TEST(Aperiodicity, CommutingLoopsHasUniqueBoundaryBehaviour) {
    auto g = corpus::commuting_loops();
    for (const auto& x : boundary_segments(g, 0, {3, 3})) {
        const DegreeVector m{1, 0}, n{0, 1};
        const auto len = x.path.degree - DegreeVector{1, 1};
        EXPECT_EQ(g.subpath(x.path, m, m + len), g.subpath(x.path, n, n + len));
    }
}

TEST(Aperiodicity, WitnessesEmbedEntranceFreeCycles) {
    for (const auto& [name, g] : corpus::all()) {
        auto a = aperiodicity_analysis(g, DegreeVector::filled(g.rank(), 2));
        if (a.status != Tri::No) continue;
        const auto& w = *a.witness;
        EXPECT_NE(w.m, w.n);
        const auto top = w.m.join(w.n);
        EXPECT_EQ(w.cycle.mu.degree, top) << name;
        EXPECT_EQ(w.cycle.nu.degree, w.n + (top - w.m)) << name;
        EXPECT_EQ(is_generalized_cycle(g, w.cycle.mu, w.cycle.nu).status, Tri::Yes);
        for (std::uint32_t b = 1; b <= 3; ++b)
            EXPECT_FALSE(find_entrance(g, w.cycle, DegreeVector::filled(g.rank(), b))) << name;
    }
}

TEST(Aperiodicity, EntranceFreeInitialCycleMeansPeriodic) {
    for (const auto& [name, g] : corpus::all()) {
        bool entrance_free = false;
        for (const auto& c : find_initial_cycles(g))
            if (!find_entrance(g, c, g.vertex_path(c.source), DegreeVector::filled(g.rank(), 3))) entrance_free = true;
        if (entrance_free) { EXPECT_EQ(aperiodicity_analysis(g, DegreeVector::filled(g.rank(), 2)).status, Tri::No) << name; }
    }
}

TEST(Quotient, Examples) {
    auto g = corpus::cycle_with_tail();
    auto ic = find_initial_cycles(g);
    auto same = quotient_graph(g, {}, sat_cap(g), ic);
    EXPECT_EQ(same.vertex_count(), g.vertex_count());
    EXPECT_EQ(same.edge_count(), g.edge_count());
    auto none = quotient_graph(g, all_vertices(g), sat_cap(g), ic);
    EXPECT_EQ(none.vertex_count(), 0u);
    auto line = corpus::line();
    EXPECT_THROW(quotient_graph(line, {vx(line, "w")}, sat_cap(line), {}), NotSaturatedHereditaryError);
    auto two = corpus::two_points();
    auto q = quotient_graph(two, {0}, sat_cap(two), {});
    EXPECT_EQ(q.vertex_count(), 1u);
}

TEST(Quotient, ExhaustiveFamiliesSurvive) {
    for (const auto& [name, g] : corpus::all()) {
        if (g.rank() > 2 || g.vertex_count() > 5) continue;
        auto ic = find_initial_cycles(g);
        auto lattice = sat_hereditary_lattice(g, sat_cap(g), ic);
        const auto one = DegreeVector::filled(g.rank(), 1);
        for (const auto& H : lattice.sets) {
            if (H.empty() || H.size() == g.vertex_count()) continue;
            auto q = quotient_graph(g, H, sat_cap(g), ic);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (H.count(v)) continue;
                std::vector<Path> E;
                for (auto& p : le_paths(g, v, one))
                    if (!p.degree.is_zero()) E.push_back(p);
                if (E.empty() || !is_exhaustive(g, v, E).exhaustive()) continue;
                std::vector<Path> kept;
                for (const auto& p : E) {
                    if (H.count(p.source)) continue;
                    std::vector<EdgeId> word;
                    for (EdgeId e : p.word) word.push_back(*q.find_edge(g.edge(e).name));
                    kept.push_back(q.path_from_word(word));
                }
                auto qv = *q.find_vertex(g.vertex_name(v));
                EXPECT_TRUE(is_exhaustive(q, qv, kept).exhaustive()) << name;
            }
        }
    }
}
