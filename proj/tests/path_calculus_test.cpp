#include <gtest/gtest.h>

#include "kpa/corpus.hpp"
#include "kpa/generate.hpp"
#include "kpa/path_calculus.hpp"
#include "oracles.hpp"

using namespace kpa;

namespace {

KGraph random2(std::uint64_t seed, std::size_t vertices = 3) {
    GeneratorConfig cfg;
    cfg.rank = 2;
    cfg.vertices = vertices;
    cfg.min_edges = 1;
    cfg.max_edges = 3;
    cfg.seed = seed;
    return generate_graph(cfg);
}

Path edge(const KGraph& g, const char* name) { return g.edge_path(*g.find_edge(name)); }

}  // namespace

TEST(Mce, Basics) {
    auto g = corpus::rose(2);
    auto a = edge(g, "a"), b = edge(g, "b");
    EXPECT_EQ(mce(g, a, a), std::vector<Path>{a});
    EXPECT_TRUE(mce(g, a, b).empty());
    auto w = omega_graph(2, {1, 1});
    auto o = *w.find_vertex("p0_0");
    auto m = mce(w, edge(w, "c1_p0_0"), edge(w, "c2_p0_0"));
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m.front(), w.paths_of_degree({1, 1}, o).front());
}

TEST(LambdaMin, Basics) {
    auto g = corpus::rose(2);
    auto a = edge(g, "a");
    auto v = g.vertex_path(0);
    auto self = lambda_min(g, a, a);
    ASSERT_EQ(self.size(), 1u);
    EXPECT_EQ(self[0].alpha, v);
    EXPECT_EQ(self[0].beta, v);
    auto vs = lambda_min(g, a, v);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].alpha, v);
    EXPECT_EQ(vs[0].beta, a);
}

TEST(Mce, AgreesWithBruteForceAndIsSymmetric) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto g = random2(seed);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto ps = g.paths_up_to(v, {1, 1});
            for (const auto& mu : ps)
                for (const auto& nu : ps) {
                    auto got = mce(g, mu, nu);
                    std::set<oracle::Morphism> mine;
                    for (const auto& l : got) mine.insert(oracle::morphism_of(g, l));
                    auto ref = oracle::common_extensions(g, oracle::morphism_of(g, mu), oracle::morphism_of(g, nu));
                    ASSERT_EQ(mine, std::set<oracle::Morphism>(ref.begin(), ref.end()));
                    ASSERT_EQ(got, mce(g, nu, mu));
                    auto lm = lambda_min(g, mu, nu);
                    ASSERT_EQ(lm.size(), got.size());
                    auto rev = lambda_min(g, nu, mu);
                    std::vector<MinimalPair> swapped;
                    for (const auto& p : rev) swapped.push_back({p.beta, p.alpha});
                    std::sort(swapped.begin(), swapped.end());
                    ASSERT_EQ(lm, swapped);
                    for (const auto& p : lm) ASSERT_EQ(g.compose(mu, p.alpha), g.compose(nu, p.beta));
                }
        }
    }
}

TEST(Mce, MinimalityTruncation) {
    for (std::uint64_t seed = 20; seed <= 30; ++seed) {
        auto g = random2(seed);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto ps = g.paths_up_to(v, {1, 1});
            for (const auto& mu : ps)
                for (const auto& nu : ps) {
                    const auto join = mu.degree.join(nu.degree);
                    auto found = mce(g, mu, nu);
                    for (const auto& tau : g.paths_up_to(v, join + DegreeVector{1, 1})) {
                        if (!join.le(tau.degree) || !g.has_prefix(tau, mu) || !g.has_prefix(tau, nu)) continue;
                        auto head = g.subpath(tau, DegreeVector::zero(2), join);
                        ASSERT_NE(std::find(found.begin(), found.end(), head), found.end());
                    }
                }
        }
    }
}

TEST(ExtSet, Basics) {
    auto g = corpus::rose(2);
    auto a = edge(g, "a"), b = edge(g, "b");
    EXPECT_EQ(ext_set(g, a, {a}), std::vector<Path>{g.vertex_path(0)});
    EXPECT_TRUE(ext_set(g, a, {b}).empty());
}

TEST(LePaths, Examples) {
    auto p = corpus::point();
    EXPECT_EQ(le_paths(p, 0, {3}), std::vector<Path>{p.vertex_path(0)});
    auto l = corpus::line();
    EXPECT_EQ(le_paths(l, 0, {2}), std::vector<Path>{edge(l, "e")});
    auto c = corpus::commuting_loops();
    auto got = le_paths(c, 0, {1, 1});
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0].degree, DegreeVector({1, 1}));
}

TEST(Exhaustive, RoseExamples) {
    auto g = corpus::rose(2);
    auto a = edge(g, "a"), b = edge(g, "b");
    EXPECT_EQ(is_exhaustive(g, 0, {a, b}).status, Exhaustiveness::Exhaustive);
    auto r = is_exhaustive(g, 0, {a});
    EXPECT_EQ(r.status, Exhaustiveness::NotExhaustive);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, b);
    auto e = is_exhaustive(g, 0, {});
    EXPECT_EQ(e.status, Exhaustiveness::NotExhaustive);
    EXPECT_EQ(*e.witness, g.vertex_path(0));
}

TEST(Exhaustive, SmallBoundIsNotCertified) {
    auto g = corpus::rose(2);
    auto r = is_exhaustive(g, 0, {edge(g, "a"), edge(g, "b")}, DegreeVector{1});
    EXPECT_EQ(r.status, Exhaustiveness::ExhaustiveUpToBound);
}

TEST(Exhaustive, DefaultBoundAgreesWithLargerBruteForce) {
    std::mt19937 rng(99);
    std::size_t decided = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto g = random2(seed, 1 + seed % 4);
        VertexId v = static_cast<VertexId>(seed % g.vertex_count());
        auto pool = g.paths_up_to(v, {2, 2});
        std::vector<Path> E;
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::size_t i = 0; i < std::min<std::size_t>(pool.size(), 1 + seed % 3); ++i) E.push_back(pool[i]);
        auto verdict = is_exhaustive(g, v, E);
        bool brute = oracle::maximal_paths_covered(g, v, E, verdict.bound_used + DegreeVector{2, 2});
        if (verdict.status == Exhaustiveness::Exhaustive) {
            ++decided;
            EXPECT_TRUE(brute) << "seed " << seed;
        } else if (verdict.status == Exhaustiveness::NotExhaustive) {
            ++decided;
            EXPECT_FALSE(brute) << "seed " << seed;
            for (const auto& mu : E) EXPECT_FALSE(have_common_extension(g, *verdict.witness, mu));
        }
    }
    EXPECT_GT(decided, 50u);
}

TEST(Exhaustive, WitnessesAreExtensionClosed) {
    for (std::uint64_t seed = 5; seed <= 25; ++seed) {
        auto g = random2(seed);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto edges = g.paths_of_degree({1, 0}, v);
            if (edges.empty()) continue;
            std::vector<Path> E{edges.front()};
            auto r = is_exhaustive(g, v, E);
            if (!r.refuted()) continue;
            for (const auto& n : degrees_up_to({1, 1}))
                for (const auto& ext : g.extensions(*r.witness, n))
                    for (const auto& mu : E) EXPECT_FALSE(have_common_extension(g, ext, mu));
        }
    }
}

TEST(Exhaustive, LePathFamiliesAreExhaustive) {
    for (const auto& [name, g] : corpus::all()) {
        if (g.rank() > 2) continue;
        const auto n = DegreeVector::filled(g.rank(), 1);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!g.receives_any(v)) continue;
            std::vector<Path> E;
            for (auto& p : le_paths(g, v, n))
                if (!p.degree.is_zero()) E.push_back(p);
            auto r = is_exhaustive(g, v, E, n + DegreeVector::filled(g.rank(), 2));
            EXPECT_FALSE(r.refuted()) << name;
        }
    }
}

TEST(ExtSet, PropagatesExhaustiveness) {
    for (const auto& [name, g] : corpus::all()) {
        if (g.rank() > 2 || g.vertex_count() > 5) continue;
        const auto one = DegreeVector::filled(g.rank(), 1);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::vector<Path> E;
            for (auto& p : le_paths(g, v, one))
                if (!p.degree.is_zero()) E.push_back(p);
            if (E.empty() || !is_exhaustive(g, v, E).exhaustive()) continue;
            for (const auto& mu : g.paths_up_to(v, DegreeVector::filled(g.rank(), 2))) {
                auto ext = ext_set(g, mu, E);
                EXPECT_TRUE(oracle::maximal_paths_covered(g, mu.source, ext, DegreeVector::filled(g.rank(), 4))) << name;
            }
        }
    }
}

TEST(Boundary, Examples) {
    auto loop = corpus::single_loop();
    auto s = boundary_segments(loop, 0, {3});
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].path.degree, DegreeVector({3}));
    auto p = corpus::point();
    auto ps = boundary_segments(p, 0, {2});
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_EQ(ps[0].frontier[0], Frontier::NoEdges);
    EXPECT_EQ(boundary_segments(corpus::rose(2), 0, {2}).size(), 4u);
}

TEST(Boundary, ShiftRoundTrip) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = random2(seed);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (const auto& seg : boundary_segments(g, v, {2, 2})) {
                EXPECT_EQ(shift(g, seg, DegreeVector::zero(2)), seg);
                auto end = shift(g, seg, seg.path.degree);
                EXPECT_TRUE(end.path.is_vertex());
                EXPECT_EQ(end.path.range, seg.path.source);
                for (const auto& n : degrees_up_to(seg.path.degree)) {
                    auto tail = shift(g, seg, n);
                    EXPECT_EQ(g.compose(g.factorize(seg.path, n).first, tail.path), seg.path);
                }
                for (std::uint32_t i = 0; i < 2; ++i)
                    if (seg.frontier[i] == Frontier::NoEdges) { EXPECT_FALSE(g.receives(seg.path.source, i)); }
            }
    }
}
