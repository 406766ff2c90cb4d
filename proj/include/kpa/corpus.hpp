#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kpa/kgraph.hpp"

namespace kpa::corpus {

inline KGraph point() { return GraphBuilder(1).vertex("v").build(); }

inline KGraph two_points() { return GraphBuilder(1).vertex("u").vertex("v").build(); }

/// v <- w via the edge e.
inline KGraph line() { return GraphBuilder(1).vertex("v").vertex("w").edge("e", 1, "w", "v").build(); }

/// v <- w <- x.
inline KGraph line2() {
    return GraphBuilder(1).vertex("v").vertex("w").vertex("x").edge("e", 1, "w", "v").edge("f", 1, "x", "w").build();
}

inline KGraph single_loop() { return GraphBuilder(1).vertex("v").edge("a", 1, "v", "v").build(); }

/// One vertex with n loops; loops are named a, b, c, ... for n <= 26.
inline KGraph rose(unsigned n) {
    GraphBuilder b(1);
    b.vertex("v");
    for (unsigned i = 0; i < n; ++i) {
        std::string name = n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i + 1);
        b.edge(name, 1, "v", "v");
    }
    return b.build();
}

/// A loop a at w feeding v through e.
inline KGraph cycle_with_tail() {
    return GraphBuilder(1).vertex("v").vertex("w").edge("a", 1, "w", "w").edge("e", 1, "w", "v").build();
}

/// v <-e- w <-f- v.
inline KGraph two_cycle() {
    return GraphBuilder(1).vertex("v").vertex("w").edge("e", 1, "w", "v").edge("f", 1, "v", "w").build();
}

/// One vertex, a loop of each color, a b = b a.
inline KGraph commuting_loops() {
    return GraphBuilder(2).vertex("v").edge("a", 1, "v", "v").edge("b", 2, "v", "v").square("a", "b", "b", "a").build();
}

/// One vertex, color-1 loops a1 a2, color-2 loop b, with a1 b = b a2 and a2 b = b a1.
inline KGraph twisted_loops() {
    return GraphBuilder(2)
        .vertex("v")
        .edge("a1", 1, "v", "v")
        .edge("a2", 1, "v", "v")
        .edge("b", 2, "v", "v")
        .square("a1", "b", "b", "a2")
        .square("a2", "b", "b", "a1")
        .build();
}

/// One vertex, two loops of each color, all pairs commuting (the product of two roses).
inline KGraph product_roses() {
    GraphBuilder b(2);
    b.vertex("v");
    for (auto a : {"a1", "a2"}) b.edge(a, 1, "v", "v");
    for (auto c : {"b1", "b2"}) b.edge(c, 2, "v", "v");
    for (auto a : {"a1", "a2"})
        for (auto c : {"b1", "b2"}) b.square(a, c, c, a);
    return b.build();
}

/// A 2-graph with a color-1 loop at v and a color-2 edge leaving v toward w,
/// where w carries a loop of each color.
inline KGraph loop_into_torus() {
    return GraphBuilder(2)
        .vertex("v")
        .vertex("w")
        .edge("a", 1, "v", "v")
        .edge("c", 2, "w", "v")
        .edge("x", 1, "w", "w")
        .edge("y", 2, "w", "w")
        .square("x", "y", "y", "x")
        .square("a", "c", "c", "x")
        .build();
}

/// One vertex with a commuting loop of each of three colors.
inline KGraph three_loops() {
    return GraphBuilder(3)
        .vertex("v")
        .edge("a", 1, "v", "v")
        .edge("b", 2, "v", "v")
        .edge("c", 3, "v", "v")
        .square("a", "b", "b", "a")
        .square("a", "c", "c", "a")
        .square("b", "c", "c", "b")
        .build();
}

struct Named {
    std::string name;
    KGraph graph;
};

/// The named example graphs used across the test suites.
inline std::vector<Named> all() {
    std::vector<Named> out;
    out.push_back({"point", point()});
    out.push_back({"two_points", two_points()});
    out.push_back({"line", line()});
    out.push_back({"line2", line2()});
    out.push_back({"single_loop", single_loop()});
    out.push_back({"L2", rose(2)});
    out.push_back({"L3", rose(3)});
    out.push_back({"cycle_with_tail", cycle_with_tail()});
    out.push_back({"two_cycle", two_cycle()});
    out.push_back({"omega_1_2", omega_graph(1, {2})});
    out.push_back({"omega_2_11", omega_graph(2, {1, 1})});
    out.push_back({"omega_2_22", omega_graph(2, {2, 2})});
    out.push_back({"commuting_loops", commuting_loops()});
    out.push_back({"twisted_loops", twisted_loops()});
    out.push_back({"product_roses", product_roses()});
    out.push_back({"loop_into_torus", loop_into_torus()});
    out.push_back({"three_loops", three_loops()});
    return out;
}

}  // namespace kpa::corpus
