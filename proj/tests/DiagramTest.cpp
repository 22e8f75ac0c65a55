#include "mbqc/Diagram.hpp"

#include "TestHelpers.hpp"

#include <gtest/gtest.h>

#include <random>

namespace mbqc {
namespace {

LabelledOpenGraph randomGraph(std::mt19937& rng, std::size_t n, double p = 0.4) {
    LabelledOpenGraph g;
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < n; ++i) {
        vs.push_back(g.addVertex(Plane::XY, Angle::zero()));
    }
    std::bernoulli_distribution edge(p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edge(rng)) {
                g.addEdge(vs[i], vs[j]);
            }
        }
    }
    return g;
}

TEST(Diagram, OddNeighbourhoodsOfWorkedExample) {
    const auto ex = testing::sixVertexExample();
    const auto& g = ex.graph;
    EXPECT_EQ(oddNeighbourhood(g, {ex.b}), (VertexSet{ex.a, ex.c, ex.d, ex.e}));
    EXPECT_EQ(oddNeighbourhood(g, {ex.c}), (VertexSet{ex.b, ex.d, ex.f}));
    EXPECT_EQ(oddNeighbourhood(g, {ex.c, ex.d}), (VertexSet{ex.c, ex.d, ex.f}));
    EXPECT_EQ(oddNeighbourhood(g, {ex.d, ex.e, ex.f}), VertexSet{});
}

TEST(Diagram, OddNeighbourhoodEmptySet) {
    const auto ex = testing::sixVertexExample();
    EXPECT_EQ(oddNeighbourhood(ex.graph, {}), VertexSet{});
}

TEST(Diagram, OddNeighbourhoodIsLinear) {
    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        const auto g = randomGraph(rng, 7);
        std::bernoulli_distribution pick(0.5);
        VertexSet a;
        VertexSet b;
        for (const Vertex v : g.vertices()) {
            if (pick(rng)) {
                a.insert(v);
            }
            if (pick(rng)) {
                b.insert(v);
            }
        }
        VertexSet sym = a;
        for (const Vertex v : b) {
            if (!sym.insert(v).second) {
                sym.erase(v);
            }
        }
        VertexSet expect = oddNeighbourhood(g, a);
        for (const Vertex v : oddNeighbourhood(g, b)) {
            if (!expect.insert(v).second) {
                expect.erase(v);
            }
        }
        EXPECT_EQ(oddNeighbourhood(g, sym), expect);
        // per-vertex XOR route
        VertexSet direct;
        for (const Vertex v : sym) {
            for (const Vertex w : g.neighbours(v)) {
                if (!direct.insert(w).second) {
                    direct.erase(w);
                }
            }
        }
        EXPECT_EQ(oddNeighbourhood(g, sym), direct);
    }
}

TEST(Diagram, LocalComplementTriangleAndPath) {
    LabelledOpenGraph tri;
    const auto u = tri.addVertex(Plane::XY, Angle::zero());
    const auto v = tri.addVertex(Plane::XY, Angle::zero());
    const auto w = tri.addVertex(Plane::XY, Angle::zero());
    tri.addEdge(u, v);
    tri.addEdge(u, w);
    tri.addEdge(v, w);
    const auto r = localComplement(tri, u);
    EXPECT_FALSE(r.hasEdge(v, w));
    EXPECT_TRUE(r.hasEdge(u, v));
    EXPECT_TRUE(r.hasEdge(u, w));

    LabelledOpenGraph path;
    const auto a = path.addVertex(Plane::XY, Angle::zero());
    const auto m = path.addVertex(Plane::XY, Angle::zero());
    const auto b = path.addVertex(Plane::XY, Angle::zero());
    path.addEdge(a, m);
    path.addEdge(m, b);
    const auto r2 = localComplement(path, m);
    EXPECT_TRUE(r2.hasEdge(a, b));
    EXPECT_TRUE(r2.hasEdge(a, m));
    EXPECT_TRUE(r2.hasEdge(m, b));
}

TEST(Diagram, LocalComplementIsInvolutionAndKeepsOwnNeighbourhood) {
    std::mt19937 rng(4);
    for (int t = 0; t < 30; ++t) {
        const auto g = randomGraph(rng, 6);
        for (const Vertex u : g.vertices()) {
            const auto once = localComplement(g, u);
            EXPECT_EQ(once.neighbours(u), g.neighbours(u));
            EXPECT_EQ(localComplement(once, u), g);
        }
    }
}

TEST(Diagram, PivotEqualsThreeComplementsAndIsSymmetric) {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        const auto g = randomGraph(rng, 6);
        for (const auto& [u, v] : g.edges()) {
            const auto direct = pivot(g, u, v);
            EXPECT_EQ(direct, localComplement(localComplement(localComplement(g, u), v), u));
            EXPECT_EQ(direct, pivot(g, v, u));
            // vertices away from N(u) ∪ N(v) keep their adjacency
            for (const Vertex x : g.vertices()) {
                if (g.neighbours(u).count(x) || g.neighbours(v).count(x) || x == u || x == v) {
                    continue;
                }
                EXPECT_EQ(direct.neighbours(x), g.neighbours(x));
            }
        }
    }
}

TEST(Diagram, PivotSingleEdge) {
    LabelledOpenGraph g;
    const auto u = g.addVertex(Plane::XY, Angle::zero());
    const auto v = g.addVertex(Plane::XY, Angle::zero());
    g.addEdge(u, v);
    EXPECT_EQ(pivot(g, u, v), g);
    LabelledOpenGraph h;
    const auto x = h.addVertex(Plane::XY, Angle::zero());
    const auto y = h.addVertex(Plane::XY, Angle::zero());
    (void)y;
    EXPECT_THROW((void)pivot(h, x, y), MbqcError);
}

TEST(Diagram, IdentityRemovalOnPath) {
    LabelledOpenGraph g;
    const auto u = g.addVertex(Plane::XY, Angle::zero());
    const auto v = g.addVertex(Plane::XY, Angle::zero());
    const auto w = g.addVertex(Plane::XY, Angle::zero());
    g.addEdge(u, v);
    g.addEdge(v, w);
    const auto r = identityRemoval(g, v, w);
    EXPECT_EQ(r.vertices(), VertexSet{w});
    EXPECT_EQ(r.degree(w), 0U);
}

TEST(Diagram, IdentityRemovalFiveVertexInstance) {
    // u - v - w with x adjacent to u and w, y adjacent to u only; the fused
    // vertex w keeps y and loses the common neighbour x
    LabelledOpenGraph g;
    const auto u = g.addVertex(Plane::XY, Angle::zero());
    const auto v = g.addVertex(Plane::XY, Angle::zero());
    const auto w = g.addVertex(Plane::XY, Angle::zero());
    const auto x = g.addVertex(Plane::XY, Angle::zero());
    const auto y = g.addVertex(Plane::XY, Angle::zero());
    g.addEdge(u, v);
    g.addEdge(v, w);
    g.addEdge(u, x);
    g.addEdge(w, x);
    g.addEdge(u, y);
    const auto r = identityRemoval(g, v, w);
    EXPECT_EQ(r.vertices(), (VertexSet{w, x, y}));
    EXPECT_FALSE(r.hasEdge(w, x));
    EXPECT_TRUE(r.hasEdge(w, y));
    EXPECT_FALSE(r.hasEdge(x, y));
}

TEST(Diagram, IdentityRemovalRejectsBadShapes) {
    LabelledOpenGraph g;
    const auto u = g.addVertex(Plane::XY, Angle::zero());
    const auto v = g.addVertex(Plane::XY, Angle::zero());
    const auto w = g.addVertex(Plane::XY, Angle::zero());
    g.addEdge(u, v);
    g.addEdge(v, w);
    g.addEdge(u, w);
    EXPECT_THROW((void)identityRemoval(g, v, w), MbqcError); // u ~ w
    const auto z = g.addVertex(Plane::XY, Angle::zero());
    g.addEdge(v, z);
    EXPECT_THROW((void)identityRemoval(g, v, w), MbqcError); // degree 3
}

TEST(Diagram, IsMbqcForm) {
    MbqcDiagram d;
    const auto v = d.graph.addVertex();
    d.graph.outputs().push_back(v);
    EXPECT_TRUE(isMbqcForm(d));
    d.outputClifford[v] = LocalClifford::hadamard();
    EXPECT_FALSE(isMbqcForm(d));
    d.outputClifford[v] = LocalClifford::identity();
    EXPECT_TRUE(isMbqcForm(d));
}

TEST(Diagram, CheckRejectsBrokenLabelInvariant) {
    LabelledOpenGraph g;
    const auto v = g.addVertex(); // no measurement, not an output
    (void)v;
    EXPECT_THROW(g.check(), MbqcError);
}

TEST(Diagram, SelfLoopsAndUnknownVerticesRejected) {
    LabelledOpenGraph g;
    const auto v = g.addVertex(Plane::XY, Angle::zero());
    EXPECT_THROW(g.addEdge(v, v), MbqcError);
    EXPECT_THROW(g.addEdge(v, 42), MbqcError);
    EXPECT_THROW((void)localComplement(g, 42), MbqcError);
    EXPECT_THROW((void)oddNeighbourhood(g, {42}), MbqcError);
}

} // namespace
} // namespace mbqc
