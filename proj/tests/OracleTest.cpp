#include "mbqc/Oracle.hpp"

#include "TestHelpers.hpp"
#include "mbqc/Circuit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace mbqc {
namespace {

using Cx = std::complex<double>;
using testing::bialgebraExample;
using testing::oracleEquivalent;
using testing::randomMixedPattern;
using testing::sixVertexExample;

// Independent dense interpretation: build the full 2^|V| tensor in one go and
// contract the measurement bras afterwards, scanning vertices in descending id
// (the implementation contracts eagerly in ascending order).
DenseMap naiveEvalDiagram(const MbqcDiagram& d) {
    const auto& g = d.graph;
    const std::vector<Vertex> verts(g.vertices().begin(), g.vertices().end());
    const std::size_t n = verts.size();
    const std::size_t nIn = g.inputs().size();
    const std::size_t dim = std::size_t{1} << n;
    auto slotOf = [&](Vertex v) {
        return static_cast<std::size_t>(
            std::find(verts.begin(), verts.end(), v) - verts.begin());
    };
    auto bitOf = [&](std::size_t x, std::size_t slot) { return (x >> (n - 1 - slot)) & 1U; };

    // state: 2^n x 2^in
    DenseMap st(dim, std::size_t{1} << nIn);
    const double s = 1.0 / std::numbers::sqrt2;
    for (std::size_t col = 0; col < st.cols; ++col) {
        for (std::size_t x = 0; x < dim; ++x) {
            Cx amp = 1.0;
            for (std::size_t k = 0; k < n; ++k) {
                const Vertex v = verts[k];
                if (g.isInput(v)) {
                    const std::size_t pos = static_cast<std::size_t>(
                        std::find(g.inputs().begin(), g.inputs().end(), v) - g.inputs().begin());
                    const bool want = (col >> (nIn - 1 - pos)) & 1U;
                    const auto m = d.inputCliffordOf(v).matrix();
                    amp *= want ? m[bitOf(x, k) == 0 ? 1 : 3] : m[bitOf(x, k) == 0 ? 0 : 2];
                } else {
                    amp *= s;
                }
            }
            for (const auto& [a, b] : g.edges()) {
                if (bitOf(x, slotOf(a)) && bitOf(x, slotOf(b))) {
                    amp = -amp;
                }
            }
            st.at(x, col) = amp;
        }
    }
    // contract bras in descending id order
    std::vector<Vertex> order(verts.rbegin(), verts.rend());
    std::vector<Vertex> live = verts;
    for (const Vertex v : order) {
        if (g.isOutput(v)) {
            continue;
        }
        const double a = g.angle(v).radians();
        std::array<Cx, 2> bra{};
        switch (g.plane(v)) {
        case Plane::XY: bra = {s, s * std::exp(Cx(0, -a))}; break;
        case Plane::XZ: bra = {std::cos(a / 2), std::sin(a / 2)}; break;
        case Plane::YZ: bra = {std::cos(a / 2), Cx(0, -1) * std::sin(a / 2)}; break;
        }
        const std::size_t slot = static_cast<std::size_t>(
            std::find(live.begin(), live.end(), v) - live.begin());
        const std::size_t stride = std::size_t{1} << (live.size() - 1 - slot);
        DenseMap next(st.rows / 2, st.cols);
        for (std::size_t col = 0; col < st.cols; ++col) {
            std::size_t out = 0;
            for (std::size_t x = 0; x < st.rows; ++x) {
                if ((x & stride) == 0) {
                    next.at(out++, col) = bra[0] * st.at(x, col) + bra[1] * st.at(x | stride, col);
                }
            }
        }
        st = std::move(next);
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(slot));
    }
    // permute rows into output order and apply output Cliffords
    DenseMap m(std::size_t{1} << g.outputs().size(), st.cols);
    for (std::size_t row = 0; row < m.rows; ++row) {
        std::size_t x = 0;
        for (std::size_t k = 0; k < g.outputs().size(); ++k) {
            if ((row >> (g.outputs().size() - 1 - k)) & 1U) {
                const std::size_t slot = static_cast<std::size_t>(
                    std::find(live.begin(), live.end(), g.outputs()[k]) - live.begin());
                x |= std::size_t{1} << (live.size() - 1 - slot);
            }
        }
        for (std::size_t col = 0; col < st.cols; ++col) {
            m.at(row, col) = st.at(x, col);
        }
    }
    for (std::size_t k = 0; k < g.outputs().size(); ++k) {
        const auto c = d.outputCliffordOf(g.outputs()[k]);
        if (c.isIdentity()) {
            continue;
        }
        const auto cm = c.matrix();
        DenseMap next(m.rows, m.cols);
        const std::size_t stride = std::size_t{1} << (g.outputs().size() - 1 - k);
        for (std::size_t col = 0; col < m.cols; ++col) {
            for (std::size_t x = 0; x < m.rows; ++x) {
                if ((x & stride) == 0) {
                    next.at(x, col) = cm[0] * m.at(x, col) + cm[1] * m.at(x | stride, col);
                    next.at(x | stride, col) = cm[2] * m.at(x, col) + cm[3] * m.at(x | stride, col);
                }
            }
        }
        m = std::move(next);
    }
    return m;
}

TEST(Oracle, SingleWireIsIdentity) {
    MbqcDiagram d;
    const auto v = d.graph.addVertex();
    d.graph.inputs().push_back(v);
    d.graph.outputs().push_back(v);
    const auto m = evalDiagram(d);
    ASSERT_EQ(m.rows, 2U);
    ASSERT_EQ(m.cols, 2U);
    EXPECT_NEAR(std::abs(m.at(0, 0) - Cx(1.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(m.at(1, 1) - Cx(1.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(m.at(0, 1)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(m.at(1, 0)), 0.0, 1e-12);
}

TEST(Oracle, BialgebraMapAndRank) {
    const auto ex = bialgebraExample();
    const auto m = evalDiagram(MbqcDiagram{ex.graph, {}, {}});
    DenseMap expect(4, 4);
    const int rows[4][4] = {{1, 1, 1, 1}, {1, -1, -1, 1}, {1, -1, -1, 1}, {1, 1, 1, 1}};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            expect.at(r, c) = rows[r][c];
        }
    }
    const auto eq = equivalentUpToScalar(m, expect, 1e-10);
    EXPECT_TRUE(eq.equivalent);
    EXPECT_EQ(m.rank(), 2U);
}

TEST(Oracle, MatchesIndependentContractionOrder) {
    const auto ex = sixVertexExample();
    const MbqcDiagram d{ex.graph, {}, {}};
    EXPECT_TRUE(oracleEquivalent(evalDiagram(d), naiveEvalDiagram(d), 1e-10));
    std::mt19937 rng(123);
    for (int t = 0; t < 15; ++t) {
        auto pat = randomMixedPattern(rng, 2, 5, 3);
        if (pat.diagram.graph.vertices().size() > 10) {
            continue;
        }
        const auto a = evalDiagram(pat.diagram);
        const auto b = naiveEvalDiagram(pat.diagram);
        ASSERT_EQ(a.rows, b.rows);
        double err = 0;
        for (std::size_t i = 0; i < a.data.size(); ++i) {
            err = std::max(err, std::abs(a.data[i] - b.data[i]));
        }
        EXPECT_LT(err, 1e-10); // same map, not just proportional
    }
}

TEST(Oracle, EquivalentUpToScalarBasics) {
    const auto cz = evalCircuit(parseCircuit("cz q0 q1"));
    auto scaled = cz;
    for (auto& e : scaled.data) {
        e *= Cx(0, 3);
    }
    const auto eq = equivalentUpToScalar(scaled, cz);
    EXPECT_TRUE(eq.equivalent);
    EXPECT_NEAR(std::abs(eq.scalar - Cx(0, 3)), 0.0, 1e-12);

    const auto cnot = evalCircuit(parseCircuit("cnot q0 q1"));
    EXPECT_FALSE(equivalentUpToScalar(cz, cnot).equivalent);

    DenseMap zero(4, 4);
    EXPECT_THROW((void)equivalentUpToScalar(cz, zero), MbqcError);
    EXPECT_TRUE(equivalentUpToScalar(zero, zero).equivalent);
    DenseMap small(2, 2);
    EXPECT_THROW((void)equivalentUpToScalar(cz, small), MbqcError);
}

TEST(Oracle, AllZeroBranchEqualsDiagramMap) {
    const auto ex = sixVertexExample();
    const MbqcDiagram d{ex.graph, {}, {}};
    const auto report = runBranches(d, ex.paperFlow);
    const auto direct = evalDiagram(d);
    const auto& zero = report.branches.front().map;
    ASSERT_EQ(zero.data.size(), direct.data.size());
    for (std::size_t i = 0; i < direct.data.size(); ++i) {
        EXPECT_NEAR(std::abs(zero.data[i] - direct.data[i]), 0.0, 1e-12);
    }
}

TEST(Oracle, WorkedExampleIsStronglyDeterministic) {
    const auto ex = sixVertexExample();
    const MbqcDiagram d{ex.graph, {}, {}};
    const auto report = runBranches(d, ex.paperFlow);
    EXPECT_EQ(report.branches.size(), 16U);
    EXPECT_LT(report.maxResidual, 1e-8);
}

TEST(Oracle, CorrectedErrorBranchMatchesZeroBranch) {
    // flipping one outcome (an effective pi error on c) is corrected exactly
    const auto ex = sixVertexExample();
    const MbqcDiagram d{ex.graph, {}, {}};
    const auto report = runBranches(d, ex.paperFlow);
    std::size_t idxC = 0;
    for (std::size_t k = 0; k < report.order.size(); ++k) {
        if (report.order[k] == ex.c) {
            idxC = k;
        }
    }
    for (const auto& br : report.branches) {
        bool onlyC = true;
        for (std::size_t k = 0; k < br.outcomes.size(); ++k) {
            if (br.outcomes[k] != (k == idxC ? 1 : 0)) {
                onlyC = false;
            }
        }
        if (onlyC) {
            EXPECT_LT(br.residual, 1e-10);
        }
    }
}

TEST(Oracle, FaultyBialgebraFlowBreaksDeterminism) {
    const auto ex = bialgebraExample();
    const MbqcDiagram d{ex.graph, {}, {}};
    const auto report = runBranches(d, ex.faultyFlow);
    EXPECT_GT(report.maxResidual, 1e-3);
}

TEST(Oracle, GFlowPatternsAreDeterministicAndUnitary) {
    std::mt19937 rng(77);
    int done = 0;
    while (done < 15) {
        auto pat = randomMixedPattern(rng, 2, 4, 2);
        const auto& g = pat.diagram.graph;
        if (g.measuredVertices().size() > 10 || g.vertices().size() > 12) {
            continue;
        }
        ++done;
        const auto report = runBranches(pat.diagram, pat.flow);
        EXPECT_LT(report.maxResidual, 1e-8);
        if (g.inputs().size() == g.outputs().size()) {
            const auto m = evalDiagram(pat.diagram);
            const auto gram = m.dagger() * m;
            DenseMap id(gram.rows, gram.cols);
            for (std::size_t i = 0; i < id.rows; ++i) {
                id.at(i, i) = 1.0;
            }
            EXPECT_TRUE(oracleEquivalent(gram, id, 1e-8));
        }
    }
}

TEST(Oracle, SizeCaps) {
    MbqcDiagram d;
    for (int i = 0; i < 21; ++i) {
        const auto v = d.graph.addVertex();
        d.graph.outputs().push_back(v);
    }
    EXPECT_THROW((void)evalDiagram(d), MbqcError);

    MbqcDiagram small;
    std::vector<Vertex> vs;
    for (int i = 0; i < 13; ++i) {
        vs.push_back(small.graph.addVertex(Plane::YZ, Angle::zero()));
    }
    const auto o = small.graph.addVertex();
    small.graph.outputs().push_back(o);
    GFlow f;
    f.depth[o] = 0;
    for (const auto v : vs) {
        f.correction[v] = {v};
        f.depth[v] = 1;
    }
    EXPECT_THROW((void)runBranches(small, f), MbqcError);
}

} // namespace
} // namespace mbqc
