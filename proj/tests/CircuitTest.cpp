#include "mbqc/Circuit.hpp"

#include "TestHelpers.hpp"
#include "mbqc/Oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

namespace mbqc {
namespace {

using Cx = std::complex<double>;
using testing::oracleEquivalent;
using testing::randomCircuit;

TEST(Circuit, HadamardMatrix) {
    const auto m = evalCircuit(parseCircuit("h q0"));
    const double s = 1.0 / std::numbers::sqrt2;
    EXPECT_NEAR(std::abs(m.at(0, 0) - Cx(s)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(m.at(0, 1) - Cx(s)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(m.at(1, 0) - Cx(s)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(m.at(1, 1) - Cx(-s)), 0.0, 1e-12);
}

TEST(Circuit, CnotPermutation) {
    const auto m = evalCircuit(parseCircuit("cnot q0 q1"));
    const int expect[4] = {0, 1, 3, 2}; // rows 1,2 fixed, 3<->4 swapped
    for (std::size_t c = 0; c < 4; ++c) {
        for (std::size_t r = 0; r < 4; ++r) {
            EXPECT_NEAR(std::abs(m.at(r, c) - Cx(r == static_cast<std::size_t>(expect[c]) ? 1 : 0)),
                        0.0, 1e-12);
        }
    }
}

TEST(Circuit, DoublePauliZIsIdentity) {
    const auto m = evalCircuit(parseCircuit("rz(1/1) q0\nrz(1/1) q0\n"));
    EXPECT_NEAR(std::abs(m.at(0, 0) - Cx(1)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(m.at(1, 1) - Cx(1)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(m.at(0, 1)), 0.0, 1e-12);
}

TEST(Circuit, ParseBasics) {
    const auto c = parseCircuit("# a comment\n\nh q0\nrz(1/4) q2\ncz q0 q1 # trailing\n");
    ASSERT_EQ(c.gates.size(), 3U);
    EXPECT_EQ(c.gates[0], Gate::h(0));
    EXPECT_EQ(c.gates[1], Gate::rz(Angle{1, 4}, 2));
    EXPECT_EQ(c.gates[2], Gate::cz(0, 1));
    EXPECT_EQ(c.width, 3U);
}

TEST(Circuit, ParseErrorsCarryLineNumbers) {
    try {
        (void)parseCircuit("h q0\nfoo q1\n");
        FAIL();
    } catch (const MbqcError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    try {
        (void)parseCircuit("rz(1/x) q0\n");
        FAIL();
    } catch (const MbqcError& e) {
        EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
    }
    EXPECT_THROW((void)parseCircuit("cz q0 q0\n"), MbqcError);
    EXPECT_THROW((void)parseCircuit("h\n"), MbqcError);
}

TEST(Circuit, PrintParseRoundTripOnRandomPrograms) {
    std::mt19937 rng(19);
    for (int t = 0; t < 10; ++t) {
        const auto c = randomCircuit(rng, 4, 50);
        const auto text = printCircuit(c);
        const auto back = parseCircuit(text);
        EXPECT_EQ(back, c);
        EXPECT_EQ(printCircuit(back), text);
    }
}

TEST(Circuit, WidthDirectiveSurvivesRoundTrip) {
    Circuit c;
    c.width = 5;
    c.gates.push_back(Gate::h(1));
    const auto text = printCircuit(c);
    EXPECT_EQ(parseCircuit(text), c);
    EXPECT_EQ(parseCircuit("").width, 0U);
}

TEST(Circuit, EmptyCircuitPatternIsBareWires) {
    Circuit c;
    c.width = 3;
    const auto pat = circuitToPattern(c);
    EXPECT_EQ(pat.diagram.graph.vertices().size(), 3U);
    EXPECT_EQ(pat.diagram.graph.inputs(), pat.diagram.graph.outputs());
    EXPECT_EQ(pat.diagram.graph.edgeCount(), 0U);
    EXPECT_TRUE(verifyGFlow(pat.diagram.graph, pat.flow).ok);
}

TEST(Circuit, SingleCzPattern) {
    const auto c = parseCircuit("cz q0 q1");
    const auto pat = circuitToPattern(c);
    EXPECT_EQ(pat.diagram.graph.vertices().size(), 2U);
    EXPECT_TRUE(oracleEquivalent(evalDiagram(pat.diagram), evalCircuit(c)));
}

TEST(Circuit, CzTogglingCancelsPairs) {
    const auto once = circuitToPattern(parseCircuit("h q0\ncz q0 q1\nh q1"));
    const auto thrice = circuitToPattern(parseCircuit("h q0\ncz q0 q1\ncz q0 q1\ncz q0 q1\nh q1"));
    EXPECT_EQ(once.diagram.graph.edges(), thrice.diagram.graph.edges());
    const auto none = circuitToPattern(parseCircuit("h q0\ncz q0 q1\ncz q0 q1\nh q1"));
    const auto plain = circuitToPattern(parseCircuit("h q0\nh q1"));
    EXPECT_TRUE(oracleEquivalent(evalDiagram(none.diagram), evalDiagram(plain.diagram)));
}

TEST(Circuit, PatternsMatchCircuitsUpToScalar) {
    std::mt19937 rng(29);
    int done = 0;
    while (done < 40) {
        std::uniform_int_distribution<std::size_t> wDist(1, 4);
        const auto w = wDist(rng);
        const auto c = randomCircuit(rng, w, 1 + (rng() % 15));
        const auto pat = circuitToPattern(c);
        EXPECT_TRUE(verifyGFlow(pat.diagram.graph, pat.flow).ok);
        for (const Vertex v : pat.diagram.graph.measuredVertices()) {
            EXPECT_EQ(pat.diagram.graph.plane(v), Plane::XY);
        }
        EXPECT_EQ(pat.diagram.graph.inputs().size(), w);
        EXPECT_EQ(pat.diagram.graph.outputs().size(), w);
        if (pat.diagram.graph.vertices().size() > 14) {
            continue;
        }
        ++done;
        EXPECT_TRUE(oracleEquivalent(evalDiagram(pat.diagram), evalCircuit(c)));
    }
}

TEST(Circuit, ThreeQubitTwelveGateExample) {
    std::mt19937 rng(41);
    const auto c = randomCircuit(rng, 3, 12);
    const auto pat = circuitToPattern(c);
    ASSERT_TRUE(findGFlow(pat.diagram.graph).has_value());
    if (pat.diagram.graph.vertices().size() <= 20) {
        EXPECT_TRUE(oracleEquivalent(evalDiagram(pat.diagram), evalCircuit(c)));
    }
}

TEST(Circuit, EvalWidthCap) {
    Circuit c;
    c.width = 13;
    EXPECT_THROW((void)evalCircuit(c), MbqcError);
}

TEST(Circuit, GateValidation) {
    Circuit c;
    c.width = 1;
    c.gates.push_back(Gate::cz(0, 1));
    EXPECT_THROW(c.check(), MbqcError);
}

} // namespace
} // namespace mbqc
