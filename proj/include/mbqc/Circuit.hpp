#pragma once

#include "mbqc/Angle.hpp"
#include "mbqc/DenseMap.hpp"
#include "mbqc/Diagram.hpp"
#include "mbqc/GFlow.hpp"

#include <string>
#include <vector>

namespace mbqc {

enum class GateKind { CZ, CNOT, H, ZPhase, XPhase, SWAP };

struct Gate {
    GateKind kind;
    std::size_t q0 = 0;
    std::size_t q1 = 0;      // second qubit for two-qubit gates
    Angle angle;             // phase gates only

    static Gate h(std::size_t q) { return {GateKind::H, q, 0, {}}; }
    static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, a, b, {}}; }
    static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, c, t, {}}; }
    static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, a, b, {}}; }
    static Gate rz(Angle a, std::size_t q) { return {GateKind::ZPhase, q, 0, a}; }
    static Gate rx(Angle a, std::size_t q) { return {GateKind::XPhase, q, 0, a}; }

    [[nodiscard]] bool twoQubit() const {
        return kind == GateKind::CZ || kind == GateKind::CNOT || kind == GateKind::SWAP;
    }
    bool operator==(const Gate&) const = default;
};

struct Circuit {
    std::size_t width = 0;
    std::vector<Gate> gates;   // leftmost gate applied first

    void check() const;
    bool operator==(const Circuit&) const = default;
};

/// Text format: one lowercase gate per line
///   h qN | cz qA qB | cnot qA qB | rz(p/q) qN | rx(p/q) qN | swap qA qB
/// with '#' comments and blank lines ignored. An optional 'qubits N' directive
/// widens the circuit beyond the largest referenced qubit.
Circuit parseCircuit(const std::string& text);
std::string printCircuit(const Circuit& c);

/// 2^w x 2^w matrix, gates applied in list order. Width capped at 12.
DenseMap evalCircuit(const Circuit& c);

struct PatternWithFlow {
    MbqcDiagram diagram;
    GFlow flow;
};

/// MBQC pattern with all measurements in the XY plane, |I| = |O| = width,
/// equivalent to the circuit up to a scalar, together with a maximally
/// delayed gflow. The construction keeps one frontier vertex per qubit:
/// rz accumulates phase, cz toggles the edge, h finalizes the frontier vertex
/// at the negated accumulated phase and starts a fresh one; leftover terminal
/// phases are flushed by an h·h pair.
PatternWithFlow circuitToPattern(const Circuit& c);

} // namespace mbqc
