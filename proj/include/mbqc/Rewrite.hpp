#pragma once

#include "mbqc/Diagram.hpp"
#include "mbqc/GFlow.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mbqc {

struct LabelChange {
    Vertex vertex;
    std::string pre;  // "XY 1/4", or "out" for outputs
    std::string post;
};

struct RewriteStep {
    std::string rule;
    std::vector<Vertex> args;
    std::vector<LabelChange> labels;
};

/// Ordered log of applied primitives; replaying it from the initial diagram
/// reproduces the final diagram (fresh vertex ids are assigned deterministically).
using RewriteTrace = std::vector<RewriteStep>;

struct DiagramWithFlow {
    MbqcDiagram diagram;
    GFlow flow;
};

/// Local complementation at a non-input vertex, turned back into MBQC+LC form:
/// the graph becomes G ⋆ u, u absorbs an X_{pi/2} phase
/// (XY a -> XZ a+pi/2, XZ a -> XY pi/2-a, YZ a -> YZ a+pi/2) and every
/// neighbour absorbs Z_{-pi/2} (XY a -> XY a+pi/2, XZ a -> YZ a, YZ a -> XZ -a);
/// boundary vertices collect the phases as local Cliffords instead.
DiagramWithFlow lcOnDiagram(const MbqcDiagram& d, const GFlow& f, Vertex u,
                            RewriteTrace* trace = nullptr);

/// Pivot about an edge of non-input vertices, in the Hadamard form:
/// u, v absorb H (XY a -> YZ -a, YZ a -> XY -a, XZ a -> XZ pi/2-a), common
/// neighbours absorb Z_pi (XY a -> a+pi, XZ/YZ a -> -a).
DiagramWithFlow pivotOnDiagram(const MbqcDiagram& d, const GFlow& f, Vertex u, Vertex v,
                               RewriteTrace* trace = nullptr);

/// Replaces the input wire of u by a fresh XY(0) input vertex u' with a
/// Hadamard folded into u's wire Clifford; u stops being an input.
DiagramWithFlow inputExtension(const MbqcDiagram& d, const GFlow& f, Vertex u,
                               RewriteTrace* trace = nullptr);

/// Converts output u into an XY-measured vertex (absorbing a diagonal wire
/// Clifford into the angle) and appends a fresh output vertex u'.
DiagramWithFlow outputExtension(const MbqcDiagram& d, const GFlow& f, Vertex u,
                                RewriteTrace* trace = nullptr);

/// Absorbs every boundary local Clifford into fresh measured vertices:
/// at most 2 per input and 4 per output. Result is in strict MBQC form.
DiagramWithFlow toMbqcForm(const MbqcDiagram& d, const GFlow& f,
                           RewriteTrace* trace = nullptr);

/// Deletes a non-input YZ/XZ vertex measured at 0 or pi; a pi angle flips the
/// neighbours through the Z_pi table.
DiagramWithFlow removeParityGadget(const MbqcDiagram& d, const GFlow& f, Vertex u,
                                   RewriteTrace* trace = nullptr);

/// Eliminates one non-input Clifford vertex via the applicable route
/// (local complementation, pivot with an internal neighbour, or pivot with a
/// boundary output), then deletes the resulting parity gadget.
DiagramWithFlow removeCliffordVertex(const MbqcDiagram& d, const GFlow& f, Vertex u,
                                     RewriteTrace* trace = nullptr);

struct SimplifyResult {
    MbqcDiagram diagram;
    GFlow flow;
    RewriteTrace trace;
};

/// Removes every non-input Clifford vertex (loop order: ±pi/2 XY/YZ removals,
/// a·pi YZ/XZ deletions, pivot-route removals, boundary-route removals).
SimplifyResult removeAllCliffords(const MbqcDiagram& d, const GFlow& f);

/// No XZ vertices and no adjacent YZ pair remain: adjacent YZ-YZ pairs are
/// pivoted (both turn XY), then XZ vertices are locally complemented (they
/// turn XY; their YZ/XZ neighbours swap, shrinking the non-XY count).
DiagramWithFlow toPhaseGadgetForm(const MbqcDiagram& d, const GFlow& f,
                                  RewriteTrace* trace = nullptr);

/// Reduced form: phase-gadget form, no internal Cliffords, no internal
/// degree-1 vertices, no repeated same-plane internal neighbourhoods.
SimplifyResult reduceDiagram(const MbqcDiagram& d, const GFlow& f);

/// The four reduced-form predicates, machine-checked.
bool isPhaseGadgetForm(const MbqcDiagram& d);
bool isReduced(const MbqcDiagram& d);

/// Diagram-only variants for callers that do their own flow bookkeeping
/// (the extractor never consults correction sets).
MbqcDiagram lcDiagram(const MbqcDiagram& d, Vertex u);
MbqcDiagram pivotDiagram(const MbqcDiagram& d, Vertex u, Vertex v);
MbqcDiagram inputExtensionDiagram(const MbqcDiagram& d, Vertex u);

/// Re-applies a recorded trace to a diagram (no gflow bookkeeping).
MbqcDiagram replayTrace(const MbqcDiagram& initial, const RewriteTrace& trace);

std::string traceToJsonLines(const RewriteTrace& trace);

} // namespace mbqc
