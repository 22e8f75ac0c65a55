#include "mbqc/Rewrite.hpp"

#include <algorithm>
#include <sstream>

namespace mbqc {

namespace {

struct Effect {
    Plane plane;
    Angle angle;
};

// effect ∘ Z_{k·pi/2}
Effect absorbZQuarters(Plane p, Angle a, int k) {
    k = ((k % 4) + 4) % 4;
    if (k == 0) {
        return {p, a};
    }
    switch (p) {
    case Plane::XY:
        return {Plane::XY, a - Angle::quarter(k)};
    case Plane::XZ:
        if (k == 2) return {Plane::XZ, -a};
        return {Plane::YZ, k == 1 ? -a : a};
    case Plane::YZ:
        if (k == 2) return {Plane::YZ, -a};
        return {Plane::XZ, k == 1 ? a : -a};
    }
    throw MbqcError("bad plane");
}

// effect ∘ X_{pi/2}
Effect absorbHalfX(Plane p, Angle a) {
    switch (p) {
    case Plane::XY: return {Plane::XZ, a + Angle::quarter(1)};
    case Plane::XZ: return {Plane::XY, Angle::quarter(1) - a};
    case Plane::YZ: return {Plane::YZ, a + Angle::quarter(1)};
    }
    throw MbqcError("bad plane");
}

// effect ∘ H
Effect absorbH(Plane p, Angle a) {
    switch (p) {
    case Plane::XY: return {Plane::YZ, -a};
    case Plane::YZ: return {Plane::XY, -a};
    case Plane::XZ: return {Plane::XZ, Angle::quarter(1) - a};
    }
    throw MbqcError("bad plane");
}

std::string labelString(const LabelledOpenGraph& g, Vertex v) {
    if (!g.contains(v)) {
        return "gone";
    }
    if (g.isOutput(v)) {
        return "out";
    }
    return planeName(g.plane(v)) + " " + g.angle(v).toString();
}

void recordStep(RewriteTrace* trace, const MbqcDiagram& pre, const MbqcDiagram& post,
                std::string rule, std::vector<Vertex> args, const VertexSet& touched) {
    if (trace == nullptr) {
        return;
    }
    RewriteStep step{std::move(rule), std::move(args), {}};
    for (const Vertex v : touched) {
        const std::string before = pre.graph.contains(v) ? labelString(pre.graph, v) : "new";
        const std::string after = labelString(post.graph, v);
        if (before != after) {
            step.labels.push_back({v, before, after});
        }
    }
    trace->push_back(std::move(step));
}

void requireVerifies(const LabelledOpenGraph& g, const GFlow& f, const char* op) {
    const auto check = verifyGFlow(g, f);
    if (!check.ok) {
        std::string msg = std::string(op) + ": gflow does not verify";
        if (!check.violations.empty()) {
            msg += " (" + check.violations.front().condition + " at vertex " +
                   std::to_string(check.violations.front().vertex) + ")";
        }
        throw MbqcError(msg);
    }
}

// Diagram-only transforms, shared by the public ops and trace replay.

MbqcDiagram lcDiagramOnly(const MbqcDiagram& d, Vertex u) {
    if (d.graph.isInput(u)) {
        throw MbqcError("lcOnDiagram: vertex " + std::to_string(u) +
                        " is an input; apply inputExtension first");
    }
    MbqcDiagram r = d;
    const VertexSet nb = d.graph.neighbours(u);
    r.graph = localComplement(d.graph, u);
    if (r.graph.isOutput(u)) {
        r.composeOutputClifford(u, LocalClifford::xQuarter(1));
    } else {
        const auto e = absorbHalfX(r.graph.plane(u), r.graph.angle(u));
        r.graph.setMeasurement(u, e.plane, e.angle);
    }
    for (const Vertex w : nb) {
        if (r.graph.isOutput(w)) {
            r.composeOutputClifford(w, LocalClifford::zQuarter(-1));
        } else {
            const auto e = absorbZQuarters(r.graph.plane(w), r.graph.angle(w), -1);
            r.graph.setMeasurement(w, e.plane, e.angle);
        }
    }
    return r;
}

MbqcDiagram pivotDiagramOnly(const MbqcDiagram& d, Vertex u, Vertex v) {
    if (!d.graph.hasEdge(u, v)) {
        throw MbqcError("pivotOnDiagram: vertices are not adjacent");
    }
    if (d.graph.isInput(u) || d.graph.isInput(v)) {
        throw MbqcError("pivotOnDiagram: pivot vertex is an input; apply inputExtension first");
    }
    MbqcDiagram r = d;
    VertexSet common;
    for (const Vertex w : d.graph.neighbours(u)) {
        if (w != v && d.graph.hasEdge(v, w)) {
            common.insert(w);
        }
    }
    r.graph = pivot(d.graph, u, v);
    for (const Vertex a : {u, v}) {
        if (r.graph.isOutput(a)) {
            r.composeOutputClifford(a, LocalClifford::hadamard());
        } else {
            const auto e = absorbH(r.graph.plane(a), r.graph.angle(a));
            r.graph.setMeasurement(a, e.plane, e.angle);
        }
    }
    for (const Vertex w : common) {
        if (r.graph.isOutput(w)) {
            r.composeOutputClifford(w, LocalClifford::zQuarter(2));
        } else {
            const auto e = absorbZQuarters(r.graph.plane(w), r.graph.angle(w), 2);
            r.graph.setMeasurement(w, e.plane, e.angle);
        }
    }
    return r;
}

MbqcDiagram inputExtensionDiagramOnly(const MbqcDiagram& d, Vertex u) {
    if (!d.graph.isInput(u)) {
        throw MbqcError("inputExtension: vertex " + std::to_string(u) + " is not an input");
    }
    MbqcDiagram r = d;
    const Vertex fresh = r.graph.addVertex(Plane::XY, Angle::zero());
    r.graph.addEdge(u, fresh);
    std::replace(r.graph.inputs().begin(), r.graph.inputs().end(), u, fresh);
    const auto old = r.inputCliffordOf(u);
    r.inputClifford.erase(u);
    const auto next = old.then(LocalClifford::hadamard());
    if (!next.isIdentity()) {
        r.inputClifford[fresh] = next;
    }
    return r;
}

MbqcDiagram outputExtensionDiagramOnly(const MbqcDiagram& d, Vertex u) {
    if (!d.graph.isOutput(u)) {
        throw MbqcError("outputExtension: vertex " + std::to_string(u) + " is not an output");
    }
    MbqcDiagram r = d;
    const auto c = r.outputCliffordOf(u);
    r.outputClifford.erase(u);
    Angle angle = Angle::zero();
    LocalClifford freshClifford = LocalClifford::hadamard();
    if (c.isDiagonal()) {
        angle = Angle::quarter(-c.diagonalQuarter());
    } else if (!c.isIdentity()) {
        freshClifford = LocalClifford::hadamard().then(c);
    }
    const Vertex fresh = r.graph.addVertex();
    r.graph.addEdge(u, fresh);
    std::replace(r.graph.outputs().begin(), r.graph.outputs().end(), u, fresh);
    r.graph.setMeasurement(u, Plane::XY, angle);
    if (!freshClifford.isIdentity()) {
        r.outputClifford[fresh] = freshClifford;
    }
    return r;
}

MbqcDiagram removeParityGadgetDiagramOnly(const MbqcDiagram& d, Vertex u) {
    const auto& g = d.graph;
    if (g.isInput(u) || g.isOutput(u)) {
        throw MbqcError("removeParityGadget: vertex must be a measured non-input");
    }
    if (g.plane(u) == Plane::XY) {
        throw MbqcError("removeParityGadget: vertex is XY-measured");
    }
    if (!g.angle(u).isPauli()) {
        throw MbqcError("removeParityGadget: angle must be 0 or pi");
    }
    MbqcDiagram r = d;
    const bool piFlip = g.angle(u) == Angle::pi();
    const VertexSet nb = g.neighbours(u);
    r.graph.removeVertex(u);
    if (piFlip) {
        for (const Vertex w : nb) {
            if (r.graph.isOutput(w)) {
                r.composeOutputClifford(w, LocalClifford::zQuarter(2));
            } else {
                const auto e = absorbZQuarters(r.graph.plane(w), r.graph.angle(w), 2);
                r.graph.setMeasurement(w, e.plane, e.angle);
            }
        }
    }
    return r;
}

MbqcDiagram fuseDegreeOneGadgetDiagramOnly(const MbqcDiagram& d, Vertex u) {
    const auto& g = d.graph;
    if (!g.isInternal(u) || g.plane(u) != Plane::YZ || g.degree(u) != 1) {
        throw MbqcError("fuseDegreeOneGadget: needs an internal degree-1 YZ vertex");
    }
    const Vertex v = *g.neighbours(u).begin();
    if (g.isOutput(v) || g.plane(v) != Plane::XY) {
        throw MbqcError("fuseDegreeOneGadget: unique neighbour must be XY-measured");
    }
    MbqcDiagram r = d;
    r.graph.setMeasurement(v, Plane::XY, g.angle(v) - g.angle(u));
    r.graph.removeVertex(u);
    return r;
}

MbqcDiagram fuseParallelGadgetDiagramOnly(const MbqcDiagram& d, Vertex u, Vertex v) {
    const auto& g = d.graph;
    if (u == v || !g.isInternal(u) || !g.isInternal(v) || g.plane(u) != Plane::YZ ||
        g.plane(v) != Plane::YZ || g.neighbours(u) != g.neighbours(v)) {
        throw MbqcError("fuseParallelGadget: needs internal YZ twins with equal neighbourhoods");
    }
    MbqcDiagram r = d;
    r.graph.setMeasurement(v, Plane::YZ, g.angle(v) + g.angle(u));
    r.graph.removeVertex(u);
    return r;
}

// Folds the input Clifford of u into the diagram: the trailing Z quarter
// merges with u's effect (or output Clifford), the X/Z remainder becomes a
// two-vertex chain that carries the input wire.
MbqcDiagram absorbInputCliffordDiagramOnly(const MbqcDiagram& d, Vertex u) {
    if (!d.graph.isInput(u)) {
        throw MbqcError("absorbInputClifford: vertex is not an input");
    }
    MbqcDiagram cur = d;
    const auto c = cur.inputCliffordOf(u);
    const auto [a, b, zc] = c.zxzTriple();
    if (a != 0) {
        if (cur.graph.isOutput(u)) {
            cur.composeOutputClifford(u, LocalClifford::zQuarter(a));
        } else {
            const auto e = absorbZQuarters(cur.graph.plane(u), cur.graph.angle(u), a);
            cur.graph.setMeasurement(u, e.plane, e.angle);
        }
    }
    cur.inputClifford.erase(u);
    if (b != 0 || zc != 0) {
        // X_b Z_zc = (H Z_b)(H Z_zc): two chain vertices
        const Vertex v1 = cur.graph.addVertex(Plane::XY, Angle::quarter(-b));
        const Vertex v2 = cur.graph.addVertex(Plane::XY, Angle::quarter(-zc));
        cur.graph.addEdge(u, v1);
        cur.graph.addEdge(v1, v2);
        std::replace(cur.graph.inputs().begin(), cur.graph.inputs().end(), u, v2);
    }
    return cur;
}

// Folds the output Clifford of u into a four-vertex chain using the
// red-green-red decomposition C ∝ X_a Z_b X_c; u becomes XY(0)-measured.
MbqcDiagram absorbOutputCliffordDiagramOnly(const MbqcDiagram& d, Vertex u) {
    if (!d.graph.isOutput(u)) {
        throw MbqcError("absorbOutputClifford: vertex is not an output");
    }
    MbqcDiagram cur = d;
    const auto c = cur.outputCliffordOf(u);
    const auto [xa, zb, xc] = c.xzxTriple();
    cur.outputClifford.erase(u);
    const Vertex w1 = cur.graph.addVertex(Plane::XY, Angle::quarter(-xc));
    const Vertex w2 = cur.graph.addVertex(Plane::XY, Angle::quarter(-zb));
    const Vertex w3 = cur.graph.addVertex(Plane::XY, Angle::quarter(-xa));
    const Vertex w4 = cur.graph.addVertex();
    cur.graph.addEdge(u, w1);
    cur.graph.addEdge(w1, w2);
    cur.graph.addEdge(w2, w3);
    cur.graph.addEdge(w3, w4);
    std::replace(cur.graph.outputs().begin(), cur.graph.outputs().end(), u, w4);
    cur.graph.setMeasurement(u, Plane::XY, Angle::zero());
    return cur;
}

// Deletes an internal YZ vertex with no neighbours (a pure scalar factor).
MbqcDiagram dropIsolatedGadgetDiagramOnly(const MbqcDiagram& d, Vertex u) {
    if (!d.graph.isInternal(u) || d.graph.plane(u) != Plane::YZ || d.graph.degree(u) != 0) {
        throw MbqcError("dropIsolatedGadget: needs an isolated internal YZ vertex");
    }
    MbqcDiagram r = d;
    r.graph.removeVertex(u);
    return r;
}

// Plane bookkeeping for chaining Lemma-3.1 updates through a pivot.
LabelledOpenGraph lcPlanesOnly(const LabelledOpenGraph& g, Vertex u) {
    LabelledOpenGraph r = localComplement(g, u);
    if (!r.isOutput(u)) {
        const Plane p = r.plane(u);
        if (p == Plane::XY) {
            r.setMeasurement(u, Plane::XZ, r.angle(u));
        } else if (p == Plane::XZ) {
            r.setMeasurement(u, Plane::XY, r.angle(u));
        }
    }
    for (const Vertex w : g.neighbours(u)) {
        if (!r.isOutput(w)) {
            const Plane p = r.plane(w);
            if (p == Plane::XZ) {
                r.setMeasurement(w, Plane::YZ, r.angle(w));
            } else if (p == Plane::YZ) {
                r.setMeasurement(w, Plane::XZ, r.angle(w));
            }
        }
    }
    return r;
}

GFlow pivotFlowUpdate(const LabelledOpenGraph& g, const GFlow& f, Vertex u, Vertex v) {
    GFlow f1 = localComplementUpdate(g, f, u);
    const LabelledOpenGraph g1 = lcPlanesOnly(g, u);
    GFlow f2 = localComplementUpdate(g1, f1, v);
    const LabelledOpenGraph g2 = lcPlanesOnly(g1, v);
    return localComplementUpdate(g2, f2, u);
}

} // namespace

DiagramWithFlow lcOnDiagram(const MbqcDiagram& d, const GFlow& f, Vertex u,
                            RewriteTrace* trace) {
    requireVerifies(d.graph, f, "lcOnDiagram");
    VertexSet touched = d.graph.neighbours(u);
    touched.insert(u);
    auto diagram = lcDiagramOnly(d, u);
    auto flow = localComplementUpdate(d.graph, f, u);
    recordStep(trace, d, diagram, "lc", {u}, touched);
    return {std::move(diagram), std::move(flow)};
}

DiagramWithFlow pivotOnDiagram(const MbqcDiagram& d, const GFlow& f, Vertex u, Vertex v,
                               RewriteTrace* trace) {
    requireVerifies(d.graph, f, "pivotOnDiagram");
    VertexSet touched = d.graph.neighbours(u);
    const auto& nv = d.graph.neighbours(v);
    touched.insert(nv.begin(), nv.end());
    touched.insert(u);
    touched.insert(v);
    auto diagram = pivotDiagramOnly(d, u, v);
    auto flow = pivotFlowUpdate(d.graph, f, u, v);
    recordStep(trace, d, diagram, "pivot", {u, v}, touched);
    return {std::move(diagram), std::move(flow)};
}

DiagramWithFlow inputExtension(const MbqcDiagram& d, const GFlow& f, Vertex u,
                               RewriteTrace* trace) {
    requireVerifies(d.graph, f, "inputExtension");
    auto diagram = inputExtensionDiagramOnly(d, u);
    const Vertex fresh = *diagram.graph.vertices().rbegin();
    GFlow flow = f;
    flow.correction[fresh] = {u};
    flow.depth[fresh] = flow.maxDepth() + 1;
    recordStep(trace, d, diagram, "inputExtension", {u}, {u, fresh});
    return {std::move(diagram), std::move(flow)};
}

DiagramWithFlow outputExtension(const MbqcDiagram& d, const GFlow& f, Vertex u,
                                RewriteTrace* trace) {
    requireVerifies(d.graph, f, "outputExtension");
    auto diagram = outputExtensionDiagramOnly(d, u);
    const Vertex fresh = *diagram.graph.vertices().rbegin();
    GFlow flow;
    for (const auto& [v, dep] : f.depth) {
        flow.depth[v] = dep >= 1 ? dep + 1 : dep;
    }
    flow.correction = f.correction;
    flow.correction[u] = {fresh};
    flow.depth[u] = 1;
    flow.depth[fresh] = 0;
    recordStep(trace, d, diagram, "outputExtension", {u}, {u, fresh});
    return {std::move(diagram), std::move(flow)};
}

DiagramWithFlow removeParityGadget(const MbqcDiagram& d, const GFlow& f, Vertex u,
                                   RewriteTrace* trace) {
    requireVerifies(d.graph, f, "removeParityGadget");
    VertexSet touched = d.graph.neighbours(u);
    touched.insert(u);
    auto flow = deleteVertexUpdate(d.graph, f, u);
    auto diagram = removeParityGadgetDiagramOnly(d, u);
    recordStep(trace, d, diagram, "removeParityGadget", {u}, touched);
    return {std::move(diagram), std::move(flow)};
}

DiagramWithFlow toMbqcForm(const MbqcDiagram& d, const GFlow& f, RewriteTrace* trace) {
    requireVerifies(d.graph, f, "toMbqcForm");
    MbqcDiagram cur = d;
    GFlow flow = f;

    const auto inputList = cur.graph.inputs();
    for (const Vertex u : inputList) {
        if (cur.inputCliffordOf(u).isIdentity()) {
            continue;
        }
        const MbqcDiagram pre = cur;
        cur = absorbInputCliffordDiagramOnly(cur, u);
        VertexSet touched{u};
        if (cur.graph.vertices().size() > pre.graph.vertices().size()) {
            auto it = cur.graph.vertices().rbegin();
            const Vertex v2 = *it++;
            const Vertex v1 = *it;
            flow.correction[v1] = {u};
            flow.depth[v1] = flow.maxDepth() + 1;
            flow.correction[v2] = {v1};
            flow.depth[v2] = flow.depth[v1] + 1;
            touched.insert(v1);
            touched.insert(v2);
        }
        recordStep(trace, pre, cur, "absorbInputClifford", {u}, touched);
    }

    const auto outputList = cur.graph.outputs();
    for (const Vertex u : outputList) {
        if (cur.outputCliffordOf(u).isIdentity()) {
            continue;
        }
        const MbqcDiagram pre = cur;
        cur = absorbOutputCliffordDiagramOnly(cur, u);
        auto it = cur.graph.vertices().rbegin();
        const Vertex w4 = *it++;
        const Vertex w3 = *it++;
        const Vertex w2 = *it++;
        const Vertex w1 = *it;
        GFlow next;
        for (const auto& [v, dep] : flow.depth) {
            next.depth[v] = dep >= 1 ? dep + 4 : dep;
        }
        next.correction = flow.correction;
        next.correction[u] = {w1};
        next.correction[w1] = {w2};
        next.correction[w2] = {w3};
        next.correction[w3] = {w4};
        next.depth[u] = 4;
        next.depth[w1] = 3;
        next.depth[w2] = 2;
        next.depth[w3] = 1;
        next.depth[w4] = 0;
        flow = std::move(next);
        recordStep(trace, pre, cur, "absorbOutputClifford", {u}, {u, w1, w2, w3, w4});
    }
    return {std::move(cur), std::move(flow)};
}

namespace {

bool isHalfTurnAngle(const Angle& a) {
    return a.isClifford() && !a.isPauli(); // ±pi/2
}

std::optional<Vertex> lowestInternalMeasuredNeighbour(const LabelledOpenGraph& g, Vertex u) {
    for (const Vertex w : g.neighbours(u)) {
        if (!g.isInput(w) && !g.isOutput(w)) {
            return w;
        }
    }
    return std::nullopt;
}

std::optional<Vertex> lowestOutputNotInputNeighbour(const LabelledOpenGraph& g, Vertex u) {
    for (const Vertex w : g.neighbours(u)) {
        if (g.isOutput(w) && !g.isInput(w)) {
            return w;
        }
    }
    return std::nullopt;
}

} // namespace

DiagramWithFlow removeCliffordVertex(const MbqcDiagram& d, const GFlow& f, Vertex u,
                                     RewriteTrace* trace) {
    const auto& g = d.graph;
    if (g.isInput(u) || g.isOutput(u)) {
        throw MbqcError("removeCliffordVertex: vertex must be a measured non-input");
    }
    const Plane p = g.plane(u);
    const Angle a = g.angle(u);
    if (!a.isClifford()) {
        throw MbqcError("removeCliffordVertex: vertex is not Clifford");
    }
    if ((p == Plane::YZ || p == Plane::XZ) && a.isPauli()) {
        return removeParityGadget(d, f, u, trace);
    }
    if ((p == Plane::XY || p == Plane::YZ) && isHalfTurnAngle(a)) {
        auto [d1, f1] = lcOnDiagram(d, f, u, trace);
        return removeParityGadget(d1, f1, u, trace);
    }
    if ((p == Plane::XY && a.isPauli()) || (p == Plane::XZ && isHalfTurnAngle(a))) {
        auto partner = lowestInternalMeasuredNeighbour(g, u);
        if (!partner) {
            partner = lowestOutputNotInputNeighbour(g, u);
        }
        if (!partner) {
            throw MbqcError("removeCliffordVertex: no usable pivot partner at vertex " +
                            std::to_string(u));
        }
        auto [d1, f1] = pivotOnDiagram(d, f, u, *partner, trace);
        return removeParityGadget(d1, f1, u, trace);
    }
    throw MbqcError("removeCliffordVertex: vertex matches no removable shape");
}

SimplifyResult removeAllCliffords(const MbqcDiagram& d, const GFlow& f) {
    requireVerifies(d.graph, f, "removeAllCliffords");
    SimplifyResult res{d, f, {}};
    auto nonInputClifford = [&](auto&& pred) -> std::optional<Vertex> {
        for (const Vertex v : res.diagram.graph.measuredVertices()) {
            if (res.diagram.graph.isInput(v)) {
                continue;
            }
            const Plane p = res.diagram.graph.plane(v);
            const Angle a = res.diagram.graph.angle(v);
            if (a.isClifford() && pred(v, p, a)) {
                return v;
            }
        }
        return std::nullopt;
    };
    std::size_t guard = 0;
    const std::size_t maxSteps = res.diagram.graph.vertices().size() + 1;
    while (true) {
        if (++guard > maxSteps) {
            throw MbqcError("removeAllCliffords failed to terminate");
        }
        if (const auto u = nonInputClifford([](Vertex, Plane p, const Angle& a) {
                return (p == Plane::XY || p == Plane::YZ) && isHalfTurnAngle(a);
            })) {
            auto [dd, ff] = removeCliffordVertex(res.diagram, res.flow, *u, &res.trace);
            res.diagram = std::move(dd);
            res.flow = std::move(ff);
            continue;
        }
        if (const auto u = nonInputClifford([](Vertex, Plane p, const Angle& a) {
                return (p == Plane::YZ || p == Plane::XZ) && a.isPauli();
            })) {
            auto [dd, ff] = removeParityGadget(res.diagram, res.flow, *u, &res.trace);
            res.diagram = std::move(dd);
            res.flow = std::move(ff);
            continue;
        }
        if (const auto u = nonInputClifford([&](Vertex v, Plane p, const Angle& a) {
                const bool shape = (p == Plane::XY && a.isPauli()) ||
                                   (p == Plane::XZ && isHalfTurnAngle(a));
                return shape &&
                       lowestInternalMeasuredNeighbour(res.diagram.graph, v).has_value();
            })) {
            auto [dd, ff] = removeCliffordVertex(res.diagram, res.flow, *u, &res.trace);
            res.diagram = std::move(dd);
            res.flow = std::move(ff);
            continue;
        }
        if (const auto u = nonInputClifford([](Vertex, Plane p, const Angle& a) {
                return (p == Plane::XY && a.isPauli()) || (p == Plane::XZ && isHalfTurnAngle(a));
            })) {
            auto [dd, ff] = removeCliffordVertex(res.diagram, res.flow, *u, &res.trace);
            res.diagram = std::move(dd);
            res.flow = std::move(ff);
            continue;
        }
        break;
    }
    return res;
}

DiagramWithFlow toPhaseGadgetForm(const MbqcDiagram& d, const GFlow& f, RewriteTrace* trace) {
    requireVerifies(d.graph, f, "toPhaseGadgetForm");
    MbqcDiagram cur = d;
    GFlow flow = f;
    std::size_t guard = 0;
    const std::size_t maxSteps = cur.graph.vertices().size() + 1;
    while (true) {
        if (++guard > maxSteps) {
            throw MbqcError("toPhaseGadgetForm failed to terminate");
        }
        std::optional<std::pair<Vertex, Vertex>> yzPair;
        for (const auto& [a, b] : cur.graph.edges()) {
            if (!cur.graph.isOutput(a) && !cur.graph.isOutput(b) &&
                cur.graph.plane(a) == Plane::YZ && cur.graph.plane(b) == Plane::YZ) {
                yzPair = {a, b};
                break;
            }
        }
        if (yzPair) {
            auto [dd, ff] = pivotOnDiagram(cur, flow, yzPair->first, yzPair->second, trace);
            cur = std::move(dd);
            flow = std::move(ff);
            continue;
        }
        std::optional<Vertex> xz;
        for (const Vertex v : cur.graph.measuredVertices()) {
            if (cur.graph.plane(v) == Plane::XZ) {
                xz = v;
                break;
            }
        }
        if (xz) {
            auto [dd, ff] = lcOnDiagram(cur, flow, *xz, trace);
            cur = std::move(dd);
            flow = std::move(ff);
            continue;
        }
        break;
    }
    return {std::move(cur), std::move(flow)};
}

bool isPhaseGadgetForm(const MbqcDiagram& d) {
    const auto& g = d.graph;
    for (const Vertex v : g.measuredVertices()) {
        if (g.plane(v) == Plane::XZ) {
            return false;
        }
    }
    for (const auto& [a, b] : g.edges()) {
        if (!g.isOutput(a) && !g.isOutput(b) && g.plane(a) == Plane::YZ &&
            g.plane(b) == Plane::YZ) {
            return false;
        }
    }
    return true;
}

bool isReduced(const MbqcDiagram& d) {
    const auto& g = d.graph;
    if (!isPhaseGadgetForm(d)) {
        return false;
    }
    for (const Vertex v : g.vertices()) {
        if (!g.isInternal(v)) {
            continue;
        }
        if (g.angle(v).isClifford()) {
            return false;
        }
        if (g.degree(v) < 2) {
            return false;
        }
    }
    const auto internals = [&] {
        std::vector<Vertex> vs;
        for (const Vertex v : g.vertices()) {
            if (g.isInternal(v)) {
                vs.push_back(v);
            }
        }
        return vs;
    }();
    for (std::size_t i = 0; i < internals.size(); ++i) {
        for (std::size_t j = i + 1; j < internals.size(); ++j) {
            if (g.plane(internals[i]) == g.plane(internals[j]) &&
                g.neighbours(internals[i]) == g.neighbours(internals[j])) {
                return false;
            }
        }
    }
    return true;
}

SimplifyResult reduceDiagram(const MbqcDiagram& d, const GFlow& f) {
    if (d.graph.inputs().size() != d.graph.outputs().size()) {
        throw MbqcError("reduceDiagram requires |inputs| == |outputs|");
    }
    requireVerifies(d.graph, f, "reduceDiagram");
    SimplifyResult res{d, f, {}};
    std::size_t guard = 0;
    const std::size_t maxSteps = 2 * res.diagram.graph.vertices().size() + 4;
    while (true) {
        if (++guard > maxSteps) {
            throw MbqcError("reduceDiagram failed to terminate");
        }
        auto cliffordFree = removeAllCliffords(res.diagram, res.flow);
        res.trace.insert(res.trace.end(), cliffordFree.trace.begin(), cliffordFree.trace.end());
        auto [dd, ff] = toPhaseGadgetForm(cliffordFree.diagram, cliffordFree.flow, &res.trace);
        res.diagram = std::move(dd);
        res.flow = std::move(ff);

        bool changed = false;
        // isolated internal YZ gadgets contribute only a nonzero scalar
        while (true) {
            std::optional<Vertex> lone;
            for (const Vertex v : res.diagram.graph.vertices()) {
                if (res.diagram.graph.isInternal(v) && res.diagram.graph.plane(v) == Plane::YZ &&
                    res.diagram.graph.degree(v) == 0) {
                    lone = v;
                    break;
                }
            }
            if (!lone) {
                break;
            }
            const MbqcDiagram pre = res.diagram;
            res.flow = deleteVertexUpdate(res.diagram.graph, res.flow, *lone);
            res.diagram = dropIsolatedGadgetDiagramOnly(res.diagram, *lone);
            recordStep(&res.trace, pre, res.diagram, "dropIsolatedGadget", {*lone}, {*lone});
            changed = true;
        }
        // degree-1 internal YZ gadgets
        while (true) {
            std::optional<Vertex> gadget;
            for (const Vertex v : res.diagram.graph.vertices()) {
                if (res.diagram.graph.isInternal(v) && res.diagram.graph.plane(v) == Plane::YZ &&
                    res.diagram.graph.degree(v) == 1) {
                    gadget = v;
                    break;
                }
            }
            if (!gadget) {
                break;
            }
            const Vertex nb = *res.diagram.graph.neighbours(*gadget).begin();
            if (res.diagram.graph.isOutput(nb)) {
                auto [d2, f2] = outputExtension(res.diagram, res.flow, nb, &res.trace);
                res.diagram = std::move(d2);
                res.flow = std::move(f2);
            }
            const MbqcDiagram pre = res.diagram;
            const Vertex target = *res.diagram.graph.neighbours(*gadget).begin();
            res.flow = deleteVertexUpdate(res.diagram.graph, res.flow, *gadget);
            res.diagram = fuseDegreeOneGadgetDiagramOnly(res.diagram, *gadget);
            recordStep(&res.trace, pre, res.diagram, "fuseDegreeOneGadget", {*gadget},
                       {*gadget, target});
            changed = true;
        }
        // same-neighbourhood internal YZ pairs
        while (true) {
            std::optional<std::pair<Vertex, Vertex>> twins;
            std::vector<Vertex> yzs;
            for (const Vertex v : res.diagram.graph.vertices()) {
                if (res.diagram.graph.isInternal(v) && res.diagram.graph.plane(v) == Plane::YZ) {
                    yzs.push_back(v);
                }
            }
            for (std::size_t i = 0; i < yzs.size() && !twins; ++i) {
                for (std::size_t j = i + 1; j < yzs.size() && !twins; ++j) {
                    if (res.diagram.graph.neighbours(yzs[i]) ==
                        res.diagram.graph.neighbours(yzs[j])) {
                        twins = {yzs[i], yzs[j]};
                    }
                }
            }
            if (!twins) {
                break;
            }
            const MbqcDiagram pre = res.diagram;
            res.flow = deleteVertexUpdate(res.diagram.graph, res.flow, twins->first);
            res.diagram = fuseParallelGadgetDiagramOnly(res.diagram, twins->first, twins->second);
            recordStep(&res.trace, pre, res.diagram, "fuseParallelGadget",
                       {twins->first, twins->second}, {twins->first, twins->second});
            changed = true;
        }
        if (!changed && isReduced(res.diagram)) {
            break;
        }
        if (!changed) {
            // only Cliffords produced by the fusions can remain; another pass clears them
            bool anyClifford = false;
            for (const Vertex v : res.diagram.graph.vertices()) {
                if (res.diagram.graph.isInternal(v) && res.diagram.graph.angle(v).isClifford()) {
                    anyClifford = true;
                    break;
                }
            }
            if (!anyClifford) {
                throw MbqcError("reduceDiagram: stuck before reaching reduced form");
            }
        }
    }
    return res;
}

MbqcDiagram lcDiagram(const MbqcDiagram& d, Vertex u) {
    return lcDiagramOnly(d, u);
}

MbqcDiagram pivotDiagram(const MbqcDiagram& d, Vertex u, Vertex v) {
    return pivotDiagramOnly(d, u, v);
}

MbqcDiagram inputExtensionDiagram(const MbqcDiagram& d, Vertex u) {
    return inputExtensionDiagramOnly(d, u);
}

MbqcDiagram replayTrace(const MbqcDiagram& initial, const RewriteTrace& trace) {
    MbqcDiagram cur = initial;
    for (const auto& step : trace) {
        if (step.rule == "lc") {
            cur = lcDiagramOnly(cur, step.args.at(0));
        } else if (step.rule == "pivot") {
            cur = pivotDiagramOnly(cur, step.args.at(0), step.args.at(1));
        } else if (step.rule == "inputExtension") {
            cur = inputExtensionDiagramOnly(cur, step.args.at(0));
        } else if (step.rule == "outputExtension") {
            cur = outputExtensionDiagramOnly(cur, step.args.at(0));
        } else if (step.rule == "removeParityGadget") {
            cur = removeParityGadgetDiagramOnly(cur, step.args.at(0));
        } else if (step.rule == "fuseDegreeOneGadget") {
            cur = fuseDegreeOneGadgetDiagramOnly(cur, step.args.at(0));
        } else if (step.rule == "fuseParallelGadget") {
            cur = fuseParallelGadgetDiagramOnly(cur, step.args.at(0), step.args.at(1));
        } else if (step.rule == "dropIsolatedGadget") {
            cur = dropIsolatedGadgetDiagramOnly(cur, step.args.at(0));
        } else if (step.rule == "absorbInputClifford") {
            cur = absorbInputCliffordDiagramOnly(cur, step.args.at(0));
        } else if (step.rule == "absorbOutputClifford") {
            cur = absorbOutputCliffordDiagramOnly(cur, step.args.at(0));
        } else {
            throw MbqcError("replayTrace: unknown rule '" + step.rule + "'");
        }
    }
    return cur;
}

std::string traceToJsonLines(const RewriteTrace& trace) {
    std::ostringstream out;
    for (const auto& step : trace) {
        out << "{\"rule\":\"" << step.rule << "\",\"args\":[";
        for (std::size_t i = 0; i < step.args.size(); ++i) {
            out << (i ? "," : "") << step.args[i];
        }
        out << "],\"labels\":{";
        bool first = true;
        for (const auto& lc : step.labels) {
            out << (first ? "" : ",") << "\"" << lc.vertex << "\":{\"pre\":\"" << lc.pre
                << "\",\"post\":\"" << lc.post << "\"}";
            first = false;
        }
        out << "}}\n";
    }
    return out.str();
}

} // namespace mbqc
