#include "mbqc/Diagram.hpp"

#include <algorithm>

namespace mbqc {

std::string planeName(Plane p) {
    switch (p) {
    case Plane::XY: return "XY";
    case Plane::XZ: return "XZ";
    case Plane::YZ: return "YZ";
    }
    throw MbqcError("bad plane value");
}

Plane planeFromName(const std::string& name) {
    if (name == "XY") return Plane::XY;
    if (name == "XZ") return Plane::XZ;
    if (name == "YZ") return Plane::YZ;
    throw MbqcError("unknown measurement plane '" + name + "'");
}

Vertex LabelledOpenGraph::addVertex() {
    const Vertex v = nextId_++;
    vertices_.insert(v);
    adj_[v];
    return v;
}

Vertex LabelledOpenGraph::addVertex(Plane plane, Angle angle) {
    const Vertex v = addVertex();
    plane_[v] = plane;
    angle_[v] = angle;
    return v;
}

void LabelledOpenGraph::removeVertex(Vertex v) {
    if (!contains(v)) {
        throw MbqcError("removeVertex: unknown vertex " + std::to_string(v));
    }
    for (const Vertex w : VertexSet(adj_[v])) {
        adj_[w].erase(v);
    }
    adj_.erase(v);
    vertices_.erase(v);
    plane_.erase(v);
    angle_.erase(v);
    std::erase(inputs_, v);
    std::erase(outputs_, v);
}

void LabelledOpenGraph::addEdge(Vertex a, Vertex b) {
    if (!contains(a) || !contains(b)) {
        throw MbqcError("addEdge: unknown vertex");
    }
    if (a == b) {
        throw MbqcError("addEdge: self-loops are not allowed");
    }
    adj_[a].insert(b);
    adj_[b].insert(a);
}

void LabelledOpenGraph::removeEdge(Vertex a, Vertex b) {
    adj_.at(a).erase(b);
    adj_.at(b).erase(a);
}

void LabelledOpenGraph::toggleEdge(Vertex a, Vertex b) {
    if (hasEdge(a, b)) {
        removeEdge(a, b);
    } else {
        addEdge(a, b);
    }
}

bool LabelledOpenGraph::hasEdge(Vertex a, Vertex b) const {
    const auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) > 0;
}

const VertexSet& LabelledOpenGraph::neighbours(Vertex v) const {
    const auto it = adj_.find(v);
    if (it == adj_.end()) {
        throw MbqcError("neighbours: unknown vertex " + std::to_string(v));
    }
    return it->second;
}

bool LabelledOpenGraph::isInput(Vertex v) const {
    return std::find(inputs_.begin(), inputs_.end(), v) != inputs_.end();
}

bool LabelledOpenGraph::isOutput(Vertex v) const {
    return std::find(outputs_.begin(), outputs_.end(), v) != outputs_.end();
}

Plane LabelledOpenGraph::plane(Vertex v) const {
    const auto it = plane_.find(v);
    if (it == plane_.end()) {
        throw MbqcError("plane: vertex " + std::to_string(v) + " carries no measurement");
    }
    return it->second;
}

Angle LabelledOpenGraph::angle(Vertex v) const {
    const auto it = angle_.find(v);
    if (it == angle_.end()) {
        throw MbqcError("angle: vertex " + std::to_string(v) + " carries no measurement");
    }
    return it->second;
}

void LabelledOpenGraph::setMeasurement(Vertex v, Plane plane, Angle angle) {
    if (!contains(v)) {
        throw MbqcError("setMeasurement: unknown vertex");
    }
    plane_[v] = plane;
    angle_[v] = angle;
}

void LabelledOpenGraph::clearMeasurement(Vertex v) {
    plane_.erase(v);
    angle_.erase(v);
}

VertexSet LabelledOpenGraph::measuredVertices() const {
    VertexSet m = vertices_;
    for (const Vertex o : outputs_) {
        m.erase(o);
    }
    return m;
}

std::size_t LabelledOpenGraph::edgeCount() const {
    std::size_t n = 0;
    for (const auto& [v, nb] : adj_) {
        n += nb.size();
    }
    return n / 2;
}

std::vector<std::pair<Vertex, Vertex>> LabelledOpenGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const auto& [v, nb] : adj_) {
        for (const Vertex w : nb) {
            if (v < w) {
                es.emplace_back(v, w);
            }
        }
    }
    return es;
}

void LabelledOpenGraph::check() const {
    for (const Vertex v : inputs_) {
        if (!contains(v)) {
            throw MbqcError("input " + std::to_string(v) + " is not a vertex");
        }
    }
    for (const Vertex v : outputs_) {
        if (!contains(v)) {
            throw MbqcError("output " + std::to_string(v) + " is not a vertex");
        }
    }
    for (const Vertex v : vertices_) {
        const bool measured = !isOutput(v);
        if (measured != (plane_.count(v) > 0) || measured != (angle_.count(v) > 0)) {
            throw MbqcError("vertex " + std::to_string(v) +
                            ": measurement labels must exist exactly on non-outputs");
        }
    }
    for (const auto& [v, nb] : adj_) {
        if (nb.count(v) > 0) {
            throw MbqcError("self-loop at " + std::to_string(v));
        }
    }
}

void LabelledOpenGraph::reserveIdsAbove(Vertex n) {
    nextId_ = std::max(nextId_, n);
}

VertexSet oddNeighbourhood(const LabelledOpenGraph& g, const VertexSet& k) {
    VertexSet odd;
    for (const Vertex v : k) {
        for (const Vertex w : g.neighbours(v)) {
            if (!odd.insert(w).second) {
                odd.erase(w);
            }
        }
    }
    return odd;
}

LabelledOpenGraph localComplement(const LabelledOpenGraph& g, Vertex u) {
    if (!g.contains(u)) {
        throw MbqcError("localComplement: unknown vertex " + std::to_string(u));
    }
    LabelledOpenGraph r = g;
    const auto& nb = g.neighbours(u);
    for (auto it = nb.begin(); it != nb.end(); ++it) {
        for (auto jt = std::next(it); jt != nb.end(); ++jt) {
            r.toggleEdge(*it, *jt);
        }
    }
    return r;
}

LabelledOpenGraph pivot(const LabelledOpenGraph& g, Vertex u, Vertex v) {
    if (!g.hasEdge(u, v)) {
        throw MbqcError("pivot: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                        " are not adjacent");
    }
    return localComplement(localComplement(localComplement(g, u), v), u);
}

LabelledOpenGraph identityRemoval(const LabelledOpenGraph& g, Vertex v, Vertex w) {
    const auto& nb = g.neighbours(v);
    if (nb.size() != 2 || nb.count(w) == 0) {
        throw MbqcError("identityRemoval: vertex " + std::to_string(v) +
                        " must have exactly the neighbours {u, w}");
    }
    Vertex u = 0;
    for (const Vertex x : nb) {
        if (x != w) {
            u = x;
        }
    }
    if (g.hasEdge(u, w)) {
        throw MbqcError("identityRemoval: endpoints are adjacent (apply a local complementation first)");
    }
    auto r = pivot(g, u, v);
    r.removeVertex(u);
    r.removeVertex(v);
    return r;
}

LabelledOpenGraph reverseGraph(const LabelledOpenGraph& g) {
    LabelledOpenGraph r = g;
    std::swap(r.inputs(), r.outputs());
    for (const Vertex v : r.vertices()) {
        if (r.isOutput(v)) {
            r.clearMeasurement(v);
        } else {
            r.setMeasurement(v, Plane::XY, Angle::zero());
        }
    }
    return r;
}

LocalClifford MbqcDiagram::inputCliffordOf(Vertex v) const {
    const auto it = inputClifford.find(v);
    return it == inputClifford.end() ? LocalClifford::identity() : it->second;
}

LocalClifford MbqcDiagram::outputCliffordOf(Vertex v) const {
    const auto it = outputClifford.find(v);
    return it == outputClifford.end() ? LocalClifford::identity() : it->second;
}

void MbqcDiagram::composeOutputClifford(Vertex v, const LocalClifford& fromGraphSide) {
    const auto c = fromGraphSide.then(outputCliffordOf(v));
    if (c.isIdentity()) {
        outputClifford.erase(v);
    } else {
        outputClifford[v] = c;
    }
}

void MbqcDiagram::composeInputClifford(Vertex v, const LocalClifford& earlier) {
    const auto c = earlier.then(inputCliffordOf(v));
    if (c.isIdentity()) {
        inputClifford.erase(v);
    } else {
        inputClifford[v] = c;
    }
}

bool isMbqcForm(const MbqcDiagram& d) {
    for (const auto& [v, c] : d.inputClifford) {
        if (!c.isIdentity()) {
            return false;
        }
    }
    for (const auto& [v, c] : d.outputClifford) {
        if (!c.isIdentity()) {
            return false;
        }
    }
    return true;
}

} // namespace mbqc
