#pragma once

#include "mbqc/Angle.hpp"
#include "mbqc/Clifford.hpp"
#include "mbqc/Definitions.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mbqc {

enum class Plane { XY, XZ, YZ };

std::string planeName(Plane p);
Plane planeFromName(const std::string& name);

/// Simple undirected graph with ordered input/output lists and a measurement
/// plane + exact angle on every non-output vertex. Inputs and outputs may overlap.
class LabelledOpenGraph {
public:
    Vertex addVertex();
    Vertex addVertex(Plane plane, Angle angle);
    void removeVertex(Vertex v);

    void addEdge(Vertex a, Vertex b);
    void removeEdge(Vertex a, Vertex b);
    void toggleEdge(Vertex a, Vertex b);
    [[nodiscard]] bool hasEdge(Vertex a, Vertex b) const;

    [[nodiscard]] const VertexSet& vertices() const { return vertices_; }
    [[nodiscard]] const VertexSet& neighbours(Vertex v) const;
    [[nodiscard]] std::size_t degree(Vertex v) const { return neighbours(v).size(); }

    [[nodiscard]] bool contains(Vertex v) const { return vertices_.count(v) > 0; }
    [[nodiscard]] bool isInput(Vertex v) const;
    [[nodiscard]] bool isOutput(Vertex v) const;
    [[nodiscard]] bool isInternal(Vertex v) const { return !isInput(v) && !isOutput(v); }
    [[nodiscard]] bool isMeasured(Vertex v) const { return !isOutput(v); }

    std::vector<Vertex>& inputs() { return inputs_; }
    std::vector<Vertex>& outputs() { return outputs_; }
    [[nodiscard]] const std::vector<Vertex>& inputs() const { return inputs_; }
    [[nodiscard]] const std::vector<Vertex>& outputs() const { return outputs_; }

    [[nodiscard]] Plane plane(Vertex v) const;
    [[nodiscard]] Angle angle(Vertex v) const;
    void setMeasurement(Vertex v, Plane plane, Angle angle);
    void clearMeasurement(Vertex v);

    [[nodiscard]] VertexSet measuredVertices() const;   // vertices \ outputs
    [[nodiscard]] std::size_t edgeCount() const;
    [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Throws MbqcError if any structural invariant is broken
    /// (labels on exactly the non-outputs, boundary lists inside the vertex set).
    void check() const;

    /// Reserves ids at least up to n (fresh vertices get larger ids).
    void reserveIdsAbove(Vertex n);

    bool operator==(const LabelledOpenGraph&) const = default;

private:
    Vertex nextId_ = 0;
    VertexSet vertices_;
    std::map<Vertex, VertexSet> adj_;
    std::vector<Vertex> inputs_;
    std::vector<Vertex> outputs_;
    std::map<Vertex, Plane> plane_;
    std::map<Vertex, Angle> angle_;
};

/// Odd_G(K): vertices with an odd number of neighbours in K.
VertexSet oddNeighbourhood(const LabelledOpenGraph& g, const VertexSet& k);

/// G ⋆ u: toggles all edges among the neighbours of u. Labels untouched.
LabelledOpenGraph localComplement(const LabelledOpenGraph& g, Vertex u);

/// G ∧ uv = G ⋆ u ⋆ v ⋆ u for adjacent u, v.
LabelledOpenGraph pivot(const LabelledOpenGraph& g, Vertex u, Vertex v);

/// ((G ∧ uv) \ {u}) \ {v} where N(v) = {u, w} and u !~ w.
LabelledOpenGraph identityRemoval(const LabelledOpenGraph& g, Vertex v, Vertex w);

/// Inputs and outputs swapped; all non-outputs of the result measured XY
/// (fresh labels get angle 0 — reversal is a flow-level notion, angles carry no meaning).
LabelledOpenGraph reverseGraph(const LabelledOpenGraph& g);

/// A labelled open graph with a local Clifford on each input/output wire.
struct MbqcDiagram {
    LabelledOpenGraph graph;
    std::map<Vertex, LocalClifford> inputClifford;
    std::map<Vertex, LocalClifford> outputClifford;

    [[nodiscard]] LocalClifford inputCliffordOf(Vertex v) const;
    [[nodiscard]] LocalClifford outputCliffordOf(Vertex v) const;
    /// Folds a Clifford emerging from the graph-state side under the existing
    /// wire Clifford (the new factor acts first).
    void composeOutputClifford(Vertex v, const LocalClifford& fromGraphSide);
    void composeInputClifford(Vertex v, const LocalClifford& earlier);

    bool operator==(const MbqcDiagram&) const = default;
};

/// True iff every local Clifford is the identity.
bool isMbqcForm(const MbqcDiagram& d);

} // namespace mbqc
