#pragma once

#include "mbqc/Diagram.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mbqc {

/// Correction-set function g plus the layer function d materializing the
/// partial order: v ≺ w holds iff d(v) > d(w). Outputs sit in layer 0.
struct GFlow {
    std::map<Vertex, VertexSet> correction;
    std::map<Vertex, int> depth;

    [[nodiscard]] int depthOf(Vertex v) const;
    [[nodiscard]] int maxDepth() const;
    bool operator==(const GFlow&) const = default;
};

struct GFlowViolation {
    Vertex vertex;
    std::string condition; // "domain", "input", "g1".."g5"
    std::string detail;
};

struct GFlowCheck {
    bool ok = false;
    std::vector<GFlowViolation> violations;
};

/// Checks conditions (g1)-(g5) under the depth-induced order, plus the
/// structural requirements (domain = non-outputs, correction sets avoid inputs).
GFlowCheck verifyGFlow(const LabelledOpenGraph& g, const GFlow& f);

/// Maximally delayed extended gflow, found layer by layer with one shared
/// F_2 elimination per layer. Empty optional iff no gflow exists.
/// Throws MbqcError when a connected component misses both inputs and outputs.
std::optional<GFlow> findGFlow(const LabelledOpenGraph& g);

struct CausalFlow {
    std::map<Vertex, Vertex> successor;
    std::map<Vertex, int> depth;
};

/// Causal flow for all-XY graphs; rejects other planes.
std::optional<CausalFlow> findCausalFlow(const LabelledOpenGraph& g);

GFlowCheck verifyCausalFlow(const LabelledOpenGraph& g, const CausalFlow& f);

/// Repeated g(v) <- g(v) Δ g(w) until correction sets touch non-outputs only in
/// plane-compatible ways; the depth map is preserved exactly.
GFlow focusGFlow(const LabelledOpenGraph& g, const GFlow& f);

/// For all-XY graphs with |I| = |O| and focused f: the focused gflow of the
/// reversed graph, g'(v) = {w | v ∈ g(w)}, with freshly derived layers.
GFlow reverseFocusedGFlow(const LabelledOpenGraph& g, const GFlow& f);

/// Gflow for g \ {u} per the symmetric-difference update; u must not be XY-measured.
GFlow deleteVertexUpdate(const LabelledOpenGraph& g, const GFlow& f, Vertex u);

/// Gflow for G ⋆ u with the same layers (correction sets updated in place).
GFlow localComplementUpdate(const LabelledOpenGraph& g, const GFlow& f, Vertex u);

/// Layers from scratch: longest dependency path to the outputs.
/// Throws if the correction function admits no consistent order.
std::map<Vertex, int> deriveDepths(const LabelledOpenGraph& g,
                                   const std::map<Vertex, VertexSet>& correction);

/// True iff f satisfies the two focusing bullet points on g.
bool isFocused(const LabelledOpenGraph& g, const GFlow& f);

} // namespace mbqc
