#pragma once

#include "mbqc/Diagram.hpp"
#include "mbqc/GFlow.hpp"

#include <string>

namespace mbqc {

/// Canonical graph JSON:
/// {"edges":[[0,1],...],"input_cliffords":{"0":[a,b,c]},"inputs":[0],
///  "output_cliffords":{},"outputs":[5],
///  "vertices":[{"angle":"1/4","id":0,"plane":"XY"},...]}
/// with "angle" the rational multiple of pi as "num/den"; plane and angle are
/// present exactly on non-outputs. Serialization is canonical, so
/// parse∘print and print∘parse are both identities on canonical data.
std::string diagramToJson(const MbqcDiagram& d);
MbqcDiagram diagramFromJson(const std::string& text);

/// {"correction":{"0":[1,2]},"depth":{"0":3,"5":0}}
std::string gflowToJson(const GFlow& f);
GFlow gflowFromJson(const std::string& text);

/// Graphviz export (convenience only, no format contract).
std::string diagramToDot(const MbqcDiagram& d);

} // namespace mbqc
