#pragma once

#include "mbqc/Circuit.hpp"
#include "mbqc/Diagram.hpp"
#include "mbqc/GFlow.hpp"

#include <cstddef>
#include <vector>

namespace mbqc {

/// Ancilla-free circuit extraction from an MBQC+LC diagram with gflow and
/// |I| = |O|. The diagram is first brought into phase-gadget form (vertices
/// overlapping inputs and outputs are input-extended away); the loop then
/// alternates between unfusing frontier Cliffords/CZs, Gauss-reducing the
/// frontier biadjacency matrix (row operations leave as CNOTs, single-1 rows
/// pull their unique XY neighbour onto the frontier behind an H and Z-phase),
/// and pivoting frontier-adjacent YZ vertices when no row qualifies. The
/// leftover wire permutation becomes a SWAP network.
Circuit extractCircuit(const MbqcDiagram& d, const GFlow& f);

/// perm[p] = q: the wire entering position p exits at position q.
/// At most n-1 swaps; applying them in order realizes the permutation.
std::vector<Gate> permutationToSwaps(const std::vector<std::size_t>& perm);

} // namespace mbqc
