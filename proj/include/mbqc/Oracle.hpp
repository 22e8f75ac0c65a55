#pragma once

#include "mbqc/DenseMap.hpp"
#include "mbqc/Diagram.hpp"
#include "mbqc/GFlow.hpp"

#include <complex>
#include <string>
#include <vector>

namespace mbqc {

/// Interprets the diagram as its associated linear map: |+> preparations on
/// non-inputs, a CZ per edge, then one measurement-effect contraction
///   <+_XY,a| = (<0| + e^{-ia}<1|)/sqrt2
///   <+_XZ,a| = cos(a/2)<0| + sin(a/2)<1|
///   <+_YZ,a| = cos(a/2)<0| - i sin(a/2)<1|
/// per non-output, with the boundary local Cliffords applied on the wires.
/// Caps: |V| <= 20.
DenseMap evalDiagram(const MbqcDiagram& d);

struct ScalarEquivalence {
    bool equivalent = false;
    std::complex<double> scalar = 0.0;
    double maxError = 0.0;
};

/// True iff a == z*b elementwise within tol*max|a|, z fixed from the
/// largest-magnitude entry of b. Throws on dimension mismatch or when b is
/// identically zero while a is not.
ScalarEquivalence equivalentUpToScalar(const DenseMap& a, const DenseMap& b, double tol = 1e-8);

struct Branch {
    std::vector<int> outcomes;   // per measured vertex, in measurement order
    DenseMap map;
    double residual = 0.0;       // phase-aligned distance to the all-zero branch
};

struct BranchReport {
    std::vector<Vertex> order;   // measurement order (deepest layer first)
    std::vector<Branch> branches;
    double maxResidual = 0.0;
};

/// Runs every outcome branch of the pattern with corrections taken from f:
/// measuring in descending-depth order with effect <+| or <-|, then, on
/// outcome 1, X on g(i)\{i} and Z on Odd(g(i))\{i}. f must be structurally
/// complete but is not required to verify (so broken flows can be probed).
/// Caps: at most 12 measured vertices.
BranchReport runBranches(const MbqcDiagram& d, const GFlow& f);

} // namespace mbqc
