#include "mbqc/GFlow.hpp"

#include "mbqc/GF2.hpp"

#include <algorithm>
#include <functional>

namespace mbqc {

int GFlow::depthOf(Vertex v) const {
    const auto it = depth.find(v);
    if (it == depth.end()) {
        throw MbqcError("gflow depth missing for vertex " + std::to_string(v));
    }
    return it->second;
}

int GFlow::maxDepth() const {
    int m = 0;
    for (const auto& [v, d] : depth) {
        m = std::max(m, d);
    }
    return m;
}

GFlowCheck verifyGFlow(const LabelledOpenGraph& g, const GFlow& f) {
    GFlowCheck res;
    auto fail = [&res](Vertex v, std::string cond, std::string detail) {
        res.violations.push_back({v, std::move(cond), std::move(detail)});
    };

    const VertexSet measured = g.measuredVertices();
    for (const Vertex v : measured) {
        if (f.correction.count(v) == 0) {
            fail(v, "domain", "no correction set for measured vertex");
        }
        if (f.depth.count(v) == 0) {
            fail(v, "domain", "no depth for measured vertex");
        }
    }
    for (const auto& [v, gv] : f.correction) {
        if (measured.count(v) == 0) {
            fail(v, "domain", "correction set on a non-measured vertex");
        }
    }
    if (!res.violations.empty()) {
        res.ok = false;
        return res;
    }

    for (const Vertex v : measured) {
        const auto& gv = f.correction.at(v);
        const int dv = f.depthOf(v);
        for (const Vertex w : gv) {
            if (!g.contains(w)) {
                fail(v, "domain", "correction set names unknown vertex " + std::to_string(w));
                continue;
            }
            if (g.isInput(w)) {
                fail(v, "input", "correction set contains input " + std::to_string(w));
            }
            if (w != v && f.depthOf(w) >= dv) {
                fail(v, "g1", std::to_string(w) + " in g(v) is not later than v");
            }
        }
        const VertexSet odd = oddNeighbourhood(g, gv);
        for (const Vertex w : odd) {
            if (w != v && f.depthOf(w) >= dv) {
                fail(v, "g2", std::to_string(w) + " in Odd(g(v)) is not later than v");
            }
        }
        const bool inG = gv.count(v) > 0;
        const bool inOdd = odd.count(v) > 0;
        switch (g.plane(v)) {
        case Plane::XY:
            if (inG || !inOdd) {
                fail(v, "g3", "XY vertex needs v not in g(v) and v in Odd(g(v))");
            }
            break;
        case Plane::XZ:
            if (!inG || !inOdd) {
                fail(v, "g4", "XZ vertex needs v in g(v) and v in Odd(g(v))");
            }
            break;
        case Plane::YZ:
            if (!inG || inOdd) {
                fail(v, "g5", "YZ vertex needs v in g(v) and v not in Odd(g(v))");
            }
            break;
        }
    }
    res.ok = res.violations.empty();
    return res;
}

namespace {

void requireComponentsTouchBoundary(const LabelledOpenGraph& g) {
    VertexSet seen;
    for (const Vertex start : g.vertices()) {
        if (seen.count(start) > 0) {
            continue;
        }
        VertexSet comp;
        std::vector<Vertex> stack{start};
        bool touches = false;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            if (!comp.insert(v).second) {
                continue;
            }
            if (g.isInput(v) || g.isOutput(v)) {
                touches = true;
            }
            for (const Vertex w : g.neighbours(v)) {
                stack.push_back(w);
            }
        }
        if (!touches) {
            throw MbqcError("connected component without inputs or outputs (vertex " +
                            std::to_string(start) + ")");
        }
        seen.insert(comp.begin(), comp.end());
    }
}

} // namespace

std::optional<GFlow> findGFlow(const LabelledOpenGraph& g) {
    g.check();
    requireComponentsTouchBoundary(g);

    GFlow flow;
    VertexSet out;
    for (const Vertex v : g.outputs()) {
        out.insert(v);
        flow.depth[v] = 0;
    }

    int layer = 1;
    while (true) {
        std::vector<Vertex> nonOut;
        for (const Vertex v : g.vertices()) {
            if (out.count(v) == 0) {
                nonOut.push_back(v);
            }
        }
        if (nonOut.empty()) {
            return flow;
        }
        std::vector<Vertex> cand; // correction candidates: current outputs that are not inputs
        for (const Vertex v : out) {
            if (!g.isInput(v)) {
                cand.push_back(v);
            }
        }
        std::map<Vertex, std::size_t> rowOf;
        for (std::size_t r = 0; r < nonOut.size(); ++r) {
            rowOf[nonOut[r]] = r;
        }
        GF2Matrix a(nonOut.size(), cand.size());
        for (std::size_t r = 0; r < nonOut.size(); ++r) {
            for (std::size_t c = 0; c < cand.size(); ++c) {
                if (g.hasEdge(nonOut[r], cand[c])) {
                    a.set(r, c, true);
                }
            }
        }
        std::vector<Vertex> targets;
        std::vector<std::vector<bool>> rhs;
        for (const Vertex u : nonOut) {
            const Plane pl = g.plane(u);
            if (pl != Plane::XY && g.isInput(u)) {
                continue; // u would need itself in g(u), but inputs cannot be corrected on
            }
            std::vector<bool> b(nonOut.size(), false);
            if (pl == Plane::XY) {
                b[rowOf[u]] = true;
            } else {
                // Odd(K ∪ {u}) ∩ nonOut = {u} (XZ) or ∅ (YZ)  ⟺  Odd(K) ∩ nonOut = target Δ (N(u) ∩ nonOut)
                for (const Vertex w : g.neighbours(u)) {
                    if (const auto it = rowOf.find(w); it != rowOf.end()) {
                        b[it->second] = true;
                    }
                }
                if (pl == Plane::XZ) {
                    b[rowOf[u]] = !b[rowOf[u]];
                }
            }
            targets.push_back(u);
            rhs.push_back(std::move(b));
        }
        const auto sols = solveMany(a, rhs);
        VertexSet found;
        for (std::size_t j = 0; j < targets.size(); ++j) {
            if (!sols[j]) {
                continue;
            }
            const Vertex u = targets[j];
            VertexSet k;
            for (std::size_t c = 0; c < cand.size(); ++c) {
                if ((*sols[j])[c]) {
                    k.insert(cand[c]);
                }
            }
            if (g.plane(u) != Plane::XY) {
                k.insert(u);
            }
            flow.correction[u] = std::move(k);
            flow.depth[u] = layer;
            found.insert(u);
        }
        if (found.empty()) {
            return std::nullopt;
        }
        out.insert(found.begin(), found.end());
        ++layer;
    }
}

std::optional<CausalFlow> findCausalFlow(const LabelledOpenGraph& g) {
    g.check();
    for (const Vertex v : g.measuredVertices()) {
        if (g.plane(v) != Plane::XY) {
            throw MbqcError("causal flow requires all measurements in the XY plane");
        }
    }
    CausalFlow flow;
    VertexSet processed;
    VertexSet correctors; // processed, non-input, not yet used as a successor
    for (const Vertex v : g.outputs()) {
        processed.insert(v);
        flow.depth[v] = 0;
        if (!g.isInput(v)) {
            correctors.insert(v);
        }
    }
    int layer = 1;
    while (processed.size() < g.vertices().size()) {
        std::vector<std::pair<Vertex, Vertex>> picks; // (u, f(u))
        VertexSet taken;
        for (const Vertex w : correctors) {
            Vertex u = 0;
            std::size_t free = 0;
            for (const Vertex x : g.neighbours(w)) {
                if (processed.count(x) == 0) {
                    u = x;
                    ++free;
                }
            }
            if (free == 1 && taken.count(u) == 0) {
                picks.emplace_back(u, w);
                taken.insert(u);
            }
        }
        if (picks.empty()) {
            return std::nullopt;
        }
        for (const auto& [u, w] : picks) {
            flow.successor[u] = w;
            flow.depth[u] = layer;
            processed.insert(u);
            correctors.erase(w);
        }
        for (const auto& [u, w] : picks) {
            if (!g.isInput(u)) {
                correctors.insert(u);
            }
        }
        ++layer;
    }
    return flow;
}

GFlowCheck verifyCausalFlow(const LabelledOpenGraph& g, const CausalFlow& f) {
    GFlow asGFlow;
    asGFlow.depth = f.depth;
    for (const auto& [u, w] : f.successor) {
        asGFlow.correction[u] = {w};
    }
    GFlowCheck res = verifyGFlow(g, asGFlow);
    for (const auto& [u, w] : f.successor) {
        if (!g.hasEdge(u, w)) {
            res.violations.push_back({u, "flow", "successor is not a neighbour"});
            res.ok = false;
        }
    }
    return res;
}

GFlow focusGFlow(const LabelledOpenGraph& g, const GFlow& f) {
    if (!verifyGFlow(g, f).ok) {
        throw MbqcError("focusGFlow: input gflow does not verify");
    }
    GFlow r = f;
    const VertexSet measured = g.measuredVertices();
    for (const Vertex v : measured) {
        std::size_t guard = 0;
        while (true) {
            if (++guard > g.vertices().size() + 1) {
                throw MbqcError("focusGFlow failed to terminate");
            }
            const auto& gv = r.correction.at(v);
            const VertexSet odd = oddNeighbourhood(g, gv);
            VertexSet offending;
            for (const Vertex w : odd) {
                if (w != v && measured.count(w) > 0 && g.plane(w) == Plane::XY) {
                    offending.insert(w);
                }
            }
            for (const Vertex w : gv) {
                if (w != v && measured.count(w) > 0 && g.plane(w) != Plane::XY) {
                    offending.insert(w);
                }
            }
            if (offending.empty()) {
                break;
            }
            // minimal in ≺ = largest depth; ties broken by lowest id
            Vertex pick = *offending.begin();
            for (const Vertex w : offending) {
                if (r.depthOf(w) > r.depthOf(pick)) {
                    pick = w;
                }
            }
            VertexSet next = r.correction.at(v);
            for (const Vertex x : r.correction.at(pick)) {
                if (!next.insert(x).second) {
                    next.erase(x);
                }
            }
            r.correction[v] = std::move(next);
        }
    }
    return r;
}

bool isFocused(const LabelledOpenGraph& g, const GFlow& f) {
    const VertexSet measured = g.measuredVertices();
    for (const Vertex v : measured) {
        const auto it = f.correction.find(v);
        if (it == f.correction.end()) {
            return false;
        }
        for (const Vertex w : it->second) {
            if (w != v && measured.count(w) > 0 && g.plane(w) != Plane::XY) {
                return false;
            }
        }
        for (const Vertex w : oddNeighbourhood(g, it->second)) {
            if (w != v && measured.count(w) > 0 && g.plane(w) == Plane::XY) {
                return false;
            }
        }
    }
    return true;
}

std::map<Vertex, int> deriveDepths(const LabelledOpenGraph& g,
                                   const std::map<Vertex, VertexSet>& correction) {
    std::map<Vertex, int> depth;
    for (const Vertex v : g.vertices()) {
        if (g.isOutput(v)) {
            depth[v] = 0;
        }
    }
    std::map<Vertex, int> state; // 0 new, 1 visiting, 2 done
    std::function<int(Vertex)> visit = [&](Vertex v) -> int {
        if (const auto it = depth.find(v); it != depth.end() && state[v] == 2) {
            return it->second;
        }
        if (g.isOutput(v)) {
            state[v] = 2;
            return 0;
        }
        if (state[v] == 1) {
            throw MbqcError("correction function admits no consistent measurement order");
        }
        state[v] = 1;
        const auto it = correction.find(v);
        if (it == correction.end()) {
            throw MbqcError("deriveDepths: missing correction set for " + std::to_string(v));
        }
        int d = 1;
        VertexSet later = it->second;
        const VertexSet odd = oddNeighbourhood(g, it->second);
        later.insert(odd.begin(), odd.end());
        later.erase(v);
        for (const Vertex w : later) {
            d = std::max(d, visit(w) + 1);
        }
        state[v] = 2;
        depth[v] = d;
        return d;
    };
    for (const Vertex v : g.measuredVertices()) {
        visit(v);
    }
    return depth;
}

GFlow reverseFocusedGFlow(const LabelledOpenGraph& g, const GFlow& f) {
    for (const Vertex v : g.measuredVertices()) {
        if (g.plane(v) != Plane::XY) {
            throw MbqcError("reverseFocusedGFlow requires all XY measurements");
        }
    }
    if (g.inputs().size() != g.outputs().size()) {
        throw MbqcError("reverseFocusedGFlow requires |I| = |O|");
    }
    if (!verifyGFlow(g, f).ok || !isFocused(g, f)) {
        throw MbqcError("reverseFocusedGFlow requires a verifying focused gflow");
    }
    const LabelledOpenGraph rev = reverseGraph(g);
    GFlow r;
    for (const Vertex v : rev.measuredVertices()) {
        VertexSet gv;
        for (const auto& [w, set] : f.correction) {
            if (set.count(v) > 0) {
                gv.insert(w);
            }
        }
        r.correction[v] = std::move(gv);
    }
    r.depth = deriveDepths(rev, r.correction);
    return r;
}

GFlow deleteVertexUpdate(const LabelledOpenGraph& g, const GFlow& f, Vertex u) {
    if (g.isOutput(u)) {
        throw MbqcError("deleteVertexUpdate: vertex is an output");
    }
    if (g.plane(u) == Plane::XY) {
        throw MbqcError("deleteVertexUpdate: deleting an XY-measured vertex loses gflow");
    }
    if (!verifyGFlow(g, f).ok) {
        throw MbqcError("deleteVertexUpdate: input gflow does not verify");
    }
    const auto& gu = f.correction.at(u);
    GFlow r;
    for (const auto& [v, gv] : f.correction) {
        if (v == u) {
            continue;
        }
        VertexSet nv = gv;
        if (gv.count(u) > 0) {
            for (const Vertex x : gu) {
                if (!nv.insert(x).second) {
                    nv.erase(x);
                }
            }
        }
        r.correction[v] = std::move(nv);
    }
    r.depth = f.depth;
    r.depth.erase(u);
    return r;
}

GFlow localComplementUpdate(const LabelledOpenGraph& g, const GFlow& f, Vertex u) {
    GFlow r;
    r.depth = f.depth;
    VertexSet guPrime;
    if (!g.isOutput(u)) {
        guPrime = f.correction.at(u);
        if (g.plane(u) != Plane::YZ) { // XY and XZ toggle self-membership
            if (!guPrime.insert(u).second) {
                guPrime.erase(u);
            }
        }
    }
    for (const auto& [v, gv] : f.correction) {
        if (v == u) {
            continue;
        }
        VertexSet nv = gv;
        if (oddNeighbourhood(g, gv).count(u) > 0) {
            for (const Vertex x : guPrime) {
                if (!nv.insert(x).second) {
                    nv.erase(x);
                }
            }
            if (!nv.insert(u).second) {
                nv.erase(u);
            }
        }
        r.correction[v] = std::move(nv);
    }
    if (!g.isOutput(u)) {
        r.correction[u] = std::move(guPrime);
    }
    return r;
}

} // namespace mbqc
