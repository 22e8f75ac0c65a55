#include "mbqc/Extract.hpp"

#include "mbqc/GF2.hpp"
#include "mbqc/Rewrite.hpp"

#include <algorithm>

namespace mbqc {

std::vector<Gate> permutationToSwaps(const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    for (const std::size_t q : perm) {
        if (q >= n || seen[q]) {
            throw MbqcError("permutationToSwaps: not a bijection");
        }
        seen[q] = true;
    }
    std::vector<std::size_t> inv(n);
    for (std::size_t p = 0; p < n; ++p) {
        inv[perm[p]] = p;
    }
    std::vector<Gate> swaps;
    std::vector<std::size_t> arr(n);
    for (std::size_t p = 0; p < n; ++p) {
        arr[p] = p;
    }
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t want = inv[q];
        const auto it = std::find(arr.begin(), arr.end(), want);
        const auto j = static_cast<std::size_t>(it - arr.begin());
        if (j != q) {
            swaps.push_back(Gate::swap(q, j));
            std::swap(arr[q], arr[j]);
        }
    }
    return swaps;
}

namespace {

void emitCliffordGates(std::vector<Gate>& buf, const LocalClifford& c, std::size_t q) {
    // application order on the wire is rz(c), rx(b), rz(a); the buffer is
    // reversed once at the end, so append in the opposite order
    const auto [a, b, zc] = c.zxzTriple();
    if (a != 0) {
        buf.push_back(Gate::rz(Angle::quarter(a), q));
    }
    if (b != 0) {
        buf.push_back(Gate::rx(Angle::quarter(b), q));
    }
    if (zc != 0) {
        buf.push_back(Gate::rz(Angle::quarter(zc), q));
    }
}

} // namespace

Circuit extractCircuit(const MbqcDiagram& d, const GFlow& f) {
    if (d.graph.inputs().size() != d.graph.outputs().size()) {
        throw MbqcError("extractCircuit requires |inputs| == |outputs|");
    }
    {
        const auto check = verifyGFlow(d.graph, f);
        if (!check.ok) {
            throw MbqcError("extractCircuit: diagram has no valid gflow");
        }
    }

    MbqcDiagram cur = d;
    GFlow flow = f;
    for (const Vertex u : std::vector<Vertex>(cur.graph.inputs())) {
        if (cur.graph.isOutput(u)) {
            auto [dd, ff] = inputExtension(cur, flow, u);
            cur = std::move(dd);
            flow = std::move(ff);
        }
    }
    {
        auto [dd, ff] = toPhaseGadgetForm(cur, flow);
        cur = std::move(dd);
        flow = std::move(ff);
    }

    std::vector<Vertex> frontier = cur.graph.outputs();
    const std::size_t width = frontier.size();
    std::vector<Gate> buf; // gates in extraction order; reversed at the end
    auto qubitOf = [&](Vertex v) {
        const auto it = std::find(frontier.begin(), frontier.end(), v);
        if (it == frontier.end()) {
            throw MbqcError("internal: vertex not on the frontier");
        }
        return static_cast<std::size_t>(it - frontier.begin());
    };

    auto processFrontier = [&] {
        for (std::size_t q = 0; q < width; ++q) {
            const auto c = cur.outputCliffordOf(frontier[q]);
            if (!c.isIdentity()) {
                cur.outputClifford.erase(frontier[q]);
                emitCliffordGates(buf, c, q);
            }
        }
        for (std::size_t q1 = 0; q1 < width; ++q1) {
            for (std::size_t q2 = q1 + 1; q2 < width; ++q2) {
                if (cur.graph.hasEdge(frontier[q1], frontier[q2])) {
                    cur.graph.removeEdge(frontier[q1], frontier[q2]);
                    buf.push_back(Gate::cz(q1, q2));
                }
            }
        }
    };

    std::size_t guard = 0;
    const std::size_t maxIter = 4 * cur.graph.vertices().size() + 8;
    while (true) {
        if (++guard > maxIter) {
            throw MbqcError("extractCircuit failed to terminate");
        }
        processFrontier();
        if (cur.graph.vertices().size() == width) {
            break;
        }

        std::vector<Vertex> rows;
        for (const Vertex v : frontier) {
            if (!cur.graph.isInput(v)) {
                rows.push_back(v);
            }
        }
        VertexSet colSet;
        for (const Vertex r : rows) {
            const auto& nb = cur.graph.neighbours(r);
            colSet.insert(nb.begin(), nb.end());
        }
        for (const Vertex v : frontier) {
            colSet.erase(v);
        }
        const std::vector<Vertex> cols(colSet.begin(), colSet.end());

        bool extractedAny = false;
        if (!rows.empty() && !cols.empty()) {
            GF2Matrix m(rows.size(), cols.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    if (cur.graph.hasEdge(rows[r], cols[c])) {
                        m.set(r, c, true);
                    }
                }
            }
            auto red = eliminate(m);
            std::vector<std::size_t> singles;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (red.matrix.rowPopcount(r) == 1) {
                    singles.push_back(r);
                }
            }
            if (!singles.empty()) {
                for (const auto& op : red.log) {
                    // row target += row source: target's edges toggle against
                    // source's current column neighbours
                    const Vertex sv = rows[op.source];
                    const Vertex tv = rows[op.target];
                    for (const Vertex c : cols) {
                        if (cur.graph.hasEdge(sv, c)) {
                            cur.graph.toggleEdge(tv, c);
                        }
                    }
                    buf.push_back(Gate::cnot(qubitOf(tv), qubitOf(sv)));
                }
                for (const std::size_t r : singles) {
                    const Vertex w = rows[r];
                    std::size_t colIdx = 0;
                    while (!red.matrix.get(r, colIdx)) {
                        ++colIdx;
                    }
                    const Vertex v = cols[colIdx];
                    if (cur.graph.plane(v) != Plane::XY) {
                        throw MbqcError("internal: single-neighbour vertex is not XY-measured");
                    }
                    const std::size_t q = qubitOf(w);
                    buf.push_back(Gate::h(q));
                    const Angle theta = cur.graph.angle(v);
                    if (!theta.isZero()) {
                        buf.push_back(Gate::rz(-theta, q));
                    }
                    cur.graph.clearMeasurement(v);
                    std::replace(cur.graph.outputs().begin(), cur.graph.outputs().end(), w, v);
                    cur.graph.removeVertex(w);
                    frontier[q] = v;
                    extractedAny = true;
                }
            }
        }
        if (extractedAny) {
            continue;
        }

        // no extractable row: open up YZ gadgets adjacent to the frontier
        bool pivoted = false;
        for (const Vertex v : VertexSet(cur.graph.vertices())) {
            if (!cur.graph.contains(v) || cur.graph.isOutput(v) ||
                cur.graph.plane(v) != Plane::YZ) {
                continue;
            }
            std::optional<Vertex> partner;
            std::optional<Vertex> inputPartner;
            for (const Vertex w : cur.graph.neighbours(v)) {
                if (!cur.graph.isOutput(w)) {
                    continue;
                }
                if (!cur.graph.isInput(w)) {
                    partner = w;
                    break;
                }
                if (!inputPartner) {
                    inputPartner = w;
                }
            }
            if (!partner && inputPartner) {
                // the gadget only touches frontier vertices that are still
                // inputs; peel the input wire off one of them first
                cur = inputExtensionDiagram(cur, *inputPartner);
                partner = inputPartner;
            }
            if (partner) {
                cur = pivotDiagram(cur, v, *partner);
                pivoted = true;
            }
        }
        if (!pivoted) {
            throw MbqcError("extractCircuit: no progress possible (is the gflow valid?)");
        }
    }

    // only frontier vertices remain; each carries an input wire
    std::vector<std::size_t> perm(width);
    for (std::size_t q = 0; q < width; ++q) {
        const Vertex v = frontier[q];
        if (!cur.graph.isInput(v)) {
            throw MbqcError("extractCircuit: leftover frontier vertex is not an input");
        }
        const auto it = std::find(cur.graph.inputs().begin(), cur.graph.inputs().end(), v);
        perm[static_cast<std::size_t>(it - cur.graph.inputs().begin())] = q;
    }
    auto swaps = permutationToSwaps(perm);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
        buf.push_back(*it);
    }
    for (std::size_t p = 0; p < width; ++p) {
        const auto c = cur.inputCliffordOf(cur.graph.inputs()[p]);
        if (!c.isIdentity()) {
            emitCliffordGates(buf, c, p);
        }
    }

    Circuit out;
    out.width = width;
    out.gates.assign(buf.rbegin(), buf.rend());
    out.check();
    return out;
}

} // namespace mbqc
