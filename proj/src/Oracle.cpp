#include "mbqc/Oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mbqc {

double DenseMap::maxAbs() const {
    double m = 0.0;
    for (const auto& e : data) {
        m = std::max(m, std::abs(e));
    }
    return m;
}

DenseMap DenseMap::dagger() const {
    DenseMap t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            t.at(c, r) = std::conj(at(r, c));
        }
    }
    return t;
}

DenseMap DenseMap::operator*(const DenseMap& o) const {
    if (cols != o.rows) {
        throw MbqcError("DenseMap product dimension mismatch");
    }
    DenseMap p(rows, o.cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < cols; ++k) {
            const auto a = at(r, k);
            if (a == std::complex<double>(0.0)) {
                continue;
            }
            for (std::size_t c = 0; c < o.cols; ++c) {
                p.at(r, c) += a * o.at(k, c);
            }
        }
    }
    return p;
}

std::size_t DenseMap::rank(double tol) const {
    // Gaussian elimination with partial pivoting over C
    auto m = *this;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols && rk < m.rows; ++c) {
        std::size_t best = rk;
        for (std::size_t r = rk; r < m.rows; ++r) {
            if (std::abs(m.at(r, c)) > std::abs(m.at(best, c))) {
                best = r;
            }
        }
        if (std::abs(m.at(best, c)) < tol * std::max(1.0, maxAbs())) {
            continue;
        }
        for (std::size_t cc = 0; cc < m.cols; ++cc) {
            std::swap(m.at(best, cc), m.at(rk, cc));
        }
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rk) {
                continue;
            }
            const auto fac = m.at(r, c) / m.at(rk, c);
            for (std::size_t cc = 0; cc < m.cols; ++cc) {
                m.at(r, cc) -= fac * m.at(rk, cc);
            }
        }
        ++rk;
    }
    return rk;
}

namespace {

using Cx = std::complex<double>;

std::array<Cx, 2> effectBra(Plane plane, double a) {
    const double s = 1.0 / std::numbers::sqrt2;
    switch (plane) {
    case Plane::XY: return {s, s * std::exp(Cx(0, -a))};
    case Plane::XZ: return {std::cos(a / 2), std::sin(a / 2)};
    case Plane::YZ: return {std::cos(a / 2), Cx(0, -1) * std::sin(a / 2)};
    }
    throw MbqcError("bad plane");
}

std::array<Cx, 2> minusEffectBra(Plane plane, double a) {
    const double s = 1.0 / std::numbers::sqrt2;
    switch (plane) {
    case Plane::XY: return {s, -s * std::exp(Cx(0, -a))};
    case Plane::XZ: return {std::sin(a / 2), -std::cos(a / 2)};
    case Plane::YZ: return {std::sin(a / 2), Cx(0, 1) * std::cos(a / 2)};
    }
    throw MbqcError("bad plane");
}

// State over an ordered list of live qubits (first = most significant bit).
struct LiveState {
    std::vector<Vertex> axes;
    std::vector<Cx> amp;

    [[nodiscard]] std::size_t axisOf(Vertex v) const {
        const auto it = std::find(axes.begin(), axes.end(), v);
        if (it == axes.end()) {
            throw MbqcError("internal: vertex not live");
        }
        return static_cast<std::size_t>(it - axes.begin());
    }
    [[nodiscard]] std::size_t strideOf(std::size_t axis) const {
        return std::size_t{1} << (axes.size() - 1 - axis);
    }

    void pushQubit(Vertex v, const std::array<Cx, 2>& q) {
        std::vector<Cx> next(amp.size() * 2);
        for (std::size_t i = 0; i < amp.size(); ++i) {
            next[2 * i] = amp[i] * q[0];
            next[2 * i + 1] = amp[i] * q[1];
        }
        amp = std::move(next);
        axes.push_back(v); // least significant position
    }

    void applyCZ(Vertex a, Vertex b) {
        const std::size_t sa = strideOf(axisOf(a));
        const std::size_t sb = strideOf(axisOf(b));
        for (std::size_t i = 0; i < amp.size(); ++i) {
            if ((i & sa) && (i & sb)) {
                amp[i] = -amp[i];
            }
        }
    }

    void applySingle(Vertex v, const Mat2& m) {
        const std::size_t s = strideOf(axisOf(v));
        for (std::size_t i = 0; i < amp.size(); ++i) {
            if ((i & s) == 0) {
                const Cx a0 = amp[i];
                const Cx a1 = amp[i | s];
                amp[i] = m[0] * a0 + m[1] * a1;
                amp[i | s] = m[2] * a0 + m[3] * a1;
            }
        }
    }

    void contract(Vertex v, const std::array<Cx, 2>& bra) {
        const std::size_t axis = axisOf(v);
        const std::size_t s = strideOf(axis);
        std::vector<Cx> next(amp.size() / 2);
        std::size_t j = 0;
        for (std::size_t i = 0; i < amp.size(); ++i) {
            if ((i & s) == 0) {
                next[j++] = bra[0] * amp[i] + bra[1] * amp[i | s];
            }
        }
        amp = std::move(next);
        axes.erase(axes.begin() + static_cast<std::ptrdiff_t>(axis));
    }
};

Mat2 pauliX() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauliZ() { return {1.0, 0.0, 0.0, -1.0}; }

std::array<Cx, 2> inputColumnState(const MbqcDiagram& d, Vertex v, bool bit) {
    const auto c = d.inputCliffordOf(v).matrix();
    return bit ? std::array<Cx, 2>{c[1], c[3]} : std::array<Cx, 2>{c[0], c[2]};
}

void applyOutputCliffords(const MbqcDiagram& d, LiveState& st) {
    for (const Vertex o : d.graph.outputs()) {
        const auto c = d.outputCliffordOf(o);
        if (!c.isIdentity()) {
            st.applySingle(o, c.matrix());
        }
    }
}

DenseMap collectColumn(const MbqcDiagram& d, LiveState& st, DenseMap& m, std::size_t col) {
    const auto& outs = d.graph.outputs();
    // permute amplitudes from st.axes order into output-list order
    std::vector<std::size_t> strides(outs.size());
    for (std::size_t k = 0; k < outs.size(); ++k) {
        strides[k] = st.strideOf(st.axisOf(outs[k]));
    }
    for (std::size_t row = 0; row < m.rows; ++row) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < outs.size(); ++k) {
            if ((row >> (outs.size() - 1 - k)) & 1U) {
                idx |= strides[k];
            }
        }
        m.at(row, col) = st.amp[idx];
    }
    return m;
}

} // namespace

DenseMap evalDiagram(const MbqcDiagram& d) {
    const auto& g = d.graph;
    g.check();
    if (g.vertices().size() > 20) {
        throw MbqcError("evalDiagram size cap (20 vertices) exceeded");
    }
    const std::size_t nIn = g.inputs().size();
    const std::size_t nOut = g.outputs().size();
    DenseMap m(std::size_t{1} << nOut, std::size_t{1} << nIn);

    for (std::size_t col = 0; col < m.cols; ++col) {
        LiveState st;
        st.amp = {1.0};
        VertexSet placed;
        const auto plusState = std::array<Cx, 2>{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
        for (const Vertex v : g.vertices()) {
            if (g.isInput(v)) {
                const std::size_t pos =
                    static_cast<std::size_t>(std::find(g.inputs().begin(), g.inputs().end(), v) -
                                             g.inputs().begin());
                const bool bit = (col >> (nIn - 1 - pos)) & 1U;
                st.pushQubit(v, inputColumnState(d, v, bit));
            } else {
                st.pushQubit(v, plusState);
            }
            placed.insert(v);
            for (const Vertex w : g.neighbours(v)) {
                if (placed.count(w) > 0) {
                    st.applyCZ(v, w);
                }
            }
            // contract any measured vertex whose edges are all realized
            bool progress = true;
            while (progress) {
                progress = false;
                for (const Vertex u : VertexSet(st.axes.begin(), st.axes.end())) {
                    if (g.isOutput(u)) {
                        continue;
                    }
                    bool ready = true;
                    for (const Vertex w : g.neighbours(u)) {
                        if (placed.count(w) == 0) {
                            ready = false;
                            break;
                        }
                    }
                    if (ready) {
                        st.contract(u, effectBra(g.plane(u), g.angle(u).radians()));
                        progress = true;
                    }
                }
            }
        }
        applyOutputCliffords(d, st);
        collectColumn(d, st, m, col);
    }
    return m;
}

ScalarEquivalence equivalentUpToScalar(const DenseMap& a, const DenseMap& b, double tol) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw MbqcError("equivalentUpToScalar: dimension mismatch");
    }
    std::size_t k = 0;
    for (std::size_t i = 1; i < b.data.size(); ++i) {
        if (std::abs(b.data[i]) > std::abs(b.data[k])) {
            k = i;
        }
    }
    const double aMax = a.maxAbs();
    if (std::abs(b.data[k]) == 0.0) {
        if (aMax > 0.0) {
            throw MbqcError("equivalentUpToScalar: reference map is identically zero");
        }
        return {true, 1.0, 0.0};
    }
    const auto z = a.data[k] / b.data[k];
    double err = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        err = std::max(err, std::abs(a.data[i] - z * b.data[i]));
    }
    const double scale = std::max(aMax, 1e-300);
    return {err < tol * scale, z, err};
}

BranchReport runBranches(const MbqcDiagram& d, const GFlow& f) {
    const auto& g = d.graph;
    g.check();
    const VertexSet measured = g.measuredVertices();
    if (measured.size() > 12) {
        throw MbqcError("runBranches cap (12 measured vertices) exceeded");
    }
    for (const Vertex v : measured) {
        if (f.correction.count(v) == 0 || f.depth.count(v) == 0) {
            throw MbqcError("runBranches: flow does not cover vertex " + std::to_string(v));
        }
    }

    BranchReport report;
    report.order.assign(measured.begin(), measured.end());
    std::sort(report.order.begin(), report.order.end(), [&](Vertex x, Vertex y) {
        const int dx = f.depthOf(x);
        const int dy = f.depthOf(y);
        return dx != dy ? dx > dy : x < y;
    });

    const std::size_t nIn = g.inputs().size();
    const std::size_t nBranches = std::size_t{1} << measured.size();

    // base state per input column: all qubits placed, all CZs applied
    std::vector<LiveState> base(std::size_t{1} << nIn);
    const auto plusState = std::array<Cx, 2>{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
    for (std::size_t col = 0; col < base.size(); ++col) {
        auto& st = base[col];
        st.amp = {1.0};
        for (const Vertex v : g.vertices()) {
            if (g.isInput(v)) {
                const std::size_t pos =
                    static_cast<std::size_t>(std::find(g.inputs().begin(), g.inputs().end(), v) -
                                             g.inputs().begin());
                const bool bit = (col >> (nIn - 1 - pos)) & 1U;
                st.pushQubit(v, inputColumnState(d, v, bit));
            } else {
                st.pushQubit(v, plusState);
            }
        }
        for (const auto& [a, b] : g.edges()) {
            st.applyCZ(a, b);
        }
    }

    for (std::size_t s = 0; s < nBranches; ++s) {
        Branch br;
        br.outcomes.resize(report.order.size());
        DenseMap m(std::size_t{1} << g.outputs().size(), std::size_t{1} << nIn);
        for (std::size_t col = 0; col < base.size(); ++col) {
            LiveState st = base[col];
            for (std::size_t k = 0; k < report.order.size(); ++k) {
                const Vertex v = report.order[k];
                const int outcome = static_cast<int>((s >> k) & 1U);
                br.outcomes[k] = outcome;
                const double a = g.angle(v).radians();
                st.contract(v, outcome == 0 ? effectBra(g.plane(v), a)
                                            : minusEffectBra(g.plane(v), a));
                if (outcome == 1) {
                    // corrections land on qubits still alive; a flow violating
                    // (g1)/(g2) names already-measured ones, which are skipped
                    // (that is exactly how such a flow fails to be deterministic)
                    const auto alive = [&](Vertex w) {
                        return std::find(st.axes.begin(), st.axes.end(), w) != st.axes.end();
                    };
                    const auto& gv = f.correction.at(v);
                    for (const Vertex w : gv) {
                        if (w != v && alive(w)) {
                            st.applySingle(w, pauliX());
                        }
                    }
                    for (const Vertex w : oddNeighbourhood(g, gv)) {
                        if (w != v && alive(w)) {
                            st.applySingle(w, pauliZ());
                        }
                    }
                }
            }
            applyOutputCliffords(d, st);
            collectColumn(d, st, m, col);
        }
        br.map = std::move(m);
        report.branches.push_back(std::move(br));
    }

    // phase-align every branch against the all-zero branch
    const DenseMap& ref = report.branches.front().map;
    const double scale = std::max(ref.maxAbs(), 1e-300);
    std::size_t k = 0;
    for (std::size_t i = 1; i < ref.data.size(); ++i) {
        if (std::abs(ref.data[i]) > std::abs(ref.data[k])) {
            k = i;
        }
    }
    for (auto& br : report.branches) {
        auto z = br.map.data[k] / ref.data[k];
        if (std::abs(z) > 1e-12) {
            z /= std::abs(z); // unit-modulus alignment only
        } else {
            z = 1.0;
        }
        double err = 0.0;
        for (std::size_t i = 0; i < ref.data.size(); ++i) {
            err = std::max(err, std::abs(br.map.data[i] - z * ref.data[i]));
        }
        br.residual = err / scale;
        report.maxResidual = std::max(report.maxResidual, br.residual);
    }
    return report;
}

} // namespace mbqc
