#include "mbqc/Circuit.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace mbqc {

void Circuit::check() const {
    for (const auto& g : gates) {
        if (g.q0 >= width || (g.twoQubit() && g.q1 >= width)) {
            throw MbqcError("gate references qubit outside circuit width");
        }
        if (g.twoQubit() && g.q0 == g.q1) {
            throw MbqcError("two-qubit gate on a single qubit");
        }
    }
}

namespace {

std::size_t parseQubit(const std::string& tok, std::size_t lineNo) {
    if (tok.size() < 2 || tok[0] != 'q') {
        throw MbqcError("line " + std::to_string(lineNo) + ": expected qubit 'qN', got '" + tok + "'");
    }
    try {
        return std::stoul(tok.substr(1));
    } catch (const std::logic_error&) {
        throw MbqcError("line " + std::to_string(lineNo) + ": bad qubit index '" + tok + "'");
    }
}

} // namespace

Circuit parseCircuit(const std::string& text) {
    Circuit c;
    std::size_t declaredWidth = 0;
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) {
            continue;
        }
        std::vector<std::string> args;
        std::string tok;
        while (ls >> tok) {
            args.push_back(tok);
        }
        auto wantArgs = [&](std::size_t n) {
            if (args.size() != n) {
                throw MbqcError("line " + std::to_string(lineNo) + ": '" + op + "' expects " +
                                std::to_string(n) + " operand(s)");
            }
        };
        if (op == "qubits") {
            wantArgs(1);
            try {
                declaredWidth = std::stoul(args[0]);
            } catch (const std::logic_error&) {
                throw MbqcError("line " + std::to_string(lineNo) + ": bad qubit count");
            }
            continue;
        }
        if (op == "h") {
            wantArgs(1);
            c.gates.push_back(Gate::h(parseQubit(args[0], lineNo)));
        } else if (op == "cz" || op == "cnot" || op == "swap") {
            wantArgs(2);
            const auto a = parseQubit(args[0], lineNo);
            const auto b = parseQubit(args[1], lineNo);
            if (a == b) {
                throw MbqcError("line " + std::to_string(lineNo) + ": two-qubit gate needs distinct qubits");
            }
            c.gates.push_back(op == "cz" ? Gate::cz(a, b)
                              : op == "cnot" ? Gate::cnot(a, b)
                                             : Gate::swap(a, b));
        } else if (op.rfind("rz(", 0) == 0 || op.rfind("rx(", 0) == 0) {
            wantArgs(1);
            if (op.back() != ')') {
                throw MbqcError("line " + std::to_string(lineNo) + ": malformed angle in '" + op + "'");
            }
            Angle a;
            try {
                a = Angle::parse(op.substr(3, op.size() - 4));
            } catch (const MbqcError& e) {
                throw MbqcError("line " + std::to_string(lineNo) + ": " + e.what());
            }
            const auto q = parseQubit(args[0], lineNo);
            c.gates.push_back(op[1] == 'z' ? Gate::rz(a, q) : Gate::rx(a, q));
        } else {
            throw MbqcError("line " + std::to_string(lineNo) + ": unknown gate '" + op + "'");
        }
    }
    std::size_t maxQ = 0;
    bool any = false;
    for (const auto& g : c.gates) {
        maxQ = std::max({maxQ, g.q0, g.twoQubit() ? g.q1 : 0});
        any = true;
    }
    c.width = std::max(declaredWidth, any ? maxQ + 1 : 0);
    c.check();
    return c;
}

std::string printCircuit(const Circuit& c) {
    std::ostringstream out;
    std::size_t maxQ = 0;
    bool any = false;
    for (const auto& g : c.gates) {
        maxQ = std::max({maxQ, g.q0, g.twoQubit() ? g.q1 : 0});
        any = true;
    }
    if (c.width > (any ? maxQ + 1 : 0)) {
        out << "qubits " << c.width << "\n";
    }
    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::H: out << "h q" << g.q0; break;
        case GateKind::CZ: out << "cz q" << g.q0 << " q" << g.q1; break;
        case GateKind::CNOT: out << "cnot q" << g.q0 << " q" << g.q1; break;
        case GateKind::SWAP: out << "swap q" << g.q0 << " q" << g.q1; break;
        case GateKind::ZPhase: out << "rz(" << g.angle.toString() << ") q" << g.q0; break;
        case GateKind::XPhase: out << "rx(" << g.angle.toString() << ") q" << g.q0; break;
        }
        out << "\n";
    }
    return out.str();
}

DenseMap evalCircuit(const Circuit& c) {
    c.check();
    if (c.width > 12) {
        throw MbqcError("evalCircuit width cap (12) exceeded");
    }
    const std::size_t dim = std::size_t{1} << c.width;
    DenseMap u(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        u.at(i, i) = 1.0;
    }
    const auto bit = [&](std::size_t x, std::size_t q) {
        return (x >> (c.width - 1 - q)) & 1U;
    };
    for (const auto& g : c.gates) {
        DenseMap next(dim, dim);
        for (std::size_t col = 0; col < dim; ++col) {
            for (std::size_t x = 0; x < dim; ++x) {
                const auto amp = u.at(x, col);
                if (amp == std::complex<double>(0.0)) {
                    continue;
                }
                switch (g.kind) {
                case GateKind::H: {
                    const double s = 1.0 / std::numbers::sqrt2;
                    const std::size_t mask = std::size_t{1} << (c.width - 1 - g.q0);
                    next.at(x & ~mask, col) += s * amp;
                    next.at(x | mask, col) += (bit(x, g.q0) ? -s : s) * amp;
                    break;
                }
                case GateKind::ZPhase:
                    next.at(x, col) += (bit(x, g.q0) ? std::exp(std::complex<double>(0, g.angle.radians())) : 1.0) * amp;
                    break;
                case GateKind::XPhase: {
                    const double half = g.angle.radians() / 2;
                    const auto ph = std::exp(std::complex<double>(0, half));
                    const std::complex<double> cc = ph * std::cos(half);
                    const std::complex<double> ss = ph * std::complex<double>(0, -1) * std::sin(half);
                    const std::size_t mask = std::size_t{1} << (c.width - 1 - g.q0);
                    next.at(x, col) += cc * amp;
                    next.at(x ^ mask, col) += ss * amp;
                    break;
                }
                case GateKind::CZ:
                    next.at(x, col) += (bit(x, g.q0) && bit(x, g.q1) ? -1.0 : 1.0) * amp;
                    break;
                case GateKind::CNOT: {
                    const std::size_t y =
                        bit(x, g.q0) ? x ^ (std::size_t{1} << (c.width - 1 - g.q1)) : x;
                    next.at(y, col) += amp;
                    break;
                }
                case GateKind::SWAP: {
                    const auto b0 = bit(x, g.q0);
                    const auto b1 = bit(x, g.q1);
                    std::size_t y = x;
                    if (b0 != b1) {
                        y ^= (std::size_t{1} << (c.width - 1 - g.q0)) |
                             (std::size_t{1} << (c.width - 1 - g.q1));
                    }
                    next.at(y, col) += amp;
                    break;
                }
                }
            }
        }
        u = std::move(next);
    }
    return u;
}

PatternWithFlow circuitToPattern(const Circuit& c) {
    c.check();
    LabelledOpenGraph g;
    std::vector<Vertex> frontier(c.width);
    std::vector<Angle> acc(c.width);
    for (std::size_t q = 0; q < c.width; ++q) {
        frontier[q] = g.addVertex();
        g.inputs().push_back(frontier[q]);
    }
    const auto finalize = [&](std::size_t q) {
        const Vertex v = frontier[q];
        g.setMeasurement(v, Plane::XY, -acc[q]);
        const Vertex u = g.addVertex();
        g.addEdge(v, u);
        frontier[q] = u;
        acc[q] = Angle::zero();
    };
    const std::function<void(const Gate&)> apply = [&](const Gate& gate) {
        switch (gate.kind) {
        case GateKind::ZPhase:
            acc[gate.q0] = acc[gate.q0] + gate.angle;
            break;
        case GateKind::H:
            finalize(gate.q0);
            break;
        case GateKind::CZ:
            g.toggleEdge(frontier[gate.q0], frontier[gate.q1]);
            break;
        case GateKind::CNOT:
            apply(Gate::h(gate.q1));
            apply(Gate::cz(gate.q0, gate.q1));
            apply(Gate::h(gate.q1));
            break;
        case GateKind::XPhase:
            apply(Gate::h(gate.q0));
            apply(Gate::rz(gate.angle, gate.q0));
            apply(Gate::h(gate.q0));
            break;
        case GateKind::SWAP:
            apply(Gate::cnot(gate.q0, gate.q1));
            apply(Gate::cnot(gate.q1, gate.q0));
            apply(Gate::cnot(gate.q0, gate.q1));
            break;
        }
    };
    for (const auto& gate : c.gates) {
        apply(gate);
    }
    for (std::size_t q = 0; q < c.width; ++q) {
        if (!acc[q].isZero()) {
            finalize(q);
            finalize(q);
        }
    }
    for (std::size_t q = 0; q < c.width; ++q) {
        g.outputs().push_back(frontier[q]);
    }
    g.check();
    auto flow = findGFlow(g);
    if (!flow) {
        throw MbqcError("unreachable: circuit pattern has causal flow");
    }
    return {MbqcDiagram{std::move(g), {}, {}}, std::move(*flow)};
}

} // namespace mbqc
