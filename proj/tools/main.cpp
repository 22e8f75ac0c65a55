#include "mbqc/Circuit.hpp"
#include "mbqc/Extract.hpp"
#include "mbqc/Json.hpp"
#include "mbqc/Oracle.hpp"
#include "mbqc/Rewrite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace mbqc;

constexpr int kExitNotFound = 1;
constexpr int kExitError = 2;

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MbqcError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw MbqcError("cannot write '" + path + "'");
    }
    out << content;
}

enum class Kind { Graph, Circuit };

Kind inferKind(const std::string& path, const std::string& overrideKind) {
    if (overrideKind == "graph") {
        return Kind::Graph;
    }
    if (overrideKind == "circuit") {
        return Kind::Circuit;
    }
    if (!overrideKind.empty()) {
        throw MbqcError("unknown --kind '" + overrideKind + "' (graph|circuit)");
    }
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        return Kind::Graph;
    }
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".txt") {
        return Kind::Circuit;
    }
    throw MbqcError("cannot infer artifact kind of '" + path + "'; pass --kind");
}

DenseMap loadDenseMap(const std::string& path, Kind kind) {
    const auto text = readFile(path);
    if (kind == Kind::Graph) {
        return evalDiagram(diagramFromJson(text));
    }
    return evalCircuit(parseCircuit(text));
}

GFlow requireGFlow(const MbqcDiagram& d) {
    auto flow = findGFlow(d.graph);
    if (!flow) {
        throw MbqcError("diagram has no gflow");
    }
    return std::move(*flow);
}

int runFindGFlow(const std::string& path, bool) {
    const auto d = diagramFromJson(readFile(path));
    const auto flow = findGFlow(d.graph);
    if (!flow) {
        std::cout << "no gflow\n";
        return kExitNotFound;
    }
    std::cout << gflowToJson(*flow) << "\n";
    return 0;
}

int runCheckGFlow(const std::string& graphPath, const std::string& flowPath, bool asJson) {
    const auto d = diagramFromJson(readFile(graphPath));
    const auto f = gflowFromJson(readFile(flowPath));
    const auto check = verifyGFlow(d.graph, f);
    if (asJson) {
        std::cout << "{\"ok\":" << (check.ok ? "true" : "false") << ",\"violations\":[";
        for (std::size_t i = 0; i < check.violations.size(); ++i) {
            const auto& v = check.violations[i];
            std::cout << (i ? "," : "") << "{\"vertex\":" << v.vertex << ",\"condition\":\""
                      << v.condition << "\",\"detail\":\"" << v.detail << "\"}";
        }
        std::cout << "]}\n";
    } else if (check.ok) {
        std::cout << "gflow verifies\n";
    } else {
        for (const auto& v : check.violations) {
            std::cout << "violation at vertex " << v.vertex << " [" << v.condition
                      << "]: " << v.detail << "\n";
        }
    }
    return check.ok ? 0 : kExitNotFound;
}

int runSimplify(const std::string& inPath, const std::string& target,
                const std::string& outPath, const std::string& tracePath,
                const std::string& dotPath) {
    const auto d = diagramFromJson(readFile(inPath));
    const auto flow = requireGFlow(d);
    MbqcDiagram result;
    RewriteTrace trace;
    if (target == "mbqc") {
        auto r = toMbqcForm(d, flow, &trace);
        result = std::move(r.diagram);
    } else if (target == "phase-gadget") {
        auto r = toPhaseGadgetForm(d, flow, &trace);
        result = std::move(r.diagram);
    } else if (target == "reduced") {
        auto r = reduceDiagram(d, flow);
        trace = std::move(r.trace);
        result = std::move(r.diagram);
    } else {
        throw MbqcError("unknown --to target '" + target + "' (mbqc|phase-gadget|reduced)");
    }
    writeFile(outPath, diagramToJson(result) + "\n");
    if (!tracePath.empty()) {
        writeFile(tracePath, traceToJsonLines(trace));
    }
    if (!dotPath.empty()) {
        writeFile(dotPath, diagramToDot(result));
    }
    return 0;
}

int runExtract(const std::string& inPath, const std::string& outPath) {
    const auto d = diagramFromJson(readFile(inPath));
    const auto flow = findGFlow(d.graph);
    if (!flow) {
        std::cout << "no gflow\n";
        return kExitNotFound;
    }
    const auto circuit = extractCircuit(d, *flow);
    writeFile(outPath, printCircuit(circuit));
    return 0;
}

int runC2p(const std::string& inPath, const std::string& outPath) {
    const auto circuit = parseCircuit(readFile(inPath));
    const auto pattern = circuitToPattern(circuit);
    writeFile(outPath, diagramToJson(pattern.diagram) + "\n");
    return 0;
}

int runVerify(const std::string& pathA, const std::string& pathB, double tol,
              const std::string& kinds, bool asJson) {
    std::string kindA;
    std::string kindB;
    if (!kinds.empty()) {
        const auto comma = kinds.find(',');
        if (comma == std::string::npos) {
            kindA = kindB = kinds;
        } else {
            kindA = kinds.substr(0, comma);
            kindB = kinds.substr(comma + 1);
        }
    }
    const auto a = loadDenseMap(pathA, inferKind(pathA, kindA));
    const auto b = loadDenseMap(pathB, inferKind(pathB, kindB));
    const auto eq = equivalentUpToScalar(a, b, tol);
    if (asJson) {
        std::cout << "{\"equivalent\":" << (eq.equivalent ? "true" : "false") << ",\"scalar\":["
                  << eq.scalar.real() << "," << eq.scalar.imag() << "],\"max_error\":"
                  << eq.maxError << "}\n";
    } else if (eq.equivalent) {
        std::cout << "equivalent up to scalar (" << eq.scalar.real() << (eq.scalar.imag() < 0 ? "-" : "+")
                  << std::abs(eq.scalar.imag()) << "i), max error " << eq.maxError << "\n";
    } else {
        std::cout << "NOT equivalent (max error " << eq.maxError << ")\n";
    }
    return eq.equivalent ? 0 : kExitNotFound;
}

int runSim(const std::string& inPath, bool branches, bool asJson) {
    const auto d = diagramFromJson(readFile(inPath));
    if (!branches) {
        const auto m = evalDiagram(d);
        std::cout << "dense map " << m.rows << "x" << m.cols << ", rank " << m.rank()
                  << ", max |entry| " << m.maxAbs() << "\n";
        return 0;
    }
    const auto flow = findGFlow(d.graph);
    if (!flow) {
        std::cout << "no gflow\n";
        return kExitNotFound;
    }
    const auto report = runBranches(d, *flow);
    if (asJson) {
        std::cout << "{\"branches\":" << report.branches.size() << ",\"max_residual\":"
                  << report.maxResidual << "}\n";
    } else {
        std::cout << report.branches.size() << " branches, max phase-aligned residual "
                  << report.maxResidual << "\n";
        for (const auto& br : report.branches) {
            std::cout << "  ";
            for (const int b : br.outcomes) {
                std::cout << b;
            }
            std::cout << " residual " << br.residual << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"labelled open graphs, gflow, pattern simplification and circuit extraction"};
    app.require_subcommand(1);

    std::string inPath;
    std::string auxPath;
    std::string outPath;
    std::string tracePath;
    std::string dotPath;
    std::string target = "reduced";
    std::string kinds;
    double tol = 1e-8;
    bool branches = false;
    bool asJson = false;

    auto* findCmd = app.add_subcommand("find-gflow", "find a maximally delayed gflow");
    findCmd->add_option("graph", inPath)->required();
    findCmd->add_flag("--json", asJson);

    auto* checkCmd = app.add_subcommand("check-gflow", "verify a gflow against a graph");
    checkCmd->add_option("graph", inPath)->required();
    checkCmd->add_option("gflow", auxPath)->required();
    checkCmd->add_flag("--json", asJson);

    auto* simplifyCmd = app.add_subcommand("simplify", "rewrite a pattern into a target form");
    simplifyCmd->add_option("graph", inPath)->required();
    simplifyCmd->add_option("--to", target, "mbqc|phase-gadget|reduced");
    simplifyCmd->add_option("-o,--output", outPath)->required();
    simplifyCmd->add_option("--trace", tracePath);
    simplifyCmd->add_option("--dot", dotPath);

    auto* extractCmd = app.add_subcommand("extract", "extract an ancilla-free circuit");
    extractCmd->add_option("graph", inPath)->required();
    extractCmd->add_option("-o,--output", outPath)->required();

    auto* c2pCmd = app.add_subcommand("c2p", "convert a circuit into a measurement pattern");
    c2pCmd->add_option("circuit", inPath)->required();
    c2pCmd->add_option("-o,--output", outPath)->required();

    auto* verifyCmd = app.add_subcommand("verify", "compare two artifacts up to a scalar");
    verifyCmd->add_option("a", inPath)->required();
    verifyCmd->add_option("b", auxPath)->required();
    verifyCmd->add_option("--tol", tol);
    verifyCmd->add_option("--kind", kinds, "graph|circuit, or a,b pair like graph,circuit");
    verifyCmd->add_flag("--json", asJson);

    auto* simCmd = app.add_subcommand("sim", "dense simulation / branch report");
    simCmd->add_option("graph", inPath)->required();
    simCmd->add_flag("--branches", branches);
    simCmd->add_flag("--json", asJson);

    CLI11_PARSE(app, argc, argv);

    try {
        if (findCmd->parsed()) {
            return runFindGFlow(inPath, asJson);
        }
        if (checkCmd->parsed()) {
            return runCheckGFlow(inPath, auxPath, asJson);
        }
        if (simplifyCmd->parsed()) {
            return runSimplify(inPath, target, outPath, tracePath, dotPath);
        }
        if (extractCmd->parsed()) {
            return runExtract(inPath, outPath);
        }
        if (c2pCmd->parsed()) {
            return runC2p(inPath, outPath);
        }
        if (verifyCmd->parsed()) {
            return runVerify(inPath, auxPath, tol, kinds, asJson);
        }
        if (simCmd->parsed()) {
            return runSim(inPath, branches, asJson);
        }
    } catch (const MbqcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
