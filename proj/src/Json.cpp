#include "mbqc/Json.hpp"

#include <json.hpp>

#include <sstream>

namespace mbqc {

using nlohmann::json;

namespace {

json cliffordMapToJson(const std::map<Vertex, LocalClifford>& m) {
    json obj = json::object();
    for (const auto& [v, c] : m) {
        if (c.isIdentity()) {
            continue;
        }
        const auto t = c.zxzTriple();
        obj[std::to_string(v)] = {t[0], t[1], t[2]};
    }
    return obj;
}

std::map<Vertex, LocalClifford> cliffordMapFromJson(const json& obj) {
    std::map<Vertex, LocalClifford> m;
    for (const auto& [key, val] : obj.items()) {
        if (!val.is_array() || val.size() != 3) {
            throw MbqcError("clifford entry for vertex " + key + " must be a [a,b,c] triple");
        }
        const auto c = LocalClifford::fromTriple(val[0].get<int>(), val[1].get<int>(),
                                                 val[2].get<int>());
        if (!c.isIdentity()) {
            m[static_cast<Vertex>(std::stoul(key))] = c;
        }
    }
    return m;
}

} // namespace

std::string diagramToJson(const MbqcDiagram& d) {
    const auto& g = d.graph;
    json root;
    json vertices = json::array();
    for (const Vertex v : g.vertices()) {
        json entry;
        entry["id"] = v;
        if (!g.isOutput(v)) {
            entry["plane"] = planeName(g.plane(v));
            entry["angle"] = g.angle(v).toString();
        }
        vertices.push_back(std::move(entry));
    }
    root["vertices"] = std::move(vertices);
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    root["edges"] = std::move(edges);
    root["inputs"] = g.inputs();
    root["outputs"] = g.outputs();
    root["input_cliffords"] = cliffordMapToJson(d.inputClifford);
    root["output_cliffords"] = cliffordMapToJson(d.outputClifford);
    return root.dump();
}

MbqcDiagram diagramFromJson(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MbqcError(std::string("graph JSON parse error: ") + e.what());
    }
    try {
        MbqcDiagram d;
        auto& g = d.graph;
        std::map<Vertex, std::pair<std::optional<Plane>, std::optional<Angle>>> labels;
        Vertex maxId = 0;
        VertexSet ids;
        for (const auto& entry : root.at("vertices")) {
            const auto v = entry.at("id").get<Vertex>();
            if (!ids.insert(v).second) {
                throw MbqcError("duplicate vertex id " + std::to_string(v));
            }
            maxId = std::max(maxId, v);
            std::optional<Plane> p;
            std::optional<Angle> a;
            if (entry.contains("plane")) {
                p = planeFromName(entry.at("plane").get<std::string>());
            }
            if (entry.contains("angle")) {
                if (!entry.at("angle").is_string()) {
                    throw MbqcError("angle of vertex " + std::to_string(v) +
                                    " must be a \"num/den\" string (floating angles are rejected)");
                }
                a = Angle::parse(entry.at("angle").get<std::string>());
            }
            labels[v] = {p, a};
        }
        // materialize ids in order; addVertex assigns sequential ids, so place
        // the listed ids via a scratch graph instead
        for (Vertex v = 0; v <= maxId; ++v) {
            const Vertex got = g.addVertex();
            if (got != v) {
                throw MbqcError("internal id assignment mismatch");
            }
        }
        for (Vertex v = 0; v <= maxId; ++v) {
            if (ids.count(v) == 0) {
                g.removeVertex(v);
            }
        }
        for (const auto& arr : root.at("edges")) {
            if (!arr.is_array() || arr.size() != 2) {
                throw MbqcError("edge entries must be [a,b] pairs");
            }
            g.addEdge(arr[0].get<Vertex>(), arr[1].get<Vertex>());
        }
        for (const auto& v : root.at("inputs")) {
            g.inputs().push_back(v.get<Vertex>());
        }
        for (const auto& v : root.at("outputs")) {
            g.outputs().push_back(v.get<Vertex>());
        }
        for (const auto& [v, label] : labels) {
            const auto& [p, a] = label;
            if (g.isOutput(v)) {
                if (p || a) {
                    throw MbqcError("output vertex " + std::to_string(v) +
                                    " must not carry a measurement");
                }
                continue;
            }
            if (!p || !a) {
                throw MbqcError("non-output vertex " + std::to_string(v) +
                                " needs both plane and angle");
            }
            g.setMeasurement(v, *p, *a);
        }
        if (root.contains("input_cliffords")) {
            d.inputClifford = cliffordMapFromJson(root.at("input_cliffords"));
        }
        if (root.contains("output_cliffords")) {
            d.outputClifford = cliffordMapFromJson(root.at("output_cliffords"));
        }
        for (const auto& [v, c] : d.inputClifford) {
            if (!g.isInput(v)) {
                throw MbqcError("input clifford on non-input vertex " + std::to_string(v));
            }
        }
        for (const auto& [v, c] : d.outputClifford) {
            if (!g.isOutput(v)) {
                throw MbqcError("output clifford on non-output vertex " + std::to_string(v));
            }
        }
        g.check();
        return d;
    } catch (const json::exception& e) {
        throw MbqcError(std::string("graph JSON structure error: ") + e.what());
    }
}

std::string gflowToJson(const GFlow& f) {
    json root;
    json corr = json::object();
    for (const auto& [v, set] : f.correction) {
        corr[std::to_string(v)] = set;
    }
    json depth = json::object();
    for (const auto& [v, d] : f.depth) {
        depth[std::to_string(v)] = d;
    }
    root["correction"] = std::move(corr);
    root["depth"] = std::move(depth);
    return root.dump();
}

GFlow gflowFromJson(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MbqcError(std::string("gflow JSON parse error: ") + e.what());
    }
    try {
        GFlow f;
        for (const auto& [key, val] : root.at("correction").items()) {
            VertexSet set;
            for (const auto& w : val) {
                set.insert(w.get<Vertex>());
            }
            f.correction[static_cast<Vertex>(std::stoul(key))] = std::move(set);
        }
        for (const auto& [key, val] : root.at("depth").items()) {
            f.depth[static_cast<Vertex>(std::stoul(key))] = val.get<int>();
        }
        return f;
    } catch (const json::exception& e) {
        throw MbqcError(std::string("gflow JSON structure error: ") + e.what());
    }
}

std::string diagramToDot(const MbqcDiagram& d) {
    const auto& g = d.graph;
    std::ostringstream out;
    out << "graph mbqc {\n";
    for (const Vertex v : g.vertices()) {
        out << "  v" << v << " [label=\"" << v;
        if (!g.isOutput(v)) {
            out << "\\n" << planeName(g.plane(v)) << " " << g.angle(v).toString();
        }
        out << "\"";
        if (g.isInput(v)) {
            out << " shape=box";
        } else if (g.isOutput(v)) {
            out << " shape=doublecircle";
        }
        out << "];\n";
    }
    for (const auto& [a, b] : g.edges()) {
        out << "  v" << a << " -- v" << b << " [style=dashed];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace mbqc
