// io.cpp

#include "antimagic/io.hpp"

#include <fstream>
#include <sstream>

#include "antimagic/error.hpp"

namespace antimagic {

using nlohmann::json;

json labeling_to_json(const Forest& g, const Labeling& f) {
    if (f.size() != g.edge_count()) throw Error(ErrorKind::invalid_labeling, "labeling size differs from edge count");
    json edges = json::array();
    json labels = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        edges.push_back({g.edges()[e].u, g.edges()[e].v});
        labels.push_back(f[e]);
    }
    return json{{"edges", std::move(edges)}, {"labels", std::move(labels)}};
}

std::pair<Forest, Labeling> labeling_from_json(const json& doc) {
    const json& body = (doc.is_object() && doc.contains("labeling")) ? doc.at("labeling") : doc;
    if (!body.is_object() || !body.contains("edges") || !body.contains("labels")) {
        throw Error(ErrorKind::parse_error, "labeling JSON needs \"edges\" and \"labels\"");
    }
    const json& je = body.at("edges");
    const json& jl = body.at("labels");
    if (!je.is_array() || !jl.is_array() || je.size() != jl.size()) {
        throw Error(ErrorKind::parse_error, "\"edges\" and \"labels\" must be arrays of equal length");
    }
    std::vector<Edge> edges;
    std::vector<int> labels;
    int n = 0;
    try {
        for (const auto& pair : je) {
            if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::parse_error, "edge must be [u,v]");
            const Edge e{pair[0].get<int>(), pair[1].get<int>()};
            if (e.u < 0 || e.v < 0) throw Error(ErrorKind::parse_error, "negative vertex id");
            n = std::max({n, e.u + 1, e.v + 1});
            edges.push_back(e);
        }
        for (const auto& l : jl) labels.push_back(l.get<int>());
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::parse_error, ex.what());
    }
    Forest g(n, std::move(edges));
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) throw Error(ErrorKind::parse_error, "vertex " + std::to_string(v) + " has no edges");
    }
    return {std::move(g), Labeling(std::move(labels))};
}

std::string to_dot(const Forest& g, const Labeling& f, const std::string& name) {
    const auto sums = vertex_sums(g, f);
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << sums[v] << "\"];\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edges()[e].u << " -- " << g.edges()[e].v << " [label=\"" << f[e] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io_error, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::parse_error, path + ": " + ex.what());
    }
}

}  // namespace antimagic
