// tree_canon.cpp

#include "antimagic/tree_canon.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "antimagic/error.hpp"

namespace antimagic {

namespace {

using Adjacency = std::vector<std::vector<int>>;

// Local adjacency over the component's vertices renumbered 0..size-1.
Adjacency local_adjacency(const Forest& g, const Component& comp) {
    std::map<int, int> local;
    for (const int v : comp.vertices) local.emplace(v, static_cast<int>(local.size()));
    Adjacency adj(comp.vertices.size());
    for (const int e : comp.edges) {
        const int u = local.at(g.edges()[e].u);
        const int v = local.at(g.edges()[e].v);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> centers(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    if (n <= 2) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) all[v] = v;
        return all;
    }
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1) layer.push_back(v);
    }
    int left = n;
    while (left > 2) {
        left -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (const int v : layer) {
            for (const int w : adj[v]) {
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_code(const Adjacency& adj, int v, int parent) {
    std::vector<std::string> children;
    for (const int w : adj[v]) {
        if (w != parent) children.push_back(rooted_code(adj, w, v));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ")";
    return out;
}

std::string code_of(const Adjacency& adj) {
    std::string best;
    for (const int c : centers(adj)) {
        std::string code = rooted_code(adj, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

Forest forest_from_adjacency(const Adjacency& adj) {
    std::vector<Edge> edges;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
        for (const int v : adj[u]) {
            if (u < v) edges.push_back({u, v});
        }
    }
    return Forest(static_cast<int>(adj.size()), std::move(edges));
}

}  // namespace

std::string tree_canonical_form(const Forest& g, const Component& comp) {
    return code_of(local_adjacency(g, comp));
}

std::string forest_canonical_form(const Forest& g) {
    std::vector<std::string> codes;
    for (const auto& comp : g.components()) codes.push_back(tree_canonical_form(g, comp));
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (std::size_t j = 0; j < codes.size(); ++j) out += (j ? "+" : "") + codes[j];
    return out;
}

std::vector<Forest> unlabeled_trees(int vertices) {
    if (vertices < 1) throw Error(ErrorKind::invalid_parameters, "a tree needs at least one vertex");
    if (vertices > 18) throw Error(ErrorKind::refuse_to_run, "tree enumeration is limited to 18 vertices");

    static std::mutex mutex;
    static std::vector<std::map<std::string, Adjacency>> by_size{{}, {{"()", Adjacency(1)}}};
    std::lock_guard lock(mutex);
    while (static_cast<int>(by_size.size()) <= vertices) {
        std::map<std::string, Adjacency> next;
        for (const auto& [code, adj] : by_size.back()) {
            const int n = static_cast<int>(adj.size());
            for (int v = 0; v < n; ++v) {
                Adjacency grown = adj;
                grown.emplace_back();
                grown[v].push_back(n);
                grown[n].push_back(v);
                std::string grown_code = code_of(grown);
                next.try_emplace(std::move(grown_code), std::move(grown));
            }
        }
        by_size.push_back(std::move(next));
    }
    std::vector<Forest> out;
    for (const auto& entry : by_size[vertices]) out.push_back(forest_from_adjacency(entry.second));
    return out;
}

std::string describe_tree(const Forest& g, const Component& comp) {
    const int n = static_cast<int>(comp.vertices.size());
    int max_degree = 0;
    std::vector<int> inner;
    for (const int v : comp.vertices) {
        max_degree = std::max(max_degree, g.degree(v));
        if (g.degree(v) >= 2) inner.push_back(v);
    }
    if (max_degree <= 2) return "P" + std::to_string(n);
    if (inner.size() == 1) return "S" + std::to_string(n - 1);
    if (inner.size() == 2) {
        const int a = g.degree(inner[0]) - 1;
        const int b = g.degree(inner[1]) - 1;
        return "S(" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) + ")";
    }
    return "T" + std::to_string(n) + ":" + tree_canonical_form(g, comp);
}

std::string describe_forest(const Forest& g) {
    std::vector<std::pair<int, std::string>> parts;
    for (const auto& comp : g.components()) {
        parts.emplace_back(-static_cast<int>(comp.vertices.size()), describe_tree(g, comp));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t j = 0; j < parts.size();) {
        std::size_t r = j;
        while (r < parts.size() && parts[r] == parts[j]) ++r;
        if (!out.empty()) out += "+";
        if (r - j > 1) out += std::to_string(r - j) + "*";
        out += parts[j].second;
        j = r;
    }
    return out;
}

}  // namespace antimagic
