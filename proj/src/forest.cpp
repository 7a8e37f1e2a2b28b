// forest.cpp

#include "antimagic/forest.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "antimagic/error.hpp"

namespace antimagic {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[std::max(x, y)] = std::min(x, y);
        return true;
    }
};

}  // namespace

Forest::Forest(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw Error(ErrorKind::parse_error, "negative vertex count");
    incidence_.assign(static_cast<std::size_t>(vertex_count_), {});
    DisjointSets sets(vertex_count_);
    for (int e = 0; e < edge_count(); ++e) {
        const auto [u, v] = edges_[e];
        if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
            throw Error(ErrorKind::parse_error,
                        "edge " + std::to_string(e) + " has an endpoint outside [0, n)");
        }
        if (u == v) throw Error(ErrorKind::parse_error, "loop at vertex " + std::to_string(u));
        if (!sets.unite(u, v)) {
            throw Error(ErrorKind::parse_error, "edge " + std::to_string(u) + "-" +
                                                    std::to_string(v) +
                                                    " closes a cycle (or repeats an edge)");
        }
        incidence_[u].push_back(e);
        incidence_[v].push_back(e);
    }

    std::vector<int> comp_of_root(static_cast<std::size_t>(vertex_count_), -1);
    for (int v = 0; v < vertex_count_; ++v) {
        const int root = sets.find(v);
        if (comp_of_root[root] < 0) {
            comp_of_root[root] = static_cast<int>(components_.size());
            components_.emplace_back();
        }
        components_[comp_of_root[root]].vertices.push_back(v);
    }
    for (int e = 0; e < edge_count(); ++e) {
        components_[comp_of_root[sets.find(edges_[e].u)]].edges.push_back(e);
    }

    for (const auto& [u, v] : edges_) {
        if (degree(u) >= 2 && degree(v) >= 2) ++internal_edges_;
    }
    p3_count_ = static_cast<int>(std::count_if(components_.begin(), components_.end(),
                                               [](const Component& c) { return c.vertices.size() == 3; }));
}

bool Forest::has_degenerate_component() const noexcept {
    return std::any_of(components_.begin(), components_.end(),
                       [](const Component& c) { return c.vertices.size() < 3; });
}

Forest operator+(const Forest& lhs, const Forest& rhs) {
    std::vector<Edge> edges(lhs.edges_.begin(), lhs.edges_.end());
    const int shift = lhs.vertex_count_;
    for (const auto& [u, v] : rhs.edges_) edges.push_back({u + shift, v + shift});
    return Forest(lhs.vertex_count_ + rhs.vertex_count_, std::move(edges));
}

Forest make_path(int vertices) {
    if (vertices < 1) throw Error(ErrorKind::invalid_parameters, "a path needs at least one vertex");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < vertices; ++v) edges.push_back({v, v + 1});
    return Forest(vertices, std::move(edges));
}

Forest make_star(int leaves) {
    if (leaves < 0) throw Error(ErrorKind::invalid_parameters, "negative star size");
    std::vector<Edge> edges;
    for (int j = 1; j <= leaves; ++j) edges.push_back({0, j});
    return Forest(leaves + 1, std::move(edges));
}

Forest make_double_star(int a, int b) {
    if (a < 1 || b < 1) throw Error(ErrorKind::invalid_parameters, "double star needs a, b >= 1");
    std::vector<Edge> edges{{0, 1}};
    for (int j = 0; j < a; ++j) edges.push_back({0, 2 + j});
    for (int j = 0; j < b; ++j) edges.push_back({1, 2 + a + j});
    return Forest(a + b + 2, std::move(edges));
}

Forest repeat(const Forest& g, int copies) {
    if (copies < 0) throw Error(ErrorKind::invalid_parameters, "negative repetition count");
    Forest out;
    for (int i = 0; i < copies; ++i) out = out + g;
    return out;
}

namespace {

class ForestParser {
public:
    explicit ForestParser(std::string_view text) : text_(text) {}

    Forest parse() {
        Forest out = term();
        skip_space();
        while (pos_ < text_.size()) {
            expect('+');
            out = out + term();
            skip_space();
        }
        return out;
    }

private:
    Forest term() {
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int copies = number();
            expect('*');
            return repeat(term(), copies);
        }
        if (pos_ >= text_.size()) fail("expected a term");
        const char head = text_[pos_++];
        switch (head) {
            case 'P': {
                const int n = number();
                if (n < 1) fail("P<n> needs n >= 1");
                return make_path(n);
            }
            case 'S': {
                skip_space();
                if (pos_ < text_.size() && text_[pos_] == '(') {
                    ++pos_;
                    const int a = number();
                    expect(',');
                    const int b = number();
                    expect(')');
                    if (a < 1 || b < 1) fail("S(a,b) needs a, b >= 1");
                    return make_double_star(a, b);
                }
                return make_star(number());
            }
            case 'C': {
                const int n = number();
                fail("C" + std::to_string(n) + " is a cycle, not a tree");
            }
            default:
                fail(std::string("unknown term '") + head + "'");
        }
    }

    int number() {
        skip_space();
        const std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_++] - '0');
            if (value > 1'000'000) fail("number too large");
        }
        if (pos_ == start) fail("expected a number");
        return static_cast<int>(value);
    }

    void expect(char ch) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::parse_error,
                    why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(std::string_view spec) { return ForestParser(spec).parse(); }

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    std::vector<char> seen(labels_.size() + 1, 0);
    for (const int l : labels_) {
        if (l < 1 || l > size()) {
            throw Error(ErrorKind::invalid_labeling,
                        "label " + std::to_string(l) + " outside [1, " + std::to_string(size()) + "]");
        }
        if (seen[l]) throw Error(ErrorKind::invalid_labeling, "label " + std::to_string(l) + " used twice");
        seen[l] = 1;
    }
}

std::vector<std::int64_t> vertex_sums(const Forest& g, const Labeling& f) {
    if (f.size() != g.edge_count()) {
        throw Error(ErrorKind::invalid_labeling, "labeling has " + std::to_string(f.size()) +
                                                     " labels for " + std::to_string(g.edge_count()) +
                                                     " edges");
    }
    std::vector<std::int64_t> sums(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        sums[g.edges()[e].u] += f[e];
        sums[g.edges()[e].v] += f[e];
    }
    return sums;
}

DoubleStarInstance::DoubleStarInstance(int a, int b, int c) : a_(a), b_(b), c_(c) {
    if (a < 1 || b < a || c < 0) {
        throw Error(ErrorKind::invalid_parameters, "need 1 <= a <= b and c >= 0 (got a=" +
                                                       std::to_string(a) + ", b=" + std::to_string(b) +
                                                       ", c=" + std::to_string(c) + ")");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(k()));
    for (int i = 0; i < c; ++i) {
        edges.push_back({3 * i, 3 * i + 1});
        edges.push_back({3 * i, 3 * i + 2});
    }
    const int ua = 3 * c;
    const int ub = 3 * c + 1;
    edges.push_back({ua, ub});
    for (int j = 0; j < a; ++j) edges.push_back({ua, ub + 1 + j});
    for (int j = 0; j < b; ++j) edges.push_back({ub, ub + 1 + a + j});
    forest_ = Forest(3 * c + a + b + 2, std::move(edges));
}

int DoubleStarInstance::center(int i) const {
    if (i < 1 || i > c_ + 2) throw Error(ErrorKind::invalid_parameters, "center index out of range");
    return i <= c_ ? 3 * (i - 1) : 3 * c_ + (i - c_ - 1);
}

int DoubleStarInstance::p3_edge(int i, int which) const {
    if (i < 1 || i > c_ || which < 0 || which > 1) {
        throw Error(ErrorKind::invalid_parameters, "P3 edge index out of range");
    }
    return 2 * (i - 1) + which;
}

DoubleStarInstance build_instance(int a, int b, int c) { return DoubleStarInstance(a, b, c); }

void validate_partition(const DoubleStarInstance& inst, const LabelPartition& part) {
    auto bad = [](const std::string& why) { throw Error(ErrorKind::malformed_partition, why); };
    if (static_cast<int>(part.p3.size()) != inst.c()) bad("expected " + std::to_string(inst.c()) + " P3 groups");
    for (const auto& g : part.p3) {
        if (g.size() != 2) bad("every P3 group needs exactly two labels");
    }
    if (part.internal.size() != 1) bad("the internal group needs exactly one label");
    if (static_cast<int>(part.a_side.size()) != inst.a()) bad("E_A needs " + std::to_string(inst.a()) + " labels");
    if (static_cast<int>(part.b_side.size()) != inst.b()) bad("E_B needs " + std::to_string(inst.b()) + " labels");

    std::vector<char> seen(static_cast<std::size_t>(inst.k()) + 1, 0);
    auto take = [&](const std::vector<int>& group) {
        for (const int l : group) {
            if (l < 1 || l > inst.k()) bad("label " + std::to_string(l) + " outside [1, k]");
            if (seen[l]) bad("label " + std::to_string(l) + " appears in two groups");
            seen[l] = 1;
        }
    };
    for (const auto& g : part.p3) take(g);
    take(part.internal);
    take(part.a_side);
    take(part.b_side);
}

Labeling partition_to_labeling(const DoubleStarInstance& inst, const LabelPartition& part) {
    validate_partition(inst, part);
    std::vector<int> labels(static_cast<std::size_t>(inst.k()));
    auto place = [&](std::vector<int> group, int first_edge) {
        std::sort(group.begin(), group.end());
        for (std::size_t j = 0; j < group.size(); ++j) labels[first_edge + j] = group[j];
    };
    for (int i = 1; i <= inst.c(); ++i) place(part.p3[i - 1], inst.p3_edge(i, 0));
    place(part.internal, inst.internal_edge());
    place(part.a_side, inst.a_edge(0));
    place(part.b_side, inst.b_edge(0));
    return Labeling(std::move(labels));
}

LabelPartition labeling_to_partition(const DoubleStarInstance& inst, const Labeling& f) {
    if (f.size() != inst.k()) throw Error(ErrorKind::invalid_labeling, "labeling size differs from k");
    LabelPartition part;
    auto slice = [&](int first, int count) {
        std::vector<int> out;
        for (int e = first; e < first + count; ++e) out.push_back(f[e]);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (int i = 1; i <= inst.c(); ++i) part.p3.push_back(slice(inst.p3_edge(i, 0), 2));
    part.internal = slice(inst.internal_edge(), 1);
    part.a_side = slice(inst.a_edge(0), inst.a());
    part.b_side = slice(inst.b_edge(0), inst.b());
    return part;
}

}  // namespace antimagic
