// antimagic/forest.hpp - forests, the canonical S(a,b)+cP3 instance, labelings
//
// Vertices are dense integer ids [0, n). Edges are indexed [0, m) in the order
// they were supplied; a Labeling is a vector parallel to that edge order.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antimagic {

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Component {
    std::vector<int> vertices;  // ascending
    std::vector<int> edges;     // indices into Forest::edges(), ascending
};

class Forest {
public:
    Forest() = default;

    // Throws parse_error when the edges contain a cycle, a loop, a repeated
    // edge or an endpoint outside [0, vertex_count).
    Forest(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    // Edges whose endpoints both have degree >= 2.
    int internal_edge_count() const noexcept { return internal_edges_; }
    // Components isomorphic to P3.
    int p3_count() const noexcept { return p3_count_; }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Component> components() const noexcept { return components_; }
    std::span<const int> incident_edges(int vertex) const { return incidence_.at(vertex); }
    int degree(int vertex) const { return static_cast<int>(incidence_.at(vertex).size()); }
    bool is_leaf(int vertex) const { return degree(vertex) == 1; }

    // True when some component is an isolated vertex or a single edge; such
    // forests are outside the domain of tau/beta and of antimagic search.
    bool has_degenerate_component() const noexcept;

    // Disjoint union; the right operand's vertex ids are shifted past ours.
    friend Forest operator+(const Forest& lhs, const Forest& rhs);

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
    std::vector<Component> components_;
    int internal_edges_ = 0;
    int p3_count_ = 0;
};

Forest make_path(int vertices);
Forest make_star(int leaves);
Forest make_double_star(int a, int b);
Forest repeat(const Forest& g, int copies);

// Grammar: term ("+" term)*, with term one of P<n>, S<n>, S(<a>,<b>), <k>*<term>.
Forest parse_forest(std::string_view spec);

// A bijection from edge indices onto [1, m].
class Labeling {
public:
    Labeling() = default;
    // Throws invalid_labeling unless labels is a permutation of [1, labels.size()].
    explicit Labeling(std::vector<int> labels);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    int operator[](int edge) const { return labels_.at(edge); }
    std::span<const int> labels() const noexcept { return labels_; }

private:
    std::vector<int> labels_;
};

// Sum of incident labels per vertex, indexed by vertex id.
std::vector<std::int64_t> vertex_sums(const Forest& g, const Labeling& f);

// S(a,b) + cP3 with u_1..u_c the P3 centers and u_{c+1}, u_{c+2} the double
// star centers carrying a and b pendant edges.
//
// Vertex layout: P3 number i (1-based) owns ids 3(i-1) (center) and the two
// following leaves; u_{c+1} = 3c, u_{c+2} = 3c+1, then the a leaves of
// u_{c+1}, then the b leaves of u_{c+2}. Edge layout follows the groups:
// E_1..E_c (two edges each), E_I, E_A, E_B.
class DoubleStarInstance {
public:
    // Throws invalid_parameters unless 1 <= a <= b and c >= 0.
    DoubleStarInstance(int a, int b, int c);

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    int c() const noexcept { return c_; }
    int m() const noexcept { return a_ + b_ + 1; }
    int k() const noexcept { return m() + 2 * c_; }

    const Forest& forest() const noexcept { return forest_; }

    // u_i for 1 <= i <= c+2.
    int center(int i) const;

    int p3_edge(int i, int which) const;  // E_i, which in {0, 1}
    int internal_edge() const noexcept { return 2 * c_; }
    int a_edge(int j) const noexcept { return 2 * c_ + 1 + j; }
    int b_edge(int j) const noexcept { return 2 * c_ + 1 + a_ + j; }

private:
    int a_ = 1;
    int b_ = 1;
    int c_ = 0;
    Forest forest_;
};

DoubleStarInstance build_instance(int a, int b, int c);

// Label sets per edge group, each kept sorted ascending.
struct LabelPartition {
    std::vector<std::vector<int>> p3;  // E_1..E_c
    std::vector<int> internal;         // E_I
    std::vector<int> a_side;           // E_A
    std::vector<int> b_side;           // E_B

    friend bool operator==(const LabelPartition&, const LabelPartition&) = default;
};

// Throws malformed_partition on a size mismatch, overlap, or a label outside [1,k].
void validate_partition(const DoubleStarInstance& inst, const LabelPartition& part);

// Labels in each group go to that group's edges in ascending order.
Labeling partition_to_labeling(const DoubleStarInstance& inst, const LabelPartition& part);

// Inverse of partition_to_labeling (groups read back from the canonical edges).
LabelPartition labeling_to_partition(const DoubleStarInstance& inst, const Labeling& f);

}  // namespace antimagic
