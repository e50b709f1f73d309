// graph.hpp - immutable undirected graph with vertex multiplicities and
// positive edge weights, plus TSV parsing and connectivity analysis.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace l1cent {

struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0; // > 0
};

// Immutable after construction; safe for concurrent reads.
class Graph {
public:
    // Validates all invariants: unique labels, weights > 0, multiplicities >= 0,
    // total multiplicity > 0, no self-loops, no duplicate unordered pairs.
    Graph(std::vector<std::string> labels, std::vector<double> multiplicities,
          std::vector<Edge> edges);

    int size() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    const std::vector<double>& multiplicities() const { return multiplicities_; }
    double total_multiplicity() const { return total_multiplicity_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // adjacency()[u] = list of (neighbor, weight), in edge insertion order
    const std::vector<std::vector<std::pair<int, double>>>& adjacency() const {
        return adjacency_;
    }

    std::optional<int> index_of(std::string_view label) const;

private:
    std::vector<std::string> labels_;
    std::vector<double> multiplicities_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, double>>> adjacency_;
    double total_multiplicity_ = 0.0;
};

struct ConnectivityReport {
    bool connected = false;
    // Partition of {0..n-1}; each component sorted ascending, components
    // ordered by their smallest member.
    std::vector<std::vector<int>> components;
};

struct GraphText {
    std::string edge_text;
    std::string vertex_text;
};

// Edge lines: "u<TAB>v[<TAB>weight]" (default weight 1.0).
// Vertex lines: "label[<TAB>multiplicity]" (default 1.0).
// '#'-prefixed and blank lines are skipped. Vertex file order wins when given;
// otherwise vertices appear in first-appearance order of the edge list.
Graph parse_graph(std::string_view edge_text,
                  std::optional<std::string_view> vertex_text = std::nullopt);

// Round-trips exactly: parse_graph(serialize_graph(g)) == g.
GraphText serialize_graph(const Graph& g);

ConnectivityReport connectivity(const Graph& g);

// Subgraph induced by `vertices` (ascending original order), labels and
// multiplicities preserved.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Largest connected component (ties broken toward the one holding the
// smallest vertex index).
Graph largest_component(const Graph& g);

} // namespace l1cent
