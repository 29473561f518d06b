#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace raagmcg {

// Finite simple graph with string-labeled vertices, capped at 64 vertices so
// neighborhoods fit in one mask. Labels are stored in natural order (numeric
// labels compare by value), which fixes the deterministic vertex order used
// by every search in this library.
//
// Throughout, a graph used as a RAAG defining graph follows the
// anti-commutation convention: an edge means the two generators do NOT
// commute; every non-edge contributes a relation [u,v] = 1.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> labels);

    static Graph path(int m);   // P_m, vertices "1".."m"
    static Graph cycle(int m);  // C_m, m >= 3, vertices "1".."m"

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }
    std::optional<int> index_of(const std::string& label) const;

    void add_edge(int i, int j);
    void add_edge(const std::string& u, const std::string& v);
    bool adjacent(int i, int j) const;
    int degree(int i) const;
    uint64_t neighbors_mask(int i) const { return adj_.at(i); }
    std::vector<std::pair<int, int>> edges() const;  // i < j, lexicographic
    int edge_count() const;

    Graph complement() const;
    Graph induced_subgraph(const std::vector<int>& vertices) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<uint64_t> adj_;
};

// All full (induced) embeddings of `pattern` into `host`: injective vertex
// maps preserving both edges and non-edges. Result maps pattern index ->
// host index, listed in lexicographic order of the image tuple.
std::vector<std::vector<int>> find_full_embeddings(const Graph& pattern, const Graph& host);

// JSON exchange format:
//   {"vertices": ["a", ...],
//    "edges": [["a","b"], ...],
//    "convention": "anticommutation" | "commutation"}
// A graph saved under the commutation convention (edge = commute) is
// complemented on load, so the in-memory edge set always means
// anti-commutation. Missing convention defaults to "anticommutation".
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

}  // namespace raagmcg
