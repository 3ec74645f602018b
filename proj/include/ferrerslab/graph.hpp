#ifndef FERRERSLAB_GRAPH_HPP
#define FERRERSLAB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ferrerslab/matrix.hpp"

namespace ferrerslab {

struct unknown_vertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on at most 64 vertices. Loops are kept as a
/// separate optional per-vertex flag, never as edges (they stand for the
/// diagonal of the adjacency matrix and must not disturb simple-graph
/// invariants).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    explicit Graph(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
    int index_of(const std::string& label) const;

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1u; }
    std::uint64_t neighbor_mask(int v) const { return adj_[static_cast<size_t>(v)]; }
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    bool has_loop_flags() const { return loops_.has_value(); }
    void set_loop(int v, bool flag);
    bool loop(int v) const;
    const std::optional<std::vector<bool>>& loop_flags() const { return loops_; }

    Graph induced(const std::vector<int>& keep) const;
    Graph complement() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> adj_;
    std::optional<std::vector<bool>> loops_;
};

/// Bipartite graph with named sides X and Y; only X-Y edges exist.
class Bigraph {
public:
    Bigraph() = default;
    Bigraph(int nx, int ny);
    Bigraph(std::vector<std::string> x_labels, std::vector<std::string> y_labels);

    int x_size() const { return static_cast<int>(x_labels_.size()); }
    int y_size() const { return static_cast<int>(y_labels_.size()); }
    const std::vector<std::string>& x_labels() const { return x_labels_; }
    const std::vector<std::string>& y_labels() const { return y_labels_; }

    void add_edge(int xi, int yj);
    bool adjacent(int xi, int yj) const { return (rows_[static_cast<size_t>(xi)] >> yj) & 1u; }
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    /// Induced sub-bigraph on the given side subsets.
    Bigraph induced(const std::vector<int>& keep_x, const std::vector<int>& keep_y) const;

    /// The same vertices and edges as a Graph (X labels first, then Y).
    Graph underlying_graph() const;

    bool operator==(const Bigraph&) const = default;

private:
    std::vector<std::string> x_labels_, y_labels_;
    std::vector<std::uint64_t> rows_;
};

BinaryMatrix biadjacency(const Bigraph& b);
Bigraph matrix_to_bigraph(const BinaryMatrix& m);

/// Adjacency matrix with diagonal filled from the graph's loop flags
/// (or the supplied diagonal when the graph carries none).
BinaryMatrix adjacency_matrix(const Graph& g, const std::vector<bool>& diagonal);

struct BipartiteResult {
    /// Color (0/1) per vertex when bipartite.
    std::optional<std::vector<int>> coloring;
    /// Closed odd cycle v0, v1, ..., v0 (first vertex not repeated) otherwise.
    std::vector<int> odd_cycle;
    bool bipartite() const { return coloring.has_value(); }
};

BipartiteResult is_bipartite(const Graph& g);

} // namespace ferrerslab

#endif
