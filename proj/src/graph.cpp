#include "ferrerslab/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace ferrerslab {

namespace {
std::vector<std::string> numeric_labels(int n, const char* prefix = "") {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; i++) out.push_back(prefix + std::to_string(i));
    return out;
}
void check_vertex_count(size_t n) {
    if (n > 64) throw cap_exceeded("graphs beyond 64 vertices are beyond desk scale");
}
} // namespace

Graph::Graph(int n) : Graph(numeric_labels(n)) {}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    check_vertex_count(labels_.size());
    adj_.assign(labels_.size(), 0);
}

int Graph::index_of(const std::string& label) const {
    for (int i = 0; i < size(); i++)
        if (labels_[static_cast<size_t>(i)] == label) return i;
    throw unknown_vertex("unknown vertex label: " + label);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= size() || v >= size()) throw unknown_vertex("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self edge; use loop flags for diagonals");
    adj_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < size(); u++)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); u++)
        for (int v = u + 1; v < size(); v++)
            if (adjacent(u, v)) out.push_back({u, v});
    return out;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < size(); v++) total += degree(v);
    return total / 2;
}

void Graph::set_loop(int v, bool flag) {
    if (v < 0 || v >= size()) throw unknown_vertex("loop vertex out of range");
    if (!loops_) loops_ = std::vector<bool>(static_cast<size_t>(size()), false);
    (*loops_)[static_cast<size_t>(v)] = flag;
}

bool Graph::loop(int v) const {
    if (!loops_) throw std::logic_error("graph carries no loop flags");
    return (*loops_)[static_cast<size_t>(v)];
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (int v : keep) {
        if (v < 0 || v >= size()) throw unknown_vertex("induced: vertex out of range");
        labels.push_back(label(v));
    }
    Graph g(labels);
    for (size_t a = 0; a < keep.size(); a++)
        for (size_t b = a + 1; b < keep.size(); b++)
            if (adjacent(keep[a], keep[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    if (loops_) {
        for (size_t a = 0; a < keep.size(); a++) g.set_loop(static_cast<int>(a), (*loops_)[static_cast<size_t>(keep[a])]);
    }
    return g;
}

Graph Graph::complement() const {
    Graph g(labels_);
    for (int u = 0; u < size(); u++)
        for (int v = u + 1; v < size(); v++)
            if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
}

Bigraph::Bigraph(int nx, int ny) : Bigraph(numeric_labels(nx, "x"), numeric_labels(ny, "y")) {}

Bigraph::Bigraph(std::vector<std::string> x_labels, std::vector<std::string> y_labels)
    : x_labels_(std::move(x_labels)), y_labels_(std::move(y_labels)) {
    check_vertex_count(x_labels_.size() + y_labels_.size());
    if (y_labels_.size() > 64) throw cap_exceeded("bigraph Y side beyond desk scale");
    rows_.assign(x_labels_.size(), 0);
}

void Bigraph::add_edge(int xi, int yj) {
    if (xi < 0 || xi >= x_size() || yj < 0 || yj >= y_size())
        throw unknown_vertex("bigraph edge endpoint out of range");
    rows_[static_cast<size_t>(xi)] |= std::uint64_t{1} << yj;
}

std::vector<std::pair<int, int>> Bigraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < x_size(); i++)
        for (int j = 0; j < y_size(); j++)
            if (adjacent(i, j)) out.push_back({i, j});
    return out;
}

int Bigraph::edge_count() const {
    int total = 0;
    for (const auto& r : rows_) total += std::popcount(r);
    return total;
}

Bigraph Bigraph::induced(const std::vector<int>& keep_x, const std::vector<int>& keep_y) const {
    std::vector<std::string> xl, yl;
    for (int i : keep_x) {
        if (i < 0 || i >= x_size()) throw unknown_vertex("induced: x vertex out of range");
        xl.push_back(x_labels_[static_cast<size_t>(i)]);
    }
    for (int j : keep_y) {
        if (j < 0 || j >= y_size()) throw unknown_vertex("induced: y vertex out of range");
        yl.push_back(y_labels_[static_cast<size_t>(j)]);
    }
    Bigraph b(xl, yl);
    for (size_t a = 0; a < keep_x.size(); a++)
        for (size_t c = 0; c < keep_y.size(); c++)
            if (adjacent(keep_x[a], keep_y[c])) b.add_edge(static_cast<int>(a), static_cast<int>(c));
    return b;
}

Graph Bigraph::underlying_graph() const {
    std::vector<std::string> labels = x_labels_;
    labels.insert(labels.end(), y_labels_.begin(), y_labels_.end());
    Graph g(labels);
    for (auto [i, j] : edges()) g.add_edge(i, x_size() + j);
    return g;
}

BinaryMatrix biadjacency(const Bigraph& b) {
    BinaryMatrix m(b.x_size(), b.y_size());
    for (auto [i, j] : b.edges()) m.set(i, j, true);
    return m;
}

Bigraph matrix_to_bigraph(const BinaryMatrix& m) {
    Bigraph b(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++)
            if (m.at(i, j)) b.add_edge(i, j);
    return b;
}

BinaryMatrix adjacency_matrix(const Graph& g, const std::vector<bool>& diagonal) {
    if (static_cast<int>(diagonal.size()) != g.size()) throw std::invalid_argument("diagonal size mismatch");
    BinaryMatrix m(g.size(), g.size());
    for (int u = 0; u < g.size(); u++) {
        if (diagonal[static_cast<size_t>(u)]) m.set(u, u, true);
        for (int v = 0; v < g.size(); v++)
            if (u != v && g.adjacent(u, v)) m.set(u, v, true);
    }
    return m;
}

BipartiteResult is_bipartite(const Graph& g) {
    int n = g.size();
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; s++) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[static_cast<size_t>(v)] == -1) {
                    color[static_cast<size_t>(v)] = color[static_cast<size_t>(u)] ^ 1;
                    parent[static_cast<size_t>(v)] = u;
                    queue.push_back(v);
                } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                    // walk both BFS paths to the root, join at the lowest common ancestor
                    std::vector<int> pu, pv;
                    for (int x = u; x != -1; x = parent[static_cast<size_t>(x)]) pu.push_back(x);
                    for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) pv.push_back(x);
                    // strip the common root-side tail, keeping one copy of the LCA on pu
                    while (pu.size() >= 2 && pv.size() >= 2 && pu[pu.size() - 1] == pv[pv.size() - 1] &&
                           pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    pv.pop_back(); // drop the LCA, pu keeps it
                    std::vector<int> cycle(pu.begin(), pu.end());
                    for (auto it = pv.rbegin(); it != pv.rend(); ++it) cycle.push_back(*it);
                    BipartiteResult r;
                    r.odd_cycle = std::move(cycle);
                    if (r.odd_cycle.size() % 2 == 0 || r.odd_cycle.size() < 3)
                        throw std::logic_error("odd cycle extraction failed");
                    return r;
                }
            }
        }
    }
    BipartiteResult r;
    r.coloring = std::move(color);
    return r;
}

} // namespace ferrerslab
