#include "ferrerslab/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace ferrerslab {

bool adjacent(const SignedInterval& u, const SignedInterval& v) {
    bool by_condition = u.l <= v.r && v.l <= u.r;
    bool by_cases;
    if (u.positive() && v.positive()) {
        by_cases = std::max(u.l, v.l) <= std::min(u.r, v.r);
    } else if (!u.positive() && v.positive()) {
        // reversed span [u.r, u.l] inside [v.l, v.r]
        by_cases = v.l <= u.r && u.l <= v.r;
    } else if (u.positive() && !v.positive()) {
        by_cases = u.l <= v.r && v.l <= u.r;
    } else {
        by_cases = false;
    }
    if (by_condition != by_cases) throw std::logic_error("adjacency case analysis disagrees with a<=b form");
    return by_condition;
}

Graph edges_from_representation_graph(const Representation& rep) {
    if (rep.kind != RepKind::graph) throw std::invalid_argument("graph-kind representation expected");
    Graph g(rep.vertices);
    for (int u = 0; u < rep.size(); u++) {
        g.set_loop(u, rep.intervals[static_cast<size_t>(u)].positive());
        for (int v = u + 1; v < rep.size(); v++)
            if (adjacent(rep.intervals[static_cast<size_t>(u)], rep.intervals[static_cast<size_t>(v)]))
                g.add_edge(u, v);
    }
    return g;
}

Bigraph edges_from_representation_bigraph(const Representation& rep) {
    if (rep.kind != RepKind::bigraph) throw std::invalid_argument("bigraph-kind representation expected");
    if (rep.x_count < 0 || rep.x_count > rep.size()) throw std::invalid_argument("bad x_count");
    std::vector<std::string> xl(rep.vertices.begin(), rep.vertices.begin() + rep.x_count);
    std::vector<std::string> yl(rep.vertices.begin() + rep.x_count, rep.vertices.end());
    Bigraph b(xl, yl);
    for (int i = 0; i < rep.x_count; i++)
        for (int j = rep.x_count; j < rep.size(); j++)
            if (adjacent(rep.intervals[static_cast<size_t>(i)], rep.intervals[static_cast<size_t>(j)]))
                b.add_edge(i, j - rep.x_count);
    return b;
}

bool check_condition1(const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
    if (static_cast<int>(pairs.size()) != g.size()) throw std::invalid_argument("pairs must be total on V");
    for (int u = 0; u < g.size(); u++)
        for (int v = u + 1; v < g.size(); v++) {
            auto [au, bu] = pairs[static_cast<size_t>(u)];
            auto [av, bv] = pairs[static_cast<size_t>(v)];
            bool cond = au <= bv && av <= bu;
            if (cond != g.adjacent(u, v)) return false;
        }
    return true;
}

} // namespace ferrerslab
