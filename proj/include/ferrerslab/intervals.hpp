#ifndef FERRERSLAB_INTERVALS_HPP
#define FERRERSLAB_INTERVALS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ferrerslab/graph.hpp"

namespace ferrerslab {

/// Closed interval with integer endpoints; positive when l <= r, negative
/// (a reversed interval spanning [r, l]) when l > r.
struct SignedInterval {
    int l = 0;
    int r = 0;
    bool positive() const { return l <= r; }
    bool operator==(const SignedInterval&) const = default;
};

/// Two vertices are adjacent iff l(u) <= r(v) and l(v) <= r(u).
/// Equivalent case analysis (checked internally): positive intervals
/// intersect; a negative interval is adjacent to a positive one iff its
/// reversed span [r, l] lies inside the positive interval; two negative
/// intervals are never adjacent.
bool adjacent(const SignedInterval& u, const SignedInterval& v);

enum class RepKind { graph, bigraph };

/// Total assignment vertex -> signed interval. For bigraphs the first
/// x_count vertices are the X side.
struct Representation {
    RepKind kind = RepKind::graph;
    std::vector<std::string> vertices;
    int x_count = 0;
    std::vector<SignedInterval> intervals;

    int size() const { return static_cast<int>(intervals.size()); }
    bool operator==(const Representation&) const = default;
};

/// Graph kind: edge uv (u != v) iff adjacent; loop flag iff interval positive.
Graph edges_from_representation_graph(const Representation& rep);

/// Bigraph kind: only X-Y pairs are tested.
Bigraph edges_from_representation_bigraph(const Representation& rep);

/// True iff for every unordered pair of distinct vertices:
/// uv is an edge <=> a_u <= b_v and a_v <= b_u.
bool check_condition1(const Graph& g, const std::vector<std::pair<int, int>>& pairs);

} // namespace ferrerslab

#endif
