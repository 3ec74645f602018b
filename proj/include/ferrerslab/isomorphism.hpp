#ifndef FERRERSLAB_ISOMORPHISM_HPP
#define FERRERSLAB_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "ferrerslab/graph.hpp"

namespace ferrerslab {

/// Injective vertex map pattern -> host preserving adjacency and
/// non-adjacency (loop flags are not part of patterns).
struct Embedding {
    std::vector<int> map; // map[p] = host vertex for pattern vertex p
};

/// Exhaustive induced-subgraph search (backtracking with degree pruning),
/// so a nullopt answer is definitive. Throws cap_exceeded when the pattern
/// is larger than pattern_cap.
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern, int pattern_cap = 12);

bool is_isomorphic(const Graph& a, const Graph& b, int cap = 12);

/// Bigraph isomorphism: a bijection preserving edges that maps sides onto
/// sides (either orientation).
bool is_isomorphic(const Bigraph& a, const Bigraph& b, int cap = 12);

/// Check that an embedding really is induced-preserving.
bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

} // namespace ferrerslab

#endif
