#ifndef FERRERSLAB_ORACLE_HPP
#define FERRERSLAB_ORACLE_HPP

#include <optional>

#include "ferrerslab/graph.hpp"
#include "ferrerslab/intervals.hpp"
#include "ferrerslab/matrix.hpp"

namespace ferrerslab {

// Plain brute-force reference implementations. They share only the domain
// types with the optimized recognizers and exist to arbitrate bugs.

struct OracleArrangement {
    std::vector<int> rows, cols; // original index placed at each position
};

/// All row permutations x column permutations, lexicographic; first
/// arrangement with no 0 having a 1 both below and to its right.
std::optional<OracleArrangement> oracle_staircase(const BinaryMatrix& m, int max_side = 7);

/// Exhaustive endpoint grid {0..|X|+|Y|} per endpoint; first representation
/// whose induced edges equal the bigraph.
std::optional<Representation> oracle_signed_interval_bigraph(const Bigraph& b, int max_total = 8);

/// Full grid for |V| <= grid_cap; the diagonal x simultaneous-permutation
/// route up to perm_cap beyond that.
std::optional<Representation> oracle_cott(const Graph& g, int grid_cap = 6, int perm_cap = 8);

/// Exhaustive arrangements x zero-partition check.
bool oracle_interval_bigraph(const Bigraph& b, int max_side = 6);

} // namespace ferrerslab

#endif
