#ifndef FERRERSLAB_SIGNED_INTERVAL_HPP
#define FERRERSLAB_SIGNED_INTERVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ferrerslab/ferrers.hpp"
#include "ferrerslab/graph.hpp"
#include "ferrerslab/intervals.hpp"
#include "ferrerslab/isomorphism.hpp"

namespace ferrerslab {

/// Theorem-style construction over a staircase matrix: row i gets [i, k]
/// where k is the column of the last 1 in row i (0 when the row is empty),
/// columns symmetrically. The staircase condition is a precondition and the
/// round-trip back to the matrix is verified (a mismatch aborts).
Representation build_representation_bigraph(const BinaryMatrix& staircase);

/// Symmetric variant: one arrangement for rows and columns, diagonal
/// included when locating the last 1; loop flag == positive interval.
Representation build_representation_graph(const BinaryMatrix& staircase);

struct SignedBigraphDecision {
    bool yes = false;
    Representation representation;    // yes
    std::vector<ZeroCell> odd_cycle;  // no: odd cycle in H of the biadjacency matrix
};

/// Signed interval bigraph == Ferrers dimension at most 2 of the biadjacency
/// matrix; the YES certificate is a verified representation.
SignedBigraphDecision recognize_signed_interval_bigraph(const Bigraph& b);

struct CottOptions {
    int max_vertices = 12;
    int pattern_cap = 12;
};

enum class CottWitnessKind { none, hole, sun, exhausted };

struct CottDecision {
    bool yes = false;
    // yes
    Representation representation;
    std::vector<bool> diagonal;  // loop pattern of the representation
    Permutation order;           // simultaneous staircase order
    // no
    CottWitnessKind witness_kind = CottWitnessKind::none;
    std::vector<int> hole;   // chordless cycle (witness_kind == hole)
    int sun_k = 0;           // witness_kind == sun
    Embedding sun_embedding; // ditto
};

/// co-TT == signed interval graph. Quick necessary-condition filters first
/// (chordality, sun containment); then a search over diagonal assignments,
/// restricted to independent sets of simplicial vertices (a vertex with a
/// negative interval has a clique of positive neighbors), each tested for a
/// simultaneous staircase arrangement. Throws cap_exceeded ("undecided at
/// configured scale") for graphs beyond the cap; the input must not carry
/// prescribed loops.
CottDecision recognize_cott(const Graph& g, const CottOptions& options = {});

} // namespace ferrerslab

#endif
