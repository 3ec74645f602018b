#ifndef FERRERSLAB_FERRERS_HPP
#define FERRERSLAB_FERRERS_HPP

#include <optional>
#include <vector>

#include "ferrerslab/graph.hpp"
#include "ferrerslab/intervals.hpp"
#include "ferrerslab/matrix.hpp"

namespace ferrerslab {

struct ZeroCell {
    int row = 0, col = 0;
    bool operator==(const ZeroCell&) const = default;
};

/// Graph on the 0-cells of a matrix; two 0s are adjacent iff they are the
/// 0s of a 2x2 permutation submatrix. Edges index into zeros.
struct AssociatedGraph {
    std::vector<ZeroCell> zeros;
    std::vector<std::pair<int, int>> edges;
};

/// No 2x2 permutation submatrix; cross-checked against the
/// neighborhoods-linearly-ordered-by-inclusion form (the two must agree).
bool is_ferrers(const BinaryMatrix& m);

AssociatedGraph associated_graph(const BinaryMatrix& m);

/// 2-coloring of the associated graph per connected component, or an odd
/// cycle (as indices into zeros).
struct AssociatedColoring {
    bool bipartite = true;
    std::vector<int> component, color;
    int component_count = 0;
    std::vector<int> odd_cycle;
};

AssociatedColoring color_associated_graph(const AssociatedGraph& h);

/// No 0 of the arranged matrix has a 1 somewhere below AND a 1 somewhere to
/// its right.
bool check_staircase(const BinaryMatrix& m, const Arrangement& a);
bool staircase_ok(const BinaryMatrix& arranged);

enum class ZeroColor { R, C };

/// R-colored 0s have only 0s colored R to their right; C-colored 0s only 0s
/// colored C below them.
struct ZeroPartition {
    std::vector<std::pair<ZeroCell, ZeroColor>> colors;
};

/// Zero partition of the matrix as given (fixed arrangement).
std::optional<ZeroPartition> zero_partition(const BinaryMatrix& m);

/// Validity re-check, cell by cell.
bool check_zero_partition(const BinaryMatrix& m, const ZeroPartition& zp);

struct FerrersCover {
    BinaryMatrix f1, f2;
    bool union_complete = false;
};

/// Both parts Ferrers, entrywise AND equal to m. Derived from a 2-coloring
/// of the associated graph; zeros isolated in H(B) may be cleared from both
/// parts unless require_complete_union is set.
std::optional<FerrersCover> ferrers_cover(const BinaryMatrix& m, bool require_complete_union);

struct Fdim2Decision {
    bool yes = false;
    Arrangement arrangement;          // staircase witness (yes)
    FerrersCover cover;               // Ferrers cover (yes)
    std::vector<ZeroCell> odd_cycle;  // odd cycle of H(B) (no)
};

/// Ferrers dimension <= 2: H(B) bipartite. YES carries a verified staircase
/// arrangement plus a Ferrers cover; NO carries an odd cycle of H(B).
Fdim2Decision fdim_at_most_2(const BinaryMatrix& m);

/// Arrangement satisfying the staircase condition, if any (none exactly when
/// fdim_at_most_2 says no).
std::optional<Arrangement> find_staircase(const BinaryMatrix& m);

struct IntervalBigraphDecision {
    bool yes = false;
    Arrangement arrangement;       // zero-partitioned arrangement (yes)
    ZeroPartition partition;       // of the arranged matrix (yes)
    Representation representation; // all-positive, reproduces the bigraph (yes)
};

/// Exhaustive over row/column arrangements (equal rows/columns deduplicated);
/// throws cap_exceeded ("undecided at configured scale") above max_side per
/// side. A NO answer is definitive.
IntervalBigraphDecision is_interval_bigraph(const Bigraph& b, int max_side = 8);

} // namespace ferrerslab

#endif
