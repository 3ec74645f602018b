#ifndef FERRERSLAB_FAMILIES_HPP
#define FERRERSLAB_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ferrerslab/graph.hpp"
#include "ferrerslab/isomorphism.hpp"

namespace ferrerslab {

/// Ordered list of subsets of 1..ground_size; list order is part of the data.
struct SetSystem {
    int ground_size = 0;
    std::vector<std::vector<int>> sets;
};

enum class Family { C, T, W, D, M, N, G1, G2, G3, Pfam, Tgraph, T0graph, Pgraph, Sun };

struct FamilyId {
    Family family;
    int index = 0;
};

const std::vector<std::pair<std::string, Family>>& family_names();
std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);
bool family_needs_index(Family f);
bool family_is_set_system(Family f);

/// The set-system families (C: i>=3; T/W/D: i>=1 via the visible recurrence,
/// matching the verbatim tables for i<=3; M/N: i in {1,2,3} verbatim only;
/// G1..G3 fixed). Out-of-range indices are rejected.
SetSystem set_system(FamilyId id);

/// X = the sets (labels S1..), Y = ground elements (labels e1..),
/// edge (S, e) iff e is a member of S.
Bigraph incidence_bigraph(const SetSystem& s);

Graph gen_T();
Graph gen_T0();
Graph gen_P();
Graph gen_Pi(int i);   // i >= 2
Graph gen_sun(int k);  // k >= 3

/// Produce the named family member: graphs for Tgraph/T0graph/Pgraph/Pfam/Sun,
/// the incidence bigraph otherwise (use set_system for the raw system).
struct GeneratedObject {
    std::optional<Graph> graph;
    std::optional<Bigraph> bigraph;
};
GeneratedObject generate(FamilyId id);

enum class Side { X, Y };

/// Vertex set X union Y; the chosen side becomes a clique, cross edges stay.
Graph split_augment(const Bigraph& b, Side side);

struct ChordalResult {
    bool chordal = false;
    std::vector<int> hole; // chordless cycle of length >= 4 when not chordal
};

/// Perfect-elimination test; a NO carries a chordless cycle witness.
ChordalResult is_chordal(const Graph& g);

/// True iff no k-sun, 3 <= k <= kmax, embeds induced. Throws cap_exceeded
/// when a requested sun exceeds the pattern cap.
bool sun_free(const Graph& g, int kmax, int pattern_cap = 12);

struct ATEWitness {
    std::array<std::pair<int, int>, 3> edges;  // vertex pairs in the underlying graph
    std::array<std::vector<int>, 3> paths;     // paths[k] joins the other two edges avoiding N[edges[k]]
};

/// Asteroidal triple of edges: each two of the three edges are joined by a
/// path avoiding the closed neighborhood of the third. Exhaustive over edge
/// triples.
std::optional<ATEWitness> has_ATE(const Bigraph& b, int max_edges = 100);

/// All minimum-cardinality sets of within-side edge additions that make the
/// underlying graph chordal, deduplicated up to isomorphism.
std::vector<Graph> chordal_augmentations(const Bigraph& b, Side side, int max_side = 8);

} // namespace ferrerslab

#endif
