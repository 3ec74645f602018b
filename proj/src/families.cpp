#include "ferrerslab/families.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace ferrerslab {

// ---------------------------------------------------------------------------
// Family catalog.

const std::vector<std::pair<std::string, Family>>& family_names() {
    static const std::vector<std::pair<std::string, Family>> names = {
        {"C", Family::C},           {"T", Family::T},
        {"W", Family::W},           {"D", Family::D},
        {"M", Family::M},           {"N", Family::N},
        {"G1", Family::G1},         {"G2", Family::G2},
        {"G3", Family::G3},         {"Pi", Family::Pfam},
        {"T-graph", Family::Tgraph},{"T0-graph", Family::T0graph},
        {"P-graph", Family::Pgraph},{"sun", Family::Sun},
    };
    return names;
}

std::optional<Family> family_from_name(const std::string& name) {
    for (const auto& [n, f] : family_names())
        if (n == name) return f;
    return std::nullopt;
}

std::string family_name(Family f) {
    for (const auto& [n, g] : family_names())
        if (g == f) return n;
    throw std::logic_error("unnamed family");
}

bool family_needs_index(Family f) {
    switch (f) {
        case Family::C:
        case Family::T:
        case Family::W:
        case Family::D:
        case Family::M:
        case Family::N:
        case Family::Pfam:
        case Family::Sun:
            return true;
        default:
            return false;
    }
}

bool family_is_set_system(Family f) {
    switch (f) {
        case Family::C:
        case Family::T:
        case Family::W:
        case Family::D:
        case Family::M:
        case Family::N:
        case Family::G1:
        case Family::G2:
        case Family::G3:
            return true;
        default:
            return false;
    }
}

// ---------------------------------------------------------------------------
// Set systems. The M, N and G tables are verbatim data; C, T, W, D follow the
// visible recurrence (their first three members are pinned against the same
// verbatim data in the tests).

namespace {

SetSystem make_system(std::vector<std::vector<int>> sets) {
    SetSystem s;
    for (auto& st : sets) {
        std::sort(st.begin(), st.end());
        for (int e : st) s.ground_size = std::max(s.ground_size, e);
    }
    s.sets = std::move(sets);
    return s;
}

std::vector<int> run(int from, int to) { // inclusive
    std::vector<int> v;
    for (int k = from; k <= to; k++) v.push_back(k);
    return v;
}

const std::map<std::pair<char, int>, std::vector<std::vector<int>>>& verbatim_tables() {
    static const std::map<std::pair<char, int>, std::vector<std::vector<int>>> t = {
        {{'M', 1}, {{1, 2, 3, 4, 5}, {1, 2, 3}, {1}, {1, 2, 4, 6}, {2, 4}, {2, 5}}},
        {{'M', 2},
         {{1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5}, {1, 2, 3}, {1}, {1, 2, 3, 4, 6, 8}, {1, 2, 4, 6}, {2, 4}, {2, 7}}},
        {{'M', 3},
         {{1, 2, 3, 4, 5, 6, 7, 8, 9},
          {1, 2, 3, 4, 5, 6, 7},
          {1, 2, 3, 4, 5},
          {1, 2, 3},
          {1},
          {1, 2, 3, 4, 5, 6, 8, 10},
          {1, 2, 3, 4, 6, 8},
          {1, 2, 4, 6},
          {2, 4},
          {2, 9}}},
        {{'N', 1}, {{1, 2, 3}, {1}, {1, 2, 4, 6}, {2, 4}, {2, 5}, {6}}},
        {{'N', 2}, {{1, 2, 3, 4, 5}, {1, 2, 3}, {1}, {1, 2, 3, 4, 6, 8}, {1, 2, 4, 6}, {2, 4}, {2, 7}, {8}}},
        {{'N', 3},
         {{1, 2, 3, 4, 5, 6, 7},
          {1, 2, 3, 4, 5},
          {1, 2, 3},
          {1},
          {1, 2, 3, 4, 5, 6, 8, 10},
          {1, 2, 3, 4, 6, 8},
          {1, 2, 4, 6},
          {2, 4},
          {2, 9},
          {10}}},
    };
    return t;
}

} // namespace

SetSystem set_system(FamilyId id) {
    int i = id.index;
    switch (id.family) {
        case Family::C: {
            if (i < 3) throw std::invalid_argument("family C needs index >= 3");
            std::vector<std::vector<int>> sets;
            for (int k = 1; k <= i; k++) sets.push_back({k, k % i + 1});
            return make_system(std::move(sets));
        }
        case Family::T: {
            if (i < 1) throw std::invalid_argument("family T needs index >= 1");
            std::vector<std::vector<int>> sets;
            for (int k = 1; k <= i + 2; k++) sets.push_back({k, k + 1});
            auto fan = run(2, i + 2);
            fan.push_back(i + 4);
            sets.push_back(fan);
            sets.push_back({i + 4});
            return make_system(std::move(sets));
        }
        case Family::W: {
            if (i < 1) throw std::invalid_argument("family W needs index >= 1");
            std::vector<std::vector<int>> sets;
            for (int k = 1; k <= i + 1; k++) sets.push_back({k, k + 1});
            auto f1 = run(1, i + 1);
            f1.push_back(i + 3);
            auto f2 = run(2, i + 2);
            f2.push_back(i + 3);
            sets.push_back(f1);
            sets.push_back(f2);
            sets.push_back({i + 3});
            return make_system(std::move(sets));
        }
        case Family::D: {
            if (i < 1) throw std::invalid_argument("family D needs index >= 1");
            int g = i + 4;
            std::vector<std::vector<int>> sets;
            for (int k = 1; k <= i + 1; k++) sets.push_back({k, k + 1, g});
            sets.push_back({i + 2});
            sets.push_back({i + 3, g});
            auto last = run(2, i + 3);
            last.push_back(g);
            sets.push_back(last);
            return make_system(std::move(sets));
        }
        case Family::M:
        case Family::N: {
            char key = id.family == Family::M ? 'M' : 'N';
            auto it = verbatim_tables().find({key, i});
            if (it == verbatim_tables().end())
                throw std::invalid_argument(std::string("family ") + key +
                                            " is tabulated for indices 1..3 only (the general pattern is not served)");
            return make_system(it->second);
        }
        case Family::G1:
            return make_system({{1, 3, 5}, {1, 2}, {3, 4}, {5, 6}});
        case Family::G2:
            return make_system({{1}, {1, 2, 3, 4}, {2, 4, 5}, {2, 3, 6}});
        case Family::G3:
            return make_system({{1, 2}, {3, 4}, {5}, {1, 2, 3}, {1, 3, 5}});
        default:
            throw std::invalid_argument("family " + family_name(id.family) + " is not a set-system family");
    }
}

Bigraph incidence_bigraph(const SetSystem& s) {
    std::vector<std::string> xl, yl;
    for (size_t k = 0; k < s.sets.size(); k++) xl.push_back("S" + std::to_string(k + 1));
    for (int e = 1; e <= s.ground_size; e++) yl.push_back("e" + std::to_string(e));
    Bigraph b(xl, yl);
    for (size_t k = 0; k < s.sets.size(); k++)
        for (int e : s.sets[k]) b.add_edge(static_cast<int>(k), e - 1);
    return b;
}

// ---------------------------------------------------------------------------
// Graph generators (explicit edge tables; the generators read the data and
// never re-derive geometry).

namespace {
Graph graph_from_table(std::vector<std::string> verts, const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g(std::move(verts));
    for (const auto& [a, b] : edges) g.add_edge(g.index_of(a), g.index_of(b));
    return g;
}
} // namespace

Graph gen_T() {
    // spider: s carries three legs of length two
    return graph_from_table({"z", "w", "s", "u", "x", "v", "y"},
                            {{"z", "w"}, {"w", "s"}, {"s", "u"}, {"u", "x"}, {"s", "v"}, {"v", "y"}});
}

Graph gen_T0() {
    return graph_from_table({"q", "y", "v", "w", "z", "p", "u", "x", "s"},
                            {{"q", "y"},
                             {"y", "v"},
                             {"v", "w"},
                             {"w", "z"},
                             {"z", "p"},
                             {"v", "u"},
                             {"u", "w"},
                             {"u", "x"},
                             {"x", "s"}});
}

Graph gen_P() {
    // t sits on the bottom path and is adjacent to u, v, w (u,v,t and u,w,t
    // are the two triangles); v-w is a non-edge and x is adjacent to u only.
    return graph_from_table({"y", "v", "t", "w", "z", "u", "x", "s"},
                            {{"y", "v"},
                             {"v", "t"},
                             {"t", "w"},
                             {"w", "z"},
                             {"v", "u"},
                             {"u", "t"},
                             {"u", "w"},
                             {"u", "x"},
                             {"x", "s"}});
}

Graph gen_Pi(int i) {
    if (i < 2) throw std::invalid_argument("gen_Pi needs i >= 2");
    std::vector<std::string> verts = {"y", "v"};
    for (int k = 1; k <= i; k++) verts.push_back("t" + std::to_string(k));
    for (const char* v : {"w", "z", "u", "x", "s"}) verts.push_back(v);
    Graph g(verts);
    auto E = [&](const std::string& a, const std::string& b) { g.add_edge(g.index_of(a), g.index_of(b)); };
    E("y", "v");
    E("v", "t1");
    for (int k = 1; k < i; k++) E("t" + std::to_string(k), "t" + std::to_string(k + 1));
    E("t" + std::to_string(i), "w");
    E("w", "z");
    E("v", "u");
    E("u", "w");
    for (int k = 1; k <= i; k++) E("u", "t" + std::to_string(k));
    E("u", "x");
    E("x", "s");
    return g;
}

Graph gen_sun(int k) {
    if (k < 3) throw std::invalid_argument("gen_sun needs k >= 3");
    std::vector<std::string> verts;
    for (int v = 1; v <= 2 * k; v++) verts.push_back("v" + std::to_string(v));
    Graph g(verts);
    for (int v = 0; v < 2 * k; v++) g.add_edge(v, (v + 1) % (2 * k));
    for (int a = 1; a < 2 * k; a += 2)
        for (int b = a + 2; b < 2 * k; b += 2)
            if (!g.adjacent(a, b)) g.add_edge(a, b);
    return g;
}

GeneratedObject generate(FamilyId id) {
    GeneratedObject out;
    switch (id.family) {
        case Family::Tgraph:
            out.graph = gen_T();
            return out;
        case Family::T0graph:
            out.graph = gen_T0();
            return out;
        case Family::Pgraph:
            out.graph = gen_P();
            return out;
        case Family::Pfam:
            out.graph = gen_Pi(id.index);
            return out;
        case Family::Sun:
            out.graph = gen_sun(id.index);
            return out;
        default:
            out.bigraph = incidence_bigraph(set_system(id));
            return out;
    }
}

Graph split_augment(const Bigraph& b, Side side) {
    Graph g = b.underlying_graph();
    int lo = side == Side::X ? 0 : b.x_size();
    int hi = side == Side::X ? b.x_size() : b.x_size() + b.y_size();
    for (int u = lo; u < hi; u++)
        for (int v = u + 1; v < hi; v++)
            if (!g.adjacent(u, v)) g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------------------
// Chordality.

namespace {

bool simplicial(const Graph& g, std::uint64_t alive, int v) {
    std::uint64_t nb = g.neighbor_mask(v) & alive;
    for (int a = 0; a < g.size(); a++) {
        if (!((nb >> a) & 1u)) continue;
        for (int b = a + 1; b < g.size(); b++)
            if (((nb >> b) & 1u) && !g.adjacent(a, b)) return false;
    }
    return true;
}

bool elimination_succeeds(const Graph& g) {
    std::uint64_t alive = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
    int remaining = g.size();
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < g.size() && pick == -1; v++)
            if (((alive >> v) & 1u) && simplicial(g, alive, v)) pick = v;
        if (pick == -1) return false;
        alive &= ~(std::uint64_t{1} << pick);
        remaining--;
    }
    return true;
}

// DFS over induced paths whose minimum vertex is the start; a vertex
// adjacent to the start may only close the cycle (length >= 4).
bool find_hole(const Graph& g, std::vector<int>& path, std::uint64_t on_path, std::vector<int>& hole) {
    int head = path.back(), start = path[0];
    for (int next = start + 1; next < g.size(); next++) {
        if (((on_path >> next) & 1u) || !g.adjacent(head, next)) continue;
        bool chord = false;
        for (size_t t = 1; t + 1 < path.size() && !chord; t++)
            if (g.adjacent(next, path[t])) chord = true;
        if (chord) continue;
        if (path.size() >= 2 && g.adjacent(next, start)) {
            if (path.size() >= 3) {
                hole = path;
                hole.push_back(next);
                return true;
            }
            continue; // would be a triangle, and cannot be an internal vertex
        }
        path.push_back(next);
        if (find_hole(g, path, on_path | (std::uint64_t{1} << next), hole)) return true;
        path.pop_back();
    }
    return false;
}

} // namespace

ChordalResult is_chordal(const Graph& g) {
    ChordalResult res;
    if (elimination_succeeds(g)) {
        res.chordal = true;
        return res;
    }
    for (int s = 0; s < g.size(); s++) {
        std::vector<int> path{s}, hole;
        if (find_hole(g, path, std::uint64_t{1} << s, hole)) {
            if (hole.size() < 4) throw std::logic_error("hole shorter than 4");
            for (size_t a = 0; a < hole.size(); a++)
                for (size_t b = a + 1; b < hole.size(); b++) {
                    bool consecutive = b == a + 1 || (a == 0 && b + 1 == hole.size());
                    if (g.adjacent(hole[a], hole[b]) != consecutive) throw std::logic_error("hole has a chord");
                }
            res.hole = hole;
            return res;
        }
    }
    throw std::logic_error("elimination stuck but no hole found");
}

bool sun_free(const Graph& g, int kmax, int pattern_cap) {
    for (int k = 3; k <= kmax; k++) {
        if (2 * k > g.size()) break;
        if (2 * k > pattern_cap)
            throw cap_exceeded("sun S_" + std::to_string(k) + " exceeds the pattern cap");
        if (contains_induced(g, gen_sun(k), pattern_cap)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Asteroidal triples of edges.

namespace {

std::optional<std::vector<int>> edge_path_avoiding(const Graph& g, std::pair<int, int> from, std::pair<int, int> to,
                                                   std::uint64_t banned) {
    std::deque<int> queue;
    std::vector<int> parent(static_cast<size_t>(g.size()), -2);
    auto push = [&](int v) {
        if (((banned >> v) & 1u) || parent[static_cast<size_t>(v)] != -2) return;
        parent[static_cast<size_t>(v)] = -1;
        queue.push_back(v);
    };
    push(from.first);
    push(from.second);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to.first || u == to.second) {
            std::vector<int> path;
            for (int x = u; x != -1; x = parent[static_cast<size_t>(x)]) path.push_back(x);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (int v : g.neighbors(u))
            if (!((banned >> v) & 1u) && parent[static_cast<size_t>(v)] == -2) {
                parent[static_cast<size_t>(v)] = u;
                queue.push_back(v);
            }
    }
    return std::nullopt;
}

std::uint64_t closed_edge_neighborhood(const Graph& g, std::pair<int, int> e) {
    return g.neighbor_mask(e.first) | g.neighbor_mask(e.second) | (std::uint64_t{1} << e.first) |
           (std::uint64_t{1} << e.second);
}

} // namespace

std::optional<ATEWitness> has_ATE(const Bigraph& b, int max_edges) {
    Graph g = b.underlying_graph();
    auto edges = g.edges();
    if (static_cast<int>(edges.size()) > max_edges)
        throw cap_exceeded("edge count exceeds the ATE search cap");
    size_t m = edges.size();
    for (size_t a = 0; a < m; a++)
        for (size_t c = a + 1; c < m; c++)
            for (size_t e = c + 1; e < m; e++) {
                std::array<std::pair<int, int>, 3> tri{edges[a], edges[c], edges[e]};
                ATEWitness w;
                w.edges = tri;
                bool ok = true;
                for (int k = 0; k < 3 && ok; k++) {
                    auto p = edge_path_avoiding(g, tri[static_cast<size_t>((k + 1) % 3)],
                                                tri[static_cast<size_t>((k + 2) % 3)],
                                                closed_edge_neighborhood(g, tri[static_cast<size_t>(k)]));
                    if (!p)
                        ok = false;
                    else
                        w.paths[static_cast<size_t>(k)] = std::move(*p);
                }
                if (ok) return w;
            }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Minimum within-side chordalizations.

std::vector<Graph> chordal_augmentations(const Bigraph& b, Side side, int max_side) {
    int side_size = side == Side::X ? b.x_size() : b.y_size();
    if (side_size > max_side)
        throw cap_exceeded("side exceeds the chordal augmentation cap of " + std::to_string(max_side));
    Graph base = b.underlying_graph();
    int lo = side == Side::X ? 0 : b.x_size();
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < side_size; u++)
        for (int v = u + 1; v < side_size; v++) candidates.push_back({lo + u, lo + v});

    for (size_t size = 0; size <= candidates.size(); size++) {
        std::vector<Graph> found;
        std::vector<int> pick(candidates.size(), 0);
        std::fill(pick.end() - static_cast<long>(size), pick.end(), 1);
        std::sort(pick.begin(), pick.end());
        do {
            Graph g = base;
            for (size_t t = 0; t < candidates.size(); t++)
                if (pick[t]) g.add_edge(candidates[t].first, candidates[t].second);
            if (elimination_succeeds(g)) {
                bool fresh = true;
                for (const Graph& h : found)
                    if (is_isomorphic(g, h, std::max(16, g.size()))) {
                        fresh = false;
                        break;
                    }
                if (fresh) found.push_back(std::move(g));
            }
        } while (std::next_permutation(pick.begin(), pick.end()));
        if (!found.empty()) return found;
    }
    throw std::logic_error("complete side clique must chordalize");
}

} // namespace ferrerslab
