#include "ferrerslab/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace ferrerslab {

// Everything here is deliberately written in the plainest possible style,
// independent of the optimized recognizers.

namespace {

std::vector<std::vector<int>> to_cells(const BinaryMatrix& m) {
    std::vector<std::vector<int>> out(static_cast<size_t>(m.rows()), std::vector<int>(static_cast<size_t>(m.cols()), 0));
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j) ? 1 : 0;
    return out;
}

std::vector<std::vector<int>> apply_perms(const std::vector<std::vector<int>>& cells, const std::vector<int>& rp,
                                          const std::vector<int>& cp) {
    std::vector<std::vector<int>> out(rp.size(), std::vector<int>(cp.size(), 0));
    for (size_t i = 0; i < rp.size(); i++)
        for (size_t j = 0; j < cp.size(); j++)
            out[i][j] = cells[static_cast<size_t>(rp[i])][static_cast<size_t>(cp[j])];
    return out;
}

bool plain_staircase(const std::vector<std::vector<int>>& cells) {
    size_t r = cells.size(), c = r == 0 ? 0 : cells[0].size();
    for (size_t i = 0; i < r; i++)
        for (size_t j = 0; j < c; j++) {
            if (cells[i][j] != 0) continue;
            bool right = false, below = false;
            for (size_t l = j + 1; l < c; l++)
                if (cells[i][l] == 1) right = true;
            for (size_t k = i + 1; k < r; k++)
                if (cells[k][j] == 1) below = true;
            if (right && below) return false;
        }
    return true;
}

// Adjacency by the definitional case analysis: positive intervals that
// intersect, or a negative interval whose reversed span lies inside the
// positive one; two negative intervals never touch.
bool plain_adjacent(int lu, int ru, int lv, int rv) {
    bool u_pos = lu <= ru, v_pos = lv <= rv;
    if (u_pos && v_pos) return std::max(lu, lv) <= std::min(ru, rv);
    if (!u_pos && v_pos) return lv <= ru && lu <= rv; // [ru, lu] inside [lv, rv]
    if (u_pos && !v_pos) return lu <= rv && lv <= ru;
    return false;
}

} // namespace

std::optional<OracleArrangement> oracle_staircase(const BinaryMatrix& m, int max_side) {
    if (m.rows() > max_side || m.cols() > max_side)
        throw cap_exceeded("oracle_staircase cap " + std::to_string(max_side) + " exceeded");
    auto cells = to_cells(m);
    std::vector<int> rp(static_cast<size_t>(m.rows())), cp(static_cast<size_t>(m.cols()));
    std::iota(rp.begin(), rp.end(), 0);
    do {
        std::iota(cp.begin(), cp.end(), 0);
        do {
            if (plain_staircase(apply_perms(cells, rp, cp))) return OracleArrangement{rp, cp};
        } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    return std::nullopt;
}

namespace {

struct GridSearch {
    int n;                         // vertices
    int maxval;                    // endpoints range over 0..maxval
    std::vector<int> ls, rs;       // assignment under construction
    std::vector<int> order;        // assignment order
    // required[u][v]: 1 edge, 0 non-edge, -1 unconstrained
    std::vector<std::vector<int>> required;

    bool consistent(int u, size_t upto) {
        for (size_t t = 0; t < upto; t++) {
            int v = order[t];
            int need = required[static_cast<size_t>(u)][static_cast<size_t>(v)];
            if (need == -1) continue;
            bool adj = plain_adjacent(ls[static_cast<size_t>(u)], rs[static_cast<size_t>(u)],
                                      ls[static_cast<size_t>(v)], rs[static_cast<size_t>(v)]);
            if (adj != (need == 1)) return false;
        }
        return true;
    }

    bool search(size_t k) {
        if (k == order.size()) return true;
        int u = order[k];
        for (int l = 0; l <= maxval; l++)
            for (int r = 0; r <= maxval; r++) {
                ls[static_cast<size_t>(u)] = l;
                rs[static_cast<size_t>(u)] = r;
                if (consistent(u, k) && search(k + 1)) return true;
            }
        return false;
    }
};

} // namespace

std::optional<Representation> oracle_signed_interval_bigraph(const Bigraph& b, int max_total) {
    int nx = b.x_size(), ny = b.y_size(), n = nx + ny;
    if (n > max_total) throw cap_exceeded("oracle_signed_interval_bigraph cap " + std::to_string(max_total) + " exceeded");
    GridSearch gs;
    gs.n = n;
    gs.maxval = n;
    gs.ls.assign(static_cast<size_t>(n), 0);
    gs.rs.assign(static_cast<size_t>(n), 0);
    gs.required.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int i = 0; i < nx; i++)
        for (int j = 0; j < ny; j++) {
            gs.required[static_cast<size_t>(i)][static_cast<size_t>(nx + j)] = b.adjacent(i, j) ? 1 : 0;
            gs.required[static_cast<size_t>(nx + j)][static_cast<size_t>(i)] = b.adjacent(i, j) ? 1 : 0;
        }
    // interleave the sides so constraints bind early
    for (int k = 0; k < std::max(nx, ny); k++) {
        if (k < nx) gs.order.push_back(k);
        if (k < ny) gs.order.push_back(nx + k);
    }
    if (!gs.search(0)) return std::nullopt;
    Representation rep;
    rep.kind = RepKind::bigraph;
    rep.x_count = nx;
    rep.vertices = b.x_labels();
    rep.vertices.insert(rep.vertices.end(), b.y_labels().begin(), b.y_labels().end());
    for (int u = 0; u < n; u++) rep.intervals.push_back({gs.ls[static_cast<size_t>(u)], gs.rs[static_cast<size_t>(u)]});
    return rep;
}

std::optional<Representation> oracle_cott(const Graph& g, int grid_cap, int perm_cap) {
    if (g.has_loop_flags()) throw std::invalid_argument("oracle_cott expects a graph without prescribed loops");
    int n = g.size();
    if (n <= grid_cap) {
        GridSearch gs;
        gs.n = n;
        gs.maxval = n;
        gs.ls.assign(static_cast<size_t>(n), 0);
        gs.rs.assign(static_cast<size_t>(n), 0);
        gs.required.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
        for (int u = 0; u < n; u++)
            for (int v = 0; v < n; v++)
                if (u != v) gs.required[static_cast<size_t>(u)][static_cast<size_t>(v)] = g.adjacent(u, v) ? 1 : 0;
        for (int u = 0; u < n; u++) gs.order.push_back(u);
        if (!gs.search(0)) return std::nullopt;
        Representation rep;
        rep.kind = RepKind::graph;
        rep.x_count = n;
        rep.vertices = g.labels();
        for (int u = 0; u < n; u++) rep.intervals.push_back({gs.ls[static_cast<size_t>(u)], gs.rs[static_cast<size_t>(u)]});
        return rep;
    }
    if (n > perm_cap) throw cap_exceeded("oracle_cott cap " + std::to_string(perm_cap) + " exceeded");
    // diagonal x simultaneous permutation route
    std::vector<std::vector<int>> base(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int u = 0; u < n; u++)
        for (int v = 0; v < n; v++)
            if (u != v && g.adjacent(u, v)) base[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
    for (long long diag = 0; diag < (1LL << n); diag++) {
        auto cells = base;
        for (int u = 0; u < n; u++) cells[static_cast<size_t>(u)][static_cast<size_t>(u)] = (diag >> u) & 1 ? 1 : 0;
        std::vector<int> p(static_cast<size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do {
            auto arranged = apply_perms(cells, p, p);
            if (!plain_staircase(arranged)) continue;
            // interval of the vertex at position i: [i+1, column of its last 1 + 1]
            std::vector<int> ls(static_cast<size_t>(n)), rs(static_cast<size_t>(n));
            for (int pos = 0; pos < n; pos++) {
                int last = 0;
                for (int j = 0; j < n; j++)
                    if (arranged[static_cast<size_t>(pos)][static_cast<size_t>(j)] == 1) last = j + 1;
                ls[static_cast<size_t>(p[static_cast<size_t>(pos)])] = pos + 1;
                rs[static_cast<size_t>(p[static_cast<size_t>(pos)])] = last;
            }
            bool ok = true;
            for (int u = 0; u < n && ok; u++)
                for (int v = u + 1; v < n && ok; v++)
                    if (plain_adjacent(ls[static_cast<size_t>(u)], rs[static_cast<size_t>(u)], ls[static_cast<size_t>(v)],
                                       rs[static_cast<size_t>(v)]) != g.adjacent(u, v))
                        ok = false;
            if (!ok) continue;
            Representation rep;
            rep.kind = RepKind::graph;
            rep.x_count = n;
            rep.vertices = g.labels();
            for (int u = 0; u < n; u++) rep.intervals.push_back({ls[static_cast<size_t>(u)], rs[static_cast<size_t>(u)]});
            return rep;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return std::nullopt;
}

namespace {

// zeros in raster order; every zero right of an R must be R, every zero
// below a C must be C, and an R (C) may not have a 1 anywhere to its right
// (below).
struct PlainZeroPartition {
    const std::vector<std::vector<int>>& cells;
    std::vector<std::pair<int, int>> zeros;
    std::vector<int> colors; // 1 R, 2 C

    explicit PlainZeroPartition(const std::vector<std::vector<int>>& m) : cells(m) {
        for (size_t i = 0; i < cells.size(); i++)
            for (size_t j = 0; j < cells[i].size(); j++)
                if (cells[i][j] == 0) zeros.push_back({static_cast<int>(i), static_cast<int>(j)});
        colors.assign(zeros.size(), 0);
    }

    bool legal(size_t k, int color) {
        auto [i, j] = zeros[k];
        size_t c = cells[0].size(), r = cells.size();
        if (color == 1) {
            for (size_t l = static_cast<size_t>(j) + 1; l < c; l++)
                if (cells[static_cast<size_t>(i)][l] == 1) return false;
        } else {
            for (size_t t = static_cast<size_t>(i) + 1; t < r; t++)
                if (cells[t][static_cast<size_t>(j)] == 1) return false;
        }
        for (size_t t = 0; t < k; t++) {
            auto [pi, pj] = zeros[t];
            if (pi == i && pj < j && colors[t] == 1 && color != 1) return false; // right of an R
            if (pj == j && pi < i && colors[t] == 2 && color != 2) return false; // below a C
        }
        return true;
    }

    bool search(size_t k) {
        if (k == zeros.size()) return true;
        for (int color : {1, 2}) {
            if (!legal(k, color)) continue;
            colors[k] = color;
            if (search(k + 1)) return true;
        }
        colors[k] = 0;
        return false;
    }
};

} // namespace

bool oracle_interval_bigraph(const Bigraph& b, int max_side) {
    if (b.x_size() > max_side || b.y_size() > max_side)
        throw cap_exceeded("oracle_interval_bigraph cap " + std::to_string(max_side) + " exceeded");
    auto cells = to_cells(biadjacency(b));
    if (cells.empty() || cells[0].empty()) return true;
    std::vector<int> rp(static_cast<size_t>(b.x_size())), cp(static_cast<size_t>(b.y_size()));
    std::iota(rp.begin(), rp.end(), 0);
    do {
        std::iota(cp.begin(), cp.end(), 0);
        do {
            auto arranged = apply_perms(cells, rp, cp);
            PlainZeroPartition zp(arranged);
            if (zp.search(0)) return true;
        } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    return false;
}

} // namespace ferrerslab
