#include "ferrerslab/isomorphism.hpp"

#include <algorithm>

namespace ferrerslab {

namespace {

// Pattern vertices ordered so each one (after the first) touches an earlier
// one when possible; ties by descending degree.
std::vector<int> search_order(const Graph& pattern) {
    int n = pattern.size();
    std::vector<int> order;
    std::vector<bool> placed(static_cast<size_t>(n), false);
    for (int step = 0; step < n; step++) {
        int best = -1;
        int best_anchored = -1, best_deg = -1;
        for (int v = 0; v < n; v++) {
            if (placed[static_cast<size_t>(v)]) continue;
            int anchored = 0;
            for (int u : order)
                if (pattern.adjacent(u, v)) anchored++;
            if (anchored > best_anchored || (anchored == best_anchored && pattern.degree(v) > best_deg)) {
                best = v;
                best_anchored = anchored;
                best_deg = pattern.degree(v);
            }
        }
        order.push_back(best);
        placed[static_cast<size_t>(best)] = true;
    }
    return order;
}

struct Backtracker {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;
    std::vector<int> map;       // pattern -> host or -1
    std::uint64_t used = 0;     // host vertices taken
    bool exact_degree;          // isomorphism mode
    const std::vector<int>* host_color = nullptr;
    const std::vector<int>* pattern_color = nullptr;

    bool run(size_t k) {
        if (k == order.size()) return true;
        int p = order[k];
        for (int h = 0; h < host.size(); h++) {
            if ((used >> h) & 1u) continue;
            if (exact_degree ? host.degree(h) != pattern.degree(p) : host.degree(h) < pattern.degree(p)) continue;
            if (host_color && (*host_color)[static_cast<size_t>(h)] != (*pattern_color)[static_cast<size_t>(p)]) continue;
            bool ok = true;
            for (size_t t = 0; t < k; t++) {
                int q = order[t];
                if (pattern.adjacent(p, q) != host.adjacent(h, map[static_cast<size_t>(q)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<size_t>(p)] = h;
            used |= std::uint64_t{1} << h;
            if (run(k + 1)) return true;
            map[static_cast<size_t>(p)] = -1;
            used &= ~(std::uint64_t{1} << h);
        }
        return false;
    }
};

std::optional<Embedding> embed(const Graph& host, const Graph& pattern, bool exact_degree,
                               const std::vector<int>* host_color = nullptr,
                               const std::vector<int>* pattern_color = nullptr) {
    if (pattern.size() > host.size()) return std::nullopt;
    Backtracker bt{host, pattern, search_order(pattern),
                   std::vector<int>(static_cast<size_t>(pattern.size()), -1), 0, exact_degree,
                   host_color, pattern_color};
    if (!bt.run(0)) return std::nullopt;
    return Embedding{bt.map};
}

} // namespace

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern, int pattern_cap) {
    if (pattern.size() > pattern_cap)
        throw cap_exceeded("pattern has " + std::to_string(pattern.size()) + " vertices, cap is " +
                           std::to_string(pattern_cap));
    auto e = embed(host, pattern, false);
    if (e && !verify_embedding(host, pattern, *e)) throw std::logic_error("embedding failed verification");
    return e;
}

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != pattern.size()) return false;
    std::uint64_t seen = 0;
    for (int h : e.map) {
        if (h < 0 || h >= host.size() || ((seen >> h) & 1u)) return false;
        seen |= std::uint64_t{1} << h;
    }
    for (int p = 0; p < pattern.size(); p++)
        for (int q = p + 1; q < pattern.size(); q++)
            if (pattern.adjacent(p, q) != host.adjacent(e.map[static_cast<size_t>(p)], e.map[static_cast<size_t>(q)]))
                return false;
    return true;
}

bool is_isomorphic(const Graph& a, const Graph& b, int cap) {
    if (a.size() > cap || b.size() > cap)
        throw cap_exceeded("isomorphism cap " + std::to_string(cap) + " exceeded");
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.size(); v++) da.push_back(a.degree(v));
    for (int v = 0; v < b.size(); v++) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return embed(b, a, true).has_value();
}

bool is_isomorphic(const Bigraph& a, const Bigraph& b, int cap) {
    if (a.x_size() + a.y_size() > cap || b.x_size() + b.y_size() > cap)
        throw cap_exceeded("isomorphism cap " + std::to_string(cap) + " exceeded");
    Graph ga = a.underlying_graph(), gb = b.underlying_graph();
    if (ga.size() != gb.size() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> ca(static_cast<size_t>(ga.size()), 1), cb(static_cast<size_t>(gb.size()), 1);
    for (int i = 0; i < a.x_size(); i++) ca[static_cast<size_t>(i)] = 0;
    for (int i = 0; i < b.x_size(); i++) cb[static_cast<size_t>(i)] = 0;
    // straight orientation X->X, then flipped X->Y
    if (a.x_size() == b.x_size() && a.y_size() == b.y_size())
        if (embed(gb, ga, true, &cb, &ca)) return true;
    if (a.x_size() == b.y_size() && a.y_size() == b.x_size()) {
        std::vector<int> flipped(ca.size());
        for (size_t i = 0; i < ca.size(); i++) flipped[i] = 1 - ca[i];
        if (embed(gb, ga, true, &cb, &flipped)) return true;
    }
    return false;
}

} // namespace ferrerslab
