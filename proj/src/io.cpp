#include "ferrerslab/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ferrerslab {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        no++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{no, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

int parse_int(const std::string& tok, int line) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + tok + "'", line);
    }
    if (pos != tok.size()) throw parse_error("trailing characters in integer '" + tok + "'", line);
    return v;
}

int vertex_index(const std::string& tok, int n, int line, const char* what) {
    int v = parse_int(tok, line);
    if (v < 1 || v > n) throw parse_error(std::string(what) + " index " + tok + " out of range 1.." + std::to_string(n), line);
    return v - 1;
}

} // namespace

Graph parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw parse_error("empty input, expected 'graph n' header", 1);
    const Line& h = lines[0];
    if (h.tokens[0] != "graph" || h.tokens.size() != 2)
        throw parse_error("malformed header, expected 'graph n'", h.number);
    int n = parse_int(h.tokens[1], h.number);
    if (n < 0) throw parse_error("negative vertex count", h.number);
    Graph g(n);
    for (size_t k = 1; k < lines.size(); k++) {
        const Line& l = lines[k];
        if (l.tokens[0] == "loop") {
            if (l.tokens.size() != 2) throw parse_error("malformed loop line, expected 'loop v'", l.number);
            int v = vertex_index(l.tokens[1], n, l.number, "vertex");
            g.set_loop(v, true);
            continue;
        }
        if (l.tokens.size() != 2) throw parse_error("malformed edge line, expected 'u v'", l.number);
        int u = vertex_index(l.tokens[0], n, l.number, "vertex");
        int v = vertex_index(l.tokens[1], n, l.number, "vertex");
        if (u == v) throw parse_error("self edge " + l.tokens[0] + " " + l.tokens[1] + " (use 'loop v')", l.number);
        if (g.adjacent(u, v)) throw parse_error("duplicate edge " + l.tokens[0] + " " + l.tokens[1], l.number);
        g.add_edge(u, v);
    }
    return g;
}

Bigraph parse_bigraph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw parse_error("empty input, expected 'bigraph nX nY' header", 1);
    const Line& h = lines[0];
    if (h.tokens[0] != "bigraph" || h.tokens.size() != 3)
        throw parse_error("malformed header, expected 'bigraph nX nY'", h.number);
    int nx = parse_int(h.tokens[1], h.number);
    int ny = parse_int(h.tokens[2], h.number);
    if (nx < 0 || ny < 0) throw parse_error("negative side size", h.number);
    Bigraph b(nx, ny);
    for (size_t k = 1; k < lines.size(); k++) {
        const Line& l = lines[k];
        if (l.tokens.size() != 2) throw parse_error("malformed edge line, expected 'xi yj'", l.number);
        int xi = vertex_index(l.tokens[0], nx, l.number, "x");
        int yj = vertex_index(l.tokens[1], ny, l.number, "y");
        if (b.adjacent(xi, yj)) throw parse_error("duplicate edge " + l.tokens[0] + " " + l.tokens[1], l.number);
        b.add_edge(xi, yj);
    }
    return b;
}

BinaryMatrix parse_matrix(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw parse_error("empty input, expected 'matrix r c' header", 1);
    const Line& h = lines[0];
    if (h.tokens[0] != "matrix" || h.tokens.size() != 3)
        throw parse_error("malformed header, expected 'matrix r c'", h.number);
    int r = parse_int(h.tokens[1], h.number);
    int c = parse_int(h.tokens[2], h.number);
    if (r < 0 || c < 0) throw parse_error("negative matrix dimension", h.number);
    if (static_cast<int>(lines.size()) - 1 != r)
        throw parse_error("expected " + std::to_string(r) + " matrix rows, got " + std::to_string(lines.size() - 1),
                          lines.back().number);
    BinaryMatrix m(r, c);
    for (int i = 0; i < r; i++) {
        const Line& l = lines[static_cast<size_t>(i) + 1];
        if (l.tokens.size() != 1 || static_cast<int>(l.tokens[0].size()) != c)
            throw parse_error("expected a row of exactly " + std::to_string(c) + " characters", l.number);
        for (int j = 0; j < c; j++) {
            char ch = l.tokens[0][static_cast<size_t>(j)];
            if (ch != '0' && ch != '1') throw parse_error(std::string("matrix entry '") + ch + "' is not 0/1", l.number);
            if (ch == '1') m.set(i, j, true);
        }
    }
    return m;
}

std::string sniff_kind(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw parse_error("empty input", 1);
    const std::string& kw = lines[0].tokens[0];
    if (kw != "graph" && kw != "bigraph" && kw != "matrix")
        throw parse_error("unknown header keyword '" + kw + "'", lines[0].number);
    return kw;
}

std::string serialize(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.size() << "\n";
    if (g.has_loop_flags()) {
        for (int v = 0; v < g.size(); v++)
            if (g.loop(v)) out << "loop " << v + 1 << "\n";
    }
    for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string serialize(const Bigraph& b) {
    std::ostringstream out;
    out << "bigraph " << b.x_size() << " " << b.y_size() << "\n";
    for (auto [i, j] : b.edges()) out << i + 1 << " " << j + 1 << "\n";
    return out.str();
}

std::string serialize(const BinaryMatrix& m) {
    std::ostringstream out;
    out << "matrix " << m.rows() << " " << m.cols() << "\n";
    for (const auto& row : m.to_strings()) out << row << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename into " + path);
}

} // namespace ferrerslab
