#include <cstdlib>
#include <future>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ferrerslab/families.hpp"
#include "ferrerslab/ferrers.hpp"
#include "ferrerslab/io.hpp"
#include "ferrerslab/oracle.hpp"
#include "ferrerslab/report.hpp"
#include "ferrerslab/signed_interval.hpp"

using namespace ferrerslab;
using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file_atomic(out_path, text);
}

Bigraph load_bigraph(const std::string& path) {
    std::string text = read_file(path);
    std::string kind = sniff_kind(text);
    if (kind == "bigraph") return parse_bigraph(text);
    if (kind == "matrix") return matrix_to_bigraph(parse_matrix(text));
    throw std::runtime_error(path + ": expected a bigraph or matrix file, got '" + kind + "'");
}

BinaryMatrix load_matrix(const std::string& path) {
    std::string text = read_file(path);
    std::string kind = sniff_kind(text);
    if (kind == "matrix") return parse_matrix(text);
    if (kind == "bigraph") return biadjacency(parse_bigraph(text));
    throw std::runtime_error(path + ": expected a matrix or bigraph file, got '" + kind + "'");
}

int cmd_recognize(const std::string& kind, const std::string& path, const std::string& report_path, int max_side,
                  int max_vertices) {
    json report;
    int exit_code = kExitError;
    if (kind == "ferrers") {
        bool yes = is_ferrers(load_matrix(path));
        report = report_ferrers(yes);
        exit_code = yes ? kExitYes : kExitNo;
    } else if (kind == "fdim2") {
        Fdim2Decision d = fdim_at_most_2(load_matrix(path));
        report = report_fdim2(d);
        exit_code = d.yes ? kExitYes : kExitNo;
    } else if (kind == "interval-bigraph") {
        IntervalBigraphDecision d = is_interval_bigraph(load_bigraph(path), max_side);
        report = report_interval_bigraph(d);
        exit_code = d.yes ? kExitYes : kExitNo;
    } else if (kind == "signed-bigraph") {
        SignedBigraphDecision d = recognize_signed_interval_bigraph(load_bigraph(path));
        report = report_signed_bigraph(d);
        exit_code = d.yes ? kExitYes : kExitNo;
    } else if (kind == "co-tt") {
        Graph g = parse_graph(read_file(path));
        CottDecision d = recognize_cott(g, CottOptions{max_vertices, 12});
        report = report_cott(d, g);
        exit_code = d.yes ? kExitYes : kExitNo;
    } else {
        throw std::runtime_error("unknown recognizer kind '" + kind + "'");
    }
    emit(report, report_path);
    return exit_code;
}

int cmd_represent(const std::string& path, const std::string& out_path, int max_vertices) {
    std::string text = read_file(path);
    std::string kind = sniff_kind(text);
    if (kind == "graph") {
        Graph g = parse_graph(text);
        CottDecision d = recognize_cott(g, CottOptions{max_vertices, 12});
        if (!d.yes) {
            emit(report_cott(d, g), out_path);
            return kExitNo;
        }
        emit(to_json(d.representation), out_path);
        return kExitYes;
    }
    Bigraph b = kind == "bigraph" ? parse_bigraph(text) : matrix_to_bigraph(parse_matrix(text));
    SignedBigraphDecision d = recognize_signed_interval_bigraph(b);
    if (!d.yes) {
        emit(report_signed_bigraph(d), out_path);
        return kExitNo;
    }
    emit(to_json(d.representation), out_path);
    return kExitYes;
}

int cmd_verify(const std::string& object_path, const std::string& rep_path) {
    std::string text = read_file(object_path);
    std::string kind = sniff_kind(text);
    Representation rep = representation_from_json(json::parse(read_file(rep_path)));
    if (kind == "graph") {
        if (rep.kind != RepKind::graph) throw std::runtime_error("representation kind mismatch: expected graph");
        Graph g = parse_graph(text);
        if (g.size() != rep.size()) throw std::runtime_error("vertex-set mismatch");
        std::vector<int> at(static_cast<size_t>(g.size()), -1); // rep position of each graph vertex
        for (int p = 0; p < rep.size(); p++) {
            bool hit = false;
            for (int v = 0; v < g.size() && !hit; v++)
                if (at[static_cast<size_t>(v)] == -1 && g.label(v) == rep.vertices[static_cast<size_t>(p)]) {
                    at[static_cast<size_t>(v)] = p;
                    hit = true;
                }
            if (!hit)
                throw std::runtime_error("vertex-set mismatch: unknown vertex '" + rep.vertices[static_cast<size_t>(p)] + "'");
        }
        for (int u = 0; u < g.size(); u++) {
            if (g.has_loop_flags() &&
                g.loop(u) != rep.intervals[static_cast<size_t>(at[static_cast<size_t>(u)])].positive())
                return kExitNo;
            for (int v = u + 1; v < g.size(); v++) {
                bool adj = adjacent(rep.intervals[static_cast<size_t>(at[static_cast<size_t>(u)])],
                                    rep.intervals[static_cast<size_t>(at[static_cast<size_t>(v)])]);
                if (adj != g.adjacent(u, v)) return kExitNo;
            }
        }
        return kExitYes;
    }
    Bigraph b = kind == "bigraph" ? parse_bigraph(text) : matrix_to_bigraph(parse_matrix(text));
    if (rep.kind != RepKind::bigraph) throw std::runtime_error("representation kind mismatch: expected bigraph");
    if (rep.x_count != b.x_size() || rep.size() - rep.x_count != b.y_size())
        throw std::runtime_error("vertex-set mismatch");
    Bigraph round = edges_from_representation_bigraph(rep);
    return biadjacency(round) == biadjacency(b) ? kExitYes : kExitNo;
}

int cmd_generate(const std::string& family, int index, const std::string& out_path) {
    auto fam = family_from_name(family);
    if (!fam) throw std::runtime_error("unknown family '" + family + "' (see 'catalog')");
    GeneratedObject obj = generate(FamilyId{*fam, index});
    std::string text = obj.graph ? serialize(*obj.graph) : serialize(*obj.bigraph);
    if (out_path.empty())
        std::cout << text;
    else
        write_file_atomic(out_path, text);
    return kExitYes;
}

int cmd_catalog() {
    std::cout << "C         i >= 3      set system -> incidence bigraph (cycle C_2i)\n"
              << "T         i >= 1      set system -> incidence bigraph\n"
              << "W         i >= 1      set system -> incidence bigraph\n"
              << "D         i >= 1      set system -> incidence bigraph\n"
              << "M         i in 1..3   set system -> incidence bigraph (tabulated)\n"
              << "N         i in 1..3   set system -> incidence bigraph (tabulated)\n"
              << "G1        (no index)  set system -> incidence bigraph\n"
              << "G2        (no index)  set system -> incidence bigraph\n"
              << "G3        (no index)  set system -> incidence bigraph\n"
              << "Pi        i >= 2      graph family P_i\n"
              << "T-graph   (no index)  the graph T\n"
              << "T0-graph  (no index)  the graph T0\n"
              << "P-graph   (no index)  the graph P\n"
              << "sun       k >= 3      the k-sun (trampoline)\n";
    return kExitYes;
}

int cmd_oracle(const std::string& kind, const std::string& path) {
    if (kind == "staircase") {
        auto r = oracle_staircase(load_matrix(path));
        json rep = make_report("oracle-staircase", r ? "yes" : "no");
        if (r) {
            json rows = json::array(), cols = json::array();
            for (int v : r->rows) rows.push_back(v + 1);
            for (int v : r->cols) cols.push_back(v + 1);
            rep["certificate"] = json{{"arrangement", json{{"rows", rows}, {"cols", cols}}}};
        }
        emit(rep, "");
        return r ? kExitYes : kExitNo;
    }
    if (kind == "signed-bigraph") {
        auto r = oracle_signed_interval_bigraph(load_bigraph(path));
        json rep = make_report("oracle-signed-bigraph", r ? "yes" : "no");
        if (r) rep["certificate"] = json{{"representation", to_json(*r)}};
        emit(rep, "");
        return r ? kExitYes : kExitNo;
    }
    if (kind == "co-tt") {
        auto r = oracle_cott(parse_graph(read_file(path)));
        json rep = make_report("oracle-co-tt", r ? "yes" : "no");
        if (r) rep["certificate"] = json{{"representation", to_json(*r)}};
        emit(rep, "");
        return r ? kExitYes : kExitNo;
    }
    if (kind == "interval-bigraph") {
        bool r = oracle_interval_bigraph(load_bigraph(path));
        emit(make_report("oracle-interval-bigraph", r ? "yes" : "no"), "");
        return r ? kExitYes : kExitNo;
    }
    throw std::runtime_error("unknown oracle kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// crosscheck: recognizers against oracles, exhaustive at small sizes and
// seeded samples above, deterministic and parallelizable per instance.

struct CheckTask {
    std::string check;
    BinaryMatrix matrix;
    Graph graph;
    bool is_graph = false;
};

std::string run_task(const CheckTask& t) {
    if (!t.is_graph) {
        const BinaryMatrix& m = t.matrix;
        bool fd = fdim_at_most_2(m).yes;
        bool os = oracle_staircase(m).has_value();
        if (fd != os) return "fdim_at_most_2 != oracle_staircase";
        if (m.rows() + m.cols() <= 8) {
            bool sib = oracle_signed_interval_bigraph(matrix_to_bigraph(m)).has_value();
            if (fd != sib) return "fdim_at_most_2 != oracle_signed_interval_bigraph";
        }
        if (m.rows() <= 6 && m.cols() <= 6) {
            bool iv = is_interval_bigraph(matrix_to_bigraph(m)).yes;
            bool oiv = oracle_interval_bigraph(matrix_to_bigraph(m));
            if (iv != oiv) return "is_interval_bigraph != oracle_interval_bigraph";
            bool cov = ferrers_cover(m, true).has_value();
            if (iv != cov) return "is_interval_bigraph != ferrers_cover(complete union)";
        }
        return "";
    }
    bool rc = recognize_cott(t.graph).yes;
    bool oc = oracle_cott(t.graph).has_value();
    if (rc != oc) return "recognize_cott != oracle_cott";
    return "";
}

int cmd_crosscheck(int max_n, unsigned long long seed, int samples, int threads, const std::string& report_path) {
    std::vector<CheckTask> tasks;
    for (int r = 1; r <= std::min(max_n, 3); r++)
        for (int c = 1; c <= std::min(max_n, 3); c++)
            for (long long bits = 0; bits < (1LL << (r * c)); bits++) {
                CheckTask t;
                t.check = "matrix-exhaustive";
                t.matrix = BinaryMatrix(r, c);
                for (int i = 0; i < r; i++)
                    for (int j = 0; j < c; j++)
                        if ((bits >> (i * c + j)) & 1) t.matrix.set(i, j, true);
                tasks.push_back(std::move(t));
            }
    std::mt19937_64 rng(seed);
    for (int n = 4; n <= max_n; n++)
        for (int s = 0; s < samples; s++) {
            CheckTask t;
            t.check = "matrix-sampled-" + std::to_string(n);
            t.matrix = BinaryMatrix(n, n);
            for (int i = 0; i < n; i++)
                for (int j = 0; j < n; j++)
                    if (rng() & 1) t.matrix.set(i, j, true);
            tasks.push_back(std::move(t));
        }
    for (int n = 1; n <= std::min(max_n, 4); n++) {
        int pairs = n * (n - 1) / 2;
        for (long long bits = 0; bits < (1LL << pairs); bits++) {
            CheckTask t;
            t.check = "graph-exhaustive";
            t.is_graph = true;
            t.graph = Graph(n);
            int k = 0;
            for (int u = 0; u < n; u++)
                for (int v = u + 1; v < n; v++, k++)
                    if ((bits >> k) & 1) t.graph.add_edge(u, v);
            tasks.push_back(std::move(t));
        }
    }
    for (int n = 5; n <= std::min(max_n, 6); n++)
        for (int s = 0; s < samples; s++) {
            CheckTask t;
            t.check = "graph-sampled-" + std::to_string(n);
            t.is_graph = true;
            t.graph = Graph(n);
            for (int u = 0; u < n; u++)
                for (int v = u + 1; v < n; v++)
                    if (rng() & 1) t.graph.add_edge(u, v);
            tasks.push_back(std::move(t));
        }

    // first divergence in task order wins, whatever the thread layout
    size_t n_tasks = tasks.size();
    int workers = std::max(1, threads);
    std::vector<std::future<std::pair<size_t, std::string>>> futures;
    for (int w = 0; w < workers; w++) {
        futures.push_back(std::async(std::launch::async, [&tasks, n_tasks, w, workers]() {
            for (size_t i = static_cast<size_t>(w); i < n_tasks; i += static_cast<size_t>(workers)) {
                std::string d = run_task(tasks[i]);
                if (!d.empty()) return std::make_pair(i, d);
            }
            return std::make_pair(n_tasks, std::string());
        }));
    }
    size_t first = n_tasks;
    std::string what;
    for (auto& f : futures) {
        auto [i, d] = f.get();
        if (i < first) {
            first = i;
            what = d;
        }
    }

    json counts = json::object();
    for (const auto& t : tasks) counts[t.check] = counts.value(t.check, 0) + 1;
    json rep = make_report("crosscheck", first == n_tasks ? "pass" : "divergence");
    rep["max_n"] = max_n;
    rep["seed"] = seed;
    rep["samples"] = samples;
    rep["instances"] = counts;
    if (first != n_tasks) {
        const CheckTask& t = tasks[first];
        json ce{{"check", t.check}, {"divergence", what}};
        if (t.is_graph)
            ce["graph"] = serialize(t.graph);
        else
            ce["matrix"] = t.matrix.to_strings();
        rep["counterexample"] = ce;
    }
    emit(rep, report_path);
    return first == n_tasks ? kExitYes : kExitNo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognizers, certificates and forbidden-structure generators for signed interval graphs and bigraphs"};
    app.require_subcommand(1);

    int default_max_side = 8;
    if (const char* env = std::getenv("FERRERSLAB_MAX_SIDE")) default_max_side = std::atoi(env);

    std::string kind, input, report_path, out_path, rep_path, family;
    int max_side = default_max_side;
    int max_vertices = 12;
    int index = 0;
    int max_n = 3, samples = 200, threads = 1;
    unsigned long long seed = 0;

    auto* rec = app.add_subcommand("recognize", "decide membership and emit a certificate report");
    rec->add_option("kind", kind, "ferrers | fdim2 | interval-bigraph | signed-bigraph | co-tt")->required();
    rec->add_option("input", input, "graph/bigraph/matrix file")->required();
    rec->add_option("--report", report_path, "write the JSON report here (default stdout)");
    rec->add_option("--max-side", max_side, "cap per bigraph side for exhaustive searches");
    rec->add_option("--max-vertices", max_vertices, "cap for the co-TT diagonal search");

    auto* rep = app.add_subcommand("represent", "emit a signed interval representation");
    rep->add_option("input", input, "graph/bigraph/matrix file")->required();
    rep->add_option("--out", out_path, "write the representation JSON here (default stdout)");
    rep->add_option("--max-vertices", max_vertices, "cap for the co-TT diagonal search");

    auto* ver = app.add_subcommand("verify", "check a representation against a graph or bigraph");
    ver->add_option("object", input, "graph/bigraph/matrix file")->required();
    ver->add_option("representation", rep_path, "representation JSON")->required();

    auto* gen = app.add_subcommand("generate", "emit a forbidden-family member");
    gen->add_option("family", family, "family name (see 'catalog')")->required();
    gen->add_option("index", index, "family index where applicable");
    gen->add_option("--out", out_path, "write the file here (default stdout)");

    app.add_subcommand("catalog", "list the generator families");

    auto* cc = app.add_subcommand("crosscheck", "compare recognizers against the brute-force oracles");
    cc->add_option("max_n", max_n, "exhaustive to 3, sampled square sizes up to this")->required();
    cc->add_option("seed", seed, "RNG seed for the sampled instances")->required();
    cc->add_option("--samples", samples, "samples per size class");
    cc->add_option("--threads", threads, "parallel workers (deterministic merge)");
    cc->add_option("--report", report_path, "write the JSON report here (default stdout)");

    auto* orc = app.add_subcommand("oracle", "run a brute-force oracle directly");
    orc->add_option("kind", kind, "staircase | signed-bigraph | co-tt | interval-bigraph")->required();
    orc->add_option("input", input, "graph/bigraph/matrix file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return cmd_recognize(kind, input, report_path, max_side, max_vertices);
        if (rep->parsed()) return cmd_represent(input, out_path, max_vertices);
        if (ver->parsed()) return cmd_verify(input, rep_path);
        if (gen->parsed()) return cmd_generate(family, index, out_path);
        if (app.get_subcommand("catalog")->parsed()) return cmd_catalog();
        if (cc->parsed()) return cmd_crosscheck(max_n, seed, samples, threads, report_path);
        if (orc->parsed()) return cmd_oracle(kind, input);
    } catch (const cap_exceeded& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
