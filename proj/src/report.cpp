#include "ferrerslab/report.hpp"

#include "ferrerslab/families.hpp"

namespace ferrerslab {

using nlohmann::json;

namespace {
constexpr const char* kReportSchema = "ferrerslab-report/1";
constexpr const char* kRepresentationSchema = "ferrerslab-representation/1";
} // namespace

json to_json(const Permutation& p) {
    json arr = json::array();
    for (int i = 0; i < p.size(); i++) arr.push_back(p[i] + 1);
    return arr;
}

json to_json(const Arrangement& a) { return json{{"rows", to_json(a.rows)}, {"cols", to_json(a.cols)}}; }

json to_json(const FerrersCover& c) {
    return json{{"f1", c.f1.to_strings()}, {"f2", c.f2.to_strings()}, {"union_complete", c.union_complete}};
}

json to_json(const ZeroPartition& zp) {
    json arr = json::array();
    for (const auto& [cell, color] : zp.colors)
        arr.push_back(json::array({cell.row + 1, cell.col + 1, color == ZeroColor::R ? "R" : "C"}));
    return arr;
}

json zero_cells_json(const std::vector<ZeroCell>& cells) {
    json arr = json::array();
    for (const auto& c : cells) arr.push_back(json::array({c.row + 1, c.col + 1}));
    return arr;
}

json to_json(const Representation& rep) {
    json intervals = json::array();
    for (int v = 0; v < rep.size(); v++) {
        const SignedInterval& s = rep.intervals[static_cast<size_t>(v)];
        intervals.push_back(json{{"vertex", rep.vertices[static_cast<size_t>(v)]},
                                 {"l", s.l},
                                 {"r", s.r},
                                 {"sign", s.positive() ? "+" : "-"}});
    }
    return json{{"schema", kRepresentationSchema},
                {"kind", rep.kind == RepKind::graph ? "graph" : "bigraph"},
                {"x_count", rep.x_count},
                {"intervals", intervals}};
}

Representation representation_from_json(const json& j) {
    if (j.value("schema", "") != kRepresentationSchema)
        throw std::runtime_error("unsupported representation schema");
    Representation rep;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "graph")
        rep.kind = RepKind::graph;
    else if (kind == "bigraph")
        rep.kind = RepKind::bigraph;
    else
        throw std::runtime_error("unknown representation kind '" + kind + "'");
    rep.x_count = j.at("x_count").get<int>();
    for (const auto& item : j.at("intervals")) {
        SignedInterval s{item.at("l").get<int>(), item.at("r").get<int>()};
        std::string sign = item.value("sign", s.positive() ? "+" : "-");
        if ((sign == "+") != s.positive()) throw std::runtime_error("sign flag inconsistent with endpoints");
        rep.vertices.push_back(item.at("vertex").get<std::string>());
        rep.intervals.push_back(s);
    }
    if (rep.kind == RepKind::graph) rep.x_count = rep.size();
    if (rep.x_count < 0 || rep.x_count > rep.size()) throw std::runtime_error("x_count out of range");
    return rep;
}

json make_report(const std::string& kind, const std::string& answer) {
    return json{{"schema", kReportSchema}, {"kind", kind}, {"answer", answer}};
}

json report_ferrers(bool ferrers) { return make_report("ferrers", ferrers ? "yes" : "no"); }

json report_fdim2(const Fdim2Decision& d) {
    json r = make_report("fdim2", d.yes ? "yes" : "no");
    if (d.yes)
        r["certificate"] = json{{"arrangement", to_json(d.arrangement)}, {"cover", to_json(d.cover)}};
    else
        r["witness"] = json{{"odd_cycle", zero_cells_json(d.odd_cycle)}};
    return r;
}

json report_interval_bigraph(const IntervalBigraphDecision& d) {
    json r = make_report("interval-bigraph", d.yes ? "yes" : "no");
    if (d.yes)
        r["certificate"] = json{{"arrangement", to_json(d.arrangement)},
                                {"zero_partition", to_json(d.partition)},
                                {"representation", to_json(d.representation)}};
    else
        r["witness"] = json{{"note", "exhaustive over arrangements: no zero partition exists"}};
    return r;
}

json report_signed_bigraph(const SignedBigraphDecision& d) {
    json r = make_report("signed-bigraph", d.yes ? "yes" : "no");
    if (d.yes)
        r["certificate"] = json{{"representation", to_json(d.representation)}};
    else
        r["witness"] = json{{"odd_cycle", zero_cells_json(d.odd_cycle)}};
    return r;
}

json report_cott(const CottDecision& d, const Graph& g) {
    json r = make_report("co-tt", d.yes ? "yes" : "no");
    if (d.yes) {
        json diag = json::array();
        for (bool b : d.diagonal) diag.push_back(b ? 1 : 0);
        r["certificate"] = json{{"representation", to_json(d.representation)},
                                {"diagonal", diag},
                                {"order", to_json(d.order)}};
        return r;
    }
    json w;
    switch (d.witness_kind) {
        case CottWitnessKind::hole: {
            json cyc = json::array();
            for (int v : d.hole) cyc.push_back(g.label(v));
            w = json{{"kind", "chordless_cycle"}, {"cycle", cyc}};
            break;
        }
        case CottWitnessKind::sun: {
            json m = json::object();
            Graph sun = gen_sun(d.sun_k);
            for (int p = 0; p < sun.size(); p++)
                m[sun.label(p)] = g.label(d.sun_embedding.map[static_cast<size_t>(p)]);
            w = json{{"kind", "sun"}, {"k", d.sun_k}, {"embedding", m}};
            break;
        }
        default:
            w = json{{"kind", "exhausted"},
                     {"note", "no diagonal assignment admits a simultaneous staircase arrangement"}};
    }
    r["witness"] = w;
    return r;
}

} // namespace ferrerslab
