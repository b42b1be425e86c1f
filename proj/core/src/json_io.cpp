#include "claw/json_io.hpp"

#include <fstream>

namespace claw {

json to_json(const VertexSet& s) { return json(s.to_vector()); }

VertexSet vertexset_from_json(const json& j, int n) {
    VertexSet s(n);
    for (int v : j.get<std::vector<int>>()) s.add(v);
    return s;
}

json to_json(const IntervalRepresentation& rep) {
    json j;
    j["kind"] = rep.kind == IntervalRepresentation::Kind::Linear ? "linear" : "circular";
    j["order"] = rep.order;
    j["intervals"] = json::array();
    for (auto [a, b] : rep.intervals) j["intervals"].push_back({a, b});
    return j;
}

IntervalRepresentation interval_from_json(const json& j) {
    IntervalRepresentation rep;
    rep.kind = j.at("kind") == "linear" ? IntervalRepresentation::Kind::Linear
                                        : IntervalRepresentation::Kind::Circular;
    rep.order = j.at("order").get<std::vector<int>>();
    for (const auto& iv : j.at("intervals"))
        rep.intervals.emplace_back(iv.at(0).get<int>(), iv.at(1).get<int>());
    return rep;
}

json to_json(const ThickeningSpec& spec) {
    json j;
    j["family"] = family_name(spec.family);
    j["base_n"] = spec.base.n();
    j["base_edges"] = json::array();
    for (auto [u, v] : spec.base.edges()) j["base_edges"].push_back({u, v});
    j["multiplicity"] = spec.multiplicity;
    j["fuzzy"] = json::array();
    for (const auto& f : spec.fuzzy) {
        json e;
        e["u"] = f.u;
        e["v"] = f.v;
        e["removed"] = json::array();
        for (auto [a, b] : f.removed) e["removed"].push_back({a, b});
        j["fuzzy"].push_back(e);
    }
    return j;
}

ThickeningSpec thickening_from_json(const json& j) {
    ThickeningSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    spec.base = Graph(j.at("base_n").get<int>());
    for (const auto& e : j.at("base_edges"))
        spec.base.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    spec.multiplicity = j.at("multiplicity").get<std::vector<int>>();
    for (const auto& e : j.at("fuzzy")) {
        FuzzyEdge f;
        f.u = e.at("u").get<int>();
        f.v = e.at("v").get<int>();
        for (const auto& p : e.at("removed"))
            f.removed.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        spec.fuzzy.push_back(std::move(f));
    }
    return spec;
}

json to_json(const JoinAnnotation& ann, int) {
    json j;
    j["kind"] = join_kind_name(ann.kind);
    j["x1"] = to_json(ann.x1);
    j["y1"] = to_json(ann.y1);
    j["x2"] = to_json(ann.x2);
    j["y2"] = to_json(ann.y2);
    json labels = json::object();
    for (const auto& [name, set] : ann.strip_labels) labels[name] = to_json(set);
    j["labels"] = labels;
    if (!ann.strip_order.empty()) j["order"] = ann.strip_order;
    return j;
}

JoinAnnotation join_from_json(const json& j, int n) {
    JoinAnnotation ann;
    ann.kind = join_kind_from_name(j.at("kind").get<std::string>());
    ann.x1 = vertexset_from_json(j.at("x1"), n);
    ann.y1 = vertexset_from_json(j.at("y1"), n);
    ann.x2 = vertexset_from_json(j.at("x2"), n);
    ann.y2 = vertexset_from_json(j.at("y2"), n);
    for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it)
        ann.strip_labels[it.key()] = vertexset_from_json(it.value(), n);
    if (j.contains("order")) ann.strip_order = j.at("order").get<std::vector<int>>();
    return ann;
}

json to_json(const Annotation& ann, int n) {
    json j;
    j["n"] = n;
    if (ann.interval) j["interval"] = to_json(*ann.interval);
    if (ann.thickening) j["thickening"] = to_json(*ann.thickening);
    if (ann.join) j["join"] = to_json(*ann.join, n);
    if (ann.three_cliques) {
        j["three_cliques"] = {to_json(ann.three_cliques->a), to_json(ann.three_cliques->b),
                              to_json(ann.three_cliques->c)};
    }
    return j;
}

Annotation annotation_from_json(const json& j) {
    Annotation ann;
    int n = j.at("n").get<int>();
    if (j.contains("interval")) ann.interval = interval_from_json(j.at("interval"));
    if (j.contains("thickening")) ann.thickening = thickening_from_json(j.at("thickening"));
    if (j.contains("join")) ann.join = join_from_json(j.at("join"), n);
    if (j.contains("three_cliques")) {
        ThreeCliques t;
        t.a = vertexset_from_json(j.at("three_cliques").at(0), n);
        t.b = vertexset_from_json(j.at("three_cliques").at(1), n);
        t.c = vertexset_from_json(j.at("three_cliques").at(2), n);
        ann.three_cliques = std::move(t);
    }
    return ann;
}

json to_json(const Coloring& c) { return json(c.color); }

Coloring coloring_from_json(const json& j) {
    Coloring c;
    c.color = j.get<std::vector<int>>();
    return c;
}

json to_json(const reduce::ReductionTrace& trace, int n) {
    json steps = json::array();
    for (const auto& step : trace.steps) {
        json s;
        s["a"] = to_json(step.a);
        s["b"] = to_json(step.b);
        s["kept_clique"] = to_json(step.kept_clique);
        s["removed_edges"] = json::array();
        for (auto [u, v] : step.removed_edges) s["removed_edges"].push_back({u, v});
        steps.push_back(s);
    }
    return json{{"n", n}, {"steps", steps}};
}

reduce::ReductionTrace trace_from_json(const json& j, int n) {
    reduce::ReductionTrace trace;
    for (const auto& s : j.at("steps")) {
        reduce::ReductionStep step;
        step.a = vertexset_from_json(s.at("a"), n);
        step.b = vertexset_from_json(s.at("b"), n);
        step.kept_clique = vertexset_from_json(s.at("kept_clique"), n);
        for (const auto& e : s.at("removed_edges"))
            step.removed_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

json to_json(const BoundReport& r) {
    json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["max_degree"] = r.max_degree;
    j["omega"] = r.omega;
    j["alpha"] = r.alpha;
    j["gamma"] = r.gamma;
    j["gamma_local"] = r.gamma_local;
    if (r.chi) j["chi"] = *r.chi;
    if (r.chi_f) j["chi_f"] = *r.chi_f;
    if (r.colors_used) j["colors_used"] = *r.colors_used;
    json verdicts = json::object();
    for (const auto& v : r.verdicts) verdicts[v.name] = v.pass;
    j["verdicts"] = verdicts;
    return j;
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    in >> j;
    return j;
}

} // namespace claw
