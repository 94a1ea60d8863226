#include "corona/json_io.hpp"

#include <algorithm>

#include "corona/edge_list.hpp"

namespace corona {

using nlohmann::json;

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Equal: return "equal";
        case Relation::UpperBound: return "upper-bound";
        case Relation::LowerBound: return "lower-bound";
        case Relation::Interval: return "interval";
    }
    return "?";
}

json certificate_to_json(const Certificate& c) {
    return std::visit(
        [](const auto& cert) -> json {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, KColoring>) {
                return {{"type", "k-coloring"}, {"k", cert.k}, {"colors", cert.colors}};
            } else if constexpr (std::is_same_v<T, IndependentSet>) {
                return {{"type", "independent-set"}, {"vertices", cert.vertices}};
            } else if constexpr (std::is_same_v<T, VertexCover>) {
                return {{"type", "vertex-cover"}, {"vertices", cert.vertices}};
            } else if constexpr (std::is_same_v<T, DominatingSet>) {
                return {{"type", "dominating-set"}, {"vertices", cert.vertices}};
            } else {
                json edges = json::array();
                for (const Edge& e : cert.edges) edges.push_back({e.u, e.v});
                return {{"type", "matching"}, {"edges", edges}};
            }
        },
        c);
}

Certificate certificate_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "k-coloring")
        return KColoring{j.at("k").get<int>(), j.at("colors").get<std::vector<int>>()};
    if (type == "independent-set")
        return IndependentSet{j.at("vertices").get<std::vector<int>>()};
    if (type == "vertex-cover") return VertexCover{j.at("vertices").get<std::vector<int>>()};
    if (type == "dominating-set")
        return DominatingSet{j.at("vertices").get<std::vector<int>>()};
    if (type == "matching") {
        Matching m;
        for (const auto& e : j.at("edges")) m.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        return m;
    }
    throw std::invalid_argument("unknown certificate type \"" + type + "\"");
}

json prediction_to_json(const Prediction& p) {
    json j{{"relation", relation_name(p.relation)}};
    if (p.relation == Relation::Interval) {
        j["lower"] = p.lower;
        j["upper"] = p.upper;
    } else {
        j["value"] = p.value;
    }
    return j;
}

json instance_to_json(const Instance& inst) {
    json factors = json::array();
    for (const Graph& h : inst.factors) factors.push_back(render_edge_list(h));
    return {{"graph", render_edge_list(inst.g)}, {"factors", factors}};
}

Instance instance_from_json(const json& j) {
    Instance inst;
    inst.g = parse_edge_list(j.at("graph").get<std::string>());
    for (const auto& f : j.at("factors")) inst.factors.push_back(parse_edge_list(f.get<std::string>()));
    return inst;
}

namespace {

// Provenance labels for witness vertices, when the witness lives on the
// product of the embedded instance.
json witness_labels(const Verdict& v) {
    if (!v.witness || !v.witness_instance) return nullptr;
    const auto* set_vertices = [&]() -> const std::vector<int>* {
        if (const auto* s = std::get_if<IndependentSet>(&*v.witness)) return &s->vertices;
        if (const auto* s = std::get_if<VertexCover>(&*v.witness)) return &s->vertices;
        if (const auto* s = std::get_if<DominatingSet>(&*v.witness)) return &s->vertices;
        return nullptr;
    }();
    if (!set_vertices) return nullptr;

    const CoronaGraph cg =
        generalized_edge_corona(v.witness_instance->g, v.witness_instance->factors);
    if (!set_vertices->empty() &&
        *std::max_element(set_vertices->begin(), set_vertices->end()) >=
            cg.graph().vertex_count())
        return nullptr;
    json labels = json::array();
    for (int pv : *set_vertices) labels.push_back(cg.describe_vertex(pv));
    return labels;
}

}  // namespace

json verdict_to_json(const Verdict& v) {
    json j;
    switch (v.kind) {
        case VerdictKind::Holds: j["kind"] = "holds"; break;
        case VerdictKind::Refuted: j["kind"] = "refuted"; break;
        case VerdictKind::Inconclusive: j["kind"] = "inconclusive"; break;
    }
    if (v.prediction) j["prediction"] = prediction_to_json(*v.prediction);
    if (v.observed) j["observed"] = *v.observed;
    if (v.reason) {
        j["reason"] = *v.reason == InconclusiveReason::HypothesisViolation
                          ? "hypothesis-violation"
                          : "solver-bracket";
    }
    if (v.bracket) j["bracket"] = {{"lower", v.bracket->first}, {"upper", v.bracket->second}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.witness) {
        j["witness"] = certificate_to_json(*v.witness);
        const json labels = witness_labels(v);
        if (!labels.is_null()) j["witness_labels"] = labels;
    }
    if (v.witness_instance) j["witness_instance"] = instance_to_json(*v.witness_instance);
    return j;
}

json exact_result_to_json(const ExactResult& r, const std::string& invariant) {
    json j{{"invariant", invariant},
           {"value", r.value},
           {"status", r.exact ? "exact" : "timed-out"},
           {"nodes_explored", r.nodes_explored},
           {"witness", certificate_to_json(r.witness)}};
    if (!r.exact) j["bracket"] = {{"lower", r.lower}, {"upper", r.upper}};
    return j;
}

}  // namespace corona
