#include "cotan/report.hpp"

namespace cotan::report {

std::string edge_label(const Graph& g, const Edge& e)
{
    return g.name(e.u) + "-" + g.name(e.v);
}

std::string generator_label(const Graph& g, const KGenerator& r)
{
    return edge_label(g, r.first) + "|" + edge_label(g, r.second);
}

Json graph_json(const Graph& g)
{
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({g.name(e.u), g.name(e.v)});
    }
    return {{"vertices", g.names()}, {"edges", edges}, {"stripped", g.stripped_vertices()}};
}

Json vertex_set_json(const Graph& g, const VertexSet& s)
{
    Json out = Json::array();
    for (Vertex v : s) {
        out.push_back(g.name(v));
    }
    return out;
}

Json hom_json(const Graph& g, const DeformHom& h)
{
    Json images = Json::object();
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        if (!h.images[i].is_zero()) {
            images[edge_label(g, g.edges()[i])] = h.images[i].to_string(g);
        }
    }
    Json out{{"kind", to_string(h.kind)}, {"degree", h.degree}, {"images", images}};
    switch (h.kind) {
    case DeformHom::Kind::TypeI:
        out["source"] = edge_label(g, h.edge);
        out["L"] = nullptr;
        out["lambda"] = h.lambda.to_string(g);
        break;
    case DeformHom::Kind::TypeII:
        out["source"] = g.name(h.vertex);
        out["L"] = vertex_set_json(g, h.subset);
        out["lambda"] = h.lambda.to_string(g);
        break;
    case DeformHom::Kind::Derivation:
        out["source"] = g.name(h.vertex);
        out["L"] = nullptr;
        out["lambda"] = h.lambda.to_string(g);
        break;
    }
    out["classification"] = nullptr;
    return out;
}

Json hom_json(const Graph& g, const DeformHom& h, const Classification& c)
{
    Json out = hom_json(g, h);
    Json derivation = Json::array();
    for (const auto& t : c.derivation) {
        derivation.push_back({{"coefficient", rational_to_string(t.coefficient)},
                              {"multiplier", t.multiplier.to_string(g)},
                              {"vertex", g.name(t.vertex)}});
    }
    out["classification"] = {{"status", to_string(c.status)}, {"reason", c.reason}, {"derivation", derivation}};
    return out;
}

Json rigidity_json(const Graph& g, const RigidityResult& r)
{
    Json out{{"rigid", r.rigid}, {"witness", nullptr}};
    if (r.witness) {
        const auto& w = *r.witness;
        Json j;
        switch (w.kind) {
        case RigidityWitness::Kind::Loop:
            j = {{"kind", "loop"}, {"edge", edge_label(g, w.edge)}};
            break;
        case RigidityWitness::Kind::TypeI:
            j = {{"kind", "type_I"}, {"edge", edge_label(g, w.edge)}, {"lambda", w.lambda.to_string(g)}};
            break;
        case RigidityWitness::Kind::TypeII:
            j = {{"kind", "type_II"},
                 {"vertex", g.name(w.vertex)},
                 {"L", vertex_set_json(g, w.subset)},
                 {"lambda", w.lambda.to_string(g)},
                 {"x", w.extra ? Json(g.name(*w.extra)) : Json(nullptr)}};
            break;
        }
        out["witness"] = j;
    }
    return out;
}

Json t2hom_json(const KModule& k, const T2Hom& h)
{
    const Graph& g = k.graph();
    Json images = Json::object();
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        if (!h.images[i].is_zero()) {
            images[generator_label(g, k.generators()[i])] = h.images[i].to_string(g);
        }
    }
    Json provenance{{"kind", to_string(h.source)}, {"edge", edge_label(g, h.edge)}};
    if (h.source == T2Hom::Source::TypeII) {
        provenance["L_a"] = vertex_set_json(g, h.la);
        provenance["L_b"] = vertex_set_json(g, h.lb);
        provenance["lambda"] = h.lambda.to_string(g);
    }
    return {{"provenance", provenance}, {"degree", h.degree}, {"images", images}, {"status", nullptr}};
}

Json t2hom_json(const KModule& k, const T2Hom& h, T2Status status)
{
    Json out = t2hom_json(k, h);
    out["status"] = to_string(status);
    return out;
}

Json t2_witness_json(const Graph& g, const T2Witness& w)
{
    return {{"edge", edge_label(g, w.edge)},
            {"L_a", vertex_set_json(g, w.la)},
            {"L_b", vertex_set_json(g, w.lb)},
            {"lambda", w.lambda.to_string(g)},
            {"x", g.name(w.x)}};
}

Json graded_report_json(const oracle::GradedReport& r)
{
    Json degrees = Json::array();
    for (const auto& row : r.degrees) {
        degrees.push_back({{"c", row.c},
                           {"hom_dim", row.hom_dim},
                           {"trivial_dim", row.trivial_dim},
                           {"cohomology_dim", row.cohomology_dim},
                           {"generation_ok", row.generation_ok ? Json(*row.generation_ok) : Json(nullptr)}});
    }
    return {{"module", r.module},
            {"degrees", degrees},
            {"window", {{"lo", r.window.lo}, {"hi", r.window.hi}}},
            {"caps", {{"degree_cap", r.degree_cap}, {"product_cap", r.product_cap}}},
            {"vanishes_on_window", r.cohomology_vanishes_on_window()},
            {"note", "dimensions are computed only for degrees inside the window; vanishing outside it "
                     "is not certified by this report"}};
}

Json regularity_json(const Graph& h, const oracle::RegularityResult& r)
{
    return {{"regular", r.regular},
            {"reason", r.reason},
            {"degree", r.degree ? Json(*r.degree) : Json(nullptr)},
            {"kernel_witness", r.regular ? Json(nullptr) : Json(r.kernel_witness.to_string(h))}};
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace cotan::report
