#pragma once

#include <string>

#include <json.hpp>

#include "cotan/graph.hpp"
#include "cotan/oracle.hpp"
#include "cotan/t1.hpp"
#include "cotan/t2.hpp"

namespace cotan::report {

using Json = nlohmann::json;

// "a-b" for an edge, "a-a" for a loop.
std::string edge_label(const Graph& g, const Edge& e);
// "a-b|b-c"
std::string generator_label(const Graph& g, const KGenerator& r);

Json graph_json(const Graph& g);
Json vertex_set_json(const Graph& g, const VertexSet& s);

Json hom_json(const Graph& g, const DeformHom& h);
Json hom_json(const Graph& g, const DeformHom& h, const Classification& c);
Json rigidity_json(const Graph& g, const RigidityResult& r);

Json t2hom_json(const KModule& k, const T2Hom& h);
Json t2hom_json(const KModule& k, const T2Hom& h, T2Status status);
Json t2_witness_json(const Graph& g, const T2Witness& w);

Json graded_report_json(const oracle::GradedReport& r);
Json regularity_json(const Graph& h, const oracle::RegularityResult& r);

// Pretty-printed with sorted keys and a trailing newline; parsing the
// output and dumping again gives the same bytes.
std::string dump(const Json& j);

}  // namespace cotan::report
