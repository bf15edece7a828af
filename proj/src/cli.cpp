#include "cotan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "cotan/error.hpp"
#include "cotan/graph_io.hpp"
#include "cotan/oracle.hpp"
#include "cotan/report.hpp"
#include "cotan/t1.hpp"
#include "cotan/t2.hpp"

namespace cotan::cli {

namespace {

using report::Json;

const std::vector<std::string> kVerbs = {
    "t1",        "rigid", "rigid-abhl",    "rigid-no456", "separations", "separate",  "polarize",
    "inseparable", "t2",  "t2-sufficient", "oracle-t1",   "oracle-t2",   "regularity", "census",
};

const std::vector<std::string> kCensusChecks = {
    "rigid", "abhl", "no456", "inseparable", "t2", "t2-sufficient", "oracle-t1", "oracle-t2",
};

struct Labeled {
    std::string label;
    Graph graph;
};

struct Options {
    std::string verb;
    std::vector<std::string> inputs;
    std::vector<std::string> families;
    bool json = false;
    bool all = false;
    std::string window;
    std::size_t cap_degree = 16;
    std::size_t cap_products = kDefaultProductCap;
    std::string checks = "rigid,abhl,inseparable,t2,t2-sufficient";
    std::string vertex;
    std::string pair;
    int bound = 5;
    // Inputs are read once; files such as /dev/stdin cannot be reread.
    mutable std::optional<std::vector<Labeled>> loaded;
};

oracle::Window parse_window(const std::string& text, oracle::Window fallback)
{
    if (text.empty()) {
        return fallback;
    }
    auto colon = text.find(':', 1);
    if (colon == std::string::npos) {
        throw Error(ErrorKind::InvalidArgument, "window must look like LO:HI, got '" + text + "'");
    }
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo = text.substr(0, colon);
        const std::string hi = text.substr(colon + 1);
        oracle::Window w{std::stoi(lo, &used_lo), std::stoi(hi, &used_hi)};
        if (used_lo != lo.size() || used_hi != hi.size() || w.lo > w.hi) {
            throw std::invalid_argument(text);
        }
        return w;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidArgument, "window must look like LO:HI with LO <= HI, got '" + text + "'");
    }
}

const std::vector<Labeled>& load_inputs(const Options& o)
{
    if (o.loaded) {
        return *o.loaded;
    }
    auto& out = o.loaded.emplace();
    for (const auto& path : o.inputs) {
        std::ifstream in(path);
        if (!in) {
            throw Error(ErrorKind::Io, "cannot read " + path);
        }
        auto graphs = parse_graph_stream(in, path);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            std::string label = graphs.size() == 1 ? path : path + "#" + std::to_string(i + 1);
            out.push_back({label, std::move(graphs[i])});
        }
    }
    for (const auto& spec : o.families) {
        for (const auto& single : expand_family_range(spec)) {
            out.push_back({single, parse_family(single)});
        }
    }
    return out;
}

Labeled single_input(const Options& o)
{
    const auto& all = load_inputs(o);
    if (all.size() != 1 || o.inputs.size() + o.families.size() != 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "verb '" + o.verb + "' needs exactly one graph: a file or a single --family");
    }
    return all.front();
}

VertexSet parse_names(const Graph& g, const std::string& list)
{
    std::vector<Vertex> vs;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) {
            vs.push_back(g.vertex(tok));
        }
    }
    return make_vertex_set(vs);
}

SeparationPair parse_pair(const Graph& g, const std::string& text)
{
    auto bar = text.find('|');
    if (bar == std::string::npos) {
        throw Error(ErrorKind::InvalidArgument, "pair must look like A|B with comma-separated names");
    }
    return {parse_names(g, text.substr(0, bar)), parse_names(g, text.substr(bar + 1))};
}

std::string set_text(const Graph& g, const VertexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + g.name(s[i]);
    }
    return out + "}";
}

std::string yes_no(bool b)
{
    return b ? "true" : "false";
}

Json base_json(const Options& o, const Labeled& in)
{
    return {{"verb", o.verb}, {"input", in.label}, {"graph", report::graph_json(in.graph)}};
}

void print_graph(std::ostream& out, const Graph& g)
{
    out << g.to_string();
}

void note_stripped(std::ostream& err, const Labeled& in)
{
    for (const auto& name : in.graph.stripped_vertices()) {
        err << "note: " << in.label << ": isolated vertex " << name << " removed\n";
    }
}

// --- verbs -----------------------------------------------------------------

int verb_t1(const Options& o, std::ostream& out)
{
    Labeled in = single_input(o);
    const Graph& g = in.graph;
    T1Options opt{o.cap_degree, o.cap_products};
    EdgeIdeal ideal(g);
    std::vector<ClassifiedHom> homs;
    for (const auto& e : g.edges()) {
        for (auto& c : type1_homs(g, e, opt)) {
            homs.push_back(std::move(c));
        }
    }
    for (Vertex a = 0; a < g.size(); ++a) {
        for (auto& c : type2_homs(g, a, opt)) {
            homs.push_back(std::move(c));
        }
    }
    if (!o.all) {
        std::erase_if(homs, [](const ClassifiedHom& c) { return c.classification.status == Classification::Status::Zero; });
    }
    auto gens = hom_generators(g, opt);
    std::size_t nontrivial = 0;
    for (const auto& c : homs) {
        nontrivial += c.classification.status == Classification::Status::Nontrivial;
    }
    if (o.json) {
        Json j = base_json(o, in);
        Json list = Json::array();
        for (const auto& c : homs) {
            list.push_back(report::hom_json(g, c.hom, c.classification));
        }
        Json glist = Json::array();
        for (const auto& h : gens) {
            glist.push_back(report::hom_json(g, h));
        }
        j["homs"] = list;
        j["generators"] = glist;
        j["nontrivial_count"] = nontrivial;
        out << report::dump(j);
        return 0;
    }
    for (const auto& c : homs) {
        const auto& h = c.hom;
        out << to_string(h.kind) << " ";
        if (h.kind == DeformHom::Kind::TypeI) {
            out << report::edge_label(g, h.edge);
        } else {
            out << g.name(h.vertex) << " L=" << set_text(g, h.subset);
        }
        out << " lambda=" << h.lambda.to_string(g) << " degree=" << h.degree << " :";
        bool any = false;
        for (std::size_t i = 0; i < h.images.size(); ++i) {
            if (!h.images[i].is_zero()) {
                out << " " << report::edge_label(g, g.edges()[i]) << "->" << h.images[i].to_string(g);
                any = true;
            }
        }
        if (!any) {
            out << " 0";
        }
        out << "  [" << to_string(c.classification.status) << ": " << c.classification.reason << "]\n";
    }
    out << "nontrivial maps: " << nontrivial << "\n";
    out << "generating set size (with derivations d/dv): " << gens.size() << "\n";
    return 0;
}

void print_rigidity_witness(std::ostream& out, const Graph& g, const RigidityWitness& w)
{
    switch (w.kind) {
    case RigidityWitness::Kind::Loop:
        out << "witness: loop " << report::edge_label(g, w.edge) << "\n";
        break;
    case RigidityWitness::Kind::TypeI:
        out << "witness: edge " << report::edge_label(g, w.edge) << " lambda=" << w.lambda.to_string(g) << "\n";
        break;
    case RigidityWitness::Kind::TypeII:
        out << "witness: vertex " << g.name(w.vertex) << " L=" << set_text(g, w.subset)
            << " lambda=" << w.lambda.to_string(g) << " x=" << (w.extra ? g.name(*w.extra) : "-") << "\n";
        break;
    }
}

int verb_rigid(const Options& o, std::ostream& out)
{
    Labeled in = single_input(o);
    RigidityOptions opt;
    opt.t1 = {o.cap_degree, o.cap_products};
    auto r = is_rigid(in.graph, opt);
    if (o.json) {
        Json j = base_json(o, in);
        j.update(report::rigidity_json(in.graph, r));
        out << report::dump(j);
        return 0;
    }
    out << "rigid: " << yes_no(r.rigid) << "\n";
    if (r.witness) {
        print_rigidity_witness(out, in.graph, *r.witness);
    }
    return 0;
}

int verb_bool(const Options& o, std::ostream& out, const std::string& key,
              const std::function<bool(const Graph&)>& f)
{
    Labeled in = single_input(o);
    const bool v = f(in.graph);
    if (o.json) {
        Json j = base_json(o, in);
        j[key] = v;
        out << report::dump(j);
        return 0;
    }
    out << key << ": " << yes_no(v) << "\n";
    return 0;
}

int verb_separations(const Options& o, std::ostream& out)
{
    Labeled in = single_input(o);
    const Graph& g = in.graph;
    auto seps = separating_vertices(g);
    if (o.json) {
        Json j = base_json(o, in);
        Json list = Json::array();
        for (const auto& s : seps) {
            Json pairs = Json::array();
            for (const auto& p : s.pairs) {
                pairs.push_back({{"A", report::vertex_set_json(g, p.a)}, {"B", report::vertex_set_json(g, p.b)}});
            }
            list.push_back({{"vertex", g.name(s.vertex)}, {"pairs", pairs}});
        }
        j["separations"] = list;
        j["inseparable"] = is_inseparable(g);
        out << report::dump(j);
        return 0;
    }
    for (const auto& s : seps) {
        for (const auto& p : s.pairs) {
            out << g.name(s.vertex) << ": A=" << set_text(g, p.a) << " B=" << set_text(g, p.b) << "\n";
        }
    }
    if (seps.empty()) {
        out << "no separating vertices\n";
    }
    return 0;
}

int verb_separate(const Options& o, std::ostream& out)
{
    Labeled in = single_input(o);
    const Graph& g = in.graph;
    if (o.vertex.empty() || o.pair.empty()) {
        throw Error(ErrorKind::InvalidArgument, "separate needs --vertex and --pair A|B");
    }
    const Vertex v = g.vertex(o.vertex);
    const SeparationPair p = parse_pair(g, o.pair);
    Graph h = separate(g, v, p);
    if (o.json) {
        Json j = base_json(o, in);
        j["vertex"] = o.vertex;
        j["pair"] = {{"A", report::vertex_set_json(g, p.a)}, {"B", report::vertex_set_json(g, p.b)}};
        j["new_vertex"] = separation_vertex_name(g, v);
        j["result"] = report::graph_json(h);
        out << report::dump(j);
        return 0;
    }
    print_graph(out, h);
    return 0;
}

int verb_polarize(const Options& o, std::ostream& out)
{
    Labeled in = single_input(o);
    Graph h = polarize(in.graph);
    if (o.json) {
        Json j = base_json(o, in);
        j["result"] = report::graph_json(h);
        out << report::dump(j);
        return 0;
    }
    print_graph(out, h);
    return 0;
}

int verb_t2(const Options& o, std::ostream& out)
{
    Labeled in = single_input(o);
    T2Options opt{o.cap_degree, o.cap_products};
    auto r = t2_vanishes_trianglefree(in.graph, opt);
    // --all lists every type II map with its status; this is exhaustive, so
    // only on request
    std::vector<ClassifiedT2Hom> homs;
    std::optional<KModule> k;
    if (o.all) {
        k.emplace(in.graph);
        for (const auto& e : in.graph.edges()) {
            for (auto& c : type2_t2_homs(*k, e, opt)) {
                homs.push_back(std::move(c));
            }
        }
    }
    if (o.json) {
        Json j = base_json(o, in);
        j["t2_vanishes"] = r.vanishes;
        j["witness"] = r.witness ? report::t2_witness_json(in.graph, *r.witness) : Json(nullptr);
        if (o.all) {
            Json list = Json::array();
            for (const auto& c : homs) {
                list.push_back(report::t2hom_json(*k, c.hom, c.status));
            }
            j["homs"] = list;
        }
        out << report::dump(j);
        return 0;
    }
    for (const auto& c : homs) {
        const auto& h = c.hom;
        out << "type II " << report::edge_label(in.graph, h.edge) << " L_a=" << set_text(in.graph, h.la)
            << " L_b=" << set_text(in.graph, h.lb) << " lambda=" << h.lambda.to_string(in.graph) << " degree "
            << h.degree << ": " << to_string(c.status) << "\n";
    }
    out << "t2_vanishes: " << yes_no(r.vanishes) << "\n";
    if (r.witness) {
        const auto& w = *r.witness;
        const Graph& g = in.graph;
        out << "witness: edge " << report::edge_label(g, w.edge) << " L_a=" << set_text(g, w.la)
            << " L_b=" << set_text(g, w.lb) << " lambda=" << w.lambda.to_string(g) << " x=" << g.name(w.x) << "\n";
    }
    return 0;
}

void print_report(std::ostream& out, const oracle::GradedReport& r)
{
    out << r.module << " graded report, window [" << r.window.lo << "," << r.window.hi << "]\n";
    out << "c\thom\ttrivial\tcohomology\tgeneration_ok\n";
    for (const auto& row : r.degrees) {
        out << row.c << "\t" << row.hom_dim << "\t" << row.trivial_dim << "\t" << row.cohomology_dim << "\t"
            << (row.generation_ok ? yes_no(*row.generation_ok) : "-") << "\n";
    }
    out << "vanishes on window: " << yes_no(r.cohomology_vanishes_on_window())
        << " (degrees outside the window are not checked)\n";
}

int verb_oracle(const Options& o, std::ostream& out, bool second)
{
    Labeled in = single_input(o);
    oracle::GradedReport r;
    if (second) {
        T2Options opt{o.cap_degree, o.cap_products};
        const bool triangle_free = in.graph.is_simple() && induced_cycles(in.graph, {3}).empty();
        r = oracle::t2_report(in.graph, parse_window(o.window, oracle::kT2Window), triangle_free, opt);
    } else {
        T1Options opt{o.cap_degree, o.cap_products};
        r = oracle::t1_report(in.graph, parse_window(o.window, oracle::kT1Window), true, opt);
    }
    if (o.json) {
        Json j = base_json(o, in);
        j["report"] = report::graded_report_json(r);
        out << report::dump(j);
        return 0;
    }
    print_report(out, r);
    return 0;
}

int verb_regularity(const Options& o, std::ostream& out)
{
    Labeled in = single_input(o);
    const Graph& g = in.graph;
    std::vector<std::pair<Vertex, SeparationPair>> todo;
    if (!o.vertex.empty() || !o.pair.empty()) {
        if (o.vertex.empty() || o.pair.empty()) {
            throw Error(ErrorKind::InvalidArgument, "give both --vertex and --pair, or neither");
        }
        todo.emplace_back(g.vertex(o.vertex), parse_pair(g, o.pair));
    } else {
        for (const auto& s : separating_vertices(g)) {
            for (const auto& p : s.pairs) {
                todo.emplace_back(s.vertex, p);
            }
        }
    }
    Json checks = Json::array();
    bool all_regular = true;
    for (const auto& [v, p] : todo) {
        Graph h = separate(g, v, p);
        const std::string fresh = separation_vertex_name(g, v);
        auto r = oracle::separation_regularity_check(g, h, g.name(v), fresh, o.bound);
        all_regular = all_regular && r.regular;
        if (o.json) {
            Json c = report::regularity_json(h, r);
            c["vertex"] = g.name(v);
            c["new_vertex"] = fresh;
            c["pair"] = {{"A", report::vertex_set_json(g, p.a)}, {"B", report::vertex_set_json(g, p.b)}};
            c["result"] = report::graph_json(h);
            checks.push_back(c);
        } else {
            out << g.name(v) << ": A=" << set_text(g, p.a) << " B=" << set_text(g, p.b)
                << " regular=" << yes_no(r.regular) << " (" << r.reason << ")";
            if (!r.regular && r.degree) {
                out << " kernel: " << r.kernel_witness.to_string(h);
            }
            out << "\n";
        }
    }
    if (o.json) {
        Json j = base_json(o, in);
        j["checks"] = checks;
        j["bound"] = o.bound;
        j["all_regular"] = all_regular;
        out << report::dump(j);
        return 0;
    }
    if (todo.empty()) {
        out << "no separations to check\n";
    }
    out << "all regular up to degree " << o.bound << ": " << yes_no(all_regular) << "\n";
    return 0;
}

int verb_census(const Options& o, std::ostream& out, std::ostream& err)
{
    std::set<std::string> checks;
    {
        std::stringstream ss(o.checks);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) {
                continue;
            }
            if (std::find(kCensusChecks.begin(), kCensusChecks.end(), tok) == kCensusChecks.end()) {
                throw Error(ErrorKind::InvalidArgument, "unknown census check '" + tok + "'");
            }
            checks.insert(tok);
        }
    }
    const auto& rows = load_inputs(o);
    if (rows.empty()) {
        throw Error(ErrorKind::InvalidArgument, "census needs input files or --family specs");
    }
    const oracle::Window w1 = parse_window(o.window, oracle::kT1Window);
    const oracle::Window w2 = parse_window(o.window, oracle::kT2Window);
    T1Options t1opt{o.cap_degree, o.cap_products};
    T2Options t2opt{o.cap_degree, o.cap_products};
    RigidityOptions ropt;
    ropt.t1 = t1opt;

    Json jrows = Json::array();
    std::size_t mismatch_count = 0;
    std::vector<std::string> column_order;
    for (const auto& c : kCensusChecks) {
        if (checks.count(c)) {
            column_order.push_back(c);
        }
    }
    if (!o.json) {
        out << "input";
        for (const auto& c : column_order) {
            out << "\t" << c;
        }
        out << "\tstatus\n";
    }
    for (const auto& row : rows) {
        const Graph& g = row.graph;
        std::map<std::string, Json> results;
        std::string error;
        try {
            const bool simple = g.is_simple();
            std::optional<bool> rigid;
            if (checks.count("rigid")) {
                results["rigid"] = *(rigid = is_rigid(g, ropt).rigid);
            }
            if (checks.count("abhl")) {
                results["abhl"] = simple ? Json(is_rigid_abhl(g)) : Json("n/a");
            }
            if (checks.count("no456")) {
                results["no456"] = simple && induced_cycles(g, {4, 5, 6}).empty() ? Json(rigid_no456(g)) : Json("n/a");
            }
            if (checks.count("inseparable")) {
                results["inseparable"] = is_inseparable(g);
            }
            if (checks.count("t2")) {
                results["t2"] = simple && induced_cycles(g, {3}).empty()
                                    ? Json(t2_vanishes_trianglefree(g, t2opt).vanishes)
                                    : Json("n/a");
            }
            if (checks.count("t2-sufficient")) {
                results["t2-sufficient"] = simple ? Json(t2_zero_sufficient(g)) : Json("n/a");
            }
            if (checks.count("oracle-t1")) {
                results["oracle-t1"] = oracle::t1_report(g, w1, false, t1opt).cohomology_vanishes_on_window();
            }
            if (checks.count("oracle-t2")) {
                results["oracle-t2"] = simple
                                           ? Json(oracle::t2_report(g, w2, false, t2opt).cohomology_vanishes_on_window())
                                           : Json("n/a");
            }
        } catch (const Error& e) {
            error = e.what();
        }
        std::vector<std::string> mismatches;
        auto compare = [&](const std::string& x, const std::string& y) {
            if (results.count(x) && results.count(y) && results[x].is_boolean() && results[y].is_boolean() &&
                results[x] != results[y]) {
                mismatches.push_back(x + "!=" + y);
            }
        };
        compare("rigid", "abhl");
        compare("rigid", "no456");
        compare("rigid", "oracle-t1");
        compare("t2", "oracle-t2");
        if (results.count("t2-sufficient") && results.count("t2") && results["t2-sufficient"] == true &&
            results["t2"] == false) {
            mismatches.push_back("t2-sufficient=>t2");
        }
        mismatch_count += mismatches.size();
        if (o.json) {
            Json r{{"input", row.label}, {"graph", report::graph_json(g)}, {"results", results},
                   {"mismatches", mismatches}, {"error", error.empty() ? Json(nullptr) : Json(error)}};
            jrows.push_back(r);
        } else {
            out << row.label;
            for (const auto& c : column_order) {
                out << "\t";
                if (!results.count(c)) {
                    out << "-";
                } else if (results[c].is_boolean()) {
                    out << yes_no(results[c].get<bool>());
                } else {
                    out << results[c].get<std::string>();
                }
            }
            if (!error.empty()) {
                out << "\terror: " << error;
            } else if (!mismatches.empty()) {
                out << "\tMISMATCH";
                for (const auto& m : mismatches) {
                    out << " " << m;
                }
            } else {
                out << "\tok";
            }
            out << "\n";
        }
    }
    if (mismatch_count > 0) {
        err << "census: " << mismatch_count << " MISMATCH(ES) between criteria\n";
    }
    if (o.json) {
        Json j{{"verb", "census"},
               {"checks", column_order},
               {"rows", jrows},
               {"mismatch_count", mismatch_count},
               {"windows", {{"t1", {{"lo", w1.lo}, {"hi", w1.hi}}}, {"t2", {{"lo", w2.lo}, {"hi", w2.hi}}}}}};
        out << report::dump(j);
    } else {
        out << "rows: " << rows.size() << ", mismatches: " << mismatch_count << "\n";
    }
    return 0;
}

int dispatch(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.verb == "census") {
        return verb_census(o, out, err);
    }
    if (o.verb == "t1") {
        return verb_t1(o, out);
    }
    if (o.verb == "rigid") {
        return verb_rigid(o, out);
    }
    if (o.verb == "rigid-abhl") {
        return verb_bool(o, out, "rigid_abhl", [](const Graph& g) { return is_rigid_abhl(g); });
    }
    if (o.verb == "rigid-no456") {
        return verb_bool(o, out, "rigid_no456", [](const Graph& g) { return rigid_no456(g); });
    }
    if (o.verb == "inseparable") {
        return verb_bool(o, out, "inseparable", [](const Graph& g) { return is_inseparable(g); });
    }
    if (o.verb == "t2-sufficient") {
        return verb_bool(o, out, "t2_zero_sufficient", [](const Graph& g) { return t2_zero_sufficient(g); });
    }
    if (o.verb == "separations") {
        return verb_separations(o, out);
    }
    if (o.verb == "separate") {
        return verb_separate(o, out);
    }
    if (o.verb == "polarize") {
        return verb_polarize(o, out);
    }
    if (o.verb == "t2") {
        return verb_t2(o, out);
    }
    if (o.verb == "oracle-t1") {
        return verb_oracle(o, out, false);
    }
    if (o.verb == "oracle-t2") {
        return verb_oracle(o, out, true);
    }
    if (o.verb == "regularity") {
        return verb_regularity(o, out);
    }
    err << "error: unknown verb '" << o.verb << "'\n";
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Cotangent cohomology of edge ideals"};
    app.name("cotan");
    std::string verbs;
    for (const auto& v : kVerbs) {
        verbs += (verbs.empty() ? "" : ", ") + v;
    }
    app.add_option("verb", o.verb, "One of: " + verbs)->required();
    app.add_option("inputs", o.inputs, "Edge-list files (census accepts several; graphs in one file are separated by ---)");
    app.add_option("--family", o.families, "Family spec, e.g. cycle:5, star:3, letterplace2:chain:3, cycle:3..12");
    app.add_flag("--json", o.json, "Emit a JSON report");
    app.add_flag("--all", o.all, "t1: also list maps that vanish; t2: list every type II map with its status");
    app.add_option("--window", o.window, "Degree window LO:HI for the oracle");
    app.add_option("--cap-degree", o.cap_degree, "Neighbourhood size cap for subset enumeration");
    app.add_option("--cap-products", o.cap_products, "Cap on materialized square-free product sets");
    app.add_option("--checks", o.checks, "census: comma-separated checks");
    app.add_option("--vertex", o.vertex, "separate/regularity: vertex name");
    app.add_option("--pair", o.pair, "separate/regularity: separation pair A|B, names comma-separated");
    app.add_option("--bound", o.bound, "regularity: highest source degree checked");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (std::find(kVerbs.begin(), kVerbs.end(), o.verb) == kVerbs.end()) {
        err << "error: unknown verb '" << o.verb << "'\n";
        return 1;
    }
    try {
        if (o.verb != "census") {
            // Surface stripped isolated vertices once per input.
            for (const auto& in : load_inputs(o)) {
                note_stripped(err, in);
            }
        }
        return dispatch(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (o.json) {
            out << report::dump({{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}});
        }
        return e.is_precondition() ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cotan::cli
