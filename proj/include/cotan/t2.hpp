#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cotan/edge_ideal.hpp"
#include "cotan/graph.hpp"
#include "cotan/monomial.hpp"

namespace cotan {

// r_{e,e'} for adjacent edges e ≺ e' sharing one vertex.
struct KGenerator {
    Edge first;
    Edge second;
    Vertex shared = 0;

    auto operator<=>(const KGenerator&) const = default;
};

struct KTerm {
    int sign = 1;
    Monomial coefficient;
    std::size_t generator = 0;  // index into the generator list
};

// sum of sign * coefficient * r over the terms vanishes in K/K0.
struct KRelation {
    int type = 1;  // 1..5
    std::vector<KTerm> terms;
    std::vector<Edge> source;
};

// Number of elements of F below e in the edge order.  InvalidArgument when
// e is not in F.
int sigma(const std::vector<Edge>& edges, const Edge& e);

std::vector<KGenerator> kk0_generators(const Graph& g);
std::vector<KRelation> kk0_relations(const Graph& g);

// Presentation of K/K0 over R together with the quotient R/I.
class KModule {
public:
    explicit KModule(const Graph& g);

    const Graph& graph() const { return ideal_.graph(); }
    const EdgeIdeal& ideal() const { return ideal_; }
    const std::vector<KGenerator>& generators() const { return generators_; }
    const std::vector<KRelation>& relations() const { return relations_; }
    std::optional<std::size_t> generator_index(const Edge& e, const Edge& f) const;
    std::size_t generator_index_checked(const Edge& e, const Edge& f) const;

private:
    EdgeIdeal ideal_;
    std::vector<KGenerator> generators_;
    std::vector<KRelation> relations_;
};

// Signed coefficient of ε_f in r_{e,e'} for f in {e, e'}: a single vertex.
Polynomial epsilon_coefficient(const KGenerator& r, const Edge& f);

struct T2Hom {
    enum class Source { PhiEdge, TypeII };

    Source source = Source::PhiEdge;
    Edge edge;
    VertexSet la;
    VertexSet lb;
    Monomial lambda;
    std::vector<QuotientClass> images;  // indexed by generator
    int degree = 0;

    bool is_zero() const;
};

std::string_view to_string(T2Hom::Source source);

// Image of ε_e under Φ: r ↦ coefficient of ε_e in r.
T2Hom phi_edge(const KModule& k, const Edge& e);

struct DeltaData {
    VertexSet delta_a;
    VertexSet delta_b;
    VertexSet delta;
    std::vector<std::pair<Vertex, VertexSet>> factors;  // (x, Δ_x)
    std::vector<Monomial> products;                     // Δ_{L_a,L_b}
};

// The edge is read as (a, b) = (e.u, e.v).  InvalidArgument when L_a or
// L_b leave their neighbourhoods, violate compatibility on common
// neighbours, or are both empty.
DeltaData delta_data(const Graph& g, const Edge& e, const VertexSet& la, const VertexSet& lb,
                     std::size_t cap = kDefaultProductCap);

enum class T2Status { Zero, InImagePhi, NonzeroInT2 };
std::string_view to_string(T2Status status);

struct ClassifiedT2Hom {
    T2Hom hom;
    T2Status status;
};

struct T2Options {
    std::size_t degree_cap = 16;  // max |N(a)| + |N(b)| - 2 per edge
    std::size_t product_cap = kDefaultProductCap;
    // Evaluate the product containment for every lambda, also those whose
    // map phi^lambda is zero in R/I.  Off by default: a zero map lies in
    // Im Phi whatever the residual vertices do, so the literal containment
    // can fail on graphs whose T2 vanishes.
    bool literal_condition = false;
};

T2Hom make_t2_type2(const KModule& k, const Edge& e, const VertexSet& la, const VertexSet& lb,
                    const Monomial& lambda);

// All compatible (L_a, L_b) with nonempty union and λ in Δ_{L_a,L_b}.
// Order: L_b empty first, then L_a empty, then both nonempty.
std::vector<ClassifiedT2Hom> type2_t2_homs(const KModule& k, const Edge& e, const T2Options& opt = {});
std::vector<ClassifiedT2Hom> type2_t2_homs(const Graph& g, const Edge& e, const T2Options& opt = {});

struct T2Witness {
    Edge edge;
    VertexSet la;
    VertexSet lb;
    Monomial lambda;
    Vertex x = 0;
};

struct T2Result {
    bool vanishes = true;
    std::optional<T2Witness> witness;
};

// Requires a simple graph without triangles (TriangleFound).  False when
// some nonzero phi^lambda differs from lambda*phi_ab, i.e. lambda*x is
// outside I for a residual vertex x.  Pairs with both sides nonempty are
// skipped; `check_both_nonempty` evaluates them too.
T2Result t2_vanishes_trianglefree(const Graph& g, const T2Options& opt = {},
                                  bool check_both_nonempty = false);

// No induced 3- or 4-cycle.
bool t2_zero_sufficient(const Graph& g);

bool validate_t2hom(const KModule& k, const T2Hom& h);

}  // namespace cotan
