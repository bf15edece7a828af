#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cotan/edge_ideal.hpp"
#include "cotan/graph.hpp"
#include "cotan/monomial.hpp"

namespace cotan {

struct LambdaData {
    Edge edge;
    VertexSet lambda;                                    // Λ^{ab}
    std::vector<std::pair<Vertex, VertexSet>> factors;   // (g, Λ_g) for g in Λ
    std::vector<Monomial> products;                      // Λ_{ab}
};

LambdaData lambda_data(const Graph& g, const Edge& e, std::size_t cap = kDefaultProductCap);

struct GammaData {
    Vertex vertex;
    VertexSet subset;                                    // L
    VertexSet gamma;                                     // Γ(L)
    std::vector<std::pair<Vertex, VertexSet>> factors;   // (g, Γ_g) for g in Γ(L)
    std::vector<Monomial> products;                      // Γ_{a,L}
};

// L must be a nonempty subset of V(N̄(a)); InvalidArgument otherwise.
GammaData gamma_data(const Graph& g, Vertex a, const VertexSet& subset,
                     std::size_t cap = kDefaultProductCap);

// Element of Hom_R(I, R/I) given by its values on the generators of I.
struct DeformHom {
    enum class Kind { TypeI, TypeII, Derivation };

    Kind kind = Kind::Derivation;
    Edge edge;            // TypeI
    Vertex vertex = 0;    // TypeII, Derivation
    VertexSet subset;     // TypeII: L
    Monomial lambda;      // TypeI/TypeII: λ; Derivation: multiplier
    std::vector<QuotientClass> images;  // indexed by edge index
    int degree = 0;

    bool is_zero() const;
};

std::string_view to_string(DeformHom::Kind kind);

// r * m * ∂/∂v
struct DerivationTerm {
    Rational coefficient;
    Monomial multiplier;
    Vertex vertex;

    bool operator==(const DerivationTerm&) const = default;
};

struct Classification {
    enum class Status { Zero, Trivial, Nontrivial };

    Status status = Status::Zero;
    std::string reason;
    std::vector<DerivationTerm> derivation;  // set when Trivial
};

std::string_view to_string(Classification::Status status);

struct T1Options {
    std::size_t degree_cap = 16;  // max |V(N̄(a))| for type II enumeration
    std::size_t product_cap = kDefaultProductCap;
};

struct ClassifiedHom {
    DeformHom hom;
    Classification classification;
};

std::vector<ClassifiedHom> type1_homs(const Graph& g, const Edge& e, const T1Options& opt = {});
std::vector<ClassifiedHom> type2_homs(const Graph& g, Vertex a, const T1Options& opt = {});

// m * ∂/∂v as an element of Hom_R(I, R/I).  ∂(a^2)/∂a = 2a.
DeformHom derivation_hom(const EdgeIdeal& ideal, Vertex v, const Monomial& multiplier = Monomial());

DeformHom make_type1(const EdgeIdeal& ideal, const Edge& e, const Monomial& lambda);
DeformHom make_type2(const EdgeIdeal& ideal, Vertex a, const VertexSet& subset, const Monomial& lambda);

// Nonzero type I maps, nontrivial type II maps, then ∂/∂v for every
// vertex, with repeated image tables dropped.
std::vector<DeformHom> hom_generators(const Graph& g, const T1Options& opt = {});

// Checks all pairwise relations (u/g) h(g) - (u/g') h(g') = 0 in R/I,
// u = lcm(g, g').
bool validate_hom(const EdgeIdeal& ideal, const DeformHom& h);

QuotientClass evaluate(const EdgeIdeal& ideal, const DeformHom& h, const Monomial& multiplier,
                       const Edge& e);

// Exact solve for h as a combination of derivations m ∂/∂v.  Only
// multipliers whose multidegree matches some term of h are tried, which
// loses nothing since both sides are multigraded.
std::optional<std::vector<DerivationTerm>> express_as_derivations(const EdgeIdeal& ideal,
                                                                  const DeformHom& h);

// Image table of a derivation combination.
std::vector<QuotientClass> derivation_images(const EdgeIdeal& ideal,
                                             const std::vector<DerivationTerm>& terms);

struct RigidityWitness {
    enum class Kind { Loop, TypeI, TypeII };

    Kind kind = Kind::Loop;
    Edge edge;             // Loop, TypeI
    Vertex vertex = 0;     // TypeII
    VertexSet subset;      // TypeII: L
    Monomial lambda;
    std::optional<Vertex> extra;  // TypeII: x with λx outside I
};

struct RigidityResult {
    bool rigid = true;
    std::optional<RigidityWitness> witness;
};

struct RigidityOptions {
    T1Options t1;
    // Skip edges that are branches and vertices that are off triangles or
    // on leaves, where the conditions hold automatically.
    bool use_skips = true;
    // Accept a type II λ even when its map vanishes (all λy in I for y in L).
    bool literal_condition = false;
};

RigidityResult is_rigid(const Graph& g, const RigidityOptions& opt = {});

// Independent-set criterion; SimpleGraphRequired on loops.  At most 64
// vertices.
bool is_rigid_abhl(const Graph& g);

// Requires no induced 4-, 5- or 6-cycle (PreconditionViolated naming one).
bool rigid_no456(const Graph& g);

}  // namespace cotan
