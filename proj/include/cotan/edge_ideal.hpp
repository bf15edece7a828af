#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cotan/graph.hpp"
#include "cotan/monomial.hpp"

namespace cotan {

class EdgeIdeal;

// Element of R/I in normal form: no monomial of the ideal survives.  Only
// EdgeIdeal produces these.
class QuotientClass {
public:
    QuotientClass() = default;

    const Polynomial& polynomial() const { return poly_; }
    const std::map<Monomial, Rational>& terms() const { return poly_.terms(); }
    bool is_zero() const { return poly_.is_zero(); }
    std::string to_string(const Graph& g) const { return poly_.to_string(g); }

    bool operator==(const QuotientClass& o) const { return poly_ == o.poly_; }

private:
    friend class EdgeIdeal;
    explicit QuotientClass(Polynomial p) : poly_(std::move(p)) {}

    Polynomial poly_;
};

// I(G): one quadratic generator per edge, in canonical edge order (edge ab
// gives ab, loop aa gives a^2).
class EdgeIdeal {
public:
    explicit EdgeIdeal(Graph g);

    const Graph& graph() const { return graph_; }
    const std::vector<Monomial>& generators() const { return generators_; }
    const Monomial& generator(std::size_t i) const { return generators_.at(i); }

    bool contains(const Monomial& m) const;

    // Basis of (R/I)_d: degree-d monomials outside I, sorted.
    std::vector<Monomial> graded_basis(int d) const;

    QuotientClass normal_form(const Polynomial& p) const;
    QuotientClass normal_form(const Monomial& m, const Rational& c = 1) const;
    QuotientClass multiply(const QuotientClass& q, const Monomial& m) const;
    QuotientClass scale(const QuotientClass& q, const Rational& c) const;
    QuotientClass add(const QuotientClass& a, const QuotientClass& b) const;

private:
    Graph graph_;
    std::vector<Monomial> generators_;
};

struct ProductWitness {
    std::vector<Vertex> tuple;  // one pick per factor
    Monomial product;           // product of the picks
    Monomial extra;             // element of `extras` with product*extra outside I
};

inline constexpr std::size_t kDefaultProductCap = 100000;

// { sqrt(x1...xk) : xi in factors[i] }.  An empty factor list gives {1}; an
// empty factor gives the empty set.  Throws CapExceeded once more than `cap`
// distinct elements appear.
std::vector<Monomial> sqrt_products(const std::vector<VertexSet>& factors,
                                    std::size_t cap = kDefaultProductCap);

// Whether every p*s lies in I, p ranging over the tuple products of
// `factors` and s over `extras`.  Returns the first failing product as
// witness, or nullopt when containment holds.  Subtrees whose partial
// product is already in I are skipped.
std::optional<ProductWitness> product_times_set_in_ideal(const std::vector<VertexSet>& factors,
                                                         const std::vector<Monomial>& extras,
                                                         const EdgeIdeal& ideal);

// Convenience: extras given as single variables.
std::optional<ProductWitness> product_times_vertices_in_ideal(const std::vector<VertexSet>& factors,
                                                              const VertexSet& extras,
                                                              const EdgeIdeal& ideal);

}  // namespace cotan
