#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cotan/graph.hpp"

namespace cotan {

using Rational = mpq_class;
using Integer = mpz_class;

// Exponent map over vertex variables, stored sparsely and sorted by vertex.
// The unit monomial has no factors.
class Monomial {
public:
    using Factor = std::pair<Vertex, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);

    static Monomial variable(Vertex v, int power = 1);
    // Product of the listed variables, repetitions allowed.
    static Monomial product_of(const std::vector<Vertex>& vertices);
    static Monomial of_edge(const Edge& e);

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    int exponent(Vertex v) const;
    bool is_unit() const { return factors_.empty(); }
    bool is_squarefree() const;
    VertexSet support() const;

    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    // this / divisor, when divisor divides this.
    std::optional<Monomial> quotient(const Monomial& divisor) const;
    Monomial lcm(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    Monomial times(Vertex v, int power = 1) const;

    // Sorted factors with caret powers, "a^2*b"; "1" for the unit.
    std::string to_string(const Graph& g) const;

    auto operator<=>(const Monomial& o) const { return factors_ <=> o.factors_; }
    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

// Largest square-free monomial dividing m.
Monomial squarefree_part(const Monomial& m);

// Elements of `monomials` not divisible by another element.
std::vector<Monomial> minimal_elements(std::vector<Monomial> monomials);

// Finite formal combination of monomials with rational coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Monomial& m, const Rational& c = 1);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial scaled(const Rational& c) const;
    Polynomial times(const Monomial& m) const;

    std::string to_string(const Graph& g) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    std::map<Monomial, Rational> terms_;
};

std::string rational_to_string(const Rational& q);

}  // namespace cotan
