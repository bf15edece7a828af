#include "cotan/edge_ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cotan/error.hpp"

namespace cotan {

EdgeIdeal::EdgeIdeal(Graph g) : graph_(std::move(g))
{
    for (const auto& e : graph_.edges()) {
        generators_.push_back(Monomial::of_edge(e));
    }
}

bool EdgeIdeal::contains(const Monomial& m) const
{
    for (const auto& [v, e] : m.factors()) {
        if (e >= 2 && graph_.has_loop(v)) {
            return true;
        }
        for (Vertex w : graph_.neighbors(v)) {
            if (w != v && m.exponent(w) > 0) {
                return true;
            }
        }
    }
    return false;
}

std::vector<Monomial> EdgeIdeal::graded_basis(int d) const
{
    std::vector<Monomial> out;
    if (d < 0) {
        return out;
    }
    const std::size_t n = graph_.size();
    std::vector<int> exps(n, 0);
    // Assign exponents vertex by vertex; a partial assignment already in I
    // cannot be completed to a basis element.
    std::function<void(Vertex, int)> assign = [&](Vertex v, int left) {
        if (v == n) {
            if (left == 0) {
                std::vector<Monomial::Factor> f;
                for (Vertex u = 0; u < n; ++u) {
                    if (exps[u] > 0) {
                        f.emplace_back(u, exps[u]);
                    }
                }
                out.emplace_back(std::move(f));
            }
            return;
        }
        bool blocked = false;
        for (Vertex w : graph_.neighbors(v)) {
            if (w < v && exps[w] > 0) {
                blocked = true;
                break;
            }
        }
        int max_e = blocked ? 0 : left;
        if (graph_.has_loop(v)) {
            max_e = std::min(max_e, 1);
        }
        for (int e = max_e; e >= 0; --e) {
            exps[v] = e;
            assign(v + 1, left - e);
        }
        exps[v] = 0;
    };
    assign(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

QuotientClass EdgeIdeal::normal_form(const Polynomial& p) const
{
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        if (!contains(m)) {
            out.add_term(m, c);
        }
    }
    return QuotientClass(std::move(out));
}

QuotientClass EdgeIdeal::normal_form(const Monomial& m, const Rational& c) const
{
    return normal_form(Polynomial(m, c));
}

QuotientClass EdgeIdeal::multiply(const QuotientClass& q, const Monomial& m) const
{
    return normal_form(q.polynomial().times(m));
}

QuotientClass EdgeIdeal::scale(const QuotientClass& q, const Rational& c) const
{
    return QuotientClass(q.polynomial().scaled(c));
}

QuotientClass EdgeIdeal::add(const QuotientClass& a, const QuotientClass& b) const
{
    Polynomial p = a.polynomial();
    p += b.polynomial();
    return QuotientClass(std::move(p));
}

std::vector<Monomial> sqrt_products(const std::vector<VertexSet>& factors, std::size_t cap)
{
    std::set<Monomial> found;
    std::set<std::pair<std::size_t, Monomial>> seen;
    std::function<void(std::size_t, const Monomial&)> walk = [&](std::size_t level, const Monomial& partial) {
        if (!seen.emplace(level, partial).second) {
            return;
        }
        if (level == factors.size()) {
            found.insert(partial);
            if (found.size() > cap) {
                throw Error(ErrorKind::CapExceeded,
                            "square-free product set exceeds cap of " + std::to_string(cap));
            }
            return;
        }
        for (Vertex x : factors[level]) {
            walk(level + 1, partial.exponent(x) > 0 ? partial : partial.times(x));
        }
    };
    walk(0, Monomial());
    return {found.begin(), found.end()};
}

std::optional<ProductWitness> product_times_set_in_ideal(const std::vector<VertexSet>& factors,
                                                         const std::vector<Monomial>& extras,
                                                         const EdgeIdeal& ideal)
{
    if (extras.empty()) {
        return std::nullopt;
    }
    std::optional<ProductWitness> witness;
    std::set<std::pair<std::size_t, Monomial>> seen;
    std::vector<Vertex> tuple;
    std::function<bool(std::size_t, const Monomial&)> walk = [&](std::size_t level, const Monomial& partial) {
        if (ideal.contains(partial)) {
            return false;
        }
        if (!seen.emplace(level, partial).second) {
            return false;
        }
        if (level == factors.size()) {
            for (const auto& s : extras) {
                if (!ideal.contains(partial * s)) {
                    witness = ProductWitness{tuple, partial, s};
                    return true;
                }
            }
            return false;
        }
        for (Vertex x : factors[level]) {
            tuple.push_back(x);
            if (walk(level + 1, partial.times(x))) {
                return true;
            }
            tuple.pop_back();
        }
        return false;
    };
    walk(0, Monomial());
    return witness;
}

std::optional<ProductWitness> product_times_vertices_in_ideal(const std::vector<VertexSet>& factors,
                                                              const VertexSet& extras,
                                                              const EdgeIdeal& ideal)
{
    std::vector<Monomial> ms;
    for (Vertex v : extras) {
        ms.push_back(Monomial::variable(v));
    }
    return product_times_set_in_ideal(factors, ms, ideal);
}

}  // namespace cotan
