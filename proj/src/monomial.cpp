#include "cotan/monomial.hpp"

#include <algorithm>

#include "cotan/error.hpp"

namespace cotan {

Monomial::Monomial(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end());
    for (const auto& [v, e] : factors) {
        if (e < 0) {
            throw Error(ErrorKind::InvalidArgument, "negative exponent");
        }
        if (e == 0) {
            continue;
        }
        if (!factors_.empty() && factors_.back().first == v) {
            factors_.back().second += e;
        } else {
            factors_.emplace_back(v, e);
        }
        degree_ += e;
    }
}

Monomial Monomial::variable(Vertex v, int power)
{
    return Monomial({{v, power}});
}

Monomial Monomial::product_of(const std::vector<Vertex>& vertices)
{
    std::vector<Factor> f;
    f.reserve(vertices.size());
    for (Vertex v : vertices) {
        f.emplace_back(v, 1);
    }
    return Monomial(std::move(f));
}

Monomial Monomial::of_edge(const Edge& e)
{
    return Monomial({{e.u, 1}, {e.v, 1}});
}

int Monomial::exponent(Vertex v) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
    return it != factors_.end() && it->first == v ? it->second : 0;
}

bool Monomial::is_squarefree() const
{
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second == 1; });
}

VertexSet Monomial::support() const
{
    VertexSet out;
    for (const auto& f : factors_) {
        out.push_back(f.first);
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const
{
    auto it = other.factors_.begin();
    for (const auto& [v, e] : factors_) {
        while (it != other.factors_.end() && it->first < v) {
            ++it;
        }
        if (it == other.factors_.end() || it->first != v || it->second < e) {
            return false;
        }
    }
    return true;
}

bool Monomial::coprime(const Monomial& other) const
{
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first == b->first) {
            return false;
        }
        if (a->first < b->first) {
            ++a;
        } else {
            ++b;
        }
    }
    return true;
}

std::optional<Monomial> Monomial::quotient(const Monomial& divisor) const
{
    if (!divisor.divides(*this)) {
        return std::nullopt;
    }
    std::vector<Factor> out;
    for (const auto& [v, e] : factors_) {
        int left = e - divisor.exponent(v);
        if (left > 0) {
            out.emplace_back(v, left);
        }
    }
    return Monomial(std::move(out));
}

Monomial Monomial::lcm(const Monomial& other) const
{
    std::vector<Factor> out = factors_;
    for (const auto& [v, e] : other.factors_) {
        int mine = exponent(v);
        if (e > mine) {
            out.emplace_back(v, e - mine);
        }
    }
    return Monomial(std::move(out));
}

Monomial Monomial::operator*(const Monomial& other) const
{
    std::vector<Factor> out = factors_;
    out.insert(out.end(), other.factors_.begin(), other.factors_.end());
    return Monomial(std::move(out));
}

Monomial Monomial::times(Vertex v, int power) const
{
    std::vector<Factor> out = factors_;
    out.emplace_back(v, power);
    return Monomial(std::move(out));
}

std::string Monomial::to_string(const Graph& g) const
{
    if (factors_.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& [v, e] : factors_) {
        if (!out.empty()) {
            out += '*';
        }
        out += g.name(v);
        if (e > 1) {
            out += '^' + std::to_string(e);
        }
    }
    return out;
}

Monomial squarefree_part(const Monomial& m)
{
    std::vector<Monomial::Factor> out;
    for (const auto& f : m.factors()) {
        out.emplace_back(f.first, 1);
    }
    return Monomial(std::move(out));
}

std::vector<Monomial> minimal_elements(std::vector<Monomial> monomials)
{
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    std::vector<Monomial> out;
    for (const auto& m : monomials) {
        bool dominated = std::any_of(monomials.begin(), monomials.end(), [&](const Monomial& o) {
            return o != m && o.divides(m);
        });
        if (!dominated) {
            out.push_back(m);
        }
    }
    return out;
}

Polynomial::Polynomial(const Monomial& m, const Rational& c)
{
    add_term(m, c);
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    Polynomial out;
    if (c == 0) {
        return out;
    }
    for (const auto& [m, k] : terms_) {
        out.terms_.emplace(m, k * c);
    }
    return out;
}

Polynomial Polynomial::times(const Monomial& m) const
{
    Polynomial out;
    for (const auto& [t, k] : terms_) {
        out.terms_.emplace(t * m, k);
    }
    return out;
}

std::string rational_to_string(const Rational& q)
{
    return q.get_str();
}

std::string Polynomial::to_string(const Graph& g) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag == 1) {
            out += m.to_string(g);
        } else if (m.is_unit()) {
            out += rational_to_string(mag);
        } else {
            out += rational_to_string(mag) + "*" + m.to_string(g);
        }
    }
    return out;
}

}  // namespace cotan
