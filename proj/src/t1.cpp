#include "cotan/t1.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "cotan/error.hpp"
#include "cotan/linalg.hpp"

namespace cotan {

bool DeformHom::is_zero() const
{
    return std::all_of(images.begin(), images.end(), [](const QuotientClass& q) { return q.is_zero(); });
}

std::string_view to_string(DeformHom::Kind kind)
{
    switch (kind) {
    case DeformHom::Kind::TypeI:
        return "type_I";
    case DeformHom::Kind::TypeII:
        return "type_II";
    case DeformHom::Kind::Derivation:
        return "derivation";
    }
    return "?";
}

std::string_view to_string(Classification::Status status)
{
    switch (status) {
    case Classification::Status::Zero:
        return "zero";
    case Classification::Status::Trivial:
        return "trivial";
    case Classification::Status::Nontrivial:
        return "nontrivial";
    }
    return "?";
}

LambdaData lambda_data(const Graph& g, const Edge& e, std::size_t cap)
{
    g.edge_index_checked(e);
    LambdaData out;
    out.edge = e;
    const VertexSet ab = make_vertex_set({e.u, e.v});
    out.lambda = set_union(set_difference(g.neighbors(e.u), {e.v}),
                           set_difference(g.neighbors(e.v), {e.u}));
    std::vector<VertexSet> factors;
    for (Vertex x : out.lambda) {
        VertexSet f = set_difference(g.neighbors(x), ab);
        out.factors.emplace_back(x, f);
        factors.push_back(std::move(f));
    }
    out.products = sqrt_products(factors, cap);
    return out;
}

namespace {

// Γ(L) inside N̄(a): vertices of N(a) outside L, distinct from and not
// adjacent in G to some vertex of L.
VertexSet gamma_of(const Graph& g, Vertex a, const VertexSet& subset)
{
    VertexSet out;
    for (Vertex y : g.neighbors(a)) {
        if (contains(subset, y)) {
            continue;
        }
        for (Vertex x : subset) {
            if (x != y && !g.adjacent(x, y)) {
                out.push_back(y);
                break;
            }
        }
    }
    return out;
}

}  // namespace

GammaData gamma_data(const Graph& g, Vertex a, const VertexSet& subset, std::size_t cap)
{
    if (subset.empty()) {
        throw Error(ErrorKind::InvalidArgument, "L must be nonempty");
    }
    for (Vertex x : subset) {
        if (!contains(g.neighbors(a), x)) {
            throw Error(ErrorKind::InvalidArgument,
                        "vertex " + g.name(x) + " is not in the neighbourhood of " + g.name(a));
        }
    }
    GammaData out;
    out.vertex = a;
    out.subset = subset;
    out.gamma = gamma_of(g, a, subset);
    std::vector<VertexSet> factors;
    for (Vertex x : out.gamma) {
        VertexSet f = set_difference(g.neighbors(x), {a});
        out.factors.emplace_back(x, f);
        factors.push_back(std::move(f));
    }
    out.products = sqrt_products(factors, cap);
    return out;
}

namespace {

// ∂g/∂v for a quadratic generator, times `multiplier`.
Polynomial partial(const Monomial& gen, Vertex v, const Monomial& multiplier)
{
    const int e = gen.exponent(v);
    if (e == 0) {
        return {};
    }
    auto rest = gen.quotient(Monomial::variable(v));
    return Polynomial(*rest * multiplier, Rational(e));
}

bool same_images(const std::vector<QuotientClass>& a, const std::vector<QuotientClass>& b)
{
    return a == b;
}

std::vector<QuotientClass> scaled_partials(const EdgeIdeal& ideal, Vertex v, const Monomial& lambda,
                                           const Rational& k)
{
    std::vector<QuotientClass> out;
    for (const auto& gen : ideal.generators()) {
        out.push_back(ideal.normal_form(partial(gen, v, lambda).scaled(k)));
    }
    return out;
}

std::vector<QuotientClass> type2_images(const EdgeIdeal& ideal, Vertex a, const VertexSet& subset,
                                        const Monomial& lambda)
{
    const Graph& g = ideal.graph();
    std::vector<QuotientClass> images(g.edge_count());
    for (Vertex x : subset) {
        images[g.edge_index_checked(Edge(a, x))] = ideal.normal_form(lambda.times(x));
    }
    return images;
}

}  // namespace

DeformHom derivation_hom(const EdgeIdeal& ideal, Vertex v, const Monomial& multiplier)
{
    DeformHom h;
    h.kind = DeformHom::Kind::Derivation;
    h.vertex = v;
    h.lambda = multiplier;
    h.degree = multiplier.degree() - 1;
    h.images = scaled_partials(ideal, v, multiplier, 1);
    return h;
}

DeformHom make_type1(const EdgeIdeal& ideal, const Edge& e, const Monomial& lambda)
{
    const Graph& g = ideal.graph();
    DeformHom h;
    h.kind = DeformHom::Kind::TypeI;
    h.edge = e;
    h.lambda = lambda;
    h.degree = lambda.degree() - 2;
    h.images.assign(g.edge_count(), QuotientClass());
    h.images[g.edge_index_checked(e)] = ideal.normal_form(lambda);
    return h;
}

DeformHom make_type2(const EdgeIdeal& ideal, Vertex a, const VertexSet& subset, const Monomial& lambda)
{
    DeformHom h;
    h.kind = DeformHom::Kind::TypeII;
    h.vertex = a;
    h.subset = subset;
    h.lambda = lambda;
    h.degree = lambda.degree() - 1;
    h.images = type2_images(ideal, a, subset, lambda);
    return h;
}

std::vector<ClassifiedHom> type1_homs(const Graph& g, const Edge& e, const T1Options& opt)
{
    EdgeIdeal ideal(g);
    LambdaData data = lambda_data(g, e, opt.product_cap);
    std::vector<ClassifiedHom> out;
    for (const auto& lambda : data.products) {
        ClassifiedHom c{make_type1(ideal, e, lambda), {}};
        if (c.hom.is_zero()) {
            c.classification = {Classification::Status::Zero, "lambda lies in I", {}};
        } else {
            c.classification = {Classification::Status::Nontrivial,
                                "nonzero type I map; lambda is coprime to the edge", {}};
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

void check_degree_cap(const Graph& g, Vertex a, const T1Options& opt)
{
    const std::size_t k = g.neighbors(a).size();
    if (k > opt.degree_cap || k >= 63) {
        throw Error(ErrorKind::CapExceeded,
                    "vertex " + g.name(a) + ": |V(N̄(a))| = " + std::to_string(k) + " exceeds cap " +
                        std::to_string(opt.degree_cap));
    }
}

std::vector<VertexSet> nonempty_subsets(const VertexSet& base)
{
    std::vector<VertexSet> out;
    const std::uint64_t n = base.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        VertexSet s;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                s.push_back(base[i]);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

Classification classify_type2(const EdgeIdeal& ideal, const DeformHom& h)
{
    using S = Classification::Status;
    const Graph& g = ideal.graph();
    const Vertex a = h.vertex;
    if (h.is_zero()) {
        return {S::Zero, "all images vanish in R/I", {}};
    }
    if (!g.has_loop(a)) {
        if (same_images(h.images, scaled_partials(ideal, a, h.lambda, 1))) {
            return {S::Trivial, "equals lambda * d/da", {{Rational(1), h.lambda, a}}};
        }
        return {S::Nontrivial, "no loop at a and map differs from lambda * d/da", {}};
    }
    if (g.neighbors(a).size() == 1) {
        if (same_images(h.images, scaled_partials(ideal, a, h.lambda, Rational(1, 2)))) {
            return {S::Trivial, "isolated loop: equals 1/2 * lambda * d/da", {{Rational(1, 2), h.lambda, a}}};
        }
    }
    const auto psi1 = type2_images(ideal, a, {a}, h.lambda);
    const auto psi2 = type2_images(ideal, a, g.neighbors(a), h.lambda);
    const bool is_psi1 = same_images(h.images, psi1);
    const bool is_psi2 = same_images(h.images, psi2);
    if (!is_psi1 && !is_psi2) {
        return {S::Nontrivial, "loop at a and map differs from lambda*psi1 and lambda*psi2", {}};
    }
    if (h.lambda.is_unit() && g.neighbors(a).size() > 1) {
        return {S::Nontrivial, "separation map at a non-isolated loop", {}};
    }
    if (auto terms = express_as_derivations(ideal, h)) {
        return {S::Trivial, "exact derivation solve", std::move(*terms)};
    }
    return {S::Nontrivial, "exact derivation solve has no solution", {}};
}

}  // namespace

std::vector<ClassifiedHom> type2_homs(const Graph& g, Vertex a, const T1Options& opt)
{
    check_degree_cap(g, a, opt);
    EdgeIdeal ideal(g);
    std::vector<ClassifiedHom> out;
    for (const auto& subset : nonempty_subsets(g.neighbors(a))) {
        GammaData data = gamma_data(g, a, subset, opt.product_cap);
        for (const auto& lambda : data.products) {
            DeformHom h = make_type2(ideal, a, subset, lambda);
            Classification c = classify_type2(ideal, h);
            out.push_back({std::move(h), std::move(c)});
        }
    }
    return out;
}

std::vector<DeformHom> hom_generators(const Graph& g, const T1Options& opt)
{
    EdgeIdeal ideal(g);
    std::vector<DeformHom> out;
    auto add = [&](DeformHom h) {
        if (h.is_zero()) {
            return;
        }
        for (const auto& o : out) {
            if (same_images(o.images, h.images)) {
                return;
            }
        }
        out.push_back(std::move(h));
    };
    for (const auto& e : g.edges()) {
        for (auto& c : type1_homs(g, e, opt)) {
            add(std::move(c.hom));
        }
    }
    for (Vertex a = 0; a < g.size(); ++a) {
        for (auto& c : type2_homs(g, a, opt)) {
            // Trivial ones are R-multiples of derivations listed below.
            if (c.classification.status == Classification::Status::Nontrivial) {
                add(std::move(c.hom));
            }
        }
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        add(derivation_hom(ideal, v));
    }
    return out;
}

bool validate_hom(const EdgeIdeal& ideal, const DeformHom& h)
{
    const auto& gens = ideal.generators();
    if (h.images.size() != gens.size()) {
        return false;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const Monomial u = gens[i].lcm(gens[j]);
            Polynomial p = h.images[i].polynomial().times(*u.quotient(gens[i]));
            p -= h.images[j].polynomial().times(*u.quotient(gens[j]));
            if (!ideal.normal_form(p).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

QuotientClass evaluate(const EdgeIdeal& ideal, const DeformHom& h, const Monomial& multiplier,
                       const Edge& e)
{
    const std::size_t i = ideal.graph().edge_index_checked(e);
    return ideal.multiply(h.images.at(i), multiplier);
}

std::vector<QuotientClass> derivation_images(const EdgeIdeal& ideal,
                                             const std::vector<DerivationTerm>& terms)
{
    const auto& gens = ideal.generators();
    std::vector<Polynomial> acc(gens.size());
    for (const auto& t : terms) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            acc[i] += partial(gens[i], t.vertex, t.multiplier).scaled(t.coefficient);
        }
    }
    std::vector<QuotientClass> out;
    for (const auto& p : acc) {
        out.push_back(ideal.normal_form(p));
    }
    return out;
}

std::optional<std::vector<DerivationTerm>> express_as_derivations(const EdgeIdeal& ideal,
                                                                  const DeformHom& h)
{
    const Graph& g = ideal.graph();
    const auto& gens = ideal.generators();
    if (h.images.size() != gens.size()) {
        throw Error(ErrorKind::InvalidArgument, "image table size does not match the ideal");
    }
    std::set<std::pair<Monomial, Vertex>> candidates;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (const auto& [t, c] : h.images[i].terms()) {
            for (Vertex v = 0; v < g.size(); ++v) {
                if (auto m = t.times(v).quotient(gens[i])) {
                    if (!ideal.contains(*m)) {
                        candidates.emplace(*m, v);
                    }
                }
            }
        }
    }
    std::map<std::pair<std::size_t, Monomial>, std::size_t> coord;
    auto flatten = [&](const std::vector<QuotientClass>& images) {
        std::vector<linalg::SparseVector::Entry> e;
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (const auto& [m, c] : images[i].terms()) {
                auto [it, inserted] = coord.try_emplace({i, m}, coord.size());
                e.emplace_back(it->second, c);
            }
        }
        return linalg::SparseVector(std::move(e));
    };
    std::vector<DerivationTerm> basis;
    std::vector<linalg::SparseVector> vectors;
    for (const auto& [m, v] : candidates) {
        basis.push_back({Rational(1), m, v});
        vectors.push_back(flatten(derivation_hom(ideal, v, m).images));
    }
    const auto target = flatten(h.images);
    auto sol = linalg::solve_combination(vectors, target);
    if (!sol) {
        return std::nullopt;
    }
    std::vector<DerivationTerm> out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if ((*sol)[k] != 0) {
            out.push_back({(*sol)[k], basis[k].multiplier, basis[k].vertex});
        }
    }
    return out;
}

RigidityResult is_rigid(const Graph& g, const RigidityOptions& opt)
{
    RigidityResult out;
    for (const auto& e : g.edges()) {
        if (e.is_loop()) {
            out.rigid = false;
            out.witness = RigidityWitness{RigidityWitness::Kind::Loop, e, e.u, {}, Monomial(), std::nullopt};
            return out;
        }
    }
    EdgeIdeal ideal(g);
    const std::vector<Monomial> unit{Monomial()};

    for (const auto& e : g.edges()) {
        if (opt.use_skips && edge_flags(g, e).is_branch) {
            continue;
        }
        const VertexSet ab = make_vertex_set({e.u, e.v});
        const VertexSet lambda = set_union(set_difference(g.neighbors(e.u), {e.v}),
                                           set_difference(g.neighbors(e.v), {e.u}));
        std::vector<VertexSet> factors;
        for (Vertex x : lambda) {
            factors.push_back(set_difference(g.neighbors(x), ab));
        }
        if (auto w = product_times_set_in_ideal(factors, unit, ideal)) {
            out.rigid = false;
            out.witness = RigidityWitness{RigidityWitness::Kind::TypeI, e, 0, {},
                                          squarefree_part(w->product), std::nullopt};
            return out;
        }
    }

    for (Vertex a = 0; a < g.size(); ++a) {
        if (opt.use_skips && (!on_triangle(g, a) || belongs_to_leaf(g, a))) {
            continue;
        }
        check_degree_cap(g, a, opt.t1);
        const VertexSet& nbar = g.neighbors(a);
        for (const auto& subset : nonempty_subsets(nbar)) {
            const VertexSet gamma = gamma_of(g, a, subset);
            const VertexSet extras = set_difference(nbar, set_union(subset, gamma));
            if (extras.empty()) {
                continue;
            }
            std::vector<VertexSet> factors;
            for (Vertex x : gamma) {
                factors.push_back(set_difference(g.neighbors(x), {a}));
            }
            auto w = product_times_vertices_in_ideal(factors, extras, ideal);
            if (!w) {
                continue;
            }
            Monomial lambda = squarefree_part(w->product);
            std::optional<Vertex> extra = w->extra.support().front();
            if (!opt.literal_condition && make_type2(ideal, a, subset, lambda).is_zero()) {
                // the pruned search may stop at a λ whose map vanishes
                extra.reset();
                for (const auto& l : sqrt_products(factors, opt.t1.product_cap)) {
                    if (make_type2(ideal, a, subset, l).is_zero()) {
                        continue;
                    }
                    for (Vertex x : extras) {
                        if (!ideal.contains(l.times(x))) {
                            extra = x;
                            break;
                        }
                    }
                    if (extra) {
                        lambda = l;
                        break;
                    }
                }
            }
            if (extra) {
                out.rigid = false;
                out.witness = RigidityWitness{RigidityWitness::Kind::TypeII, Edge(), a, subset, lambda, extra};
                return out;
            }
        }
    }
    return out;
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v)
{
    return Mask(1) << v;
}

// Complement of H restricted to `nb` is connected (empty counts).
bool complement_connected(const std::vector<Mask>& adj, Mask nb)
{
    if (nb == 0) {
        return true;
    }
    Mask seen = nb & (~nb + 1);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) {
            Vertex y = static_cast<Vertex>(__builtin_ctzll(f));
            next |= nb & ~adj[y] & ~bit(y);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == nb;
}

}  // namespace

bool is_rigid_abhl(const Graph& g)
{
    if (!g.is_simple()) {
        throw Error(ErrorKind::SimpleGraphRequired, "independent-set criterion needs a simple graph");
    }
    const std::size_t n = g.size();
    if (n > 64) {
        throw Error(ErrorKind::InvalidArgument, "independent-set criterion supports at most 64 vertices");
    }
    std::vector<Mask> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= bit(e.v);
        adj[e.v] |= bit(e.u);
    }
    const Mask all = n == 64 ? ~Mask(0) : (bit(n) - 1);

    auto check = [&](Mask x, Mask closed) {
        const Mask h = all & ~closed;
        for (Mask r = h; r; r &= r - 1) {
            Vertex v = static_cast<Vertex>(__builtin_ctzll(r));
            const Mask nb = adj[v] & h;
            if (!complement_connected(adj, nb)) {
                return false;
            }
            if (__builtin_popcountll(nb) == 1) {
                Vertex w = static_cast<Vertex>(__builtin_ctzll(nb));
                if (__builtin_popcountll(adj[w] & h) == 1) {
                    return false;
                }
            }
        }
        (void)x;
        return true;
    };

    // Independent sets by extension in increasing vertex order.
    std::function<bool(Vertex, Mask, Mask)> walk = [&](Vertex start, Mask x, Mask closed) {
        if (!check(x, closed)) {
            return false;
        }
        for (Vertex v = start; v < n; ++v) {
            if (closed & bit(v)) {
                continue;
            }
            if (!walk(v + 1, x | bit(v), closed | bit(v) | adj[v])) {
                return false;
            }
        }
        return true;
    };
    return walk(0, 0, 0);
}

bool rigid_no456(const Graph& g)
{
    auto cycles = induced_cycles(g, {4, 5, 6});
    if (!cycles.empty()) {
        std::string names;
        for (Vertex v : cycles.front()) {
            names += (names.empty() ? "" : " ") + g.name(v);
        }
        throw Error(ErrorKind::PreconditionViolated, "graph has an induced " +
                                                         std::to_string(cycles.front().size()) +
                                                         "-cycle: " + names);
    }
    for (const auto& e : g.edges()) {
        if (!edge_flags(g, e).is_branch) {
            return false;
        }
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        if (on_triangle(g, v) && !belongs_to_leaf(g, v)) {
            return false;
        }
    }
    return true;
}

}  // namespace cotan
