#include "cotan/t2.hpp"

#include <algorithm>
#include <cstdint>

#include "cotan/error.hpp"

namespace cotan {

int sigma(const std::vector<Edge>& edges, const Edge& e)
{
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
        throw Error(ErrorKind::InvalidArgument, "edge is not in the set");
    }
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Edge& f) { return f < e; }));
}

namespace {

void require_simple(const Graph& g, std::string_view what)
{
    if (!g.is_simple()) {
        throw Error(ErrorKind::SimpleGraphRequired, std::string(what) + " needs a simple graph");
    }
}

bool adjacent_edges(const Edge& e, const Edge& f)
{
    return e != f && e.shares_vertex(f);
}

Vertex shared_vertex(const Edge& e, const Edge& f)
{
    return f.contains(e.u) ? e.u : e.v;
}

}  // namespace

std::vector<KGenerator> kk0_generators(const Graph& g)
{
    require_simple(g, "K/K0");
    std::vector<KGenerator> out;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (adjacent_edges(edges[i], edges[j])) {
                out.push_back({edges[i], edges[j], shared_vertex(edges[i], edges[j])});
            }
        }
    }
    return out;
}

namespace {

std::vector<KRelation> build_relations(const Graph& g, const std::vector<KGenerator>& gens)
{
    auto index_of = [&](const Edge& e, const Edge& f) -> std::optional<std::size_t> {
        const KGenerator key{std::min(e, f), std::max(e, f), shared_vertex(e, f)};
        auto it = std::lower_bound(gens.begin(), gens.end(), key);
        if (it != gens.end() && *it == key) {
            return static_cast<std::size_t>(it - gens.begin());
        }
        return std::nullopt;
    };

    std::vector<KRelation> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        out.push_back({1, {{1, Monomial::variable(gens[i].shared), i}}, {gens[i].first, gens[i].second}});
    }

    // Taylor second syzygies on 3-subsets, with Koszul pairs dropped.
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                const std::vector<Edge> f{edges[i], edges[j], edges[k]};
                const Monomial u = Monomial::of_edge(f[0]).lcm(Monomial::of_edge(f[1])).lcm(Monomial::of_edge(f[2]));
                KRelation rel;
                rel.source = f;
                int adjacent_pairs = 0;
                for (int drop = 0; drop < 3; ++drop) {
                    const Edge& p = f[drop == 0 ? 1 : 0];
                    const Edge& q = f[drop == 2 ? 1 : 2];
                    auto idx = index_of(p, q);
                    if (!idx) {
                        continue;
                    }
                    ++adjacent_pairs;
                    const Monomial upq = Monomial::of_edge(p).lcm(Monomial::of_edge(q));
                    rel.terms.push_back({drop % 2 == 0 ? 1 : -1, *u.quotient(upq), *idx});
                }
                if (adjacent_pairs == 0) {
                    continue;
                }
                if (adjacent_pairs == 1) {
                    rel.type = 2;
                } else if (adjacent_pairs == 2) {
                    rel.type = 3;
                } else {
                    const bool star = u.degree() == 4;
                    rel.type = star ? 4 : 5;
                }
                out.push_back(std::move(rel));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<KRelation> kk0_relations(const Graph& g)
{
    return build_relations(g, kk0_generators(g));
}

KModule::KModule(const Graph& g) : ideal_(g), generators_(kk0_generators(g))
{
    relations_ = build_relations(g, generators_);
}

std::optional<std::size_t> KModule::generator_index(const Edge& e, const Edge& f) const
{
    if (!adjacent_edges(e, f)) {
        return std::nullopt;
    }
    const KGenerator key{std::min(e, f), std::max(e, f), shared_vertex(e, f)};
    auto it = std::lower_bound(generators_.begin(), generators_.end(), key);
    if (it != generators_.end() && *it == key) {
        return static_cast<std::size_t>(it - generators_.begin());
    }
    return std::nullopt;
}

std::size_t KModule::generator_index_checked(const Edge& e, const Edge& f) const
{
    auto i = generator_index(e, f);
    if (!i) {
        throw Error(ErrorKind::InvalidArgument, "edges do not form a generator of K/K0");
    }
    return *i;
}

Polynomial epsilon_coefficient(const KGenerator& r, const Edge& f)
{
    if (f != r.first && f != r.second) {
        throw Error(ErrorKind::InvalidArgument, "edge is not part of the generator");
    }
    const Edge& other = f == r.first ? r.second : r.first;
    const int s = sigma({r.first, r.second}, other);
    const Monomial u = Monomial::of_edge(r.first).lcm(Monomial::of_edge(r.second));
    return Polynomial(*u.quotient(Monomial::of_edge(f)), Rational(s % 2 == 0 ? 1 : -1));
}

bool T2Hom::is_zero() const
{
    return std::all_of(images.begin(), images.end(), [](const QuotientClass& q) { return q.is_zero(); });
}

std::string_view to_string(T2Hom::Source source)
{
    return source == T2Hom::Source::PhiEdge ? "phi_edge" : "type_II";
}

std::string_view to_string(T2Status status)
{
    switch (status) {
    case T2Status::Zero:
        return "zero";
    case T2Status::InImagePhi:
        return "in_image_phi";
    case T2Status::NonzeroInT2:
        return "nonzero_in_t2";
    }
    return "?";
}

T2Hom phi_edge(const KModule& k, const Edge& e)
{
    k.graph().edge_index_checked(e);
    T2Hom h;
    h.source = T2Hom::Source::PhiEdge;
    h.edge = e;
    h.degree = -2;
    h.images.assign(k.generators().size(), QuotientClass());
    for (std::size_t i = 0; i < k.generators().size(); ++i) {
        const auto& r = k.generators()[i];
        if (r.first == e || r.second == e) {
            h.images[i] = k.ideal().normal_form(epsilon_coefficient(r, e));
        }
    }
    return h;
}

namespace {

struct Sides {
    Vertex a;
    Vertex b;
    VertexSet na;  // N(a) \ {b}
    VertexSet nb;  // N(b) \ {a}
};

Sides sides_of(const Graph& g, const Edge& e)
{
    g.edge_index_checked(e);
    return {e.u, e.v, set_difference(g.neighbors(e.u), {e.v}), set_difference(g.neighbors(e.v), {e.u})};
}

bool compatible(const Sides& s, const VertexSet& la, const VertexSet& lb)
{
    for (Vertex z : set_intersection(s.na, s.nb)) {
        if (contains(la, z) != contains(lb, z)) {
            return false;
        }
    }
    return true;
}

struct DeltaSets {
    VertexSet delta_a;
    VertexSet delta_b;
    VertexSet delta;
    std::vector<VertexSet> factors;
};

DeltaSets delta_sets(const EdgeIdeal& ideal, const Sides& s, const VertexSet& la, const VertexSet& lb)
{
    const Graph& g = ideal.graph();
    auto off_ideal = [&](Vertex x, const VertexSet& ys) {
        for (Vertex y : ys) {
            if (!ideal.contains(Monomial::product_of({x, y}))) {
                return true;
            }
        }
        return false;
    };
    DeltaSets out;
    for (Vertex x : set_difference(s.na, la)) {
        if (off_ideal(x, lb) || off_ideal(x, la)) {
            out.delta_a.push_back(x);
        }
    }
    for (Vertex x : set_difference(s.nb, lb)) {
        if (off_ideal(x, la) || off_ideal(x, lb)) {
            out.delta_b.push_back(x);
        }
    }
    out.delta = set_union(out.delta_a, out.delta_b);
    const VertexSet ab = make_vertex_set({s.a, s.b});
    for (Vertex x : out.delta) {
        out.factors.push_back(set_difference(g.neighbors(x), ab));
    }
    return out;
}

std::vector<std::pair<VertexSet, VertexSet>> compatible_pairs(const Graph& g, const Sides& s,
                                                               std::size_t cap, bool both_nonempty)
{
    if (s.na.size() + s.nb.size() > cap || s.na.size() >= 63 || s.nb.size() >= 63) {
        throw Error(ErrorKind::CapExceeded, "edge " + g.name(s.a) + g.name(s.b) + ": " +
                                                std::to_string(s.na.size() + s.nb.size()) +
                                                " neighbours exceed cap " + std::to_string(cap));
    }
    auto subset = [](const VertexSet& base, std::uint64_t mask) {
        VertexSet out;
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (mask >> i & 1) {
                out.push_back(base[i]);
            }
        }
        return out;
    };
    const std::uint64_t ka = std::uint64_t(1) << s.na.size();
    const std::uint64_t kb = std::uint64_t(1) << s.nb.size();
    std::vector<std::pair<VertexSet, VertexSet>> out;
    auto push = [&](std::uint64_t ma, std::uint64_t mb) {
        VertexSet la = subset(s.na, ma);
        VertexSet lb = subset(s.nb, mb);
        if (compatible(s, la, lb)) {
            out.emplace_back(std::move(la), std::move(lb));
        }
    };
    for (std::uint64_t ma = 1; ma < ka; ++ma) {
        push(ma, 0);
    }
    for (std::uint64_t mb = 1; mb < kb; ++mb) {
        push(0, mb);
    }
    if (both_nonempty) {
        for (std::uint64_t ma = 1; ma < ka; ++ma) {
            for (std::uint64_t mb = 1; mb < kb; ++mb) {
                push(ma, mb);
            }
        }
    }
    return out;
}

}  // namespace

DeltaData delta_data(const Graph& g, const Edge& e, const VertexSet& la, const VertexSet& lb,
                     std::size_t cap)
{
    require_simple(g, "delta data");
    const Sides s = sides_of(g, e);
    if (make_vertex_set(la) != la || make_vertex_set(lb) != lb) {
        throw Error(ErrorKind::InvalidArgument, "L_a and L_b must be sorted vertex sets");
    }
    if (!set_difference(la, s.na).empty() || !set_difference(lb, s.nb).empty()) {
        throw Error(ErrorKind::InvalidArgument, "L_a must lie in N(a)\\{b} and L_b in N(b)\\{a}");
    }
    if (!compatible(s, la, lb)) {
        throw Error(ErrorKind::InvalidArgument, "L_a and L_b disagree on a common neighbour");
    }
    if (la.empty() && lb.empty()) {
        throw Error(ErrorKind::InvalidArgument, "L_a and L_b are both empty");
    }
    EdgeIdeal ideal(g);
    DeltaSets d = delta_sets(ideal, s, la, lb);
    DeltaData out;
    out.delta_a = d.delta_a;
    out.delta_b = d.delta_b;
    out.delta = d.delta;
    for (std::size_t i = 0; i < d.delta.size(); ++i) {
        out.factors.emplace_back(d.delta[i], d.factors[i]);
    }
    out.products = sqrt_products(d.factors, cap);
    return out;
}

T2Hom make_t2_type2(const KModule& k, const Edge& e, const VertexSet& la, const VertexSet& lb,
                    const Monomial& lambda)
{
    T2Hom h;
    h.source = T2Hom::Source::TypeII;
    h.edge = e;
    h.la = la;
    h.lb = lb;
    h.lambda = lambda;
    h.degree = lambda.degree() - 2;
    h.images.assign(k.generators().size(), QuotientClass());
    auto put = [&](Vertex end, Vertex x) {
        const Edge f(end, x);
        const int s = sigma({e, f}, f);
        h.images[k.generator_index_checked(e, f)] =
            k.ideal().normal_form(lambda.times(x), Rational(s % 2 == 0 ? 1 : -1));
    };
    for (Vertex x : la) {
        put(e.u, x);
    }
    for (Vertex x : lb) {
        put(e.v, x);
    }
    return h;
}

std::vector<ClassifiedT2Hom> type2_t2_homs(const KModule& k, const Edge& e, const T2Options& opt)
{
    const Graph& g = k.graph();
    const Sides s = sides_of(g, e);
    const T2Hom phi = phi_edge(k, e);
    std::vector<ClassifiedT2Hom> out;
    for (const auto& [la, lb] : compatible_pairs(g, s, opt.degree_cap, true)) {
        DeltaSets d = delta_sets(k.ideal(), s, la, lb);
        for (const auto& lambda : sqrt_products(d.factors, opt.product_cap)) {
            T2Hom h = make_t2_type2(k, e, la, lb, lambda);
            T2Status status = T2Status::NonzeroInT2;
            if (h.is_zero()) {
                status = T2Status::Zero;
            } else {
                bool equal = true;
                for (std::size_t i = 0; i < h.images.size() && equal; ++i) {
                    equal = h.images[i] == k.ideal().multiply(phi.images[i], lambda);
                }
                if (equal) {
                    status = T2Status::InImagePhi;
                }
            }
            out.push_back({std::move(h), status});
        }
    }
    return out;
}

std::vector<ClassifiedT2Hom> type2_t2_homs(const Graph& g, const Edge& e, const T2Options& opt)
{
    return type2_t2_homs(KModule(g), e, opt);
}

T2Result t2_vanishes_trianglefree(const Graph& g, const T2Options& opt, bool check_both_nonempty)
{
    require_simple(g, "T2 vanishing criterion");
    auto triangles = induced_cycles(g, {3});
    if (!triangles.empty()) {
        const auto& t = triangles.front();
        throw Error(ErrorKind::TriangleFound,
                    "graph has the 3-cycle " + g.name(t[0]) + " " + g.name(t[1]) + " " + g.name(t[2]));
    }
    EdgeIdeal ideal(g);
    T2Result out;
    for (const auto& e : g.edges()) {
        const Sides s = sides_of(g, e);
        const VertexSet around = set_union(g.neighbors(s.a), g.neighbors(s.b));
        for (const auto& [la, lb] : compatible_pairs(g, s, opt.degree_cap, check_both_nonempty)) {
            DeltaSets d = delta_sets(ideal, s, la, lb);
            VertexSet covered = set_union(make_vertex_set({s.a, s.b}), set_union(set_union(la, lb), d.delta));
            VertexSet extras = set_difference(around, covered);
            if (opt.literal_condition) {
                if (auto w = product_times_vertices_in_ideal(d.factors, extras, ideal)) {
                    out.vanishes = false;
                    out.witness = T2Witness{e, la, lb, squarefree_part(w->product), w->extra.support().front()};
                    return out;
                }
                continue;
            }
            if (extras.empty()) {
                continue;
            }
            const VertexSet sides = set_union(la, lb);
            for (const auto& lambda : sqrt_products(d.factors, opt.product_cap)) {
                auto outside = [&](Vertex y) { return !ideal.contains(lambda.times(y)); };
                if (std::none_of(sides.begin(), sides.end(), outside)) {
                    continue;  // phi^lambda is zero
                }
                auto x = std::find_if(extras.begin(), extras.end(), outside);
                if (x != extras.end()) {
                    out.vanishes = false;
                    out.witness = T2Witness{e, la, lb, lambda, *x};
                    return out;
                }
            }
        }
    }
    return out;
}

bool t2_zero_sufficient(const Graph& g)
{
    return induced_cycles(g, {3, 4}).empty();
}

bool validate_t2hom(const KModule& k, const T2Hom& h)
{
    if (h.images.size() != k.generators().size()) {
        return false;
    }
    for (const auto& rel : k.relations()) {
        Polynomial sum;
        for (const auto& t : rel.terms) {
            sum += h.images[t.generator].polynomial().times(t.coefficient).scaled(t.sign);
        }
        if (!k.ideal().normal_form(sum).is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace cotan
