#include "cotan/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "cotan/error.hpp"

namespace cotan {

VertexSet make_vertex_set(std::vector<Vertex> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

bool contains(const VertexSet& set, Vertex v)
{
    return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph::Graph(std::vector<std::string> names, const std::vector<Edge>& edges)
{
    const std::size_t n = names.size();
    for (const auto& e : edges) {
        if (e.v >= n) {
            throw Error(ErrorKind::InvalidArgument, "edge endpoint is not a declared vertex");
        }
    }
    {
        std::vector<std::string> sorted = names;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw Error(ErrorKind::NameCollision, "duplicate vertex name '" + *dup + "'");
        }
        if (!sorted.empty() && sorted.front().empty()) {
            throw Error(ErrorKind::InvalidArgument, "empty vertex name");
        }
    }
    if (edges.empty()) {
        throw Error(ErrorKind::EmptyGraph, "graph has no edges");
    }

    std::vector<char> used(n, 0);
    for (const auto& e : edges) {
        used[e.u] = used[e.v] = 1;
    }
    std::vector<Vertex> remap(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (used[v]) {
            remap[v] = names_.size();
            names_.push_back(std::move(names[v]));
        } else {
            stripped_.push_back(std::move(names[v]));
        }
    }

    for (const auto& e : edges) {
        edges_.emplace_back(remap[e.u], remap[e.v]);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    const std::size_t m = names_.size();
    adjacency_.assign(m * m, 0);
    neighbors_.assign(m, {});
    for (const auto& e : edges_) {
        adjacency_[e.u * m + e.v] = adjacency_[e.v * m + e.u] = 1;
        neighbors_[e.u].push_back(e.v);
        if (!e.is_loop()) {
            neighbors_[e.v].push_back(e.u);
        } else {
            ++loops_;
        }
    }
    for (auto& nb : neighbors_) {
        nb = make_vertex_set(std::move(nb));
    }
}

std::optional<Vertex> Graph::find(std::string_view name) const
{
    for (Vertex v = 0; v < names_.size(); ++v) {
        if (names_[v] == name) {
            return v;
        }
    }
    return std::nullopt;
}

Vertex Graph::vertex(std::string_view name) const
{
    if (auto v = find(name)) {
        return *v;
    }
    throw Error(ErrorKind::UnknownVertex, "no vertex named '" + std::string(name) + "'");
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::edge_index_checked(const Edge& e) const
{
    if (e.v >= size()) {
        throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
    }
    if (auto i = edge_index(e)) {
        return *i;
    }
    throw Error(ErrorKind::InvalidArgument,
                "no edge " + name(e.u) + "-" + name(e.v) + " in graph");
}

int Graph::degree(Vertex v) const
{
    const auto& nb = neighbors(v);
    return static_cast<int>(nb.size()) + (has_loop(v) ? 1 : 0);
}

Graph Graph::renamed(std::string_view from, std::string to) const
{
    std::vector<std::string> names = names_;
    names.at(vertex(from)) = std::move(to);
    return Graph(std::move(names), edges_);
}

std::string Graph::to_string() const
{
    std::ostringstream out;
    for (const auto& e : edges_) {
        out << names_[e.u] << ' ' << names_[e.v] << '\n';
    }
    return out.str();
}

Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edge_list)
{
    if (edge_list.empty()) {
        throw Error(ErrorKind::EmptyGraph, "empty edge list");
    }
    std::vector<std::string> names;
    std::map<std::string, Vertex> index;
    auto intern = [&](const std::string& s) {
        if (s.empty()) {
            throw Error(ErrorKind::InvalidArgument, "empty vertex name");
        }
        auto [it, inserted] = index.try_emplace(s, names.size());
        if (inserted) {
            names.push_back(s);
        }
        return it->second;
    };
    std::vector<Edge> edges;
    for (const auto& [a, b] : edge_list) {
        Vertex u = intern(a);
        Vertex v = intern(b);
        edges.emplace_back(u, v);
    }
    return Graph(std::move(names), edges);
}

std::set<std::pair<std::string, std::string>> named_edges(const Graph& g)
{
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& e : g.edges()) {
        auto a = g.name(e.u);
        auto b = g.name(e.v);
        if (b < a) {
            std::swap(a, b);
        }
        out.emplace(std::move(a), std::move(b));
    }
    return out;
}

LocalGraph::LocalGraph(VertexSet vertices, std::vector<Edge> edges)
    : vertices_(make_vertex_set(std::move(vertices))), edges_(std::move(edges))
{
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool LocalGraph::adjacent(Vertex x, Vertex y) const
{
    return std::binary_search(edges_.begin(), edges_.end(), Edge(x, y));
}

VertexSet LocalGraph::neighbors(Vertex x) const
{
    VertexSet out;
    for (const auto& e : edges_) {
        if (e.contains(x)) {
            out.push_back(e.other(x));
        }
    }
    return make_vertex_set(std::move(out));
}

std::vector<VertexSet> LocalGraph::components() const
{
    std::map<Vertex, Vertex> parent;
    for (Vertex v : vertices_) {
        parent[v] = v;
    }
    std::function<Vertex(Vertex)> root = [&](Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& e : edges_) {
        Vertex a = root(e.u);
        Vertex b = root(e.v);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<Vertex, VertexSet> groups;
    for (Vertex v : vertices_) {
        groups[root(v)].push_back(v);
    }
    std::vector<VertexSet> out;
    for (auto& [r, members] : groups) {
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

const VertexSet& neighborhood(const Graph& g, Vertex v)
{
    if (v >= g.size()) {
        throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
    }
    return g.neighbors(v);
}

LocalGraph complement_neighborhood(const Graph& g, Vertex v)
{
    const VertexSet& nb = neighborhood(g, v);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (!g.adjacent(nb[i], nb[j])) {
                edges.emplace_back(nb[i], nb[j]);
            }
        }
    }
    return LocalGraph(nb, std::move(edges));
}

namespace {

bool is_leaf_edge(const Graph& g, const Edge& e)
{
    return !e.is_loop() && (g.degree(e.u) == 1 || g.degree(e.v) == 1);
}

}  // namespace

EdgeFlags edge_flags(const Graph& g, const Edge& e)
{
    g.edge_index_checked(e);
    EdgeFlags flags;
    flags.is_leaf = is_leaf_edge(g, e);
    flags.is_isolated_edge = !e.is_loop() && g.degree(e.u) == 1 && g.degree(e.v) == 1;
    flags.is_isolated_loop = e.is_loop() && g.degree(e.u) == 2;
    for (const auto& f : g.edges()) {
        if (f != e && f.shares_vertex(e) && is_leaf_edge(g, f)) {
            flags.is_branch = true;
            break;
        }
    }
    return flags;
}

bool on_triangle(const Graph& g, Vertex v)
{
    const VertexSet& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (nb[i] != v && nb[j] != v && g.adjacent(nb[i], nb[j])) {
                return true;
            }
        }
    }
    return false;
}

bool belongs_to_leaf(const Graph& g, Vertex v)
{
    for (Vertex w : g.neighbors(v)) {
        if (w != v && (g.degree(v) == 1 || g.degree(w) == 1)) {
            return true;
        }
    }
    return false;
}

std::vector<Cycle> induced_cycles(const Graph& g, const std::set<int>& lengths)
{
    if (!g.is_simple()) {
        throw Error(ErrorKind::SimpleGraphRequired, "induced cycle search needs a simple graph");
    }
    for (int len : lengths) {
        if (len < 3 || len > 6) {
            throw Error(ErrorKind::InvalidArgument, "cycle lengths must lie in 3..6");
        }
    }
    std::vector<Cycle> out;
    if (lengths.empty()) {
        return out;
    }
    const int max_len = *lengths.rbegin();

    // Grow chordless paths from the smallest vertex s; a path closes into an
    // induced cycle when its new end is adjacent to s.  Requiring
    // path[1] < last vertex removes the reflected duplicate.
    std::vector<Vertex> path;
    std::function<void(Vertex)> extend = [&](Vertex s) {
        const Vertex last = path.back();
        for (Vertex w : g.neighbors(last)) {
            if (w <= s || std::find(path.begin(), path.end(), w) != path.end()) {
                continue;
            }
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (g.adjacent(w, path[i])) {
                    chord = true;
                    break;
                }
            }
            if (chord) {
                continue;
            }
            const int len = static_cast<int>(path.size()) + 1;
            if (path.size() >= 2 && g.adjacent(w, s)) {
                if (path[1] < w && lengths.count(len)) {
                    Cycle c = path;
                    c.push_back(w);
                    out.push_back(std::move(c));
                }
                continue;
            }
            if (len < max_len) {
                path.push_back(w);
                extend(s);
                path.pop_back();
            }
        }
    };
    for (Vertex s = 0; s < g.size(); ++s) {
        path = {s};
        extend(s);
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

Graph polarize(const Graph& g)
{
    std::vector<std::string> names = g.names();
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (!e.is_loop()) {
            edges.push_back(e);
            continue;
        }
        std::string fresh = g.name(e.u) + "'pol";
        if (std::find(names.begin(), names.end(), fresh) != names.end()) {
            throw Error(ErrorKind::NameCollision, "polarization vertex '" + fresh + "' already exists");
        }
        names.push_back(fresh);
        edges.emplace_back(e.u, names.size() - 1);
    }
    return Graph(std::move(names), edges);
}

std::vector<SeparationPair> separation_pairs(const Graph& g, Vertex v)
{
    std::vector<SeparationPair> pairs;
    const VertexSet& nb = neighborhood(g, v);
    if (nb.size() == 1 && nb.front() == v) {
        pairs.push_back({{}, {v}});
        return pairs;
    }
    auto comps = complement_neighborhood(g, v).components();
    const std::size_t k = comps.size();
    if (k < 2) {
        return pairs;
    }
    if (k > 63) {
        throw Error(ErrorKind::CapExceeded, "too many components in the neighbourhood complement");
    }
    // The B side carries v when v has a loop; otherwise the component with
    // the smallest vertex stays on the A side.
    std::size_t anchor = 0;
    bool anchor_in_b = false;
    if (g.has_loop(v)) {
        for (std::size_t i = 0; i < k; ++i) {
            if (contains(comps[i], v)) {
                anchor = i;
            }
        }
        anchor_in_b = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < k; ++i) {
        if (i != anchor) {
            rest.push_back(i);
        }
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rest.size()); ++mask) {
        VertexSet chosen = {};
        VertexSet others = comps[anchor];
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (mask >> j & 1) {
                chosen = set_union(chosen, comps[rest[j]]);
            } else {
                others = set_union(others, comps[rest[j]]);
            }
        }
        if (anchor_in_b) {
            pairs.push_back({chosen, others});
        } else {
            pairs.push_back({others, chosen});
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<VertexSeparations> separating_vertices(const Graph& g)
{
    std::vector<VertexSeparations> out;
    for (Vertex v = 0; v < g.size(); ++v) {
        auto pairs = separation_pairs(g, v);
        if (!pairs.empty()) {
            out.push_back({v, std::move(pairs)});
        }
    }
    return out;
}

bool is_separation_pair(const Graph& g, Vertex v, const SeparationPair& pair)
{
    if (v >= g.size()) {
        return false;
    }
    const VertexSet& nb = g.neighbors(v);
    auto sorted = [](const VertexSet& s) { return make_vertex_set(s) == s; };
    if (!sorted(pair.a) || !sorted(pair.b)) {
        return false;
    }
    if (pair.a.empty()) {
        return pair.b == VertexSet{v} && nb == VertexSet{v} && g.degree(v) == 2;
    }
    if (pair.b.empty() || !set_intersection(pair.a, pair.b).empty()) {
        return false;
    }
    if (set_union(pair.a, pair.b) != nb || contains(pair.a, v)) {
        return false;
    }
    for (Vertex a : pair.a) {
        for (Vertex b : pair.b) {
            if (!g.adjacent(a, b)) {
                return false;
            }
        }
    }
    return true;
}

std::string separation_vertex_name(const Graph& g, Vertex v)
{
    std::string fresh = g.name(v) + "'";
    while (g.find(fresh)) {
        fresh += "'";
    }
    return fresh;
}

Graph separate(const Graph& g, Vertex v, const SeparationPair& pair)
{
    if (!is_separation_pair(g, v, pair)) {
        throw Error(ErrorKind::NotASeparationPair, "not a separation pair of the given vertex");
    }
    std::vector<std::string> names = g.names();
    names.push_back(separation_vertex_name(g, v));
    const Vertex fresh = names.size() - 1;
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (e.contains(v) && contains(pair.b, e.other(v))) {
            edges.emplace_back(fresh, e.other(v));
        } else {
            edges.push_back(e);
        }
    }
    return Graph(std::move(names), edges);
}

bool is_inseparable(const Graph& g)
{
    if (!g.is_simple()) {
        return false;
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!complement_neighborhood(g, v).is_connected()) {
            return false;
        }
    }
    return true;
}

Graph family(FamilyKind kind, int n)
{
    auto names_for = [](int count) {
        std::vector<std::string> names;
        for (int i = 0; i < count; ++i) {
            names.push_back("a" + std::to_string(i));
        }
        return names;
    };
    std::vector<Edge> edges;
    switch (kind) {
    case FamilyKind::Cycle:
        if (n < 3) {
            throw Error(ErrorKind::InvalidArgument, "cycle needs n >= 3");
        }
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(i, (i + 1) % n);
        }
        return Graph(names_for(n), edges);
    case FamilyKind::Path:
        if (n < 2) {
            throw Error(ErrorKind::InvalidArgument, "path needs n >= 2");
        }
        for (int i = 0; i + 1 < n; ++i) {
            edges.emplace_back(i, i + 1);
        }
        return Graph(names_for(n), edges);
    case FamilyKind::Complete:
        if (n < 2) {
            throw Error(ErrorKind::InvalidArgument, "complete graph needs n >= 2");
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                edges.emplace_back(i, j);
            }
        }
        return Graph(names_for(n), edges);
    case FamilyKind::Star:
        if (n < 2) {
            throw Error(ErrorKind::InvalidArgument, "star needs n >= 2");
        }
        for (int i = 1; i <= n; ++i) {
            edges.emplace_back(0, i);
        }
        return Graph(names_for(n + 1), edges);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family");
}

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& relations)
    : elements_(std::move(elements))
{
    const std::size_t n = elements_.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(elements_[i], i).second) {
            throw Error(ErrorKind::NameCollision, "duplicate poset element '" + elements_[i] + "'");
        }
    }
    leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        leq_[i * n + i] = 1;
    }
    for (const auto& [p, q] : relations) {
        auto ip = index.find(p);
        auto iq = index.find(q);
        if (ip == index.end() || iq == index.end()) {
            throw Error(ErrorKind::UnknownVertex, "relation mentions an undeclared element");
        }
        leq_[ip->second * n + iq->second] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!leq_[i * n + k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (leq_[k * n + j]) {
                    leq_[i * n + j] = 1;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (leq_[i * n + j] && leq_[j * n + i]) {
                throw Error(ErrorKind::InvalidArgument, "relations are not antisymmetric ("
                                                            + elements_[i] + ", " + elements_[j] + ")");
            }
        }
    }
}

Poset Poset::chain(int n)
{
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < n; ++i) {
        names.push_back("p" + std::to_string(i));
        if (i > 0) {
            rel.emplace_back(names[i - 1], names[i]);
        }
    }
    return Poset(names, rel);
}

Poset Poset::antichain(int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        names.push_back("p" + std::to_string(i));
    }
    return Poset(names, {});
}

int Poset::height() const
{
    const std::size_t n = size();
    std::vector<int> memo(n, -1);
    std::function<int(std::size_t)> up = [&](std::size_t p) {
        if (memo[p] >= 0) {
            return memo[p];
        }
        int best = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (q != p && leq(p, q)) {
                best = std::max(best, up(q) + 1);
            }
        }
        return memo[p] = best;
    };
    int h = 0;
    for (std::size_t p = 0; p < n; ++p) {
        h = std::max(h, up(p));
    }
    return h;
}

Graph letterplace2(const Poset& p)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p.size(); ++i) {
        names.push_back(p.name(i) + "1");
        names.push_back(p.name(i) + "2");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p.leq(i, j)) {
                edges.emplace_back(2 * i, 2 * j + 1);
            }
        }
    }
    return Graph(std::move(names), edges);
}

}  // namespace cotan
