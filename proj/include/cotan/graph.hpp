#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cotan {

using Vertex = std::size_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> vertices);
bool contains(const VertexSet& set, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

// Unordered vertex pair stored with u <= v; u == v is a loop.  The derived
// ordering is the canonical edge order: lexicographic on sorted indices.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool is_loop() const { return u == v; }
    bool contains(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool shares_vertex(const Edge& e) const
    {
        return contains(e.u) || contains(e.v);
    }

    auto operator<=>(const Edge&) const = default;
};

// Finite graph with optional loops.  Vertices carry names and a fixed order;
// multiplicities are discarded and isolated vertices are stripped at
// construction (their names are kept in stripped_vertices()).
class Graph {
public:
    Graph(std::vector<std::string> names, const std::vector<Edge>& edges);

    std::size_t size() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Vertex v) const { return names_.at(v); }
    std::optional<Vertex> find(std::string_view name) const;
    Vertex vertex(std::string_view name) const;  // throws UnknownVertex

    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<std::size_t> edge_index(const Edge& e) const;
    std::size_t edge_index_checked(const Edge& e) const;

    // For x == y this asks for a loop.
    bool adjacent(Vertex x, Vertex y) const { return adjacency_[x * size() + y] != 0; }
    bool has_loop(Vertex v) const { return adjacent(v, v); }

    // N(v); contains v exactly when v carries a loop.
    const VertexSet& neighbors(Vertex v) const { return neighbors_.at(v); }

    // A loop adds 2 to the degree of its vertex.
    int degree(Vertex v) const;
    bool is_simple() const { return loops_ == 0; }
    std::size_t loop_count() const { return loops_; }

    const std::vector<std::string>& stripped_vertices() const { return stripped_; }

    Graph renamed(std::string_view from, std::string to) const;
    std::string to_string() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.names_ == b.names_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<char> adjacency_;
    std::vector<VertexSet> neighbors_;
    std::vector<std::string> stripped_;
    std::size_t loops_ = 0;
};

// Builds a graph from named endpoint pairs; vertex order is order of first
// appearance.  Throws EmptyGraph on an empty list.
Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edge_list);

// Edge set as sorted name pairs, independent of vertex order.
std::set<std::pair<std::string, std::string>> named_edges(const Graph& g);

// Simple graph on a subset of a parent graph's vertices.  Vertex
// indices stay those of the parent; isolated vertices are allowed.
class LocalGraph {
public:
    LocalGraph(VertexSet vertices, std::vector<Edge> edges);

    const VertexSet& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool adjacent(Vertex x, Vertex y) const;
    VertexSet neighbors(Vertex x) const;

    std::vector<VertexSet> components() const;
    // The empty graph counts as connected.
    bool is_connected() const { return components().size() <= 1; }

private:
    VertexSet vertices_;
    std::vector<Edge> edges_;
};

struct EdgeFlags {
    bool is_leaf = false;
    bool is_branch = false;
    bool is_isolated_edge = false;
    bool is_isolated_loop = false;
};

using Cycle = std::vector<Vertex>;

// (A, B) with A and B disjoint, A ∪ B = N(v), every a in A adjacent to every
// b in B.  A is empty only for the isolated-loop pair (∅, {v}).
struct SeparationPair {
    VertexSet a;
    VertexSet b;

    auto operator<=>(const SeparationPair&) const = default;
};

struct VertexSeparations {
    Vertex vertex;
    std::vector<SeparationPair> pairs;
};

const VertexSet& neighborhood(const Graph& g, Vertex v);

// N̄(v): complement of the underlying simple graph of G restricted to N(v).
LocalGraph complement_neighborhood(const Graph& g, Vertex v);

EdgeFlags edge_flags(const Graph& g, const Edge& e);

// True when v is on some 3-cycle (two adjacent neighbours).
bool on_triangle(const Graph& g, Vertex v);

// True when v is an endpoint of a leaf edge.
bool belongs_to_leaf(const Graph& g, Vertex v);

// All induced cycles whose length is in `lengths` (each within 3..6), each
// reported once, starting at its smallest vertex and continuing towards the
// smaller of that vertex's two cycle neighbours.
std::vector<Cycle> induced_cycles(const Graph& g, const std::set<int>& lengths);

// Replaces each loop xx by a pendant edge x–x'pol.
Graph polarize(const Graph& g);

std::vector<VertexSeparations> separating_vertices(const Graph& g);
std::vector<SeparationPair> separation_pairs(const Graph& g, Vertex v);
bool is_separation_pair(const Graph& g, Vertex v, const SeparationPair& pair);

// Adds a fresh vertex (name v + "'", extended with further primes on
// collision), moves the edges v–B to v'–B.
Graph separate(const Graph& g, Vertex v, const SeparationPair& pair);
std::string separation_vertex_name(const Graph& g, Vertex v);

bool is_inseparable(const Graph& g);

enum class FamilyKind { Cycle, Path, Complete, Star };

// cycle(n): a0..a(n-1), n >= 3.  path(n): n vertices, n >= 2.
// complete(n): K_n, n >= 2.  star(n): centre a0 with leaves a1..an, n >= 2.
Graph family(FamilyKind kind, int n);

class Poset {
public:
    // `relations` are arbitrary p <= q pairs; the reflexive-transitive
    // closure is taken.  Throws InvalidArgument on a cycle.
    Poset(std::vector<std::string> elements,
          const std::vector<std::pair<std::string, std::string>>& relations);

    static Poset chain(int n);
    static Poset antichain(int n);

    std::size_t size() const { return elements_.size(); }
    const std::string& name(std::size_t i) const { return elements_.at(i); }
    bool leq(std::size_t p, std::size_t q) const { return leq_[p * size() + q] != 0; }
    // Length of a longest chain; a single element has height 0.
    int height() const;

private:
    std::vector<std::string> elements_;
    std::vector<char> leq_;
};

// Graph of the second letterplace ideal: vertices p1, p2 per element and an
// edge p1–q2 for every relation p <= q.
Graph letterplace2(const Poset& p);

}  // namespace cotan
