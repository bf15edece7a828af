#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "cotan/edge_ideal.hpp"
#include "cotan/error.hpp"
#include "cotan/graph_io.hpp"
#include "support.hpp"

using namespace cotan;
namespace ct = cotan::testing;

namespace {

Monomial mono(const Graph& g, const std::vector<std::string>& vars)
{
    std::vector<Vertex> vs;
    for (const auto& v : vars) {
        vs.push_back(g.vertex(v));
    }
    return Monomial::product_of(vs);
}

// All degree-d monomials in n variables.
std::vector<Monomial> all_monomials(std::size_t n, int d)
{
    std::vector<Monomial> out;
    std::vector<Vertex> pick;
    std::function<void(Vertex, int)> rec = [&](Vertex from, int left) {
        if (left == 0) {
            out.push_back(Monomial::product_of(pick));
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            pick.push_back(v);
            rec(v, left - 1);
            pick.pop_back();
        }
    };
    rec(0, d);
    return out;
}

}  // namespace

TEST_SUITE("monomial_algebra")
{
    TEST_CASE("squarefree_part")
    {
        Graph g = parse_edge_list_string("x y\ny z\n");
        CHECK(squarefree_part(mono(g, {"x", "x", "y"})) == mono(g, {"x", "y"}));
        CHECK(squarefree_part(Monomial()).is_unit());
        CHECK(squarefree_part(mono(g, {"x", "x", "x", "y", "y", "z"})) == mono(g, {"x", "y", "z"}));
    }

    TEST_CASE("rendering")
    {
        Graph g = parse_edge_list_string("a b\n");
        CHECK(mono(g, {"b", "a", "a"}).to_string(g) == "a^2*b");
        CHECK(Monomial().to_string(g) == "1");
    }

    TEST_CASE("contains")
    {
        Graph c4 = parse_edge_list_string("a b\nb c\nc d\nd a\n");
        EdgeIdeal i(c4);
        CHECK_FALSE(i.contains(mono(c4, {"a", "c"})));
        for (const auto& x : {"a", "b", "c", "d"}) {
            CHECK(i.contains(mono(c4, {"a", "b", x})));
        }
        Graph loop = parse_edge_list_string("a a\na b\n");
        EdgeIdeal il(loop);
        CHECK_FALSE(il.contains(mono(loop, {"a"})));
        CHECK(il.contains(mono(loop, {"a", "a"})));
    }

    TEST_CASE("contains is monotone under multiplication")
    {
        Graph g = parse_edge_list_string("a a\na b\nb c\nc d\n");
        EdgeIdeal ideal(g);
        for (int d = 0; d <= 3; ++d) {
            for (const auto& m : all_monomials(g.size(), d)) {
                if (ideal.contains(m)) {
                    for (Vertex v = 0; v < g.size(); ++v) {
                        CHECK(ideal.contains(m.times(v)));
                    }
                }
            }
        }
    }

    TEST_CASE("graded_basis examples")
    {
        Graph c4 = parse_edge_list_string("a b\nb c\nc d\nd a\n");
        EdgeIdeal i(c4);
        CHECK(i.graded_basis(1).size() == 4);
        auto b2 = i.graded_basis(2);
        std::set<Monomial> want{mono(c4, {"a", "a"}), mono(c4, {"b", "b"}), mono(c4, {"c", "c"}),
                                mono(c4, {"d", "d"}), mono(c4, {"a", "c"}), mono(c4, {"b", "d"})};
        CHECK(std::set<Monomial>(b2.begin(), b2.end()) == want);
        CHECK(b2.size() == 6);
        EdgeIdeal k2(parse_edge_list_string("a b\n"));
        REQUIRE(k2.graded_basis(0).size() == 1);
        CHECK(k2.graded_basis(0)[0].is_unit());
    }

    TEST_CASE("graded_basis matches brute-force counts")
    {
        std::mt19937 rng(7);
        for (int round = 0; round < 12; ++round) {
            const int n = 3 + round % 6;
            auto slots = ct::pair_slots(n, true);
            std::uint64_t mask = 0;
            while (mask == 0) {
                for (std::size_t k = 0; k < slots.size(); ++k) {
                    mask |= std::uint64_t{rng() % 3 == 0} << k;
                }
            }
            Graph g = ct::graph_from_mask(n, slots, mask);
            EdgeIdeal ideal(g);
            for (int d = 0; d <= (n > 6 ? 4 : 6); ++d) {
                std::size_t brute = 0;
                for (const auto& m : all_monomials(g.size(), d)) {
                    brute += !ideal.contains(m);
                }
                auto basis = ideal.graded_basis(d);
                CHECK(basis.size() == brute);
                CHECK(std::is_sorted(basis.begin(), basis.end()));
            }
        }
    }

    TEST_CASE("normal_form")
    {
        Graph c4 = parse_edge_list_string("a b\nb c\nc d\nd a\n");
        EdgeIdeal i(c4);
        Polynomial p(mono(c4, {"a", "b"}), 2);
        p.add_term(mono(c4, {"a", "c"}), -3);
        auto q = i.normal_form(p);
        CHECK(q.polynomial() == Polynomial(mono(c4, {"a", "c"}), -3));
        Polynomial z(mono(c4, {"a", "b"}));
        z -= Polynomial(mono(c4, {"a", "b"}));
        CHECK(i.normal_form(z).is_zero());
        Graph xy = parse_edge_list_string("x y\n");
        CHECK(EdgeIdeal(xy).normal_form(mono(xy, {"x", "x", "y"})).is_zero());
    }

    TEST_CASE("sqrt_products")
    {
        Graph c5 = family(FamilyKind::Cycle, 5);
        auto one = sqrt_products({});
        REQUIRE(one.size() == 1);
        CHECK(one[0].is_unit());
        auto a3 = sqrt_products({{3}, {3}});
        REQUIRE(a3.size() == 1);
        CHECK(a3[0] == Monomial::variable(3));
        CHECK(sqrt_products({{3}, {}}).empty());
        auto many = sqrt_products({{0, 1}, {1, 2}, {0, 2}});
        for (const auto& m : many) {
            CHECK(m.is_squarefree());
        }
        CHECK_THROWS_AS(sqrt_products({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}, {10, 11, 12, 13, 14}}, 10), Error);
    }

    TEST_CASE("product_times_set_in_ideal examples")
    {
        Graph c4 = parse_edge_list_string("a b\nb c\nc d\nd a\n");
        EdgeIdeal i4(c4);
        CHECK_FALSE(product_times_set_in_ideal({{c4.vertex("c")}, {c4.vertex("d")}}, {Monomial()}, i4).has_value());

        Graph c7 = family(FamilyKind::Cycle, 7);
        EdgeIdeal i7(c7);
        auto w = product_times_set_in_ideal({{5}, {3}}, {Monomial()}, i7);
        REQUIRE(w.has_value());
        CHECK(squarefree_part(w->product) == Monomial::product_of({3, 5}));

        Graph p3 = parse_edge_list_string("a b\nb c\n");
        EdgeIdeal i3(p3);
        auto wc = product_times_set_in_ideal({}, {mono(p3, {"c"})}, i3);
        REQUIRE(wc.has_value());
        CHECK(wc->product.is_unit());
        CHECK(wc->extra == mono(p3, {"c"}));
    }

    TEST_CASE("pruned containment equals exhaustive tuple scan")
    {
        std::mt19937 rng(99);
        for (int round = 0; round < 300; ++round) {
            const int n = 4 + round % 5;
            auto slots = ct::pair_slots(n, false);
            std::uint64_t mask = 0;
            while (mask == 0) {
                for (std::size_t k = 0; k < slots.size(); ++k) {
                    mask |= std::uint64_t{rng() % 2 == 0} << k;
                }
            }
            Graph g = ct::graph_from_mask(n, slots, mask);
            EdgeIdeal ideal(g);
            const std::size_t nv = g.size();
            std::vector<VertexSet> factors(rng() % 4);
            for (auto& f : factors) {
                std::vector<Vertex> vs;
                for (Vertex v = 0; v < nv; ++v) {
                    if (rng() % 3 == 0) {
                        vs.push_back(v);
                    }
                }
                f = make_vertex_set(vs);
            }
            std::vector<Monomial> extras;
            for (Vertex v = 0; v < nv; ++v) {
                if (rng() % 2 == 0) {
                    extras.push_back(Monomial::variable(v));
                }
            }
            if (rng() % 4 == 0) {
                extras.push_back(Monomial());
            }
            bool brute = true;
            std::vector<Vertex> pick;
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == factors.size()) {
                    Monomial p = Monomial::product_of(pick);
                    for (const auto& s : extras) {
                        brute = brute && ideal.contains(p * s);
                    }
                    return;
                }
                for (Vertex v : factors[i]) {
                    pick.push_back(v);
                    rec(i + 1);
                    pick.pop_back();
                }
            };
            rec(0);
            auto w = product_times_set_in_ideal(factors, extras, ideal);
            CHECK(brute == !w.has_value());
            if (w) {
                CHECK_FALSE(ideal.contains(w->product * w->extra));
            }
        }
    }

    TEST_CASE("minimal_elements")
    {
        auto m = minimal_elements({Monomial::product_of({0, 1}), Monomial::variable(0), Monomial::product_of({1, 2})});
        CHECK(m.size() == 2);
    }
}
