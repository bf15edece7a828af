#include "cotan/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cotan/error.hpp"

namespace cotan::oracle {

using linalg::EchelonBasis;
using linalg::SparseVector;
using linalg::SparseVectorBuilder;

HomSystem::HomSystem(const EdgeIdeal& ideal, std::size_t slots, int target_degree,
                     const std::vector<SlotRelation>& relations)
    : ideal_(&ideal), slots_(slots)
{
    target_basis_ = ideal.graded_basis(target_degree);
    for (std::size_t k = 0; k < target_basis_.size(); ++k) {
        position_.emplace(target_basis_[k], k);
    }
    columns_ = slots_ * target_basis_.size();
    if (columns_ == 0) {
        return;
    }
    EchelonBasis echelon;
    for (const auto& rel : relations) {
        std::map<Monomial, SparseVectorBuilder> by_monomial;
        for (const auto& t : rel) {
            for (std::size_t k = 0; k < target_basis_.size(); ++k) {
                Monomial m = t.coefficient * target_basis_[k];
                if (ideal.contains(m)) {
                    continue;
                }
                by_monomial[m].add(t.slot * target_basis_.size() + k, Rational(t.sign));
            }
        }
        for (const auto& [m, b] : by_monomial) {
            SparseVector row = b.build();
            if (!row.is_zero()) {
                echelon.insert(row);
                rows_.push_back(std::move(row));
            }
        }
    }
    rank_ = echelon.rank();
}

SparseVector HomSystem::vectorize(const std::vector<QuotientClass>& images) const
{
    if (images.size() != slots_) {
        throw std::logic_error("image table has the wrong number of slots");
    }
    std::vector<SparseVector::Entry> e;
    for (std::size_t s = 0; s < images.size(); ++s) {
        for (const auto& [m, c] : images[s].terms()) {
            auto it = position_.find(m);
            if (it == position_.end()) {
                throw std::logic_error("image term outside the target graded piece");
            }
            e.emplace_back(s * target_basis_.size() + it->second, c);
        }
    }
    return SparseVector(std::move(e));
}

bool HomSystem::satisfies(const SparseVector& x) const
{
    return std::all_of(rows_.begin(), rows_.end(), [&](const SparseVector& r) { return r.dot(x) == 0; });
}

std::vector<std::vector<QuotientClass>> HomSystem::basis() const
{
    std::vector<std::vector<QuotientClass>> out;
    if (columns_ == 0) {
        return out;
    }
    const std::size_t width = target_basis_.size();
    for (const auto& v : linalg::nullspace(rows_, columns_)) {
        std::vector<Polynomial> images(slots_);
        for (const auto& [col, c] : v.entries()) {
            images[col / width].add_term(target_basis_[col % width], c);
        }
        std::vector<QuotientClass> table;
        for (const auto& p : images) {
            table.push_back(ideal_->normal_form(p));
        }
        out.push_back(std::move(table));
    }
    return out;
}

bool GradedReport::cohomology_vanishes_on_window() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeRow& r) { return r.cohomology_dim == 0; });
}

bool GradedReport::generation_ok() const
{
    return std::all_of(degrees.begin(), degrees.end(),
                       [](const DegreeRow& r) { return r.generation_ok.value_or(true); });
}

namespace {

void require_window(Window w)
{
    if (w.lo > w.hi) {
        throw Error(ErrorKind::InvalidArgument, "empty degree window");
    }
}

// Inserts vectors that must lie in the solution space.
std::size_t span_rank(const HomSystem& sys, EchelonBasis& echelon, const std::vector<QuotientClass>& images,
                      std::string_view what)
{
    SparseVector x = sys.vectorize(images);
    if (!sys.satisfies(x)) {
        throw std::logic_error(std::string(what) + " does not satisfy the relations");
    }
    echelon.insert(x);
    return echelon.rank();
}

std::vector<SlotRelation> t1_relations(const EdgeIdeal& ideal)
{
    const auto& gens = ideal.generators();
    std::vector<SlotRelation> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const Monomial u = gens[i].lcm(gens[j]);
            out.push_back({{1, *u.quotient(gens[i]), i}, {-1, *u.quotient(gens[j]), j}});
        }
    }
    return out;
}

std::vector<SlotRelation> t2_relations(const KModule& k)
{
    std::vector<SlotRelation> out;
    for (const auto& rel : k.relations()) {
        SlotRelation r;
        for (const auto& t : rel.terms) {
            r.push_back({t.sign, t.coefficient, t.generator});
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<QuotientClass> multiply_table(const EdgeIdeal& ideal, const std::vector<QuotientClass>& images,
                                          const Monomial& m)
{
    std::vector<QuotientClass> out;
    out.reserve(images.size());
    for (const auto& q : images) {
        out.push_back(ideal.multiply(q, m));
    }
    return out;
}

std::size_t derivation_rank(const EdgeIdeal& ideal, const HomSystem& sys, EchelonBasis& echelon, int c)
{
    for (const auto& m : ideal.graded_basis(c + 1)) {
        for (Vertex v = 0; v < ideal.graph().size(); ++v) {
            span_rank(sys, echelon, derivation_hom(ideal, v, m).images, "derivation image");
        }
    }
    return echelon.rank();
}

std::size_t phi_rank(const KModule& k, const std::vector<T2Hom>& phis, const HomSystem& sys,
                     EchelonBasis& echelon, int c)
{
    for (const auto& m : k.ideal().graded_basis(c + 2)) {
        for (const auto& phi : phis) {
            span_rank(sys, echelon, multiply_table(k.ideal(), phi.images, m), "image of Phi");
        }
    }
    return echelon.rank();
}

}  // namespace

HomSystem t1_system(const EdgeIdeal& ideal, int c)
{
    return HomSystem(ideal, ideal.generators().size(), c < -2 ? -1 : 2 + c, t1_relations(ideal));
}

std::size_t hom_dim(const Graph& g, int c)
{
    EdgeIdeal ideal(g);
    return t1_system(ideal, c).dimension();
}

std::size_t t1_dim(const Graph& g, int c)
{
    GradedReport r = t1_report(g, {c, c}, false);
    return r.degrees.front().cohomology_dim;
}

std::vector<std::vector<QuotientClass>> hom_basis(const Graph& g, int c)
{
    EdgeIdeal ideal(g);
    return t1_system(ideal, c).basis();
}

GradedReport t1_report(const Graph& g, Window window, bool check_generation, const T1Options& opt)
{
    require_window(window);
    EdgeIdeal ideal(g);
    std::vector<DeformHom> gens;
    if (check_generation) {
        gens = hom_generators(g, opt);
    }
    GradedReport report{"T1", window, {}, opt.degree_cap, opt.product_cap};
    for (int c = window.lo; c <= window.hi; ++c) {
        DegreeRow row;
        row.c = c;
        HomSystem sys = t1_system(ideal, c);
        row.hom_dim = sys.dimension();
        if (sys.unknowns() > 0) {
            EchelonBasis trivial;
            row.trivial_dim = derivation_rank(ideal, sys, trivial, c);
        }
        row.cohomology_dim = row.hom_dim - row.trivial_dim;
        if (check_generation) {
            EchelonBasis span;
            if (sys.unknowns() > 0) {
                for (const auto& h : gens) {
                    if (h.degree > c) {
                        continue;
                    }
                    for (const auto& m : ideal.graded_basis(c - h.degree)) {
                        span_rank(sys, span, multiply_table(ideal, h.images, m), "generator multiple");
                    }
                }
            }
            row.generation_ok = span.rank() == row.hom_dim;
        }
        report.degrees.push_back(row);
    }
    return report;
}

GradedReport generation_check_t1(const Graph& g, Window window, const T1Options& opt)
{
    return t1_report(g, window, true, opt);
}

HomSystem t2_system(const KModule& k, int c)
{
    return HomSystem(k.ideal(), k.generators().size(), c < -3 ? -1 : 3 + c, t2_relations(k));
}

std::size_t homK_dim(const Graph& g, int c)
{
    KModule k(g);
    return t2_system(k, c).dimension();
}

std::size_t t2_dim(const Graph& g, int c)
{
    GradedReport r = t2_report(g, {c, c}, false);
    return r.degrees.front().cohomology_dim;
}

std::vector<std::vector<QuotientClass>> homK_basis(const Graph& g, int c)
{
    KModule k(g);
    return t2_system(k, c).basis();
}

GradedReport t2_report(const Graph& g, Window window, bool check_generation, const T2Options& opt)
{
    require_window(window);
    KModule k(g);
    std::vector<T2Hom> phis;
    for (const auto& e : g.edges()) {
        phis.push_back(phi_edge(k, e));
    }
    std::vector<T2Hom> gens;
    if (check_generation) {
        auto triangles = induced_cycles(g, {3});
        if (!triangles.empty()) {
            const auto& t = triangles.front();
            throw Error(ErrorKind::TriangleFound, "graph has the 3-cycle " + g.name(t[0]) + " " +
                                                      g.name(t[1]) + " " + g.name(t[2]));
        }
        gens = phis;
        for (const auto& e : g.edges()) {
            for (auto& c : type2_t2_homs(k, e, opt)) {
                if (c.status != T2Status::Zero) {
                    gens.push_back(std::move(c.hom));
                }
            }
        }
    }
    GradedReport report{"T2", window, {}, opt.degree_cap, opt.product_cap};
    for (int c = window.lo; c <= window.hi; ++c) {
        DegreeRow row;
        row.c = c;
        HomSystem sys = t2_system(k, c);
        row.hom_dim = sys.dimension();
        if (sys.unknowns() > 0) {
            EchelonBasis image;
            row.trivial_dim = phi_rank(k, phis, sys, image, c);
        }
        row.cohomology_dim = row.hom_dim - row.trivial_dim;
        if (check_generation) {
            EchelonBasis span;
            if (sys.unknowns() > 0) {
                for (const auto& h : gens) {
                    if (h.degree > c) {
                        continue;
                    }
                    for (const auto& m : k.ideal().graded_basis(c - h.degree)) {
                        span_rank(sys, span, multiply_table(k.ideal(), h.images, m), "generator multiple");
                    }
                }
            }
            row.generation_ok = span.rank() == row.hom_dim;
        }
        report.degrees.push_back(row);
    }
    return report;
}

GradedReport generation_check_t2(const Graph& g, Window window, const T2Options& opt)
{
    return t2_report(g, window, true, opt);
}

RegularityResult separation_regularity_check(const Graph& g, const Graph& h, std::string_view v,
                                             std::string_view v_prime, int bound)
{
    RegularityResult out;
    auto fail = [&](std::string reason) {
        out.regular = false;
        out.reason = std::move(reason);
        return out;
    };
    if (!g.find(v)) {
        return fail("vertex " + std::string(v) + " is not in G");
    }
    auto hv = h.find(v);
    auto hw = h.find(v_prime);
    if (!hv || !hw) {
        return fail("H lacks " + std::string(!hv ? v : v_prime) + " or it has no neighbours");
    }
    if (h.neighbors(*hv).empty() || h.neighbors(*hw).empty()) {
        return fail("v or v' has an empty neighbourhood in H");
    }
    std::set<std::pair<std::string, std::string>> contracted;
    for (const auto& e : h.edges()) {
        std::string x = h.name(e.u) == v_prime ? std::string(v) : h.name(e.u);
        std::string y = h.name(e.v) == v_prime ? std::string(v) : h.name(e.v);
        contracted.insert(x < y ? std::make_pair(x, y) : std::make_pair(y, x));
    }
    if (contracted != named_edges(g)) {
        return fail("contracting v' to v does not give the edges of G");
    }

    EdgeIdeal ideal(h);
    for (int d = 0; d <= bound; ++d) {
        const auto source = ideal.graded_basis(d);
        const auto target = ideal.graded_basis(d + 1);
        std::map<Monomial, std::size_t> pos;
        for (std::size_t k = 0; k < target.size(); ++k) {
            pos.emplace(target[k], k);
        }
        std::vector<SparseVectorBuilder> rows(target.size());
        for (std::size_t col = 0; col < source.size(); ++col) {
            for (auto [w, sign] : {std::pair{*hw, 1}, std::pair{*hv, -1}}) {
                Monomial m = source[col].times(w);
                auto it = pos.find(m);
                if (it != pos.end()) {
                    rows[it->second].add(col, Rational(sign));
                }
            }
        }
        std::vector<SparseVector> built;
        for (const auto& b : rows) {
            if (!b.empty()) {
                built.push_back(b.build());
            }
        }
        auto kernel = linalg::nullspace(built, source.size());
        if (!kernel.empty()) {
            out.regular = false;
            out.reason = "multiplication by v' - v has a kernel in degree " + std::to_string(d);
            out.degree = d;
            for (const auto& [col, c] : kernel.front().entries()) {
                out.kernel_witness.add_term(source[col], c);
            }
            return out;
        }
    }
    out.reason = "injective in degrees 0.." + std::to_string(bound);
    return out;
}

}  // namespace cotan::oracle
