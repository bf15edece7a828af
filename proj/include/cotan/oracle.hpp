#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cotan/edge_ideal.hpp"
#include "cotan/graph.hpp"
#include "cotan/linalg.hpp"
#include "cotan/t1.hpp"
#include "cotan/t2.hpp"

namespace cotan::oracle {

// One R-linear relation among the source generators:
// sum of sign * coefficient * phi(slot) must vanish in R/I.
struct SlotTerm {
    int sign = 1;
    Monomial coefficient;
    std::size_t slot = 0;
};
using SlotRelation = std::vector<SlotTerm>;

// Degree-c maps from a module generated in a single degree to R/I.  The
// unknowns are the coefficients of phi(slot) on the basis of
// (R/I)_{base + c}; constraints come from expanding each relation through
// the normal form.
class HomSystem {
public:
    HomSystem(const EdgeIdeal& ideal, std::size_t slots, int target_degree,
              const std::vector<SlotRelation>& relations);

    std::size_t unknowns() const { return columns_; }
    std::size_t rank() const { return rank_; }
    std::size_t dimension() const { return columns_ - rank_; }
    const std::vector<linalg::SparseVector>& rows() const { return rows_; }

    // Coordinates of an image table; throws std::logic_error if some image
    // term is not a basis monomial of the target degree.
    linalg::SparseVector vectorize(const std::vector<QuotientClass>& images) const;
    bool satisfies(const linalg::SparseVector& x) const;

    std::vector<std::vector<QuotientClass>> basis() const;

private:
    const EdgeIdeal* ideal_;
    std::size_t slots_;
    std::vector<Monomial> target_basis_;
    std::map<Monomial, std::size_t> position_;
    std::size_t columns_ = 0;
    std::vector<linalg::SparseVector> rows_;
    std::size_t rank_ = 0;
};

struct Window {
    int lo = 0;
    int hi = 0;
};

inline constexpr Window kT1Window{-2, 3};
inline constexpr Window kT2Window{-3, 2};

struct DegreeRow {
    int c = 0;
    std::size_t hom_dim = 0;
    std::size_t trivial_dim = 0;
    std::size_t cohomology_dim = 0;
    std::optional<bool> generation_ok;
};

struct GradedReport {
    std::string module;  // "T1" or "T2"
    Window window;
    std::vector<DegreeRow> degrees;
    std::size_t degree_cap = 0;
    std::size_t product_cap = 0;

    bool cohomology_vanishes_on_window() const;
    bool generation_ok() const;
};

// T1 side.  Degrees below -2 have no maps.
HomSystem t1_system(const EdgeIdeal& ideal, int c);
std::size_t hom_dim(const Graph& g, int c);
std::size_t t1_dim(const Graph& g, int c);
std::vector<std::vector<QuotientClass>> hom_basis(const Graph& g, int c);
GradedReport t1_report(const Graph& g, Window window, bool check_generation, const T1Options& opt = {});
GradedReport generation_check_t1(const Graph& g, Window window, const T1Options& opt = {});

// T2 side, simple graphs only.  Degrees below -3 have no maps.
HomSystem t2_system(const KModule& k, int c);
std::size_t homK_dim(const Graph& g, int c);
std::size_t t2_dim(const Graph& g, int c);
std::vector<std::vector<QuotientClass>> homK_basis(const Graph& g, int c);
GradedReport t2_report(const Graph& g, Window window, bool check_generation, const T2Options& opt = {});
// Requires a triangle-free graph (TriangleFound).
GradedReport generation_check_t2(const Graph& g, Window window, const T2Options& opt = {});

struct RegularityResult {
    bool regular = true;
    std::string reason;
    std::optional<int> degree;    // source degree of the kernel witness
    Polynomial kernel_witness;    // over H's variables
};

// Checks that H is a separation of G at v with new vertex v_prime: the
// contraction v_prime -> v gives G's edges, v and v_prime keep neighbours,
// and multiplication by v_prime - v is injective on S/I(H) from every
// degree 0..bound to the next.
RegularityResult separation_regularity_check(const Graph& g, const Graph& h, std::string_view v,
                                             std::string_view v_prime, int bound);

}  // namespace cotan::oracle
