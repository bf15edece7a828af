#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cotan/monomial.hpp"

namespace cotan::linalg {

// Sparse vector over Q: (index, value) pairs, sorted by index, no zeros.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseVector() = default;
    explicit SparseVector(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    Rational dot(const SparseVector& other) const;

    bool operator==(const SparseVector& o) const { return entries_ == o.entries_; }

private:
    std::vector<Entry> entries_;
};

// Accumulates entries in any order, merging duplicates.
class SparseVectorBuilder {
public:
    void add(std::size_t index, const Rational& value);
    SparseVector build() const;
    bool empty() const { return values_.empty(); }

private:
    std::map<std::size_t, Rational> values_;
};

// Row echelon basis kept with integer rows.  Incoming rows are scaled to
// primitive integer vectors and reduced against the pivot of their leading
// column by cross-multiplication, so no fractions ever appear.
class EchelonBasis {
public:
    // Returns true when v was independent of the rows already inserted.
    bool insert(const SparseVector& v);
    bool spans(const SparseVector& v) const;
    std::size_t rank() const { return pivots_.size(); }

private:
    using IntRow = std::vector<std::pair<std::size_t, Integer>>;
    IntRow reduce(IntRow row) const;

    std::map<std::size_t, IntRow> pivots_;
};

std::size_t rank(const std::vector<SparseVector>& rows);

// Basis of { x : row . x = 0 for every row } in Q^columns.  Columns touched
// by no row contribute unit vectors.
std::vector<SparseVector> nullspace(const std::vector<SparseVector>& rows, std::size_t columns);

// Coefficients c with sum_i c_i vectors[i] == target, or nullopt.
std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseVector>& vectors,
                                                       const SparseVector& target);

}  // namespace cotan::linalg
