#include "cotan/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace cotan::linalg {

SparseVector::SparseVector(std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& [i, v] : entries) {
        if (!entries_.empty() && entries_.back().first == i) {
            entries_.back().second += v;
        } else {
            entries_.emplace_back(i, v);
        }
    }
    std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
}

Rational SparseVector::dot(const SparseVector& other) const
{
    Rational sum = 0;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->first == b->first) {
            sum += a->second * b->second;
            ++a;
            ++b;
        } else if (a->first < b->first) {
            ++a;
        } else {
            ++b;
        }
    }
    return sum;
}

void SparseVectorBuilder::add(std::size_t index, const Rational& value)
{
    auto [it, inserted] = values_.try_emplace(index, value);
    if (!inserted) {
        it->second += value;
    }
}

SparseVector SparseVectorBuilder::build() const
{
    std::vector<SparseVector::Entry> e(values_.begin(), values_.end());
    return SparseVector(std::move(e));
}

namespace {

using IntEntry = std::pair<std::size_t, Integer>;

std::vector<IntEntry> to_primitive_integers(const SparseVector& v)
{
    Integer denom_lcm = 1;
    for (const auto& [i, q] : v.entries()) {
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<IntEntry> row;
    row.reserve(v.entries().size());
    for (const auto& [i, q] : v.entries()) {
        Integer scaled = denom_lcm / q.get_den() * q.get_num();
        row.emplace_back(i, scaled);
    }
    return row;
}

void make_primitive(std::vector<IntEntry>& row)
{
    if (row.empty()) {
        return;
    }
    Integer g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    if (row.front().second < 0) {
        g = -g;
    }
    if (g != 1) {
        for (auto& e : row) {
            mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
        }
    }
}

// a * row - b * pivot, dropping zeros.
std::vector<IntEntry> combine(const std::vector<IntEntry>& row, const Integer& a,
                              const std::vector<IntEntry>& pivot, const Integer& b)
{
    std::vector<IntEntry> out;
    out.reserve(row.size() + pivot.size());
    auto r = row.begin();
    auto p = pivot.begin();
    while (r != row.end() || p != pivot.end()) {
        if (p == pivot.end() || (r != row.end() && r->first < p->first)) {
            out.emplace_back(r->first, a * r->second);
            ++r;
        } else if (r == row.end() || p->first < r->first) {
            out.emplace_back(p->first, -b * p->second);
            ++p;
        } else {
            Integer val = a * r->second - b * p->second;
            if (val != 0) {
                out.emplace_back(r->first, std::move(val));
            }
            ++r;
            ++p;
        }
    }
    return out;
}

}  // namespace

EchelonBasis::IntRow EchelonBasis::reduce(IntRow row) const
{
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            break;
        }
        const IntRow& pivot = it->second;
        Integer a = pivot.front().second;
        Integer b = row.front().second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= g;
        b /= g;
        row = combine(row, a, pivot, b);
        make_primitive(row);
    }
    return row;
}

bool EchelonBasis::insert(const SparseVector& v)
{
    IntRow row = reduce(to_primitive_integers(v));
    if (row.empty()) {
        return false;
    }
    make_primitive(row);
    const std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

bool EchelonBasis::spans(const SparseVector& v) const
{
    return reduce(to_primitive_integers(v)).empty();
}

std::size_t rank(const std::vector<SparseVector>& rows)
{
    EchelonBasis basis;
    for (const auto& r : rows) {
        basis.insert(r);
    }
    return basis.rank();
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t root(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void join(std::size_t a, std::size_t b)
    {
        a = root(a);
        b = root(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

// Reduced row echelon form of a dense rational matrix in place; returns the
// pivot column of each nonzero row.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c] == 0) {
            ++sel;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[r], m[sel]);
        Rational inv = 1 / m[r][c];
        for (std::size_t k = c; k < cols; ++k) {
            m[r][k] *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) {
                continue;
            }
            Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                if (m[r][k] != 0) {
                    m[i][k] -= f * m[r][k];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<SparseVector> nullspace(const std::vector<SparseVector>& rows, std::size_t columns)
{
    DisjointSets sets(columns);
    std::vector<char> touched(columns, 0);
    for (const auto& row : rows) {
        const auto& e = row.entries();
        for (std::size_t k = 0; k < e.size(); ++k) {
            touched[e[k].first] = 1;
            if (k > 0) {
                sets.join(e[0].first, e[k].first);
            }
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> block_columns;
    for (std::size_t c = 0; c < columns; ++c) {
        if (touched[c]) {
            block_columns[sets.root(c)].push_back(c);
        }
    }
    std::map<std::size_t, std::vector<const SparseVector*>> block_rows;
    for (const auto& row : rows) {
        if (!row.is_zero()) {
            block_rows[sets.root(row.entries().front().first)].push_back(&row);
        }
    }

    std::vector<SparseVector> out;
    for (std::size_t c = 0; c < columns; ++c) {
        if (!touched[c]) {
            out.emplace_back(std::vector<SparseVector::Entry>{{c, Rational(1)}});
        }
    }
    for (const auto& [root, cols] : block_columns) {
        std::map<std::size_t, std::size_t> local;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            local[cols[j]] = j;
        }
        std::vector<std::vector<Rational>> m;
        for (const SparseVector* row : block_rows[root]) {
            std::vector<Rational> dense(cols.size(), Rational(0));
            for (const auto& [i, v] : row->entries()) {
                dense[local[i]] = v;
            }
            m.push_back(std::move(dense));
        }
        auto pivots = rref(m, cols.size());
        std::vector<char> is_pivot(cols.size(), 0);
        for (std::size_t p : pivots) {
            is_pivot[p] = 1;
        }
        for (std::size_t f = 0; f < cols.size(); ++f) {
            if (is_pivot[f]) {
                continue;
            }
            std::vector<SparseVector::Entry> e{{cols[f], Rational(1)}};
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                if (m[r][f] != 0) {
                    e.emplace_back(cols[pivots[r]], -m[r][f]);
                }
            }
            out.emplace_back(std::move(e));
        }
    }
    return out;
}

std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseVector>& vectors,
                                                       const SparseVector& target)
{
    // Coordinates become equations, vectors become unknowns.
    std::map<std::size_t, std::size_t> coord;
    auto note = [&](const SparseVector& v) {
        for (const auto& e : v.entries()) {
            coord.try_emplace(e.first, coord.size());
        }
    };
    for (const auto& v : vectors) {
        note(v);
    }
    note(target);
    const std::size_t n = vectors.size();
    std::vector<std::vector<Rational>> m(coord.size(), std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [i, v] : vectors[j].entries()) {
            m[coord[i]][j] = v;
        }
    }
    for (const auto& [i, v] : target.entries()) {
        m[coord[i]][n] = v;
    }
    auto pivots = rref(m, n + 1);
    if (!pivots.empty() && pivots.back() == n) {
        return std::nullopt;
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = m[r][n];
    }
    return x;
}

}  // namespace cotan::linalg
