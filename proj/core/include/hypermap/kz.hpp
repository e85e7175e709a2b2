#pragma once

#include "hypermap/arith.hpp"
#include "hypermap/count_table.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace hypermap {

// Exponents of t (faces), u (hyperedges) and v (vertices).
struct Monomial {
    int faces = 0;
    int hyperedges = 0;
    int vertices = 0;

    int degree() const { return faces + hyperedges + vertices; }
    auto operator<=>(const Monomial&) const = default;
};

// Sparse homogeneous polynomial in t, u, v with every exponent >= 1 and
// strictly positive coefficients. Terms are kept sorted by monomial.
class HomoPoly {
public:
    using Term = std::pair<Monomial, BigInt>;

    HomoPoly() = default;
    explicit HomoPoly(int degree) : degree_(degree) {}
    HomoPoly(int degree, std::vector<Term> terms);

    int degree() const { return degree_; }
    bool isZero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    BigInt coefficient(const Monomial& m) const;
    BigInt total() const;

private:
    int degree_ = 0;
    std::vector<Term> terms_;
};

// Rooted hypermap polynomials H_{g,d} for 0 <= g <= maxGenus and
// 1 <= d <= maxDarts, filled by the Kazarian-Zograf recurrence
//
//   (d+1) H_{g,d} = (2d-1)(t+u+v) H_{g,d-1}
//                 + (d-2)(2(tu+tv+uv) - (t^2+u^2+v^2)) H_{g,d-2}
//                 + (d-1)^2 (d-2) H_{g-1,d-2}
//                 + sum_{i=0..g} sum_{j=1..d-3} (4+6j)(d-2-j) H_{i,j} H_{g-i,d-2-j}
//
// starting from H_{0,1} = tuv. The coefficient of t^f u^b v^w in H_{g,d}
// counts rooted genus-g hypermaps with d darts, f faces, b hyperedges and w
// vertices.
class KzTable {
public:
    KzTable() = default;

    // Throws InexactDivision or NegativeCoefficient if a right-hand side
    // coefficient is not a nonnegative multiple of d+1.
    static KzTable fill(int maxGenus, int maxDarts);

    int maxGenus() const { return maxGenus_; }
    int maxDarts() const { return maxDarts_; }
    bool covers(int genus, int darts) const;

    // H_{g,d}; the zero polynomial for d < 1. Throws NotFilled beyond range.
    const HomoPoly& poly(int genus, int darts) const;

    // Number of rooted hypermaps of genus g with d darts, v vertices,
    // e hyperedges, f faces. Zero for keys violating the genus relation;
    // d = 0 yields the empty hypermap.
    BigInt rootedCount(int genus, int darts, int vertices, int hyperedges, int faces) const;
    BigInt rootedTotal(int genus, int darts) const;

    // All counts of one genus as a table, d = 1..maxDarts.
    CountTable toCountTable(int genus) const;

private:
    int maxGenus_ = -1;
    int maxDarts_ = 0;
    std::vector<std::vector<HomoPoly>> polys_; // [genus][darts]
};

} // namespace hypermap
