#pragma once

#include "hypermap/arith.hpp"
#include "hypermap/count_table.hpp"
#include "hypermap/kz.hpp"

#include <climits>
#include <compare>
#include <vector>

namespace hypermap {

// Class of a period-L orientation-preserving automorphism: the period, the
// genus of the quotient, and the orbit lengths of its branch points (each a
// proper divisor of L). Branch index = L / orbit length.
struct OrbifoldSignature {
    int period = 1;
    int quotientGenus = 0;
    std::vector<int> orbitLengths; // sorted ascending

    std::vector<int> branchIndices() const;

    // 2 - 2G = L (2 - 2g - sum(1 - 1/m_i)), checked in integers.
    bool satisfiesRiemannHurwitz(int targetGenus) const;

    auto operator<=>(const OrbifoldSignature&) const = default;
};

// Every signature of period L compatible with target genus G, ordered by
// quotient genus descending, then orbit lengths lexicographically.
std::vector<OrbifoldSignature> admissibleSignatures(int targetGenus, int period);

// Number of epimorphisms from the orbifold fundamental group onto Z_L that
// send each branch generator to an element of exactly its branch index.
// Computed by Mobius inversion over the subgroup lattice of Z_L.
BigInt epi0(const OrbifoldSignature& sig);

// Undivided Burnside sums: for every E <= maxDarts and (W, B, F), the sum
// over periods L | E (restricted to [minPeriod, maxPeriod]) of
// Epi0 * (branch placements) * rooted quotient counts. With the full period
// range each cell equals E times the sensed count.
CountTable orbifoldAccumulator(int targetGenus, int maxDarts, const KzTable& rooted, int minPeriod = 1,
                               int maxPeriod = INT_MAX);

// Sensed (unrooted, orientation-preserving) hypermaps of genus G with up to
// maxDarts darts. `rooted` must cover genus <= G and darts <= maxDarts.
// Throws InexactDivision if an accumulator cell is not a multiple of E.
CountTable sensedTable(int targetGenus, int maxDarts, const KzTable& rooted);

} // namespace hypermap
