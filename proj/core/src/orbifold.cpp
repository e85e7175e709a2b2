#include "hypermap/orbifold.hpp"

#include "hypermap/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace hypermap {

namespace {

std::vector<int> divisors(int n)
{
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) {
        if (n % k == 0) {
            out.push_back(k);
        }
    }
    return out;
}

int mobius(int n)
{
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

// Tuples in Z_l with prescribed exact orders summing to zero, by cyclic
// convolution of the per-point residue distributions.
BigInt zeroSumTuples(int l, const std::vector<int>& orders)
{
    for (int m : orders) {
        if (l % m != 0) {
            return 0;
        }
    }
    std::vector<BigInt> dist(l, 0);
    dist[0] = 1;
    std::vector<BigInt> next(l);
    for (int m : orders) {
        // x has order l / gcd(x, l) in Z_l.
        std::vector<int> support;
        for (int x = 0; x < l; ++x) {
            if (l / std::gcd(x, l) == m) {
                support.push_back(x);
            }
        }
        std::fill(next.begin(), next.end(), BigInt(0));
        for (int r = 0; r < l; ++r) {
            if (dist[r] == 0) {
                continue;
            }
            for (int x : support) {
                next[(r + x) % l] += dist[r];
            }
        }
        std::swap(dist, next);
    }
    return dist[0];
}

} // namespace

std::vector<int> OrbifoldSignature::branchIndices() const
{
    std::vector<int> out;
    out.reserve(orbitLengths.size());
    for (int i : orbitLengths) {
        out.push_back(period / i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool OrbifoldSignature::satisfiesRiemannHurwitz(int targetGenus) const
{
    // Multiply through by L: sum over branch points of (L - i)
    // must equal 2L(1 - g) - 2(1 - G).
    long deficit = 0;
    for (int i : orbitLengths) {
        if (i < 1 || i >= period || period % i != 0) {
            return false;
        }
        deficit += period - i;
    }
    return deficit == 2L * period * (1 - quotientGenus) - 2L * (1 - targetGenus);
}

std::vector<OrbifoldSignature> admissibleSignatures(int targetGenus, int period)
{
    std::vector<OrbifoldSignature> out;
    if (targetGenus < 0 || period < 1) {
        return out;
    }
    std::vector<int> lengths = divisors(period);
    lengths.pop_back(); // orbit length L is not a branch point

    for (int g = targetGenus; g >= 0; --g) {
        const long budget = 2L * period * (1 - g) - 2L * (1 - targetGenus);
        if (budget < 0) {
            continue;
        }
        // Multisets of orbit lengths (non-decreasing) whose deficits L - i
        // sum to the budget.
        std::vector<int> current;
        std::function<void(std::size_t, long)> extend = [&](std::size_t from, long remaining) {
            if (remaining == 0) {
                out.push_back(OrbifoldSignature{period, g, current});
                return;
            }
            for (std::size_t k = from; k < lengths.size(); ++k) {
                const long cost = period - lengths[k];
                if (cost > remaining) {
                    continue;
                }
                current.push_back(lengths[k]);
                extend(k, remaining - cost);
                current.pop_back();
            }
        };
        extend(0, budget);
    }
    std::stable_sort(out.begin(), out.end(), [](const OrbifoldSignature& a, const OrbifoldSignature& b) {
        if (a.quotientGenus != b.quotientGenus) {
            return a.quotientGenus > b.quotientGenus;
        }
        return a.orbitLengths < b.orbitLengths;
    });
    return out;
}

BigInt epi0(const OrbifoldSignature& sig)
{
    const std::vector<int> orders = sig.branchIndices();
    BigInt total = 0;
    for (int l : divisors(sig.period)) {
        const int mu = mobius(sig.period / l);
        if (mu == 0) {
            continue;
        }
        BigInt homs;
        mpz_ui_pow_ui(homs.get_mpz_t(), static_cast<unsigned long>(l),
                      static_cast<unsigned long>(2 * sig.quotientGenus));
        homs *= zeroSumTuples(l, orders);
        total += mu * homs;
    }
    if (total < 0) {
        throw NegativeCoefficient("negative epimorphism count for period " + std::to_string(sig.period));
    }
    return total;
}

namespace {

// Branch points of one orbit length split among white vertices, black
// vertices and faces of the quotient.
struct CellSplit {
    int orbitLength;
    int white;
    int black;
    int face;
};

// Multinomial w! / (k_1! ... k_r! (w - s)!) for w = s, s+1, ..., maxCells,
// where s = sum k_i. Each step costs one multiplication and one division.
std::vector<BigInt> multinomialSweep(const std::vector<int>& parts, int maxCells)
{
    const int s = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<BigInt> out;
    if (maxCells < s) {
        return out;
    }
    BigInt m = factorial(s);
    for (int k : parts) {
        m = exact_divide(m, factorial(k), "multinomial");
    }
    out.reserve(maxCells - s + 1);
    out.push_back(m);
    for (int w = s + 1; w <= maxCells; ++w) {
        m *= w;
        m = exact_divide(m, BigInt(w - s), "multinomial step");
        out.push_back(m);
    }
    return out;
}

void accumulateSignature(const OrbifoldSignature& sig, const BigInt& automorphisms, int targetGenus, int maxDarts,
                         const KzTable& rooted, std::map<HypermapKey, BigInt>& acc)
{
    const int L = sig.period;
    const int g = sig.quotientGenus;
    const int maxQuotientDarts = maxDarts / L;
    if (maxQuotientDarts < 1) {
        return;
    }
    // Cells of a quotient with d darts: w + b + f = d + 2 - 2g.
    const int maxCells = maxQuotientDarts + 2 - 2 * g;

    std::vector<std::pair<int, int>> groups; // (orbit length, number of branch points)
    for (int i : sig.orbitLengths) {
        if (groups.empty() || groups.back().first != i) {
            groups.emplace_back(i, 0);
        }
        ++groups.back().second;
    }

    std::vector<CellSplit> splits(groups.size());
    std::function<void(std::size_t)> distribute = [&](std::size_t k) {
        if (k < groups.size()) {
            const int q = groups[k].second;
            for (int w = 0; w <= q; ++w) {
                for (int b = 0; b + w <= q; ++b) {
                    splits[k] = CellSplit{groups[k].first, w, b, q - w - b};
                    distribute(k + 1);
                }
            }
            return;
        }

        std::vector<int> wParts, bParts, fParts;
        int whiteLift = 0, blackLift = 0, faceLift = 0; // cells contributed by branch points
        for (const CellSplit& s : splits) {
            wParts.push_back(s.white);
            bParts.push_back(s.black);
            fParts.push_back(s.face);
            whiteLift += s.orbitLength * s.white;
            blackLift += s.orbitLength * s.black;
            faceLift += s.orbitLength * s.face;
        }
        const int sw = std::accumulate(wParts.begin(), wParts.end(), 0);
        const int sb = std::accumulate(bParts.begin(), bParts.end(), 0);
        const int sf = std::accumulate(fParts.begin(), fParts.end(), 0);
        const std::vector<BigInt> mw = multinomialSweep(wParts, maxCells);
        const std::vector<BigInt> mb = multinomialSweep(bParts, maxCells);
        const std::vector<BigInt> mf = multinomialSweep(fParts, maxCells);
        if (mw.empty() || mb.empty() || mf.empty()) {
            return;
        }

        BigInt weight;
        for (int d = 1; d <= maxQuotientDarts; ++d) {
            for (const auto& [m, count] : rooted.poly(g, d).terms()) {
                if (m.vertices < sw || m.hyperedges < sb || m.faces < sf) {
                    continue;
                }
                weight = automorphisms * count;
                weight *= mw[m.vertices - sw];
                weight *= mb[m.hyperedges - sb];
                weight *= mf[m.faces - sf];
                const int W = whiteLift + L * (m.vertices - sw);
                const int B = blackLift + L * (m.hyperedges - sb);
                const int F = faceLift + L * (m.faces - sf);
                const HypermapKey key{targetGenus, L * d, W, B};
                if (key.faces() != F) {
                    throw CensusError("lifted cell counts violate the genus relation for period " +
                                      std::to_string(L));
                }
                acc[key] += weight;
            }
        }
    };
    distribute(0);
}

} // namespace

CountTable orbifoldAccumulator(int targetGenus, int maxDarts, const KzTable& rooted, int minPeriod, int maxPeriod)
{
    if (targetGenus < 0 || maxDarts < 1) {
        throw CensusError("orbifold accumulation needs genus >= 0 and maxDarts >= 1");
    }
    if (!rooted.covers(targetGenus, maxDarts)) {
        throw NotFilled("rooted table does not cover genus " + std::to_string(targetGenus) + " with " +
                        std::to_string(maxDarts) + " darts");
    }
    std::map<HypermapKey, BigInt> acc;
    for (int L = std::max(1, minPeriod); L <= std::min(maxDarts, maxPeriod); ++L) {
        for (const OrbifoldSignature& sig : admissibleSignatures(targetGenus, L)) {
            const BigInt automorphisms = epi0(sig);
            if (automorphisms == 0) {
                continue;
            }
            accumulateSignature(sig, automorphisms, targetGenus, maxDarts, rooted, acc);
        }
    }
    CountTable out(TableMeta{"orbifold-accumulator", maxDarts, targetGenus});
    for (const auto& [key, value] : acc) {
        out.add(key, value);
    }
    return out;
}

CountTable sensedTable(int targetGenus, int maxDarts, const KzTable& rooted)
{
    const CountTable acc = orbifoldAccumulator(targetGenus, maxDarts, rooted);
    CountTable out(TableMeta{"orbifold", maxDarts, targetGenus});
    for (const auto& [key, value] : acc.entries()) {
        out.add(key, exact_divide(value, BigInt(key.darts),
                                  "sensed accumulator at E=" + std::to_string(key.darts) +
                                      " W=" + std::to_string(key.vertices) + " B=" + std::to_string(key.hyperedges)));
    }
    return out;
}

} // namespace hypermap
