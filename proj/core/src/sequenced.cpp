#include "hypermap/sequenced.hpp"

#include <algorithm>
#include <numeric>

namespace hypermap {

DegreeList::DegreeList(std::initializer_list<int> degrees) : values_(degrees)
{
    std::sort(values_.begin(), values_.end());
}

DegreeList::DegreeList(std::span<const int> degrees) : values_(degrees.begin(), degrees.end())
{
    std::sort(values_.begin(), values_.end());
}

int DegreeList::sum() const
{
    return std::accumulate(values_.begin(), values_.end(), 0);
}

bool DegreeList::allPositive() const
{
    return std::all_of(values_.begin(), values_.end(), [](int d) { return d >= 1; });
}

DegreeList DegreeList::with(int degree) const
{
    DegreeList out = *this;
    out.values_.insert(std::upper_bound(out.values_.begin(), out.values_.end(), degree), degree);
    return out;
}

DegreeList DegreeList::withoutIndex(std::size_t i) const
{
    DegreeList out = *this;
    out.values_.erase(out.values_.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

BigInt DegreeList::product() const
{
    BigInt p = 1;
    for (int d : values_) {
        p *= d;
    }
    return p;
}

namespace {

// Structural zeros shared by H and H_m: the root vertex and the
// distinguished vertices are pairwise distinct and own disjoint darts.
bool possibleHypermapKey(const SeqKey& k)
{
    if (k.genus < 0 || k.darts < 0 || k.faces < 1 || k.hyperedges < 0 || k.rootDegree < 0) {
        return false;
    }
    if (!k.distinguished.allPositive()) {
        return false;
    }
    if (k.darts == 0) {
        return true; // decided by the base case
    }
    return k.rootDegree >= 1 && k.hyperedges >= 1 && k.faces <= k.darts && k.hyperedges <= k.darts &&
           k.rootDegree + k.distinguished.sum() <= k.darts &&
           k.vertices() >= 1 + static_cast<int>(k.distinguished.size());
}

bool isEmptyHypermap(const SeqKey& k)
{
    return k.genus == 0 && k.darts == 0 && k.faces == 1 && k.hyperedges == 0 && k.rootDegree == 0 &&
           k.distinguished.empty();
}

} // namespace

template <bool Multirooted>
BigInt SequencedHypermapCounter::evaluate(const SeqKey& key)
{
    if (!possibleHypermapKey(key)) {
        return 0;
    }
    if (key.darts == 0) {
        return isEmptyHypermap(key) ? 1 : 0;
    }
    auto& memo = Multirooted ? multirooted_ : sequenced_;
    if (auto hit = memo.find(key)) {
        return *hit;
    }

    const int g = key.genus;
    const int t = key.darts;
    const int f = key.faces;
    const int e = key.hyperedges;
    const int n = key.rootDegree;
    const DegreeList& D = key.distinguished;
    auto rec = [this](SeqKey k) { return evaluate<Multirooted>(k); };

    BigInt total = 0;

    // Root dart splits the hypermap in two; faces of one part pair with
    // hyperedges of the other.
    D.forEachSublist([&](const DegreeList& D1, const DegreeList& D2, const BigInt& weight) {
        for (int g1 = 0; g1 <= g; ++g1) {
            for (int t1 = 0; t1 <= t - 1; ++t1) {
                for (int n1 = 0; n1 <= n - 1; ++n1) {
                    for (int f1 = 1; f1 <= e; ++f1) {
                        for (int e1 = 0; e1 <= f - 1; ++e1) {
                            BigInt left = rec(SeqKey{g1, t1, f1, e1, n1, D1});
                            if (left == 0) {
                                continue;
                            }
                            BigInt right = rec(SeqKey{g - g1, t - 1 - t1, f - e1, e - f1, n - 1 - n1, D2});
                            if (right == 0) {
                                continue;
                            }
                            total += weight * left * right;
                        }
                    }
                }
            }
        }
    });

    // Handle to the same vertex: genus drops, a new distinguished vertex of
    // degree p appears. The sequenced count carries p rootings of it.
    if (n >= 3 && g >= 1) {
        for (int p = 1; p <= n - 2; ++p) {
            BigInt term = rec(SeqKey{g - 1, t - 1, e, f, n - 1 - p, D.with(p)});
            if constexpr (!Multirooted) {
                term *= p;
            }
            total += term;
        }
    }

    // Root vertex merges with an undistinguished vertex.
    for (int p = n; p <= t - 1; ++p) {
        total += rec(SeqKey{g, t - 1, e, f, p, D});
    }

    // Root vertex merges with distinguished vertex j.
    for (std::size_t j = 0; j < D.size(); ++j) {
        const int dj = D.values()[j];
        BigInt term = rec(SeqKey{g, t - 1, e, f, dj + n - 1, D.withoutIndex(j)});
        if constexpr (Multirooted) {
            term *= dj;
        }
        total += term;
    }

    memo.insert(key, total);
    return total;
}

BigInt SequencedHypermapCounter::count(const SeqKey& key)
{
    return evaluate<false>(key);
}

BigInt SequencedHypermapCounter::count(int genus, int darts, int faces, int hyperedges, int rootDegree,
                                       std::span<const int> degrees)
{
    return count(SeqKey{genus, darts, faces, hyperedges, rootDegree, DegreeList(degrees)});
}

BigInt SequencedHypermapCounter::rootedFromSequenced(int genus, int darts, int faces, int hyperedges)
{
    if (darts == 0) {
        return count(genus, 0, faces, hyperedges, 0);
    }
    BigInt sum = 0;
    for (int n = 1; n <= darts; ++n) {
        sum += count(genus, darts, faces, hyperedges, n);
    }
    return sum;
}

BigInt SequencedHypermapCounter::multirootedCount(int genus, int darts, int faces, int hyperedges, int rootDegree,
                                                  std::span<const int> degrees)
{
    DegreeList D(degrees);
    return count(SeqKey{genus, darts, faces, hyperedges, rootDegree, D}) * D.product();
}

BigInt SequencedHypermapCounter::multirootedDirect(const SeqKey& key)
{
    return evaluate<true>(key);
}

BigInt SequencedHypermapCounter::multirootedDirect(int genus, int darts, int faces, int hyperedges, int rootDegree,
                                                   std::span<const int> degrees)
{
    return multirootedDirect(SeqKey{genus, darts, faces, hyperedges, rootDegree, DegreeList(degrees)});
}

// Ordinary maps.

BigInt SequencedMapCounter::count(const SeqMapKey& key)
{
    const int g = key.genus;
    const int e = key.edges;
    const int f = key.faces;
    const int n = key.rootDegree;
    const DegreeList& D = key.distinguished;

    if (g < 0 || e < 0 || f < 1 || n < 0 || !D.allPositive()) {
        return 0;
    }
    if (e == 0) {
        return (g == 0 && f == 1 && n == 0 && D.empty()) ? 1 : 0;
    }
    const int vertices = 2 * (1 - g) + e - f;
    if (n < 1 || n + D.sum() > 2 * e || vertices < 1 + static_cast<int>(D.size())) {
        return 0;
    }
    if (auto hit = memo_.find(key)) {
        return *hit;
    }

    BigInt total = 0;

    // Root edge is a separating loop.
    D.forEachSublist([&](const DegreeList& D1, const DegreeList& D2, const BigInt& weight) {
        for (int g1 = 0; g1 <= g; ++g1) {
            for (int e1 = 0; e1 <= e - 1; ++e1) {
                for (int f1 = 1; f1 <= f - 1; ++f1) {
                    for (int n1 = 0; n1 <= n - 2; ++n1) {
                        BigInt left = count(SeqMapKey{g1, e1, f1, n1, D1});
                        if (left == 0) {
                            continue;
                        }
                        BigInt right = count(SeqMapKey{g - g1, e - 1 - e1, f - f1, n - 2 - n1, D2});
                        if (right == 0) {
                            continue;
                        }
                        total += weight * left * right;
                    }
                }
            }
        }
    });

    // Non-separating loop.
    for (int p = 1; p <= n - 3; ++p) {
        total += p * count(SeqMapKey{g - 1, e - 1, f, n - 2 - p, D.with(p)});
    }

    // Link to an undistinguished vertex.
    for (int p = n - 1; p <= 2 * e - 2; ++p) {
        total += count(SeqMapKey{g, e - 1, f, p, D});
    }

    // Link to distinguished vertex j.
    for (std::size_t j = 0; j < D.size(); ++j) {
        total += count(SeqMapKey{g, e - 1, f, D.values()[j] + n - 2, D.withoutIndex(j)});
    }

    memo_.insert(key, total);
    return total;
}

BigInt SequencedMapCounter::count(int genus, int edges, int faces, int rootDegree, std::span<const int> degrees)
{
    return count(SeqMapKey{genus, edges, faces, rootDegree, DegreeList(degrees)});
}

BigInt SequencedMapCounter::rootedMaps(int genus, int edges, int faces)
{
    if (edges == 0) {
        return count(genus, 0, faces, 0);
    }
    BigInt sum = 0;
    for (int n = 1; n <= 2 * edges; ++n) {
        sum += count(genus, edges, faces, n);
    }
    return sum;
}

} // namespace hypermap
