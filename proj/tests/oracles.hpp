#pragma once

// Independent brute-force counters used as ground truth in the tests. None
// of them shares code with the engines: hypermaps are enumerated as explicit
// permutation pairs and epimorphisms as explicit tuples.

#include "hypermap/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using hypermap::BigInt;
using Perm = std::vector<int>;

inline int cycleCount(const Perm& p)
{
    std::vector<char> seen(p.size(), 0);
    int n = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!seen[i]) {
            ++n;
            for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
                seen[j] = 1;
            }
        }
    }
    return n;
}

inline int cycleLength(const Perm& p, int x)
{
    int n = 1;
    for (int y = p[x]; y != x; y = p[y]) {
        ++n;
    }
    return n;
}

// Lengths of the cycles of p, one entry per cycle, excluding the cycle of x.
inline std::vector<int> otherCycleLengths(const Perm& p, int x)
{
    std::vector<char> seen(p.size(), 0);
    for (int j = x; !seen[j]; j = p[j]) {
        seen[j] = 1;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!seen[i]) {
            int n = 0;
            for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
                seen[j] = 1;
                ++n;
            }
            out.push_back(n);
        }
    }
    return out;
}

inline Perm compose(const Perm& a, const Perm& b) // a after b
{
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[b[i]];
    }
    return c;
}

inline bool transitive(const Perm& r, const Perm& l)
{
    const std::size_t n = r.size();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : {r[x], l[x]}) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

inline std::vector<Perm> allPermutations(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<Perm> fixedPointFreeInvolutions(int n)
{
    std::vector<Perm> out;
    for (const Perm& p : allPermutations(n)) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            ok = p[i] != i && p[p[i]] == i;
        }
        if (ok) {
            out.push_back(p);
        }
    }
    return out;
}

// A labelled hypermap on darts 0..t-1: vertices are cycles of r, hyperedges
// cycles of l, faces cycles of r*l.
struct Labelled {
    int genus;
    int vertices;
    int hyperedges;
    int faces;
    const Perm* r;
    const Perm* l;
};

// Calls fn(Labelled) for every transitive pair (r, l) on t darts.
template <class Fn>
void forEachHypermap(int t, Fn&& fn)
{
    const auto perms = allPermutations(t);
    for (const Perm& r : perms) {
        const int v = cycleCount(r);
        for (const Perm& l : perms) {
            if (!transitive(r, l)) {
                continue;
            }
            const int e = cycleCount(l);
            const int f = cycleCount(compose(r, l));
            const int twiceOneMinusG = v + e + f - t;
            fn(Labelled{(2 - twiceOneMinusG) / 2, v, e, f, &r, &l});
        }
    }
}

// Rooted hypermaps with t darts keyed by (g, v, e, f): labelled transitive
// pairs divided by (t-1)!.
inline std::map<std::tuple<int, int, int, int>, BigInt> rootedHypermaps(int t)
{
    std::map<std::tuple<int, int, int, int>, BigInt> labelled;
    forEachHypermap(t, [&](const Labelled& h) { labelled[{h.genus, h.vertices, h.hyperedges, h.faces}] += 1; });
    BigInt fact = 1;
    for (int k = 2; k < t; ++k) {
        fact *= k;
    }
    for (auto& [key, n] : labelled) {
        n /= fact;
    }
    return labelled;
}

// Number of ordered tuples of pairwise distinct entries of `pool` whose
// values are d[0], d[1], ...
inline long orderedPicks(const std::vector<int>& pool, const std::vector<int>& d)
{
    long n = 1;
    std::map<int, int> avail;
    for (int x : pool) {
        ++avail[x];
    }
    for (int x : d) {
        n *= avail[x]--;
        if (n <= 0) {
            return 0;
        }
    }
    return n;
}

// Sequenced hypermaps H(g, t, f, e, n, D) for one t: root dart 0, root vertex
// of degree n, then distinct further vertices of degrees D in order.
inline BigInt sequencedHypermaps(int genus, int t, int faces, int hyperedges, int rootDegree, std::vector<int> degrees)
{
    BigInt labelled = 0;
    forEachHypermap(t, [&](const Labelled& h) {
        if (h.genus != genus || h.faces != faces || h.hyperedges != hyperedges) {
            return;
        }
        if (cycleLength(*h.r, 0) != rootDegree) {
            return;
        }
        labelled += orderedPicks(otherCycleLengths(*h.r, 0), degrees);
    });
    BigInt fact = 1;
    for (int k = 2; k < t; ++k) {
        fact *= k;
    }
    return labelled / fact;
}

// Rooted ordinary maps with `edges` edges keyed by (g, faces, root vertex
// degree): l ranges over fixed-point-free involutions.
inline std::map<std::tuple<int, int, int>, BigInt> rootedMaps(int edges)
{
    std::map<std::tuple<int, int, int>, BigInt> out;
    const int t = 2 * edges;
    if (edges == 0) {
        out[{0, 1, 0}] = 1;
        return out;
    }
    const auto perms = allPermutations(t);
    const auto invs = fixedPointFreeInvolutions(t);
    for (const Perm& r : perms) {
        const int v = cycleCount(r);
        const int n = cycleLength(r, 0);
        for (const Perm& l : invs) {
            if (!transitive(r, l)) {
                continue;
            }
            const int f = cycleCount(compose(r, l));
            const int g = (2 - (v - edges + f)) / 2;
            out[{g, f, n}] += 1;
        }
    }
    BigInt fact = 1;
    for (int k = 2; k < t; ++k) {
        fact *= k;
    }
    for (auto& [key, n] : out) {
        n /= fact;
    }
    return out;
}

// Canonical relabelling of a transitive pair: breadth-first from each dart,
// keeping the lexicographically smallest encoding.
inline std::vector<int> canonicalForm(const Perm& r, const Perm& l)
{
    const int n = static_cast<int>(r.size());
    std::vector<int> best;
    for (int s = 0; s < n; ++s) {
        std::vector<int> label(n, -1);
        std::vector<int> order;
        label[s] = 0;
        order.push_back(s);
        for (std::size_t k = 0; k < order.size(); ++k) {
            for (int y : {r[order[k]], l[order[k]]}) {
                if (label[y] < 0) {
                    label[y] = static_cast<int>(order.size());
                    order.push_back(y);
                }
            }
        }
        std::vector<int> code;
        code.reserve(2 * n);
        for (int x : order) {
            code.push_back(label[r[x]]);
            code.push_back(label[l[x]]);
        }
        if (best.empty() || code < best) {
            best = std::move(code);
        }
    }
    return best;
}

// Sensed hypermaps with t darts keyed by (g, v, e, f): isomorphism classes
// of transitive pairs under simultaneous relabelling.
inline std::map<std::tuple<int, int, int, int>, BigInt> sensedHypermaps(int t)
{
    std::map<std::tuple<int, int, int, int>, std::set<std::vector<int>>> classes;
    forEachHypermap(t, [&](const Labelled& h) {
        classes[{h.genus, h.vertices, h.hyperedges, h.faces}].insert(canonicalForm(*h.r, *h.l));
    });
    std::map<std::tuple<int, int, int, int>, BigInt> out;
    for (const auto& [key, set] : classes) {
        out[key] = static_cast<unsigned long>(set.size());
    }
    return out;
}

inline int orderIn(int x, int L)
{
    return L / std::gcd(x, L);
}

// Epimorphisms onto Z_L by direct enumeration of generator images: 2g free
// images, one image of exact order m_i per branch point, zero sum, and the
// images generating Z_L.
inline BigInt bruteEpi0(int L, int quotientGenus, const std::vector<int>& branchIndices)
{
    const int free = 2 * quotientGenus;
    const int r = static_cast<int>(branchIndices.size());
    const int slots = free + r;
    std::vector<int> x(slots, 0);
    BigInt count = 0;
    while (true) {
        bool ok = true;
        int sum = 0;
        int gen = L;
        for (int i = 0; i < slots && ok; ++i) {
            if (i >= free && orderIn(x[i], L) != branchIndices[i - free]) {
                ok = false;
            }
            gen = std::gcd(gen, x[i]);
            if (i >= free) {
                sum += x[i];
            }
        }
        if (ok && sum % L == 0 && gen == 1) {
            ++count;
        }
        int k = 0;
        while (k < slots && ++x[k] == L) {
            x[k++] = 0;
        }
        if (k == slots) {
            break;
        }
    }
    return count;
}

// (quotient genus, sorted orbit lengths) of every period-L automorphism
// class compatible with target genus G, by exhaustive search.
inline std::set<std::pair<int, std::vector<int>>> bruteSignatures(int G, int L)
{
    std::set<std::pair<int, std::vector<int>>> out;
    std::vector<int> proper;
    for (int i = 1; i < L; ++i) {
        if (L % i == 0) {
            proper.push_back(i);
        }
    }
    for (int g = 0; g <= G; ++g) {
        // sum over branch points of (L - i) must equal 2L(1-g) - 2(1-G)
        const int target = 2 * L * (1 - g) - 2 * (1 - G);
        if (target < 0) {
            continue;
        }
        std::vector<int> current;
        auto search = [&](auto&& self, std::size_t from, int remaining) -> void {
            if (remaining == 0) {
                out.emplace(g, current);
            }
            for (std::size_t k = from; k < proper.size(); ++k) {
                const int cost = L - proper[k];
                if (cost <= remaining) {
                    current.push_back(proper[k]);
                    self(self, k, remaining - cost);
                    current.pop_back();
                }
            }
        };
        if (L == 1) {
            if (target == 0) {
                out.emplace(g, std::vector<int>{});
            }
        } else {
            search(search, 0, target);
        }
    }
    return out;
}

// [z^n] tau(z) for tau (1 - 2 tau) = z by Lagrange inversion:
// (1/n) C(2n-2, n-1) 2^(n-1).
inline BigInt tauCoefficient(int n)
{
    return hypermap::binomial(2 * n - 2, n - 1) * (BigInt(1) << (n - 1)) / n;
}

} // namespace oracle
