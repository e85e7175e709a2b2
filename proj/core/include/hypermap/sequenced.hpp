#pragma once

#include "hypermap/arith.hpp"

#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

namespace hypermap {

// Degrees of the distinguished (non-root) vertices. Counts depend on the
// list only as a multiset, so it is stored sorted ascending.
class DegreeList {
public:
    DegreeList() = default;
    DegreeList(std::initializer_list<int> degrees);
    explicit DegreeList(std::span<const int> degrees);

    const std::vector<int>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    int sum() const;
    bool allPositive() const;

    DegreeList with(int degree) const;          // p.D
    DegreeList withoutIndex(std::size_t i) const; // D - {d_i}

    // Product of the degrees; 1 for the empty list.
    BigInt product() const;

    // Calls fn(sub, complement, weight) once per sub-multiset, where weight
    // is the number of sublists of the underlying list realizing it.
    template <class Fn>
    void forEachSublist(Fn&& fn) const;

    auto operator<=>(const DegreeList&) const = default;

private:
    std::vector<int> values_;
};

// Key of H(g, t, f, e, n, D): genus, darts, faces, hyperedges, root vertex
// degree and distinguished degrees.
struct SeqKey {
    int genus = 0;
    int darts = 0;
    int faces = 1;
    int hyperedges = 0;
    int rootDegree = 0;
    DegreeList distinguished;

    // v = t + 2(1 - g) - e - f.
    int vertices() const { return darts + 2 * (1 - genus) - hyperedges - faces; }

    auto operator<=>(const SeqKey&) const = default;
};

// Key of M(g, e, f, n, D) for sequenced ordinary maps.
struct SeqMapKey {
    int genus = 0;
    int edges = 0;
    int faces = 1;
    int rootDegree = 0;
    DegreeList distinguished;

    auto operator<=>(const SeqMapKey&) const = default;
};

namespace detail {

// Memo with idempotent insertion: racing evaluations of one key compute the
// same value, so the first insert wins and later ones are dropped.
template <class Key>
class Memo {
public:
    std::optional<BigInt> find(const Key& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = values_.find(key);
        if (it == values_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void insert(const Key& key, const BigInt& value)
    {
        std::unique_lock lock(mutex_);
        values_.emplace(key, value);
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return values_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, BigInt> values_;
};

} // namespace detail

// Sequenced, multirooted and rooted hypermap counts by the bijective
// decomposition that deletes the root dart. Much slower than KzTable; it
// exists as an independent oracle.
class SequencedHypermapCounter {
public:
    // H(g, t, f, e, n, D). Zero for impossible keys.
    BigInt count(const SeqKey& key);
    BigInt count(int genus, int darts, int faces, int hyperedges, int rootDegree, std::span<const int> degrees = {});

    // Sum over root degrees 1..t of H(g, t, f, e, n, []).
    BigInt rootedFromSequenced(int genus, int darts, int faces, int hyperedges);

    // H_m(g, t, f, e, n.D) as H(g, t, f, e, n, D) times the product of D.
    BigInt multirootedCount(int genus, int darts, int faces, int hyperedges, int rootDegree,
                            std::span<const int> degrees = {});

    // H_m(g, t, f, e, n.D) by its own recurrence, independent of count().
    BigInt multirootedDirect(const SeqKey& key);
    BigInt multirootedDirect(int genus, int darts, int faces, int hyperedges, int rootDegree,
                             std::span<const int> degrees = {});

    std::size_t memoSize() const { return sequenced_.size() + multirooted_.size(); }

private:
    template <bool Multirooted>
    BigInt evaluate(const SeqKey& key);

    detail::Memo<SeqKey> sequenced_;
    detail::Memo<SeqKey> multirooted_;
};

// Sequenced ordinary maps M(g, e, f, n, D) by root-edge deletion.
class SequencedMapCounter {
public:
    BigInt count(const SeqMapKey& key);
    BigInt count(int genus, int edges, int faces, int rootDegree, std::span<const int> degrees = {});

    // Rooted maps of genus g with e edges and f faces.
    BigInt rootedMaps(int genus, int edges, int faces);

private:
    detail::Memo<SeqMapKey> memo_;
};

template <class Fn>
void DegreeList::forEachSublist(Fn&& fn) const
{
    // Distinct values with multiplicities.
    std::vector<std::pair<int, int>> groups;
    for (int d : values_) {
        if (groups.empty() || groups.back().first != d) {
            groups.emplace_back(d, 0);
        }
        ++groups.back().second;
    }
    std::vector<int> take(groups.size(), 0);
    while (true) {
        std::vector<int> sub;
        std::vector<int> rest;
        BigInt weight = 1;
        for (std::size_t k = 0; k < groups.size(); ++k) {
            sub.insert(sub.end(), take[k], groups[k].first);
            rest.insert(rest.end(), groups[k].second - take[k], groups[k].first);
            weight *= binomial(groups[k].second, take[k]);
        }
        DegreeList subList;
        subList.values_ = std::move(sub);
        DegreeList restList;
        restList.values_ = std::move(rest);
        fn(subList, restList, weight);

        std::size_t k = 0;
        while (k < groups.size() && take[k] == groups[k].second) {
            take[k] = 0;
            ++k;
        }
        if (k == groups.size()) {
            return;
        }
        ++take[k];
    }
}

} // namespace hypermap
