#pragma once

#include "hypermap/arith.hpp"
#include "hypermap/errors.hpp"
#include "hypermap/keys.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hypermap {

struct TableMeta {
    std::string engine;
    int maxDarts = 0;
    int maxGenus = 0;

    bool operator==(const TableMeta&) const = default;
};

// Sparse association key -> strictly positive count. Absent keys read as
// zero. Built by a single writer, then shared read-only.
template <class Key>
class BasicCountTable {
public:
    using Entries = std::map<Key, BigInt>;

    BasicCountTable() = default;
    explicit BasicCountTable(TableMeta meta) : meta_(std::move(meta)) {}

    const TableMeta& meta() const { return meta_; }
    TableMeta& meta() { return meta_; }

    // Accumulates `value` into `key`. Zero is a no-op; negative values and
    // keys violating the genus relation are rejected.
    void add(const Key& key, const BigInt& value)
    {
        if (value == 0) {
            return;
        }
        if (value < 0) {
            throw NegativeCoefficient("negative count offered to table " + meta_.engine);
        }
        if (!key.valid()) {
            throw CensusError("key violates the genus relation in table " + meta_.engine);
        }
        entries_[key] += value;
    }

    BigInt at(const Key& key) const
    {
        auto it = entries_.find(key);
        return it == entries_.end() ? BigInt(0) : it->second;
    }

    bool contains(const Key& key) const { return entries_.count(key) != 0; }

    // Sum over every stored key whose first two fields are (genus, size).
    BigInt total(int genus, int size) const
    {
        BigInt sum = 0;
        for (auto it = entries_.lower_bound(Key{genus, size, 1}); it != entries_.end(); ++it) {
            if (std::pair(it->first.genus, sizeOf(it->first)) != std::pair(genus, size)) {
                break;
            }
            sum += it->second;
        }
        return sum;
    }

    std::vector<std::pair<Key, BigInt>> slice(int genus, int size) const
    {
        std::vector<std::pair<Key, BigInt>> out;
        for (auto it = entries_.lower_bound(Key{genus, size, 1}); it != entries_.end(); ++it) {
            if (std::pair(it->first.genus, sizeOf(it->first)) != std::pair(genus, size)) {
                break;
            }
            out.emplace_back(*it);
        }
        return out;
    }

    const Entries& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Equality of contents; metadata is ignored.
    bool sameCounts(const BasicCountTable& other) const { return entries_ == other.entries_; }

private:
    static int sizeOf(const Key& k)
    {
        if constexpr (requires { k.darts; }) {
            return k.darts;
        } else {
            return k.edges;
        }
    }

    TableMeta meta_;
    Entries entries_;
};

using CountTable = BasicCountTable<HypermapKey>;
using MapCountTable = BasicCountTable<MapKey>;

} // namespace hypermap
