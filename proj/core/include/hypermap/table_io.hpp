#pragma once

#include "hypermap/count_table.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace hypermap {

enum class TableKind { Rooted, Unrooted };

// Census table layout: header "d v e f h" (H for unrooted), rows of one dart
// count ordered by faces descending then vertices ascending, a blank line,
// "d sum S", and a blank line between dart counts. Dart counts without rows
// are skipped.
std::string renderTable(const CountTable& table, int genus, int maxDarts, TableKind kind);

struct FixtureRow {
    int line = 0;
    int darts = 0;
    bool isSum = false;
    int vertices = 0;
    int hyperedges = 0;
    int faces = 0;
    BigInt count;
};

struct Fixture {
    std::string name;
    TableKind kind = TableKind::Rooted;
    int genus = 0;
    std::vector<FixtureRow> rows;

    int maxDarts() const;
};

// Parses the census table layout. Kind and genus come from "# kind:" and
// "# genus:" comment lines when present, otherwise from the h/H header
// column and a "genus-N" fragment of `name`. Throws ParseError naming
// "name:line" for malformed lines and for rows violating the genus relation.
Fixture parseFixture(std::istream& in, const std::string& name);
Fixture loadFixture(const std::filesystem::path& path);

// Regular files ending in .txt, sorted by name.
std::vector<std::filesystem::path> fixtureFiles(const std::filesystem::path& dir);

// Non-sum rows as a table.
CountTable tableFromFixture(const Fixture& fixture);

inline constexpr int kCacheFormatVersion = 1;

// Versioned text cache: a header carrying engine, bounds and format version,
// then one "g d v e count" line per entry.
void writeCacheStream(const CountTable& table, std::ostream& out);
CountTable readCacheStream(std::istream& in, const std::string& name);

// Writes to a sibling temporary file and renames it into place.
void writeCacheFile(const CountTable& table, const std::filesystem::path& path);
CountTable readCacheFile(const std::filesystem::path& path);

// $HYPERMAP_CACHE_DIR if set, else $XDG_CACHE_HOME/hypermap, else
// $HOME/.cache/hypermap.
std::filesystem::path cacheDirectory();
// File name for a table built by `meta.engine` up to the given bounds.
std::string cacheFileName(const TableMeta& meta);

} // namespace hypermap
