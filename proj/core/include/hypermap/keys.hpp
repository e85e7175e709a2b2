#pragma once

#include <compare>
#include <optional>

namespace hypermap {

// Euler-type genus relation for hypermaps: v + e + f = t + 2(1 - g).
// True iff the relation holds, v >= 1, f >= 1, and the key has at least one
// dart unless it is the empty hypermap (t = 0, v = f = 1, g = e = 0).
bool validateHypermapKey(int genus, int darts, int vertices, int hyperedges, int faces);

// t + 2(1 - g) - v - e. Nonpositive results mean no such hypermap.
int facesFromKey(int genus, int darts, int vertices, int hyperedges);

// Euler-Poincare relation for ordinary maps: v - e + f = 2(1 - g).
bool validateMapKey(int genus, int edges, int vertices, int faces);

// Canonical count key. Faces are derived from the other four fields so a
// stored key can never violate the genus relation.
struct HypermapKey {
    int genus = 0;
    int darts = 0;
    int vertices = 1;
    int hyperedges = 0;

    int faces() const { return facesFromKey(genus, darts, vertices, hyperedges); }
    bool valid() const { return validateHypermapKey(genus, darts, vertices, hyperedges, faces()); }

    auto operator<=>(const HypermapKey&) const = default;
};

std::optional<HypermapKey> makeHypermapKey(int genus, int darts, int vertices, int hyperedges, int faces);

struct MapKey {
    int genus = 0;
    int edges = 0;
    int vertices = 1;

    int faces() const { return 2 * (1 - genus) - vertices + edges; }
    bool valid() const { return validateMapKey(genus, edges, vertices, faces()); }

    auto operator<=>(const MapKey&) const = default;
};

std::optional<MapKey> makeMapKey(int genus, int edges, int vertices, int faces);

} // namespace hypermap
