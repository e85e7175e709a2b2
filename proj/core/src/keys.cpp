#include "hypermap/keys.hpp"

namespace hypermap {

bool validateHypermapKey(int genus, int darts, int vertices, int hyperedges, int faces)
{
    if (genus < 0 || darts < 0 || hyperedges < 0 || vertices < 1 || faces < 1) {
        return false;
    }
    if (vertices + hyperedges + faces != darts + 2 * (1 - genus)) {
        return false;
    }
    if (darts == 0) {
        return genus == 0 && hyperedges == 0 && vertices == 1 && faces == 1;
    }
    return true;
}

int facesFromKey(int genus, int darts, int vertices, int hyperedges)
{
    return darts + 2 * (1 - genus) - vertices - hyperedges;
}

bool validateMapKey(int genus, int edges, int vertices, int faces)
{
    if (genus < 0 || edges < 0 || vertices < 1 || faces < 1) {
        return false;
    }
    if (vertices - edges + faces != 2 * (1 - genus)) {
        return false;
    }
    return edges > 0 || (genus == 0 && vertices == 1 && faces == 1);
}

std::optional<HypermapKey> makeHypermapKey(int genus, int darts, int vertices, int hyperedges, int faces)
{
    if (!validateHypermapKey(genus, darts, vertices, hyperedges, faces)) {
        return std::nullopt;
    }
    return HypermapKey{genus, darts, vertices, hyperedges};
}

std::optional<MapKey> makeMapKey(int genus, int edges, int vertices, int faces)
{
    if (!validateMapKey(genus, edges, vertices, faces)) {
        return std::nullopt;
    }
    return MapKey{genus, edges, vertices};
}

} // namespace hypermap
