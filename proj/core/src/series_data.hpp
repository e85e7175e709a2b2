#pragma once

#include <vector>

namespace hypermap::detail {

struct TrivariateTerm {
    long coefficient;
    int p;
    int q;
    int r;
};

// Indexed by genus - 2 (genus 2..6). Decimal strings, ascending powers.
const std::vector<std::vector<const char*>>& tauNumerators();
const std::vector<std::vector<const char*>>& tNumerators();

const std::vector<TrivariateTerm>& genus2Numerator();

} // namespace hypermap::detail
