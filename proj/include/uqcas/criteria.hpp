#pragma once

#include "uqcas/rootdatum.hpp"

#include <string>
#include <utility>
#include <vector>

namespace uqcas {

// Outcome of testing whether two positive roots differ by an integer
// combination of an orthogonal support set, and if so which rank-3/4
// parabolic configuration the triple realizes.
struct Criterion1Result {
    bool in_span = false;     // beta_i - beta_j lies in Z-span of S
    bool equal_roots = false; // beta_i == beta_j
    // (simple index, coefficient) pairs with nonzero coefficient.
    std::vector<std::pair<int, int>> decomposition;
    // "A3: a123 - a2", "B3: a123 - a2", "B3: a1123 - a2", "C3: a123 - a2",
    // "D4: a1234 - a4", or "" when no row applies.
    std::string table_row;
};

Criterion1Result criterion1_classify(const RootDatum& datum, const RootVec& beta_i,
                                     const RootVec& beta_j, const std::vector<int>& S);

} // namespace uqcas
