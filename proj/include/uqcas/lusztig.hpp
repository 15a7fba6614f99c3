#pragma once

#include "uqcas/algelt.hpp"
#include "uqcas/weyl.hpp"

namespace uqcas {

// Lusztig's braid-group automorphism T_i and its inverse, extended from
// generators to arbitrary elements multiplicatively.
AlgElt lusztig_T(const UqAlgebra& U, int i, const AlgElt& x);
AlgElt lusztig_T_inv(const UqAlgebra& U, int i, const AlgElt& x);

// Composite along a word: T_{w[0]} T_{w[1]} ... (applied right-to-left to x).
AlgElt lusztig_T_word(const UqAlgebra& U, const std::vector<int>& word, const AlgElt& x);
AlgElt lusztig_T_inv_word(const UqAlgebra& U, const std::vector<int>& word, const AlgElt& x);

// PBW root vectors attached to a reduced word i_1 ... i_l:
//   F_{beta_k} = T^{-1}_{i_1} ... T^{-1}_{i_{k-1}} (F_{i_k}),
//   E_{beta_k} = T_{i_1} ... T_{i_{k-1}} (E_{i_k}),
// where beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}).  k is 1-based.
AlgElt root_vector_F(const UqAlgebra& U, const std::vector<int>& reduced_word, int k);
AlgElt root_vector_E(const UqAlgebra& U, const std::vector<int>& reduced_word, int k);

} // namespace uqcas
