#pragma once

#include "uqcas/rootdatum.hpp"

#include <optional>

namespace uqcas {

// Weyl group element. Equality is decided by the cached action matrix on the
// root lattice; the stored word is the lexicographically least reduced
// expression, which removes all braid-move ambiguity from reports.
class WeylElt {
public:
    explicit WeylElt(const RootDatum* datum); // identity
    static WeylElt from_word(const RootDatum& datum, const std::vector<int>& word);
    static WeylElt simple_reflection(const RootDatum& datum, int i);
    // Reflection s_beta in an arbitrary positive root.
    static WeylElt root_reflection(const RootDatum& datum, const RootVec& beta);

    const RootDatum& datum() const { return *datum_; }
    const std::vector<int>& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    bool is_identity() const { return word_.empty(); }

    // Column j of the action matrix is w(alpha_j).
    RootVec apply(const RootVec& v) const;
    RootVec apply_inverse(const RootVec& v) const;

    WeylElt operator*(const WeylElt& o) const;
    WeylElt inverse() const;
    bool operator==(const WeylElt& o) const { return mat_ == o.mat_; }
    bool operator!=(const WeylElt& o) const { return !(*this == o); }
    bool operator<(const WeylElt& o) const { return mat_ < o.mat_; } // for ordered containers

    // {beta in Phi^+ : w^{-1} beta < 0}; indices into datum().pos_roots().
    std::vector<int> phi_plus() const;
    // Left descent set {i : l(s_i w) < l(w)} and right analogue.
    bool has_left_descent(int i) const;
    bool has_right_descent(int i) const;

    // The unique last letter of every reduced expression, when it exists.
    // Throws std::invalid_argument on the identity.
    std::optional<int> unique_ending() const;

    std::string to_string() const; // "s1 s2 s1" or "e"

private:
    const RootDatum* datum_;
    std::vector<int> word_;
    std::vector<std::vector<int>> mat_;  // action matrix, mat_[i][j] = coord i of w(alpha_j)
    std::vector<std::vector<int>> inv_;  // action matrix of w^{-1}
    void recompute_word();
};

// Parse "s1 s2" / "s1s2" / "e" into a WeylElt over the datum.
WeylElt parse_weyl_word(const RootDatum& datum, const std::string& text);

// The whole Weyl group, enumerated deterministically (BFS by length, then
// lexicographic canonical word).
std::vector<WeylElt> all_weyl_elements(const RootDatum& datum);
WeylElt longest_element(const RootDatum& datum);

// Supports: subsets of simple-root indices, pairwise orthogonal, contained in
// Phi^+(w). Includes the empty set. Deterministic order.
std::vector<std::vector<int>> valid_supports(const WeylElt& w);

// Weak left order via length bookkeeping: l(v) + l(v^{-1} w) = l(w).
bool weak_leq(const WeylElt& v, const WeylElt& w);

} // namespace uqcas
