#pragma once

#include "uqcas/linsolve.hpp"
#include "uqcas/rootdatum.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace uqcas {

using Word = std::vector<int>; // letters are simple-root indices

// Λ-degree of a word: multiplicity vector of its letters.
RootVec word_degree(int rank, const Word& w);

// Echelonized degree component of the free algebra on n letters modulo the
// quantum Serre ideal.  Representative words form a basis of the quotient
// slice; every word of the degree has a stored expansion over them.  The same
// data serves the E- and F-sides, whose Serre relations have identical
// coefficients.
struct DegreeBasis {
    RootVec nu;
    std::vector<Word> words;  // all words of degree nu, lexicographically sorted
    std::vector<int> rep_ids; // indices into words, ascending
    // expansion of words[id] over representatives: (position in rep_ids, coeff)
    std::vector<SparseRow> expr;

    int word_id(const Word& w) const; // -1 when absent
    int rep_count() const { return static_cast<int>(rep_ids.size()); }
};

class WordSpace {
public:
    explicit WordSpace(const RootDatum& datum, int max_height = 12);
    const RootDatum& datum() const { return *datum_; }
    int max_height() const { return max_height_; }

    // Memoized; safe to call from several threads.  Degrees of height above
    // max_height are rejected with std::domain_error.
    const DegreeBasis& basis(const RootVec& nu) const;

private:
    const RootDatum* datum_;
    int max_height_;
    mutable std::mutex mu_;
    mutable std::map<RootVec, std::unique_ptr<DegreeBasis>> cache_;

    std::unique_ptr<DegreeBasis> build(const RootVec& nu) const;
};

std::vector<Word> enumerate_words(const RootVec& nu);
// All coordinatewise splits mu with 0 <= mu <= nu, lexicographic order.
std::vector<RootVec> enumerate_subdegrees(const RootVec& nu);

} // namespace uqcas
