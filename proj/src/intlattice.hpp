#pragma once

#include "uqcas/rootdatum.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace uqcas {
namespace detail {

inline int coord_sum(const RootVec& v) {
    int s = 0;
    for (int c : v) s += c;
    return s;
}

inline int coord_sum_abs(const RootVec& v) {
    int s = 0;
    for (int c : v) s += c < 0 ? -c : c;
    return s;
}

inline bool all_zero(const RootVec& v) {
    return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

inline int floor_div(int a, int b) {
    int q = a / b;
    int r = a % b;
    if (r != 0 && (r < 0) != (b < 0)) --q;
    return q;
}

// Row-echelon integer basis of the lattice spanned by the given vectors.
// residue() reduces a vector to a canonical coset representative, so it
// doubles as a coset key and as a lattice membership test.
class IntLattice {
public:
    IntLattice(const std::vector<RootVec>& gens, int n) : n_(n) {
        std::vector<RootVec> rows;
        for (const auto& g : gens)
            if (!all_zero(g)) rows.push_back(g);
        size_t r = 0;
        for (int col = 0; col < n_ && r < rows.size(); ++col) {
            while (true) {
                size_t best = rows.size();
                for (size_t i = r; i < rows.size(); ++i) {
                    if (rows[i][col] == 0) continue;
                    if (best == rows.size() ||
                        std::abs(rows[i][col]) < std::abs(rows[best][col]))
                        best = i;
                }
                if (best == rows.size()) break;
                std::swap(rows[r], rows[best]);
                bool clean = true;
                for (size_t i = r + 1; i < rows.size(); ++i) {
                    if (rows[i][col] == 0) continue;
                    int q = rows[i][col] / rows[r][col];
                    for (int t = 0; t < n_; ++t) rows[i][t] -= q * rows[r][t];
                    if (rows[i][col] != 0) clean = false;
                }
                if (clean) break;
            }
            if (rows[r][col] == 0) continue;
            if (rows[r][col] < 0)
                for (int t = 0; t < n_; ++t) rows[r][t] = -rows[r][t];
            for (size_t j = 0; j < r; ++j) {
                int q = floor_div(rows[j][col], rows[r][col]);
                if (q)
                    for (int t = 0; t < n_; ++t) rows[j][t] -= q * rows[r][t];
            }
            pivot_col_.push_back(col);
            ++r;
        }
        rows.resize(r);
        basis_ = std::move(rows);
    }

    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<RootVec>& rows() const { return basis_; }

    RootVec residue(RootVec v) const {
        for (size_t j = 0; j < basis_.size(); ++j) {
            int c = pivot_col_[j];
            int q = floor_div(v[c], basis_[j][c]);
            if (q)
                for (int t = 0; t < n_; ++t) v[t] -= q * basis_[j][t];
        }
        return v;
    }

    bool contains(const RootVec& v) const { return all_zero(residue(v)); }

private:
    int n_;
    std::vector<RootVec> basis_;
    std::vector<int> pivot_col_;
};

} // namespace detail
} // namespace uqcas
