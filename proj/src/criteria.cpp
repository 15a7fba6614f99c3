#include "uqcas/criteria.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace uqcas {

// The five realizable configurations are told apart by root lengths and by
// the coefficient pattern of the difference, which is reflection-invariant.
Criterion1Result criterion1_classify(const RootDatum& datum, const RootVec& beta_i,
                                     const RootVec& beta_j, const std::vector<int>& S) {
    int n = datum.rank();
    for (size_t a = 0; a < S.size(); ++a)
        for (size_t b = a + 1; b < S.size(); ++b)
            if (datum.bilin(datum.simple(S[a]), datum.simple(S[b])) != 0)
                throw std::invalid_argument("criterion1_classify: support not orthogonal");

    Criterion1Result res;
    RootVec diff(n);
    for (int k = 0; k < n; ++k) diff[k] = beta_i[k] - beta_j[k];
    bool zero = std::all_of(diff.begin(), diff.end(), [](int x) { return x == 0; });
    if (zero) {
        res.in_span = true;
        res.equal_roots = true;
        return res;
    }
    for (int k = 0; k < n; ++k) {
        if (diff[k] != 0 && std::find(S.begin(), S.end(), k) == S.end()) return res;
    }
    res.in_span = true;
    for (int k : S)
        if (diff[k] != 0) res.decomposition.emplace_back(k, diff[k]);

    long len_i = datum.bilin(beta_i, beta_i);
    long len_j = datum.bilin(beta_j, beta_j);
    std::vector<std::pair<long, int>> supp; // (length of s_k, |m_k|)
    for (auto& [k, m] : res.decomposition)
        supp.emplace_back(datum.bilin(datum.simple(k), datum.simple(k)), std::abs(m));
    std::sort(supp.begin(), supp.end());

    auto all_equal_len = [&] {
        for (auto& [l, m] : supp)
            if (l != len_i || l != len_j) return false;
        return len_i == len_j;
    };
    auto coeffs_are = [&](std::vector<int> ms) {
        std::vector<int> got;
        for (auto& [l, m] : supp) got.push_back(m);
        std::sort(got.begin(), got.end());
        std::sort(ms.begin(), ms.end());
        return got == ms;
    };

    if (supp.size() == 3 && coeffs_are({1, 1, 1}) && all_equal_len()) {
        res.table_row = "D4: a1234 - a4";
    } else if (supp.size() == 2 && coeffs_are({1, 1}) && all_equal_len()) {
        res.table_row = "A3: a123 - a2";
    } else if (supp.size() == 2 && coeffs_are({1, 1}) && len_i != len_j &&
               supp[0].first != supp[1].first) {
        res.table_row = "B3: a123 - a2";
    } else if (supp.size() == 2 && coeffs_are({1, 2}) && len_i == len_j &&
               supp[0].first < supp[1].first && supp[0].second == 2 && supp[1].second == 1) {
        res.table_row = "B3: a1123 - a2";
    } else if (supp.size() == 2 && coeffs_are({1, 1}) && len_i == len_j &&
               supp[0].first != supp[1].first && len_i == supp[0].first) {
        res.table_row = "C3: a123 - a2";
    }
    return res;
}

} // namespace uqcas
