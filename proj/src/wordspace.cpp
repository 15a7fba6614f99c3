#include "uqcas/wordspace.hpp"

#include "uqcas/qnum.hpp"

#include <algorithm>
#include <stdexcept>

namespace uqcas {

RootVec word_degree(int rank, const Word& w) {
    RootVec nu(rank, 0);
    for (int letter : w) nu[letter] += 1;
    return nu;
}

std::vector<Word> enumerate_words(const RootVec& nu) {
    Word sorted;
    for (size_t i = 0; i < nu.size(); ++i)
        for (int t = 0; t < nu[i]; ++t) sorted.push_back(static_cast<int>(i));
    std::vector<Word> out;
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

std::vector<RootVec> enumerate_subdegrees(const RootVec& nu) {
    std::vector<RootVec> out;
    RootVec cur(nu.size(), 0);
    for (;;) {
        out.push_back(cur);
        size_t k = nu.size();
        while (k-- > 0) {
            if (cur[k] < nu[k]) {
                cur[k] += 1;
                for (size_t t = k + 1; t < nu.size(); ++t) cur[t] = 0;
                break;
            }
            if (k == 0) return out;
        }
    }
}

int DegreeBasis::word_id(const Word& w) const {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || *it != w) return -1;
    return static_cast<int>(it - words.begin());
}

WordSpace::WordSpace(const RootDatum& datum, int max_height)
    : datum_(&datum), max_height_(max_height) {}

const DegreeBasis& WordSpace::basis(const RootVec& nu) const {
    int ht = 0;
    for (int x : nu) ht += x;
    if (ht > max_height_)
        throw std::domain_error(
            "WordSpace::basis: degree height exceeds the configured bound; "
            "construct the algebra with a larger bound");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(nu);
    if (it == cache_.end()) it = cache_.emplace(nu, build(nu)).first;
    return *it->second;
}

std::unique_ptr<DegreeBasis> WordSpace::build(const RootVec& nu) const {
    const RootDatum& dat = *datum_;
    int n = dat.rank();
    for (int x : nu)
        if (x < 0) throw std::invalid_argument("WordSpace::basis: negative degree");

    auto out = std::make_unique<DegreeBasis>();
    out->nu = nu;
    out->words = enumerate_words(nu);
    int nwords = static_cast<int>(out->words.size());
    int target_rank = nwords - dat.kostant_dim(nu);

    RowReducer red;
    // Slice of the two-sided Serre ideal: u * serre(i,j) * v across all
    // ordered pairs and all complementary word splits.  The quotient
    // dimension is known in advance, so elimination stops at full rank.
    for (int i = 0; i < n && red.rank() < target_rank; ++i) {
        for (int j = 0; j < n && red.rank() < target_rank; ++j) {
            if (i == j) continue;
            int N = 1 - dat.cartan(i, j);
            RootVec snu(n, 0);
            snu[i] = N;
            snu[j] = 1;
            RootVec rem(n);
            bool fits = true;
            for (int t = 0; t < n; ++t) {
                rem[t] = nu[t] - snu[t];
                if (rem[t] < 0) fits = false;
            }
            if (!fits) continue;
            std::vector<RatFunc> coeff(N + 1);
            for (int r = 0; r <= N; ++r) {
                coeff[r] = qbinom(N, r, dat.sym_d(i));
                if (r % 2) coeff[r] = -coeff[r];
            }
            for (const RootVec& mu : enumerate_subdegrees(rem)) {
                if (red.rank() >= target_rank) break;
                RootVec rest(n);
                for (int t = 0; t < n; ++t) rest[t] = rem[t] - mu[t];
                for (const Word& u : enumerate_words(mu)) {
                    if (red.rank() >= target_rank) break;
                    for (const Word& v : enumerate_words(rest)) {
                        std::map<int, RatFunc> acc;
                        for (int r = 0; r <= N; ++r) {
                            Word w = u;
                            for (int t = 0; t < N - r; ++t) w.push_back(i);
                            w.push_back(j);
                            for (int t = 0; t < r; ++t) w.push_back(i);
                            w.insert(w.end(), v.begin(), v.end());
                            acc[out->word_id(w)] += coeff[r];
                        }
                        SparseRow row;
                        for (auto& [col, c] : acc)
                            if (!c.is_zero()) row.emplace_back(col, c);
                        red.add_row(std::move(row));
                        if (red.rank() >= target_rank) break;
                    }
                }
            }
        }
    }
    if (red.rank() != target_rank)
        throw std::logic_error("WordSpace::basis: Serre slice rank mismatch");

    for (int id = 0; id < nwords; ++id)
        if (!red.pivots().count(id)) out->rep_ids.push_back(id);

    std::map<int, int> rep_pos;
    for (size_t p = 0; p < out->rep_ids.size(); ++p) rep_pos[out->rep_ids[p]] = static_cast<int>(p);

    out->expr.resize(nwords);
    for (int id = 0; id < nwords; ++id) {
        auto pit = red.pivots().find(id);
        if (pit == red.pivots().end()) {
            out->expr[id] = {{rep_pos.at(id), RatFunc(1)}};
            continue;
        }
        // pivot row: words[id] + sum_{reps} c * rep = 0 in the quotient
        SparseRow e;
        for (const auto& [col, c] : red.rows()[pit->second]) {
            if (col == id) continue;
            e.emplace_back(rep_pos.at(col), -c);
        }
        out->expr[id] = std::move(e);
    }
    return out;
}

} // namespace uqcas
