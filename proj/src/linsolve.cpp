#include "uqcas/linsolve.hpp"

#include <algorithm>

namespace uqcas {

SparseRow sparse_axpy(const SparseRow& a, const RatFunc& c, const SparseRow& b) {
    if (c.is_zero()) return a;
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            RatFunc v = c * b[j].second;
            if (!v.is_zero()) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            RatFunc v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow sparse_add(const SparseRow& a, const SparseRow& b) {
    return sparse_axpy(a, RatFunc(1), b);
}

SparseRow sparse_scale(const SparseRow& a, const RatFunc& c) {
    SparseRow out;
    if (c.is_zero()) return out;
    out.reserve(a.size());
    for (const auto& [col, v] : a) out.emplace_back(col, c * v);
    return out;
}

void RowReducer::eliminate(SparseRow& row) const {
    // Stored rows only carry non-pivot columns besides their own pivot, so
    // each elimination step removes one pivot column and never reintroduces
    // another; a simple scan-from-the-front loop terminates.
    for (;;) {
        const std::pair<int, RatFunc>* hit = nullptr;
        for (const auto& entry : row) {
            if (pivot_row_.count(entry.first)) {
                hit = &entry;
                break;
            }
        }
        if (!hit) return;
        const SparseRow& pivot = rows_[pivot_row_.at(hit->first)];
        row = sparse_axpy(row, -hit->second, pivot);
    }
}

std::optional<int> RowReducer::add_row(SparseRow row) {
    eliminate(row);
    if (row.empty()) return std::nullopt;
    int pcol = row.front().first;
    RatFunc lead = row.front().second;
    if (!lead.is_one()) row = sparse_scale(row, lead.inv());
    int new_idx = static_cast<int>(rows_.size());
    for (auto& existing : rows_) {
        auto it = std::lower_bound(existing.begin(), existing.end(), pcol,
                                   [](const auto& e, int c) { return e.first < c; });
        if (it != existing.end() && it->first == pcol)
            existing = sparse_axpy(existing, -it->second, row);
    }
    rows_.push_back(std::move(row));
    pivot_row_[pcol] = new_idx;
    return pcol;
}

SparseRow RowReducer::reduce(SparseRow row) const {
    eliminate(row);
    return row;
}

void SpanSolver::eliminate(SparseRow& row, SparseRow* combo) const {
    for (;;) {
        const std::pair<int, RatFunc>* hit = nullptr;
        for (const auto& entry : row) {
            if (pivot_row_.count(entry.first)) {
                hit = &entry;
                break;
            }
        }
        if (!hit) return;
        int idx = pivot_row_.at(hit->first);
        RatFunc c = -hit->second;
        row = sparse_axpy(row, c, rows_[idx]);
        if (combo) *combo = sparse_axpy(*combo, c, combos_[idx]);
    }
}

bool SpanSolver::add(SparseRow row) {
    SparseRow combo{{added_, RatFunc(1)}};
    ++added_;
    eliminate(row, &combo);
    if (row.empty()) return false;
    RatFunc lead = row.front().second;
    if (!lead.is_one()) {
        RatFunc s = lead.inv();
        row = sparse_scale(row, s);
        combo = sparse_scale(combo, s);
    }
    int pcol = row.front().first;
    int new_idx = static_cast<int>(rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r) {
        auto it = std::lower_bound(rows_[r].begin(), rows_[r].end(), pcol,
                                   [](const auto& e, int c) { return e.first < c; });
        if (it != rows_[r].end() && it->first == pcol) {
            RatFunc c = -it->second;
            rows_[r] = sparse_axpy(rows_[r], c, row);
            combos_[r] = sparse_axpy(combos_[r], c, combo);
        }
    }
    rows_.push_back(std::move(row));
    combos_.push_back(std::move(combo));
    pivot_row_[pcol] = new_idx;
    return true;
}

bool SpanSolver::contains(SparseRow target) const {
    eliminate(target, nullptr);
    return target.empty();
}

std::optional<std::vector<RatFunc>> SpanSolver::solve(SparseRow target) const {
    SparseRow acc;
    for (;;) {
        const std::pair<int, RatFunc>* hit = nullptr;
        for (const auto& entry : target) {
            if (pivot_row_.count(entry.first)) {
                hit = &entry;
                break;
            }
        }
        if (!hit) break;
        int idx = pivot_row_.at(hit->first);
        RatFunc c = hit->second;
        target = sparse_axpy(target, -c, rows_[idx]);
        acc = sparse_axpy(acc, c, combos_[idx]);
    }
    if (!target.empty()) return std::nullopt;
    std::vector<RatFunc> out(added_);
    for (const auto& [i, v] : acc) out[i] = v;
    return out;
}

} // namespace uqcas
