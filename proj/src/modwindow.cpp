#include "uqcas/repthy.hpp"

#include "uqcas/qnum.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace uqcas {

DenseMat dense_identity(int n) {
    DenseMat m(n, std::vector<RatFunc>(n));
    for (int i = 0; i < n; ++i) m[i][i] = RatFunc(1);
    return m;
}

DenseMat dense_zero(int rows, int cols) {
    return DenseMat(rows, std::vector<RatFunc>(cols));
}

DenseMat dense_mul(const DenseMat& a, const DenseMat& b) {
    if (a.empty() || b.empty()) return {};
    int rows = static_cast<int>(a.size());
    int mid = static_cast<int>(b.size());
    int cols = static_cast<int>(b[0].size());
    if (static_cast<int>(a[0].size()) != mid)
        throw std::invalid_argument("dense_mul: shape mismatch");
    DenseMat out = dense_zero(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < mid; ++k) {
            if (a[r][k].is_zero()) continue;
            for (int c = 0; c < cols; ++c) {
                if (b[k][c].is_zero()) continue;
                out[r][c] = out[r][c] + a[r][k] * b[k][c];
            }
        }
    return out;
}

std::vector<RatFunc> dense_apply(const DenseMat& a, const std::vector<RatFunc>& v) {
    std::vector<RatFunc> out(a.size());
    for (size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() != v.size())
            throw std::invalid_argument("dense_apply: shape mismatch");
        for (size_t c = 0; c < v.size(); ++c) {
            if (a[r][c].is_zero() || v[c].is_zero()) continue;
            out[r] = out[r] + a[r][c] * v[c];
        }
    }
    return out;
}

std::vector<int> dense_rref(DenseMat& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    int ncols = static_cast<int>(rows[0].size());
    size_t rank = 0;
    for (int col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        RatFunc inv = rows[rank][col].inv();
        for (int c = col; c < ncols; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            RatFunc f = rows[r][col];
            for (int c = col; c < ncols; ++c)
                rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

int dense_rank(DenseMat rows) {
    return static_cast<int>(dense_rref(rows).size());
}

bool ModuleWindow::full() const {
    for (bool b : boundary)
        if (b) return false;
    return true;
}

DenseMat module_action(const ModuleWindow& V, const AlgElt& x) {
    int d = V.dim();
    DenseMat out = dense_zero(d, d);
    for (const auto& [m, c] : x.terms()) {
        DenseMat M = dense_identity(d);
        for (int i : m.fword) M = dense_mul(M, V.f_action[i]);
        for (size_t t = 0; t < m.kexp.size(); ++t) {
            int e = m.kexp[t];
            const DenseMat& Kt = e >= 0 ? V.k_action[t] : V.kinv_action[t];
            for (int r = 0; r < std::abs(e); ++r) M = dense_mul(M, Kt);
        }
        for (int i : m.eword) M = dense_mul(M, V.e_action[i]);
        for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s) {
                if (M[r][s].is_zero()) continue;
                out[r][s] = out[r][s] + c * M[r][s];
            }
    }
    return out;
}

namespace {

struct GenRef {
    enum Kind { E, F, K, Kinv } kind;
    int idx;
};

const DenseMat& gen_matrix(const ModuleWindow& V, GenRef g) {
    switch (g.kind) {
        case GenRef::E: return V.e_action[g.idx];
        case GenRef::F: return V.f_action[g.idx];
        case GenRef::K: return V.k_action[g.idx];
        default: return V.kinv_action[g.idx];
    }
}

// Applies the word (leftmost letter acting last) to the basis vector `col`,
// insisting that the vector fed into every application is supported on
// interior positions.  Returns nullopt when that fails, in which case the
// window cannot certify the column.
std::optional<std::vector<RatFunc>> clean_word_apply(const ModuleWindow& V,
                                                     const std::vector<GenRef>& word,
                                                     int col) {
    std::vector<RatFunc> v(V.dim());
    v[col] = RatFunc(1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        for (int p = 0; p < V.dim(); ++p)
            if (V.boundary[p] && !v[p].is_zero()) return std::nullopt;
        v = dense_apply(gen_matrix(V, *it), v);
    }
    return v;
}

struct Relation {
    std::vector<std::pair<RatFunc, std::vector<GenRef>>> terms;
};

int check_relation(const ModuleWindow& V, const Relation& rel) {
    int bad = 0;
    for (int col = 0; col < V.dim(); ++col) {
        std::vector<RatFunc> acc(V.dim());
        bool clean = true;
        for (const auto& [coeff, word] : rel.terms) {
            auto v = clean_word_apply(V, word, col);
            if (!v) {
                clean = false;
                break;
            }
            for (int p = 0; p < V.dim(); ++p) {
                if ((*v)[p].is_zero()) continue;
                acc[p] = acc[p] + coeff * (*v)[p];
            }
        }
        if (!clean) continue;
        for (int p = 0; p < V.dim(); ++p)
            if (!acc[p].is_zero()) ++bad;
    }
    return bad;
}

} // namespace

int relation_violations(const ModuleWindow& V) {
    const RootDatum& D = V.algebra->datum();
    int n = D.rank();
    std::vector<Relation> rels;
    RatFunc one(1);

    for (int i = 0; i < n; ++i) {
        rels.push_back({{{one, {{GenRef::K, i}, {GenRef::Kinv, i}}}, {-one, {}}}});
        rels.push_back({{{one, {{GenRef::Kinv, i}, {GenRef::K, i}}}, {-one, {}}}});
        for (int j = i + 1; j < n; ++j)
            rels.push_back({{{one, {{GenRef::K, i}, {GenRef::K, j}}},
                             {-one, {{GenRef::K, j}, {GenRef::K, i}}}}});
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long pairing = D.bilin(D.simple(i), D.simple(j));
            rels.push_back({{{one, {{GenRef::K, i}, {GenRef::E, j}}},
                             {-RatFunc::q_power(pairing), {{GenRef::E, j}, {GenRef::K, i}}}}});
            rels.push_back({{{one, {{GenRef::K, i}, {GenRef::F, j}}},
                             {-RatFunc::q_power(-pairing), {{GenRef::F, j}, {GenRef::K, i}}}}});
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Relation rel;
            rel.terms.push_back({one, {{GenRef::E, i}, {GenRef::F, j}}});
            rel.terms.push_back({-one, {{GenRef::F, j}, {GenRef::E, i}}});
            if (i == j) {
                RatFunc denom = RatFunc::q_power(D.sym_d(i)) - RatFunc::q_power(-D.sym_d(i));
                rel.terms.push_back({-denom.inv(), {{GenRef::K, i}}});
                rel.terms.push_back({denom.inv(), {{GenRef::Kinv, i}}});
            }
            rels.push_back(rel);
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int m = 1 - D.cartan(i, j);
            Relation serre_e, serre_f;
            for (int k = 0; k <= m; ++k) {
                RatFunc coeff = qbinom(m, k, D.sym_d(i));
                if (k % 2 == 1) coeff = -coeff;
                std::vector<GenRef> we, wf;
                for (int t = 0; t < m - k; ++t) we.push_back({GenRef::E, i});
                we.push_back({GenRef::E, j});
                for (int t = 0; t < k; ++t) we.push_back({GenRef::E, i});
                for (int t = 0; t < m - k; ++t) wf.push_back({GenRef::F, i});
                wf.push_back({GenRef::F, j});
                for (int t = 0; t < k; ++t) wf.push_back({GenRef::F, i});
                serre_e.terms.push_back({coeff, we});
                serre_f.terms.push_back({coeff, wf});
            }
            rels.push_back(serre_e);
            rels.push_back(serre_f);
        }

    int bad = 0;
    for (const auto& rel : rels) bad += check_relation(V, rel);
    return bad;
}

ModuleWindow sl2_simple(const UqAlgebra& U, int n, int eps) {
    if (U.datum().rank() != 1)
        throw std::invalid_argument("sl2_simple: datum must have rank 1");
    if (n < 0 || (eps != 1 && eps != -1))
        throw std::invalid_argument("sl2_simple: need n >= 0 and eps = +-1");
    long d = U.datum().sym_d(0);
    ModuleWindow V;
    V.algebra = &U;
    V.descriptor = "L(" + std::to_string(n) + (eps == 1 ? ",+)" : ",-)");
    int dim = n + 1;
    V.labels.resize(dim);
    V.boundary.assign(dim, false);
    V.e_action = {dense_zero(dim, dim)};
    V.f_action = {dense_zero(dim, dim)};
    V.k_action = {dense_zero(dim, dim)};
    V.kinv_action = {dense_zero(dim, dim)};
    for (int i = 0; i <= n; ++i) {
        V.labels[i] = "m" + std::to_string(i);
        V.k_action[0][i][i] = RatFunc::q_power(d * (n - 2 * i), eps);
        V.kinv_action[0][i][i] = RatFunc::q_power(-d * (n - 2 * i), eps);
        if (i < n) V.f_action[0][i + 1][i] = RatFunc(1);
        if (i > 0) V.e_action[0][i - 1][i] = qint(i, d) * qint(n + 1 - i, d) * RatFunc(eps);
    }
    return V;
}

} // namespace uqcas
