#include "uqcas/repthy.hpp"

#include "uqcas/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace uqcas {

long weyl_dimension(const RootDatum& D, const std::vector<int>& weight) {
    if (static_cast<int>(weight.size()) != D.rank())
        throw std::invalid_argument("weyl_dimension: weight has wrong rank");
    for (int m : weight)
        if (m < 0) throw std::invalid_argument("weyl_dimension: weight must be dominant");
    long num = 1, den = 1;
    for (int k = 0; k < D.num_pos_roots(); ++k) {
        const RootVec& beta = D.pos_root(k);
        long top = 0, bot = 0;
        for (int j = 0; j < D.rank(); ++j) {
            top += static_cast<long>(beta[j]) * D.sym_d(j) * (weight[j] + 1);
            bot += static_cast<long>(beta[j]) * D.sym_d(j);
        }
        num *= top;
        den *= bot;
        long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    if (den != 1 || num <= 0)
        throw std::logic_error("weyl_dimension: product failed to reduce to an integer");
    return num;
}

namespace {

// Applies a canonical-form element to the highest weight vector of the Verma
// module of the given weight: monomials with a nonempty E part die, and the
// K part contributes the scalar q^{(lambda, mu)}.
AlgElt verma_lower(const UqAlgebra& U, const std::vector<int>& weight, const AlgElt& x) {
    const RootDatum& D = U.datum();
    AlgElt out;
    for (const auto& [m, c] : x.terms()) {
        if (!m.eword.empty()) continue;
        long pairing = 0;
        for (int t = 0; t < D.rank(); ++t)
            pairing += static_cast<long>(m.kexp[t]) * D.sym_d(t) * weight[t];
        Mono f;
        f.fword = m.fword;
        f.kexp.assign(D.rank(), 0);
        out.add_term(f, c * RatFunc::q_power(pairing));
    }
    return out;
}

struct Slice {
    RootVec nu;
    std::vector<std::vector<int>> exps;
    std::map<std::vector<int>, int> exp_index;
    DenseMat nrows;            // RREF basis of the maximal-submodule slice
    std::vector<int> pivots;
    std::vector<int> free_cols;
    int offset = -1;           // global quotient-basis offset
};

std::vector<RatFunc> class_reduce(std::vector<RatFunc> v, const Slice& s) {
    for (size_t r = 0; r < s.nrows.size(); ++r) {
        int p = s.pivots[r];
        if (v[p].is_zero()) continue;
        RatFunc f = v[p];
        for (size_t c = 0; c < v.size(); ++c)
            v[c] = v[c] - f * s.nrows[r][c];
    }
    return v;
}

std::vector<RatFunc> slice_coordinates(const PbwSpan& span, const Slice& s, const AlgElt& x) {
    std::vector<RatFunc> v(s.exps.size());
    if (x.is_zero()) return v;
    auto coords = span.coordinates(x);
    if (!coords)
        throw std::logic_error("simple_module: element escaped its weight slice");
    for (const auto& [a, c] : *coords) {
        auto it = s.exp_index.find(a);
        if (it == s.exp_index.end())
            throw std::logic_error("simple_module: coordinate outside the slice basis");
        v[it->second] = c;
    }
    return v;
}

void enumerate_weights(int rank, int height, RootVec& cur, int pos,
                       std::vector<RootVec>& out) {
    if (pos == rank - 1) {
        cur[pos] = height;
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= height; ++v) {
        cur[pos] = v;
        enumerate_weights(rank, height - v, cur, pos + 1, out);
    }
}

// RREF basis of the kernel of the stacked constraint matrix.
std::pair<DenseMat, std::vector<int>> kernel_rows(DenseMat constraints, int ncols) {
    std::vector<int> piv = dense_rref(constraints);
    std::vector<bool> is_piv(ncols, false);
    for (int p : piv) is_piv[p] = true;
    DenseMat basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<RatFunc> v(ncols);
        v[f] = RatFunc(1);
        for (size_t r = 0; r < constraints.size(); ++r)
            v[piv[r]] = -constraints[r][f];
        basis.push_back(std::move(v));
    }
    std::vector<int> basis_piv = dense_rref(basis);
    return {std::move(basis), std::move(basis_piv)};
}

} // namespace

ModuleWindow simple_module(const UqAlgebra& U, const std::vector<int>& weight, int dim_cap) {
    const RootDatum& D = U.datum();
    int n = D.rank();
    if (static_cast<int>(weight.size()) != n)
        throw std::invalid_argument("simple_module: weight has wrong rank");
    for (int m : weight)
        if (m < 0) throw std::invalid_argument("simple_module: weight must be dominant");
    long wdim = weyl_dimension(D, weight);
    if (wdim > dim_cap)
        throw std::invalid_argument("simple_module: dimension " + std::to_string(wdim) +
                                    " exceeds cap " + std::to_string(dim_cap));

    PbwSpan span(U, longest_element(D), Side::FMinus);
    std::map<RootVec, Slice> slices;
    std::map<std::pair<int, RootVec>, DenseMat> e_maps; // (i, source nu) -> matrix
    std::vector<std::pair<RootVec, int>> basis; // (nu, column within slice)

    auto make_slice = [&](const RootVec& nu) {
        Slice s;
        s.nu = nu;
        s.exps = span.exponents(nu);
        for (size_t k = 0; k < s.exps.size(); ++k) s.exp_index[s.exps[k]] = static_cast<int>(k);
        return s;
    };

    {
        Slice top = make_slice(RootVec(n, 0));
        top.free_cols = {0};
        top.offset = 0;
        basis.push_back({top.nu, 0});
        slices[top.nu] = std::move(top);
    }

    long total = 1;
    for (int h = 1;; ++h) {
        std::vector<RootVec> level;
        RootVec cur(n, 0);
        enumerate_weights(n, h, cur, 0, level);
        long level_dim = 0;
        for (const RootVec& nu : level) {
            Slice s = make_slice(nu);
            int cols = static_cast<int>(s.exps.size());
            DenseMat constraints;
            for (int i = 0; i < n; ++i) {
                if (nu[i] == 0) continue;
                RootVec below = nu;
                below[i] -= 1;
                const Slice& tgt = slices.at(below);
                DenseMat amat = dense_zero(static_cast<int>(tgt.exps.size()), cols);
                for (int c = 0; c < cols; ++c) {
                    AlgElt img = verma_lower(U, weight, U.mul(U.E(i), span.monomial(s.exps[c])));
                    auto col = slice_coordinates(span, tgt, img);
                    for (size_t r = 0; r < col.size(); ++r) amat[r][c] = col[r];
                }
                e_maps[{i, nu}] = amat;
                for (int f : tgt.free_cols) {
                    std::vector<RatFunc> row(cols);
                    for (int c = 0; c < cols; ++c) {
                        std::vector<RatFunc> column(tgt.exps.size());
                        for (size_t r = 0; r < column.size(); ++r) column[r] = amat[r][c];
                        row[c] = class_reduce(std::move(column), tgt)[f];
                    }
                    constraints.push_back(std::move(row));
                }
            }
            auto [nrows, piv] = kernel_rows(std::move(constraints), cols);
            s.nrows = std::move(nrows);
            s.pivots = std::move(piv);
            std::vector<bool> is_piv(cols, false);
            for (int p : s.pivots) is_piv[p] = true;
            for (int c = 0; c < cols; ++c)
                if (!is_piv[c]) s.free_cols.push_back(c);
            if (!s.free_cols.empty()) {
                s.offset = static_cast<int>(basis.size());
                for (size_t k = 0; k < s.free_cols.size(); ++k)
                    basis.push_back({nu, static_cast<int>(k)});
            }
            level_dim += static_cast<long>(s.free_cols.size());
            slices[nu] = std::move(s);
        }
        total += level_dim;
        if (total > wdim)
            throw std::logic_error("simple_module: quotient exceeded the Weyl dimension");
        if (level_dim == 0) break;
    }
    if (total != wdim)
        throw std::logic_error("simple_module: quotient dimension " + std::to_string(total) +
                               " does not match the Weyl dimension " + std::to_string(wdim));

    int dim = static_cast<int>(basis.size());
    ModuleWindow V;
    V.algebra = &U;
    V.descriptor = "L(" + [&] {
        std::string s;
        for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(weight[i]);
        return s;
    }() + ")";
    V.labels.resize(dim);
    V.boundary.assign(dim, false);
    V.e_action.assign(n, dense_zero(dim, dim));
    V.f_action.assign(n, dense_zero(dim, dim));
    V.k_action.assign(n, dense_zero(dim, dim));
    V.kinv_action.assign(n, dense_zero(dim, dim));
    for (int b = 0; b < dim; ++b) V.labels[b] = "x" + std::to_string(b);

    auto write_column = [&](DenseMat& mat, int col, const Slice& tgt,
                            std::vector<RatFunc> vec) {
        vec = class_reduce(std::move(vec), tgt);
        for (size_t k = 0; k < tgt.free_cols.size(); ++k) {
            const RatFunc& val = vec[tgt.free_cols[k]];
            if (!val.is_zero()) mat[tgt.offset + static_cast<int>(k)][col] = val;
        }
    };

    for (int b = 0; b < dim; ++b) {
        const auto& [nu, k] = basis[b];
        const Slice& src = slices.at(nu);
        int srccol = src.free_cols[k];
        const AlgElt& rep = span.monomial(src.exps[srccol]);

        for (int t = 0; t < n; ++t) {
            long exp = static_cast<long>(D.sym_d(t)) * weight[t] -
                       D.bilin(D.simple(t), nu);
            V.k_action[t][b][b] = RatFunc::q_power(exp);
            V.kinv_action[t][b][b] = RatFunc::q_power(-exp);
        }

        for (int i = 0; i < n; ++i) {
            RootVec up = nu;
            up[i] += 1;
            auto it = slices.find(up);
            if (it != slices.end()) {
                AlgElt img = verma_lower(U, weight, U.mul(U.F(i), rep));
                write_column(V.f_action[i], b, it->second,
                             slice_coordinates(span, it->second, img));
            }
            if (nu[i] > 0) {
                RootVec below = nu;
                below[i] -= 1;
                const Slice& tgt = slices.at(below);
                const DenseMat& amat = e_maps.at({i, nu});
                std::vector<RatFunc> column(tgt.exps.size());
                for (size_t r = 0; r < column.size(); ++r) column[r] = amat[r][srccol];
                write_column(V.e_action[i], b, tgt, std::move(column));
            }
        }
    }
    return V;
}

} // namespace uqcas
