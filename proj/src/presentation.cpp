#include "uqcas/coideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace uqcas {

namespace {

std::string root_label(const RootVec& beta) { return root_to_string(beta); }

std::string kexp_label(const RootVec& mu) {
    std::string out = "K^(";
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(mu[i]);
    }
    out += ")";
    return out;
}

} // namespace

CoidealPresentation build_presentation(const UqAlgebra& U, const BorelData& data) {
    const RootDatum& D = U.datum();
    for (const auto& mu : data.lattice) {
        for (const auto& beta : data.phi_minus.support)
            if (D.bilin(mu, beta) != 0)
                throw std::invalid_argument("lattice vector " + kexp_label(mu) +
                                            " is not orthogonal to the minus support");
        if (data.phi_plus)
            for (const auto& beta : data.phi_plus->support)
                if (D.bilin(mu, beta) != 0)
                    throw std::invalid_argument("lattice vector " + kexp_label(mu) +
                                                " is not orthogonal to the plus support");
    }

    CoidealPresentation pres;
    ShiftContext minus(U, data.phi_minus, Side::FMinus);
    for (int k = 0; k < data.w_minus.length(); ++k) {
        pres.generators.push_back(minus.shifted_generator(k));
        pres.labels.push_back("Fbar[" + root_label(minus.span().root(k)) + "]");
    }
    for (const auto& mu : data.lattice) {
        RootVec neg(mu.size());
        for (size_t i = 0; i < mu.size(); ++i) neg[i] = -mu[i];
        pres.generators.push_back(U.K(mu));
        pres.labels.push_back(kexp_label(mu));
        pres.generators.push_back(U.K(neg));
        pres.labels.push_back(kexp_label(neg));
    }
    if (data.w_plus) {
        Character phip = data.phi_plus ? *data.phi_plus : Character::trivial(*data.w_plus);
        ShiftContext plus(U, phip, Side::EPlusAntipode);
        for (int k = 0; k < data.w_plus->length(); ++k) {
            pres.generators.push_back(plus.shifted_generator(k));
            pres.labels.push_back("Ebar[" + root_label(plus.span().root(k)) + "]");
        }
    }
    return pres;
}

namespace {

class MonoColumns {
public:
    SparseRow row(const AlgElt& x) {
        SparseRow r;
        for (const auto& [m, c] : x.terms()) {
            auto it = cols_.find(m);
            int id;
            if (it == cols_.end()) {
                id = static_cast<int>(cols_.size());
                cols_.emplace(m, id);
            } else {
                id = it->second;
            }
            r.emplace_back(id, c);
        }
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    }

private:
    std::map<Mono, int> cols_;
};

bool is_single_k_monomial(const AlgElt& x, RootVec* kexp) {
    if (x.terms().size() != 1) return false;
    const Mono& m = x.terms().begin()->first;
    if (!m.fword.empty() || !m.eword.empty()) return false;
    *kexp = RootVec(m.kexp.begin(), m.kexp.end());
    return true;
}

int sign_of(const RootVec& v) {
    bool pos = false, neg = false;
    for (int c : v) {
        if (c > 0) pos = true;
        if (c < 0) neg = true;
    }
    if (pos && neg) return 2;
    if (pos) return 1;
    if (neg) return -1;
    return 0;
}

// Enumerates all ordered words in the weighted generators whose degrees sum
// to delta; every element of the generated algebra in that lambda-degree is a
// combination of these words times lattice monomials.
void ordered_products_rec(const UqAlgebra& U, const std::vector<AlgElt>& gens,
                          const std::vector<RootVec>& degs, int degree_sign,
                          const RootVec& delta, const AlgElt& prefix,
                          std::vector<AlgElt>& out, int depth) {
    bool zero = std::all_of(delta.begin(), delta.end(), [](int c) { return c == 0; });
    if (zero) {
        out.push_back(prefix);
        return;
    }
    if (depth > 12) throw std::domain_error("degree slice enumeration too deep");
    for (size_t t = 0; t < gens.size(); ++t) {
        RootVec rest = delta;
        bool ok = true;
        for (size_t i = 0; i < rest.size(); ++i) {
            rest[i] -= degs[t][i];
            if (degree_sign * rest[i] < 0) ok = false;
        }
        if (!ok) continue;
        ordered_products_rec(U, gens, degs, degree_sign, rest, U.mul(prefix, gens[t]),
                             out, depth + 1);
    }
}

bool n_span_reach(const std::vector<RootVec>& kexps, int ksign, RootVec rest) {
    bool zero = std::all_of(rest.begin(), rest.end(), [](int c) { return c == 0; });
    if (zero) return true;
    for (int c : rest)
        if (ksign * c < 0) return false;
    for (const auto& k : kexps) {
        RootVec nr = rest;
        bool ok = true;
        for (size_t i = 0; i < nr.size(); ++i) {
            nr[i] -= k[i];
            if (ksign * nr[i] < 0) ok = false;
        }
        if (ok && n_span_reach(kexps, ksign, nr)) return true;
    }
    return false;
}

} // namespace

CoidealCheck verify_coideal(const UqAlgebra& U, const CoidealPresentation& pres,
                            int rounds) {
    CoidealCheck out;
    int rank = U.datum().rank();

    std::vector<std::pair<std::string, AlgElt>> targets;
    for (size_t g = 0; g < pres.generators.size(); ++g) {
        TensorElt t = coproduct(U, pres.generators[g]);
        std::map<Mono, AlgElt> lf = left_factors_by_right(t);
        for (auto& [rm, left] : lf) {
            std::string label =
                g < pres.labels.size() ? pres.labels[g] : std::to_string(g);
            targets.emplace_back(label, left);
        }
    }

    MonoColumns cols;
    SpanSolver solver;
    std::vector<AlgElt> frontier;
    AlgElt one = U.one();
    if (solver.add(cols.row(one))) frontier.push_back(one);
    for (const auto& g : pres.generators)
        if (!g.is_zero() && solver.add(cols.row(g))) frontier.push_back(g);

    auto all_contained = [&]() {
        for (const auto& [label, left] : targets)
            if (!solver.contains(cols.row(left))) return false;
        return true;
    };

    int round = 0;
    while (true) {
        if (all_contained()) {
            out.verdict = CoidealVerdict::Yes;
            out.detail = "all left coproduct factors lie in the generated span after " +
                         std::to_string(round) + " multiplication rounds";
            return out;
        }
        if (round >= rounds || frontier.empty()) break;
        std::vector<AlgElt> next;
        for (const auto& f : frontier)
            for (const auto& g : pres.generators) {
                AlgElt p = U.mul(f, g);
                if (!p.is_zero() && solver.add(cols.row(p))) next.push_back(p);
            }
        frontier = std::move(next);
        ++round;
    }

    std::string missing_label;
    for (const auto& [label, left] : targets)
        if (!solver.contains(cols.row(left))) {
            missing_label = label;
            break;
        }

    std::vector<AlgElt> weighted;
    std::vector<RootVec> wdegs;
    std::vector<RootVec> kexps;
    bool pointed_ok = true;
    int degree_sign = 0;
    for (const auto& g : pres.generators) {
        if (g.is_zero()) continue;
        auto deg = g.lambda_degree(rank);
        if (!deg) {
            pointed_ok = false;
            break;
        }
        int s = sign_of(*deg);
        if (s == 0) {
            RootVec kexp;
            if (!is_single_k_monomial(g, &kexp)) {
                pointed_ok = false;
                break;
            }
            if (sign_of(kexp) != 0) kexps.push_back(kexp);
            continue;
        }
        if (s == 2 || (degree_sign != 0 && s != degree_sign)) {
            pointed_ok = false;
            break;
        }
        degree_sign = s;
        weighted.push_back(g);
        wdegs.push_back(*deg);
    }
    if (pointed_ok && !kexps.empty()) {
        int ksign = sign_of(kexps[0]);
        if (ksign == 2 || ksign == 0) pointed_ok = false;
        for (const auto& k : kexps)
            if (sign_of(k) != ksign) pointed_ok = false;
    }

    if (!pointed_ok) {
        out.verdict = CoidealVerdict::Unknown;
        out.detail = "left factor of " + missing_label +
                     " not reached within " + std::to_string(rounds) +
                     " rounds and the generators admit no graded certificate";
        return out;
    }

    int ksign = kexps.empty() ? 1 : sign_of(kexps[0]);
    for (const auto& [label, left] : targets) {
        if (solver.contains(cols.row(left))) continue;

        std::map<RootVec, AlgElt> parts;
        for (const auto& [m, c] : left.terms())
            parts[mono_lambda_degree(rank, m)].add_term(m, c);

        for (const auto& [delta, part] : parts) {
            std::vector<AlgElt> slice_products;
            try {
                ordered_products_rec(U, weighted, wdegs,
                                     degree_sign == 0 ? 1 : degree_sign, delta,
                                     U.one(), slice_products, 0);
            } catch (const std::domain_error&) {
                out.verdict = CoidealVerdict::Unknown;
                out.detail = "degree slice for " + label + " too large to enumerate";
                return out;
            }

            std::set<RootVec> mu_candidates;
            for (const auto& prod : slice_products)
                for (const auto& [pm, pc] : prod.terms())
                    for (const auto& [tm, tc] : part.terms()) {
                        RootVec mu(rank);
                        for (int i = 0; i < rank; ++i) mu[i] = tm.kexp[i] - pm.kexp[i];
                        mu_candidates.insert(mu);
                    }

            MonoColumns scols;
            SpanSolver sspan;
            for (const auto& mu : mu_candidates) {
                if (!n_span_reach(kexps, ksign, mu)) continue;
                AlgElt kfac = U.K(std::vector<int>(mu.begin(), mu.end()));
                for (const auto& prod : slice_products)
                    sspan.add(scols.row(U.mul(prod, kfac)));
            }
            if (!sspan.contains(scols.row(part))) {
                out.verdict = CoidealVerdict::No;
                out.detail = "left coproduct factor of " + label +
                             " lies outside the exact degree slice of the generated algebra";
                return out;
            }
        }
    }

    out.verdict = CoidealVerdict::Yes;
    out.detail = "all left coproduct factors lie in the exact degree slices of the "
                 "generated algebra";
    return out;
}

} // namespace uqcas
