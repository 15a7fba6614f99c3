#include "uqcas/coideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace uqcas {

namespace {

RootVec negate(const RootVec& v) {
    RootVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

bool fits(const RootVec& part, const RootVec& whole) {
    for (size_t i = 0; i < whole.size(); ++i)
        if (part[i] > whole[i]) return false;
    return true;
}

void subtract(RootVec& v, const RootVec& d, int times) {
    for (size_t i = 0; i < v.size(); ++i) v[i] -= times * d[i];
}

} // namespace

PbwSpan::PbwSpan(const UqAlgebra& U, const WeylElt& w, Side side)
    : U_(&U), w_(w), side_(side) {
    const Word& word = w.word();
    const RootDatum& D = U.datum();
    RootVec beta;
    for (size_t k = 0; k < word.size(); ++k) {
        beta = D.simple(word[k]);
        for (size_t j = k; j-- > 0;) beta = D.reflect_simple(word[j], beta);
        roots_.push_back(beta);
        if (side == Side::FMinus) {
            gens_.push_back(root_vector_F(U, word, static_cast<int>(k) + 1));
        } else {
            AlgElt e = root_vector_E(U, word, static_cast<int>(k) + 1);
            gens_.push_back(U.mul(e, U.K(negate(beta))));
        }
    }
}

const std::vector<std::vector<int>>& PbwSpan::exponents(const RootVec& nu) const {
    auto it = exp_cache_.find(nu);
    if (it != exp_cache_.end()) return it->second;
    std::vector<std::vector<int>> out;
    std::vector<int> a(roots_.size(), 0);
    std::function<void(size_t, RootVec)> rec = [&](size_t k, RootVec rest) {
        if (k == roots_.size()) {
            bool zero = std::all_of(rest.begin(), rest.end(), [](int c) { return c == 0; });
            if (zero) out.push_back(a);
            return;
        }
        RootVec r = rest;
        for (int m = 0;; ++m) {
            a[k] = m;
            rec(k + 1, r);
            if (!fits(roots_[k], r)) break;
            subtract(r, roots_[k], 1);
        }
        a[k] = 0;
    };
    rec(0, nu);
    return exp_cache_.emplace(nu, std::move(out)).first->second;
}

const AlgElt& PbwSpan::monomial(const std::vector<int>& a) const {
    auto it = mono_cache_.find(a);
    if (it != mono_cache_.end()) return it->second;
    int last = -1;
    for (int k = static_cast<int>(a.size()); k-- > 0;)
        if (a[k] > 0) {
            last = k;
            break;
        }
    AlgElt value;
    if (last < 0) {
        value = U_->one();
    } else {
        std::vector<int> b = a;
        b[last] -= 1;
        value = U_->mul(monomial(b), gens_[last]);
    }
    return mono_cache_.emplace(a, std::move(value)).first->second;
}

std::optional<RootVec> PbwSpan::slice_degree(const AlgElt& x) const {
    std::optional<RootVec> nu;
    int rank = U_->datum().rank();
    for (const auto& [m, c] : x.terms()) {
        RootVec deg(rank, 0);
        if (side_ == Side::FMinus) {
            if (!m.eword.empty()) return std::nullopt;
            for (int i : m.fword) deg[i] += 1;
            for (int v : m.kexp)
                if (v != 0) return std::nullopt;
        } else {
            if (!m.fword.empty()) return std::nullopt;
            for (int i : m.eword) deg[i] += 1;
            if (m.kexp != negate(deg)) return std::nullopt;
        }
        if (!nu)
            nu = deg;
        else if (*nu != deg)
            return std::nullopt;
    }
    return nu;
}

SparseRow PbwSpan::to_row(const AlgElt& x, std::map<Mono, int>& cols) const {
    SparseRow row;
    for (const auto& [m, c] : x.terms()) {
        auto it = cols.find(m);
        int id;
        if (it == cols.end()) {
            id = static_cast<int>(cols.size());
            cols.emplace(m, id);
        } else {
            id = it->second;
        }
        row.emplace_back(id, c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

PbwSpan::Slice& PbwSpan::slice(const RootVec& nu) const {
    auto it = slice_cache_.find(nu);
    if (it != slice_cache_.end()) return it->second;
    Slice s;
    s.exps = exponents(nu);
    for (const auto& a : s.exps) s.solver.add(to_row(monomial(a), s.cols));
    return slice_cache_.emplace(nu, std::move(s)).first->second;
}

std::optional<std::vector<std::pair<std::vector<int>, RatFunc>>> PbwSpan::coordinates(
    const AlgElt& x) const {
    std::vector<std::pair<std::vector<int>, RatFunc>> out;
    if (x.is_zero()) return out;
    auto nu = slice_degree(x);
    if (!nu) return std::nullopt;
    Slice& s = slice(*nu);
    auto coeffs = s.solver.solve(to_row(x, s.cols));
    if (!coeffs) return std::nullopt;
    for (size_t i = 0; i < s.exps.size(); ++i)
        if (!(*coeffs)[i].is_zero()) out.emplace_back(s.exps[i], (*coeffs)[i]);
    return out;
}

bool PbwSpan::contains(const AlgElt& x) const {
    if (x.is_zero()) return true;
    std::map<RootVec, AlgElt> parts;
    int rank = U_->datum().rank();
    for (const auto& [m, c] : x.terms()) {
        RootVec deg = mono_lambda_degree(rank, m);
        parts[deg].add_term(m, c);
    }
    for (const auto& [deg, part] : parts)
        if (!coordinates(part)) return false;
    return true;
}

Character Character::trivial(const WeylElt& w) {
    Character c{w, {}, {}};
    return c;
}

Character Character::normalized(const WeylElt& w, const std::vector<RootVec>& support) {
    Character c{w, support, std::vector<RatFunc>(support.size(), RatFunc(1))};
    return c;
}

Character Character::with_values(const WeylElt& w, const std::vector<RootVec>& support,
                                 const std::vector<RatFunc>& values) {
    if (support.size() != values.size())
        throw std::invalid_argument("character support and value counts differ");
    Character c{w, support, values};
    return c;
}

Character Character::on_simples(const WeylElt& w, const std::vector<int>& simples) {
    std::vector<RootVec> support;
    for (int i : simples) support.push_back(w.datum().simple(i));
    return normalized(w, support);
}

RatFunc Character::value_of(const RootVec& beta) const {
    for (size_t i = 0; i < support.size(); ++i)
        if (support[i] == beta) return values[i];
    return RatFunc(0);
}

ShiftContext::ShiftContext(const UqAlgebra& U, const Character& phi, Side side)
    : U_(&U), phi_(phi), span_(U, phi.w, side) {
    gen_values_.resize(span_.size());
    for (int k = 0; k < span_.size(); ++k) gen_values_[k] = phi_.value_of(span_.root(k));
    shifted_gens_.resize(span_.size());
    validate_support();
}

void ShiftContext::validate_support() {
    const RootDatum& D = U_->datum();
    for (const auto& beta : phi_.support) {
        bool found = false;
        for (int k = 0; k < span_.size(); ++k)
            if (span_.root(k) == beta) found = true;
        if (!found)
            throw std::invalid_argument("character support root " + root_to_string(beta) +
                                        " is not a root of the Weyl element");
    }
    for (size_t i = 0; i < phi_.support.size(); ++i)
        for (size_t j = i + 1; j < phi_.support.size(); ++j)
            if (D.bilin(phi_.support[i], phi_.support[j]) != 0)
                throw std::invalid_argument("character support roots are not orthogonal");
    bool any_nonzero = false;
    for (const auto& v : phi_.values) any_nonzero = any_nonzero || !v.is_zero();
    if (!any_nonzero) return;
    for (int k = 0; k < span_.size(); ++k)
        for (int l = k + 1; l < span_.size(); ++l) {
            AlgElt prod = U_->mul(span_.generator(l), span_.generator(k));
            auto coords = span_.coordinates(prod);
            if (!coords)
                throw std::logic_error("straightened product left the ordered-monomial span");
            RatFunc rhs(0);
            for (const auto& [a, c] : *coords) {
                RatFunc term = c;
                for (size_t t = 0; t < a.size() && !term.is_zero(); ++t)
                    for (int rep = 0; rep < a[t]; ++rep) term *= gen_values_[t];
                rhs += term;
            }
            if (gen_values_[l] * gen_values_[k] != rhs)
                throw std::domain_error(
                    "character values are inconsistent with the straightening relation of roots " +
                    root_to_string(span_.root(k)) + ", " + root_to_string(span_.root(l)));
        }
}

RatFunc ShiftContext::phi_hat(const AlgElt& x) const {
    if (x.is_zero()) return RatFunc(0);
    std::map<RootVec, AlgElt> parts;
    int rank = U_->datum().rank();
    for (const auto& [m, c] : x.terms())
        parts[mono_lambda_degree(rank, m)].add_term(m, c);
    RatFunc out(0);
    for (const auto& [deg, part] : parts) {
        auto coords = span_.coordinates(part);
        if (!coords)
            throw std::domain_error("left coproduct factor lies outside the base space");
        for (const auto& [a, c] : *coords) {
            RatFunc term = c;
            for (size_t t = 0; t < a.size() && !term.is_zero(); ++t)
                for (int rep = 0; rep < a[t]; ++rep) term *= gen_values_[t];
            out += term;
        }
    }
    return out;
}

AlgElt ShiftContext::shift(const AlgElt& x) const {
    TensorElt t = coproduct(*U_, x);
    std::map<Mono, AlgElt> lf = left_factors_by_right(t);
    AlgElt out;
    for (const auto& [m, left] : lf) {
        RatFunc c = phi_hat(left);
        if (!c.is_zero()) out.add_term(m, c);
    }
    return out;
}

const AlgElt& ShiftContext::shifted_generator(int k) const {
    if (!shifted_gens_[k]) shifted_gens_[k] = shift(span_.generator(k));
    return *shifted_gens_[k];
}

AlgElt character_shift(const UqAlgebra& U, const Character& phi, const AlgElt& x) {
    ShiftContext ctx(U, phi, Side::FMinus);
    return ctx.shift(x);
}

AlgElt character_shift_plus(const UqAlgebra& U, const Character& phi, const AlgElt& x) {
    ShiftContext ctx(U, phi, Side::EPlusAntipode);
    return ctx.shift(x);
}

bool character_supportable(const UqAlgebra& U, const WeylElt& w,
                           const std::vector<RootVec>& support, Side side) {
    try {
        ShiftContext ctx(U, Character::normalized(w, support), side);
    } catch (const std::domain_error&) {
        return false;
    }
    return true;
}

RatFunc sl2_lambda() { return RatFunc(1); }

RatFunc sl2_lambda_prime(const UqAlgebra& U, int i) {
    long d = U.datum().sym_d(i);
    RatFunc qi2 = RatFunc::q_power(2 * d);
    RatFunc qi = RatFunc::q_power(d), qiinv = RatFunc::q_power(-d);
    return qi2 / ((RatFunc(1) - qi2) * (qi - qiinv));
}

ShiftFormulaOutcome shift_formula_check(const UqAlgebra& U, const WeylElt& v, int i,
                                        int m, const RatFunc& phi_value) {
    const RootDatum& D = U.datum();
    WeylElt si = WeylElt::simple_reflection(D, i);
    WeylElt sm = WeylElt::simple_reflection(D, m);
    WeylElt vsi = v * si;
    if (vsi.length() != v.length() + 1) return ShiftFormulaOutcome::NotApplicable;
    WeylElt w = sm * vsi;
    if (w.length() != v.length() + 2) return ShiftFormulaOutcome::NotApplicable;
    RootVec nu = v.apply(D.simple(i));
    if (D.bilin(D.simple(m), nu) != -1) return ShiftFormulaOutcome::NotApplicable;
    if (nu[m] != 0) return ShiftFormulaOutcome::NotApplicable;

    Word word{m};
    for (int letter : v.word()) word.push_back(letter);
    word.push_back(i);
    AlgElt X = root_vector_F(U, word, static_cast<int>(word.size()));
    Word inner(word.begin() + 1, word.end());
    AlgElt Y = root_vector_F(U, inner, static_cast<int>(inner.size()));

    Character phi = Character::with_values(w, {D.simple(m)}, {phi_value});
    AlgElt lhs = character_shift(U, phi, X);
    long dm = D.sym_d(m);
    RatFunc coef = (RatFunc::q_power(-dm) - RatFunc::q_power(dm)) * phi_value;
    AlgElt rhs = X + U.mul(Y, U.Ki(m, -1)) * coef;
    return lhs == rhs ? ShiftFormulaOutcome::Holds : ShiftFormulaOutcome::Fails;
}

} // namespace uqcas
