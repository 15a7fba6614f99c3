#include "uqcas/algelt.hpp"

#include "uqcas/qnum.hpp"

#include <sstream>
#include <stdexcept>

namespace uqcas {

RootVec mono_lambda_degree(int rank, const Mono& m) {
    RootVec deg(rank, 0);
    for (int l : m.eword) deg[l] += 1;
    for (int l : m.fword) deg[l] -= 1;
    return deg;
}

long mono_z_degree(const Mono& m) {
    return static_cast<long>(m.eword.size()) - static_cast<long>(m.fword.size());
}

void AlgElt::add_term(const Mono& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgElt& AlgElt::operator+=(const AlgElt& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AlgElt& AlgElt::operator-=(const AlgElt& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

AlgElt AlgElt::operator+(const AlgElt& o) const {
    AlgElt r = *this;
    r += o;
    return r;
}

AlgElt AlgElt::operator-(const AlgElt& o) const {
    AlgElt r = *this;
    r -= o;
    return r;
}

AlgElt AlgElt::operator-() const {
    AlgElt r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

AlgElt AlgElt::operator*(const RatFunc& c) const {
    AlgElt r = *this;
    r *= c;
    return r;
}

AlgElt& AlgElt::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::optional<RootVec> AlgElt::lambda_degree(int rank) const {
    std::optional<RootVec> deg;
    for (const auto& [m, c] : terms_) {
        RootVec d = mono_lambda_degree(rank, m);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

std::pair<long, AlgElt> AlgElt::z_degree_leading() const {
    if (terms_.empty()) throw std::invalid_argument("z_degree_leading: zero element");
    long best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long d = mono_z_degree(m);
        if (first || d > best) best = d;
        first = false;
    }
    AlgElt lead;
    for (const auto& [m, c] : terms_)
        if (mono_z_degree(m) == best) lead.add_term(m, c);
    return {best, lead};
}

std::string AlgElt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ')';
        for (int l : m.fword) os << " F" << (l + 1);
        for (size_t i = 0; i < m.kexp.size(); ++i) {
            if (m.kexp[i] == 0) continue;
            os << " K" << (i + 1);
            if (m.kexp[i] != 1) os << '^' << m.kexp[i];
        }
        for (int l : m.eword) os << " E" << (l + 1);
    }
    return os.str();
}

AlgElt UqAlgebra::one() const {
    AlgElt r;
    r.add_term(Mono{{}, std::vector<int>(datum_->rank(), 0), {}}, RatFunc(1));
    return r;
}

AlgElt UqAlgebra::E(int i) const {
    AlgElt r;
    r.add_term(Mono{{}, std::vector<int>(datum_->rank(), 0), {i}}, RatFunc(1));
    return r;
}

AlgElt UqAlgebra::F(int i) const {
    AlgElt r;
    r.add_term(Mono{{i}, std::vector<int>(datum_->rank(), 0), {}}, RatFunc(1));
    return r;
}

AlgElt UqAlgebra::K(const std::vector<int>& mu) const {
    if (static_cast<int>(mu.size()) != datum_->rank())
        throw std::invalid_argument("UqAlgebra::K: wrong lattice vector size");
    AlgElt r;
    r.add_term(Mono{{}, mu, {}}, RatFunc(1));
    return r;
}

AlgElt UqAlgebra::Ki(int i, int power) const {
    std::vector<int> mu(datum_->rank(), 0);
    mu[i] = power;
    return K(mu);
}

AlgElt UqAlgebra::K_of_root(int pos_root_index, int sign) const {
    const RootVec& beta = datum_->pos_root(pos_root_index);
    std::vector<int> mu(beta.begin(), beta.end());
    for (int& x : mu) x *= sign;
    return K(mu);
}

long UqAlgebra::kappa_pairing(const std::vector<int>& kappa, const RootVec& nu) const {
    RootVec k(kappa.begin(), kappa.end());
    return datum_->bilin(k, nu);
}

// E_{eword} * F_{fword} rewritten as a sum of F..K..E monomials with free
// words.  Recursion peels the rightmost E-letter; the E-F commutator
// produces the K+-/K- pair, whose passage across the remaining F-letters
// contributes the visible q-powers.
std::map<Mono, RatFunc> UqAlgebra::cross(const Word& eword, const Word& fword) const {
    int n = datum_->rank();
    std::map<Mono, RatFunc> out;
    auto add = [](std::map<Mono, RatFunc>& dst, const Mono& m, const RatFunc& c) {
        if (c.is_zero()) return;
        auto it = dst.find(m);
        if (it == dst.end()) {
            dst.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) dst.erase(it);
        }
    };
    if (eword.empty()) {
        add(out, Mono{fword, std::vector<int>(n, 0), {}}, RatFunc(1));
        return out;
    }
    int i = eword.back();
    Word prefix(eword.begin(), eword.end() - 1);

    // single-letter pass: E_i * F_{fword}
    std::map<Mono, RatFunc> base;
    add(base, Mono{fword, std::vector<int>(n, 0), {i}}, RatFunc(1));
    RatFunc bracket_inv =
        RatFunc(1) / (RatFunc::q_power(datum_->sym_d(i)) - RatFunc::q_power(-datum_->sym_d(i)));
    for (size_t p = 0; p < fword.size(); ++p) {
        if (fword[p] != i) continue;
        Word rest(fword.begin(), fword.begin() + p);
        rest.insert(rest.end(), fword.begin() + p + 1, fword.end());
        RootVec sufdeg(n, 0);
        for (size_t t = p + 1; t < fword.size(); ++t) sufdeg[fword[t]] += 1;
        long pairing = datum_->bilin(datum_->simple(i), sufdeg);
        std::vector<int> kplus(n, 0), kminus(n, 0);
        kplus[i] = 1;
        kminus[i] = -1;
        add(base, Mono{rest, kplus, {}}, RatFunc::q_power(-pairing) * bracket_inv);
        add(base, Mono{rest, kminus, {}}, -RatFunc::q_power(pairing) * bracket_inv);
    }

    if (prefix.empty()) return base;
    for (const auto& [m1, c1] : base) {
        std::map<Mono, RatFunc> sub = cross(prefix, m1.fword);
        for (const auto& [m2, c2] : sub) {
            RootVec edeg(n, 0);
            for (int l : m2.eword) edeg[l] += 1;
            RatFunc coeff = c1 * c2 * RatFunc::q_power(-kappa_pairing(m1.kexp, edeg));
            std::vector<int> kexp(n);
            for (int t = 0; t < n; ++t) kexp[t] = m2.kexp[t] + m1.kexp[t];
            Word ew = m2.eword;
            ew.insert(ew.end(), m1.eword.begin(), m1.eword.end());
            add(out, Mono{m2.fword, kexp, ew}, coeff);
        }
    }
    return out;
}

AlgElt UqAlgebra::from_free(const Word& fword, const std::vector<int>& kexp, const Word& eword,
                            const RatFunc& coeff) const {
    AlgElt r;
    if (coeff.is_zero()) return r;
    int n = datum_->rank();
    const DegreeBasis& fb = words_.basis(word_degree(n, fword));
    const DegreeBasis& eb = words_.basis(word_degree(n, eword));
    int fid = fb.word_id(fword), eid = eb.word_id(eword);
    for (const auto& [fpos, fc] : fb.expr[fid]) {
        for (const auto& [epos, ec] : eb.expr[eid]) {
            r.add_term(Mono{fb.words[fb.rep_ids[fpos]], kexp, eb.words[eb.rep_ids[epos]]},
                       coeff * fc * ec);
        }
    }
    return r;
}

AlgElt UqAlgebra::mul(const AlgElt& a, const AlgElt& b) const {
    int n = datum_->rank();
    AlgElt r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::map<Mono, RatFunc> crossed = cross(ma.eword, mb.fword);
            for (const auto& [mc, cc] : crossed) {
                RootVec fdeg(n, 0), edeg(n, 0);
                for (int l : mc.fword) fdeg[l] += 1;
                for (int l : mc.eword) edeg[l] += 1;
                RatFunc coeff = ca * cb * cc;
                coeff *= RatFunc::q_power(-kappa_pairing(ma.kexp, fdeg));
                coeff *= RatFunc::q_power(-kappa_pairing(mb.kexp, edeg));
                if (coeff.is_zero()) continue;
                Word fw = ma.fword;
                fw.insert(fw.end(), mc.fword.begin(), mc.fword.end());
                Word ew = mc.eword;
                ew.insert(ew.end(), mb.eword.begin(), mb.eword.end());
                std::vector<int> kexp(n);
                for (int t = 0; t < n; ++t) kexp[t] = ma.kexp[t] + mc.kexp[t] + mb.kexp[t];
                r += from_free(fw, kexp, ew, coeff);
            }
        }
    }
    return r;
}

AlgElt UqAlgebra::pow(const AlgElt& a, int m) const {
    if (m < 0) throw std::invalid_argument("UqAlgebra::pow: negative exponent");
    AlgElt r = one();
    for (int t = 0; t < m; ++t) r = mul(r, a);
    return r;
}

AlgElt UqAlgebra::commutator(const AlgElt& a, const AlgElt& b) const {
    return mul(a, b) - mul(b, a);
}

AlgElt UqAlgebra::divided_power_E(int i, int m) const {
    return pow(E(i), m) * qfact(m, datum_->sym_d(i)).inv();
}

AlgElt UqAlgebra::divided_power_F(int i, int m) const {
    return pow(F(i), m) * qfact(m, datum_->sym_d(i)).inv();
}

} // namespace uqcas
