#include "uqcas/hopf.hpp"

namespace uqcas {

void TensorElt::add_term(const TensorMono& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TensorElt TensorElt::operator-() const {
    TensorElt r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TensorElt TensorElt::operator*(const RatFunc& c) const {
    TensorElt r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

TensorElt tensor(const AlgElt& a, const AlgElt& b) {
    TensorElt r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(TensorMono{ma, mb}, ca * cb);
    return r;
}

TensorElt tensor_mul(const UqAlgebra& U, const TensorElt& a, const TensorElt& b) {
    TensorElt r;
    for (const auto& [ma, ca] : a.terms()) {
        AlgElt la, ra;
        la.add_term(ma.left, RatFunc(1));
        ra.add_term(ma.right, RatFunc(1));
        for (const auto& [mb, cb] : b.terms()) {
            AlgElt lb, rb;
            lb.add_term(mb.left, RatFunc(1));
            rb.add_term(mb.right, RatFunc(1));
            r += tensor(U.mul(la, lb), U.mul(ra, rb)) * (ca * cb);
        }
    }
    return r;
}

namespace {

TensorElt generator_coproduct_E(const UqAlgebra& U, int i) {
    TensorElt d = tensor(U.E(i), U.one());
    d += tensor(U.Ki(i), U.E(i));
    return d;
}

TensorElt generator_coproduct_F(const UqAlgebra& U, int i) {
    TensorElt d = tensor(U.F(i), U.Ki(i, -1));
    d += tensor(U.one(), U.F(i));
    return d;
}

} // namespace

TensorElt coproduct(const UqAlgebra& U, const AlgElt& x) {
    TensorElt out;
    for (const auto& [m, c] : x.terms()) {
        TensorElt acc = tensor(U.one(), U.one()) * c;
        for (int l : m.fword) acc = tensor_mul(U, acc, generator_coproduct_F(U, l));
        bool ktrivial = true;
        for (int v : m.kexp) ktrivial = ktrivial && v == 0;
        if (!ktrivial) acc = tensor_mul(U, acc, tensor(U.K(m.kexp), U.K(m.kexp)));
        for (int l : m.eword) acc = tensor_mul(U, acc, generator_coproduct_E(U, l));
        out += acc;
    }
    return out;
}

AlgElt antipode(const UqAlgebra& U, const AlgElt& x) {
    AlgElt out;
    for (const auto& [m, c] : x.terms()) {
        // S is an antihomomorphism, so the product of generator images runs in
        // the opposite order; building by left-multiplication, the original
        // leftmost letter is applied first and ends up rightmost.
        AlgElt acc = U.one() * c;
        for (int l : m.fword) {
            AlgElt img = U.mul(U.F(l), U.Ki(l)) * RatFunc(-1);
            acc = U.mul(img, acc);
        }
        std::vector<int> neg = m.kexp;
        for (int& v : neg) v = -v;
        acc = U.mul(U.K(neg), acc);
        for (int l : m.eword) {
            AlgElt img = U.mul(U.Ki(l, -1), U.E(l)) * RatFunc(-1);
            acc = U.mul(img, acc);
        }
        out += acc;
    }
    return out;
}

RatFunc counit(const AlgElt& x) {
    RatFunc r(0);
    for (const auto& [m, c] : x.terms())
        if (m.fword.empty() && m.eword.empty()) r += c;
    return r;
}

AlgElt collapse_mul(const UqAlgebra& U, const TensorElt& t) {
    AlgElt out;
    for (const auto& [m, c] : t.terms()) {
        AlgElt l, r;
        l.add_term(m.left, RatFunc(1));
        r.add_term(m.right, RatFunc(1));
        out += U.mul(l, r) * c;
    }
    return out;
}

AlgElt collapse_antipode_left(const UqAlgebra& U, const TensorElt& t) {
    AlgElt out;
    for (const auto& [m, c] : t.terms()) {
        AlgElt l, r;
        l.add_term(m.left, RatFunc(1));
        r.add_term(m.right, RatFunc(1));
        out += U.mul(antipode(U, l), r) * c;
    }
    return out;
}

AlgElt collapse_antipode_right(const UqAlgebra& U, const TensorElt& t) {
    AlgElt out;
    for (const auto& [m, c] : t.terms()) {
        AlgElt l, r;
        l.add_term(m.left, RatFunc(1));
        r.add_term(m.right, RatFunc(1));
        out += U.mul(l, antipode(U, r)) * c;
    }
    return out;
}

std::map<Mono, AlgElt> left_factors_by_right(const TensorElt& t) {
    std::map<Mono, AlgElt> out;
    for (const auto& [m, c] : t.terms()) out[m.right].add_term(m.left, c);
    return out;
}

std::map<TripleMono, RatFunc> coproduct_left_then(const UqAlgebra& U, const AlgElt& x) {
    std::map<TripleMono, RatFunc> out;
    TensorElt first = coproduct(U, x);
    for (const auto& [m, c] : first.terms()) {
        AlgElt l;
        l.add_term(m.left, RatFunc(1));
        TensorElt second = coproduct(U, l);
        for (const auto& [m2, c2] : second.terms()) {
            RatFunc v = c * c2;
            if (v.is_zero()) continue;
            auto key = TripleMono{m2.left, m2.right, m.right};
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, v);
            else {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::map<TripleMono, RatFunc> coproduct_right_then(const UqAlgebra& U, const AlgElt& x) {
    std::map<TripleMono, RatFunc> out;
    TensorElt first = coproduct(U, x);
    for (const auto& [m, c] : first.terms()) {
        AlgElt r;
        r.add_term(m.right, RatFunc(1));
        TensorElt second = coproduct(U, r);
        for (const auto& [m2, c2] : second.terms()) {
            RatFunc v = c * c2;
            if (v.is_zero()) continue;
            auto key = TripleMono{m.left, m2.left, m2.right};
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, v);
            else {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace uqcas
