#pragma once

#include "uqcas/algelt.hpp"

namespace uqcas {

struct TensorMono {
    Mono left, right;
    bool operator==(const TensorMono& o) const { return left == o.left && right == o.right; }
    bool operator<(const TensorMono& o) const {
        if (!(left == o.left)) return left < o.left;
        return right < o.right;
    }
};

class TensorElt {
public:
    TensorElt() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<TensorMono, RatFunc>& terms() const { return terms_; }
    void add_term(const TensorMono& m, const RatFunc& c);
    TensorElt& operator+=(const TensorElt& o);
    TensorElt& operator-=(const TensorElt& o);
    TensorElt operator+(const TensorElt& o) const {
        TensorElt r = *this;
        r += o;
        return r;
    }
    TensorElt operator-() const;
    TensorElt operator*(const RatFunc& c) const;
    bool operator==(const TensorElt& o) const { return terms_ == o.terms_; }

private:
    std::map<TensorMono, RatFunc> terms_;
};

TensorElt tensor(const AlgElt& a, const AlgElt& b);
TensorElt tensor_mul(const UqAlgebra& U, const TensorElt& a, const TensorElt& b);

// Coproduct, counit, antipode for the convention
//   D(E_i) = E_i x 1 + K_i x E_i,   D(F_i) = F_i x K_i^-1 + 1 x F_i,
//   D(K^m) = K^m x K^m,  S(E_i) = -K_i^-1 E_i, S(F_i) = -F_i K_i, S(K^m) = K^-m.
TensorElt coproduct(const UqAlgebra& U, const AlgElt& x);
AlgElt antipode(const UqAlgebra& U, const AlgElt& x);
RatFunc counit(const AlgElt& x);

// Multiply the two tensor legs together: sum c * left * right.
AlgElt collapse_mul(const UqAlgebra& U, const TensorElt& t);
// Apply the antipode to one leg, then collapse; used for the Hopf axiom
// m(S x id)D = eps * 1 and its mirror.
AlgElt collapse_antipode_left(const UqAlgebra& U, const TensorElt& t);
AlgElt collapse_antipode_right(const UqAlgebra& U, const TensorElt& t);

// Group a coproduct by its right-leg monomials: the right coideal membership
// test needs every left factor separately.
std::map<Mono, AlgElt> left_factors_by_right(const TensorElt& t);

// (D x id) and (id x D) composites evaluated on an element, flattened to
// triples for the coassociativity check.
struct TripleMono {
    Mono a, b, c;
    bool operator==(const TripleMono& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const TripleMono& o) const {
        if (!(a == o.a)) return a < o.a;
        if (!(b == o.b)) return b < o.b;
        return c < o.c;
    }
};
std::map<TripleMono, RatFunc> coproduct_left_then(const UqAlgebra& U, const AlgElt& x);
std::map<TripleMono, RatFunc> coproduct_right_then(const UqAlgebra& U, const AlgElt& x);

} // namespace uqcas
