#pragma once

#include "uqcas/wordspace.hpp"

#include <optional>
#include <string>

namespace uqcas {

// Canonical-form monomial F_{w} K^{kappa} E_{v}: the F- and E-words are
// representatives from the degree-component bases, kappa is a full-rank
// integer vector.
struct Mono {
    Word fword;
    std::vector<int> kexp;
    Word eword;

    bool operator<(const Mono& o) const {
        if (fword != o.fword) return fword < o.fword;
        if (kexp != o.kexp) return kexp < o.kexp;
        return eword < o.eword;
    }
    bool operator==(const Mono& o) const {
        return fword == o.fword && kexp == o.kexp && eword == o.eword;
    }
};

// Λ-degree: deg(E_v) - deg(F_w).
RootVec mono_lambda_degree(int rank, const Mono& m);

// Z-degree under deg(E) = 1, deg(K) = 0, deg(F) = -1.
long mono_z_degree(const Mono& m);

class AlgElt {
public:
    AlgElt() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, RatFunc>& terms() const { return terms_; }

    void add_term(const Mono& m, const RatFunc& c);

    AlgElt& operator+=(const AlgElt& o);
    AlgElt& operator-=(const AlgElt& o);
    AlgElt operator+(const AlgElt& o) const;
    AlgElt operator-(const AlgElt& o) const;
    AlgElt operator-() const;
    AlgElt operator*(const RatFunc& c) const;
    AlgElt& operator*=(const RatFunc& c);
    bool operator==(const AlgElt& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgElt& o) const { return !(*this == o); }

    // Common Λ-degree of all monomials, or nullopt (zero counts as homogeneous
    // of any degree and reports nullopt too).
    std::optional<RootVec> lambda_degree(int rank) const;

    // Maximal Z-degree among monomials and the sub-sum at that degree.
    // Throws std::invalid_argument on zero.
    std::pair<long, AlgElt> z_degree_leading() const;

    std::string to_string() const;

private:
    std::map<Mono, RatFunc> terms_;
};

// Arithmetic engine for U_q(g) over a fixed root datum.  Monomial products
// are straightened into the canonical F..K..E order; F- and E-words are
// reduced through the shared Serre-quotient degree bases.
class UqAlgebra {
public:
    explicit UqAlgebra(const RootDatum& datum, int max_height = 12)
        : datum_(&datum), words_(datum, max_height) {}

    const RootDatum& datum() const { return *datum_; }
    const WordSpace& word_space() const { return words_; }

    AlgElt one() const;
    AlgElt E(int i) const;
    AlgElt F(int i) const;
    AlgElt K(const std::vector<int>& mu) const; // K^mu
    AlgElt Ki(int i, int power = 1) const;      // K_i^power
    // K^mu for mu expressed in the root lattice by a positive root index.
    AlgElt K_of_root(int pos_root_index, int sign = 1) const;

    AlgElt mul(const AlgElt& a, const AlgElt& b) const;
    AlgElt pow(const AlgElt& a, int m) const;
    AlgElt commutator(const AlgElt& a, const AlgElt& b) const; // ab - ba

    // Canonicalize coeff * F_{fword} K^{kappa} E_{eword} with free words.
    AlgElt from_free(const Word& fword, const std::vector<int>& kexp, const Word& eword,
                     const RatFunc& coeff) const;

    AlgElt divided_power_E(int i, int m) const; // E_i^m / [m]_{q_i}!
    AlgElt divided_power_F(int i, int m) const;

    RatFunc q_power(long e) const { return RatFunc::q_power(e); }
    // (kappa, nu) under the symmetrized bilinear form, kappa in Z^n.
    long kappa_pairing(const std::vector<int>& kappa, const RootVec& nu) const;

private:
    const RootDatum* datum_;
    mutable WordSpace words_;

    std::map<Mono, RatFunc> cross(const Word& eword, const Word& fword) const;
};

} // namespace uqcas
