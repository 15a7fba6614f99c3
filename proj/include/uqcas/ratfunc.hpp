#pragma once

#include "uqcas/laurent.hpp"

namespace uqcas {

// Element of the rational function field Q(q), stored as a reduced fraction
// of Laurent polynomials.  Canonical form: gcd(num, den) = 1, the denominator
// is an ordinary polynomial with nonzero constant term (lowest exponent 0)
// and is monic in its highest-degree coefficient.  Zero is 0/1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const BigRat& c) : num_(c), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    static RatFunc q_power(long e, const BigRat& c = BigRat(1));
    // n/d; throws std::domain_error when d == 0.
    static RatFunc frac(const LaurentPoly& n, const LaurentPoly& d);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    // True when the value is c*q^e; fills the outputs if non-null.
    bool is_monomial(long* e = nullptr, BigRat* c = nullptr) const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc inv() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Substitute q -> q^-1.
    RatFunc bar() const;

    std::string to_string() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

} // namespace uqcas
