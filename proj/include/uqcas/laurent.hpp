#pragma once

#include "uqcas/bigrat.hpp"

#include <utility>
#include <vector>

namespace uqcas {

// Laurent polynomial in one variable q with BigRat coefficients.
// Terms are kept sorted by exponent and never store a zero coefficient,
// so structural equality is semantic equality.
class LaurentPoly {
public:
    using Term = std::pair<long, BigRat>;

    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const BigRat& c);
    static LaurentPoly q_power(long e, const BigRat& c = BigRat(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;

    // Lowest/highest exponent; must not be called on zero.
    long min_exp() const;
    long max_exp() const;

    const std::vector<Term>& terms() const { return terms_; }
    BigRat coeff(long e) const;

    // Multiply by c*q^e in place.
    void scale(const BigRat& c, long e = 0);
    LaurentPoly shifted(long e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Substitute q -> q^-1.
    LaurentPoly bar() const;

    std::string to_string() const;

    // Exact division and gcd on the underlying ordinary polynomials
    // (both arguments shifted so their lowest exponent is 0).  The gcd is
    // returned monic with lowest exponent 0; gcd(0,0) is 0.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
    // Quotient of a by b; throws std::domain_error if b == 0 and
    // std::logic_error if the division is not exact.
    static LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

private:
    std::vector<Term> terms_;
    void add_term(long e, const BigRat& c);
    friend class RatFunc;
};

} // namespace uqcas
