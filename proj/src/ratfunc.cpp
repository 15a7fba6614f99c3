#include "uqcas/ratfunc.hpp"

#include <stdexcept>

namespace uqcas {

RatFunc RatFunc::q_power(long e, const BigRat& c) {
    RatFunc r;
    r.num_ = LaurentPoly::q_power(e, c);
    return r;
}

RatFunc RatFunc::frac(const LaurentPoly& n, const LaurentPoly& d) {
    if (d.is_zero()) throw std::domain_error("RatFunc: division by zero");
    RatFunc r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (!den_.is_one()) {
        LaurentPoly g = LaurentPoly::gcd(num_, den_);
        if (!g.is_one() || den_.min_exp() != 0) {
            // q-power factors of the denominator migrate into the numerator.
            long dshift = den_.min_exp();
            num_ = LaurentPoly::div_exact(num_, g.shifted(dshift));
            den_ = LaurentPoly::div_exact(den_, g.shifted(dshift));
        }
        BigRat lead = den_.terms().back().second;
        if (lead != 1) {
            BigRat inv = BigRat(1) / lead;
            den_.scale(inv);
            num_.scale(inv);
        }
    }
}

bool RatFunc::is_monomial(long* e, BigRat* c) const {
    if (!den_.is_one() || num_.terms().size() != 1) return false;
    if (e) *e = num_.terms()[0].first;
    if (c) *c = num_.terms()[0].second;
    return true;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    if (!den_.is_one()) normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    if (is_zero()) return *this;
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    RatFunc r = a;
    r += b;
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    RatFunc r = a;
    r -= b;
    return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    RatFunc r = a;
    r *= b;
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    RatFunc r = a;
    r /= b;
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc::frac(den_, num_);
}

RatFunc RatFunc::bar() const {
    if (is_zero()) return RatFunc();
    return RatFunc::frac(num_.bar(), den_.bar());
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace uqcas
