#include "uqcas/qnum.hpp"

#include <stdexcept>

namespace uqcas {

RatFunc qint(long n, long d) {
    if (d == 0) throw std::invalid_argument("qint: d must be nonzero");
    if (n < 0) return -qint(-n, d);
    // [n] = q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}
    LaurentPoly p;
    for (long k = 0; k < n; ++k) p += LaurentPoly::q_power(d * (n - 1 - 2 * k));
    return RatFunc(p);
}

RatFunc qfact(long n, long d) {
    if (n < 0) throw std::invalid_argument("qfact: n must be nonnegative");
    RatFunc r(1);
    for (long k = 2; k <= n; ++k) r *= qint(k, d);
    return r;
}

RatFunc qbinom(long n, long k, long d) {
    if (n < 0) throw std::invalid_argument("qbinom: n must be nonnegative");
    if (k < 0 || k > n) throw std::invalid_argument("qbinom: k out of range");
    // The quotient of factorials is exact, so the result is a Laurent polynomial.
    return qfact(n, d) / (qfact(k, d) * qfact(n - k, d));
}

RatFunc qbrace(long l, long d) {
    if (l < 0) throw std::invalid_argument("qbrace: l must be nonnegative");
    RatFunc bracket = RatFunc(LaurentPoly::q_power(d) - LaurentPoly::q_power(-d));
    RatFunc r = qfact(l, d);
    for (long k = 0; k < l; ++k) r *= bracket;
    return r;
}

} // namespace uqcas
