#pragma once

#include "uqcas/ratfunc.hpp"

namespace uqcas {

// Quantum integers and friends in the symmetric convention, with base q^d:
//   [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}).
// All results are Laurent polynomials wrapped in RatFunc.

RatFunc qint(long n, long d = 1);
// [n]! ; requires n >= 0.
RatFunc qfact(long n, long d = 1);
// Balanced q-binomial [n choose k]; requires 0 <= k <= n.
RatFunc qbinom(long n, long k, long d = 1);
// {l} = [l]! * (q^d - q^-d)^l ; requires l >= 0.
RatFunc qbrace(long l, long d = 1);

} // namespace uqcas
