#pragma once

#include <gmpxx.h>
#include <string>

namespace uqcas {

// Arbitrary-precision rational. mpq_class keeps values gcd-reduced with a
// positive denominator, which is exactly the canonical form we rely on.
using BigRat = mpq_class;

inline std::string to_string(const BigRat& r) { return r.get_str(); }

} // namespace uqcas
