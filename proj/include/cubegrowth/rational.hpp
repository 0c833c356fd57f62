#pragma once

#include <gmpxx.h>

#include <string>

namespace cubegrowth {

// Arbitrary-precision exact rationals; GMP keeps results canonical
// (reduced, positive denominator) under arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" when integral, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

} // namespace cubegrowth
