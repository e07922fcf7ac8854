#pragma once

#include <gmpxx.h>
#include <string>

namespace coiso {

/// Exact arbitrary-precision rational. All coefficient arithmetic in this
/// library is exact; nothing is ever rounded.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace coiso
