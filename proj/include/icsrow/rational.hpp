#pragma once

#include <gmpxx.h>

#include <string>

namespace icsrow {

// Exact rational arithmetic; homomesy verdicts are exact equalities, so no
// floating point anywhere near them.
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

// "p/q" with q >= 1, e.g. "3/1", "-5/2".
inline std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace icsrow
