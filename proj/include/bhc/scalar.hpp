#ifndef BHC_SCALAR_HPP
#define BHC_SCALAR_HPP

#include <gmpxx.h>
#include <string>

namespace bhc {

// Exact rational scalar. GMP keeps values in canonical reduced form
// (gcd(num, den) = 1, den > 0) after every arithmetic operation.
using Scalar = mpq_class;

inline Scalar scalar(long num, long den = 1)
{
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

// Renders "p" or "p/q"; GMP already guarantees q > 0.
inline std::string to_string(const Scalar& q) { return q.get_str(); }

} // namespace bhc

#endif
