#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace virstag {

using Q = mpq_class;
using Z = mpz_class;

Q make_q(long num, long den = 1);
Q parse_rational(const std::string& s);
std::string to_string(const Q& x);

inline bool is_zero(const Q& x) { return sgn(x) == 0; }

// Bit size of numerator plus denominator; cheaper pivots keep entries small.
inline std::size_t pivot_cost(const Q& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

// a += f * b, without allocating a temporary per call.
void add_mul(Q& a, const Q& f, const Q& b);

}  // namespace virstag
