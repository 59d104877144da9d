#pragma once

#include <string>

#include "virstag/polynomial.hpp"
#include "virstag/rational.hpp"

namespace virstag {

// Element of Q(t) stored as num/den in Z[t]: coprime, joint content 1,
// positive leading coefficient of den; zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  RatFunc(long v);  // NOLINT: implicit so that K(0), K(1) work generically
  RatFunc(const Q& q);  // NOLINT
  RatFunc(Poly num, Poly den);

  static RatFunc t();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // Only meaningful when is_constant().
  Q constant_value() const;
  int total_degree() const { return std::max(num_.degree(), 0) + den_.degree(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Specialise at t0; throws std::domain_error if the denominator vanishes.
  Q eval(const Q& t0) const;
  std::string to_string() const;

 private:
  void canonicalize();
  Poly num_, den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline std::size_t pivot_cost(const RatFunc& x) {
  return static_cast<std::size_t>(x.total_degree()) * 64 + x.num().coeffs().size();
}
inline std::string to_string(const RatFunc& x) { return x.to_string(); }
inline void add_mul(RatFunc& a, const RatFunc& f, const RatFunc& b) { a += f * b; }

// Factored rendering in the style c t^k (b^2t^2 - a^2)^m ... with leftover factors.
std::string factored_string(const RatFunc& x);

}  // namespace virstag
