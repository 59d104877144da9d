#pragma once

#include <string>
#include <vector>

#include "virstag/rational.hpp"

namespace virstag {

// Polynomial in t with integer coefficients, ascending powers, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Z> coeffs);
  static Poly constant(const Z& c);
  static Poly monomial(const Z& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Z>& coeffs() const { return c_; }
  const Z& coeff(int i) const;
  const Z& lead() const { return c_.back(); }

  Z content() const;  // nonnegative gcd of coefficients
  Poly primitive() const;  // divided by content, leading coefficient positive

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Z& s) const;
  Poly divided_exact(const Z& s) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Q eval(const Q& t) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Z> c_;
};

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
Poly pseudo_rem(const Poly& a, const Poly& b);
// Exact quotient a / b; requires b | a in Z[t] (b primitive suffices when a is integral).
Poly exact_div(const Poly& a, const Poly& b);
// Primitive gcd with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

// Rational roots of p (distinct), found from the rational-root theorem.
std::vector<Q> rational_roots(const Poly& p);
// Multiplicity of the root r = num/den in p.
int root_multiplicity(const Poly& p, const Q& r);

}  // namespace virstag
