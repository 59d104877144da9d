#include "virstag/scalar.hpp"

#include <stdexcept>

namespace virstag {

std::string to_string(const Scalar& s) {
  return std::visit([](const auto& v) { return to_string(v); }, s);
}

bool scalar_is_zero(const Scalar& s) {
  return std::visit([](const auto& v) { return is_zero(v); }, s);
}

namespace {

bool rational_sqrt(const Q& x, Q& out) {
  if (sgn(x) < 0) return false;
  Z n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Z rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = Q(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace

std::pair<Q, Q> t_candidates_from_c(const Q& c) {
  // 6t^2 + (c - 13) t + 6 = 0
  Q b = c - 13;
  Q disc = b * b - 144;
  Q root;
  if (sgn(disc) < 0)
    throw std::domain_error("c = " + to_string(c) + " gives non-real t");
  if (!rational_sqrt(disc, root))
    throw std::domain_error("c = " + to_string(c) + " gives irrational t");
  Q t1 = (-b + root) / 12, t2 = (-b - root) / 12;
  t1.canonicalize();
  t2.canonicalize();
  if (abs(t1) < abs(t2)) std::swap(t1, t2);
  return {t1, t2};
}

Scalar parse_t(const std::string& text) {
  if (text == "t") return RatFunc::t();
  Q t = parse_rational(text);
  if (sgn(t) == 0) throw std::invalid_argument("t must be nonzero");
  return t;
}

}  // namespace virstag
