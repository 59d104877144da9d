#pragma once

#include <string>
#include <utility>
#include <variant>

#include "virstag/ratfunc.hpp"
#include "virstag/rational.hpp"

namespace virstag {

// A value that is either an exact rational or an element of Q(t).
using Scalar = std::variant<Q, RatFunc>;

std::string to_string(const Scalar& s);
bool scalar_is_zero(const Scalar& s);

struct KacLabel {
  int r = 0;
  int s = 0;
  friend bool operator==(const KacLabel&, const KacLabel&) = default;
};

// c = 13 - 6(t + 1/t).
template <class K>
K central_charge(const K& t) {
  return K(13) - K(6) * (t + K(1) / t);
}

// h_{r,s} = ((r^2 - 1) t)/4 - (rs - 1)/2 + (s^2 - 1)/(4t).
template <class K>
K kac_weight(int r, int s, const K& t) {
  if (r < 1 || s < 1) throw std::invalid_argument("Kac labels must be positive");
  K four(4);
  return K(static_cast<long>(r) * r - 1) * t / four - K(static_cast<long>(r) * s - 1) / K(2) +
         K(static_cast<long>(s) * s - 1) / (four * t);
}

// The two t with c(t) = c, the one with |t| >= 1 first. Throws when the
// roots are not rational (1 < c < 25 gives complex roots).
std::pair<Q, Q> t_candidates_from_c(const Q& c);

// Parses "3/2" as a rational or "t" as the formal parameter.
Scalar parse_t(const std::string& text);

}  // namespace virstag
