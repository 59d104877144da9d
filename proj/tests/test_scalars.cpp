#include <doctest.h>

#include "virstag/ratfunc.hpp"
#include "virstag/scalar.hpp"

using namespace virstag;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(parse_rational("6/4") == Q(3, 2));
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(make_q(-4, 6)) == "-2/3");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("central charge and its inverse") {
  CHECK(central_charge(Q(2)) == -2);
  CHECK(central_charge(Q(3, 2)) == 0);
  CHECK(central_charge(Q(1)) == 1);
  CHECK(central_charge(Q(-1)) == 25);
  CHECK(t_candidates_from_c(Q(0)) == std::pair<Q, Q>(Q(3, 2), Q(2, 3)));
  CHECK(t_candidates_from_c(Q(-2)) == std::pair<Q, Q>(Q(2), Q(1, 2)));
  CHECK(t_candidates_from_c(Q(1)).first == 1);
  CHECK(t_candidates_from_c(Q(25)).first == -1);
  CHECK_THROWS(t_candidates_from_c(Q(2)));
  for (const Q& c : {Q(-2), Q(0), Q(-25, 2), Q(1, 2)}) {
    auto [a, b] = t_candidates_from_c(c);
    CHECK(central_charge(a) == c);
    CHECK(central_charge(b) == c);
    CHECK(a * b == 1);
  }
}

TEST_CASE("Kac weights") {
  CHECK(kac_weight(1, 1, Q(3, 2)) == 0);
  CHECK(kac_weight(1, 2, Q(3, 2)) == 0);
  CHECK(kac_weight(2, 1, Q(3, 2)) == Q(5, 8));
  CHECK(kac_weight(1, 3, Q(2)) == 0);
  CHECK(kac_weight(3, 1, Q(2)) == 3);
  CHECK(kac_weight(1, 2, Q(1)) == Q(1, 4));
  // swapping r and s inverts t
  CHECK(kac_weight(3, 2, Q(5, 7)) == kac_weight(2, 3, Q(7, 5)));
  CHECK_THROWS_AS(kac_weight(0, 1, Q(1)), std::invalid_argument);
}

TEST_CASE("integer polynomials") {
  Poly a({Z(-1), Z(0), Z(1)});  // t^2 - 1
  Poly b({Z(1), Z(1)});          // t + 1
  CHECK(exact_div(a, b) == Poly({Z(-1), Z(1)}));
  CHECK(gcd(a, b * b) == b);
  CHECK(a.eval(Q(3)) == 8);
  CHECK(rational_roots(Poly({Z(-1), Z(0), Z(4)})) == std::vector<Q>{Q(-1, 2), Q(1, 2)});
  CHECK(root_multiplicity(a * a * b, Q(-1)) == 3);
  CHECK(Poly({Z(6), Z(4)}).content() == 2);
  CHECK(Poly({Z(-6), Z(-4)}).primitive() == Poly({Z(3), Z(2)}));
  CHECK(a.to_string() == "t^2 - 1");
}

TEST_CASE("rational functions are canonical") {
  RatFunc t = RatFunc::t();
  RatFunc f = (t * t - RatFunc(1)) / (t + RatFunc(1));
  CHECK(f == t - RatFunc(1));
  CHECK((RatFunc(1) / t + RatFunc(1) / t) == RatFunc(2) / t);
  CHECK(RatFunc(Q(3, 4)).is_constant());
  CHECK(RatFunc(Q(3, 4)).constant_value() == Q(3, 4));
  CHECK(f.eval(Q(5)) == 4);
  CHECK_THROWS_AS((RatFunc(1) / t).eval(Q(0)), std::domain_error);
  CHECK(central_charge(t).eval(Q(2)) == -2);
  CHECK(kac_weight(2, 1, t).eval(Q(3, 2)) == Q(5, 8));
}

TEST_CASE("factored rendering") {
  RatFunc t = RatFunc::t();
  RatFunc f = RatFunc(4) * (t * t - RatFunc(1));
  CHECK(factored_string(f) == "4(t^2 - 1)");
  RatFunc g = RatFunc(-8) * (t * t - RatFunc(1)) * (t * t - RatFunc(1)) / (t * t * t * t);
  CHECK(factored_string(g) == "-8t^-4(t^2 - 1)^2");
  CHECK(factored_string(RatFunc(2)) == "2");
}

TEST_CASE("scalars parse t symbolically") {
  CHECK(std::holds_alternative<RatFunc>(parse_t("t")));
  CHECK(std::get<Q>(parse_t("3/2")) == Q(3, 2));
  CHECK(to_string(parse_t("3/2")) == "3/2");
}
