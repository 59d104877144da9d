#include <doctest.h>

#include "virstag/algebra.hpp"

using namespace virstag;

namespace {

AlgebraElement<Q> mono(const Monomial& m, const Q& c = 1) { return {{m, c}}; }

}  // namespace

TEST_CASE("commutators from normal ordering") {
  Algebra<Q> alg(Q(-2));
  // L_1 L_-1 = L_-1 L_1 + 2 L_0
  AlgebraElement<Q> want = mono({{-1, 1}, {1, 1}});
  add_term(want, {{0, 1}}, Q(2));
  CHECK(alg.normal_order({1, -1}) == want);
  // L_2 L_-2 = L_-2 L_2 + 4 L_0 + c/2
  want = mono({{-2, 1}, {2, 1}});
  add_term(want, {{0, 1}}, Q(4));
  add_term(want, {}, Q(-1));
  CHECK(alg.normal_order({2, -2}) == want);
  // [L_3, L_-3] carries c (27 - 3)/12 = 2c
  auto e = alg.normal_order({3, -3});
  CHECK(e.at({}) == Q(-4));
  CHECK(e.at({{0, 1}}) == Q(6));
  // L_2 L_1 = L_1 L_2 + L_3
  want = mono({{1, 1}, {2, 1}});
  add_term(want, {{3, 1}}, Q(1));
  CHECK(alg.normal_order({2, 1}) == want);
  CHECK(alg.normal_order({-1, -1, 2}) == mono({{-1, 2}, {2, 1}}));
}

TEST_CASE("PBW bases follow partition order") {
  auto b = negative_basis(4);
  REQUIRE(b.size() == 5);
  CHECK(b[0] == Monomial{{-1, 4}});
  CHECK(b[1] == Monomial{{-2, 1}, {-1, 2}});
  CHECK(b[4] == Monomial{{-4, 1}});
  CHECK(negative_basis(0).size() == 1);
  for (int n = 0; n <= 8; ++n) {
    auto basis = negative_basis(n);
    CHECK(static_cast<int>(basis.size()) == partition_count(n));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(monomial_grade(basis[i]) == n);
      CHECK(lowering_monomial(partitions(n)[i]) == basis[i]);
      CHECK(monomial_partition(basis[i]) == partitions(n)[i]);
    }
  }
  CHECK(raising_monomial({2, 1, 1}) == Monomial{{1, 2}, {2, 1}});
  CHECK(monomial_to_string({{-2, 1}, {-1, 2}}) == "L_{-2}L_{-1}^2");
}

TEST_CASE("adjoint is an anti-involution") {
  Algebra<Q> alg(Q(1, 2));
  AlgebraElement<Q> a = mono({{-2, 1}, {1, 1}}, Q(3));
  add_term(a, {{-1, 2}}, Q(-1, 2));
  AlgebraElement<Q> b = mono({{2, 1}}, Q(5));
  add_term(b, {{-3, 1}, {1, 2}}, Q(2));
  CHECK(adjoint(adjoint(a)) == a);
  CHECK(adjoint(alg.multiply(a, b)) == alg.multiply(adjoint(b), adjoint(a)));
}

TEST_CASE("decomposition against L1 and L2") {
  Algebra<Q> alg(Q(0));
  // L_3 = [L_2, L_1] = L_2 L_1 - L_1 L_2 rewritten as U1 L1 + U2 L2
  AlgebraElement<Q> u = mono({{3, 1}});
  auto [u1, u2] = alg.decompose_against_L1L2(u);
  AlgebraElement<Q> back = alg.right_mul(u1, 1);
  add_scaled(back, alg.right_mul(u2, 2), Q(1));
  CHECK(back == u);
}

TEST_CASE("element rendering") {
  AlgebraElement<Q> e;
  add_term(e, {{-2, 1}}, Q(-2, 3));
  add_term(e, {{-1, 2}}, Q(1));
  CHECK(element_to_string(e) == "-2/3 L_{-2} + L_{-1}^2");
  CHECK(element_to_string(AlgebraElement<Q>{}) == "0");
}
