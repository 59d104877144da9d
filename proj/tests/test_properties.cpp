#include <doctest.h>

#include <random>

#include "virstag/algebra.hpp"
#include "virstag/staggered.hpp"

using namespace virstag;

namespace {

struct Instance {
  const char* name;
  StaggeredProblem p;
};

// One instance per case tag, cheap enough for repeated sampling.
std::vector<Instance> instances() {
  return {
      {"0", {Q(2), {Q(0), {1}}, {Q(0), {3}}}},
      {"1", {Q(2), {Q(0), {3}}, {Q(1), {5}}}},
      {"1 critical", {Q(3, 2), {Q(0), {2}}, {Q(1), {4}}}},
      {"1 chain", {Q(2), {Q(0), {3}}, {Q(1), {2}}}},
      {"1'", {Q(3, 2), {Q(0), {}}, {Q(2), {}}}},
      {"1' critical", {Q(3, 2), {Q(0), {7}}, {Q(2), {5}}}},
      {"2", {Q(3, 2), {Q(0), {}}, {Q(5), {}}}},
      {"2'", {Q(3, 2), {Q(0), {}}, {Q(7), {}}}},
  };
}

Q random_q(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  Q q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Vec<Q> random_vec(std::mt19937& rng, std::size_t n) {
  Vec<Q> v(n);
  for (auto& x : v) x = random_q(rng);
  return v;
}

// Admissible data with the given invariants, moved by a random gauge.
DataPair sample_data(const Staggered& s, std::mt19937& rng, const std::vector<Q>& beta) {
  DataPair d = s.ell() > 0 ? s.data_from_beta(beta) : s.zero_data();
  return s.gauge_apply(random_vec(rng, Verma<Q>::zero(s.ell()).size()), d);
}

AlgebraElement<Q> random_element(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> mode(-3, 3), len(1, 3);
  AlgebraElement<Q> e;
  Algebra<Q> scratch(Q(0));
  for (int i = 0; i < terms; ++i) {
    std::vector<int> word(len(rng));
    for (auto& m : word) m = mode(rng);
    std::sort(word.begin(), word.end());
    add_term(e, monomial_from_word_sorted(word), random_q(rng));
  }
  return e;
}

}  // namespace

TEST_CASE("beta-invariants are gauge invariant") {
  std::mt19937 rng(20240611);
  for (const auto& inst : instances()) {
    CAPTURE(inst.name);
    Staggered s(inst.p);
    for (int k = 0; k < 20; ++k) {
      std::vector<Q> beta(s.b());
      for (auto& x : beta) x = random_q(rng);
      DataPair d = sample_data(s, rng, beta);
      DataPair moved = s.gauge_apply(random_vec(rng, Verma<Q>::zero(s.ell()).size()), d);
      CHECK(s.is_admissible(moved));
      if (s.ell() == 0) continue;
      CHECK(s.beta_invariants(moved) == s.beta_invariants(d));
    }
  }
}

TEST_CASE("data_from_beta and beta_invariants round trip") {
  std::mt19937 rng(77);
  for (const auto& inst : instances()) {
    CAPTURE(inst.name);
    Staggered s(inst.p);
    if (s.ell() == 0) continue;
    for (int k = 0; k < 10; ++k) {
      std::vector<Q> beta(s.b());
      for (auto& x : beta) x = random_q(rng);
      DataPair d = s.data_from_beta(beta);
      CHECK(s.is_admissible(d));
      CHECK(s.beta_invariants(d) == beta);
    }
  }
}

TEST_CASE("existence agrees with the singular-vector oracle") {
  std::mt19937 rng(5);
  for (const auto& inst : instances()) {
    CAPTURE(inst.name);
    Staggered s(inst.p);
    if (s.n() == 0) continue;
    auto a = s.exists();
    auto region = s.oracle_region();
    CHECK(same_region(a.constraints, region.constraints, s.b()));
    // a random point of the region carries a singular vector
    if (a.exists && s.b() > 0) {
      std::vector<Q> inside = a.point;
      for (const auto& dir : a.directions) {
        Q f = random_q(rng);
        for (std::size_t i = 0; i < inside.size(); ++i) inside[i] += f * dir[i];
      }
      CHECK(s.oracle_singular(inside).has_value());
    }
  }
}

TEST_CASE("algebra laws on random elements") {
  std::mt19937 rng(99);
  for (int k = 0; k < 15; ++k) {
    Algebra<Q> alg(random_q(rng));
    auto a = random_element(rng, 3), b = random_element(rng, 3), c = random_element(rng, 2);
    CHECK(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)));
    CHECK(adjoint(alg.multiply(a, b)) == alg.multiply(adjoint(b), adjoint(a)));
    CHECK(adjoint(adjoint(a)) == a);
    AlgebraElement<Q> sum = a;
    add_scaled(sum, b, Q(1));
    AlgebraElement<Q> lhs = alg.multiply(sum, c), rhs = alg.multiply(a, c);
    add_scaled(rhs, alg.multiply(b, c), Q(1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("commutation relations through normal ordering") {
  Algebra<Q> alg(Q(-2));
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      // [L_m, L_n] = (m - n) L_{m+n} + c/12 (m^3 - m) delta
      AlgebraElement<Q> comm = alg.normal_order({m, n});
      add_scaled(comm, alg.normal_order({n, m}), Q(-1));
      AlgebraElement<Q> want;
      if (m != n) add_term(want, {{m + n, 1}}, Q(m - n));
      if (m + n == 0) add_term(want, {}, Q(Q(-2) * make_q(m * m * m - m, 12)));
      CHECK(comm == want);
    }
}
