#include <doctest.h>

#include "virstag/structure.hpp"
#include "virstag/verma.hpp"

using namespace virstag;

namespace {

Vec<Q> coords(int n, const std::vector<std::pair<Partition, Q>>& terms) {
  Vec<Q> v = Verma<Q>::zero(n);
  for (const auto& [p, q] : terms) v[partition_index(p)] += q;
  return v;
}

}  // namespace

TEST_CASE("Shapovalov form at low grades") {
  const Q h(3, 7), c(-5, 2);
  auto v = verma_module(h, c);
  CHECK(v->gram(0) == std::vector<Vec<Q>>{{Q(1)}});
  CHECK(v->gram(1) == std::vector<Vec<Q>>{{2 * h}});
  // basis L_-1^2, L_-2
  std::vector<Vec<Q>> g2 = {{8 * h * h + 4 * h, 6 * h}, {6 * h, 4 * h + c / 2}};
  CHECK(v->gram(2) == g2);
  CHECK(v->gram(3)[2][2] == 6 * h + 2 * c);  // <L_-3, L_-3>
}

TEST_CASE("Gram determinant over the Kac product is independent of h") {
  for (const Q& t : {Q(2), Q(3, 2), Q(-2)}) {
    const Q c = central_charge(t);
    for (int n = 1; n <= 5; ++n) {
      Q ratio;
      // denominators 7, 11, 13 keep h away from every h_{r,s}
      for (const Q& h : {Q(2, 7), Q(-3, 11), Q(5, 13)}) {
        REQUIRE(!is_zero(kac_product(h, t, n)));
        Q r = determinant(verma_module(h, c)->gram(n)) / kac_product(h, t, n);
        if (h == Q(2, 7))
          ratio = r;
        else
          CHECK(r == ratio);
      }
      CHECK(!is_zero(ratio));
    }
  }
}

TEST_CASE("lowering and raising") {
  auto v = verma_module(Q(1, 2), Q(1));
  Vec<Q> x{Q(1)};
  Vec<Q> l1 = v->lower(1, 0, x);
  CHECK(l1 == Vec<Q>{Q(1)});
  CHECK(v->raise(1, 1, l1) == Vec<Q>{Q(1)});  // L_1 L_-1 x = 2h x
  CHECK(v->raise(2, 2, v->lower(2, 0, x)) == Vec<Q>{Q(4 * Q(1, 2) + Q(1, 2))});
  CHECK(v->apply_lowering({2, 1}, 0, x) == coords(3, {{{2, 1}, 1}}));
  // L_-1 L_-2 x = L_-2 L_-1 x + L_-3 x
  CHECK(v->lower(1, 2, v->lower(2, 0, x)) == coords(3, {{{2, 1}, 1}, {{3}, 1}}));
}

TEST_CASE("singular vectors in closed form") {
  const Q c32 = central_charge(Q(3, 2));
  auto v0 = verma_module(Q(0), c32);
  CHECK(find_singular_coords(*v0, 1) == Vec<Q>{Q(1)});
  CHECK(find_singular_coords(*v0, 2) == coords(2, {{{1, 1}, 1}, {{2}, Q(-2, 3)}}));
  CHECK(!find_singular_coords(*v0, 3).has_value());
  auto v2 = verma_module(Q(2), c32);
  CHECK(find_singular_coords(*v2, 3) == coords(3, {{{1, 1, 1}, 1}, {{2, 1}, -6}, {{3}, 6}}));
  auto v3 = verma_module(Q(3), central_charge(Q(2)));
  CHECK(find_singular_coords(*v3, 3) == coords(3, {{{1, 1, 1}, 1}, {{2, 1}, -8}, {{3}, 12}}));
  auto vq = verma_module(Q(1, 4), Q(1));
  CHECK(find_singular_coords(*vq, 2) == coords(2, {{{1, 1}, 1}, {{2}, -1}}));
  for (int n = 1; n <= 2; ++n) CHECK(is_singular(*v0, n, *find_singular_coords(*v0, n)));
  CHECK(!is_singular(*v0, 2, coords(2, {{{2}, 1}})));
}

TEST_CASE("quotient dimensions") {
  auto v0 = verma_module(Q(0), central_charge(Q(3, 2)));
  HWModule<Q> m(v0, {{2, *find_singular_coords(*v0, 2)}});
  const int want[] = {1, 1, 1, 2, 3, 4};
  for (int n = 0; n <= 5; ++n) CHECK(m.dim(n) == want[n]);
  CHECK(m.is_zero_vector(2, *find_singular_coords(*v0, 2)));
  CHECK(!m.is_zero_vector(2, coords(2, {{{2}, 1}})));
  // the normal form keeps L_-2 and removes L_-1^2
  CHECK(m.normal_form(2, coords(2, {{{1, 1}, 1}})) == coords(2, {{{2}, Q(2, 3)}}));
}

TEST_CASE("elements and coordinates") {
  Vec<Q> v = coords(3, {{{2, 1}, 2}, {{3}, Q(-1, 2)}});
  auto e = element_of(v, 3);
  CHECK(coords_of(e, 3) == v);
  CHECK(element_to_string(e) == "-1/2 L_{-3} + 2 L_{-2}L_{-1}");
}
