#include <doctest.h>

#include <algorithm>

#include "virstag/structure.hpp"

using namespace virstag;

namespace {

std::vector<LatticeEntry> entries(const Q& h, const Q& t, int max_grade) {
  return classify(h, t, max_grade).entries;
}

}  // namespace

TEST_CASE("braid lattice at c = 0") {
  Structure s = classify(Q(0), Q(3, 2), 15);
  CHECK(s.type == StructureType::Braid);
  std::vector<LatticeEntry> want = {{1, -1, 1}, {2, 1, 1}, {5, -1, 2}, {7, 1, 2}, {12, -1, 3}, {15, 1, 3}};
  CHECK(s.entries == want);
  CHECK(s.first_grade() == 1);
  REQUIRE(s.at_grade(7) != nullptr);
  CHECK(s.at_grade(7)->rank == 2);
  CHECK(s.at_grade(6) == nullptr);
}

TEST_CASE("chain lattice at c = -2") {
  Structure s = classify(Q(0), Q(2), 10);
  CHECK(s.type == StructureType::Chain);
  std::vector<LatticeEntry> want = {{1, 0, 1}, {3, 0, 2}, {6, 0, 3}, {10, 0, 4}};
  CHECK(s.entries == want);
}

TEST_CASE("point and link types") {
  CHECK(classify(Q(2, 7), Q(3, 2), 8).type == StructureType::Point);
  CHECK(classify(Q(2, 7), Q(3, 2), 8).entries.empty());
  CHECK(classify(Q(1, 3), Q(3, 2), 8).first_grade() == 3);  // h_{1,3}
  RatFunc t = RatFunc::t();
  Structure link = classify(kac_weight(2, 1, t), t, 6);
  CHECK(link.type == StructureType::Link);
  REQUIRE(link.entries.size() == 1);
  CHECK(link.entries[0].grade == 2);
  CHECK(classify(RatFunc(Q(2, 7)), t, 6).type == StructureType::Point);
  Structure one = classify(Q(1, 4), Q(1), 6);
  CHECK(one.type == StructureType::Chain);
  CHECK(one.first_grade() == 2);
}

TEST_CASE("Kac labels") {
  auto labels = kac_labels(Q(0), Q(3, 2), 2);
  CHECK(std::find(labels.begin(), labels.end(), KacLabel{1, 1}) != labels.end());
  CHECK(std::find(labels.begin(), labels.end(), KacLabel{1, 2}) != labels.end());
  CHECK(kac_labels(Q(2, 7), Q(3, 2), 12).empty());
  CHECK(kac_labels(Q(1, 3), Q(3, 2), 3) == std::vector<KacLabel>{{1, 3}});
}

TEST_CASE("Kac determinant factors") {
  auto roots = kac_determinant_roots(3);
  // rs = 1: p(2) = 2; rs = 2: p(1) = 1 twice; rs = 3: p(0) = 1 twice
  REQUIRE(roots.size() == 5);
  CHECK(roots[0] == std::pair<KacLabel, int>{{1, 1}, 2});
  CHECK(roots[1] == std::pair<KacLabel, int>{{1, 2}, 1});
  CHECK(roots[2] == std::pair<KacLabel, int>{{2, 1}, 1});
  CHECK(kac_product(Q(0), Q(2), 1) == 0);
  CHECK(kac_product(Q(1, 3), Q(3, 2), 2) != 0);
}

TEST_CASE("reported grades carry singular vectors and others do not") {
  for (const auto& [h, t] : {std::pair{Q(0), Q(3, 2)}, std::pair{Q(0), Q(2)}, std::pair{Q(1, 4), Q(1)},
                             std::pair{Q(1), Q(3, 2)}}) {
    auto es = entries(h, t, 8);
    for (int n = 1; n <= 8; ++n) {
      bool listed = std::any_of(es.begin(), es.end(), [&](const LatticeEntry& e) { return e.grade == n; });
      CHECK(find_singular(h, t, n).has_value() == listed);
    }
  }
}

TEST_CASE("ranks and prime factors") {
  auto x = find_singular(Q(0), Q(2), 3);
  REQUIRE(x.has_value());
  CHECK(x->rank == 2);
  CHECK(element_to_string(x->element) == "-2 L_{-2}L_{-1} + L_{-1}^3");
  REQUIRE(x->factors.size() == 2);
  CHECK(element_to_string(x->factors[0]) == "L_{-1}");
  CHECK(element_to_string(x->factors[1]) == "-2 L_{-2} + L_{-1}^2");
  auto w = find_singular(Q(0), Q(3, 2), 5);
  REQUIRE(w.has_value());
  CHECK(w->rank == 2);
  CHECK(w->sign == -1);
  CHECK(!find_singular(Q(0), Q(3, 2), 3).has_value());
}
