#pragma once

#include <optional>
#include <string>
#include <vector>

#include "virstag/algebra.hpp"
#include "virstag/scalar.hpp"
#include "virstag/verma.hpp"

namespace virstag {

enum class StructureType { Point, Link, Chain, Braid };
std::string to_string(StructureType s);

// One singular vector of a Verma module: grade, sign (-1/+1 in a braid,
// 0 otherwise) and rank (number of prime factors).
struct LatticeEntry {
  int grade = 0;
  int sign = 0;
  int rank = 0;
  friend bool operator==(const LatticeEntry&, const LatticeEntry&) = default;
};

// Proper singular vectors up to max_grade, sorted by grade (the highest
// weight vector itself is not listed).
struct Structure {
  StructureType type = StructureType::Point;
  std::vector<LatticeEntry> entries;
  int max_grade = 0;

  const LatticeEntry* at_grade(int grade) const;
  int first_grade() const { return entries.empty() ? -1 : entries.front().grade; }
};

// Pairs (r, s) with h = h_{r,s}(t) and rs <= bound; t rational.
std::vector<KacLabel> kac_labels(const Q& h, const Q& t, int bound);

// Factors (h - h_{r,s})^{p(n - rs)} of the grade-n Kac determinant, ordered by rs then r.
std::vector<std::pair<KacLabel, int>> kac_determinant_roots(int n);
// prod (h - h_{r,s}(t))^{p(n - rs)}.
Q kac_product(const Q& h, const Q& t, int n);

Structure classify(const Q& h, const Q& t, int max_grade);
// Over Q(t): h is either some h_{r,s}(t) (link) or generic (point).
Structure classify(const RatFunc& h, const RatFunc& t, int max_grade);

template <class K>
struct SingularVector {
  int grade = 0;
  int sign = 0;
  int rank = 0;
  Vec<K> coords;
  AlgebraElement<K> element;
  // X = factors.back() * ... * factors.front(), each prime.
  std::vector<AlgebraElement<K>> factors;
};

// Normalised singular vector of V_h at grade n with its rank and prime
// factors, or nullopt if none exists.
template <class K>
std::optional<SingularVector<K>> find_singular(const K& h, const K& t, int n);

}  // namespace virstag
