#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "virstag/partitions.hpp"
#include "virstag/ratfunc.hpp"
#include "virstag/rational.hpp"

namespace virstag {

// PBW monomial L_{m1}^{e1} ... L_{mk}^{ek} with m1 < ... < mk and all e > 0.
using Monomial = std::vector<std::pair<int, int>>;

template <class K>
using AlgebraElement = std::map<Monomial, K>;

int monomial_grade(const Monomial& m);  // sum of -mode*exp, so L_{-n} has grade n
std::vector<int> monomial_word(const Monomial& m);
Monomial monomial_from_word_sorted(const std::vector<int>& modes_ascending);
// L_{-p1}...L_{-pk} for a partition with descending parts.
Monomial lowering_monomial(const Partition& p);
// L_{p_k}...L_{p_1}: the adjoint of lowering_monomial(p).
Monomial raising_monomial(const Partition& p);
// Inverse of the two maps above; throws when modes are mixed.
Partition monomial_partition(const Monomial& m);
// PBW monomials of U^- at grade n, in the order of partitions(n) (L_{-1}^n first).
std::vector<Monomial> negative_basis(int n);

std::string monomial_to_string(const Monomial& m);

template <class K>
std::string element_to_string(const AlgebraElement<K>& e);

template <class K>
void add_term(AlgebraElement<K>& e, const Monomial& m, const K& c) {
  if (is_zero(c)) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, c);
    return;
  }
  it->second += c;
  if (is_zero(it->second)) e.erase(it);
}

template <class K>
void add_scaled(AlgebraElement<K>& e, const AlgebraElement<K>& f, const K& c) {
  for (const auto& [m, x] : f) add_term(e, m, K(x * c));
}

template <class K>
AlgebraElement<K> scaled(const AlgebraElement<K>& f, const K& c) {
  AlgebraElement<K> e;
  add_scaled(e, f, c);
  return e;
}

// Anti-involution L_n -> L_{-n}; maps PBW monomials to PBW monomials.
template <class K>
AlgebraElement<K> adjoint(const AlgebraElement<K>& e) {
  AlgebraElement<K> out;
  for (const auto& [m, c] : e) {
    Monomial a;
    for (auto it = m.rbegin(); it != m.rend(); ++it) a.emplace_back(-it->first, it->second);
    out.emplace(std::move(a), c);
  }
  return out;
}

// Universal enveloping algebra of the Virasoro algebra with the central
// element acting as the scalar c. Products are returned in PBW order.
template <class K>
class Algebra {
 public:
  explicit Algebra(K c) : c_(std::move(c)) {}
  const K& c() const { return c_; }

  // m * L_n in PBW order.
  AlgebraElement<K> right_mul(const Monomial& m, int n) const;
  AlgebraElement<K> right_mul(const AlgebraElement<K>& e, int n) const;
  AlgebraElement<K> normal_order(const std::vector<int>& word) const;
  AlgebraElement<K> multiply(const AlgebraElement<K>& a, const AlgebraElement<K>& b) const;

  // Writes m * L_a as U1 L1 + U2 L2 using L_{n+1} = [L_n, L_1]/(n-1).
  std::pair<AlgebraElement<K>, AlgebraElement<K>> decompose_prefix(const Monomial& m, int a) const;
  // u must be a combination of PBW monomials ending in a positive mode.
  std::pair<AlgebraElement<K>, AlgebraElement<K>> decompose_against_L1L2(const AlgebraElement<K>& u) const;

 private:
  K c_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Monomial, int>, AlgebraElement<K>> right_memo_;
  mutable std::map<std::pair<Monomial, int>, std::pair<AlgebraElement<K>, AlgebraElement<K>>> decomp_memo_;
};

extern template class Algebra<Q>;
extern template class Algebra<RatFunc>;

}  // namespace virstag
