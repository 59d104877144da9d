#include "virstag/intersection.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "virstag/linalg.hpp"

namespace virstag {

int intersection_dim(int m) {
  if (m < 0) throw std::invalid_argument("negative grade");
  if (m == 0) return 0;
  return partition_count(m - 1) + partition_count(m - 2) - partition_count(m);
}

namespace {

// Commutators of positive modes never produce the central term, so any c will do.
const Algebra<Q>& positive_algebra() {
  static const Algebra<Q> alg{Q(0)};
  return alg;
}

std::vector<IntersectionElement> compute_basis(int m) {
  const Algebra<Q>& alg = positive_algebra();
  int n1 = partition_count(m - 1), n2 = partition_count(m - 2), nm = partition_count(m);
  int ncols = n1 + n2;
  std::vector<Vec<Q>> rows(nm, Vec<Q>(ncols, Q(0)));
  auto fill = [&](int col, const Partition& p, int mode) {
    for (const auto& [mono, c] : alg.right_mul(raising_monomial(p), mode))
      rows[partition_index(monomial_partition(mono))][col] += c;
  };
  for (int i = 0; i < n1; ++i) fill(i, partitions(m - 1)[i], 1);
  for (int j = 0; j < n2; ++j) fill(n1 + j, partitions(m - 2)[j], 2);
  std::vector<IntersectionElement> out;
  for (auto& v : nullspace(rows, ncols)) {
    int lead = 0;
    while (is_zero(v[lead])) ++lead;
    Q inv = 1 / v[lead];
    scale(v, inv);
    IntersectionElement e;
    e.m = m;
    for (int i = 0; i < n1; ++i)
      if (!is_zero(v[i])) e.u1.emplace(raising_monomial(partitions(m - 1)[i]), v[i]);
    for (int j = 0; j < n2; ++j)
      if (!is_zero(v[n1 + j])) e.u2.emplace(raising_monomial(partitions(m - 2)[j]), v[n1 + j]);
    out.push_back(std::move(e));
  }
  if (static_cast<int>(out.size()) != intersection_dim(m))
    throw std::logic_error("intersection dimension mismatch");
  return out;
}

}  // namespace

const std::vector<IntersectionElement>& intersection_basis(int m) {
  if (m < 0) throw std::invalid_argument("negative grade");
  static std::mutex mu;
  static std::map<int, std::vector<IntersectionElement>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto basis = m < 2 ? std::vector<IntersectionElement>{} : compute_basis(m);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(basis)).first->second;
}

}  // namespace virstag
