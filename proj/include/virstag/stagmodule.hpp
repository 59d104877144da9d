#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "virstag/linalg.hpp"
#include "virstag/verma.hpp"

namespace virstag {

// A vector of grade n (relative to the left highest weight): a left part in
// the left Verma at grade n and a right part, coefficients of B y with B of
// grade n - ell. Negative-grade parts are empty.
template <class K>
struct StagVec {
  int grade = 0;
  Vec<K> left;
  Vec<K> right;
};

// The extension of a left Verma module by a right Verma module determined
// by L_0 y = h y + omega0, L_1 y = omega1, L_2 y = omega2. Everything is
// computed in left Verma coordinates; quotients of the left module are taken
// by the caller, which is valid because the projection is a module map.
// Not thread-safe (memoised).
template <class K>
class StagModule {
 public:
  StagModule(std::shared_ptr<const Verma<K>> left, std::shared_ptr<const Verma<K>> right, int ell,
             Vec<K> omega0, Vec<K> omega1, Vec<K> omega2);

  int ell() const { return ell_; }
  const Verma<K>& left() const { return *left_; }
  const Verma<K>& right() const { return *right_; }

  StagVec<K> zero(int grade) const;
  // X y for X given by coordinates at right grade g.
  StagVec<K> from_right(int g, const Vec<K>& coords) const;
  StagVec<K> y() const { return from_right(0, Vec<K>{K(1)}); }

  StagVec<K> raise(int a, const StagVec<K>& v);
  StagVec<K> lower(int k, const StagVec<K>& v);
  void add_left(StagVec<K>& v, const K& f, const Vec<K>& left) const;

  // B^dagger v for the given partitions B of d (one result per index).
  std::vector<StagVec<K>> adjoint_images(const std::vector<int>& indices, int d, const StagVec<K>& v);
  // (sum_B coeffs[B] B)^dagger v.
  StagVec<K> apply_adjoint(const Vec<K>& coeffs, int d, const StagVec<K>& v);

 private:
  const Vec<K>& R(int m, int g, int j);
  const Vec<K>& mono_omega0(int g, int j);

  std::shared_ptr<const Verma<K>> left_, right_;
  int ell_;
  Vec<K> omega0_, omega1_, omega2_;
  std::map<std::tuple<int, int, int>, Vec<K>> r_memo_;
  std::map<std::pair<int, int>, Vec<K>> omega0_memo_;
};

}  // namespace virstag
