#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "virstag/algebra.hpp"
#include "virstag/linalg.hpp"
#include "virstag/partitions.hpp"

namespace virstag {

// Verma module with highest weight h and central charge c. Vectors at grade
// n are coordinate vectors over partitions(n), index i standing for
// L_{-p1}...L_{-pk} v with p the i-th partition. Vectors at negative grade
// are empty.
template <class K>
class Verma {
 public:
  Verma(K h, K c) : h_(std::move(h)), c_(std::move(c)) {}

  const K& h() const { return h_; }
  const K& c() const { return c_; }
  static int dim(int n) { return partition_count(n); }

  // Columns of L_a (a > 0) from grade n to grade n - a, and of L_{-k} from n to n + k.
  const std::vector<SparseVec<K>>& raise_cols(int a, int n) const;
  const std::vector<SparseVec<K>>& lower_cols(int k, int n) const;

  Vec<K> raise(int a, int n, const Vec<K>& v) const;
  Vec<K> lower(int k, int n, const Vec<K>& v) const;
  // L_{-p1} ... L_{-pk} applied to v at grade n.
  Vec<K> apply_lowering(const Partition& p, int n, const Vec<K>& v) const;
  // Homogeneous element applied to v at grade n; L_0 acts as h + grade.
  Vec<K> apply(const AlgebraElement<K>& e, int n, const Vec<K>& v) const;

  // Shapovalov form, normalised by <v, v> = 1.
  const std::vector<Vec<K>>& gram(int n) const;

  static Vec<K> basis_vector(int n, int idx) {
    Vec<K> v(dim(n), K(0));
    v[idx] = K(1);
    return v;
  }
  static Vec<K> zero(int n) { return n < 0 ? Vec<K>{} : Vec<K>(dim(n), K(0)); }

 private:
  SparseVec<K> compute_raise(int a, int n, int j) const;
  SparseVec<K> compute_lower(int k, int n, int j) const;
  void lower_into(int k, int n, const SparseVec<K>& w, const K& f, Vec<K>& out) const;

  K h_, c_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::vector<SparseVec<K>>> raise_memo_, lower_memo_;
  mutable std::map<int, std::vector<Vec<K>>> gram_memo_;
};

// Shared instances keyed by (h, c).
template <class K>
std::shared_ptr<const Verma<K>> verma_module(const K& h, const K& c);

template <class K>
const Algebra<K>& algebra_for(const K& c);

template <class K>
Vec<K> coords_of(const AlgebraElement<K>& e, int n);
template <class K>
AlgebraElement<K> element_of(const Vec<K>& coords, int n);

// Normalised singular vector at grade n (coordinate of L_{-1}^n set to 1),
// or nullopt if there is none. n = 0 gives the highest-weight vector.
template <class K>
std::optional<Vec<K>> find_singular_coords(const Verma<K>& v, int n);

// True when L_1 and L_2 annihilate the vector.
template <class K>
bool is_singular(const Verma<K>& v, int n, const Vec<K>& x);

// Quotient of a Verma module by the submodule generated by the given
// vectors (grade, coordinates); no checks on the generators. Normal forms
// eliminate the columns with most parts equal to 1 first.
template <class K>
class HWModule {
 public:
  HWModule(std::shared_ptr<const Verma<K>> verma, std::vector<std::pair<int, Vec<K>>> gens)
      : verma_(std::move(verma)), gens_(std::move(gens)) {}

  const Verma<K>& verma() const { return *verma_; }
  std::shared_ptr<const Verma<K>> verma_ptr() const { return verma_; }
  const std::vector<std::pair<int, Vec<K>>>& generators() const { return gens_; }

  const Subspace<K>& submodule(int n) const;
  int dim(int n) const { return Verma<K>::dim(n) - submodule(n).dim(); }
  void reduce(int n, Vec<K>& v) const { submodule(n).reduce(v); }
  Vec<K> normal_form(int n, Vec<K> v) const {
    reduce(n, v);
    return v;
  }
  bool is_zero_vector(int n, const Vec<K>& v) const { return n < 0 || submodule(n).contains(v); }
  std::vector<int> quotient_basis(int n) const { return submodule(n).non_pivots(); }

 private:
  std::shared_ptr<const Verma<K>> verma_;
  std::vector<std::pair<int, Vec<K>>> gens_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<Subspace<K>>> spaces_;
};

// Ratio a/b for a vector a proportional to b (after reduction in the
// quotient); throws std::logic_error if they are not proportional.
template <class K>
K proportionality(const HWModule<K>& m, int n, const Vec<K>& a, const Vec<K>& b);

}  // namespace virstag
