#include "virstag/stagmodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace virstag {

template <class K>
StagModule<K>::StagModule(std::shared_ptr<const Verma<K>> left, std::shared_ptr<const Verma<K>> right, int ell,
                          Vec<K> omega0, Vec<K> omega1, Vec<K> omega2)
    : left_(std::move(left)),
      right_(std::move(right)),
      ell_(ell),
      omega0_(std::move(omega0)),
      omega1_(std::move(omega1)),
      omega2_(std::move(omega2)) {
  if (static_cast<int>(omega0_.size()) != Verma<K>::dim(ell) ||
      static_cast<int>(omega1_.size()) != std::max(0, Verma<K>::dim(ell - 1)) ||
      static_cast<int>(omega2_.size()) != std::max(0, Verma<K>::dim(ell - 2)))
    throw std::invalid_argument("data vectors have the wrong dimensions");
}

template <class K>
StagVec<K> StagModule<K>::zero(int grade) const {
  return {grade, Verma<K>::zero(grade), Verma<K>::zero(grade - ell_)};
}

template <class K>
StagVec<K> StagModule<K>::from_right(int g, const Vec<K>& coords) const {
  StagVec<K> v = zero(ell_ + g);
  v.right = coords;
  return v;
}

template <class K>
void StagModule<K>::add_left(StagVec<K>& v, const K& f, const Vec<K>& left) const {
  axpy(v.left, f, left);
}

// Left part of L_m (B_j y), B_j the j-th partition of g.
template <class K>
const Vec<K>& StagModule<K>::R(int m, int g, int j) {
  auto key = std::make_tuple(m, g, j);
  auto it = r_memo_.find(key);
  if (it != r_memo_.end()) return it->second;
  int tg = ell_ + g - m;
  Vec<K> out = Verma<K>::zero(tg);
  if (tg >= 0) {
    if (g == 0) {
      if (m == 1) {
        out = omega1_;
      } else if (m == 2) {
        out = omega2_;
      } else {
        // L_m y = (L_{m-1} omega1 - L_1 L_{m-1} y) / (m - 2)
        out = left_->raise(m - 1, ell_ - 1, omega1_);
        Vec<K> prev = R(m - 1, 0, 0);
        axpy(out, K(-1), left_->raise(1, tg + 1, prev));
        scale(out, K(K(1) / K(m - 2)));
      }
    } else {
      const Partition& p = partitions(g)[j];
      int b = p[0];
      Partition rest(p.begin() + 1, p.end());
      int r = partition_index(rest);
      // L_m L_{-b} R = L_{-b} L_m R + (m + b) L_{m-b} R + central term (right part only)
      if (tg - b >= 0) {
        Vec<K> inner = R(m, g - b, r);
        axpy(out, K(1), left_->lower(b, tg - b, inner));
      }
      if (m > b) {
        axpy(out, K(m + b), R(m - b, g - b, r));
      } else if (m == b) {
        axpy(out, K(m + b), mono_omega0(g - b, r));
      }
    }
  }
  return r_memo_.emplace(key, std::move(out)).first->second;
}

template <class K>
const Vec<K>& StagModule<K>::mono_omega0(int g, int j) {
  auto key = std::make_pair(g, j);
  auto it = omega0_memo_.find(key);
  if (it != omega0_memo_.end()) return it->second;
  Vec<K> out;
  if (g == 0) {
    out = omega0_;
  } else {
    const Partition& p = partitions(g)[j];
    int b = p[0];
    Partition rest(p.begin() + 1, p.end());
    Vec<K> inner = mono_omega0(g - b, partition_index(rest));
    out = left_->lower(b, ell_ + g - b, inner);
  }
  return omega0_memo_.emplace(key, std::move(out)).first->second;
}

template <class K>
StagVec<K> StagModule<K>::raise(int a, const StagVec<K>& v) {
  int n = v.grade, ng = n - a;
  if (ng < 0) return zero(ng);
  StagVec<K> out;
  out.grade = ng;
  out.left = v.left.empty() ? Verma<K>::zero(ng) : left_->raise(a, n, v.left);
  int rg = n - ell_;
  if (rg >= 0) {
    for (int j = 0; j < static_cast<int>(v.right.size()); ++j)
      if (!is_zero(v.right[j])) axpy(out.left, v.right[j], R(a, rg, j));
    out.right = rg - a >= 0 ? right_->raise(a, rg, v.right) : Vec<K>{};
  } else {
    out.right = Vec<K>{};
  }
  return out;
}

template <class K>
StagVec<K> StagModule<K>::lower(int k, const StagVec<K>& v) {
  int n = v.grade;
  StagVec<K> out;
  out.grade = n + k;
  out.left = left_->lower(k, n, v.left);
  out.right = n - ell_ >= 0 ? right_->lower(k, n - ell_, v.right) : Verma<K>::zero(n + k - ell_);
  return out;
}

template <class K>
std::vector<StagVec<K>> StagModule<K>::adjoint_images(const std::vector<int>& indices, int d,
                                                      const StagVec<K>& v) {
  std::vector<int> order(indices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return indices[a] < indices[b]; });
  const auto& parts = partitions(d);
  std::vector<StagVec<K>> out(indices.size());
  // stack[k] = L_{p_k} ... L_{p_1} v for the current prefix p_1 .. p_k
  std::vector<int> prefix;
  std::vector<StagVec<K>> stack{v};
  for (int pos : order) {
    const Partition& p = parts[indices[pos]];
    std::size_t common = 0;
    while (common < prefix.size() && common < p.size() && prefix[common] == p[common]) ++common;
    prefix.resize(common);
    stack.resize(common + 1);
    for (std::size_t i = common; i < p.size(); ++i) {
      stack.push_back(raise(p[i], stack.back()));
      prefix.push_back(p[i]);
    }
    out[pos] = stack.back();
  }
  return out;
}

template <class K>
StagVec<K> StagModule<K>::apply_adjoint(const Vec<K>& coeffs, int d, const StagVec<K>& v) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
    if (!is_zero(coeffs[i])) idx.push_back(i);
  StagVec<K> out = zero(v.grade - d);
  auto images = adjoint_images(idx, d, v);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    axpy(out.left, coeffs[idx[i]], images[i].left);
    if (!out.right.empty()) axpy(out.right, coeffs[idx[i]], images[i].right);
  }
  return out;
}

template class StagModule<Q>;
template class StagModule<RatFunc>;

}  // namespace virstag
