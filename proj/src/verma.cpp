#include "virstag/verma.hpp"

#include <stdexcept>
#include <string>

namespace virstag {

template <class K>
const std::vector<SparseVec<K>>& Verma<K>::raise_cols(int a, int n) const {
  if (a <= 0) throw std::invalid_argument("raise_cols needs a positive mode");
  auto key = std::make_pair(a, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = raise_memo_.find(key);
    if (it != raise_memo_.end()) return it->second;
  }
  std::vector<SparseVec<K>> cols(dim(n));
  if (n - a >= 0)
    for (int j = 0; j < dim(n); ++j) cols[j] = compute_raise(a, n, j);
  std::lock_guard<std::mutex> lock(mu_);
  return raise_memo_.emplace(key, std::move(cols)).first->second;
}

template <class K>
const std::vector<SparseVec<K>>& Verma<K>::lower_cols(int k, int n) const {
  if (k <= 0) throw std::invalid_argument("lower_cols needs a positive index");
  auto key = std::make_pair(k, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = lower_memo_.find(key);
    if (it != lower_memo_.end()) return it->second;
  }
  std::vector<SparseVec<K>> cols(dim(n));
  for (int j = 0; j < dim(n); ++j) cols[j] = compute_lower(k, n, j);
  std::lock_guard<std::mutex> lock(mu_);
  return lower_memo_.emplace(key, std::move(cols)).first->second;
}

template <class K>
void Verma<K>::lower_into(int k, int n, const SparseVec<K>& w, const K& f, Vec<K>& out) const {
  if (w.empty()) return;
  const auto& cols = lower_cols(k, n);
  for (const auto& [i, x] : w) axpy(out, K(f * x), cols[i]);
}

// L_a L_{-b} R v = L_{-b} L_a R v + (a + b) L_{a-b} R v + delta_{a,b} (a^3 - a) c/12 R v
template <class K>
SparseVec<K> Verma<K>::compute_raise(int a, int n, int j) const {
  const Partition& p = partitions(n)[j];
  int b = p[0];
  Partition rest(p.begin() + 1, p.end());
  int r = partition_index(rest);
  int g = n - b;
  Vec<K> res(dim(n - a), K(0));
  if (g - a >= 0) lower_into(b, g - a, raise_cols(a, g)[r], K(1), res);
  K coef(a + b);
  if (a > b) {
    axpy(res, coef, raise_cols(a - b, g)[r]);
  } else if (a == b) {
    res[r] += coef * (h_ + K(g)) + c_ * K(static_cast<long>(a) * a * a - a) / K(12);
  } else {
    axpy(res, coef, lower_cols(b - a, g)[r]);
  }
  return to_sparse(res);
}

// L_{-k} L_{-b} R = L_{-b} L_{-k} R + (b - k) L_{-(b+k)} R  for k < b
template <class K>
SparseVec<K> Verma<K>::compute_lower(int k, int n, int j) const {
  const Partition& p = partitions(n)[j];
  if (p.empty() || k >= p[0]) {
    Partition q{k};
    q.insert(q.end(), p.begin(), p.end());
    return {{partition_index(q), K(1)}};
  }
  int b = p[0];
  Partition rest(p.begin() + 1, p.end());
  int r = partition_index(rest);
  Vec<K> res(dim(n + k), K(0));
  lower_into(b, n - b + k, lower_cols(k, n - b)[r], K(1), res);
  Partition q{k + b};
  q.insert(q.end(), rest.begin(), rest.end());
  res[partition_index(q)] += K(b - k);
  return to_sparse(res);
}

template <class K>
Vec<K> Verma<K>::raise(int a, int n, const Vec<K>& v) const {
  if (n - a < 0 || v.empty()) return {};
  Vec<K> out(dim(n - a), K(0));
  const auto& cols = raise_cols(a, n);
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    if (!is_zero(v[j])) axpy(out, v[j], cols[j]);
  return out;
}

template <class K>
Vec<K> Verma<K>::lower(int k, int n, const Vec<K>& v) const {
  if (n < 0) return zero(n + k);
  Vec<K> out(dim(n + k), K(0));
  const auto& cols = lower_cols(k, n);
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    if (!is_zero(v[j])) axpy(out, v[j], cols[j]);
  return out;
}

template <class K>
Vec<K> Verma<K>::apply_lowering(const Partition& p, int n, const Vec<K>& v) const {
  Vec<K> w = v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    w = lower(*it, n, w);
    n += *it;
  }
  return w;
}

template <class K>
Vec<K> Verma<K>::apply(const AlgebraElement<K>& e, int n, const Vec<K>& v) const {
  if (e.empty()) return Vec<K>{};
  int shift = monomial_grade(e.begin()->first);
  int target = n + shift;
  Vec<K> out = zero(target);
  if (target < 0) return out;
  for (const auto& [m, c] : e) {
    if (monomial_grade(m) != shift) throw std::invalid_argument("element is not homogeneous");
    Vec<K> w = v;
    int g = n;
    bool dead = false;
    for (auto it = m.rbegin(); it != m.rend() && !dead; ++it) {
      for (int i = 0; i < it->second; ++i) {
        int mode = it->first;
        if (mode > 0) {
          if (g - mode < 0) {
            dead = true;
            break;
          }
          w = raise(mode, g, w);
          g -= mode;
        } else if (mode < 0) {
          w = lower(-mode, g, w);
          g -= mode;
        } else {
          scale(w, K(h_ + K(g)));
        }
      }
    }
    if (!dead) axpy(out, c, w);
  }
  return out;
}

template <class K>
const std::vector<Vec<K>>& Verma<K>::gram(int n) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gram_memo_.find(n);
    if (it != gram_memo_.end()) return it->second;
  }
  int d = dim(n);
  std::vector<Vec<K>> g(d, Vec<K>(d, K(0)));
  if (n == 0) {
    g[0][0] = K(1);
  } else {
    const auto& parts = partitions(n);
    for (int i = 0; i < d; ++i) {
      int a = parts[i][0];
      Partition rest(parts[i].begin() + 1, parts[i].end());
      int r = partition_index(rest);
      const auto& lower_gram = gram(n - a);
      const auto& cols = raise_cols(a, n);
      for (int j = i; j < d; ++j) {
        K s(0);
        for (const auto& [k, x] : cols[j]) add_mul(s, x, lower_gram[r][k]);
        g[i][j] = s;
        g[j][i] = s;
      }
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return gram_memo_.emplace(n, std::move(g)).first->second;
}

template <class K>
std::shared_ptr<const Verma<K>> verma_module(const K& h, const K& c) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Verma<K>>> cache;
  std::string key = to_string(h) + "|" + to_string(c);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto v = std::make_shared<const Verma<K>>(h, c);
  cache.emplace(key, v);
  return v;
}

template <class K>
const Algebra<K>& algebra_for(const K& c) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Algebra<K>>> cache;
  std::string key = to_string(c);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  return *cache.emplace(key, std::make_unique<Algebra<K>>(c)).first->second;
}

template <class K>
Vec<K> coords_of(const AlgebraElement<K>& e, int n) {
  Vec<K> v(partition_count(n), K(0));
  for (const auto& [m, c] : e) {
    if (monomial_grade(m) != n) throw std::invalid_argument("element has the wrong grade");
    v[partition_index(monomial_partition(m))] += c;
  }
  return v;
}

template <class K>
AlgebraElement<K> element_of(const Vec<K>& coords, int n) {
  AlgebraElement<K> e;
  const auto& parts = partitions(n);
  for (int i = 0; i < static_cast<int>(coords.size()); ++i)
    if (!is_zero(coords[i])) e.emplace(lowering_monomial(parts[i]), coords[i]);
  return e;
}

template <class K>
bool is_singular(const Verma<K>& v, int n, const Vec<K>& x) {
  for (int a : {1, 2}) {
    Vec<K> y = v.raise(a, n, x);
    if (!is_zero_vec(y)) return false;
  }
  return true;
}

template <class K>
std::optional<Vec<K>> find_singular_coords(const Verma<K>& v, int n) {
  if (n < 0) return std::nullopt;
  if (n == 0) return Vec<K>{K(1)};
  int d = Verma<K>::dim(n);
  std::vector<Vec<K>> rows;
  for (int a : {1, 2}) {
    if (n - a < 0) continue;
    const auto& cols = v.raise_cols(a, n);
    int dd = Verma<K>::dim(n - a);
    std::vector<Vec<K>> block(dd, Vec<K>(d, K(0)));
    for (int j = 0; j < d; ++j)
      for (const auto& [k, x] : cols[j]) block[k][j] = x;
    for (auto& r : block) rows.push_back(std::move(r));
  }
  auto ns = nullspace(rows, d);
  if (ns.empty()) return std::nullopt;
  if (ns.size() > 1) throw std::logic_error("singular vectors at one grade are not unique");
  Vec<K> x = std::move(ns[0]);
  int lead = 0;
  while (is_zero(x[lead])) ++lead;
  K inv = K(1) / x[lead];
  scale(x, inv);
  return x;
}

template <class K>
const Subspace<K>& HWModule<K>::submodule(int n) const {
  if (n < 0) throw std::invalid_argument("negative grade");
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(spaces_.size()) <= n) {
    int g = static_cast<int>(spaces_.size());
    auto s = std::make_unique<Subspace<K>>(Verma<K>::dim(g), ones_priority_order(g));
    if (g >= 1)
      for (const auto& row : spaces_[g - 1]->rows()) s->insert(verma_->lower(1, g - 1, row));
    if (g >= 2)
      for (const auto& row : spaces_[g - 2]->rows()) s->insert(verma_->lower(2, g - 2, row));
    for (const auto& [gg, vec] : gens_)
      if (gg == g) s->insert(vec);
    spaces_.push_back(std::move(s));
  }
  return *spaces_[n];
}

template <class K>
K proportionality(const HWModule<K>& m, int n, const Vec<K>& a, const Vec<K>& b) {
  Vec<K> na = m.normal_form(n, a), nb = m.normal_form(n, b);
  int lead = -1;
  for (int i = 0; i < static_cast<int>(nb.size()); ++i)
    if (!is_zero(nb[i])) {
      lead = i;
      break;
    }
  if (lead < 0) throw std::logic_error("reference vector vanishes in the quotient");
  K ratio = na[lead] / nb[lead];
  K neg = -ratio;
  axpy(na, neg, nb);
  if (!is_zero_vec(na)) throw std::logic_error("vectors are not proportional");
  return ratio;
}

#define VIRSTAG_INSTANTIATE(K)                                                          \
  template class Verma<K>;                                                              \
  template class HWModule<K>;                                                           \
  template std::shared_ptr<const Verma<K>> verma_module<K>(const K&, const K&);         \
  template const Algebra<K>& algebra_for<K>(const K&);                                  \
  template Vec<K> coords_of<K>(const AlgebraElement<K>&, int);                          \
  template AlgebraElement<K> element_of<K>(const Vec<K>&, int);                         \
  template bool is_singular<K>(const Verma<K>&, int, const Vec<K>&);                    \
  template std::optional<Vec<K>> find_singular_coords<K>(const Verma<K>&, int);         \
  template K proportionality<K>(const HWModule<K>&, int, const Vec<K>&, const Vec<K>&);

VIRSTAG_INSTANTIATE(Q)
VIRSTAG_INSTANTIATE(RatFunc)

}  // namespace virstag
