#include "virstag/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace virstag {

int monomial_grade(const Monomial& m) {
  int g = 0;
  for (const auto& [mode, e] : m) g -= mode * e;
  return g;
}

std::vector<int> monomial_word(const Monomial& m) {
  std::vector<int> w;
  for (const auto& [mode, e] : m)
    for (int i = 0; i < e; ++i) w.push_back(mode);
  return w;
}

Monomial monomial_from_word_sorted(const std::vector<int>& modes) {
  Monomial m;
  for (int x : modes) {
    if (!m.empty() && m.back().first == x) {
      ++m.back().second;
    } else {
      if (!m.empty() && m.back().first > x) throw std::invalid_argument("modes not ascending");
      m.emplace_back(x, 1);
    }
  }
  return m;
}

Monomial lowering_monomial(const Partition& p) {
  std::vector<int> w;
  for (int x : p) w.push_back(-x);
  return monomial_from_word_sorted(w);
}

Monomial raising_monomial(const Partition& p) {
  std::vector<int> w(p.rbegin(), p.rend());
  return monomial_from_word_sorted(w);
}

Partition monomial_partition(const Monomial& m) {
  Partition p;
  bool neg = !m.empty() && m.front().first < 0;
  for (const auto& [mode, e] : m) {
    if (mode == 0 || (mode < 0) != neg) throw std::invalid_argument("monomial has mixed modes");
    for (int i = 0; i < e; ++i) p.push_back(neg ? -mode : mode);
  }
  std::sort(p.rbegin(), p.rend());
  return p;
}

std::vector<Monomial> negative_basis(int n) {
  std::vector<Monomial> out;
  for (const auto& p : partitions(n)) out.push_back(lowering_monomial(p));
  return out;
}

std::string monomial_to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& [mode, e] : m) {
    s += "L_{" + std::to_string(mode) + "}";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

std::string coeff_prefix(const Q& c, bool first, bool is_unit_monomial) {
  std::string s;
  Q mag = abs(c);
  if (first) {
    if (sgn(c) < 0) s += "-";
  } else {
    s += sgn(c) < 0 ? " - " : " + ";
  }
  if (mag != 1 || is_unit_monomial) s += to_string(mag) + (is_unit_monomial ? "" : " ");
  return s;
}

std::string coeff_prefix(const RatFunc& c, bool first, bool is_unit_monomial) {
  std::string s = first ? "" : " + ";
  if (c == RatFunc(1) && !is_unit_monomial) return s;
  return s + "(" + c.to_string() + ")" + (is_unit_monomial ? "" : " ");
}

}  // namespace

template <class K>
std::string element_to_string(const AlgebraElement<K>& e) {
  if (e.empty()) return "0";
  std::vector<std::pair<Monomial, K>> terms(e.begin(), e.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return monomial_grade(a.first) > monomial_grade(b.first);
  });
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    s += coeff_prefix(c, first, m.empty());
    if (!m.empty()) s += monomial_to_string(m);
    first = false;
  }
  return s;
}

template std::string element_to_string<Q>(const AlgebraElement<Q>&);
template std::string element_to_string<RatFunc>(const AlgebraElement<RatFunc>&);

template <class K>
AlgebraElement<K> Algebra<K>::right_mul(const Monomial& m, int n) const {
  if (m.empty() || m.back().first < n) {
    Monomial r = m;
    r.emplace_back(n, 1);
    return {{r, K(1)}};
  }
  if (m.back().first == n) {
    Monomial r = m;
    ++r.back().second;
    return {{r, K(1)}};
  }
  auto key = std::make_pair(m, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = right_memo_.find(key);
    if (it != right_memo_.end()) return it->second;
  }
  // m = p L_a with a > n:  p L_a L_n = (p L_n) L_a + (a - n) p L_{a+n} + delta (a^3 - a) c/12 p
  int a = m.back().first;
  Monomial p = m;
  if (--p.back().second == 0) p.pop_back();
  AlgebraElement<K> out;
  AlgebraElement<K> pn = right_mul(p, n);
  for (const auto& [q, c] : pn) add_scaled(out, right_mul(q, a), c);
  add_scaled(out, right_mul(p, a + n), K(a - n));
  if (a + n == 0) {
    K central = c_ * K(static_cast<long>(a) * a * a - a) / K(12);
    add_term(out, p, central);
  }
  std::lock_guard<std::mutex> lock(mu_);
  right_memo_.emplace(key, out);
  return out;
}

template <class K>
AlgebraElement<K> Algebra<K>::right_mul(const AlgebraElement<K>& e, int n) const {
  AlgebraElement<K> out;
  for (const auto& [m, c] : e) add_scaled(out, right_mul(m, n), c);
  return out;
}

template <class K>
AlgebraElement<K> Algebra<K>::normal_order(const std::vector<int>& word) const {
  AlgebraElement<K> e{{Monomial{}, K(1)}};
  for (int n : word) e = right_mul(e, n);
  return e;
}

template <class K>
AlgebraElement<K> Algebra<K>::multiply(const AlgebraElement<K>& a, const AlgebraElement<K>& b) const {
  AlgebraElement<K> out;
  for (const auto& [mb, cb] : b) {
    AlgebraElement<K> part = a;
    for (int n : monomial_word(mb)) part = right_mul(part, n);
    add_scaled(out, part, cb);
  }
  return out;
}

template <class K>
std::pair<AlgebraElement<K>, AlgebraElement<K>> Algebra<K>::decompose_prefix(const Monomial& m, int a) const {
  if (a < 1) throw std::invalid_argument("decompose_prefix needs a positive mode");
  if (a == 1) return {{{m, K(1)}}, {}};
  if (a == 2) return {{}, {{m, K(1)}}};
  auto key = std::make_pair(m, a);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = decomp_memo_.find(key);
    if (it != decomp_memo_.end()) return it->second;
  }
  // m L_a = (m L_{a-1}) L_1/(a-2) - (m L_1) L_{a-1}/(a-2)
  K inv = K(1) / K(a - 2);
  std::pair<AlgebraElement<K>, AlgebraElement<K>> out;
  out.first = scaled(right_mul(m, a - 1), inv);
  K minv = -inv;
  for (const auto& [q, c] : right_mul(m, 1)) {
    auto [u1, u2] = decompose_prefix(q, a - 1);
    K f = c * minv;
    add_scaled(out.first, u1, f);
    add_scaled(out.second, u2, f);
  }
  std::lock_guard<std::mutex> lock(mu_);
  decomp_memo_.emplace(key, out);
  return out;
}

template <class K>
std::pair<AlgebraElement<K>, AlgebraElement<K>> Algebra<K>::decompose_against_L1L2(const AlgebraElement<K>& u) const {
  std::pair<AlgebraElement<K>, AlgebraElement<K>> out;
  for (const auto& [m, c] : u) {
    if (m.empty() || m.back().first < 1)
      throw std::invalid_argument("element has a term not ending in a positive mode");
    int a = m.back().first;
    Monomial p = m;
    if (--p.back().second == 0) p.pop_back();
    auto [u1, u2] = decompose_prefix(p, a);
    add_scaled(out.first, u1, c);
    add_scaled(out.second, u2, c);
  }
  return out;
}

template class Algebra<Q>;
template class Algebra<RatFunc>;

}  // namespace virstag
