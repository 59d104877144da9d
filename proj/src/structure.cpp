#include "virstag/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace virstag {

std::string to_string(StructureType s) {
  switch (s) {
    case StructureType::Point: return "point";
    case StructureType::Link: return "link";
    case StructureType::Chain: return "chain";
    case StructureType::Braid: return "braid";
  }
  return "?";
}

const LatticeEntry* Structure::at_grade(int grade) const {
  for (const auto& e : entries)
    if (e.grade == grade) return &e;
  return nullptr;
}

std::vector<KacLabel> kac_labels(const Q& h, const Q& t, int bound) {
  // With t = q/p: h = h_{r,s} iff (rq - sp)^2 = (q - p)^2 + 4pq h.
  Z q = t.get_num(), p = t.get_den();
  Q d = Q((q - p) * (q - p)) + Q(4 * p * q) * h;
  d.canonicalize();
  std::vector<KacLabel> out;
  if (sgn(d) < 0 || d.get_den() != 1) return out;
  for (int r = 1; r <= bound; ++r)
    for (int s = 1; r * s <= bound; ++s) {
      Z v = r * q - s * p;
      if (v * v == d.get_num()) out.push_back({r, s});
    }
  return out;
}

namespace {

std::vector<int> distinct_products(const Q& h, const Q& t, int bound) {
  std::set<int> prods;
  for (const auto& k : kac_labels(h, t, bound)) prods.insert(k.r * k.s);
  return {prods.begin(), prods.end()};
}

}  // namespace

std::vector<std::pair<KacLabel, int>> kac_determinant_roots(int n) {
  std::vector<std::pair<KacLabel, int>> out;
  for (int prod = 1; prod <= n; ++prod)
    for (int r = 1; r <= prod; ++r)
      if (prod % r == 0) out.push_back({KacLabel{r, prod / r}, partition_count(n - prod)});
  return out;
}

Q kac_product(const Q& h, const Q& t, int n) {
  Q out(1);
  for (const auto& [l, e] : kac_determinant_roots(n)) {
    Q f = h - kac_weight(l.r, l.s, t);
    for (int i = 0; i < e; ++i) out *= f;
  }
  return out;
}

Structure classify(const Q& h, const Q& t, int max_grade) {
  if (sgn(t) == 0) throw std::invalid_argument("t must be nonzero");
  Structure st;
  st.max_grade = max_grade;
  auto labels = kac_labels(h, t, max_grade);
  if (labels.empty()) return st;
  Z q = abs(t.get_num()), p = t.get_den();
  const KacLabel& first = *std::min_element(labels.begin(), labels.end(), [](auto a, auto b) {
    return a.r * a.s < b.r * b.s;
  });
  bool chain = (first.r % p == 0) || (first.s % q == 0);
  st.type = chain ? StructureType::Chain : StructureType::Braid;
  int offset = 0, rank = 1;
  while (true) {
    auto prods = distinct_products(h + offset, t, max_grade - offset);
    if (prods.empty()) break;
    if (chain) {
      offset += prods[0];
      st.entries.push_back({offset, 0, rank});
    } else {
      st.entries.push_back({offset + prods[0], -1, rank});
      if (prods.size() < 2) break;
      st.entries.push_back({offset + prods[1], +1, rank});
      offset += prods[0];
    }
    ++rank;
  }
  return st;
}

Structure classify(const RatFunc& h, const RatFunc& t, int max_grade) {
  if (t.is_constant()) return classify(h.constant_value(), t.constant_value(), max_grade);
  if (!(t == RatFunc::t())) throw std::invalid_argument("symbolic t must be the parameter itself");
  Structure st;
  st.max_grade = max_grade;
  // 4 t h = (r^2 - 1) t^2 - 2 (rs - 1) t + (s^2 - 1)
  RatFunc f = RatFunc(4) * t * h;
  if (f.den().degree() != 0 || f.num().degree() > 2) return st;
  Q den(f.den().lead());
  Q a = Q(f.num().coeff(2)) / den, b = Q(f.num().coeff(1)) / den, c = Q(f.num().coeff(0)) / den;
  auto root = [](const Q& x, int& out) {
    if (x.get_den() != 1 || sgn(x) <= 0) return false;
    Z n = x.get_num();
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    Z rt;
    mpz_sqrt(rt.get_mpz_t(), n.get_mpz_t());
    out = static_cast<int>(rt.get_si());
    return true;
  };
  int r = 0, s = 0;
  if (!root(a + 1, r) || !root(c + 1, s)) return st;
  if (b != Q(-2 * (r * s - 1))) return st;
  st.type = StructureType::Link;
  if (r * s <= max_grade) st.entries.push_back({r * s, 0, 1});
  return st;
}

template <class K>
std::optional<SingularVector<K>> find_singular(const K& h, const K& t, int n) {
  K c = central_charge(t);
  auto verma = verma_module(h, c);
  auto coords = find_singular_coords(*verma, n);
  if (!coords) return std::nullopt;
  SingularVector<K> sv;
  sv.grade = n;
  sv.coords = *coords;
  sv.element = element_of(sv.coords, n);
  if (n == 0) return sv;
  Structure st = classify(h, t, n);
  const LatticeEntry* e = st.at_grade(n);
  if (!e) throw std::logic_error("singular vector at a grade missing from the classification");
  sv.rank = e->rank;
  sv.sign = e->sign;
  // Path through the lattice: minus-entries of lower rank, then this entry.
  std::vector<int> path{0};
  for (const auto& x : st.entries)
    if (x.rank < e->rank && x.sign <= 0) path.push_back(x.grade);
  path.push_back(n);
  for (std::size_t i = 1; i < path.size(); ++i) {
    int lo = path[i - 1], step = path[i] - lo;
    auto f = find_singular_coords(*verma_module(K(h + K(lo)), c), step);
    if (!f) throw std::logic_error("missing prime factor of a composite singular vector");
    sv.factors.push_back(element_of(*f, step));
  }
  if (n <= 7 && sv.factors.size() > 1) {
    const Algebra<K>& alg = algebra_for(c);
    AlgebraElement<K> prod = sv.factors.back();
    for (int i = static_cast<int>(sv.factors.size()) - 2; i >= 0; --i) prod = alg.multiply(prod, sv.factors[i]);
    if (prod != sv.element) throw std::logic_error("prime factors do not multiply to the singular vector");
  }
  return sv;
}

template std::optional<SingularVector<Q>> find_singular<Q>(const Q&, const Q&, int);
template std::optional<SingularVector<RatFunc>> find_singular<RatFunc>(const RatFunc&, const RatFunc&, int);

}  // namespace virstag
