#include "virstag/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace virstag {

Q make_q(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Q q(num, den);
  q.canonicalize();
  return q;
}

Q parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ') t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Q(Z(t, 10));
    Z num(t.substr(0, slash), 10), den(t.substr(slash + 1), 10);
    if (den == 0) throw std::domain_error("zero denominator in '" + s + "'");
    Q q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

std::string to_string(const Q& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

void add_mul(Q& a, const Q& f, const Q& b) {
  thread_local Q tmp;
  mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), b.get_mpq_t());
  mpq_add(a.get_mpq_t(), a.get_mpq_t(), tmp.get_mpq_t());
}

Poly::Poly(std::vector<Z> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Z& c) { return Poly(std::vector<Z>{c}); }

Poly Poly::monomial(const Z& c, int degree) {
  std::vector<Z> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Z& Poly::coeff(int i) const {
  static const Z zero = 0;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

Z Poly::content() const {
  Z g = 0;
  for (const auto& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Z g = content();
  if (sgn(lead()) < 0) g = -g;
  return divided_exact(g);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Z> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Z> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::scaled(const Z& s) const {
  Poly r = *this;
  for (auto& a : r.c_) a *= s;
  r.trim();
  return r;
}

Poly Poly::divided_exact(const Z& s) const {
  Poly r = *this;
  for (auto& a : r.c_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), s.get_mpz_t());
  return r;
}

Q Poly::eval(const Q& t) const {
  Q r = 0;
  for (int i = degree(); i >= 0; --i) r = r * t + Q(c_[i]);
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Z& a = c_[i];
    if (a == 0) continue;
    Z mag = abs(a);
    if (out.empty()) {
      if (sgn(a) < 0) out += "-";
    } else {
      out += sgn(a) < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1 && i > 0);
    if (!unit) out += mag.get_str();
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly pseudo_rem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  std::vector<Z> r = a.coeffs();
  int db = b.degree();
  const Z& lb = b.lead();
  for (int dr = static_cast<int>(r.size()) - 1; dr >= db; --dr) {
    if (r[dr] == 0) {
      for (auto& x : r) x *= lb;
      continue;
    }
    Z lr = r[dr];
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b.coeff(j);
  }
  return Poly(std::move(r));
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Poly();
  int da = a.degree(), db = b.degree();
  if (da < db) throw std::domain_error("inexact polynomial division");
  std::vector<Z> r = a.coeffs();
  std::vector<Z> q(da - db + 1);
  for (int k = da - db; k >= 0; --k) {
    const Z& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    Z qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    for (int j = 0; j <= db; ++j) r[k + j] -= qk * b.coeff(j);
    q[k] = qk;
  }
  for (const auto& x : r)
    if (x != 0) throw std::domain_error("inexact polynomial division");
  return Poly(std::move(q));
}

Poly gcd(const Poly& a0, const Poly& b0) {
  Poly a = a0.primitive(), b = b0.primitive();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = pseudo_rem(a, b);
    a = b;
    b = r.primitive();
  }
  return a.primitive();
}

namespace {

std::vector<Z> divisors(Z n) {
  n = abs(n);
  std::vector<Z> small, large;
  for (Z d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_root(const Poly& p, const Z& num, const Z& den) {
  // Homogenised Horner: sum c_i num^i den^(n-i) == 0.
  Z h = p.coeff(p.degree());
  Z dpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    dpow *= den;
    h = h * num + p.coeff(i) * dpow;
  }
  return h == 0;
}

}  // namespace

std::vector<Q> rational_roots(const Poly& p0) {
  std::vector<Q> roots;
  if (p0.is_zero()) throw std::domain_error("roots of the zero polynomial");
  Poly p = p0.primitive();
  int low = 0;
  while (p.coeff(low) == 0) ++low;
  if (low > 0) {
    roots.push_back(Q(0));
    p = Poly(std::vector<Z>(p.coeffs().begin() + low, p.coeffs().end()));
  }
  if (p.degree() <= 0) return roots;
  auto nums = divisors(p.coeff(0));
  auto dens = divisors(p.lead());
  for (const auto& d : dens) {
    for (const auto& n : nums) {
      Z g;
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Z num = n * sign;
        if (is_root(p, num, d)) roots.push_back(Q(num, d));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int root_multiplicity(const Poly& p0, const Q& r) {
  if (p0.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  Poly lin(std::vector<Z>{-r.get_num(), r.get_den()});
  Poly p = p0;
  int k = 0;
  while (p.degree() >= 1 && is_root(p, r.get_num(), r.get_den())) {
    p = exact_div(p.primitive(), lin);
    ++k;
  }
  return k;
}

}  // namespace virstag
