#include "virstag/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace virstag {

RatFunc::RatFunc(long v) : num_(Poly::constant(Z(v))), den_(Poly::constant(1)) {}

RatFunc::RatFunc(const Q& q)
    : num_(Poly::constant(q.get_num())), den_(Poly::constant(q.get_den())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

RatFunc RatFunc::t() { return RatFunc(Poly::monomial(1, 1), Poly::constant(1)); }

Q RatFunc::constant_value() const {
  Q q(num_.coeff(0), den_.coeff(0));
  q.canonicalize();
  return q;
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den_.degree() > 0 && num_.degree() >= 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_.scaled(g.lead()), g);
      den_ = exact_div(den_.scaled(g.lead()), g);
    }
  }
  Z cn = num_.content(), cd = den_.content();
  Z g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (sgn(den_.lead()) < 0) g = -g;
  if (g != 1) {
    num_ = num_.divided_exact(g);
    den_ = den_.divided_exact(g);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

Q RatFunc::eval(const Q& t0) const {
  Q d = den_.eval(t0);
  if (sgn(d) == 0) throw std::domain_error("denominator vanishes at t = " + virstag::to_string(t0));
  Q r = num_.eval(t0) / d;
  r.canonicalize();
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0 && den_.lead() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

struct Factored {
  Q constant = 1;
  int tpow = 0;
  // (b, a) -> multiplicity of b^2 t^2 - a^2
  std::map<std::pair<Z, Z>, int> pairs;
  // primitive linear b t - a -> multiplicity, keyed by (b, a)
  std::map<std::pair<Z, Z>, int> linears;
  Poly leftover = Poly::constant(1);
};

void factor_into(const Poly& p0, int sign, Factored& f) {
  Z cont = p0.content();
  Poly p = p0.divided_exact(cont);
  Q c(cont);
  if (sign > 0) f.constant *= c; else f.constant /= c;
  int low = 0;
  while (p.coeff(low) == 0) ++low;
  f.tpow += sign * low;
  if (low > 0) p = Poly(std::vector<Z>(p.coeffs().begin() + low, p.coeffs().end()));
  std::vector<Q> roots = p.degree() > 0 ? rational_roots(p) : std::vector<Q>{};
  std::map<Q, int> mult;
  for (const auto& r : roots) mult[r] = root_multiplicity(p, r);
  auto divide_out = [&](const Poly& factor, int times) {
    for (int i = 0; i < times; ++i) p = exact_div(p, factor);
  };
  for (auto& [r, m] : mult) {
    if (m == 0 || sgn(r) <= 0) continue;
    Q neg = -r;
    auto it = mult.find(neg);
    if (it == mult.end() || it->second == 0) continue;
    int k = std::min(m, it->second);
    Z a = r.get_num(), b = r.get_den();
    Poly quad(std::vector<Z>{-a * a, 0, b * b});
    divide_out(quad, k);
    f.pairs[{b, a}] += sign * k;
    m -= k;
    it->second -= k;
  }
  for (auto& [r, m] : mult) {
    if (m == 0) continue;
    Z a = r.get_num(), b = r.get_den();
    Poly lin(std::vector<Z>{-a, b});
    divide_out(lin, m);
    f.linears[{b, a}] += sign * m;
  }
  if (p.degree() == 0) {
    if (sign > 0) f.constant *= Q(p.lead()); else f.constant /= Q(p.lead());
  } else if (sign > 0) {
    f.leftover = f.leftover * p;
  } else {
    throw std::domain_error("unfactorable denominator");
  }
}

std::string power_suffix(int m) { return m == 1 ? "" : "^" + std::to_string(m); }

}  // namespace

std::string factored_string(const RatFunc& x) {
  if (x.is_zero()) return "0";
  Factored f;
  factor_into(x.num(), +1, f);
  factor_into(x.den(), -1, f);
  f.constant.canonicalize();
  std::string body;
  if (f.tpow != 0) body += f.tpow == 1 ? "t" : "t^" + std::to_string(f.tpow);
  for (const auto& [ba, m] : f.pairs) {
    if (m == 0) continue;
    const auto& [b, a] = ba;
    std::string lead = b == 1 ? "t^2" : Z(b * b).get_str() + "t^2";
    body += "(" + lead + " - " + Z(a * a).get_str() + ")" + power_suffix(m);
  }
  for (const auto& [ba, m] : f.linears) {
    if (m == 0) continue;
    const auto& [b, a] = ba;
    std::string lead = b == 1 ? "t" : b.get_str() + "t";
    std::string rest = sgn(a) == 0 ? "" : (sgn(a) > 0 ? " - " : " + ") + Z(abs(a)).get_str();
    body += "(" + lead + rest + ")" + power_suffix(m);
  }
  if (f.leftover.degree() > 0) body += "(" + f.leftover.to_string() + ")";
  std::string c = to_string(f.constant);
  if (body.empty()) return c;
  if (f.constant == 1) return body;
  if (f.constant == -1) return "-" + body;
  return c + body;
}

}  // namespace virstag
