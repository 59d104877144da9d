#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include "virstag/intersection.hpp"
#include "virstag/json_io.hpp"
#include "virstag/structure.hpp"

namespace virstag::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace

Q parse_rational(const std::string& text) {
  Q q;
  if (text.empty() || q.set_str(text, 10) != 0) throw UsageError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::vector<Q> parse_list(const std::string& text) {
  std::vector<Q> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

HWSpec parse_module(const std::string& text) {
  HWSpec m;
  // "h:w1,w2" allows a fractional h; otherwise the first '/' separates h from the weights
  auto cut = text.find(':');
  if (cut == std::string::npos) cut = text.find('/');
  std::string head = text.substr(0, cut);
  std::string tail = cut == std::string::npos ? "" : text.substr(cut + 1);
  m.h = parse_rational(head);
  if (!tail.empty())
    for (const Q& w : parse_list(tail)) {
      Q g = w - m.h;
      if (g.get_den() != 1 || g <= 0)
        throw UsageError("quotient weight " + w.get_str() + " is not above h = " + m.h.get_str() + " by a positive integer");
      m.grades.push_back(static_cast<int>(g.get_num().get_si()));
    }
  return m;
}

std::string format_vector(const Vec<Q>& coords, int grade) {
  if (grade < 0) return "0";
  return "(" + element_to_string(element_of(coords, grade)) + ")";
}

std::string format_constraint(const AffineConstraint& c) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Q& a, const std::string& name) {
    if (is_zero(a)) return;
    if (first)
      os << (a < 0 ? "-" : "");
    else
      os << (a < 0 ? " - " : " + ");
    Q m = abs(a);
    if (m != 1 || name.empty()) os << m.get_str();
    if (!name.empty()) os << (m != 1 ? " " : "") << name;
    first = false;
  };
  std::vector<std::string> names;
  if (c.coeffs.size() == 1)
    names = {"beta"};
  else
    names = {"beta_-", "beta_+"};
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) term(c.coeffs[i], names[i]);
  term(c.offset, "");
  if (first) os << "0";
  os << " = 0";
  return os.str();
}

void Report::check(const std::string& what, const std::string& expected, const std::string& got) {
  bool ok = expected == got;
  out_ << "  [" << (ok ? "ok" : "MISMATCH") << "] " << what << ": " << got;
  if (!ok) out_ << " (expected " << expected << ")";
  out_ << "\n";
  ok_ = ok_ && ok;
}

void Report::check(const std::string& what, bool ok, const std::string& detail) {
  out_ << "  [" << (ok ? "ok" : "MISMATCH") << "] " << what;
  if (!detail.empty()) out_ << ": " << detail;
  out_ << "\n";
  ok_ = ok_ && ok;
}

void Report::discrepancy(const std::string& what, const std::string& published, const std::string& got,
                         const std::string& why) {
  out_ << "  [published value not reproduced] " << what << ": computed " << got << ", published " << published
       << "; " << why << "\n";
  ++discrepancies_;
}

void Report::note(const std::string& text) { out_ << "  " << text << "\n"; }

namespace {

struct Common {
  std::string t, c;
  bool json = false;
};

void add_t(CLI::App* app, Common& o) {
  auto* t = app->add_option("--t", o.t, "parameter t (rational)");
  auto* c = app->add_option("--c", o.c, "central charge (rational; the root |t| >= 1 is used)");
  t->excludes(c);
  c->excludes(t);
  app->add_flag("--json", o.json, "machine-readable output");
}

Q resolve_t(const Common& o) {
  if (o.t.empty() && o.c.empty()) throw UsageError("one of --t or --c is required");
  if (!o.c.empty()) {
    try {
      return t_candidates_from_c(parse_rational(o.c)).first;
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  if (o.t == "t") throw UsageError("a symbolic t is only used by table-6-12");
  Q t = parse_rational(o.t);
  if (t == 0) throw UsageError("t must be nonzero");
  return t;
}

std::string beta_names(int b, int i) {
  if (b == 1) return "beta";
  return i == 0 ? "beta_-" : "beta_+";
}

void print_answer(std::ostream& out, const StaggeredProblem& p, const StaggeredAnswer& a) {
  out << "left " << describe(p.left) << ", right " << describe(p.right) << ", t = " << p.t.get_str() << "\n";
  if (a.incompatible) {
    out << "incompatible: " << a.reason << "\n";
    return;
  }
  out << "case " << to_string(a.case_tag) << ", moduli dimension b = " << a.beta_dim << ", pathway " << a.pathway
      << "\n";
  for (const auto& c : a.constraints) {
    bool trivial = is_zero(c.offset) && std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Q& x) { return is_zero(x); });
    if (!trivial) out << "constraint: " << format_constraint(c) << "\n";
  }
  if (!a.exists) {
    out << "status: empty (" << a.reason << ")\n";
    return;
  }
  int dim = static_cast<int>(a.directions.size());
  out << "status: affine, dimension " << dim << "\n";
  if (a.beta_dim > 0 && dim == 0)
    for (int i = 0; i < a.beta_dim; ++i) out << beta_names(a.beta_dim, i) << " = " << a.point[i].get_str() << "\n";
  else if (a.beta_dim > 0 && dim < a.beta_dim) {
    out << "point:";
    for (const auto& x : a.point) out << " " << x.get_str();
    out << "\n";
    for (const auto& d : a.directions) {
      out << "direction:";
      for (const auto& x : d) out << " " << x.get_str();
      out << "\n";
    }
  } else if (a.beta_dim > 0) {
    out << "every value of the beta-invariants is realised\n";
  }
}

json vec_json(const Vec<Q>& v, int grade) {
  json out;
  out["grade"] = grade;
  out["coords"] = to_json(std::vector<Q>(v.begin(), v.end()));
  out["element"] = grade < 0 ? "0" : element_to_string(element_of(v, grade));
  return out;
}

int cmd_classify(const Common& o, const std::string& h, int max_grade, std::ostream& out) {
  Q t = resolve_t(o);
  Structure s = classify(parse_rational(h), t, max_grade);
  if (o.json) {
    out << to_json(s).dump(2) << "\n";
    return kOk;
  }
  out << "type: " << to_string(s.type) << " (grades up to " << max_grade << ")\n";
  for (const auto& e : s.entries)
    out << "grade " << e.grade << (e.sign < 0 ? " (-)" : e.sign > 0 ? " (+)" : "") << " rank " << e.rank << "\n";
  return kOk;
}

int cmd_singular(const Common& o, const std::string& h, int grade, std::ostream& out) {
  Q t = resolve_t(o);
  auto sv = find_singular(parse_rational(h), t, grade);
  if (o.json) {
    json j;
    if (sv) {
      j["grade"] = sv->grade;
      j["element"] = element_to_string(sv->element);
      j["rank"] = sv->rank;
      j["factors"] = json::array();
      for (const auto& f : sv->factors) j["factors"].push_back(element_to_string(f));
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (!sv) {
    out << "no singular vector at grade " << grade << "\n";
    return kOk;
  }
  out << "X = " << element_to_string(sv->element) << "\nrank " << sv->rank << "\n";
  for (std::size_t i = 0; i < sv->factors.size(); ++i)
    out << "factor " << i + 1 << ": " << element_to_string(sv->factors[i]) << "\n";
  return kOk;
}

int cmd_gram(const Common& o, const std::string& h, int grade, std::ostream& out) {
  Q t = resolve_t(o);
  auto v = verma_module(parse_rational(h), central_charge(t));
  const auto& g = v->gram(grade);
  if (o.json) {
    json j;
    j["basis"] = json::array();
    for (const auto& m : negative_basis(grade)) j["basis"].push_back(monomial_to_string(m));
    j["matrix"] = json::array();
    for (const auto& row : g) j["matrix"].push_back(to_json(std::vector<Q>(row.begin(), row.end())));
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& m : negative_basis(grade)) out << monomial_to_string(m) << "  ";
  out << "\n";
  for (const auto& row : g) {
    for (const auto& x : row) out << x.get_str() << "  ";
    out << "\n";
  }
  return kOk;
}

int cmd_kacdet(const Common& o, const std::string& h, int max_grade, unsigned seed, std::ostream& out) {
  Q t = resolve_t(o);
  Q c = central_charge(t);
  std::vector<Q> hs;
  if (!h.empty()) {
    hs.push_back(parse_rational(h));
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
    while (hs.size() < 5) {
      Q x(num(rng), den(rng));
      x.canonicalize();
      if (!is_zero(kac_product(x, t, max_grade))) hs.push_back(x);
    }
  }
  bool ok = true;
  json j = json::array();
  for (int n = 1; n <= max_grade; ++n) {
    std::vector<Q> ratios;
    for (const Q& x : hs) ratios.push_back(determinant(verma_module(x, c)->gram(n)) / kac_product(x, t, n));
    bool constant = std::all_of(ratios.begin(), ratios.end(), [&](const Q& r) { return r == ratios[0]; });
    bool nonzero = !is_zero(ratios[0]);
    ok = ok && constant && nonzero;
    if (o.json)
      j.push_back({{"grade", n}, {"alpha", to_json(ratios[0])}, {"h_independent", constant}});
    else
      out << "grade " << n << ": alpha = " << ratios[0].get_str() << (constant ? "" : " (varies with h)") << "\n";
  }
  if (o.json) out << j.dump(2) << "\n";
  return ok ? kOk : kFailure;
}

int cmd_intersection(int m, bool as_json, std::ostream& out) {
  if (m < 0) throw UsageError("--m must be nonnegative");
  const auto& basis = intersection_basis(m);
  if (as_json) {
    json j;
    j["m"] = m;
    j["dimension"] = intersection_dim(m);
    j["basis"] = json::array();
    for (const auto& e : basis) j["basis"].push_back({{"U1", element_to_string(e.u1)}, {"U2", element_to_string(e.u2)}});
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "d(" << m << ") = " << intersection_dim(m) << "\n";
  for (const auto& e : basis)
    out << "(" << element_to_string(e.u1) << ") L_1 + (" << element_to_string(e.u2) << ") L_2 = 0\n";
  return kOk;
}

StaggeredProblem problem_of(const Common& o, const std::string& left, const std::string& right) {
  if (left.empty() || right.empty()) throw UsageError("--left and --right are required");
  return {resolve_t(o), parse_module(left), parse_module(right)};
}

int cmd_exists(const Common& o, const std::string& left, const std::string& right, std::ostream& out) {
  StaggeredProblem p = problem_of(o, left, right);
  StaggeredAnswer a = exists(p);
  if (o.json)
    out << to_json(a).dump(2) << "\n";
  else
    print_answer(out, p, a);
  return a.incompatible ? kIncompatible : kOk;
}

int cmd_beta(const Common& o, const std::string& left, const std::string& right, const std::string& w1,
             const std::string& w2, const std::string& beta, std::ostream& out) {
  StaggeredProblem p = problem_of(o, left, right);
  Staggered s(p);
  if (s.ell() == 0) throw UsageError("beta-invariants are undefined when h_right = h_left");
  DataPair d;
  if (!beta.empty()) {
    d = s.data_from_beta(parse_list(beta));
  } else {
    d = s.zero_data();
    auto fill = [](const std::string& text, Vec<Q>& v, const char* name) {
      if (text.empty()) return;
      auto vals = parse_list(text);
      if (vals.size() != v.size())
        throw UsageError(std::string(name) + " needs " + std::to_string(v.size()) + " coordinates");
      v = Vec<Q>(vals.begin(), vals.end());
    };
    fill(w1, d.omega1, "--omega1");
    fill(w2, d.omega2, "--omega2");
  }
  bool admissible = s.is_admissible(d);
  json j;
  j["case"] = to_string(s.case_tag());
  j["beta_dim"] = s.b();
  j["admissible"] = admissible;
  j["omega1"] = vec_json(d.omega1, s.ell() - 1);
  j["omega2"] = vec_json(d.omega2, s.ell() - 2);
  if (admissible) {
    auto b = s.beta_invariants(d);
    j["beta"] = to_json(b);
    j["naive_beta"] = to_json(s.naive_beta(d));
  }
  if (o.json) {
    out << j.dump(2) << "\n";
    return admissible ? kOk : kFailure;
  }
  out << "case " << to_string(s.case_tag()) << ", b = " << s.b() << "\n";
  out << "omega1 = " << format_vector(d.omega1, s.ell() - 1) << " x\n";
  out << "omega2 = " << format_vector(d.omega2, s.ell() - 2) << " x\n";
  if (!admissible) {
    out << "data is not admissible\n";
    return kFailure;
  }
  auto b = s.beta_invariants(d);
  for (int i = 0; i < s.b(); ++i) out << beta_names(s.b(), i) << " = " << b[i].get_str() << "\n";
  out << "naive <x, X^dagger y> = " << s.naive_beta(d).get_str() << "\n";
  return kOk;
}

int cmd_oracle(const Common& o, const std::string& left, const std::string& right, const std::string& beta,
               std::ostream& out) {
  StaggeredProblem p = problem_of(o, left, right);
  Staggered s(p);
  if (s.n() == 0) throw UsageError("the oracle needs a right module with a quotient");
  auto w = s.oracle_singular(beta.empty() ? std::vector<Q>{} : parse_list(beta));
  if (o.json) {
    json j;
    j["exists"] = w.has_value();
    j["witnesses"] = json::array();
    if (w)
      for (int e = 0; e < s.n(); ++e) j["witnesses"].push_back(vec_json((*w)[e], s.ell() + s.right_grade(e)));
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (!w) {
    out << "no singular vector: the module does not exist for these invariants\n";
    return kOk;
  }
  for (int e = 0; e < s.n(); ++e) {
    int g = s.right_grade(e);
    out << "singular vector: " << format_vector(s.right_singular(e), g) << " y - "
        << format_vector((*w)[e], s.ell() + g) << " x\n";
  }
  return kOk;
}

int cmd_table(bool as_json, std::ostream& out) {
  const int rows[][2] = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {2, 2}, {3, 2}};
  json j = json::array();
  for (const auto& rs : rows) {
    RatFunc v = generic_beta_bar(rs[0], rs[1]);
    auto ts = generic_existence_set(rs[0], rs[1], v);
    if (as_json) {
      j.push_back({{"r", rs[0]}, {"s", rs[1]}, {"beta_bar", to_json(v)}, {"t", to_json(ts)}});
      continue;
    }
    out << "(" << rs[0] << "," << rs[1] << ")  " << factored_string(v) << "  t: ";
    if (ts.empty()) out << "--";
    for (std::size_t i = 0; i < ts.size(); ++i) out << (i ? ", " : "") << ts[i].get_str();
    out << "\n";
  }
  if (as_json) out << j.dump(2) << "\n";
  return kOk;
}

int cmd_reproduce(const std::string& id, bool list, std::ostream& out) {
  if (list || id.empty()) {
    for (const auto& r : catalog()) {
      out << r.id;
      for (const auto& a : r.aliases) out << " " << a;
      out << "  " << r.title << "\n";
    }
    return kOk;
  }
  std::vector<const Reproduction*> todo;
  if (id == "all") {
    for (const auto& r : catalog()) todo.push_back(&r);
  } else {
    const Reproduction* r = find_reproduction(id);
    if (!r) throw UsageError("unknown example id '" + id + "' (see reproduce --list)");
    todo.push_back(r);
  }
  bool ok = true;
  for (const auto* r : todo) {
    out << r->id << ": " << r->title << "\n";
    Report rep(out);
    r->run(rep);
    ok = ok && rep.ok();
  }
  return ok ? kOk : kFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with staggered Virasoro modules"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Common o;
  std::string h, left, right, beta, w1, w2, id;
  int max_grade = 15, grade = 1, m = 5;
  unsigned seed = 1;
  bool list = false;

  auto* classify_cmd = app.add_subcommand("classify", "singular-vector lattice of a Verma module");
  add_t(classify_cmd, o);
  classify_cmd->add_option("--h", h, "highest weight")->required();
  classify_cmd->add_option("--max-grade", max_grade, "largest grade listed");

  auto* singular_cmd = app.add_subcommand("singular", "normalised singular vector at a grade");
  add_t(singular_cmd, o);
  singular_cmd->add_option("--h", h, "highest weight")->required();
  singular_cmd->add_option("--grade", grade, "grade")->required()->check(CLI::PositiveNumber);

  auto* gram_cmd = app.add_subcommand("gram", "Shapovalov form at a grade");
  add_t(gram_cmd, o);
  gram_cmd->add_option("--h", h, "highest weight")->required();
  gram_cmd->add_option("--grade", grade, "grade")->required()->check(CLI::NonNegativeNumber);

  auto* kac_cmd = app.add_subcommand("kacdet-check", "Gram determinants against the Kac product");
  add_t(kac_cmd, o);
  kac_cmd->add_option("--h", h, "highest weight (default: random samples)");
  kac_cmd->add_option("--max-grade", max_grade, "largest grade")->check(CLI::PositiveNumber);
  kac_cmd->add_option("--seed", seed, "seed for the sampled weights");

  auto* inter_cmd = app.add_subcommand("intersection", "basis of U+L1 cap U+L2 at grade -m");
  inter_cmd->add_option("--m", m, "grade")->required();
  inter_cmd->add_flag("--json", o.json, "machine-readable output");

  auto module_opts = [&](CLI::App* cmd) {
    add_t(cmd, o);
    cmd->add_option("--left", left, "left module, e.g. 0/3 or 0/12,15")->required();
    cmd->add_option("--right", right, "right module, e.g. 1/6 or 1")->required();
  };
  auto* exists_cmd = app.add_subcommand("exists", "decide existence of staggered modules");
  module_opts(exists_cmd);

  auto* beta_cmd = app.add_subcommand("beta", "beta-invariants of given data");
  module_opts(beta_cmd);
  beta_cmd->add_option("--omega1", w1, "L_1 y in left Verma coordinates, comma separated");
  beta_cmd->add_option("--omega2", w2, "L_2 y in left Verma coordinates, comma separated");
  beta_cmd->add_option("--beta", beta, "build data with these invariants instead");

  auto* oracle_cmd = app.add_subcommand("oracle", "singular-vector search for given invariants");
  module_opts(oracle_cmd);
  oracle_cmd->add_option("--beta", beta, "beta-invariants, comma separated");

  auto* table_cmd = app.add_subcommand("table-6-12", "generic-t invariant for h = h_{r,s}, rs <= 6");
  table_cmd->add_flag("--json", o.json, "machine-readable output");

  auto* repro_cmd = app.add_subcommand("reproduce", "rerun a worked example against its golden values");
  repro_cmd->add_option("id", id, "example id, or 'all'");
  repro_cmd->add_flag("--list", list, "list example ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, h, max_grade, out);
    if (*singular_cmd) return cmd_singular(o, h, grade, out);
    if (*gram_cmd) return cmd_gram(o, h, grade, out);
    if (*kac_cmd) return cmd_kacdet(o, h, max_grade, seed, out);
    if (*inter_cmd) return cmd_intersection(m, o.json, out);
    if (*exists_cmd) return cmd_exists(o, left, right, out);
    if (*beta_cmd) return cmd_beta(o, left, right, w1, w2, beta, out);
    if (*oracle_cmd) return cmd_oracle(o, left, right, beta, out);
    if (*table_cmd) return cmd_table(o.json, out);
    if (*repro_cmd) return cmd_reproduce(id, list, out);
  } catch (const IncompatibleError& e) {
    err << "incompatible: " << e.what() << "\n";
    return kIncompatible;
  } catch (const UnsupportedError& e) {
    err << "unsupported configuration: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace virstag::cli
