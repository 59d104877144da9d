#include "virstag/staggered.hpp"

#include <algorithm>
#include <sstream>

#include "virstag/intersection.hpp"
#include "virstag/scalar.hpp"

namespace virstag {

std::string describe(const HWSpec& m) {
  std::ostringstream os;
  os << "V_" << m.h.get_str();
  if (!m.grades.empty()) {
    os << "/";
    if (m.grades.size() > 1) os << "(";
    for (std::size_t i = 0; i < m.grades.size(); ++i) {
      if (i) os << "+";
      os << "V_" << Q(m.h + m.grades[i]).get_str();
    }
    if (m.grades.size() > 1) os << ")";
  }
  return os.str();
}

std::string to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Zero: return "0";
    case CaseTag::One: return "1";
    case CaseTag::OnePrime: return "1'";
    case CaseTag::Two: return "2";
    case CaseTag::TwoPrime: return "2'";
  }
  return "?";
}

struct Staggered::Impl {
  std::map<const HWModule<Q>*, std::unique_ptr<HWModule<Q>>> data_modules;
  std::map<std::pair<const HWModule<Q>*, int>, std::unique_ptr<HWModule<Q>>> partner_modules;
  std::map<int, std::unique_ptr<HWModule<Q>>> radicals;
  int radical_depth = 0;
};

namespace {

Vec<Q> require_singular(const Verma<Q>& v, int n, const char* what) {
  auto s = find_singular_coords(v, n);
  if (!s) throw std::logic_error(std::string("missing singular vector: ") + what);
  return *s;
}

// X applied to v, X given by coordinates at grade d, v at grade n.
Vec<Q> apply_coords(const Verma<Q>& verma, const Vec<Q>& x, int d, int n, const Vec<Q>& v) {
  Vec<Q> out = Verma<Q>::zero(n + d);
  const auto& parts = partitions(d);
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (!is_zero(x[i])) axpy(out, x[i], verma.apply_lowering(parts[i], n, v));
  return out;
}

// Orthogonal basis of a nondegenerate symmetric form: rows z (coordinates
// on the given basis) with norms n.
void orthogonalise(std::vector<Vec<Q>> g, std::vector<Vec<Q>>& z, std::vector<Q>& norms) {
  int k = static_cast<int>(g.size());
  std::vector<Vec<Q>> t(k, Vec<Q>(k, Q(0)));
  for (int i = 0; i < k; ++i) t[i][i] = 1;
  std::vector<int> active(k);
  for (int i = 0; i < k; ++i) active[i] = i;
  while (!active.empty()) {
    int piv = -1;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (int i : active)
      if (!is_zero(g[i][i]) && pivot_cost(g[i][i]) < best) {
        piv = i;
        best = pivot_cost(g[i][i]);
      }
    if (piv < 0) {
      // all remaining norms vanish: combine a pair with nonzero pairing
      for (int i : active) {
        for (int j : active)
          if (j != i && !is_zero(g[i][j])) {
            Q gii = g[i][i] + 2 * g[i][j] + g[j][j];
            for (int l : active) g[i][l] += g[j][l];
            for (int l : active) g[l][i] = g[i][l];
            g[i][i] = gii;
            axpy(t[i], Q(1), t[j]);
            piv = i;
            break;
          }
        if (piv >= 0) break;
      }
      if (piv < 0) throw std::logic_error("norm-degenerate complement in projection");
    }
    Q nrm = g[piv][piv];
    z.push_back(t[piv]);
    norms.push_back(nrm);
    active.erase(std::find(active.begin(), active.end(), piv));
    for (int j : active) {
      if (is_zero(g[j][piv])) continue;
      Q f = g[j][piv] / nrm;
      for (int l : active) g[j][l] -= f * g[piv][l];
      axpy(t[j], Q(-f), t[piv]);
    }
    for (int j : active)
      for (int l : active) g[l][j] = g[j][l];
  }
}

}  // namespace

Staggered::Staggered(StaggeredProblem p) : p_(std::move(p)), impl_(std::make_unique<Impl>()) {
  if (p_.t == 0) throw std::invalid_argument("t must be nonzero");
  c_ = central_charge(p_.t);
  lv_ = verma_module(p_.left.h, c_);
  rv_ = verma_module(p_.right.h, c_);

  auto generators = [&](HWSpec& spec, const std::shared_ptr<const Verma<Q>>& v, const char* side) {
    std::sort(spec.grades.begin(), spec.grades.end());
    std::vector<std::pair<int, Vec<Q>>> gens;
    for (int g : spec.grades) {
      if (g <= 0) throw InvalidModuleError(std::string(side) + " module: quotient grades must be positive");
      auto s = find_singular_coords(*v, g);
      if (!s)
        throw InvalidModuleError(std::string(side) + " module: V_" + spec.h.get_str() +
                                 " has no singular vector at grade " + std::to_string(g));
      HWModule<Q> sub(v, gens);
      if (sub.is_zero_vector(g, *s))
        throw InvalidModuleError(std::string(side) + " module: the singular vector at grade " +
                                 std::to_string(g) + " is already in the quotiented submodule");
      gens.emplace_back(g, *s);
    }
    return gens;
  };
  auto lg = generators(p_.left, lv_, "left");
  auto rg = generators(p_.right, rv_, "right");
  if (lg.size() > 2 || rg.size() > 2) throw InvalidModuleError("at most two quotient grades per module");
  hlft_ = std::make_unique<HWModule<Q>>(lv_, lg);
  tver_ = std::make_unique<HWModule<Q>>(lv_, std::vector<std::pair<int, Vec<Q>>>{});

  Q diff = p_.right.h - p_.left.h;
  if (diff.get_den() != 1 || diff < 0)
    throw IncompatibleError("h_right - h_left = " + diff.get_str() + " is not a nonnegative integer");
  ell_ = static_cast<int>(diff.get_num().get_si());
  if (p_.left.grades.empty() && !p_.right.grades.empty())
    throw IncompatibleError("the left module is a Verma module but the right module is not");
  auto w0 = find_singular_coords(*lv_, ell_);
  if (!w0)
    throw IncompatibleError("the left Verma module has no singular vector at grade " + std::to_string(ell_));
  omega0_ = *w0;
  if (hlft_->is_zero_vector(ell_, omega0_))
    throw IncompatibleError("the singular vector at grade " + std::to_string(ell_) + " vanishes in the left module");

  int maxg = ell_;
  for (int g : p_.right.grades) maxg = std::max(maxg, ell_ + g);
  Structure st = classify(p_.left.h, p_.t, maxg);
  points_.push_back({0, 0, 0, Vec<Q>{Q(1)}, true});
  for (const auto& e : st.entries) {
    SingularPoint sp{e.grade, e.sign, e.rank, require_singular(*lv_, e.grade, "left lattice"), true};
    sp.nonzero_in_left = !hlft_->is_zero_vector(e.grade, sp.coords);
    points_.push_back(std::move(sp));
  }
  rho_ = points_[point_at(ell_)].rank;

  if (!p_.right.grades.empty()) {
    Structure rst = classify(p_.right.h, p_.t, p_.right.grades.back());
    for (const auto& [g, coords] : rg) {
      const LatticeEntry* e = rst.at_grade(g);
      if (!e) throw std::logic_error("right singular vector missing from the lattice");
      rgens_.push_back({g, e->rank, coords});
      Vec<Q> wbar = apply_coords(*lv_, coords, g, ell_, omega0_);
      if (!hlft_->is_zero_vector(ell_ + g, wbar))
        throw IncompatibleError("the right quotient at grade " + std::to_string(g) +
                                " does not annihilate omega0 in the left module");
    }
  }

  if (rho_ >= 1) {
    b_ = static_cast<int>(targets(*hlft_, rho_ - 1, true).size());
    const SingularPoint& w = points_[point_at(ell_)];
    bool partner = false;
    for (const auto& sp : points_)
      if (sp.rank == w.rank && sp.sign == -w.sign && w.sign != 0 && sp.nonzero_in_left) partner = true;
    bool prime = w.sign == +1 && partner;
    if (b_ <= 1)
      case_ = prime ? CaseTag::OnePrime : CaseTag::One;
    else
      case_ = prime ? CaseTag::TwoPrime : CaseTag::Two;
  }
  if (!rgens_.empty()) {
    for (const auto& r : rgens_)
      if (r.rank != rgens_.front().rank) throw UnsupportedError("right generators of different ranks");
    int r = rho_ + rgens_.front().rank - 1;
    g_ = static_cast<int>(targets(*hlft_, r, true).size());
  }
}

Staggered::~Staggered() = default;

std::vector<int> Staggered::rho_bar() const {
  std::vector<int> out;
  for (const auto& r : rgens_) out.push_back(r.rank);
  return out;
}

int Staggered::point_at(int grade) const {
  for (int i = 0; i < static_cast<int>(points_.size()); ++i)
    if (points_[i].grade == grade) return i;
  throw std::logic_error("no singular vector at grade " + std::to_string(grade));
}

std::vector<int> Staggered::targets(const HWModule<Q>&, int rank, bool require_nonzero_in_left) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(points_.size()); ++i)
    if (points_[i].rank == rank && (!require_nonzero_in_left || points_[i].nonzero_in_left)) out.push_back(i);
  return out;
}

DataPair Staggered::zero_data() const { return {Verma<Q>::zero(ell_ - 1), Verma<Q>::zero(ell_ - 2)}; }

DataPair Staggered::gauge_apply(const Vec<Q>& u, const DataPair& d) const {
  DataPair out = d;
  if (ell_ >= 1) axpy(out.omega1, Q(1), lv_->raise(1, ell_, u));
  if (ell_ >= 2) axpy(out.omega2, Q(1), lv_->raise(2, ell_, u));
  if (ell_ >= 1) hlft_->reduce(ell_ - 1, out.omega1);
  if (ell_ >= 2) hlft_->reduce(ell_ - 2, out.omega2);
  return out;
}

bool Staggered::is_admissible(const DataPair& d) const {
  for (int m = 5; m <= ell_; ++m)
    for (const auto& ie : intersection_basis(m)) {
      Vec<Q> v = lv_->apply(ie.u1, ell_ - 1, d.omega1);
      axpy(v, Q(1), lv_->apply(ie.u2, ell_ - 2, d.omega2));
      if (!hlft_->is_zero_vector(ell_ - m, v)) return false;
    }
  return true;
}

std::unique_ptr<StagModule<Q>> Staggered::make_module(const DataPair& d) const {
  return std::make_unique<StagModule<Q>>(lv_, rv_, ell_, omega0_, d.omega1, d.omega2);
}

const HWModule<Q>& Staggered::data_module(const HWModule<Q>& view) const {
  auto& slot = impl_->data_modules[&view];
  if (!slot) {
    std::vector<std::pair<int, Vec<Q>>> gens;
    for (int i : targets(view, rho_ - 1, &view == hlft_.get())) gens.emplace_back(points_[i].grade, points_[i].coords);
    slot = std::make_unique<HWModule<Q>>(lv_, std::move(gens));
  }
  return *slot;
}

std::vector<Vec<Q>> Staggered::data_basis(const HWModule<Q>& view, int grade) const {
  if (grade < 0) return {};
  Subspace<Q> span(Verma<Q>::dim(grade), ones_priority_order(grade));
  for (const auto& row : data_module(view).submodule(grade).rows()) span.insert(view.normal_form(grade, row));
  return span.rows();
}

Q Staggered::read_target(const HWModule<Q>& view, int point, const Vec<Q>& value) const {
  const SingularPoint& tp = points_[point];
  if (tp.sign == +1) {
    for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
      const SingularPoint& sp = points_[i];
      if (sp.rank != tp.rank || sp.sign != -1) continue;
      auto& slot = impl_->partner_modules[{&view, i}];
      if (!slot) {
        auto gens = view.generators();
        gens.emplace_back(sp.grade, sp.coords);
        slot = std::make_unique<HWModule<Q>>(lv_, std::move(gens));
      }
      return proportionality(*slot, tp.grade, value, tp.coords);
    }
  }
  return proportionality(view, tp.grade, value, tp.coords);
}

std::vector<Vec<Q>> Staggered::beta_chis() const {
  std::vector<Vec<Q>> out;
  if (rho_ < 1) return out;
  for (int i : targets(*hlft_, rho_ - 1, true)) {
    auto v = verma_module(Q(p_.left.h + points_[i].grade), c_);
    out.push_back(require_singular(*v, ell_ - points_[i].grade, "beta operator"));
  }
  return out;
}

DataPair Staggered::data_from_beta_in(const HWModule<Q>& view, const std::vector<Q>& target) const {
  if (static_cast<int>(target.size()) != b_)
    throw std::invalid_argument("expected " + std::to_string(b_) + " beta values");
  if (ell_ == 0) return zero_data();
  bool in_left = &view == hlft_.get();
  auto b1 = data_basis(view, ell_ - 1);
  auto b2 = data_basis(view, ell_ - 2);
  int nb = static_cast<int>(b1.size() + b2.size());
  auto basis_pair = [&](int e) {
    DataPair d = zero_data();
    if (e < static_cast<int>(b1.size()))
      d.omega1 = b1[e];
    else
      d.omega2 = b2[e - b1.size()];
    return d;
  };

  std::vector<Vec<Q>> rows;
  Vec<Q> rhs;
  for (int m = 5; m <= ell_; ++m)
    for (const auto& ie : intersection_basis(m)) {
      std::vector<Vec<Q>> cols;
      for (const auto& e : b1) cols.push_back(view.normal_form(ell_ - m, lv_->apply(ie.u1, ell_ - 1, e)));
      for (const auto& e : b2) cols.push_back(view.normal_form(ell_ - m, lv_->apply(ie.u2, ell_ - 2, e)));
      for (int k = 0; k < Verma<Q>::dim(ell_ - m); ++k) {
        Vec<Q> row(nb, Q(0));
        for (int e = 0; e < nb; ++e) row[e] = cols[e][k];
        if (is_zero_vec(row)) continue;
        rows.push_back(std::move(row));
        rhs.push_back(0);
      }
    }

  // every target of the view gets a row; those vanishing in the left module are pinned to zero
  auto all = targets(view, rho_ - 1, in_left);
  auto live = targets(view, rho_ - 1, true);
  std::vector<Vec<Q>> beta_rows(all.size(), Vec<Q>(nb, Q(0)));
  for (int e = 0; e < nb; ++e) {
    auto mod = make_module(basis_pair(e));
    for (std::size_t i = 0; i < all.size(); ++i) {
      const SingularPoint& tp = points_[all[i]];
      auto v = verma_module(Q(p_.left.h + tp.grade), c_);
      Vec<Q> chi = require_singular(*v, ell_ - tp.grade, "beta operator");
      Vec<Q> val = mod->apply_adjoint(chi, ell_ - tp.grade, mod->y()).left;
      beta_rows[i][e] = read_target(view, all[i], val);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto it = std::find(live.begin(), live.end(), all[i]);
    rows.push_back(beta_rows[i]);
    rhs.push_back(it == live.end() ? Q(0) : target[it - live.begin()]);
  }
  auto sol = solve_affine(rows, rhs, nb);
  if (!sol.consistent) throw std::domain_error("no admissible data with the requested invariants");
  DataPair d = zero_data();
  for (int e = 0; e < nb; ++e) {
    if (is_zero(sol.point[e])) continue;
    if (e < static_cast<int>(b1.size()))
      axpy(d.omega1, sol.point[e], b1[e]);
    else
      axpy(d.omega2, sol.point[e], b2[e - b1.size()]);
  }
  return d;
}

DataPair Staggered::data_from_beta(const std::vector<Q>& target) const { return data_from_beta_in(*hlft_, target); }

Vec<Q> Staggered::project(const HWModule<Q>& view, StagModule<Q>& mod, StagVec<Q>& ybar, int rank,
                          std::vector<ProjectionStep>* log) const {
  int m = ybar.grade;
  bool in_left = &view == hlft_.get();
  Vec<Q> total = Verma<Q>::zero(m);
  int max_target = ell_;
  for (const auto& r : rgens_) max_target = std::max(max_target, ell_ + r.grade);
  for (const auto& src : points_) {
    if (src.rank > rank - 2 || src.grade >= m) continue;
    if (in_left && !src.nonzero_in_left) continue;
    int d = m - src.grade;
    auto vs = verma_module(Q(p_.left.h + src.grade), c_);
    auto& rad = impl_->radicals[src.grade];
    if (!rad) {
      Structure st = classify(Q(p_.left.h + src.grade), p_.t, max_target - src.grade);
      std::vector<std::pair<int, Vec<Q>>> gens;
      for (const auto& e : st.entries)
        if (e.rank == 1) gens.emplace_back(e.grade, require_singular(*vs, e.grade, "radical"));
      rad = std::make_unique<HWModule<Q>>(vs, std::move(gens));
    }
    std::vector<int> comp = rad->quotient_basis(d);
    if (comp.empty()) continue;
    const auto& gram = vs->gram(d);
    std::vector<Vec<Q>> gc(comp.size(), Vec<Q>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) gc[i][j] = gram[comp[i]][comp[j]];
    ProjectionStep step;
    step.source_grade = src.grade;
    step.source_sign = src.sign;
    step.source_rank = src.rank;
    std::vector<Vec<Q>> z;
    orthogonalise(std::move(gc), z, step.norms);
    auto images = mod.adjoint_images(comp, d, ybar);
    for (const auto& im : images)
      if (!is_zero_vec(im.right)) throw std::logic_error("projection image has a right component");
    Vec<Q> w(comp.size(), Q(0));
    for (std::size_t mu = 0; mu < z.size(); ++mu) {
      Vec<Q> v = Verma<Q>::zero(src.grade);
      for (std::size_t k = 0; k < comp.size(); ++k)
        if (!is_zero(z[mu][k])) axpy(v, z[mu][k], images[k].left);
      Q zeta = proportionality(view, src.grade, v, src.coords);
      step.zeta.push_back(zeta);
      if (!is_zero(zeta)) axpy(w, Q(zeta / step.norms[mu]), z[mu]);
    }
    const auto& parts = partitions(d);
    Vec<Q> u = Verma<Q>::zero(m);
    for (std::size_t k = 0; k < comp.size(); ++k)
      if (!is_zero(w[k])) axpy(u, Q(-w[k]), lv_->apply_lowering(parts[comp[k]], src.grade, src.coords));
    axpy(ybar.left, Q(1), u);
    axpy(total, Q(1), u);
    if (log) {
      for (auto& zz : z) {
        Vec<Q> full = Verma<Q>::zero(d);
        for (std::size_t k = 0; k < comp.size(); ++k) full[comp[k]] = zz[k];
        step.z.push_back(std::move(full));
      }
      log->push_back(std::move(step));
    }
  }
  return total;
}

ProjectionResult Staggered::project_data(const DataPair& d) const {
  ProjectionResult out;
  if (ell_ == 0) {
    out.data = d;
    return out;
  }
  auto mod = make_module(d);
  StagVec<Q> y = mod->y();
  out.u = project(*hlft_, *mod, y, rho_, &out.steps);
  out.data = gauge_apply(out.u, d);
  return out;
}

std::vector<Q> Staggered::beta_invariants(const DataPair& d) const {
  if (ell_ == 0) throw std::domain_error("beta-invariants are undefined when ell = 0");
  auto mod = make_module(d);
  StagVec<Q> y = mod->y();
  project(*hlft_, *mod, y, rho_, nullptr);
  std::vector<Q> out;
  for (int i : targets(*hlft_, rho_ - 1, true)) {
    const SingularPoint& tp = points_[i];
    auto v = verma_module(Q(p_.left.h + tp.grade), c_);
    Vec<Q> chi = require_singular(*v, ell_ - tp.grade, "beta operator");
    out.push_back(read_target(*hlft_, i, mod->apply_adjoint(chi, ell_ - tp.grade, y).left));
  }
  return out;
}

Q Staggered::naive_beta(const DataPair& d) const {
  if (ell_ == 0) throw std::domain_error("beta-invariants are undefined when ell = 0");
  auto mod = make_module(d);
  Vec<Q> v = mod->apply_adjoint(omega0_, ell_, mod->y()).left;
  return hlft_->normal_form(0, v)[0];
}

std::vector<Q> Staggered::critical_values(const DataPair& d, int eps) const {
  const RightGen& rg = rgens_.at(eps);
  int m = ell_ + rg.grade;
  int r = points_[point_at(m)].rank;
  auto mod = make_module(d);
  StagVec<Q> ybar = mod->from_right(rg.grade, rg.coords);
  project(*tver_, *mod, ybar, r, nullptr);
  std::vector<Q> out;
  for (int i : targets(*tver_, r - 1, true)) {
    const SingularPoint& tp = points_[i];
    auto v = verma_module(Q(p_.left.h + tp.grade), c_);
    Vec<Q> chi = require_singular(*v, m - tp.grade, "critical operator");
    out.push_back(read_target(*tver_, i, mod->apply_adjoint(chi, m - tp.grade, ybar).left));
  }
  return out;
}

std::vector<AffineConstraint> Staggered::critical_constraints() const {
  std::vector<AffineConstraint> out;
  if (!critical()) return out;
  std::vector<DataPair> data{zero_data()};
  for (int i = 0; i < b_; ++i) {
    std::vector<Q> e(b_, Q(0));
    e[i] = 1;
    data.push_back(data_from_beta_in(*tver_, e));
  }
  for (int eps = 0; eps < n(); ++eps) {
    std::vector<std::vector<Q>> vals;
    for (const auto& d : data) vals.push_back(critical_values(d, eps));
    for (std::size_t k = 0; k < vals[0].size(); ++k) {
      AffineConstraint c;
      c.offset = vals[0][k];
      for (int i = 0; i < b_; ++i) c.coeffs.push_back(vals[i + 1][k] - vals[0][k]);
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

struct VarpiSystem {
  std::vector<int> basis;      // quotient basis columns at grade m
  std::vector<Vec<Q>> rows;    // [A | rhs_0 | rhs_1 - rhs_0 | ...]
};

}  // namespace

// Singular-vector search X y - varpi in the extension over the left module,
// one right-hand side per data point.
static VarpiSystem varpi_system(const HWModule<Q>& hlft, const Verma<Q>& lv, int ell, int g, const Vec<Q>& xbar,
                                const std::vector<std::unique_ptr<StagModule<Q>>>& mods) {
  int m = ell + g;
  VarpiSystem sys;
  sys.basis = hlft.quotient_basis(m);
  int nq = static_cast<int>(sys.basis.size());
  int n1 = Verma<Q>::dim(m - 1), n2 = std::max(0, Verma<Q>::dim(m - 2));
  std::vector<Vec<Q>> cols;
  for (int q : sys.basis) {
    Vec<Q> e = Verma<Q>::basis_vector(m, q);
    Vec<Q> c = hlft.normal_form(m - 1, lv.raise(1, m, e));
    if (m >= 2) {
      Vec<Q> c2 = hlft.normal_form(m - 2, lv.raise(2, m, e));
      c.insert(c.end(), c2.begin(), c2.end());
    }
    cols.push_back(std::move(c));
  }
  std::vector<Vec<Q>> rhs;
  for (const auto& mod : mods) {
    StagVec<Q> yb = mod->from_right(g, xbar);
    StagVec<Q> r1 = mod->raise(1, yb), r2 = mod->raise(2, yb);
    if (!is_zero_vec(r1.right) || !is_zero_vec(r2.right))
      throw std::logic_error("right singular vector is not singular");
    Vec<Q> r = hlft.normal_form(m - 1, r1.left);
    if (m >= 2) {
      Vec<Q> s = hlft.normal_form(m - 2, r2.left);
      r.insert(r.end(), s.begin(), s.end());
    }
    rhs.push_back(std::move(r));
  }
  for (int k = 0; k < n1 + n2; ++k) {
    Vec<Q> row(nq + rhs.size(), Q(0));
    for (int q = 0; q < nq; ++q) row[q] = cols[q][k];
    for (std::size_t i = 0; i < rhs.size(); ++i) row[nq + i] = i == 0 ? rhs[0][k] : Q(rhs[i][k] - rhs[0][k]);
    if (!is_zero_vec(row)) sys.rows.push_back(std::move(row));
  }
  return sys;
}

Vec<Q> Staggered::varpi(const DataPair& d, int eps) const {
  if (eps < 0 || eps >= n()) throw std::invalid_argument("no right generator with that index");
  if (!is_admissible(d)) throw std::domain_error("inconsistent system: the data is not admissible");
  std::vector<std::unique_ptr<StagModule<Q>>> mods;
  mods.push_back(make_module(d));
  const RightGen& rg = rgens_[eps];
  VarpiSystem sys = varpi_system(*hlft_, *lv_, ell_, rg.grade, rg.coords, mods);
  int nq = static_cast<int>(sys.basis.size());
  std::vector<Vec<Q>> a;
  Vec<Q> rhs;
  for (const auto& row : sys.rows) {
    a.emplace_back(row.begin(), row.begin() + nq);
    rhs.push_back(row[nq]);
  }
  auto sol = solve_affine(a, rhs, nq);
  if (!sol.consistent) throw std::domain_error("inconsistent system: no singular vector above the right generator");
  if (!sol.directions.empty()) throw std::logic_error("varpi is not unique");
  Vec<Q> out = Verma<Q>::zero(ell_ + rg.grade);
  for (int k = 0; k < nq; ++k) out[sys.basis[k]] = sol.point[k];
  return out;
}

OracleRegion Staggered::oracle_region() const {
  std::vector<std::unique_ptr<StagModule<Q>>> mods;
  mods.push_back(make_module(zero_data()));
  for (int i = 0; i < b_; ++i) {
    std::vector<Q> e(b_, Q(0));
    e[i] = 1;
    mods.push_back(make_module(data_from_beta(e)));
  }
  OracleRegion out;
  for (const auto& rg : rgens_) {
    VarpiSystem sys = varpi_system(*hlft_, *lv_, ell_, rg.grade, rg.coords, mods);
    int nq = static_cast<int>(sys.basis.size());
    Echelon<Q> e = rref(sys.rows, nq);
    VarpiWitness w;
    w.grade = ell_ + rg.grade;
    w.unique = e.rank == nq;
    w.offset = Verma<Q>::zero(w.grade);
    w.coeffs.assign(b_, Verma<Q>::zero(w.grade));
    for (int r = 0; r < e.rank; ++r) {
      int col = sys.basis[e.pivots[r]];
      w.offset[col] = e.rows[r][nq];
      for (int i = 0; i < b_; ++i) w.coeffs[i][col] = e.rows[r][nq + 1 + i];
    }
    for (std::size_t r = e.rank; r < e.rows.size(); ++r) {
      AffineConstraint c;
      c.offset = e.rows[r][nq];
      for (int i = 0; i < b_; ++i) c.coeffs.push_back(e.rows[r][nq + 1 + i]);
      if (is_zero(c.offset) && std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Q& x) { return is_zero(x); }))
        continue;
      out.constraints.push_back(std::move(c));
    }
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

std::optional<std::vector<Vec<Q>>> Staggered::oracle_singular(const std::vector<Q>& beta) const {
  std::vector<std::unique_ptr<StagModule<Q>>> mods;
  mods.push_back(make_module(data_from_beta(beta)));
  std::vector<Vec<Q>> out;
  for (const auto& rg : rgens_) {
    VarpiSystem sys = varpi_system(*hlft_, *lv_, ell_, rg.grade, rg.coords, mods);
    int nq = static_cast<int>(sys.basis.size());
    std::vector<Vec<Q>> a;
    Vec<Q> rhs;
    for (const auto& row : sys.rows) {
      a.emplace_back(row.begin(), row.begin() + nq);
      rhs.push_back(row[nq]);
    }
    auto sol = solve_affine(a, rhs, nq);
    if (!sol.consistent) return std::nullopt;
    Vec<Q> w = Verma<Q>::zero(ell_ + rg.grade);
    for (int k = 0; k < nq; ++k) w[sys.basis[k]] = sol.point[k];
    out.push_back(std::move(w));
  }
  return out;
}

AffineSolution<Q> solve_constraints(const std::vector<AffineConstraint>& cs, int dim) {
  std::vector<Vec<Q>> a;
  Vec<Q> rhs;
  for (const auto& c : cs) {
    Vec<Q> row = c.coeffs;
    row.resize(dim, Q(0));
    a.push_back(std::move(row));
    rhs.push_back(-c.offset);
  }
  return solve_affine(a, rhs, dim);
}

bool same_region(const std::vector<AffineConstraint>& a, const std::vector<AffineConstraint>& b, int dim) {
  auto sa = solve_constraints(a, dim), sb = solve_constraints(b, dim);
  if (!sa.consistent || !sb.consistent) return sa.consistent == sb.consistent;
  auto holds_on = [dim](const std::vector<AffineConstraint>& cs, const AffineSolution<Q>& s) {
    for (const auto& c : cs) {
      Vec<Q> co = c.coeffs;
      co.resize(dim, Q(0));
      if (!is_zero(Q(dot(co, s.point) + c.offset))) return false;
      for (const auto& dir : s.directions)
        if (!is_zero(dot(co, dir))) return false;
    }
    return true;
  };
  return holds_on(a, sb) && holds_on(b, sa);
}

StaggeredAnswer Staggered::exists() const {
  StaggeredAnswer a;
  a.beta_dim = b_;
  a.case_tag = case_;
  auto full_space = [&] {
    a.exists = true;
    a.point.assign(b_, Q(0));
    for (int i = 0; i < b_; ++i) {
      std::vector<Q> e(b_, Q(0));
      e[i] = 1;
      a.directions.push_back(std::move(e));
    }
  };
  if (!critical()) {
    a.pathway = n() == 0 ? "right-verma" : "non-critical";
    full_space();
    return a;
  }
  a.constraints = critical_constraints();
  if (b_ > 0) {
    a.pathway = "critical";
    auto sol = solve_constraints(a.constraints, b_);
    a.exists = sol.consistent;
    if (sol.consistent) {
      a.point = sol.point;
      a.directions = sol.directions;
    } else {
      a.reason = "the critical-rank constraints have no common solution";
    }
    return a;
  }
  bool direct = std::all_of(a.constraints.begin(), a.constraints.end(), [](const AffineConstraint& c) {
    return is_zero(c.offset);
  });
  bool prime = std::all_of(rgens_.begin(), rgens_.end(), [](const RightGen& r) { return r.rank == 1; });
  if (prime) {
    a.pathway = "rohsiepe";
    bool crit = true;
    for (const auto& r : rgens_) crit = crit && rohsiepe_exists(p_.right.h, p_.t, r.grade);
    if (crit != direct) throw std::logic_error("prime criterion disagrees with the computed invariant");
  } else {
    a.pathway = "direct";
    OracleRegion o = oracle_region();
    bool oracle = solve_constraints(o.constraints, 0).consistent;
    if (oracle != direct)
      throw UnsupportedError("composite right singular vector with no beta-invariants: the computed invariant "
                             "and the singular-vector search disagree");
  }
  a.exists = direct;
  if (!direct) a.reason = "the critical-rank invariant is nonzero";
  return a;
}

StaggeredAnswer exists(const StaggeredProblem& p) {
  try {
    return Staggered(p).exists();
  } catch (const IncompatibleError& e) {
    StaggeredAnswer a;
    a.incompatible = true;
    a.reason = e.what();
    return a;
  }
}

bool rohsiepe_exists(const Q& h, const Q& t) { return rohsiepe_exists(h, t, -1); }

bool rohsiepe_exists(const Q& h, const Q& t, int xbar_grade) {
  if (t == 0) throw std::invalid_argument("t must be nonzero");
  std::vector<KacLabel> labels;
  for (int bound = 64; bound <= 4096 && labels.empty(); bound *= 8) labels = kac_labels(h, t, bound);
  if (labels.empty()) return false;
  int min_prod = labels.front().r * labels.front().s;
  for (const auto& l : labels) min_prod = std::min(min_prod, l.r * l.s);
  if (xbar_grade >= 0 && xbar_grade != min_prod) return false;
  Z p = abs(Z(t.get_den())), q = abs(Z(t.get_num()));
  for (const auto& l : labels) {
    if (l.r * l.s != min_prod) continue;
    Z r = l.r, s = l.s;
    if (r % p == 0 && s % q == 0 && p * s != q * r) return true;
  }
  return false;
}

RatFunc generic_beta_bar(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("Kac labels must be positive");
  RatFunc t = RatFunc::t();
  RatFunc h = kac_weight(r, s, t);
  auto v = verma_module(h, central_charge(t));
  int g = r * s;
  auto xbar = find_singular_coords(*v, g);
  if (!xbar) throw std::logic_error("no generic singular vector at grade rs");
  StagModule<RatFunc> mod(v, v, 0, Vec<RatFunc>{RatFunc(1)}, {}, {});
  StagVec<RatFunc> val = mod.apply_adjoint(*xbar, g, mod.from_right(g, *xbar));
  if (!is_zero_vec(val.right)) throw std::logic_error("generic singular vector has nonzero norm");
  return val.left[0];
}

std::vector<Q> generic_existence_set(int r, int s, const RatFunc& value) {
  std::vector<Q> out;
  for (const Q& t0 : rational_roots(value.num())) {
    if (t0 == 0) continue;
    Q h = kac_weight(r, s, t0);
    bool minimal = true;
    for (const auto& l : kac_labels(h, t0, r * s))
      if (l.r * l.s < r * s) minimal = false;
    if (minimal && rohsiepe_exists(h, t0, r * s)) out.push_back(t0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace virstag
