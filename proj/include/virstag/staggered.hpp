#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "virstag/stagmodule.hpp"
#include "virstag/structure.hpp"
#include "virstag/verma.hpp"

namespace virstag {

// Verma module V_h modulo the singular vectors at the listed grades
// (relative to h); no grades means the Verma module itself.
struct HWSpec {
  Q h;
  std::vector<int> grades;
};

struct StaggeredProblem {
  Q t;
  HWSpec left, right;
};

std::string describe(const HWSpec& m);

enum class CaseTag { Zero, One, OnePrime, Two, TwoPrime };
std::string to_string(CaseTag c);

// omega1 = L_1 y and omega2 = L_2 y in left Verma coordinates (grades ell-1, ell-2).
struct DataPair {
  Vec<Q> omega1, omega2;
};

struct IncompatibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidModuleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// sum_i coeffs[i] beta_i + offset (= 0 when used as a constraint).
struct AffineConstraint {
  std::vector<Q> coeffs;
  Q offset;
};

struct StaggeredAnswer {
  bool exists = false;
  bool incompatible = false;
  std::string reason;
  int beta_dim = 0;
  CaseTag case_tag = CaseTag::Zero;
  std::string pathway;
  std::vector<AffineConstraint> constraints;
  std::vector<Q> point;
  std::vector<std::vector<Q>> directions;
};

struct ProjectionStep {
  int source_grade = 0;
  int source_sign = 0;
  int source_rank = 0;
  std::vector<Vec<Q>> z;  // coordinates at grade (target - source) of V_{h + source}
  std::vector<Q> norms;
  std::vector<Q> zeta;
};

struct ProjectionResult {
  Vec<Q> u;
  DataPair data;
  std::vector<ProjectionStep> steps;
};

// varpi as an affine function of beta, in left Verma coordinates (normal form).
struct VarpiWitness {
  int grade = 0;
  bool unique = true;
  Vec<Q> offset;
  std::vector<Vec<Q>> coeffs;
};

struct OracleRegion {
  std::vector<AffineConstraint> constraints;
  std::vector<VarpiWitness> witnesses;  // one per right generator
};

struct SingularPoint {
  int grade = 0;
  int sign = 0;
  int rank = 0;
  Vec<Q> coords;
  bool nonzero_in_left = true;
};

class Staggered {
 public:
  // Throws IncompatibleError, InvalidModuleError.
  explicit Staggered(StaggeredProblem p);
  ~Staggered();

  const StaggeredProblem& problem() const { return p_; }
  const Q& c() const { return c_; }
  int ell() const { return ell_; }
  int rho() const { return rho_; }
  int b() const { return b_; }
  int g() const { return g_; }
  int n() const { return static_cast<int>(rgens_.size()); }
  std::vector<int> rho_bar() const;
  CaseTag case_tag() const { return case_; }
  bool critical() const { return n() > 0 && g_ > 0; }
  const Vec<Q>& omega0() const { return omega0_; }
  const HWModule<Q>& left_module() const { return *hlft_; }
  const Verma<Q>& left_verma() const { return *lv_; }
  const std::vector<SingularPoint>& left_points() const { return points_; }
  int right_grade(int eps) const { return rgens_.at(eps).grade; }
  const Vec<Q>& right_singular(int eps) const { return rgens_.at(eps).coords; }

  DataPair zero_data() const;
  DataPair gauge_apply(const Vec<Q>& u, const DataPair& d) const;
  bool is_admissible(const DataPair& d) const;
  DataPair data_from_beta(const std::vector<Q>& target) const;
  std::vector<Q> beta_invariants(const DataPair& d) const;
  Q naive_beta(const DataPair& d) const;
  ProjectionResult project_data(const DataPair& d) const;
  // The chi with omega0 = chi X for each rank rho-1 singular vector X (targets of beta).
  std::vector<Vec<Q>> beta_chis() const;

  std::vector<AffineConstraint> critical_constraints() const;
  Vec<Q> varpi(const DataPair& d, int eps) const;
  OracleRegion oracle_region() const;
  // varpi witnesses for every generator, or nullopt if some is missing.
  std::optional<std::vector<Vec<Q>>> oracle_singular(const std::vector<Q>& beta) const;

  StaggeredAnswer exists() const;

 private:
  struct RightGen {
    int grade;
    int rank;
    Vec<Q> coords;
  };
  struct Impl;

  std::vector<int> targets(const HWModule<Q>& view, int rank, bool require_nonzero_in_left) const;
  const HWModule<Q>& data_module(const HWModule<Q>& view) const;
  std::vector<Vec<Q>> data_basis(const HWModule<Q>& view, int grade) const;
  DataPair data_from_beta_in(const HWModule<Q>& view, const std::vector<Q>& target) const;
  Q read_target(const HWModule<Q>& view, int point, const Vec<Q>& value) const;
  Vec<Q> project(const HWModule<Q>& view, StagModule<Q>& m, StagVec<Q>& ybar, int rank,
                 std::vector<ProjectionStep>* log) const;
  std::unique_ptr<StagModule<Q>> make_module(const DataPair& d) const;
  std::vector<Q> critical_values(const DataPair& d, int eps) const;
  int point_at(int grade) const;

  StaggeredProblem p_;
  Q c_;
  std::shared_ptr<const Verma<Q>> lv_, rv_;
  std::unique_ptr<HWModule<Q>> hlft_, tver_;
  int ell_ = 0, rho_ = 0, b_ = 0, g_ = 0;
  CaseTag case_ = CaseTag::Zero;
  Vec<Q> omega0_;
  std::vector<RightGen> rgens_;
  std::vector<SingularPoint> points_;  // singular vectors of the left Verma, grade order, x first
  std::unique_ptr<Impl> impl_;
};

// Thm 7.1 decision; compatibility failures give an empty answer with a reason.
StaggeredAnswer exists(const StaggeredProblem& p);

bool same_region(const std::vector<AffineConstraint>& a, const std::vector<AffineConstraint>& b, int dim);
AffineSolution<Q> solve_constraints(const std::vector<AffineConstraint>& cs, int dim);

// Criterion for existence with all beta-invariants zero and prime X of
// minimal grade: h = h_{r,s} (minimal rs), p | r, q | s, |p| s != |q| r.
bool rohsiepe_exists(const Q& h, const Q& t);
// Same, for the prime singular vector of the given grade (false for the
// upper one of a braid pair).
bool rohsiepe_exists(const Q& h, const Q& t, int xbar_grade);

// beta-bar' for l = 0 and h = h_{r,s}(t) over Q(t).
RatFunc generic_beta_bar(int r, int s);
// Nonzero rational t with beta-bar'(t) = 0 at which the module exists.
std::vector<Q> generic_existence_set(int r, int s, const RatFunc& value);

}  // namespace virstag
