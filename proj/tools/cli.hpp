#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "virstag/staggered.hpp"

namespace virstag::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kIncompatible = 3, kUnsupported = 4 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "h" for a Verma module, "h/w" or "h/w1,w2" for the quotient by the
// singular vectors of weights w (absolute, as in V_0/V_3). A fractional h
// is written with a colon: "1/3:10/3", or "1/3:" for the Verma module.
HWSpec parse_module(const std::string& text);
Q parse_rational(const std::string& text);
std::vector<Q> parse_list(const std::string& text);

std::string format_vector(const Vec<Q>& coords, int grade);
std::string format_constraint(const AffineConstraint& c);

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void check(const std::string& what, const std::string& expected, const std::string& got);
  void check(const std::string& what, bool ok, const std::string& detail = "");
  // A published value that the computation does not reproduce, with the reason.
  void discrepancy(const std::string& what, const std::string& published, const std::string& got,
                   const std::string& why);
  void note(const std::string& text);
  bool ok() const { return ok_; }
  int discrepancies() const { return discrepancies_; }

 private:
  std::ostream& out_;
  bool ok_ = true;
  int discrepancies_ = 0;
};

struct Reproduction {
  std::string id;
  std::vector<std::string> aliases;
  std::string title;
  std::function<void(Report&)> run;
};

const std::vector<Reproduction>& catalog();
const Reproduction* find_reproduction(const std::string& id);

}  // namespace virstag::cli
