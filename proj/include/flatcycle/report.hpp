// Machine-readable run reports for the verification suites. Deterministic
// given (inputs, seed): checks are assembled in a stable order and carry both
// sides of the inequality they tested.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flatcycle {

struct ReportCheck {
  std::string name;
  bool pass = false;
  double lhs = 0.0;      // the quantity that must stay below rhs
  double rhs = 0.0;
  double residual = 0.0;  // lhs − rhs (negative when comfortably inside)
};

struct RunReport {
  std::string command;
  std::string inputs_digest;
  uint64_t seed = 0;
  std::vector<ReportCheck> checks;

  void add(const std::string& name, bool pass, double lhs, double rhs);
  bool all_pass() const;
  size_t failures() const;
};

// FNV-1a over the canonical parameter string; stable across runs.
std::string digest(const std::string& payload);

}  // namespace flatcycle
