// Scripted verification suites. Each returns a RunReport whose checks carry
// both sides of every inequality; the acceptance binary and the CLI `verify`
// subcommand both run off these.
#pragma once

#include <cstdint>

#include "flatcycle/report.hpp"

namespace flatcycle {

struct SuiteParams {
  uint64_t seed = 20250809;
  int samples = 0;     // 0 = suite default
  int n = 0;           // 0 = suite default sweep
  long k = 0;          // 0 = suite default sweep
  double eps = 1.0;
  double tol = 1e-9;
  bool inject_fault = false;  // harness self-test: force a detectable failure
};

RunReport suite_gnorm(const SuiteParams& p);       // duality certification
RunReport suite_oned(const SuiteParams& p);        // 1d closed-form exactness
RunReport suite_count(const SuiteParams& p);       // exact vs brute + bounds
RunReport suite_grid92(const SuiteParams& p);      // mass/norm sandwich
RunReport suite_quant94(const SuiteParams& p);     // class mass/norm/separation
RunReport suite_deform95(const SuiteParams& p);    // quantization pipeline
RunReport suite_kappa80(const SuiteParams& p);     // κ property suite
RunReport suite_beckmann(const SuiteParams& p);    // divergence-cost sandwich
RunReport suite_separation(const SuiteParams& p);  // exhaustive direction check
RunReport suite_entropy(const SuiteParams& p);     // cardinality and nets

// Dispatch by suite name ("gnorm", "grid92", "quant94", "deform95",
// "kappa80", "count10", plus "oned", "beckmann", "separation", "entropy").
RunReport run_suite(const std::string& name, const SuiteParams& p);

}  // namespace flatcycle
