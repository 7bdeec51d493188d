#pragma once

#include <string>
#include <vector>

#include "circis/numeric.hpp"

namespace circis {

struct VerifyBounds {
  i64 n_max = 0;    // 0 = suite default
  i64 lcm_max = 0;  // 0 = suite default
  unsigned seed = 0;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;  // one per check: "ok: ..." or "FAIL: ..."
};

// Suites: theorem-2-1, alpha-omega, two-paired, clique-formulas, lex-product,
// p4-free, appendix, closure. Throws UnknownSuite otherwise.
SuiteResult run_suite(const std::string& name, const VerifyBounds& bounds);

// Reproduces every claim of the paper's five worked examples.
SuiteResult run_fixtures();

std::vector<std::string> suite_names();

}  // namespace circis
