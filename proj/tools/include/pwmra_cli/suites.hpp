#pragma once

// Verification suites run by `pwmra verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "pwmra/mrabuild.hpp"

namespace pwmra::cli {

struct SuiteRecord {
  std::string suite;
  std::string identity;
  int n = 0;
  bool passed = false;
  std::string detail;
};

/// Exact identities for one n: scaling vector and refinement checks, ramp
/// biorthogonality, roro, rep1, mtfe and the closed inner products.
std::vector<SuiteRecord> exact_suite(int n, Family family);

/// Closed-form transforms against the quadrature oracle on the standard w
/// grid, and the w = 0 values against exact moments.
std::vector<SuiteRecord> fourier_suite(int n, double tolerance);

/// Randomised exact trials of the summation formulas, contiguous relations
/// and the hyp1 closed forms.
std::vector<SuiteRecord> hyper_suite(std::uint64_t seed, int trials);

}  // namespace pwmra::cli
