#pragma once

// Periodic multiwavelet filter bank built from float renderings of the
// refinement and wavelet matrices, orthonormalised so that synthesis is the
// transpose of analysis.

#include <array>
#include <vector>

#include "pwmra/refine.hpp"

namespace pwmra {

/// One coefficient vector in R^{n+1}.
using CoeffVec = std::vector<double>;
using CoeffStream = std::vector<CoeffVec>;

struct FilterBank {
  int n = 0;
  /// Index i + 2 holds the filter for shift i:
  /// H_i = N^-1 C_i N / sqrt(2), G_i = M^-1 D_i N / sqrt(2).
  std::array<std::vector<std::vector<double>>, 4> h;
  std::array<std::vector<std::vector<double>>, 4> g;

  static FilterBank from(const RefinementSet& rs, const ScalingVector& phi);
  std::size_t width() const noexcept { return static_cast<std::size_t>(n) + 1; }
};

struct Decomposition {
  CoeffStream coarse;
  /// Detail streams, finest level first.
  std::vector<CoeffStream> details;
};

/// One level: c_j = sum_i H_i s_{2j+i}, d_j = sum_i G_i s_{2j+i}, indices mod len.
/// Throws ShapeMismatch for odd length or wrong vector width.
std::pair<CoeffStream, CoeffStream> analyze_step(const FilterBank& fb, const CoeffStream& s);
/// Inverse of analyze_step.
CoeffStream synthesize_step(const FilterBank& fb, const CoeffStream& coarse, const CoeffStream& detail);

/// Empty input gives an empty decomposition. Otherwise the length must be a
/// multiple of 2^levels.
Decomposition analyze(const FilterBank& fb, const CoeffStream& s, int levels);
CoeffStream synthesize(const FilterBank& fb, const Decomposition& d);

/// Largest absolute entrywise difference; ShapeMismatch on shape differences.
double max_abs_difference(const CoeffStream& a, const CoeffStream& b);

}  // namespace pwmra
