#pragma once

// Refinement matrices C_i, the wavelet vector and its matrices D_i, for
// i = -2..1, together with the exact structural checks they satisfy.

#include <array>
#include <utility>
#include <vector>

#include "pwmra/linalg.hpp"
#include "pwmra/mrabuild.hpp"

namespace pwmra {

enum class SymKind { symmetric, antisymmetric };

std::string to_string(SymKind k);

/// Coefficient template for wavelets on [0, 1] with 1/2 as axis of
/// symmetry: p = T b with p in R^{2n+2} holding the coefficients of
/// (Phi(2t), Phi(2t-1)). b = (b_0, ..., b_n) for the symmetric template and
/// (b_1, ..., b_n) for the antisymmetric one, whose b_0 slot is forced to 0.
struct SymPattern {
  SymKind kind = SymKind::symmetric;
  int n = 0;
  Matrix templ;  ///< (2n+2) x (n+1) or (2n+2) x n

  static SymPattern make(SymKind kind, int n);
  std::vector<Scalar> expand(const std::vector<Scalar>& b) const { return templ * b; }
};

struct RefinementSet {
  int n = 0;
  Family family = Family::generic;
  /// Diagonal of C_n = integral of Phi(2t) Phi(2t)^T.
  std::vector<Scalar> gram;
  /// Index i + 2 holds the matrix for shift i.
  std::array<Matrix, 4> c_tilde;
  std::array<Matrix, 4> c;
  std::array<Matrix, 4> d_tilde;
  std::array<Matrix, 4> d;
  /// psi~_0, psi~_1, then the symmetric and antisymmetric interior wavelets.
  std::vector<PiecewisePoly> psi;
  std::vector<Scalar> psi_norms_sq;
  std::vector<SymmetryType> psi_symmetry;
  /// Coefficient vectors p over (Phi(2t), Phi(2t-1)) of the interior wavelets.
  std::vector<std::vector<Scalar>> interior_coefficients;
  std::vector<SymKind> interior_kinds;
  std::vector<CheckRecord> checks;

  const Matrix& C(int i) const { return c.at(static_cast<std::size_t>(i + 2)); }
  const Matrix& D(int i) const { return d.at(static_cast<std::size_t>(i + 2)); }
};

/// Phi_k(2t - i) for every entry k.
std::vector<PiecewisePoly> dilated_entries(const ScalingVector& phi, int i);

/// Fills gram, c_tilde and c; asserts the dilation identity and the
/// sign/zero structure of the matrices.
RefinementSet refinement_matrices(const ScalingVector& phi);

/// psi~_0 = (I - P_{phi~_0}) phi~_0(2.) and
/// psi~_1 = sign(t) (I - P_{phi~_0(2.)}) phi~_0.
std::pair<PiecewisePoly, PiecewisePoly> boundary_wavelets(const ScalingVector& phi);

struct InteriorWavelets {
  std::vector<PiecewisePoly> functions;
  std::vector<std::vector<Scalar>> coefficients;
  std::vector<SymKind> kinds;
};

/// Solves for wavelets on [0, 1] orthogonal to every phi~_j within each
/// symmetry template, orthogonalising the solution space in order.
/// Throws RankDeficiency if fewer than n-1 wavelets result.
InteriorWavelets interior_wavelets(const ScalingVector& phi, const RefinementSet& refset);

/// Fills d_tilde and d from refset.psi and asserts Psi = sum D_i Phi(2. - i).
void d_matrices(const ScalingVector& phi, RefinementSet& refset);

/// Runs the whole pipeline with all checks.
RefinementSet build_refinement(const ScalingVector& phi);

}  // namespace pwmra
