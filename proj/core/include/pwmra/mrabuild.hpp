#pragma once

// Continuous piecewise-polynomial scaling vectors: the projection onto the
// interior space, the u/w/q building blocks and their closed forms, and the
// assembled scaling vector with its exact self-checks.

#include <string>
#include <string_view>
#include <vector>

#include "pwmra/polykit.hpp"

namespace pwmra {

enum class Family { generic, rational4n, rational4n1 };

std::string to_string(Family f);
/// Accepts "generic", "rational-4n", "rational-4n1" (hyphen optional).
Family parse_family(std::string_view text);
/// Throws InvalidFamily unless n is admissible for the family:
/// generic n >= 3; rational4n n = 4k >= 4; rational4n1 n = 4k+1 >= 9.
void validate_family(int n, Family f);
bool family_accepts(int n, Family f) noexcept;

/// Outcome of one exact identity check.
struct CheckRecord {
  std::string identity;
  bool passed = false;
  std::string detail;
};

/// Appends the record and throws ConstructionFailure if it failed.
void require(std::vector<CheckRecord>& log, std::string identity, bool ok, std::string detail = {});

/// 1 - |t| t^{m-1} (m odd) or t - |t| t^{m-1} (m even) on [-1, 1].
PiecewisePoly ubar(int m);

/// phi^0_i for i = 2..n, i.e. entry i-2 holds phi^0_i. Cached per process.
const std::vector<PiecewisePoly>& interior_basis(int n);

/// (I - P)f where P projects orthogonally onto span{phi^0_i : 2 <= i <= n}.
PiecewisePoly project_A0(const PiecewisePoly& f, int n);

/// r^n_0 = (I - P)(1 + t) on [-1, 1]; asserts the scaled-ramp and
/// determinant representations. Requires n >= 1.
PiecewisePoly r0(int n);
/// l^n_0(t) = r^n_0(-t).
PiecewisePoly l0(int n);
/// 2 (2n+1)!! / (n+2)! (1+t) p^{1,2}_{n-1}(t).
PiecewisePoly r0_ramp_form(int n);
/// (-1)^n (p_n(t)/p_n(-1) - p_{n-1}(t)/p_{n-1}(-1)) with p = p^{3/2}.
PiecewisePoly r0_determinant_form(int n);
/// (-1)^{n+1} 8 / ((n+2)(n+1)n).
Rational roro_closed(int n);

/// The polynomial f^eps_{m,n} on [-1, 1] from its 4F3 representation;
/// asserts agreement with the split f1 + f2. Requires n >= 0, m >= 0.
PiecewisePoly f_closed(int eps, int m, int n);
/// The 3F2 part and the 2F1 part of the split.
PiecewisePoly f1_closed(int eps, int m, int n);
PiecewisePoly f2_closed(int eps, int m, int n);
/// f2 written through the ultraspherical polynomial p^{3/2}_{2n+eps}.
PiecewisePoly f2_ultraspherical(int eps, int m, int n);

/// Parameters of the closed form of u^0_{N,j}: with mbar = N - j,
/// u^0_{N,j} = -|t| t^{2m+eps} + f^eps_{m,half_n}.
struct UIndex {
  int mbar = 0;
  int eps = 0;
  int m = 0;
  int half_n = 0;
};

/// Requires 0 <= j <= N - 1.
UIndex u_index(int N, int j);

struct UFunction {
  int n = 0;  ///< first subscript N
  int j = 0;  ///< second subscript
  int eps = 0;
  int m = 0;
  int half_n = 0;
  PiecewisePoly as_piecewise;  ///< (I - P) ubar_{N-j}
  PiecewisePoly f_closed;      ///< -|t| t^{2m+eps} + f^eps_{m,half_n}
};

/// Builds u^0_{N,j} both ways and asserts equality. Cached per process.
const UFunction& u_function(int N, int j);

/// Closed-form Mellin transform of f^eps_{m,n} on [0, 1].
Rational mellin_f_closed(int eps, int m, int n, const Rational& z);
double mellin_f_closed(int eps, int m, int n, double z);

enum class InnerProductKind { ru, uu, rn0un0, umum1 };

std::string to_string(InnerProductKind k);

/// Closed forms:
///  ru:     <r^{2n+1+eps}_0, u^0_{2n+1+eps, 2n-2m}>
///  uu:     <u^0_{2n+1+eps, 2n-2m}, u^0_{2n+1+eps, 2n-2m1}>
///  rn0un0: <r^n_0, u^0_{n,2m}>           (n > 2m)
///  umum1:  <u^0_{n,2m}, u^0_{n,2m1}>     (n >= 2 max(m, m1) + 1)
/// eps is ignored by rn0un0/umum1 and m1 by ru/rn0un0.
Rational closed_inner_product(InnerProductKind kind, int n, int m, int m1, int eps);
/// Second printed form of umum1, through the rn0un0 values.
Rational umum1_via_rn0un0(int n, int m, int m1);
/// The same inner products computed by exact integration of the built functions.
Rational integrated_inner_product(InnerProductKind kind, int n, int m, int m1, int eps);

/// Coefficients of A alpha^2 + 2 B alpha + C = 0 for w = alpha u_{n,2m} + u_{n,2m1},
/// built from exact integrals of r^n_0 and the u functions.
struct AlphaQuadratic {
  Rational a;
  Rational b;
  Rational c;
  Rational discriminant() const { return b * b - a * c; }
};

AlphaQuadratic alpha_quadratic(int n, int m, int m1);
/// Real roots in ascending order (one entry for a double root).
/// Throws DomainError when there is no real root and InvalidParameter when A = 0.
std::vector<Scalar> alpha_coeff(int n, int m, int m1);
/// The displayed closed form of alpha(n) for (m, m1) = (0, 1).
Scalar alpha_printed(int n);
/// The displayed closed form of alpha_{k+1,2k}(4k+1).
Rational alpha_4n1_printed(int k);

struct WFunction {
  int n = 0;
  int m = 0;
  int m1 = 0;
  Family family = Family::generic;
  Scalar alpha;
  PiecewisePoly value;
};

WFunction w_function(int n, Family family);

struct QRamp {
  PiecewisePoly q_r;
  PiecewisePoly q_l;
  /// <w, r> / <w, w>, so that q_r = r - constant * w.
  Scalar projection_constant;
  /// The displayed value of the same constant for this family.
  Scalar printed_constant;
};

QRamp q_ramp(int n, Family family);

struct ScalingVector {
  int n = 0;
  Family family = Family::generic;
  std::vector<PiecewisePoly> entries;
  std::vector<Scalar> norms_sq;
  std::vector<SymmetryType> symmetry;
  Scalar alpha;
  Scalar projection_constant;
  std::vector<CheckRecord> checks;
};

/// Builds and verifies the scaling vector (phi~_0 .. phi~_n).
/// Throws InvalidFamily or ConstructionFailure.
ScalingVector assemble_phi(int n, Family family);

}  // namespace pwmra
