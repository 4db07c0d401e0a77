#pragma once

// Closed-form Fourier transforms f^(w) = integral f(t) e^{-iwt} dt of the
// interior basis, the left ramp and the u functions, evaluated through
// truncated hypergeometric series in 50-digit arithmetic, plus an
// independent Gauss-Kronrod oracle.

#include <complex>
#include <vector>

#include "pwmra/polykit.hpp"

namespace pwmra {

struct FTResult {
  std::complex<double> value;
  int terms_used = 0;
  double est_truncation_error = 0.0;
};

enum class SeriesKind { f01, f12, f22 };

/// pFq(upper; lower; z) for the three shapes used here. Stops once ten
/// times the first omitted term is below tol and the terms are decreasing.
/// Throws InvalidParameter for a nonpositive integer lower parameter or a
/// parameter count that does not match `kind`, and DomainError after 10^4
/// terms without convergence.
FTResult series_hyper(SeriesKind kind, const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                      std::complex<double> z, double tol);

/// phi_{2n+eps} = (1 - t^2) p^{5/2}_{2n+eps-2} on [-1, 1].
PiecewisePoly interior_phi(int n, int eps);

/// Transform of phi_{2n+eps}; n >= 1, eps in {0, 1}.
FTResult fourier_phi(int n, int eps, double w, double tol = 1e-12);
/// Transform of l^n_0; n >= 2.
FTResult fourier_l0(int n, double w, double tol = 1e-12);
/// Transform of u^0_{2n+1+eps, 2n-2m}; eps in {0, 1}, 0 <= m <= n.
FTResult fourier_u(int eps, int m, int n, double w, double tol = 1e-12);

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;
};

/// integral f(t) e^{-iwt} dt by adaptive 61-point Gauss-Kronrod on each piece.
QuadratureResult quadrature_oracle(const PiecewisePoly& f, double w, double tol = 1e-13);

}  // namespace pwmra
