#pragma once

// Terminating hypergeometric series, classical summation theorems and
// contiguous relations, Jacobi/ultraspherical polynomials and ramp functions.

#include <vector>

#include "pwmra/polykit.hpp"

namespace pwmra {

/// A terminating pFq. Construction validates that some upper parameter is a
/// nonpositive integer -N (terminating_index is the smallest such N) and that
/// no lower parameter produces a zero denominator within the first N+1 terms.
class HyperSpec {
 public:
  HyperSpec(std::vector<Rational> upper, std::vector<Rational> lower);

  const std::vector<Rational>& upper() const noexcept { return upper_; }
  const std::vector<Rational>& lower() const noexcept { return lower_; }
  unsigned terminating_index() const noexcept { return n_; }

  /// Coefficient of z^i in the series.
  Rational term(unsigned i) const;
  /// All coefficients 0..terminating_index.
  std::vector<Rational> terms() const;

 private:
  std::vector<Rational> upper_;
  std::vector<Rational> lower_;
  unsigned n_ = 0;
};

Scalar pfq_eval(const HyperSpec& spec, const Scalar& z);
/// The series as a polynomial in z.
Poly pfq_poly(const HyperSpec& spec);

/// 2F1(-n, a; b; 1) = (b-a)_n / (b)_n.
Rational chu_vandermonde(unsigned n, const Rational& a, const Rational& b);
/// Balanced 3F2(-n, a, b; c, -n+a+b-c+1; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
Rational pfaff_saalschutz(unsigned n, const Rational& a, const Rational& b, const Rational& c);

enum class Contiguous { rec1, rec2, rec3, rec4, rec5 };

/// Parameters a..g; relations with 3F2 instances ignore f and g.
struct ContiguousParams {
  Rational a, b, c, d, e, f, g;
};

/// LHS - RHS of a contiguous relation, evaluated exactly; should be 0.
/// Throws InvalidParameter if some instance in the relation does not
/// terminate or has a vanishing denominator.
Rational contiguous_residual(Contiguous relation, const ContiguousParams& p, const Rational& z);

enum class Hyp1Variant { hyp2, hyp3 };

/// Closed form of 3F2(-n+1, a+1, b+1; d+1, b+2; 1) with d = -n+a (hyp2), or
/// of 3F2(-n+1, a+1, b+1; d+1, b+3; 1) with d = -n+a-1 (hyp3).
Rational hyp1_closed(Hyp1Variant variant, unsigned n, const Rational& a, const Rational& b);
/// The same quantity by direct summation.
Rational hyp1_series(Hyp1Variant variant, unsigned n, const Rational& a, const Rational& b);

/// Monic Jacobi polynomial p_n^{alpha,beta}.
Poly jacobi_monic(unsigned n, const Rational& alpha, const Rational& beta);

enum class UltraRoute { jacobi, parity };

/// Monic ultraspherical polynomial p_n^lambda (alpha = beta = lambda - 1/2).
Poly ultraspherical_monic(unsigned n, const Rational& lambda, UltraRoute route = UltraRoute::jacobi);

/// (1-t^2)^{k+1} p^{2k+5/2}_{i-2k-2}(t) on [-1, 1]; zero for i < 2k+2.
/// Throws IndexOutOfRange if i > n.
PiecewisePoly phi_basis(int n, int k, int i);

struct RampPair {
  PiecewisePoly r;
  PiecewisePoly l;
  int n = 0;
  int k = 0;
  int i = 0;
};

/// r(t) = (1-t)^i (1+t)^{k+1} p^{i+k+1, i+k+2}_{n-k-i-1}(t) on [-1, 1] and
/// l(t) = r(-t).
RampPair ramp_pair(int n, int k, int i);

/// Closed form of <r, l> for ramp_pair(n, k, i).
Rational ramp_norm_closed(int n, int k, int i);

/// Closed form of the integral over [-1, 1] of
/// (1-t)^alpha (1+t)^beta p(t) p(-t), p = p^{alpha, beta+1}_{n-alpha},
/// for integer 0 <= alpha <= n and integer beta >= 0.
Rational abp1_closed(int n, int alpha, int beta);
/// Same closed form in floating point for real beta > -1.
double abp1_closed_float(int n, int alpha, double beta);

}  // namespace pwmra
