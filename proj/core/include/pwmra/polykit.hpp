#pragma once

// Dense univariate polynomials and compactly supported piecewise polynomials
// with exact coefficients.

#include <string>
#include <vector>

#include "pwmra/exactnum.hpp"

namespace pwmra {

/// Dense polynomial, coefficient index = degree. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly monomial(unsigned degree, const Scalar& c = Scalar(1));
  /// u*t + v
  static Poly linear(const Scalar& u, const Scalar& v);

  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }
  /// 2 if any coefficient is irrational, else 1.
  int extension_degree() const noexcept;

  Scalar eval(const Scalar& t) const;
  double eval_float(double t) const;

  /// p(u*t + v).
  Poly compose_affine(const Scalar& u, const Scalar& v) const;
  /// p(-t).
  Poly reflect() const;
  /// Antiderivative vanishing at 0.
  Poly antiderivative() const;
  /// Exact integral over [a, b].
  Scalar integrate(const Rational& a, const Rational& b) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// "c0 + c1*t + ..." for diagnostics.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

enum class PolyOp { add, mul, scale, compose_affine };

/// Binary polynomial operation. For `scale` the second operand must be a
/// constant; for `compose_affine` it must be the linear map u*t + v (u != 0)
/// and the result is p(u*t + v).
Poly poly_arith(const Poly& p, const Poly& q, PolyOp op);

/// Piecewise polynomial supported on [breakpoints.front(), breakpoints.back()]
/// and zero elsewhere. Always held in canonical form: adjacent equal pieces
/// are merged and zero pieces at either end are dropped, so the zero function
/// has no breakpoints.
class PiecewisePoly {
 public:
  PiecewisePoly() = default;
  PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces);

  /// p on [a, b], zero elsewhere.
  static PiecewisePoly on_interval(Poly p, const Rational& a, const Rational& b);

  const std::vector<Rational>& breakpoints() const noexcept { return bp_; }
  const std::vector<Poly>& pieces() const noexcept { return pieces_; }
  bool is_zero() const noexcept { return pieces_.empty(); }
  /// Support hull; throws DomainError for the zero function.
  Rational support_min() const;
  Rational support_max() const;
  int extension_degree() const noexcept;

  /// Value at t, using the piece [b_k, b_{k+1}) that contains t (the last
  /// piece is closed on the right).
  Scalar eval(const Rational& t) const;
  double eval_float(double t) const;

  /// f(u*t + v) for rational u != 0.
  PiecewisePoly compose_affine(const Rational& u, const Rational& v) const;
  /// f(-t).
  PiecewisePoly reflect() const;
  /// f(2*axis - t).
  PiecewisePoly reflect_about(const Rational& axis) const;
  /// f restricted to [a, b] (zero elsewhere).
  PiecewisePoly restrict(const Rational& a, const Rational& b) const;
  /// Same function with extra breakpoints inserted at the given cuts;
  /// the result is deliberately not canonical.
  std::vector<Poly> pieces_on(const std::vector<Rational>& grid) const;

  PiecewisePoly operator-() const;
  PiecewisePoly& operator+=(const PiecewisePoly& o);
  PiecewisePoly& operator-=(const PiecewisePoly& o);
  PiecewisePoly& operator*=(const Scalar& s);

  friend PiecewisePoly operator+(PiecewisePoly a, const PiecewisePoly& b) { return a += b; }
  friend PiecewisePoly operator-(PiecewisePoly a, const PiecewisePoly& b) { return a -= b; }
  friend PiecewisePoly operator*(PiecewisePoly a, const Scalar& s) { return a *= s; }
  friend PiecewisePoly operator*(const Scalar& s, PiecewisePoly a) { return a *= s; }
  friend PiecewisePoly operator*(const PiecewisePoly& a, const PiecewisePoly& b);
  friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
    return a.bp_ == b.bp_ && a.pieces_ == b.pieces_;
  }

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Rational> bp_;
  std::vector<Poly> pieces_;
};

/// Sorted union of two breakpoint lists.
std::vector<Rational> merge_breakpoints(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b);

/// Exact integral of f over [a, b]; requires a <= b.
Scalar integrate_exact(const PiecewisePoly& f, const Rational& a, const Rational& b);
/// Exact integral over the whole real line.
Scalar integrate_exact(const PiecewisePoly& f);
/// Exact L2 inner product.
Scalar inner_product(const PiecewisePoly& f, const PiecewisePoly& g);

/// f(2^j t - i).
PiecewisePoly dilate_translate(const PiecewisePoly& f, int j, const Rational& i);

/// Integral of t^(z-1) f(t) over [0, 1]; f must vanish outside [0, 1].
Scalar mellin_integer_moment(const PiecewisePoly& f, unsigned z);

enum class Parity { even, odd, none };

struct SymmetryType {
  Rational axis;
  Parity parity = Parity::none;

  friend bool operator==(const SymmetryType&, const SymmetryType&) = default;
};

std::string to_string(Parity p);

/// True iff f(2*axis - t) = +-f(t) exactly, with the sign given by parity.
/// Parity::none always yields false.
bool check_symmetry(const PiecewisePoly& f, const SymmetryType& s);

}  // namespace pwmra
