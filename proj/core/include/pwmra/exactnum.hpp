#pragma once

// Exact scalars: rationals and elements of a real quadratic field Q(sqrt d).

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "pwmra/errors.hpp"

namespace pwmra {

/// Arbitrary-precision rational, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& v) : q_(v) {}
  explicit Rational(mpq_class q);

  /// Parses "p" or "p/q".
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  /// True iff the value is an integer <= 0.
  bool is_nonpositive_integer() const { return is_integer() && sgn(q_) <= 0; }
  int sign() const noexcept { return sgn(q_); }

  Rational inverse() const;
  Rational abs() const;
  Rational pow(int e) const;

  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// m = square_root^2 * squarefree with squarefree having no square factor.
struct SquarefreeParts {
  mpz_class square_root;
  mpz_class squarefree;
};

/// Trial-division square-free decomposition; m must be >= 1.
SquarefreeParts squarefree_reduce(const mpz_class& m);

/// a + b*sqrt(d), d square-free and > 1.
struct QuadExt {
  Rational a;
  Rational b;
  mpz_class d;

  QuadExt(Rational a_, Rational b_, mpz_class d_);
};

/// Element of Q or of Q(sqrt d). A QuadExt with zero radical part is stored
/// as a Rational, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Scalar(T v) : v_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(QuadExt q);  // NOLINT(google-explicit-constructor)

  /// Parses the canonical rendering ("p/q" or "p/q + r/s*sqrt(d)").
  static Scalar parse(std::string_view text);

  bool is_rational() const noexcept { return std::holds_alternative<Rational>(v_); }
  /// Throws DomainError when the value is irrational.
  const Rational& rational() const;
  Rational rational_part() const;
  Rational radical_coeff() const;
  /// The radicand, or 1 for a rational value.
  mpz_class radicand() const;
  /// 1 for rationals, 2 for genuine quadratic-extension elements.
  int extension_degree() const noexcept { return is_rational() ? 1 : 2; }

  bool is_zero() const noexcept;
  int sign() const;
  Scalar conjugate() const;
  Scalar inverse() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar& operator*=(const Rational& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, QuadExt> v_;
};

enum class FieldOp { add, sub, mul, div };

Scalar field_op(const Scalar& x, const Scalar& y, FieldOp op);

/// Exact square root of a non-negative rational, as s*sqrt(f)/r.
Scalar sqrt_exact(const Rational& q);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned k);

mpz_class factorial(unsigned n);
/// n!! for n >= -1 ((-1)!! = 0!! = 1).
mpz_class double_factorial(int n);

inline Rational factorial_q(unsigned n) { return Rational(factorial(n)); }

/// (-1)^k as an int.
constexpr int neg1_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace pwmra
