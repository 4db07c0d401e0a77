#include "pwmra/exactnum.hpp"

#include <cmath>
#include <string>

namespace pwmra {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(mpz_class(num), mpz_class(den));
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw DivisionByZero();
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InvalidParameter("empty rational literal");
  const auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (num.set_str(s.substr(0, slash), 10) != 0) {
    throw InvalidParameter("malformed rational literal: " + s);
  }
  if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0) {
    throw InvalidParameter("malformed rational literal: " + s);
  }
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / q_));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

// ---------------------------------------------------------------- helpers

SquarefreeParts squarefree_reduce(const mpz_class& m) {
  if (m < 1) throw InvalidParameter("squarefree_reduce requires m >= 1");
  mpz_class rest = m;
  mpz_class root = 1;
  mpz_class squarefree = 1;
  for (mpz_class p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    // The remaining cofactor is settled once it is prime or a perfect square.
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30) != 0) break;
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
      root *= s;
      rest = 1;
      break;
    }
    int mult = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
      rest /= p;
      ++mult;
    }
    for (int i = 0; i < mult / 2; ++i) root *= p;
    if (mult % 2 == 1) squarefree *= p;
  }
  squarefree *= rest;
  return {root, squarefree};
}

Rational pochhammer(const Rational& a, unsigned k) {
  mpq_class acc = 1;
  mpq_class x = a.value();
  for (unsigned i = 0; i < k; ++i) {
    acc *= x;
    x += 1;
  }
  return Rational(acc);
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class double_factorial(int n) {
  if (n < -1) throw InvalidParameter("double_factorial requires n >= -1");
  if (n <= 0) return 1;
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// ---------------------------------------------------------------- QuadExt

QuadExt::QuadExt(Rational a_, Rational b_, mpz_class d_)
    : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
  if (d <= 1) throw InvalidParameter("quadratic radicand must exceed 1");
  if (squarefree_reduce(d).square_root != 1) {
    throw InvalidParameter("quadratic radicand must be square-free: " + d.get_str());
  }
}

// ---------------------------------------------------------------- Scalar

namespace {

Scalar make_quad(Rational a, Rational b, const mpz_class& d) {
  if (b.is_zero()) return Scalar(std::move(a));
  return Scalar(QuadExt(std::move(a), std::move(b), d));
}

const mpz_class& common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.d != y.d) {
    throw RadicandMismatch("cannot combine sqrt(" + x.d.get_str() + ") with sqrt(" +
                           y.d.get_str() + ")");
  }
  return x.d;
}

}  // namespace

Scalar::Scalar(QuadExt q) {
  if (q.b.is_zero()) {
    v_ = std::move(q.a);
  } else {
    v_ = std::move(q);
  }
}

Scalar Scalar::parse(std::string_view text) {
  const std::string s(text);
  const auto plus = s.find(" + ");
  if (plus == std::string::npos) return Scalar(Rational::parse(s));
  const auto star = s.find("*sqrt(", plus);
  const auto close = s.rfind(')');
  if (star == std::string::npos || close == std::string::npos || close < star) {
    throw InvalidParameter("malformed scalar literal: " + s);
  }
  Rational a = Rational::parse(s.substr(0, plus));
  Rational b = Rational::parse(s.substr(plus + 3, star - plus - 3));
  mpz_class d;
  if (d.set_str(s.substr(star + 6, close - star - 6), 10) != 0) {
    throw InvalidParameter("malformed radicand: " + s);
  }
  return make_quad(std::move(a), std::move(b), d);
}

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  throw DomainError("scalar " + to_string() + " is not rational");
}

Rational Scalar::rational_part() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  return std::get<QuadExt>(v_).a;
}

Rational Scalar::radical_coeff() const {
  if (is_rational()) return Rational();
  return std::get<QuadExt>(v_).b;
}

mpz_class Scalar::radicand() const {
  if (is_rational()) return 1;
  return std::get<QuadExt>(v_).d;
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
  return false;
}

int Scalar::sign() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->sign();
  const auto& q = std::get<QuadExt>(v_);
  const int sa = q.a.sign();
  const int sb = q.b.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d (never equal, d is not a square).
  const Rational lhs = q.a * q.a;
  const Rational rhs = q.b * q.b * Rational(q.d);
  return lhs > rhs ? sa : sb;
}

Scalar Scalar::conjugate() const {
  if (is_rational()) return *this;
  const auto& q = std::get<QuadExt>(v_);
  return make_quad(q.a, -q.b, q.d);
}

Scalar Scalar::inverse() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(r->inverse());
  const auto& q = std::get<QuadExt>(v_);
  const Rational norm = q.a * q.a - q.b * q.b * Rational(q.d);
  return make_quad(q.a / norm, -q.b / norm, q.d);
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->to_double();
  const auto& q = std::get<QuadExt>(v_);
  const double root = std::sqrt(q.d.get_d());
  if (q.a.sign() * q.b.sign() >= 0) return q.a.to_double() + q.b.to_double() * root;
  // a + b sqrt(d) = (a^2 - b^2 d) / (a - b sqrt(d)) avoids cancellation.
  const Rational norm = q.a * q.a - q.b * q.b * Rational(q.d);
  return norm.to_double() / (q.a.to_double() - q.b.to_double() * root);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->to_string();
  const auto& q = std::get<QuadExt>(v_);
  return q.a.to_string() + " + " + q.b.to_string() + "*sqrt(" + q.d.get_str() + ")";
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(-*r);
  const auto& q = std::get<QuadExt>(v_);
  return make_quad(-q.a, -q.b, q.d);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto* r = std::get_if<Rational>(&v_)) {
    if (const auto* ro = std::get_if<Rational>(&o.v_)) {
      *r += *ro;
      return *this;
    }
    const auto& qo = std::get<QuadExt>(o.v_);
    *this = make_quad(*r + qo.a, qo.b, qo.d);
    return *this;
  }
  auto& q = std::get<QuadExt>(v_);
  if (const auto* ro = std::get_if<Rational>(&o.v_)) {
    q.a += *ro;
    return *this;
  }
  const auto& qo = std::get<QuadExt>(o.v_);
  const mpz_class d = common_radicand(q, qo);
  *this = make_quad(q.a + qo.a, q.b + qo.b, d);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Rational& o) {
  if (auto* r = std::get_if<Rational>(&v_)) {
    *r *= o;
    return *this;
  }
  if (o.is_zero()) {
    v_ = Rational();
    return *this;
  }
  auto& q = std::get<QuadExt>(v_);
  q.a *= o;
  q.b *= o;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (const auto* ro = std::get_if<Rational>(&o.v_)) return *this *= *ro;
  const auto& qo = std::get<QuadExt>(o.v_);
  if (const auto* r = std::get_if<Rational>(&v_)) {
    *this = make_quad(*r * qo.a, *r * qo.b, qo.d);
    return *this;
  }
  const auto& q = std::get<QuadExt>(v_);
  const mpz_class d = common_radicand(q, qo);
  Rational a = q.a * qo.a + q.b * qo.b * Rational(d);
  Rational b = q.a * qo.b + q.b * qo.a;
  *this = make_quad(std::move(a), std::move(b), d);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_rational()) return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
  const auto& x = std::get<QuadExt>(a.v_);
  const auto& y = std::get<QuadExt>(b.v_);
  return x.d == y.d && x.a == y.a && x.b == y.b;
}

Scalar field_op(const Scalar& x, const Scalar& y, FieldOp op) {
  switch (op) {
    case FieldOp::add:
      return x + y;
    case FieldOp::sub:
      return x - y;
    case FieldOp::mul:
      return x * y;
    case FieldOp::div:
      return x / y;
  }
  throw InvalidParameter("unknown field operation");
}

Scalar sqrt_exact(const Rational& q) {
  if (q.sign() < 0) throw DomainError("square root of a negative rational");
  if (q.is_zero()) return Scalar();
  // sqrt(p/r) = sqrt(p r) / r
  const mpz_class pr = q.numerator() * q.denominator();
  const auto parts = squarefree_reduce(pr);
  const Rational coeff(parts.square_root, q.denominator());
  if (parts.squarefree == 1) return Scalar(coeff);
  return Scalar(QuadExt(Rational(), coeff, parts.squarefree));
}

}  // namespace pwmra
