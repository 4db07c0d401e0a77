#include "pwmra/xform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "pwmra/hyperjacobi.hpp"
#include "pwmra/mrabuild.hpp"

namespace pwmra {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;
using Cplx = boost::multiprecision::cpp_complex_50;

constexpr int kMaxTerms = 10000;
constexpr double kSafety = 10.0;
const Real kFloor("1e-45");

Real to_real(const Rational& q) { return Real(q.numerator().get_str()) / Real(q.denominator().get_str()); }

Real poch(const Real& a, int k) {
  Real p = 1;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

Real fact(int k) { return poch(Real(1), k); }

Real half(int num) { return Real(num) / 2; }

struct HpSeries {
  Cplx value;
  int terms = 0;
  Real bound;
};

HpSeries sum_series(const std::vector<Real>& upper, const std::vector<Real>& lower, const Cplx& z, const Real& tol) {
  HpSeries out;
  Cplx term = 1;
  out.value = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    out.value += term;
    ++out.terms;
    Cplx ratio = z / Real(k + 1);
    for (const auto& a : upper) ratio *= a + k;
    for (const auto& b : lower) ratio /= b + k;
    term *= ratio;
    const Real next = abs(term);
    if (next == 0) {
      out.bound = 0;
      return out;
    }
    if (abs(ratio) < 1 && kSafety * next < tol) {
      out.bound = kSafety * next;
      return out;
    }
  }
  throw DomainError("hypergeometric series did not converge within " + std::to_string(kMaxTerms) + " terms");
}

void check_shape(SeriesKind kind, std::size_t p, std::size_t q) {
  const bool ok = (kind == SeriesKind::f01 && p == 0 && q == 1) || (kind == SeriesKind::f12 && p == 1 && q == 2) ||
                  (kind == SeriesKind::f22 && p == 2 && q == 2);
  if (!ok) throw InvalidParameter("parameter counts do not match the series kind");
}

/// Sums prefactor * series for each term, choosing each series tolerance so
/// that the combined truncation bound stays below tol.
class Accumulator {
 public:
  explicit Accumulator(double tol) : tol_(tol) {
    if (!(tol > 0)) throw InvalidParameter("tolerance must be positive");
  }

  void add(const Cplx& pre, const std::vector<Real>& upper, const std::vector<Real>& lower, const Cplx& z) {
    const Real mag = abs(pre);
    if (mag == 0) return;
    Real series_tol = Real(tol_) / (Real(kSafety) * mag);
    if (series_tol < kFloor) series_tol = kFloor;
    const HpSeries s = sum_series(upper, lower, z, series_tol);
    value_ += pre * s.value;
    terms_ += s.terms;
    bound_ += mag * s.bound;
  }

  void add_plain(const Cplx& v) { value_ += v; }

  FTResult finish() const {
    FTResult r;
    r.value = {static_cast<double>(value_.real()), static_cast<double>(value_.imag())};
    r.terms_used = terms_;
    r.est_truncation_error = static_cast<double>(bound_);
    if (r.est_truncation_error > tol_) throw DomainError("requested tolerance is below the attainable accuracy");
    return r;
  }

 private:
  double tol_;
  Cplx value_ = 0;
  int terms_ = 0;
  Real bound_ = 0;
};

Cplx ipow(const Cplx& base, int e) {
  Cplx r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Cplx neg_i_pow(int e) { return e == 0 ? Cplx(1) : Cplx(0, -1); }

Real sgn(int k) { return k % 2 == 0 ? Real(1) : Real(-1); }

void check_eps(int eps) {
  if (eps != 0 && eps != 1) throw DomainError("eps must be 0 or 1");
}

}  // namespace

FTResult series_hyper(SeriesKind kind, const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                      std::complex<double> z, double tol) {
  check_shape(kind, upper.size(), lower.size());
  if (!(tol > 0)) throw InvalidParameter("tolerance must be positive");
  std::vector<Real> up;
  std::vector<Real> lo;
  for (const auto& a : upper) up.push_back(to_real(a));
  for (const auto& b : lower) {
    if (b.is_nonpositive_integer()) throw InvalidParameter("lower parameter " + b.to_string() + " is a pole");
    lo.push_back(to_real(b));
  }
  Real series_tol = Real(tol);
  if (series_tol < kFloor) series_tol = kFloor;
  const HpSeries s = sum_series(up, lo, Cplx(z.real(), z.imag()), series_tol);
  FTResult r;
  r.value = {static_cast<double>(s.value.real()), static_cast<double>(s.value.imag())};
  r.terms_used = s.terms;
  r.est_truncation_error = static_cast<double>(s.bound);
  return r;
}

PiecewisePoly interior_phi(int n, int eps) {
  check_eps(eps);
  if (n < 1) throw DomainError("interior_phi needs n >= 1");
  return phi_basis(2 * n + eps, 0, 2 * n + eps);
}

FTResult fourier_phi(int n, int eps, double w, double tol) {
  check_eps(eps);
  if (n < 1) throw DomainError("fourier_phi needs n >= 1");
  Accumulator acc(tol);
  const Real wr(w);
  const Real w2 = wr / 2;
  const Cplx x = -w2 * w2;
  const Cplx pre = neg_i_pow(eps) * fact(n - 1) / poch(Real(n) - half(1) + eps, n + 1);
  acc.add_plain(pre * cos(wr - eps * boost::math::constants::half_pi<Real>()));
  acc.add(pre * sgn(n) / poch(half(1), 2 * n + 2 + eps) * pow(w2, 2 * n + 2 + eps), {},
          {Real(2 * n + eps) + half(5)}, x);
  acc.add(pre * sgn(n - 1) * Real(n + 1) * (Real(n + eps) + half(1)) / poch(half(1), 2 * n + 1 + eps) *
              pow(w2, 2 * n + eps),
          {}, {Real(2 * n + eps) + half(3)}, x);
  return acc.finish();
}

FTResult fourier_l0(int n, double w, double tol) {
  if (n < 2) throw DomainError("fourier_l0 needs n >= 2");
  Accumulator acc(tol);
  const Real wr(w);
  const Cplx eiw(cos(wr), sin(wr));
  const Cplx emiw(cos(wr), -sin(wr));
  const Real nn(n);
  acc.add_plain(Real(4) / (nn * (nn + 2)) * eiw);
  acc.add_plain(-Real(4) * sgn(n) / (nn * (nn + 1) * (nn + 2)) * emiw);
  const Cplx z(Real(0), 2 * wr);
  acc.add(-Real(4) * fact(n - 1) / fact(2 * n + 2) * ipow(z, n + 1) * emiw, {Real(n + 1), Real(n + 3)},
          {Real(n + 2), Real(2 * n + 3)}, z);
  return acc.finish();
}

FTResult fourier_u(int eps, int m, int n, double w, double tol) {
  check_eps(eps);
  if (n < 0 || m < 0 || m > n) throw DomainError("fourier_u needs 0 <= m <= n");
  Accumulator acc(tol);
  const Real wr(w);
  const Real w2 = wr / 2;
  const Cplx x = -w2 * w2;
  const Cplx pf = eps == 0 ? Cplx(1) : Cplx(Real(0), -wr);
  const Real a = poch(-Real(m) - half(1), n + 1);
  const Real he = half(1) + eps;
  const Real mid = Real(n + 1) * (he + n) * poch(Real(m + 1 + eps), n + 1);
  acc.add(-pf * a / (poch(Real(m + eps + 1), n + 2) * poch(he, 2 * n + 2)) * pow(w2, 2 * n + 2),
          {Real(n + m + eps + 2)}, {Real(n + m + eps + 3), Real(2 * n + eps) + half(5)}, x);
  acc.add(-pf * sgn(n) * a / mid, {}, {he}, x);
  acc.add(-pf * a / (mid * poch(he, 2 * n + 2)) * pow(w2, 2 * n + 2), {}, {Real(2 * n + eps) + half(5)}, x);
  return acc.finish();
}

QuadratureResult quadrature_oracle(const PiecewisePoly& f, double w, double tol) {
  if (!(tol > 0)) throw InvalidParameter("tolerance must be positive");
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  constexpr unsigned kDepth = 6;
  QuadratureResult out;
  const auto& bp = f.breakpoints();
  for (std::size_t k = 0; k < f.pieces().size(); ++k) {
    std::vector<double> c;
    for (const auto& x : f.pieces()[k].coeffs()) c.push_back(x.to_double());
    const auto p = [&c](double t) {
      double v = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
      return v;
    };
    const double a = bp[k].to_double();
    const double b = bp[k + 1].to_double();
    double err_re = 0.0;
    double err_im = 0.0;
    const double re = GK::integrate([&](double t) { return p(t) * std::cos(w * t); }, a, b, kDepth, tol, &err_re);
    const double im = GK::integrate([&](double t) { return -p(t) * std::sin(w * t); }, a, b, kDepth, tol, &err_im);
    out.value += std::complex<double>(re, im);
    out.error_estimate += std::abs(err_re) + std::abs(err_im);
  }
  return out;
}

}  // namespace pwmra
