#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "pwmra/hyperjacobi.hpp"
#include "pwmra/mrabuild.hpp"
#include "pwmra/xform.hpp"

using namespace pwmra;

namespace {

constexpr double kGrid[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
constexpr double pi = std::numbers::pi;

Poly P(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

/// Fourier transform of 1 - t^2 on [-1, 1]: 4 (sin w - w cos w) / w^3.
double ft_parabola(double w) { return 4 * (std::sin(w) - w * std::cos(w)) / (w * w * w); }

}  // namespace

TEST(SeriesHyper, Examples) {
  EXPECT_EQ(series_hyper(SeriesKind::f01, {}, {Rational(7, 2)}, 0.0, 1e-14).value, std::complex<double>(1.0, 0.0));
  const auto s = series_hyper(SeriesKind::f01, {}, {Rational(3, 2)}, -(pi / 2) * (pi / 2), 1e-14);
  EXPECT_NEAR(std::abs(s.value), 0.0, 1e-12);
  for (double w : {0.3, 2.0, 7.5}) {
    const auto r = series_hyper(SeriesKind::f01, {}, {Rational(3, 2)}, -(w / 2) * (w / 2), 1e-14);
    EXPECT_NEAR(r.value.real(), std::sin(w) / w, 1e-13);
    EXPECT_LE(r.est_truncation_error, 1e-14);
  }
  const int n = 3;
  EXPECT_EQ(series_hyper(SeriesKind::f22, {Rational(n + 1), Rational(n + 3)}, {Rational(n + 2), Rational(2 * n + 3)},
                         0.0, 1e-14)
                .value,
            std::complex<double>(1.0, 0.0));
}

TEST(SeriesHyper, Errors) {
  EXPECT_THROW(series_hyper(SeriesKind::f01, {Rational(1)}, {Rational(1)}, 1.0, 1e-10), InvalidParameter);
  EXPECT_THROW(series_hyper(SeriesKind::f01, {}, {Rational(-2)}, 1.0, 1e-10), InvalidParameter);
  EXPECT_THROW(series_hyper(SeriesKind::f01, {}, {Rational(1)}, 1.0, 0.0), InvalidParameter);
}

TEST(Quadrature, Examples) {
  const PiecewisePoly one = PiecewisePoly::on_interval(P({1}), -1, 1);
  EXPECT_NEAR(std::abs(quadrature_oracle(one, pi).value), 0.0, 1e-12);
  const PiecewisePoly t = PiecewisePoly::on_interval(P({0, 1}), 0, 1);
  EXPECT_NEAR(quadrature_oracle(t, 0.0).value.real(), 0.5, 1e-15);
  const PiecewisePoly par = PiecewisePoly::on_interval(P({1, 0, -1}), -1, 1);
  for (double w : kGrid) {
    const auto q = quadrature_oracle(par, w);
    EXPECT_NEAR(q.value.real(), ft_parabola(w), 1e-12) << w;
    EXPECT_NEAR(q.value.imag(), 0.0, 1e-14);
    EXPECT_NEAR(fourier_phi(1, 0, w).value.real(), ft_parabola(w), 1e-12) << w;
  }
}

TEST(FourierPhi, MomentsAtZero) {
  EXPECT_NEAR(fourier_phi(1, 0, 0.0).value.real(), 4.0 / 3.0, 1e-15);
  EXPECT_EQ(fourier_phi(1, 1, 0.0).value, std::complex<double>(0.0, 0.0));
  for (int n = 1; n <= 6; ++n) {
    for (int eps = 0; eps <= 1; ++eps) {
      const double exact = integrate_exact(interior_phi(n, eps)).to_double();
      const auto v = fourier_phi(n, eps, 0.0).value;
      EXPECT_NEAR(v.real(), exact, 1e-14 * std::max(1.0, std::abs(exact)));
      EXPECT_NEAR(v.imag(), 0.0, 1e-14);
    }
  }
  EXPECT_THROW(fourier_phi(0, 0, 1.0), DomainError);
  EXPECT_THROW(fourier_phi(2, 2, 1.0), DomainError);
}

TEST(FourierPhi, AgainstQuadratureAndParity) {
  for (int n = 1; n <= 6; ++n) {
    for (int eps = 0; eps <= 1; ++eps) {
      const PiecewisePoly f = interior_phi(n, eps);
      EXPECT_EQ(f, phi_basis(2 * n + eps, 0, 2 * n + eps));
      for (double w : kGrid) {
        const FTResult r = fourier_phi(n, eps, w, 1e-12);
        EXPECT_LE(r.est_truncation_error, 1e-12);
        EXPECT_NEAR(std::abs(r.value - quadrature_oracle(f, w).value), 0.0, 1e-9) << n << " " << eps << " " << w;
        // even functions have real transforms, odd ones imaginary
        EXPECT_NEAR(eps == 0 ? r.value.imag() : r.value.real(), 0.0, 1e-12);
      }
    }
  }
}

TEST(FourierL0, AgainstQuadrature) {
  for (int n = 2; n <= 6; ++n) {
    const PiecewisePoly l = l0(n);
    const double exact = integrate_exact(l).to_double();
    EXPECT_NEAR(std::abs(fourier_l0(n, 0.0).value - std::complex<double>(exact, 0.0)), 0.0,
                1e-14 * std::max(1.0, std::abs(exact)));
    for (double w : kGrid) {
      const auto r = fourier_l0(n, w).value;
      EXPECT_NEAR(std::abs(r - quadrature_oracle(l, w).value), 0.0, 1e-9) << n << " " << w;
      EXPECT_NEAR(std::abs(fourier_l0(n, -w).value - std::conj(r)), 0.0, 1e-12);
    }
  }
  EXPECT_THROW(fourier_l0(1, 1.0), DomainError);
}

TEST(FourierU, AgainstQuadrature) {
  for (int n = 0; n <= 6; ++n) {
    for (int eps = 0; eps <= 1; ++eps) {
      for (int m = 0; m <= n; ++m) {
        const PiecewisePoly u = u_function(2 * n + 1 + eps, 2 * n - 2 * m).as_piecewise;
        const double exact = integrate_exact(u).to_double();
        const auto z = fourier_u(eps, m, n, 0.0).value;
        EXPECT_NEAR(std::abs(z - std::complex<double>(exact, 0.0)), 0.0, 1e-14 * std::max(1.0, std::abs(exact)));
        for (double w : kGrid) {
          EXPECT_NEAR(std::abs(fourier_u(eps, m, n, w).value - quadrature_oracle(u, w).value), 0.0, 1e-9)
              << n << " " << eps << " " << m << " " << w;
        }
      }
    }
  }
  EXPECT_NEAR(std::abs(fourier_u(1, 0, 2, 1e-6).value), 0.0, 1e-5);
  const PiecewisePoly abs_t_cubed({-1, 0, 1}, {P({0, 0, 0, -1}), P({0, 0, 0, 1})});
  const PiecewisePoly u012 = f_closed(0, 1, 2) - abs_t_cubed;
  EXPECT_NEAR(std::abs(fourier_u(0, 1, 2, 5.0).value - quadrature_oracle(u012, 5.0).value), 0.0, 1e-9);
  EXPECT_THROW(fourier_u(0, 3, 2, 1.0), DomainError);
  EXPECT_THROW(fourier_u(2, 0, 2, 1.0), DomainError);
}

TEST(FourierU, UnreachableToleranceIsReported) {
  EXPECT_THROW(fourier_u(0, 1, 6, 20.0, 1e-300), DomainError);
}
