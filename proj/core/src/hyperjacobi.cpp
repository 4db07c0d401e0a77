#include "pwmra/hyperjacobi.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace pwmra {

namespace {

Rational half(long num) { return Rational(num, 2); }

/// Evaluates a closed form, mapping a zero denominator to InvalidParameter.
template <typename F>
Rational guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const DivisionByZero&) {
    throw InvalidParameter(std::string(what) + ": parameters hit a zero denominator");
  }
}

Rational series_at(std::vector<Rational> upper, std::vector<Rational> lower, const Rational& z) {
  return pfq_eval(HyperSpec(std::move(upper), std::move(lower)), Scalar(z)).rational();
}

}  // namespace

// ---------------------------------------------------------------- HyperSpec

HyperSpec::HyperSpec(std::vector<Rational> upper, std::vector<Rational> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  bool terminating = false;
  for (const auto& a : upper_) {
    if (!a.is_nonpositive_integer()) continue;
    const auto n = static_cast<unsigned>((-a).numerator().get_ui());
    if (!terminating || n < n_) n_ = n;
    terminating = true;
  }
  if (!terminating) throw InvalidParameter("hypergeometric series does not terminate");
  for (const auto& b : lower_) {
    if (b.is_nonpositive_integer() && (-b).numerator() < n_) {
      throw InvalidParameter("lower parameter " + b.to_string() +
                             " produces a zero denominator");
    }
  }
}

Rational HyperSpec::term(unsigned i) const {
  Rational num(1);
  Rational den = factorial_q(i);
  for (const auto& a : upper_) num *= pochhammer(a, i);
  for (const auto& b : lower_) den *= pochhammer(b, i);
  return num / den;
}

std::vector<Rational> HyperSpec::terms() const {
  // Ratio recurrence t_{i+1} = t_i * prod(a+i) / (prod(b+i) (i+1)).
  std::vector<Rational> out;
  out.reserve(n_ + 1);
  Rational t(1);
  out.push_back(t);
  for (unsigned i = 0; i < n_; ++i) {
    Rational num(1);
    Rational den(static_cast<long>(i + 1));
    for (const auto& a : upper_) num *= a + Rational(static_cast<long>(i));
    for (const auto& b : lower_) den *= b + Rational(static_cast<long>(i));
    t = t * num / den;
    out.push_back(t);
  }
  return out;
}

Scalar pfq_eval(const HyperSpec& spec, const Scalar& z) {
  const auto c = spec.terms();
  Scalar acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + Scalar(*it);
  return acc;
}

Poly pfq_poly(const HyperSpec& spec) {
  const auto c = spec.terms();
  return Poly(std::vector<Scalar>(c.begin(), c.end()));
}

// ---------------------------------------------------------------- summation theorems

Rational chu_vandermonde(unsigned n, const Rational& a, const Rational& b) {
  if (b.is_nonpositive_integer() && (-b).numerator() < n) {
    throw InvalidParameter("Chu-Vandermonde: lower parameter vanishes inside the sum");
  }
  return guarded("Chu-Vandermonde", [&] { return pochhammer(b - a, n) / pochhammer(b, n); });
}

Rational pfaff_saalschutz(unsigned n, const Rational& a, const Rational& b, const Rational& c) {
  const Rational lower2 = Rational(1) - Rational(static_cast<long>(n)) + a + b - c;
  for (const auto* p : {&c, &lower2}) {
    if (p->is_nonpositive_integer() && (-*p).numerator() < n) {
      throw InvalidParameter("Pfaff-Saalschutz: lower parameter vanishes inside the sum");
    }
  }
  return guarded("Pfaff-Saalschutz", [&] {
    return pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n));
  });
}

// ---------------------------------------------------------------- contiguous relations

Rational contiguous_residual(Contiguous relation, const ContiguousParams& p, const Rational& z) {
  const Rational one(1);
  const auto& [a, b, c, d, e, f, g] = p;
  switch (relation) {
    case Contiguous::rec1:
      return b * series_at({a, b + one, c, d}, {e, f, g}, z) -
             c * series_at({a, b, c + one, d}, {e, f, g}, z) -
             (b - c) * series_at({a, b, c, d}, {e, f, g}, z);
    case Contiguous::rec2:
      return (b - a) * c * d * z *
                 series_at({a + one, b + one, c + one, d + one}, {e + one, f + one, g + one}, z) -
             e * f * g *
                 (series_at({a + one, b, c, d}, {e, f, g}, z) -
                  series_at({a, b + one, c, d}, {e, f, g}, z));
    case Contiguous::rec3:
      return b * c * z * series_at({a + one, b + one, c + one}, {d + one, e + one}, z) -
             d * e * (series_at({a + one, b, c}, {d, e}, z) - series_at({a, b, c}, {d, e}, z));
    case Contiguous::rec4:
      return f * series_at({a, b, c, d}, {e + one, f, g}, z) -
             e * series_at({a, b, c, d}, {e, f + one, g}, z) +
             (e - f) * series_at({a, b, c, d}, {e + one, f + one, g}, z);
    case Contiguous::rec5:
      return d * series_at({a, b, c}, {d, e}, z) - a * series_at({a + one, b, c}, {d + one, e}, z) +
             (a - d) * series_at({a, b, c}, {d + one, e}, z);
  }
  throw InvalidParameter("unknown contiguous relation");
}

// ---------------------------------------------------------------- Lemma-style closed forms

Rational hyp1_closed(Hyp1Variant variant, unsigned n, const Rational& a, const Rational& b) {
  if (n < 1) throw InvalidParameter("hyp1 closed forms need n >= 1");
  const Rational one(1);
  const auto un = static_cast<long>(n);
  if (variant == Hyp1Variant::hyp2) {
    const Rational d = a - Rational(un);
    return guarded("hyp2", [&] {
      const Rational sign(neg1_pow(un + 1));
      return sign * factorial_q(n - 1) * (b + one) / pochhammer(d + one, n) *
             (one + sign * pochhammer(d - b, n) / pochhammer(b + one, n));
    });
  }
  const Rational d = a - Rational(un) - one;
  return guarded("hyp3", [&] {
    const Rational lead = d * (b + Rational(2)) / (a * Rational(un));
    const Rational inner =
        (d - one) * (b + one) / (Rational(un + 1) * (a - one)) *
        (pochhammer(d - a, n + 1) / pochhammer(d - one, n + 1) -
         pochhammer(d - a, n + 1) * pochhammer(d - b - one, n + 1) /
             (pochhammer(d - one, n + 1) * pochhammer(d - a - b, n + 1)));
    const Rational tail =
        pochhammer(d - a, n) * pochhammer(d - b, n) / (pochhammer(d, n) * pochhammer(d - a - b, n));
    return lead * inner + lead * tail;
  });
}

Rational hyp1_series(Hyp1Variant variant, unsigned n, const Rational& a, const Rational& b) {
  if (n < 1) throw InvalidParameter("hyp1 series need n >= 1");
  const Rational one(1);
  const Rational top = one - Rational(static_cast<long>(n));
  if (variant == Hyp1Variant::hyp2) {
    const Rational d = a - Rational(static_cast<long>(n));
    return series_at({top, a + one, b + one}, {d + one, b + Rational(2)}, one);
  }
  const Rational d = a - Rational(static_cast<long>(n)) - one;
  return series_at({top, a + one, b + one}, {d + one, b + Rational(3)}, one);
}

// ---------------------------------------------------------------- orthogonal polynomials

Poly jacobi_monic(unsigned n, const Rational& alpha, const Rational& beta) {
  if (alpha <= Rational(-1) || beta <= Rational(-1)) {
    throw InvalidParameter("Jacobi parameters must exceed -1");
  }
  const Rational one(1);
  const Rational ab1 = Rational(static_cast<long>(n)) + alpha + beta + one;
  const HyperSpec spec({-Rational(static_cast<long>(n)), ab1}, {alpha + one});
  const Rational scale = Rational(2).pow(static_cast<int>(n)) * pochhammer(alpha + one, n) /
                         pochhammer(ab1, n);
  // 2F1 in x = (1-t)/2.
  const Poly in_x = pfq_poly(spec);
  return in_x.compose_affine(Scalar(half(-1)), Scalar(half(1))) * Scalar(scale);
}

Poly ultraspherical_monic(unsigned n, const Rational& lambda, UltraRoute route) {
  if (lambda <= half(-1)) throw InvalidParameter("ultraspherical parameter must exceed -1/2");
  if (route == UltraRoute::jacobi) {
    return jacobi_monic(n, lambda - half(1), lambda - half(1));
  }
  const unsigned eps = n % 2;
  const unsigned half_n = n / 2;
  const Rational e(static_cast<long>(eps));
  const Rational nh(static_cast<long>(half_n));
  const HyperSpec spec({-nh, nh + lambda + e}, {half(1) + e});
  const Rational scale = Rational(neg1_pow(half_n)) * pochhammer(half(1) + e, half_n) /
                         pochhammer(nh + lambda + e, half_n);
  // Spread the series in t^2 and multiply by t^eps.
  const auto c = spec.terms();
  std::vector<Scalar> coeffs(2 * half_n + eps + 1);
  for (unsigned i = 0; i < c.size(); ++i) coeffs[2 * i + eps] = Scalar(c[i] * scale);
  return Poly(std::move(coeffs));
}

PiecewisePoly phi_basis(int n, int k, int i) {
  if (k < 0) throw InvalidParameter("phi_basis needs k >= 0");
  if (i > n) throw IndexOutOfRange("phi_basis index exceeds n");
  if (i < 2 * k + 2) return {};
  Poly bump = Poly({Scalar(1), Scalar(0), Scalar(-1)});
  Poly w = Poly::constant(1);
  for (int j = 0; j <= k; ++j) w *= bump;
  const Poly p = ultraspherical_monic(static_cast<unsigned>(i - 2 * k - 2), Rational(4 * k + 5, 2));
  return PiecewisePoly::on_interval(w * p, -1, 1);
}

RampPair ramp_pair(int n, int k, int i) {
  if (k < 0 || i < 0 || i > k || n < 2 * k + 2) {
    throw InvalidParameter("ramp_pair needs 0 <= i <= k and n >= 2k+2");
  }
  Poly w = Poly::constant(1);
  const Poly left({Scalar(1), Scalar(-1)});
  const Poly right({Scalar(1), Scalar(1)});
  for (int j = 0; j < i; ++j) w *= left;
  for (int j = 0; j <= k; ++j) w *= right;
  const Poly p = jacobi_monic(static_cast<unsigned>(n - k - i - 1), Rational(i + k + 1),
                              Rational(i + k + 2));
  RampPair out;
  out.r = PiecewisePoly::on_interval(w * p, -1, 1);
  out.l = out.r.reflect();
  out.n = n;
  out.k = k;
  out.i = i;
  return out;
}

Rational ramp_norm_closed(int n, int k, int i) {
  if (k < 0 || i < 0 || i > k || n < 2 * k + 2) {
    throw InvalidParameter("ramp norm needs 0 <= i <= k and n >= 2k+2");
  }
  const auto len = static_cast<unsigned>(n - k - i - 1);
  const auto un = static_cast<unsigned>(n);
  const Rational nf = factorial_q(un);
  return Rational(2).pow(2 * n + 1) * nf * nf * pochhammer(Rational(-n + k + i + 1), len) /
         (pochhammer(Rational(n + k + i + 3), len) * factorial_q(2 * un + 1));
}

Rational abp1_closed(int n, int alpha, int beta) {
  if (alpha < 0 || alpha > n || beta < 0) {
    throw InvalidParameter("abp1 closed form needs 0 <= alpha <= n and integer beta >= 0");
  }
  const auto len = static_cast<unsigned>(n - alpha);
  return Rational(2).pow(2 * n + beta - alpha + 1) * pochhammer(Rational(alpha + 1), len) *
         factorial_q(static_cast<unsigned>(beta)) * factorial_q(static_cast<unsigned>(n)) *
         pochhammer(Rational(alpha - n), len) /
         (pochhammer(Rational(n + beta + 2), len) *
          factorial_q(static_cast<unsigned>(2 * n - alpha + beta + 1)));
}

double abp1_closed_float(int n, int alpha, double beta) {
  if (alpha < 0 || alpha > n || !(beta > -1.0)) {
    throw InvalidParameter("abp1 closed form needs 0 <= alpha <= n and beta > -1");
  }
  const int len = n - alpha;
  double poch_a = 1.0;
  double poch_neg = 1.0;
  double poch_b = 1.0;
  for (int j = 0; j < len; ++j) {
    poch_a *= alpha + 1 + j;
    poch_neg *= alpha - n + j;
    poch_b *= n + beta + 2 + j;
  }
  const double log_gamma_ratio = std::lgamma(beta + 1.0) - std::lgamma(2.0 * n - alpha + beta + 2.0);
  return std::pow(2.0, 2.0 * n + beta - alpha + 1.0) * poch_a * std::tgamma(n + 1.0) * poch_neg /
         poch_b * std::exp(log_gamma_ratio);
}

}  // namespace pwmra
