#include "pwmra/mrabuild.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "pwmra/hyperjacobi.hpp"

namespace pwmra {

namespace {

Rational half(long num) { return Rational(num, 2); }
Rational q(long v) { return Rational(v); }
Rational fact(int n) { return factorial_q(static_cast<unsigned>(n)); }

PiecewisePoly on_sym_interval(Poly p) { return PiecewisePoly::on_interval(std::move(p), -1, 1); }

/// -|t| t^k on [-1, 1].
PiecewisePoly minus_abs_power(int k) {
  const Poly tk = Poly::monomial(static_cast<unsigned>(k + 1));
  return PiecewisePoly({-1, 0, 1}, {tk, -tk});
}

/// Series in t^2 times t^eps with an overall factor.
Poly even_series(const HyperSpec& spec, int eps, const Rational& scale) {
  const auto c = spec.terms();
  std::vector<Scalar> coeffs(2 * c.size() - 1 + static_cast<std::size_t>(eps));
  for (std::size_t i = 0; i < c.size(); ++i) coeffs[2 * i + static_cast<std::size_t>(eps)] = Scalar(c[i] * scale);
  return Poly(std::move(coeffs));
}

struct InteriorCache {
  std::mutex mu;
  std::vector<PiecewisePoly> phi;  // phi^0_i at index i - 2
  std::vector<Scalar> norm_sq;
  std::map<int, std::vector<PiecewisePoly>> by_n;
};

InteriorCache& interior_cache() {
  static InteriorCache cache;
  return cache;
}

/// Makes sure phi^0_2..phi^0_n are present; caller holds the lock.
void extend_interior(InteriorCache& c, int n) {
  while (static_cast<int>(c.phi.size()) + 2 <= n) {
    const int i = static_cast<int>(c.phi.size()) + 2;
    PiecewisePoly p = phi_basis(i, 0, i);
    c.norm_sq.push_back(inner_product(p, p));
    c.phi.push_back(std::move(p));
  }
}

template <typename K, typename V>
struct Memo {
  std::mutex mu;
  std::map<K, V> values;
};

}  // namespace

// ---------------------------------------------------------------- families

std::string to_string(Family f) {
  switch (f) {
    case Family::generic:
      return "generic";
    case Family::rational4n:
      return "rational-4n";
    case Family::rational4n1:
      return "rational-4n1";
  }
  return "generic";
}

Family parse_family(std::string_view text) {
  if (text == "generic") return Family::generic;
  if (text == "rational-4n" || text == "rational4n") return Family::rational4n;
  if (text == "rational-4n1" || text == "rational4n1") return Family::rational4n1;
  throw InvalidParameter("unknown family: " + std::string(text));
}

bool family_accepts(int n, Family f) noexcept {
  switch (f) {
    case Family::generic:
      return n >= 3;
    case Family::rational4n:
      return n >= 4 && n % 4 == 0;
    case Family::rational4n1:
      return n >= 9 && n % 4 == 1;
  }
  return false;
}

void validate_family(int n, Family f) {
  if (!family_accepts(n, f)) {
    throw InvalidFamily("n = " + std::to_string(n) + " is not admissible for family " + to_string(f));
  }
}

void require(std::vector<CheckRecord>& log, std::string identity, bool ok, std::string detail) {
  log.push_back({identity, ok, detail});
  if (!ok) throw ConstructionFailure(std::move(identity), detail.empty() ? "exact check failed" : detail);
}

// ---------------------------------------------------------------- basic pieces

PiecewisePoly ubar(int m) {
  if (m < 1) throw InvalidParameter("ubar needs m >= 1");
  const Poly lead = (m % 2 == 1) ? Poly::constant(1) : Poly::monomial(1);
  const Poly tm = Poly::monomial(static_cast<unsigned>(m));
  // On [-1, 0]: lead + t^m; on [0, 1]: lead - t^m.
  return PiecewisePoly({-1, 0, 1}, {lead + tm, lead - tm});
}

const std::vector<PiecewisePoly>& interior_basis(int n) {
  auto& c = interior_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.by_n.find(n);
  if (it != c.by_n.end()) return it->second;
  extend_interior(c, n);
  std::vector<PiecewisePoly> out;
  for (int i = 2; i <= n; ++i) out.push_back(c.phi[static_cast<std::size_t>(i - 2)]);
  return c.by_n.emplace(n, std::move(out)).first->second;
}

PiecewisePoly project_A0(const PiecewisePoly& f, int n) {
  if (!f.is_zero() && (f.support_min() < Rational(-1) || f.support_max() > Rational(1))) {
    throw SupportViolation("project_A0 expects support in [-1, 1]");
  }
  std::vector<PiecewisePoly> phi;
  std::vector<Scalar> norms;
  {
    auto& c = interior_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    extend_interior(c, n);
    for (int i = 2; i <= n; ++i) {
      phi.push_back(c.phi[static_cast<std::size_t>(i - 2)]);
      norms.push_back(c.norm_sq[static_cast<std::size_t>(i - 2)]);
    }
  }
  PiecewisePoly out = f;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    const Scalar coeff = inner_product(f, phi[k]);
    if (coeff.is_zero()) continue;
    out -= phi[k] * (coeff / norms[k]);
  }
  return out;
}

Rational roro_closed(int n) {
  if (n < 1) throw InvalidParameter("roro needs n >= 1");
  return Rational(neg1_pow(n + 1) * 8) / Rational(static_cast<long>(n + 2) * (n + 1) * n);
}

PiecewisePoly r0_ramp_form(int n) {
  if (n < 1) throw InvalidParameter("r0 needs n >= 1");
  const Rational k = Rational(2) * Rational(double_factorial(2 * n + 1)) / fact(n + 2);
  const Poly p = jacobi_monic(static_cast<unsigned>(n - 1), q(1), q(2));
  return on_sym_interval(Poly({Scalar(1), Scalar(1)}) * p * Scalar(k));
}

PiecewisePoly r0_determinant_form(int n) {
  if (n < 1) throw InvalidParameter("r0 needs n >= 1");
  const Poly pn = ultraspherical_monic(static_cast<unsigned>(n), half(3));
  const Poly pn1 = ultraspherical_monic(static_cast<unsigned>(n - 1), half(3));
  const Scalar minus_one(-1);
  const Poly diff = pn * pn.eval(minus_one).inverse() - pn1 * pn1.eval(minus_one).inverse();
  return on_sym_interval(diff * Scalar(neg1_pow(n)));
}

PiecewisePoly r0(int n) {
  static Memo<int, PiecewisePoly> memo;
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.values.find(n);
    if (it != memo.values.end()) return it->second;
  }
  if (n < 1) throw InvalidParameter("r0 needs n >= 1");
  PiecewisePoly r = project_A0(on_sym_interval(Poly({Scalar(1), Scalar(1)})), n);
  std::vector<CheckRecord> log;
  require(log, "rhr", r == r0_ramp_form(n), "projection of 1+t differs from the scaled ramp, n=" + std::to_string(n));
  require(log, "rhatr-determinant", r == r0_determinant_form(n),
          "projection of 1+t differs from the ultraspherical determinant form, n=" + std::to_string(n));
  std::lock_guard<std::mutex> lock(memo.mu);
  return memo.values.emplace(n, std::move(r)).first->second;
}

PiecewisePoly l0(int n) { return r0(n).reflect(); }

// ---------------------------------------------------------------- f and u

PiecewisePoly f_closed(int eps, int m, int n) {
  if ((eps != 0 && eps != 1) || m < 0 || n < 0) throw InvalidParameter("f_closed needs eps in {0,1}, m, n >= 0");
  const Rational e(eps);
  const Rational nn(n);
  const Rational mm(m);
  const Rational big = nn * nn + (half(3) + e) * nn + mm + e;  // n^2 + (3/2+eps) n + m + eps
  const Rational pre = pochhammer(half(1) + e, static_cast<unsigned>(n)) * (big + q(1)) *
                       pochhammer(half(1) - mm, static_cast<unsigned>(n)) /
                       (pochhammer(mm + q(1) + e, static_cast<unsigned>(n + 1)) * fact(n + 1));
  const HyperSpec spec({-nn, -big, -mm - half(1), nn + half(3) + e},
                       {half(1) + e, -big - q(1), half(1) - mm});
  PiecewisePoly f = on_sym_interval(even_series(spec, eps, pre));
  std::vector<CheckRecord> log;
  require(log, "fefo", f == f1_closed(eps, m, n) + f2_closed(eps, m, n),
          "f != f1 + f2 for eps=" + std::to_string(eps) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
  return f;
}

PiecewisePoly f1_closed(int eps, int m, int n) {
  const Rational e(eps);
  const Rational nn(n);
  const Rational mm(m);
  const Rational pre = pochhammer(half(1) + e, static_cast<unsigned>(n + 1)) *
                       pochhammer(half(1) - mm, static_cast<unsigned>(n)) /
                       (pochhammer(mm + q(1) + e, static_cast<unsigned>(n + 1)) * fact(n));
  const HyperSpec spec({-nn, -mm - half(1), nn + half(3) + e}, {half(1) + e, half(1) - mm});
  return on_sym_interval(even_series(spec, eps, pre));
}

PiecewisePoly f2_closed(int eps, int m, int n) {
  const Rational e(eps);
  const Rational nn(n);
  const Rational mm(m);
  const Rational pre = -pochhammer(half(1) + e, static_cast<unsigned>(n)) *
                       pochhammer(-mm - half(1), static_cast<unsigned>(n + 1)) /
                       (pochhammer(mm + q(1) + e, static_cast<unsigned>(n + 1)) * fact(n + 1));
  const HyperSpec spec({-nn, nn + half(3) + e}, {half(1) + e});
  return on_sym_interval(even_series(spec, eps, pre));
}

PiecewisePoly f2_ultraspherical(int eps, int m, int n) {
  const Rational mm(m);
  const Rational e(eps);
  const Poly p = ultraspherical_monic(static_cast<unsigned>(2 * n + eps), half(3));
  const Rational scale = Rational(neg1_pow(n + 1)) * pochhammer(-mm - half(1), static_cast<unsigned>(n + 1)) /
                         pochhammer(mm + q(1) + e, static_cast<unsigned>(n + 1));
  return on_sym_interval(p * (Scalar(scale) / p.eval(Scalar(1))));
}

UIndex u_index(int N, int j) {
  if (N < 1 || j < 0 || j > N - 1) {
    throw IndexOutOfRange("u^0_{N,j} needs 0 <= j <= N-1 (N=" + std::to_string(N) + ", j=" + std::to_string(j) + ")");
  }
  UIndex out;
  out.mbar = N - j;
  out.eps = (out.mbar - 1) % 2;
  out.m = (out.mbar - 1 - out.eps) / 2;
  out.half_n = (j % 2 == 0) ? (N - 1 - out.eps) / 2 : (N - out.eps) / 2;
  return out;
}

const UFunction& u_function(int N, int j) {
  static Memo<std::pair<int, int>, UFunction> memo;
  const auto key = std::make_pair(N, j);
  {
    std::lock_guard<std::mutex> lock(memo.mu);
    auto it = memo.values.find(key);
    if (it != memo.values.end()) return it->second;
  }
  const UIndex idx = u_index(N, j);
  UFunction u;
  u.n = N;
  u.j = j;
  u.eps = idx.eps;
  u.m = idx.m;
  u.half_n = idx.half_n;
  u.as_piecewise = project_A0(ubar(idx.mbar), N);
  u.f_closed = minus_abs_power(2 * idx.m + idx.eps) + f_closed(idx.eps, idx.m, idx.half_n);
  std::vector<CheckRecord> log;
  require(log, "rep1", u.as_piecewise == u.f_closed,
          "projection and closed form differ for u^0_{" + std::to_string(N) + "," + std::to_string(j) + "}");
  std::lock_guard<std::mutex> lock(memo.mu);
  return memo.values.emplace(key, std::move(u)).first->second;
}

// ---------------------------------------------------------------- Mellin

Rational mellin_f_closed(int eps, int m, int n, const Rational& z) {
  if (z.sign() <= 0) throw DomainError("Mellin closed form needs z > 0");
  const Rational e(eps);
  const Rational mm(m);
  const Rational nn(n);
  const auto len = static_cast<unsigned>(n + 1);
  const Rational common = pochhammer(-mm - half(1), len) / pochhammer(mm + q(1) + e, len);
  const Rational denom = (nn + q(1)) * (q(2) * nn + q(1) + q(2) * e);
  const Rational t1 = Rational(1) / (z + q(2) * mm + q(1) + e);
  const Rational t2 = Rational(neg1_pow(n + 1)) * common / denom;
  const Rational zs = (z + e) / q(2);
  const Rational t3 = Rational(neg1_pow(n)) * (zs + mm + half(1) + (nn + q(1)) * (nn + half(1) + e)) /
                      ((zs + mm + half(1)) * denom) * common * pochhammer(-(z - e) / q(2) + half(1), len) /
                      pochhammer(-nn - zs, len);
  return t1 + t2 + t3;
}

double mellin_f_closed(int eps, int m, int n, double z) {
  if (!(z > 0.0)) throw DomainError("Mellin closed form needs z > 0");
  auto poch = [](double a, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= a + i;
    return r;
  };
  const double e = eps;
  const double common = poch(-m - 0.5, n + 1) / poch(m + 1.0 + e, n + 1);
  const double denom = (n + 1.0) * (2.0 * n + 1.0 + 2.0 * e);
  const double zs = (z + e) / 2.0;
  const double t1 = 1.0 / (z + 2.0 * m + 1.0 + e);
  const double t2 = neg1_pow(n + 1) * common / denom;
  const double t3 = neg1_pow(n) * (zs + m + 0.5 + (n + 1.0) * (n + 0.5 + e)) / ((zs + m + 0.5) * denom) *
                    common * poch(-(z - e) / 2.0 + 0.5, n + 1) / poch(-n - zs, n + 1);
  return t1 + t2 + t3;
}

// ---------------------------------------------------------------- closed inner products

std::string to_string(InnerProductKind k) {
  switch (k) {
    case InnerProductKind::ru:
      return "rue";
    case InnerProductKind::uu:
      return "uuev";
    case InnerProductKind::rn0un0:
      return "rn0un0";
    case InnerProductKind::umum1:
      return "umum1";
  }
  return "rue";
}

namespace {

void check_range(InnerProductKind kind, int n, int m, int m1, int eps) {
  bool ok = n >= 0 && m >= 0;
  switch (kind) {
    case InnerProductKind::ru:
      ok = ok && (eps == 0 || eps == 1) && m <= n;
      break;
    case InnerProductKind::uu:
      ok = ok && (eps == 0 || eps == 1) && m1 >= 0 && m <= n && m1 <= n;
      break;
    case InnerProductKind::rn0un0:
      ok = ok && n >= 1 && n > 2 * m;
      break;
    case InnerProductKind::umum1:
      ok = ok && m1 >= 0 && n >= 2 * std::max(m, m1) + 1;
      break;
  }
  if (!ok) throw InvalidParameter("index range not valid for " + to_string(kind));
}

}  // namespace

Rational closed_inner_product(InnerProductKind kind, int n, int m, int m1, int eps) {
  check_range(kind, n, m, m1, eps);
  const Rational e(eps);
  const auto len = static_cast<unsigned>(n + 1);
  switch (kind) {
    case InnerProductKind::ru:
      return Rational(neg1_pow(n + 1)) * pochhammer(Rational(-m) - half(1), len) /
             (pochhammer(Rational(m + 1) + e, len) * (Rational(n) + half(1) + e) * Rational(n + 1));
    case InnerProductKind::uu: {
      const Rational s = Rational(m + m1) + half(3) + e;
      return pochhammer(Rational(-m1) - half(1), len) * pochhammer(Rational(-m) - half(1), len) *
             (s + Rational(n + 1) * (Rational(n) + half(1) + e)) /
             (pochhammer(Rational(m1 + 1) + e, len) * pochhammer(Rational(m + 1) + e, len) * s *
              Rational(n + 1) * (Rational(n) + half(1) + e));
    }
    case InnerProductKind::rn0un0:
      return Rational(neg1_pow(m)) * fact(n - 1) * fact(n - 2 * m) * fact(2 * m) /
             (Rational(2).pow(n - 2) * fact(n + 1) * fact(n - m) * fact(m));
    case InnerProductKind::umum1:
      return Rational(neg1_pow(m + m1)) * fact(n - 2 * m) * fact(n - 2 * m1) * fact(2 * m) * fact(2 * m1) *
             fact(n - 1) * Rational(n * n + 5 * n + 2 - 4 * (m + m1)) /
             (Rational(2).pow(2 * n - 1) * fact(m) * fact(m1) * fact(n - m) * fact(n - m1) * fact(n + 1) *
              Rational(2 * n + 1 - 2 * (m + m1)));
  }
  throw InvalidParameter("unknown inner product kind");
}

Rational umum1_via_rn0un0(int n, int m, int m1) {
  check_range(InnerProductKind::umum1, n, m, m1, 0);
  const Rational a = closed_inner_product(InnerProductKind::rn0un0, n, m, 0, 0);
  const Rational b = closed_inner_product(InnerProductKind::rn0un0, n, m1, 0, 0);
  return a * b * fact(n + 1) * Rational(n * n + 5 * n + 2 - 4 * (m + m1)) /
         (Rational(8) * fact(n - 1) * Rational(2 * n + 1 - 2 * (m + m1)));
}

Rational integrated_inner_product(InnerProductKind kind, int n, int m, int m1, int eps) {
  check_range(kind, n, m, m1, eps);
  const int big = 2 * n + 1 + eps;
  switch (kind) {
    case InnerProductKind::ru:
      return inner_product(r0(big), u_function(big, 2 * n - 2 * m).as_piecewise).rational();
    case InnerProductKind::uu:
      return inner_product(u_function(big, 2 * n - 2 * m).as_piecewise,
                           u_function(big, 2 * n - 2 * m1).as_piecewise)
          .rational();
    case InnerProductKind::rn0un0:
      return inner_product(r0(n), u_function(n, 2 * m).as_piecewise).rational();
    case InnerProductKind::umum1:
      return inner_product(u_function(n, 2 * m).as_piecewise, u_function(n, 2 * m1).as_piecewise).rational();
  }
  throw InvalidParameter("unknown inner product kind");
}

// ---------------------------------------------------------------- alpha

AlphaQuadratic alpha_quadratic(int n, int m, int m1) {
  if (m < 0 || m1 < 0 || n < 2 * std::max(m, m1) + 1) {
    throw InvalidParameter("alpha quadratic needs n >= 2 max(m, m1) + 1");
  }
  const PiecewisePoly& um = u_function(n, 2 * m).as_piecewise;
  const PiecewisePoly& um1 = u_function(n, 2 * m1).as_piecewise;
  const PiecewisePoly r = r0(n);
  const Rational rl = inner_product(r, r.reflect()).rational().abs();
  const Rational ru = inner_product(r, um).rational();
  const Rational ru1 = inner_product(r, um1).rational();
  AlphaQuadratic out;
  out.a = inner_product(um, um).rational() * rl - ru * ru;
  out.b = inner_product(um, um1).rational() * rl - ru * ru1;
  out.c = inner_product(um1, um1).rational() * rl - ru1 * ru1;
  return out;
}

std::vector<Scalar> alpha_coeff(int n, int m, int m1) {
  const AlphaQuadratic qd = alpha_quadratic(n, m, m1);
  if (qd.a.is_zero()) throw InvalidParameter("degenerate quadratic: leading coefficient vanishes");
  const Rational disc = qd.discriminant();
  if (disc.sign() < 0) throw DomainError("alpha quadratic has no real root");
  const Scalar lead = Scalar(-qd.b / qd.a);
  if (disc.is_zero()) return {lead};
  const Scalar root = sqrt_exact(disc) / Scalar(qd.a);
  std::vector<Scalar> roots{lead - root, lead + root};
  if ((roots[1] - roots[0]).sign() < 0) std::swap(roots[0], roots[1]);
  return roots;
}

Scalar alpha_printed(int n) {
  if (n < 3) throw InvalidParameter("alpha(n) needs n >= 3");
  const Rational rad = Rational(3L * (2 * n + 1) * (n + 1)) / Rational(static_cast<long>(2 * n - 3) * (n - 1));
  const Scalar lead(Rational(static_cast<long>(n - 2) * (2 * n + 1), n - 1));
  return Scalar(2) * (lead - Scalar(2) * sqrt_exact(rad)) / Scalar(Rational(static_cast<long>(n) * (2 * n - 1)));
}

Rational alpha_4n1_printed(int k) {
  if (k < 1) throw InvalidParameter("alpha_{k+1,2k}(4k+1) needs k >= 1");
  return Rational(neg1_pow(k)) * Rational(4 * k - 1) * fact(4 * k) * fact(k + 1) * fact(3 * k) /
         (Rational(3) * fact(2 * k) * fact(2 * k + 1) * fact(2 * k + 2) * fact(2 * k - 1));
}

// ---------------------------------------------------------------- w and q

WFunction w_function(int n, Family family) {
  validate_family(n, family);
  WFunction w;
  w.n = n;
  w.family = family;
  std::vector<CheckRecord> log;
  int k = 0;
  switch (family) {
    case Family::generic:
      w.m = 0;
      w.m1 = 1;
      break;
    case Family::rational4n:
      k = n / 4;
      w.m = 0;
      w.m1 = k;
      break;
    case Family::rational4n1:
      k = (n - 1) / 4;
      w.m = k + 1;
      w.m1 = 2 * k;
      break;
  }
  const std::vector<Scalar> roots = alpha_coeff(n, w.m, w.m1);
  Scalar target;
  std::string identity;
  switch (family) {
    case Family::generic:
      target = alpha_printed(n);
      identity = "symw";
      break;
    case Family::rational4n:
      target = Scalar(0);
      identity = "al0";
      break;
    case Family::rational4n1:
      target = Scalar(alpha_4n1_printed(k));
      identity = "alpha-4n1";
      require(log, "alpha-4n1-double-root", roots.size() == 1, "discriminant does not vanish");
      break;
  }
  const bool found = std::find(roots.begin(), roots.end(), target) != roots.end();
  require(log, identity, found, "displayed alpha is not a root of the quadratic, n=" + std::to_string(n));
  w.alpha = target;
  w.value = u_function(n, 2 * w.m).f_closed * w.alpha + u_function(n, 2 * w.m1).f_closed;

  const PiecewisePoly r = r0(n);
  const PiecewisePoly l = r.reflect();
  const Scalar lhs = inner_product(r, l) * inner_product(w.value, w.value);
  const Scalar rhs = inner_product(r, w.value) * inner_product(w.value, l);
  require(log, "newint", lhs == rhs, "<r,l><w,w> != <r,w><w,l> for n=" + std::to_string(n));
  return w;
}

QRamp q_ramp(int n, Family family) {
  const WFunction w = w_function(n, family);
  const PiecewisePoly r = r0(n);
  QRamp out;
  out.projection_constant = inner_product(w.value, r) / inner_product(w.value, w.value);
  out.q_r = r - w.value * out.projection_constant;
  out.q_l = out.q_r.reflect();
  switch (family) {
    case Family::generic: {
      const Scalar root = sqrt_exact(Rational(3L * (2 * n + 1) * (2 * n - 3) * (n - 1) * (n + 1)));
      out.printed_constant = Scalar(Rational(2).pow(n - 2) * Rational(n - 1) /
                                    Rational(static_cast<long>(n + 1) * (n + 2))) *
                             (Scalar(Rational(static_cast<long>(n + 1) * (2 * n - 3))) - root);
      break;
    }
    case Family::rational4n: {
      const int k = n / 4;
      out.printed_constant = Scalar(Rational(neg1_pow(k)) * Rational(2).pow(4 * k) * fact(k) * fact(3 * k) /
                                    (fact(2 * k + 1) * fact(2 * k)));
      break;
    }
    case Family::rational4n1: {
      const int k = (n - 1) / 4;
      out.printed_constant = Scalar(-Rational(3) * Rational(16).pow(k) * fact(2 * k) * fact(2 * k + 1) /
                                    (Rational(static_cast<long>(4 * k + 3) * (k - 1)) * fact(4 * k)));
      break;
    }
  }
  std::vector<CheckRecord> log;
  require(log, "ortoramp", out.projection_constant == out.printed_constant,
          "projection constant " + out.projection_constant.to_string() + " != displayed " +
              out.printed_constant.to_string());
  require(log, "q-orthogonal-to-w", inner_product(out.q_r, w.value).is_zero());
  require(log, "q-orthogonal-mra", inner_product(out.q_r, out.q_l).is_zero(), "<q_r, q_l> != 0");
  return out;
}

// ---------------------------------------------------------------- assembly

ScalingVector assemble_phi(int n, Family family) {
  validate_family(n, family);
  ScalingVector sv;
  sv.n = n;
  sv.family = family;
  auto& log = sv.checks;

  const WFunction w = w_function(n, family);
  const QRamp qr = q_ramp(n, family);
  sv.alpha = w.alpha;
  sv.projection_constant = qr.projection_constant;
  log.push_back({"rhr", true, "r^n_0 equals the scaled ramp"});
  log.push_back({"newint", true, "w satisfies <r,l><w,w> = <r,w><w,l>"});
  log.push_back({"ortoramp", true, "projection constant matches the displayed value"});

  const PiecewisePoly left = qr.q_r.compose_affine(Rational(2), Rational(1)).restrict(-1, 0);
  const PiecewisePoly right = qr.q_l.compose_affine(Rational(2), Rational(-1)).restrict(0, 1);
  sv.entries.push_back(left + right);
  sv.entries.push_back(w.value.compose_affine(Rational(2), Rational(-1)));
  for (int j = 2; j <= n; ++j) {
    sv.entries.push_back(phi_basis(n, 0, j).compose_affine(Rational(2), Rational(-1)));
  }

  sv.symmetry.push_back({Rational(0), Parity::even});
  sv.symmetry.push_back({half(1), neg1_pow(n + 1) > 0 ? Parity::even : Parity::odd});
  for (int j = 2; j <= n; ++j) sv.symmetry.push_back({half(1), neg1_pow(j) > 0 ? Parity::even : Parity::odd});

  bool support_ok = true;
  for (std::size_t j = 0; j < sv.entries.size(); ++j) {
    const auto& e = sv.entries[j];
    if (e.is_zero()) {
      support_ok = false;
      continue;
    }
    const Rational lo = j == 0 ? Rational(-1) : Rational(0);
    support_ok = support_ok && e.support_min() >= lo && e.support_max() <= Rational(1);
  }
  require(log, "support", support_ok, "entry support outside its interval");

  bool sym_ok = true;
  std::string sym_detail;
  for (std::size_t j = 0; j < sv.entries.size(); ++j) {
    if (!check_symmetry(sv.entries[j], sv.symmetry[j])) {
      sym_ok = false;
      sym_detail += "entry " + std::to_string(j) + " ";
    }
  }
  require(log, "smyphi", sym_ok, sym_detail);

  for (const auto& e : sv.entries) sv.norms_sq.push_back(inner_product(e, e));
  bool norms_ok = std::all_of(sv.norms_sq.begin(), sv.norms_sq.end(), [](const Scalar& s) { return s.sign() > 0; });
  require(log, "norms", norms_ok, "an entry has nonpositive squared norm");

  std::string ortho_detail;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < sv.entries.size(); ++a) {
    for (std::size_t b = 0; b < sv.entries.size(); ++b) {
      for (int s = -2; s <= 2; ++s) {
        if (s == 0 && b <= a) continue;
        ++pairs;
        const Scalar v = inner_product(sv.entries[a], sv.entries[b].compose_affine(Rational(1), Rational(-s)));
        if (!v.is_zero() && ortho_detail.size() < 400) {
          ortho_detail += "<phi" + std::to_string(a) + ", phi" + std::to_string(b) + "(.-" + std::to_string(s) +
                          ")> = " + v.to_string() + "; ";
        }
      }
    }
  }
  require(log, "orthogonality", ortho_detail.empty(),
          ortho_detail.empty() ? std::to_string(pairs) + " shifted pairs vanish" : ortho_detail);

  if (family != Family::generic) {
    const bool rational = std::all_of(sv.entries.begin(), sv.entries.end(),
                                      [](const PiecewisePoly& e) { return e.extension_degree() == 1; });
    require(log, "rationality", rational, "an entry has an irrational coefficient");
  }
  return sv;
}

}  // namespace pwmra
