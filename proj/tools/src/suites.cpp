#include "pwmra_cli/suites.hpp"

#include <cmath>
#include <random>

#include "pwmra/hyperjacobi.hpp"
#include "pwmra/refine.hpp"
#include "pwmra/xform.hpp"

namespace pwmra::cli {

namespace {

const double kGrid[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};

class Recorder {
 public:
  Recorder(std::string suite, int n) : suite_(std::move(suite)), n_(n) {}

  void add(const std::string& identity, bool ok, std::string detail = {}) {
    out_.push_back({suite_, identity, n_, ok, std::move(detail)});
  }

  /// Runs `body`, which reports failures through `fail`; records one line.
  template <typename F>
  void check(const std::string& identity, F body) {
    std::string detail;
    auto fail = [&detail](const std::string& what) {
      if (detail.size() < 300) detail += what + "; ";
    };
    try {
      body(fail);
    } catch (const std::exception& e) {
      detail += e.what();
    }
    add(identity, detail.empty(), detail);
  }

  std::vector<SuiteRecord> take() { return std::move(out_); }

 private:
  std::string suite_;
  int n_;
  std::vector<SuiteRecord> out_;
};

std::string idx(std::initializer_list<int> v) {
  std::string s = "(";
  for (int x : v) s += std::to_string(x) + ",";
  s.back() = ')';
  return s;
}

}  // namespace

std::vector<SuiteRecord> exact_suite(int n, Family family) {
  Recorder rec("exact", n);
  try {
    const ScalingVector phi = assemble_phi(n, family);
    for (const auto& c : phi.checks) rec.add(c.identity, c.passed, c.detail);
    const RefinementSet rs = build_refinement(phi);
    for (const auto& c : rs.checks) rec.add(c.identity, c.passed, c.detail);
  } catch (const ConstructionFailure& e) {
    rec.add(e.identity(), false, e.what());
  }

  rec.check("ramp", [&](auto fail) {
    for (int k = 0; 2 * k + 2 <= n; ++k) {
      for (int i = 0; i <= k; ++i) {
        const RampPair ri = ramp_pair(n, k, i);
        for (int j = 0; j <= k; ++j) {
          const Scalar v = inner_product(ri.r, ramp_pair(n, k, j).l);
          const Scalar want = i == j ? Scalar(ramp_norm_closed(n, k, i)) : Scalar();
          if (v != want) fail("<r,l>" + idx({k, i, j}));
        }
        for (int j = 2 * k + 2; j <= n; ++j) {
          const PiecewisePoly b = phi_basis(n, k, j);
          if (!inner_product(ri.r, b).is_zero() || !inner_product(ri.l, b).is_zero()) fail("A0" + idx({k, i, j}));
        }
      }
    }
  });

  rec.check("roro", [&](auto fail) {
    if (inner_product(r0(n), l0(n)) != Scalar(roro_closed(n))) fail("n=" + std::to_string(n));
  });

  rec.check("rep1", [&](auto fail) {
    for (int j = 0; j < n; ++j) {
      const UFunction& u = u_function(n, j);
      if (!(u.as_piecewise == u.f_closed)) fail("j=" + std::to_string(j));
    }
    // u_{2h+eps, 2h-2m-1} = u_{2h+1+eps, 2h-2m}
    for (int eps = 0; eps <= 1; ++eps) {
      if ((n - eps) % 2 != 0) continue;
      const int h = (n - eps) / 2;
      for (int m = 0; 2 * m + 1 <= 2 * h; ++m) {
        if (!(u_function(n, 2 * h - 2 * m - 1).as_piecewise == u_function(n + 1, 2 * h - 2 * m).as_piecewise)) {
          fail("cross" + idx({h, eps, m}));
        }
      }
    }
  });

  rec.check("mtfe", [&](auto fail) {
    for (int eps = 0; eps <= 1; ++eps) {
      for (int m = 0; m <= n; ++m) {
        const PiecewisePoly f = f_closed(eps, m, n).restrict(Rational(0), Rational(1));
        for (unsigned z = 1; z <= 10; ++z) {
          if (mellin_integer_moment(f, z) != Scalar(mellin_f_closed(eps, m, n, Rational(z)))) {
            fail(idx({eps, m, static_cast<int>(z)}));
          }
        }
      }
    }
  });

  for (auto kind : {InnerProductKind::ru, InnerProductKind::uu}) {
    rec.check(to_string(kind), [&](auto fail) {
      for (int eps = 0; eps <= 1; ++eps) {
        for (int m = 0; m <= n; ++m) {
          for (int m1 = (kind == InnerProductKind::ru ? 0 : m); m1 <= (kind == InnerProductKind::ru ? 0 : n); ++m1) {
            if (closed_inner_product(kind, n, m, m1, eps) != integrated_inner_product(kind, n, m, m1, eps)) {
              fail(idx({eps, m, m1}));
            }
          }
        }
      }
    });
  }
  rec.check("rn0un0", [&](auto fail) {
    for (int m = 0; 2 * m < n; ++m) {
      if (closed_inner_product(InnerProductKind::rn0un0, n, m, 0, 0) !=
          integrated_inner_product(InnerProductKind::rn0un0, n, m, 0, 0)) {
        fail("m=" + std::to_string(m));
      }
    }
  });
  rec.check("umum1", [&](auto fail) {
    for (int m = 0; 2 * m + 1 <= n; ++m) {
      for (int m1 = m; 2 * m1 + 1 <= n; ++m1) {
        const Rational v = integrated_inner_product(InnerProductKind::umum1, n, m, m1, 0);
        if (closed_inner_product(InnerProductKind::umum1, n, m, m1, 0) != v || umum1_via_rn0un0(n, m, m1) != v) {
          fail(idx({m, m1}));
        }
      }
    }
  });
  return rec.take();
}

std::vector<SuiteRecord> fourier_suite(int n, double tolerance) {
  Recorder rec("fourier", n);
  auto compare = [&](auto fail, const std::string& tag, const FTResult& r, const PiecewisePoly& f, double w) {
    const QuadratureResult q = quadrature_oracle(f, w);
    const double d = std::abs(r.value - q.value);
    if (!(d <= tolerance)) fail(tag + " w=" + std::to_string(w) + " diff=" + std::to_string(d));
  };
  auto moment = [&](auto fail, const std::string& tag, const FTResult& r, const PiecewisePoly& f) {
    const double exact = integrate_exact(f).to_double();
    const double d = std::abs(r.value - std::complex<double>(exact, 0.0));
    if (!(d <= 1e-14 * std::max(1.0, std::abs(exact)))) fail(tag + " w=0 diff=" + std::to_string(d));
  };

  rec.check("ftpn1", [&](auto fail) {
    for (int eps = 0; eps <= 1; ++eps) {
      if (n < 1) break;
      const PiecewisePoly f = interior_phi(n, eps);
      const std::string tag = "eps=" + std::to_string(eps);
      for (double w : kGrid) compare(fail, tag, fourier_phi(n, eps, w, tolerance * 1e-3), f, w);
      moment(fail, tag, fourier_phi(n, eps, 0.0), f);
    }
  });
  rec.check("ftln2", [&](auto fail) {
    if (n < 2) return;
    const PiecewisePoly f = l0(n);
    for (double w : kGrid) compare(fail, "", fourier_l0(n, w, tolerance * 1e-3), f, w);
    moment(fail, "", fourier_l0(n, 0.0), f);
  });
  rec.check("ftuf", [&](auto fail) {
    for (int eps = 0; eps <= 1; ++eps) {
      for (int m = 0; m <= n; ++m) {
        const PiecewisePoly f = u_function(2 * n + 1 + eps, 2 * n - 2 * m).f_closed;
        const std::string tag = idx({eps, m});
        for (double w : kGrid) compare(fail, tag, fourier_u(eps, m, n, w, tolerance * 1e-3), f, w);
        moment(fail, tag, fourier_u(eps, m, n, 0.0), f);
      }
    }
  });
  return rec.take();
}

std::vector<SuiteRecord> hyper_suite(std::uint64_t seed, int trials) {
  Recorder rec("hyper", 0);
  std::mt19937_64 gen(seed);
  auto rnd_int = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  auto rnd_q = [&]() { return Rational(rnd_int(-30, 30), rnd_int(1, 7)); };
  auto rnd_nonint = [&]() {
    Rational q;
    do q = rnd_q();
    while (q.is_integer());
    return q;
  };

  auto randomized = [&](const std::string& identity, auto one_trial) {
    rec.check(identity, [&](auto fail) {
      int done = 0;
      int attempts = 0;
      while (done < trials) {
        if (++attempts > 50 * trials) {
          fail("too few admissible parameter draws");
          return;
        }
        try {
          if (!one_trial()) fail("trial " + std::to_string(done));
        } catch (const InvalidParameter&) {
          continue;
        } catch (const DivisionByZero&) {
          continue;
        }
        ++done;
      }
    });
  };

  randomized("chu-vandermonde", [&] {
    const auto n = static_cast<unsigned>(rnd_int(0, 10));
    const Rational a = rnd_q();
    const Rational b = rnd_nonint();
    return Scalar(chu_vandermonde(n, a, b)) == pfq_eval(HyperSpec({-Rational(n), a}, {b}), Scalar(1));
  });
  randomized("pfaff-saalschutz", [&] {
    const auto n = static_cast<unsigned>(rnd_int(0, 10));
    const Rational a = rnd_q();
    const Rational b = rnd_q();
    const Rational c = rnd_nonint();
    const Rational d = -Rational(n) + a + b - c + Rational(1);
    return Scalar(pfaff_saalschutz(n, a, b, c)) == pfq_eval(HyperSpec({-Rational(n), a, b}, {c, d}), Scalar(1));
  });
  const std::pair<Contiguous, const char*> rels[] = {{Contiguous::rec1, "rec1"},
                                                     {Contiguous::rec2, "rec2"},
                                                     {Contiguous::rec3, "rec3"},
                                                     {Contiguous::rec4, "rec4"},
                                                     {Contiguous::rec5, "rec5"}};
  for (const auto& [rel, name] : rels) {
    randomized(name, [&] {
      ContiguousParams p{-Rational(rnd_int(1, 8)), rnd_q(), rnd_q(), rnd_nonint(), rnd_nonint(), rnd_nonint(),
                         rnd_nonint()};
      if (rel == Contiguous::rec3) p.a -= Rational(1);
      return contiguous_residual(rel, p, rnd_q()).is_zero();
    });
  }
  for (auto v : {Hyp1Variant::hyp2, Hyp1Variant::hyp3}) {
    randomized(v == Hyp1Variant::hyp2 ? "hyp1-hyp2" : "hyp1-hyp3", [&] {
      const auto n = static_cast<unsigned>(rnd_int(1, 9));
      const Rational a = rnd_nonint();
      const Rational b = rnd_nonint();
      return hyp1_closed(v, n, a, b) == hyp1_series(v, n, a, b);
    });
  }
  return rec.take();
}

}  // namespace pwmra::cli
