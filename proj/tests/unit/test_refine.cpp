#include <map>

#include <gtest/gtest.h>

#include "pwmra/refine.hpp"

using namespace pwmra;

namespace {

struct Built {
  ScalingVector phi;
  RefinementSet rs;
};

const Built& built(int n, Family family = Family::generic) {
  static std::map<std::pair<int, Family>, Built> cache;
  auto it = cache.find({n, family});
  if (it == cache.end()) {
    ScalingVector phi = assemble_phi(n, family);
    RefinementSet rs = build_refinement(phi);
    it = cache.emplace(std::pair{n, family}, Built{std::move(phi), std::move(rs)}).first;
  }
  return it->second;
}

/// sum_i M_i F(2t - i), with F the scaling vector.
std::vector<PiecewisePoly> expand(const std::array<Matrix, 4>& m, const ScalingVector& phi) {
  const std::size_t rows = m[0].rows();
  std::vector<PiecewisePoly> out(rows);
  for (int i = -2; i <= 1; ++i) {
    const Matrix& mi = m[static_cast<std::size_t>(i + 2)];
    for (std::size_t k = 0; k < phi.entries.size(); ++k) {
      const PiecewisePoly f = dilate_translate(phi.entries[k], 1, i);
      for (std::size_t r = 0; r < rows; ++r) {
        if (!mi(r, k).is_zero()) out[r] += f * mi(r, k);
      }
    }
  }
  return out;
}

}  // namespace

class RefineN : public ::testing::TestWithParam<int> {};

TEST_P(RefineN, AllChecksPass) {
  const auto& b = built(GetParam());
  for (const auto& c : b.rs.checks) EXPECT_TRUE(c.passed) << c.identity << ": " << c.detail;
}

TEST_P(RefineN, LeftBlocksOnlyReachBoundaryEntry) {
  const int n = GetParam();
  const auto& rs = built(n).rs;
  for (int i : {-2, -1}) {
    for (int r = 1; r <= n; ++r) {
      for (int k = 0; k <= n; ++k) EXPECT_TRUE(rs.C(i)(r, k).is_zero()) << i << " " << r << " " << k;
    }
  }
}

TEST_P(RefineN, ZeroPattern) {
  const int n = GetParam();
  const Matrix& c0 = built(n).rs.C(0);
  for (int i = 3; i <= n; i += 2) {
    EXPECT_TRUE(c0(i, 1).is_zero()) << i;
    for (int j = i + 1; j <= n; ++j) EXPECT_TRUE(c0(i, j).is_zero()) << i << " " << j;
  }
  if (n % 2 == 0) EXPECT_TRUE(c0(1, 1).is_zero());
}

TEST_P(RefineN, DilationIdentity) {
  const auto& b = built(GetParam());
  EXPECT_EQ(expand(b.rs.c, b.phi), b.phi.entries);
}

TEST_P(RefineN, WaveletReconstruction) {
  const auto& b = built(GetParam());
  EXPECT_EQ(expand(b.rs.d, b.phi), b.rs.psi);
}

TEST_P(RefineN, WaveletCountAndSupports) {
  const int n = GetParam();
  const auto& rs = built(n).rs;
  ASSERT_EQ(rs.psi.size(), static_cast<std::size_t>(n + 1));
  EXPECT_GE(rs.psi[0].support_min(), Rational(-1));
  EXPECT_LE(rs.psi[1].support_max(), Rational(1));
  for (int j = 2; j <= n; ++j) {
    EXPECT_GE(rs.psi[j].support_min(), Rational(0));
    EXPECT_LE(rs.psi[j].support_max(), Rational(1));
  }
}

TEST_P(RefineN, WaveletSymmetry) {
  const auto& rs = built(GetParam()).rs;
  EXPECT_EQ(rs.psi[0].reflect(), rs.psi[0]);
  EXPECT_EQ(rs.psi[1].reflect(), -rs.psi[1]);
  for (std::size_t j = 2; j < rs.psi.size(); ++j) {
    const PiecewisePoly r = rs.psi[j].reflect_about(Rational(1, 2));
    EXPECT_EQ(r, rs.interior_kinds[j - 2] == SymKind::symmetric ? rs.psi[j] : -rs.psi[j]) << j;
  }
}

TEST_P(RefineN, FullSystemOrthogonal) {
  const auto& b = built(GetParam());
  const auto& phi = b.phi.entries;
  const auto& psi = b.rs.psi;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    for (int s = -2; s <= 2; ++s) {
      for (const auto& f : phi) EXPECT_TRUE(inner_product(psi[j], dilate_translate(f, 0, s)).is_zero());
      for (std::size_t k = 0; k < psi.size(); ++k) {
        const Scalar v = inner_product(psi[j], dilate_translate(psi[k], 0, s));
        if (j == k && s == 0) {
          EXPECT_EQ(v, b.rs.psi_norms_sq[j]);
        } else {
          EXPECT_TRUE(v.is_zero()) << j << " " << k << " " << s;
        }
      }
    }
  }
}

TEST_P(RefineN, InteriorCoefficients) {
  const int n = GetParam();
  const auto& b = built(n);
  const Matrix e = b.rs.c_tilde[2].hconcat(b.rs.c_tilde[3]);
  ASSERT_EQ(b.rs.interior_coefficients.size(), static_cast<std::size_t>(n - 1));
  for (std::size_t w = 0; w < b.rs.interior_coefficients.size(); ++w) {
    const auto& p = b.rs.interior_coefficients[w];
    ASSERT_EQ(p.size(), static_cast<std::size_t>(2 * n + 2));
    EXPECT_TRUE(p[0].is_zero());
    for (const Scalar& x : e * p) EXPECT_TRUE(x.is_zero());
    PiecewisePoly f;
    for (int a = 0; a <= n; ++a) {
      f += dilate_translate(b.phi.entries[a], 1, 0) * p[a];
      f += dilate_translate(b.phi.entries[a], 1, 1) * p[n + 1 + a];
    }
    EXPECT_EQ(f, b.rs.psi[w + 2]);
    for (int a = 0; a <= n; ++a) {
      EXPECT_EQ(b.rs.D(0)(w + 2, a), p[a]);
      EXPECT_EQ(b.rs.D(1)(w + 2, a), p[n + 1 + a]);
    }
    EXPECT_TRUE(b.rs.D(-2)(w + 2, 0).is_zero());
    EXPECT_TRUE(b.rs.D(-1)(w + 2, 0).is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Generic, RefineN, ::testing::Range(3, 7));

TEST(Refine, SecondWaveletOrthogonalAtN3) {
  const auto& b = built(3);
  for (const auto& f : b.phi.entries) {
    EXPECT_TRUE(integrate_exact(b.rs.psi[2] * f, 0, 1).is_zero());
  }
}

TEST(Refine, BoundaryWavelets) {
  const auto& b = built(4);
  const auto [p0, p1] = boundary_wavelets(b.phi);
  EXPECT_TRUE(inner_product(p0, b.phi.entries[0]).is_zero());
  EXPECT_TRUE(inner_product(p0, p1).is_zero());
  EXPECT_EQ(p1.reflect(), -p1);
  EXPECT_EQ(p0, b.rs.psi[0]);
}

TEST(Refine, RationalFamiliesStayRational) {
  for (auto [n, fam] : {std::pair{4, Family::rational4n}, std::pair{8, Family::rational4n}}) {
    const auto& b = built(n, fam);
    for (const auto& c : b.rs.checks) EXPECT_TRUE(c.passed) << c.identity;
    for (const auto& m : b.rs.c) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t k = 0; k < m.cols(); ++k) EXPECT_TRUE(m(r, k).is_rational());
      }
    }
    for (const auto& f : b.rs.psi) EXPECT_EQ(f.extension_degree(), 1);
  }
}

TEST(SymPattern, Shapes) {
  const SymPattern s = SymPattern::make(SymKind::symmetric, 4);
  EXPECT_EQ(s.templ.rows(), 10u);
  EXPECT_EQ(s.templ.cols(), 5u);
  const SymPattern a = SymPattern::make(SymKind::antisymmetric, 4);
  EXPECT_EQ(a.templ.cols(), 4u);
  std::vector<Scalar> b{Scalar(7), Scalar(1), Scalar(2), Scalar(3), Scalar(4)};
  const auto p = s.expand(b);
  EXPECT_TRUE(p[0].is_zero());
  EXPECT_EQ(p[5], Scalar(7));
}
