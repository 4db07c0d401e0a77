#include <cmath>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "pwmra/filterbank.hpp"

using namespace pwmra;

namespace {

struct Built {
  ScalingVector phi;
  FilterBank fb;
};

const Built& built(int n) {
  static std::map<int, Built> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    ScalingVector phi = assemble_phi(n, Family::generic);
    const RefinementSet rs = build_refinement(phi);
    FilterBank fb = FilterBank::from(rs, phi);
    it = cache.emplace(n, Built{std::move(phi), std::move(fb)}).first;
  }
  return it->second;
}

CoeffStream random_stream(std::size_t len, std::size_t width, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CoeffStream s(len, CoeffVec(width));
  for (auto& v : s) {
    for (auto& x : v) x = u(gen);
  }
  return s;
}

CoeffStream zeros(std::size_t len, std::size_t width) { return CoeffStream(len, CoeffVec(width, 0.0)); }

}  // namespace

class FilterBankN : public ::testing::TestWithParam<int> {};

TEST_P(FilterBankN, RoundTrip) {
  const auto& fb = built(GetParam()).fb;
  for (int levels = 1; levels <= 3; ++levels) {
    const CoeffStream s = random_stream(16, fb.width(), 7 + levels);
    const Decomposition d = analyze(fb, s, levels);
    EXPECT_EQ(d.details.size(), static_cast<std::size_t>(levels));
    EXPECT_EQ(d.coarse.size(), 16u >> levels);
    EXPECT_LE(max_abs_difference(synthesize(fb, d), s), 1e-10);
  }
}

TEST_P(FilterBankN, EnergyPreserved) {
  const auto& fb = built(GetParam()).fb;
  const CoeffStream s = random_stream(8, fb.width(), 3);
  const auto [c, d] = analyze_step(fb, s);
  double in = 0.0;
  double out = 0.0;
  for (const auto& v : s) {
    for (double x : v) in += x * x;
  }
  for (const auto* part : {&c, &d}) {
    for (const auto& v : *part) {
      for (double x : v) out += x * x;
    }
  }
  EXPECT_NEAR(in, out, 1e-10 * in);
}

TEST_P(FilterBankN, ZeroInZeroOut) {
  const auto& fb = built(GetParam()).fb;
  const Decomposition d = analyze(fb, zeros(8, fb.width()), 2);
  for (const auto& v : d.coarse) {
    for (double x : v) EXPECT_EQ(x, 0.0);
  }
  EXPECT_EQ(max_abs_difference(synthesize(fb, d), zeros(8, fb.width())), 0.0);
}

TEST_P(FilterBankN, ImpulseSynthesisMatchesScalingFunction) {
  const int n = GetParam();
  const auto& b = built(n);
  std::vector<double> norm;
  for (const auto& q : b.phi.norms_sq) norm.push_back(std::sqrt(q.to_double()));
  const std::size_t width = b.fb.width();
  for (std::size_t k = 0; k < width; ++k) {
    Decomposition d;
    d.coarse = zeros(4, width);
    d.coarse[2][k] = 1.0;
    d.details.push_back(zeros(4, width));
    const CoeffStream fine = synthesize(b.fb, d);
    for (int step = 1; step < 64; ++step) {
      const double t = 0.5 + 3.0 * step / 64.0;
      double lhs = 0.0;
      for (std::size_t m = 0; m < fine.size(); ++m) {
        for (std::size_t a = 0; a < width; ++a) {
          if (fine[m][a] == 0.0) continue;
          lhs += fine[m][a] * std::sqrt(2.0) * b.phi.entries[a].eval_float(2 * t - static_cast<double>(m)) / norm[a];
        }
      }
      const double rhs = b.phi.entries[k].eval_float(t - 2.0) / norm[k];
      ASSERT_NEAR(lhs, rhs, 1e-10) << "k=" << k << " t=" << t;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Generic, FilterBankN, ::testing::Range(3, 6));

TEST(FilterBank, ShapeErrors) {
  const auto& fb = built(3).fb;
  EXPECT_THROW(analyze_step(fb, zeros(3, fb.width())), ShapeMismatch);
  EXPECT_THROW(analyze_step(fb, zeros(4, fb.width() + 1)), ShapeMismatch);
  EXPECT_THROW(analyze(fb, zeros(12, fb.width()), 3), ShapeMismatch);
  EXPECT_THROW(analyze(fb, zeros(4, 2), 0), ShapeMismatch);
  EXPECT_THROW(synthesize_step(fb, zeros(2, fb.width()), zeros(3, fb.width())), ShapeMismatch);
  EXPECT_THROW(max_abs_difference(zeros(2, 4), zeros(3, 4)), ShapeMismatch);
}

TEST(FilterBank, EmptyInput) {
  const auto& fb = built(3).fb;
  const Decomposition d = analyze(fb, {}, 3);
  EXPECT_TRUE(d.coarse.empty());
  EXPECT_TRUE(synthesize(fb, d).empty());
}
