#include "pwmra/filterbank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pwmra/errors.hpp"

namespace pwmra {

namespace {

using FMat = std::vector<std::vector<double>>;

FMat scaled(const Matrix& m, const std::vector<double>& left, const std::vector<double>& right) {
  FMat out = m.to_double();
  for (std::size_t r = 0; r < out.size(); ++r) {
    for (std::size_t c = 0; c < out[r].size(); ++c) out[r][c] *= right[c] / (left[r] * std::sqrt(2.0));
  }
  return out;
}

void check_width(const FilterBank& fb, const CoeffStream& s) {
  for (const auto& v : s) {
    if (v.size() != fb.width()) {
      throw ShapeMismatch("coefficient vectors must have width " + std::to_string(fb.width()) + ", got " +
                          std::to_string(v.size()));
    }
  }
}

std::size_t wrap(long k, std::size_t len) {
  const long l = static_cast<long>(len);
  return static_cast<std::size_t>(((k % l) + l) % l);
}

}  // namespace

FilterBank FilterBank::from(const RefinementSet& rs, const ScalingVector& phi) {
  FilterBank fb;
  fb.n = rs.n;
  std::vector<double> nphi;
  std::vector<double> npsi;
  for (const auto& s : phi.norms_sq) nphi.push_back(std::sqrt(s.to_double()));
  for (const auto& s : rs.psi_norms_sq) npsi.push_back(std::sqrt(s.to_double()));
  for (std::size_t k = 0; k < 4; ++k) {
    fb.h[k] = scaled(rs.c[k], nphi, nphi);
    fb.g[k] = scaled(rs.d[k], npsi, nphi);
  }
  return fb;
}

std::pair<CoeffStream, CoeffStream> analyze_step(const FilterBank& fb, const CoeffStream& s) {
  check_width(fb, s);
  if (s.size() % 2 != 0) throw ShapeMismatch("analysis needs an even number of coefficient vectors");
  const std::size_t w = fb.width();
  const std::size_t half = s.size() / 2;
  CoeffStream c(half, CoeffVec(w, 0.0));
  CoeffStream d(half, CoeffVec(w, 0.0));
  for (std::size_t j = 0; j < half; ++j) {
    for (int i = -2; i <= 1; ++i) {
      const auto& src = s[wrap(2 * static_cast<long>(j) + i, s.size())];
      const auto& h = fb.h[static_cast<std::size_t>(i + 2)];
      const auto& g = fb.g[static_cast<std::size_t>(i + 2)];
      for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t k = 0; k < w; ++k) {
          c[j][r] += h[r][k] * src[k];
          d[j][r] += g[r][k] * src[k];
        }
      }
    }
  }
  return {std::move(c), std::move(d)};
}

CoeffStream synthesize_step(const FilterBank& fb, const CoeffStream& coarse, const CoeffStream& detail) {
  check_width(fb, coarse);
  check_width(fb, detail);
  if (coarse.size() != detail.size()) throw ShapeMismatch("coarse and detail streams differ in length");
  const std::size_t w = fb.width();
  const std::size_t len = 2 * coarse.size();
  CoeffStream s(len, CoeffVec(w, 0.0));
  for (std::size_t j = 0; j < coarse.size(); ++j) {
    for (int i = -2; i <= 1; ++i) {
      auto& dst = s[wrap(2 * static_cast<long>(j) + i, len)];
      const auto& h = fb.h[static_cast<std::size_t>(i + 2)];
      const auto& g = fb.g[static_cast<std::size_t>(i + 2)];
      for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t k = 0; k < w; ++k) dst[k] += h[r][k] * coarse[j][r] + g[r][k] * detail[j][r];
      }
    }
  }
  return s;
}

Decomposition analyze(const FilterBank& fb, const CoeffStream& s, int levels) {
  if (levels < 0) throw ShapeMismatch("levels must be nonnegative");
  Decomposition out;
  if (s.empty()) return out;
  check_width(fb, s);
  const std::size_t block = std::size_t{1} << levels;
  if (s.size() % block != 0) {
    throw ShapeMismatch("input length " + std::to_string(s.size()) + " is not a multiple of 2^" +
                        std::to_string(levels));
  }
  out.coarse = s;
  for (int l = 0; l < levels; ++l) {
    auto [c, d] = analyze_step(fb, out.coarse);
    out.coarse = std::move(c);
    out.details.push_back(std::move(d));
  }
  return out;
}

CoeffStream synthesize(const FilterBank& fb, const Decomposition& d) {
  CoeffStream s = d.coarse;
  for (auto it = d.details.rbegin(); it != d.details.rend(); ++it) s = synthesize_step(fb, s, *it);
  return s;
}

double max_abs_difference(const CoeffStream& a, const CoeffStream& b) {
  if (a.size() != b.size()) throw ShapeMismatch("streams differ in length");
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].size() != b[j].size()) throw ShapeMismatch("vectors differ in width");
    for (std::size_t k = 0; k < a[j].size(); ++k) m = std::max(m, std::abs(a[j][k] - b[j][k]));
  }
  return m;
}

}  // namespace pwmra
