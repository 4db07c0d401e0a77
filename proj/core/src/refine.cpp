#include "pwmra/refine.hpp"

#include <string>

namespace pwmra {

namespace {

std::size_t slot(int i) { return static_cast<std::size_t>(i + 2); }

int sign_pow(int k) { return neg1_pow(k); }

PiecewisePoly shifted(const PiecewisePoly& f, int s) { return f.compose_affine(Rational(1), Rational(-s)); }

/// sum_k v_k * fs_k
PiecewisePoly combine(const std::vector<Scalar>& v, const std::vector<PiecewisePoly>& fs) {
  PiecewisePoly out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out += fs[k] * v[k];
  }
  return out;
}

/// f on [0, inf) minus f on (-inf, 0].
PiecewisePoly sign_times(const PiecewisePoly& f) {
  if (f.is_zero()) return f;
  const Rational lo = f.support_min();
  const Rational hi = f.support_max();
  PiecewisePoly out;
  if (hi > Rational(0)) out += f.restrict(std::max(lo, Rational(0)), hi);
  if (lo < Rational(0)) out -= f.restrict(lo, std::min(hi, Rational(0)));
  return out;
}

/// Records the first few nonzero shifted inner products between two families.
std::string cross_report(const std::vector<PiecewisePoly>& a, const std::string& an,
                         const std::vector<PiecewisePoly>& b, const std::string& bn, bool skip_self) {
  std::string detail;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      for (int s = -2; s <= 2; ++s) {
        if (skip_self && s == 0 && y <= x) continue;
        const Scalar v = inner_product(a[x], shifted(b[y], s));
        if (!v.is_zero() && detail.size() < 400) {
          detail += "<" + an + std::to_string(x) + ", " + bn + std::to_string(y) + "(.-" + std::to_string(s) +
                    ")> = " + v.to_string() + "; ";
        }
      }
    }
  }
  return detail;
}

}  // namespace

std::string to_string(SymKind k) { return k == SymKind::symmetric ? "symmetric" : "antisymmetric"; }

SymPattern SymPattern::make(SymKind kind, int n) {
  SymPattern p;
  p.kind = kind;
  p.n = n;
  const auto un = static_cast<std::size_t>(n);
  if (kind == SymKind::symmetric) {
    p.templ = Matrix(2 * un + 2, un + 1);
    for (std::size_t k = 1; k <= un; ++k) p.templ(k, k) = Scalar(1);
    p.templ(un + 1, 0) = Scalar(1);
    p.templ(un + 2, 1) = Scalar(sign_pow(n + 1));
    for (std::size_t k = 2; k <= un; ++k) p.templ(un + 1 + k, k) = Scalar(sign_pow(static_cast<int>(k)));
  } else {
    // Column c holds b_{c+1}.
    p.templ = Matrix(2 * un + 2, un);
    for (std::size_t k = 1; k <= un; ++k) p.templ(k, k - 1) = Scalar(1);
    p.templ(un + 2, 0) = Scalar(sign_pow(n));
    for (std::size_t k = 2; k <= un; ++k) p.templ(un + 1 + k, k - 1) = Scalar(-sign_pow(static_cast<int>(k)));
  }
  return p;
}

std::vector<PiecewisePoly> dilated_entries(const ScalingVector& phi, int i) {
  std::vector<PiecewisePoly> out;
  out.reserve(phi.entries.size());
  for (const auto& e : phi.entries) out.push_back(dilate_translate(e, 1, Rational(i)));
  return out;
}

RefinementSet refinement_matrices(const ScalingVector& phi) {
  RefinementSet rs;
  rs.n = phi.n;
  rs.family = phi.family;
  const std::size_t dim = phi.entries.size();
  auto& log = rs.checks;

  for (const auto& nsq : phi.norms_sq) rs.gram.push_back(nsq * Scalar(Rational(1, 2)));
  std::array<std::vector<PiecewisePoly>, 4> dil;
  for (int i = -2; i <= 1; ++i) dil[slot(i)] = dilated_entries(phi, i);

  // Phi(2t - i) must be an orthogonal system across i with the stated Gram diagonal.
  std::string gram_detail;
  for (int i = -2; i <= 1; ++i) {
    for (std::size_t a = 0; a < dim; ++a) {
      if (inner_product(dil[slot(i)][a], dil[slot(i)][a]) != rs.gram[a]) gram_detail += "norm ";
    }
  }
  require(log, "refine2", gram_detail.empty(), gram_detail);

  for (int i = -2; i <= 1; ++i) {
    Matrix ct(dim, dim);
    Matrix cm(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) {
        ct(a, b) = inner_product(phi.entries[a], dil[slot(i)][b]);
        cm(a, b) = ct(a, b) / rs.gram[b];
      }
    }
    rs.c_tilde[slot(i)] = std::move(ct);
    rs.c[slot(i)] = std::move(cm);
  }

  std::string dil_detail;
  for (std::size_t a = 0; a < dim; ++a) {
    PiecewisePoly sum;
    for (int i = -2; i <= 1; ++i) {
      std::vector<Scalar> row(dim);
      for (std::size_t b = 0; b < dim; ++b) row[b] = rs.C(i)(a, b);
      sum += combine(row, dil[slot(i)]);
    }
    if (!(sum == phi.entries[a])) dil_detail += "entry " + std::to_string(a) + " ";
  }
  require(log, "refl", dil_detail.empty(), dil_detail.empty() ? "Phi = sum C_i Phi(2.-i)" : dil_detail);

  // Sign and zero structure implied by the symmetries of the entries.
  const int n = phi.n;
  const auto& cm2 = rs.C(-2);
  const auto& cm1 = rs.C(-1);
  const auto& c0 = rs.C(0);
  const auto& c1 = rs.C(1);
  std::string detail;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok && detail.size() < 400) detail += what + "; ";
  };
  const auto nn = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i <= nn; ++i) expect(cm2(i, 0).is_zero(), "C-2(" + std::to_string(i) + ",0)");
  expect(cm2(0, 1) == c1(0, 1) * Scalar(sign_pow(n + 1)), "C-2(0,1)");
  for (std::size_t k = 2; k <= nn; ++k) {
    expect(cm2(0, k) == c1(0, k) * Scalar(sign_pow(static_cast<int>(k))), "C-2(0," + std::to_string(k) + ")");
  }
  for (std::size_t i = 1; i <= nn; ++i) {
    for (std::size_t k = 1; k <= nn; ++k) expect(cm2(i, k).is_zero(), "C-2(" + std::to_string(i) + "," + std::to_string(k) + ")");
  }
  expect(cm1(0, 0) == c1(0, 0), "C-1(0,0)");
  expect(cm1(0, 1) == c0(0, 1) * Scalar(sign_pow(n + 1)), "C-1(0,1)");
  for (std::size_t k = 2; k <= nn; ++k) {
    expect(cm1(0, k) == c0(0, k) * Scalar(sign_pow(static_cast<int>(k))), "C-1(0," + std::to_string(k) + ")");
  }
  for (std::size_t i = 1; i <= nn; ++i) {
    for (std::size_t k = 0; k <= nn; ++k) expect(cm1(i, k).is_zero(), "C-1(" + std::to_string(i) + "," + std::to_string(k) + ")");
  }
  for (std::size_t i = 1; i <= nn; ++i) expect(c0(i, 0).is_zero(), "C0(" + std::to_string(i) + ",0)");
  expect(c1(1, 1) == c0(1, 1), "C1(1,1)");
  for (std::size_t k = 2; k <= nn; ++k) {
    expect(c1(1, k) == c0(1, k) * Scalar(sign_pow(static_cast<int>(k) + n + 1)), "C1(1," + std::to_string(k) + ")");
  }
  for (std::size_t i = 2; i <= nn; ++i) {
    expect(c1(i, 1) == c0(i, 1) * Scalar(sign_pow(static_cast<int>(i) + n + 1)), "C1(" + std::to_string(i) + ",1)");
    for (std::size_t k = 2; k <= nn; ++k) {
      expect(c1(i, k) == c0(i, k) * Scalar(sign_pow(static_cast<int>(i + k))),
             "C1(" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
  }
  require(log, "crefine", detail.empty(), detail.empty() ? "all sign/zero relations hold" : detail);

  detail.clear();
  for (std::size_t i = 3; i <= nn; i += 2) {
    for (std::size_t j = i + 1; j <= nn; ++j) expect(c0(i, j).is_zero(), "C0(" + std::to_string(i) + "," + std::to_string(j) + ")");
    expect(c0(i, 1).is_zero(), "C0(" + std::to_string(i) + ",1)");
  }
  if (n % 2 == 0) expect(c0(1, 1).is_zero(), "C0(1,1)");
  require(log, "zeroco", detail.empty(), detail.empty() ? "all predicted zeros vanish" : detail);
  return rs;
}

std::pair<PiecewisePoly, PiecewisePoly> boundary_wavelets(const ScalingVector& phi) {
  const PiecewisePoly& p0 = phi.entries.at(0);
  const PiecewisePoly p0d = dilate_translate(p0, 1, Rational(0));
  const Scalar cross = inner_product(p0d, p0);
  PiecewisePoly psi0 = p0d - p0 * (cross / phi.norms_sq.at(0));
  PiecewisePoly psi1 = sign_times(p0 - p0d * (cross / inner_product(p0d, p0d)));
  return {std::move(psi0), std::move(psi1)};
}

InteriorWavelets interior_wavelets(const ScalingVector& phi, const RefinementSet& refset) {
  const int n = phi.n;
  const std::size_t dim = phi.entries.size();
  const Matrix e = refset.c_tilde[slot(0)].hconcat(refset.c_tilde[slot(1)]);
  const std::vector<PiecewisePoly> d0 = dilated_entries(phi, 0);
  const std::vector<PiecewisePoly> d1 = dilated_entries(phi, 1);
  std::vector<PiecewisePoly> basis = d0;
  basis.insert(basis.end(), d1.begin(), d1.end());

  // Coefficient inner product: the dilated entries are orthogonal with Gram diagonal C_n.
  auto ip = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    Scalar s;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].is_zero() || b[k].is_zero()) continue;
      s += a[k] * b[k] * refset.gram[k % dim];
    }
    return s;
  };

  InteriorWavelets out;
  for (SymKind kind : {SymKind::symmetric, SymKind::antisymmetric}) {
    const SymPattern pat = SymPattern::make(kind, n);
    const auto sols = nullspace(e * pat.templ);
    std::vector<std::vector<Scalar>> ortho;
    for (const auto& b : sols) {
      std::vector<Scalar> v = pat.expand(b);
      for (const auto& u : ortho) {
        const Scalar f = ip(v, u) / ip(u, u);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * u[k];
      }
      ortho.push_back(std::move(v));
    }
    for (auto& v : ortho) {
      out.functions.push_back(combine(v, basis));
      out.coefficients.push_back(std::move(v));
      out.kinds.push_back(kind);
    }
  }
  if (static_cast<int>(out.functions.size()) != n - 1) {
    throw RankDeficiency("wavelet-completion", "expected " + std::to_string(n - 1) + " interior wavelets, found " +
                                                   std::to_string(out.functions.size()));
  }
  return out;
}

void d_matrices(const ScalingVector& phi, RefinementSet& rs) {
  const std::size_t dim = phi.entries.size();
  std::array<std::vector<PiecewisePoly>, 4> dil;
  for (int i = -2; i <= 1; ++i) dil[slot(i)] = dilated_entries(phi, i);
  for (int i = -2; i <= 1; ++i) {
    Matrix dt(rs.psi.size(), dim);
    Matrix dm(rs.psi.size(), dim);
    for (std::size_t a = 0; a < rs.psi.size(); ++a) {
      for (std::size_t b = 0; b < dim; ++b) {
        dt(a, b) = inner_product(rs.psi[a], dil[slot(i)][b]);
        dm(a, b) = dt(a, b) / rs.gram[b];
      }
    }
    rs.d_tilde[slot(i)] = std::move(dt);
    rs.d[slot(i)] = std::move(dm);
  }
  std::string detail;
  for (std::size_t a = 0; a < rs.psi.size(); ++a) {
    PiecewisePoly sum;
    for (int i = -2; i <= 1; ++i) {
      std::vector<Scalar> row(dim);
      for (std::size_t b = 0; b < dim; ++b) row[b] = rs.D(i)(a, b);
      sum += combine(row, dil[slot(i)]);
    }
    if (!(sum == rs.psi[a])) detail += "psi" + std::to_string(a) + " ";
  }
  require(rs.checks, "psi1", detail.empty(), detail.empty() ? "Psi = sum D_i Phi(2.-i)" : detail);
}

RefinementSet build_refinement(const ScalingVector& phi) {
  RefinementSet rs = refinement_matrices(phi);
  auto& log = rs.checks;
  const std::size_t dim = phi.entries.size();

  auto [psi0, psi1] = boundary_wavelets(phi);
  rs.psi.push_back(std::move(psi0));
  rs.psi.push_back(std::move(psi1));
  rs.psi_symmetry.push_back({Rational(0), Parity::even});
  rs.psi_symmetry.push_back({Rational(0), Parity::odd});

  const InteriorWavelets iw = interior_wavelets(phi, rs);
  log.push_back({"wavelet-completion", true, std::to_string(iw.functions.size()) + " interior wavelets"});
  const Matrix e = rs.c_tilde[slot(0)].hconcat(rs.c_tilde[slot(1)]);
  std::string detail;
  for (std::size_t k = 0; k < iw.functions.size(); ++k) {
    rs.psi.push_back(iw.functions[k]);
    rs.psi_symmetry.push_back(
        {Rational(1, 2), iw.kinds[k] == SymKind::symmetric ? Parity::even : Parity::odd});
    const auto residual = e * iw.coefficients[k];
    bool zero = iw.coefficients[k][0].is_zero();
    for (const auto& r : residual) zero = zero && r.is_zero();
    if (!zero) detail += "wavelet " + std::to_string(k + 2) + " ";
  }
  rs.interior_coefficients = iw.coefficients;
  rs.interior_kinds = iw.kinds;
  require(log, "completion-equation", detail.empty(), detail.empty() ? "E p = 0 and p_0 = 0" : detail);

  detail.clear();
  for (std::size_t k = 0; k < rs.psi.size(); ++k) {
    if (!check_symmetry(rs.psi[k], rs.psi_symmetry[k])) detail += "psi" + std::to_string(k) + " ";
    const Rational lo = k < 2 ? Rational(-1) : Rational(0);
    if (rs.psi[k].is_zero() || rs.psi[k].support_min() < lo || rs.psi[k].support_max() > Rational(1)) {
      detail += "support psi" + std::to_string(k) + " ";
    }
  }
  require(log, "wavelet-symmetry", detail.empty(), detail);

  for (const auto& p : rs.psi) rs.psi_norms_sq.push_back(inner_product(p, p));

  const std::string phi_cross = cross_report(rs.psi, "psi", phi.entries, "phi", false);
  require(log, "wavelet-phi-orthogonality", phi_cross.empty(),
          phi_cross.empty() ? "every psi is orthogonal to every shifted phi" : phi_cross);
  const std::string psi_cross = cross_report(rs.psi, "psi", rs.psi, "psi", true);
  require(log, "wavelet-orthogonality", psi_cross.empty(),
          psi_cross.empty() ? "wavelets and their shifts are mutually orthogonal" : psi_cross);

  d_matrices(phi, rs);

  detail.clear();
  for (std::size_t k = 0; k < iw.coefficients.size(); ++k) {
    for (std::size_t b = 0; b < dim; ++b) {
      if (rs.D(0)(k + 2, b) != iw.coefficients[k][b] || rs.D(1)(k + 2, b) != iw.coefficients[k][dim + b]) {
        detail += "psi" + std::to_string(k + 2) + " ";
        break;
      }
    }
    for (int i : {-2, -1}) {
      for (std::size_t b = 0; b < dim; ++b) {
        if (!rs.D(i)(k + 2, b).is_zero()) detail += "D" + std::to_string(i) + " row " + std::to_string(k + 2) + " ";
      }
    }
  }
  require(log, "d-coefficients", detail.empty(),
          detail.empty() ? "D_0, D_1 rows reproduce the completion vectors" : detail);
  return rs;
}

}  // namespace pwmra
