#include "pwmra/json_io.hpp"

#include <cstdio>

namespace pwmra {

namespace {

std::vector<Scalar> scalars_from(const Json& arr) {
  std::vector<Scalar> out;
  for (const auto& x : arr) out.push_back(scalar_from_json(x));
  return out;
}

Json checks_passed(const std::vector<CheckRecord>& checks) {
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  return ok;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
  throw InvalidParameter("expected a scalar string, got " + j.dump());
}

Json to_json(const PiecewisePoly& f) {
  Json bp = Json::array();
  for (const auto& b : f.breakpoints()) bp.push_back(b.to_string());
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_json(x));
    pieces.push_back(std::move(c));
  }
  return {{"breakpoints", std::move(bp)}, {"pieces", std::move(pieces)}};
}

PiecewisePoly piecewise_from_json(const Json& j) {
  std::vector<Rational> bp;
  for (const auto& b : j.at("breakpoints")) bp.push_back(Rational::parse(b.get<std::string>()));
  std::vector<Poly> pieces;
  for (const auto& p : j.at("pieces")) pieces.emplace_back(scalars_from(p));
  return {std::move(bp), std::move(pieces)};
}

Json to_json(const Matrix& m) {
  Json exact = Json::array();
  Json flt = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json er = Json::array();
    Json fr = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      er.push_back(to_json(m(r, c)));
      fr.push_back(m(r, c).to_double());
    }
    exact.push_back(std::move(er));
    flt.push_back(std::move(fr));
  }
  return {{"exact", std::move(exact)}, {"float", std::move(flt)}};
}

Matrix matrix_from_json(const Json& j) {
  const Json& rows = j.at("exact");
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.at(0).size();
  Matrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw ShapeMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = scalar_from_json(rows[r][c]);
  }
  return m;
}

Json to_json(const SymmetryType& s) { return {{"axis", s.axis.to_string()}, {"parity", to_string(s.parity)}}; }

Json to_json(const std::vector<CheckRecord>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"identity", c.identity}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

Json to_json(const ScalingVector& phi) {
  Json entries = Json::array();
  Json norms = Json::array();
  Json sym = Json::array();
  for (std::size_t k = 0; k < phi.entries.size(); ++k) {
    entries.push_back(to_json(phi.entries[k]));
    norms.push_back(to_json(phi.norms_sq[k]));
    sym.push_back(to_json(phi.symmetry[k]));
  }
  return {{"n", phi.n},
          {"family", to_string(phi.family)},
          {"alpha", to_json(phi.alpha)},
          {"projection_constant", to_json(phi.projection_constant)},
          {"entries", std::move(entries)},
          {"norms_sq", std::move(norms)},
          {"symmetry", std::move(sym)}};
}

Json to_json(const RefinementSet& rs) {
  Json gram = Json::array();
  for (const auto& g : rs.gram) gram.push_back(to_json(g));
  Json c = Json::object();
  Json d = Json::object();
  for (int i = -2; i <= 1; ++i) {
    c[std::to_string(i)] = to_json(rs.C(i));
    d[std::to_string(i)] = to_json(rs.D(i));
  }
  Json psi = Json::array();
  Json norms = Json::array();
  Json sym = Json::array();
  for (std::size_t k = 0; k < rs.psi.size(); ++k) {
    psi.push_back(to_json(rs.psi[k]));
    norms.push_back(to_json(rs.psi_norms_sq[k]));
    sym.push_back(to_json(rs.psi_symmetry[k]));
  }
  return {{"n", rs.n},         {"family", to_string(rs.family)}, {"gram", std::move(gram)},
          {"C", std::move(c)}, {"D", std::move(d)},                {"psi", std::move(psi)},
          {"psi_norms_sq", std::move(norms)}, {"psi_symmetry", std::move(sym)}};
}

Json build_document(const ScalingVector& phi, const RefinementSet& rs) {
  std::vector<CheckRecord> all = phi.checks;
  all.insert(all.end(), rs.checks.begin(), rs.checks.end());
  return {{"n", phi.n},
          {"family", to_string(phi.family)},
          {"phi", to_json(phi)},
          {"refinement", to_json(rs)},
          {"verification", {{"all_passed", checks_passed(all)}, {"checks", to_json(all)}}}};
}

Json stream_to_json(int n, const CoeffStream& s) { return {{"n", n}, {"coefficients", s}}; }

CoeffStream stream_from_json(const Json& j) {
  const Json& arr = j.is_object() ? j.at("coefficients") : j;
  if (!arr.is_array()) throw ShapeMismatch("coefficients must be an array of vectors");
  CoeffStream out;
  for (const auto& v : arr) {
    if (!v.is_array()) throw ShapeMismatch("each coefficient entry must be an array");
    out.push_back(v.get<CoeffVec>());
  }
  return out;
}

Json to_json(const Decomposition& d) { return {{"coarse", d.coarse}, {"details", d.details}}; }

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.coarse = stream_from_json(j.at("coarse"));
  for (const auto& s : j.at("details")) d.details.push_back(stream_from_json(s));
  return d;
}

}  // namespace pwmra
