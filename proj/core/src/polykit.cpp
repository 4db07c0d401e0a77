#include "pwmra/polykit.hpp"

#include <algorithm>
#include <sstream>

namespace pwmra {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly({c}); }

Poly Poly::monomial(unsigned degree, const Scalar& c) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Scalar& u, const Scalar& v) { return Poly({v, u}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::extension_degree() const noexcept {
  for (const auto& c : c_) {
    if (!c.is_rational()) return 2;
  }
  return 1;
}

Scalar Poly::eval(const Scalar& t) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Poly::eval_float(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
  return acc;
}

Poly Poly::compose_affine(const Scalar& u, const Scalar& v) const {
  const Poly lin = linear(u, v);
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= lin;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::reflect() const {
  Poly r = *this;
  for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

Poly Poly::antiderivative() const {
  std::vector<Scalar> v(c_.size() + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    v[k + 1] = c_[k];
    v[k + 1] *= Rational(1, static_cast<long>(k + 1));
  }
  return Poly(std::move(v));
}

Scalar Poly::integrate(const Rational& a, const Rational& b) const {
  Scalar acc;
  Rational pa = a;
  Rational pb = b;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    Scalar term = c_[k];
    term *= (pb - pa) / Rational(static_cast<long>(k + 1));
    acc += term;
    pa *= a;
    pb *= b;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].to_string() << ")";
    if (k > 0) os << "*t^" << k;
  }
  return os.str();
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return p + q;
    case PolyOp::mul:
      return p * q;
    case PolyOp::scale:
      if (q.degree() > 0) throw InvalidParameter("scale expects a constant operand");
      return p * q.coeff(0);
    case PolyOp::compose_affine:
      if (q.degree() != 1) throw InvalidParameter("compose_affine expects u*t + v with u != 0");
      return p.compose_affine(q.coeff(1), q.coeff(0));
  }
  throw InvalidParameter("unknown polynomial operation");
}

// ---------------------------------------------------------------- PiecewisePoly

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces)
    : bp_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (bp_.empty() && pieces_.empty()) return;
  if (bp_.size() != pieces_.size() + 1) {
    throw InvalidParameter("piecewise polynomial needs one more breakpoint than pieces");
  }
  for (std::size_t k = 0; k + 1 < bp_.size(); ++k) {
    if (!(bp_[k] < bp_[k + 1])) throw InvalidParameter("breakpoints must be strictly increasing");
  }
  canonicalize();
}

PiecewisePoly PiecewisePoly::on_interval(Poly p, const Rational& a, const Rational& b) {
  return PiecewisePoly({a, b}, {std::move(p)});
}

void PiecewisePoly::canonicalize() {
  std::vector<Rational> bp;
  std::vector<Poly> pieces;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    if (!pieces.empty() && pieces.back() == pieces_[k]) {
      bp.back() = bp_[k + 1];
      continue;
    }
    if (bp.empty()) bp.push_back(bp_[k]);
    pieces.push_back(std::move(pieces_[k]));
    bp.push_back(bp_[k + 1]);
  }
  std::size_t lo = 0;
  while (lo < pieces.size() && pieces[lo].is_zero()) ++lo;
  std::size_t hi = pieces.size();
  while (hi > lo && pieces[hi - 1].is_zero()) --hi;
  if (lo == hi) {
    bp_.clear();
    pieces_.clear();
    return;
  }
  bp_.assign(bp.begin() + static_cast<long>(lo), bp.begin() + static_cast<long>(hi) + 1);
  pieces_.assign(std::make_move_iterator(pieces.begin() + static_cast<long>(lo)),
                 std::make_move_iterator(pieces.begin() + static_cast<long>(hi)));
}

Rational PiecewisePoly::support_min() const {
  if (is_zero()) throw DomainError("zero function has empty support");
  return bp_.front();
}

Rational PiecewisePoly::support_max() const {
  if (is_zero()) throw DomainError("zero function has empty support");
  return bp_.back();
}

int PiecewisePoly::extension_degree() const noexcept {
  for (const auto& p : pieces_) {
    if (p.extension_degree() == 2) return 2;
  }
  return 1;
}

Scalar PiecewisePoly::eval(const Rational& t) const {
  if (is_zero() || t < bp_.front() || t > bp_.back()) return Scalar();
  const auto it = std::upper_bound(bp_.begin(), bp_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - bp_.begin());
  k = (k == 0) ? 0 : k - 1;
  if (k >= pieces_.size()) k = pieces_.size() - 1;
  return pieces_[k].eval(Scalar(t));
}

double PiecewisePoly::eval_float(double t) const {
  if (is_zero() || t < bp_.front().to_double() || t > bp_.back().to_double()) return 0.0;
  std::size_t k = 0;
  while (k + 1 < pieces_.size() && t >= bp_[k + 1].to_double()) ++k;
  return pieces_[k].eval_float(t);
}

PiecewisePoly PiecewisePoly::compose_affine(const Rational& u, const Rational& v) const {
  if (u.is_zero()) throw InvalidParameter("affine map must be invertible");
  if (is_zero()) return {};
  std::vector<Rational> bp;
  std::vector<Poly> pieces;
  bp.reserve(bp_.size());
  pieces.reserve(pieces_.size());
  for (const auto& b : bp_) bp.push_back((b - v) / u);
  for (const auto& p : pieces_) pieces.push_back(p.compose_affine(Scalar(u), Scalar(v)));
  if (u.sign() < 0) {
    std::reverse(bp.begin(), bp.end());
    std::reverse(pieces.begin(), pieces.end());
  }
  return PiecewisePoly(std::move(bp), std::move(pieces));
}

PiecewisePoly PiecewisePoly::reflect() const { return compose_affine(Rational(-1), Rational()); }

PiecewisePoly PiecewisePoly::reflect_about(const Rational& axis) const {
  return compose_affine(Rational(-1), axis + axis);
}

std::vector<Poly> PiecewisePoly::pieces_on(const std::vector<Rational>& grid) const {
  std::vector<Poly> out;
  if (grid.size() < 2) return out;
  out.reserve(grid.size() - 1);
  std::size_t k = 0;
  for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
    const Rational& lo = grid[g];
    const Rational& hi = grid[g + 1];
    if (is_zero() || hi <= bp_.front() || lo >= bp_.back()) {
      out.emplace_back();
      continue;
    }
    while (k + 1 < pieces_.size() && bp_[k + 1] <= lo) ++k;
    out.push_back(pieces_[k]);
  }
  return out;
}

PiecewisePoly PiecewisePoly::restrict(const Rational& a, const Rational& b) const {
  if (is_zero() || !(a < b)) return {};
  std::vector<Rational> grid = merge_breakpoints(bp_, {a, b});
  std::vector<Poly> pieces = pieces_on(grid);
  for (std::size_t g = 0; g < pieces.size(); ++g) {
    if (grid[g] < a || grid[g + 1] > b) pieces[g] = Poly();
  }
  return PiecewisePoly(std::move(grid), std::move(pieces));
}

PiecewisePoly PiecewisePoly::operator-() const {
  PiecewisePoly r = *this;
  for (auto& p : r.pieces_) p = -p;
  return r;
}

PiecewisePoly& PiecewisePoly::operator+=(const PiecewisePoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Rational> grid = merge_breakpoints(bp_, o.bp_);
  std::vector<Poly> a = pieces_on(grid);
  const std::vector<Poly> b = o.pieces_on(grid);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return *this = PiecewisePoly(std::move(grid), std::move(a));
}

PiecewisePoly& PiecewisePoly::operator-=(const PiecewisePoly& o) { return *this += -o; }

PiecewisePoly& PiecewisePoly::operator*=(const Scalar& s) {
  if (s.is_zero()) return *this = PiecewisePoly();
  for (auto& p : pieces_) p *= s;
  return *this;
}

PiecewisePoly operator*(const PiecewisePoly& a, const PiecewisePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> grid = merge_breakpoints(a.bp_, b.bp_);
  std::vector<Poly> pa = a.pieces_on(grid);
  const std::vector<Poly> pb = b.pieces_on(grid);
  for (std::size_t k = 0; k < pa.size(); ++k) pa[k] *= pb[k];
  return PiecewisePoly(std::move(grid), std::move(pa));
}

std::string PiecewisePoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    if (k > 0) os << "; ";
    os << "[" << bp_[k].to_string() << ", " << bp_[k + 1].to_string()
       << "]: " << pieces_[k].to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------- free functions

std::vector<Rational> merge_breakpoints(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Scalar integrate_exact(const PiecewisePoly& f, const Rational& a, const Rational& b) {
  if (b < a) throw InvalidParameter("integration bounds must satisfy a <= b");
  Scalar acc;
  if (f.is_zero()) return acc;
  const auto& bp = f.breakpoints();
  const auto& pieces = f.pieces();
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const Rational lo = std::max(bp[k], a);
    const Rational hi = std::min(bp[k + 1], b);
    if (lo < hi) acc += pieces[k].integrate(lo, hi);
  }
  return acc;
}

Scalar integrate_exact(const PiecewisePoly& f) {
  if (f.is_zero()) return Scalar();
  return integrate_exact(f, f.support_min(), f.support_max());
}

Scalar inner_product(const PiecewisePoly& f, const PiecewisePoly& g) {
  if (f.is_zero() || g.is_zero()) return Scalar();
  const Rational lo = std::max(f.support_min(), g.support_min());
  const Rational hi = std::min(f.support_max(), g.support_max());
  if (!(lo < hi)) return Scalar();
  std::vector<Rational> grid;
  for (const auto& b : merge_breakpoints(f.breakpoints(), g.breakpoints())) {
    if (lo <= b && b <= hi) grid.push_back(b);
  }
  const std::vector<Poly> pf = f.pieces_on(grid);
  const std::vector<Poly> pg = g.pieces_on(grid);
  Scalar acc;
  for (std::size_t k = 0; k < pf.size(); ++k) {
    if (pf[k].is_zero() || pg[k].is_zero()) continue;
    acc += (pf[k] * pg[k]).integrate(grid[k], grid[k + 1]);
  }
  return acc;
}

PiecewisePoly dilate_translate(const PiecewisePoly& f, int j, const Rational& i) {
  const Rational scale = Rational(2).pow(j);
  return f.compose_affine(scale, -i);
}

Scalar mellin_integer_moment(const PiecewisePoly& f, unsigned z) {
  if (z < 1) throw DomainError("Mellin moment needs z >= 1");
  if (f.is_zero()) return Scalar();
  if (f.support_min() < Rational(0) || f.support_max() > Rational(1)) {
    throw SupportViolation("Mellin moment requires support in [0, 1]");
  }
  return inner_product(f, PiecewisePoly::on_interval(Poly::monomial(z - 1), 0, 1));
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even:
      return "even";
    case Parity::odd:
      return "odd";
    case Parity::none:
      return "none";
  }
  return "none";
}

bool check_symmetry(const PiecewisePoly& f, const SymmetryType& s) {
  if (s.parity == Parity::none) return false;
  const PiecewisePoly r = f.reflect_about(s.axis);
  return s.parity == Parity::even ? r == f : r == -f;
}

}  // namespace pwmra
