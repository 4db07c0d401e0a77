#include "pwmra_cli/cli.hpp"

#include <complex>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pwmra/filterbank.hpp"
#include "pwmra/json_io.hpp"
#include "pwmra/xform.hpp"
#include "pwmra_cli/suites.hpp"

namespace pwmra::cli {

namespace {

struct Usage : Error {
  using Error::Error;
};

struct Options {
  std::string n;
  std::string family = "generic";
  std::string suite = "all";
  double tolerance = 1e-9;
  std::string out;
  std::string in;
  std::string format = "json";
  int levels = 3;
  bool inverse = false;
  bool roundtrip = false;
  std::uint64_t seed = 1;
  std::string fn;
  int eps = -1;
  int m = 0;
  std::string w = "0,0.5,1,2,5";
  std::string z = "1..5";
  int verbosity = 0;
};

int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Usage("not an integer: '" + s + "'");
}

/// "a..b" inclusive, or a single integer.
std::vector<int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) return {parse_int(s)};
  const int a = parse_int(s.substr(0, dots));
  const int b = parse_int(s.substr(dots + 2));
  if (b < a) throw Usage("empty range '" + s + "'");
  std::vector<int> out;
  for (int k = a; k <= b; ++k) out.push_back(k);
  return out;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw Usage("bad number '" + item + "'");
    } catch (const std::logic_error&) {
      throw Usage("bad number '" + item + "'");
    }
  }
  if (out.empty()) throw Usage("empty list");
  return out;
}

Family family_of(const Options& o) {
  try {
    return parse_family(o.family);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

int single_n(const Options& o) {
  if (o.n.empty()) throw Usage("--n is required");
  return parse_int(o.n);
}

/// Writes to --out if given, else to `out`.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Usage("cannot open '" + o.out + "' for writing");
  f << text;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// ------------------------------------------------------------------ build

int cmd_build(const Options& o, std::ostream& out, std::ostream& err) {
  const int n = single_n(o);
  const Family fam = family_of(o);
  if (!family_accepts(n, fam)) throw Usage("n = " + std::to_string(n) + " is not admissible for " + to_string(fam));
  const ScalingVector phi = assemble_phi(n, fam);
  const RefinementSet rs = build_refinement(phi);
  if (o.format == "json") {
    emit(o, out, build_document(phi, rs).dump(2) + "\n");
  } else {
    std::string csv = "matrix,shift,row,col,exact,float\n";
    for (int i = -2; i <= 1; ++i) {
      for (const auto& [name, mat] : {std::pair{"C", &rs.C(i)}, std::pair{"D", &rs.D(i)}}) {
        for (std::size_t r = 0; r < mat->rows(); ++r) {
          for (std::size_t c = 0; c < mat->cols(); ++c) {
            csv += std::string(name) + "," + std::to_string(i) + "," + std::to_string(r) + "," + std::to_string(c) +
                   "," + csv_escape((*mat)(r, c).to_string()) + "," + format_double((*mat)(r, c).to_double()) + "\n";
          }
        }
      }
    }
    emit(o, out, csv);
  }
  if (o.verbosity > 0) {
    for (const auto* log : {&phi.checks, &rs.checks}) {
      for (const auto& c : *log) err << (c.passed ? "PASS " : "FAIL ") << c.identity << " " << c.detail << "\n";
    }
  }
  return ok;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const bool exact = o.suite == "exact" || o.suite == "all";
  const bool fourier = o.suite == "fourier" || o.suite == "all";
  const bool hyper = o.suite == "hyper" || o.suite == "all";
  if (!exact && !fourier && !hyper) throw Usage("unknown suite '" + o.suite + "'");
  if (!(o.tolerance > 0)) throw Usage("--tolerance must be positive");
  const Family fam = family_of(o);
  const std::vector<int> ns = parse_range(o.n.empty() ? (fourier && !exact ? "1..6" : "3..6") : o.n);

  std::vector<SuiteRecord> records;
  if (exact) {
    bool any = false;
    for (int n : ns) {
      if (!family_accepts(n, fam)) continue;
      any = true;
      auto r = exact_suite(n, fam);
      records.insert(records.end(), r.begin(), r.end());
    }
    if (!any) throw Usage("no n in '" + o.n + "' is admissible for " + to_string(fam));
  }
  if (fourier) {
    for (int n : ns) {
      if (n < 0) throw Usage("fourier suite needs n >= 0");
      auto r = fourier_suite(n, o.tolerance);
      records.insert(records.end(), r.begin(), r.end());
    }
  }
  if (hyper) {
    auto r = hyper_suite(o.seed, 100);
    records.insert(records.end(), r.begin(), r.end());
  }

  bool all = true;
  std::size_t failed = 0;
  for (const auto& r : records) {
    all = all && r.passed;
    failed += r.passed ? 0 : 1;
    if (!r.passed || o.verbosity > 0) {
      out << (r.passed ? "PASS " : "FAIL ") << r.suite << " " << r.identity << " n=" << r.n;
      if (!r.detail.empty()) out << " : " << r.detail;
      out << "\n";
    }
  }
  out << records.size() - failed << "/" << records.size() << " checks passed\n";

  if (!o.out.empty()) {
    std::string text;
    if (o.format == "json") {
      Json arr = Json::array();
      for (const auto& r : records) {
        arr.push_back({{"suite", r.suite}, {"identity", r.identity}, {"n", r.n}, {"passed", r.passed}, {"detail", r.detail}});
      }
      text = Json{{"all_passed", all}, {"records", std::move(arr)}}.dump(2) + "\n";
    } else {
      text = "suite,identity,n,passed,detail\n";
      for (const auto& r : records) {
        text += r.suite + "," + r.identity + "," + std::to_string(r.n) + "," + (r.passed ? "true" : "false") + "," +
                csv_escape(r.detail) + "\n";
      }
    }
    std::ofstream f(o.out);
    if (!f) throw Usage("cannot open '" + o.out + "' for writing");
    f << text;
  }
  return all ? ok : verification_failed;
}

// ------------------------------------------------------------------- eval

struct Row {
  std::string argument;
  std::string value;
  std::string oracle;
  std::string difference;
};

std::string complex_text(std::complex<double> z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream&) {
  std::vector<Row> rows;
  if (o.fn == "mellin") {
    const int n = single_n(o);
    const int eps = o.eps < 0 ? 0 : o.eps;
    if (eps > 1) throw Usage("--eps must be 0 or 1");
    if (n < 0 || o.m < 0) throw Usage("mellin needs n >= 0 and m >= 0");
    const PiecewisePoly f = f_closed(eps, o.m, n).restrict(Rational(0), Rational(1));
    for (int z : parse_range(o.z)) {
      if (z < 1) throw Usage("z must be a positive integer");
      const Rational v = mellin_f_closed(eps, o.m, n, Rational(z));
      const Scalar oracle = mellin_integer_moment(f, static_cast<unsigned>(z));
      rows.push_back({std::to_string(z), v.to_string(), oracle.to_string(), (Scalar(v) - oracle).abs().to_string()});
    }
  } else if (o.fn == "fourier-phi" || o.fn == "fourier-l0" || o.fn == "fourier-u") {
    const int n = single_n(o);
    if (o.eps > 1) throw Usage("--eps must be 0 or 1");
    PiecewisePoly f;
    std::function<FTResult(double)> closed;
    if (o.fn == "fourier-phi") {
      // --n is the index of phi_n = phi_{2h+eps}.
      if (n < 2) throw Usage("fourier-phi needs n >= 2");
      const int eps = n % 2;
      if (o.eps >= 0 && o.eps != eps) throw Usage("--eps must equal n mod 2 for fourier-phi");
      f = interior_phi(n / 2, eps);
      closed = [=](double w) { return fourier_phi(n / 2, eps, w); };
    } else if (o.fn == "fourier-l0") {
      if (n < 2) throw Usage("fourier-l0 needs n >= 2");
      f = l0(n);
      closed = [=](double w) { return fourier_l0(n, w); };
    } else {
      const int eps = o.eps < 0 ? 0 : o.eps;
      if (n < 0 || o.m < 0 || o.m > n) throw Usage("fourier-u needs 0 <= m <= n");
      f = u_function(2 * n + 1 + eps, 2 * n - 2 * o.m).f_closed;
      const int m = o.m;
      closed = [=](double w) { return fourier_u(eps, m, n, w); };
    }
    for (double w : parse_list(o.w)) {
      const std::complex<double> v = closed(w).value;
      const std::complex<double> q =
          w == 0.0 ? std::complex<double>(integrate_exact(f).to_double(), 0.0) : quadrature_oracle(f, w).value;
      rows.push_back({format_double(w), complex_text(v), complex_text(q), format_double(std::abs(v - q))});
    }
  } else {
    throw Usage("unknown --fn '" + o.fn + "'");
  }

  std::string text;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"argument", r.argument}, {"value", r.value}, {"oracle", r.oracle}, {"difference", r.difference}});
    }
    text = arr.dump(2) + "\n";
  } else {
    text = "argument,value,oracle,abs_difference\n";
    for (const auto& r : rows) text += r.argument + "," + csv_escape(r.value) + "," + csv_escape(r.oracle) + "," + r.difference + "\n";
  }
  emit(o, out, text);
  return ok;
}

// -------------------------------------------------------------- transform

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Usage("cannot open '" + path + "'");
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw Usage(std::string("invalid JSON input: ") + e.what());
  }
}

int cmd_transform(const Options& o, std::ostream& out, std::ostream&) {
  const int n = single_n(o);
  const Family fam = family_of(o);
  if (!family_accepts(n, fam)) throw Usage("n = " + std::to_string(n) + " is not admissible for " + to_string(fam));
  if (o.levels < 0) throw Usage("--levels must be nonnegative");
  const ScalingVector phi = assemble_phi(n, fam);
  const FilterBank fb = FilterBank::from(build_refinement(phi), phi);

  if (o.roundtrip) {
    CoeffStream s;
    if (o.in.empty()) {
      std::mt19937_64 gen(o.seed);
      std::normal_distribution<double> nd;
      s.assign(std::size_t{2} << o.levels, CoeffVec(fb.width()));
      for (auto& v : s) {
        for (auto& x : v) x = nd(gen);
      }
    } else {
      s = stream_from_json(read_json(o.in));
    }
    const double e = max_abs_difference(s, synthesize(fb, analyze(fb, s, o.levels)));
    emit(o, out, Json{{"n", n}, {"levels", o.levels}, {"length", s.size()}, {"max_error", e}}.dump(2) + "\n");
    return e <= 1e-10 ? ok : verification_failed;
  }

  if (o.in.empty()) throw Usage("transform needs an input file");
  const Json input = read_json(o.in);
  if (o.inverse) {
    const Decomposition d = decomposition_from_json(input);
    emit(o, out, stream_to_json(n, synthesize(fb, d)).dump(2) + "\n");
  } else {
    const Decomposition d = analyze(fb, stream_from_json(input), o.levels);
    Json j = to_json(d);
    j["n"] = n;
    j["levels"] = d.details.size();
    emit(o, out, j.dump(2) + "\n");
  }
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of continuous piecewise-polynomial multiwavelets"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("-v,--verbose", o.verbosity, "Print every check");

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "Order n (verify accepts a..b)");
    sub->add_option("--family", o.family, "generic | rational-4n | rational-4n1");
    sub->add_option("--out", o.out, "Output file (default: stdout)");
    sub->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("-v,--verbose", o.verbosity, "Print every check");
  };

  auto* build = app.add_subcommand("build", "Build the scaling vector, wavelets and matrices");
  common(build);
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  common(verify);
  verify->add_option("--suite", o.suite, "exact | fourier | hyper | all");
  verify->add_option("--tolerance", o.tolerance, "Absolute tolerance for float comparisons");
  verify->add_option("--seed", o.seed, "Seed for randomised trials");
  auto* eval = app.add_subcommand("eval", "Evaluate a closed form against its oracle");
  common(eval);
  eval->add_option("--fn", o.fn, "mellin | fourier-phi | fourier-l0 | fourier-u")->required();
  eval->add_option("--eps", o.eps, "Parity index eps");
  eval->add_option("--m", o.m, "Index m");
  eval->add_option("--w", o.w, "Comma-separated frequencies");
  eval->add_option("--z", o.z, "Integer Mellin arguments, a..b or single");
  auto* transform = app.add_subcommand("transform", "Filter-bank analysis or synthesis of coefficient streams");
  common(transform);
  transform->add_option("input", o.in, "Input JSON file");
  transform->add_option("--levels", o.levels, "Number of levels");
  transform->add_flag("--inverse", o.inverse, "Synthesize from a decomposition");
  transform->add_flag("--roundtrip", o.roundtrip, "Analyze then synthesize and report the max error");
  transform->add_option("--seed", o.seed, "Seed for random round-trip input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return usage_error;
  }

  try {
    if (*build) return cmd_build(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*eval) return cmd_eval(o, out, err);
    return cmd_transform(o, out, err);
  } catch (const ConstructionFailure& e) {
    err << "construction failure in identity '" << e.identity() << "': " << e.what() << "\n";
    return construction_failed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
}

}  // namespace pwmra::cli
