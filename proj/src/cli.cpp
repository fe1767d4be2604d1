#include "zmn/cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>

#include "zmn/analysis.hpp"
#include "zmn/errors.hpp"
#include "zmn/group_counts.hpp"
#include "zmn/summatory.hpp"

namespace zmn {

namespace {

std::int64_t as_integer(double v, const char* flag) {
  if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 9.0e15)
    throw DomainError(std::string("--") + flag + " must be an integer, got " + format_csv_number(v));
  return static_cast<std::int64_t>(v);
}

Variant parse_variant(const std::string& s) {
  if (s == "s") return Variant::S;
  if (s == "c") return Variant::C;
  throw DomainError("--variant must be s or c");
}

Route parse_route(const std::string& s) {
  if (s == "series") return Route::Series;
  if (s == "closedform") return Route::ClosedForm;
  if (s == "gderiv") return Route::GDeriv;
  throw DomainError("--route must be series, closedform or gderiv");
}

std::string format_double(double v, int digits) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(digits) << v;
  return os.str();
}

struct Options {
  int precision = kDefaultDigits;
  int threads = 0;
  std::string out_path;

  std::string variant = "s";
  std::string formula;
  double m = 0;
  double n = 0;
  double cap = static_cast<double>(kDefaultOracleCap);
  bool weighted = false;
  double x = 0;
  std::string algo = "reduced";
  double z = 2;
  double w = 2;
  double trunc = 1000;
  double weight_order = 2;
  std::string route = "series";
  double from = 1e3;
  double to = 1e5;
  double points_per_decade = 4;
};

// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DomainError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void cmd_count(const Options& o, std::ostream& out) {
  const std::int64_t m = as_integer(o.m, "m");
  const std::int64_t n = as_integer(o.n, "n");
  if (m < 1 || n < 1) throw DomainError("--m and --n must be >= 1");
  const Variant v = parse_variant(o.variant);
  const ArithTables tables(std::min<std::int64_t>(std::max(m, n), 1'000'000));
  std::int64_t value = 0;
  if (v == Variant::S) {
    static const std::map<std::string, SFormula> names{{"F1", SFormula::F1}, {"F2", SFormula::F2}, {"F3", SFormula::F3}};
    const auto it = names.find(o.formula.empty() ? "F3" : o.formula);
    if (it == names.end()) throw DomainError("--formula for variant s must be F1, F2 or F3");
    value = s_count(m, n, it->second, tables);
  } else {
    static const std::map<std::string, CFormula> names{
        {"C1", CFormula::C1}, {"C2", CFormula::C2}, {"C3", CFormula::C3}, {"C4", CFormula::C4}};
    const auto it = names.find(o.formula.empty() ? "C4" : o.formula);
    if (it == names.end()) throw DomainError("--formula for variant c must be C1, C2, C3 or C4");
    value = c_count(m, n, it->second, tables);
  }
  out << value << '\n';
}

void cmd_oracle(const Options& o, std::ostream& out) {
  const auto counts = enumerate_subgroups(as_integer(o.m, "m"), as_integer(o.n, "n"), as_integer(o.cap, "cap"));
  out << "total " << counts.total << '\n' << "cyclic " << counts.cyclic << '\n';
}

void cmd_summatory(const Options& o, std::ostream& out) {
  const Variant v = parse_variant(o.variant);
  Algorithm algo;
  if (o.algo == "naive")
    algo = Algorithm::Naive;
  else if (o.algo == "reduced")
    algo = Algorithm::Reduced;
  else
    throw DomainError("--algo must be naive or reduced");
  const auto r = summatory(v, o.weighted, o.x, algo);
  if (o.weighted)
    out << format_double(r.value, 17) << '\n';
  else
    out << r.exact << '\n';
  out << "elapsed " << format_double(r.elapsed, 6) << " s\n";
}

void cmd_series_check(const Options& o, std::ostream& out) {
  const auto check = dirichlet_truncation(parse_variant(o.variant), o.z, o.w, as_integer(o.trunc, "trunc"));
  out << "partial " << format_double(check.partial, 17) << '\n'
      << "closed " << format_double(check.closed, 17) << '\n'
      << "gap " << format_double(check.gap(), 17) << '\n';
}

void cmd_coeffs(const Options& o, std::ostream& out) {
  const Variant v = parse_variant(o.variant);
  const int w = static_cast<int>(as_integer(o.weight_order, "weight-order"));
  const Route route = parse_route(o.route);
  if (route == Route::ClosedForm && (v != Variant::S || w != 2))
    throw DomainError("--route closedform exists only for --variant s --weight-order 2");
  const auto bank = build_constants(o.precision);
  const auto poly = main_term(v, w, route, bank);
  for (int r = 4; r >= 0; --r) out << format_real(poly.coeffs[r], o.precision) << '\n';
}

void cmd_constants(const Options& o, std::ostream& out) {
  const auto bank = build_constants(o.precision);
  static const char* zeta_names[] = {"zeta(2)", "zeta'(2)", "zeta''(2)", "zeta'''(2)", "zeta''''(2)"};
  auto row = [&](const std::string& name, const Real& value) {
    std::string text = format_real(value, o.precision);
    if (text.front() != '-') text.insert(text.begin(), ' ');
    out << std::left << std::setw(12) << name << ' ' << text << '\n';
  };
  for (int n = 0; n <= 4; ++n) row("gamma_" + std::to_string(n), bank.gamma[n]);
  for (int j = 0; j <= 4; ++j) row(zeta_names[j], bank.zeta2_derivs[j]);
}

void cmd_scan(const Options& o, std::ostream& out) {
  const Variant v = parse_variant(o.variant);
  Route route = parse_route(o.route);
  if (route == Route::ClosedForm && v != Variant::S)
    throw DomainError("--route closedform exists only for --variant s");
  const auto bank = build_constants(o.precision);
  const auto coeffs = main_term(v, 2, route, bank);
  const auto records =
      error_scan(v, o.from, o.to, static_cast<int>(as_integer(o.points_per_decade, "points-per-decade")), coeffs);
  write_csv(out, records);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup counts of Z_m x Z_n, their summatory functions and main terms", "zmn"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--precision", o.precision, "working precision in decimal digits")->capture_default_str();
  app.add_option("--threads", o.threads, "OpenMP threads (default: all)");
  app.add_option("--out", o.out_path, "output path (default: stdout)");

  auto* count = app.add_subcommand("count", "s(m,n) or c(m,n) from a closed formula");
  count->add_option("--m", o.m)->required();
  count->add_option("--n", o.n)->required();
  count->add_option("--variant", o.variant);
  count->add_option("--formula", o.formula, "F1|F2|F3 or C1|C2|C3|C4");

  auto* oracle = app.add_subcommand("oracle", "brute-force subgroup enumeration");
  oracle->add_option("--m", o.m)->required();
  oracle->add_option("--n", o.n)->required();
  oracle->add_option("--cap", o.cap, "limit on m*n");

  auto* summ = app.add_subcommand("summatory", "D(x) or the log-weighted D~(x)");
  summ->add_option("--variant", o.variant);
  summ->add_flag("--weighted", o.weighted);
  summ->add_option("--x", o.x)->required();
  summ->add_option("--algo", o.algo, "naive|reduced");

  auto* series = app.add_subcommand("series-check", "truncated double Dirichlet series vs zeta closed form");
  series->add_option("--variant", o.variant);
  series->add_option("--z", o.z);
  series->add_option("--w", o.w);
  series->add_option("--trunc", o.trunc);

  auto* coeffs = app.add_subcommand("coeffs", "main-term coefficients B_4..B_0");
  coeffs->add_option("--variant", o.variant);
  coeffs->add_option("--weight-order", o.weight_order);
  coeffs->add_option("--route", o.route, "series|closedform|gderiv");

  app.add_subcommand("constants", "Stieltjes constants and zeta derivatives at 2");

  auto* scan = app.add_subcommand("scan", "error-term scan as CSV");
  scan->add_option("--variant", o.variant);
  scan->add_option("--from", o.from);
  scan->add_option("--to", o.to);
  scan->add_option("--points-per-decade", o.points_per_decade);
  scan->add_option("--route", o.route, "series|closedform|gderiv");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--precision", o.precision);
    sub->add_option("--threads", o.threads);
    sub->add_option("--out", o.out_path);
  }

  std::vector<std::string> argv_storage{"zmn"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 1;
  }

  try {
    if (o.threads < 0) throw DomainError("--threads must be >= 0");
    if (o.threads > 0) omp_set_num_threads(o.threads);
    if (o.precision < kMinDigits) throw DomainError("--precision must be at least 15");
    Sink sink(o.out_path, out);
    std::ostream& dst = sink.get();
    if (count->parsed()) cmd_count(o, dst);
    else if (oracle->parsed()) cmd_oracle(o, dst);
    else if (summ->parsed()) cmd_summatory(o, dst);
    else if (series->parsed()) cmd_series_check(o, dst);
    else if (coeffs->parsed()) cmd_coeffs(o, dst);
    else if (scan->parsed()) cmd_scan(o, dst);
    else cmd_constants(o, dst);
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << '\n';
    return 1;
  } catch (const OverflowError& e) {
    err << "error: overflow: " << e.what() << '\n';
    return 2;
  } catch (const SizeError& e) {
    err << "error: size: " << e.what() << '\n';
    return 2;
  } catch (const PrecisionError& e) {
    err << "error: precision: " << e.what() << '\n';
    return 2;
  } catch (const ComputationError& e) {
    err << "error: computation: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace zmn
