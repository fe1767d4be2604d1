#include "zmn/analysis.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>

#include "zmn/errors.hpp"
#include "zmn/summatory.hpp"

namespace zmn {

ErrorRecord make_error_record(double x, double exact, double main) {
  ErrorRecord r;
  r.x = x;
  r.exact = exact;
  r.main = main;
  r.delta = exact - main;
  r.normalized = x > 1 ? std::abs(r.delta) / (std::sqrt(x) * std::log(x)) : 0.0;
  r.rel_err = main != 0 ? std::abs(r.delta / main) : 0.0;
  return r;
}

std::vector<double> geometric_grid(double x_from, double x_to, int points_per_decade) {
  if (points_per_decade < 1) throw DomainError("points per decade must be >= 1");
  if (!(x_from > 0) || !(x_to >= x_from)) throw DomainError("grid requires 0 < from <= to");
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double x = x_from * std::pow(10.0, static_cast<double>(k) / points_per_decade);
    if (x > x_to * (1 + 1e-12)) break;
    grid.push_back(std::min(x, x_to));
  }
  return grid;
}

std::vector<ErrorRecord> error_scan(Variant variant, double x_from, double x_to, int points_per_decade,
                                    const MainTermPolynomial& coeffs) {
  if (!(x_from > 2) || !(x_to > x_from)) throw DomainError("error_scan: requires 2 < from < to");
  if (coeffs.weight_order != 2 || coeffs.variant != variant)
    throw DomainError("error_scan: coefficients must be the weight-2 polynomial of the scanned variant");
  const auto grid = geometric_grid(x_from, x_to, points_per_decade);
  std::vector<double> exact(grid.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(grid.size()); ++i) {
    try {
      exact[i] = summatory(variant, true, grid[i], Algorithm::Reduced).value;
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ErrorRecord> records;
  records.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    records.push_back(make_error_record(grid[i], exact[i], coeffs.evaluate(grid[i])));
  return records;
}

double slope_fit(const std::vector<ErrorRecord>& records, std::optional<double> epsilon) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : records) {
    const double cut = epsilon ? *epsilon : 1e-6 * std::sqrt(r.x);
    if (!(std::abs(r.delta) > cut) || !(r.x > 0)) continue;
    xs.push_back(std::log(r.x));
    ys.push_back(std::log(std::abs(r.delta)));
  }
  if (xs.size() < 5)
    throw InsufficientDataError("slope_fit: " + std::to_string(xs.size()) + " usable records, need 5");
  const double n = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0;
  double sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0) throw InsufficientDataError("slope_fit: all retained records share one x");
  return sxy / sxx;
}

std::string format_csv_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
  return std::string(buf, end);
}

void write_csv(std::ostream& out, const std::vector<ErrorRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << format_csv_number(r.x) << ',' << format_csv_number(r.exact) << ',' << format_csv_number(r.main) << ','
        << format_csv_number(r.delta) << ',' << format_csv_number(r.normalized) << ','
        << format_csv_number(r.rel_err) << '\n';
  }
}

std::vector<ErrorRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw DomainError("read_csv: missing or unexpected header");
  std::vector<ErrorRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double fields[6];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int i = 0; i < 6; ++i) {
      auto [next, ec] = std::from_chars(p, end, fields[i]);
      if (ec != std::errc()) throw DomainError("read_csv: malformed number in line: " + line);
      p = next;
      if (i < 5) {
        if (p == end || *p != ',') throw DomainError("read_csv: expected 6 fields in line: " + line);
        ++p;
      }
    }
    if (p != end) throw DomainError("read_csv: trailing data in line: " + line);
    records.push_back({fields[0], fields[1], fields[2], fields[3], fields[4], fields[5]});
  }
  return records;
}

}  // namespace zmn
