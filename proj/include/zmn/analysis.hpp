#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zmn/residue.hpp"

namespace zmn {

/// One point of an error-term scan of the weighted summatory function.
struct ErrorRecord {
  double x = 0.0;
  double exact = 0.0;       // D~(x)
  double main = 0.0;        // x * sum_r B_r (log x)^r
  double delta = 0.0;       // exact - main
  double normalized = 0.0;  // |delta| / (sqrt(x) log x)
  double rel_err = 0.0;     // |delta| / main
};

ErrorRecord make_error_record(double x, double exact, double main);

/// x_from * 10^(k / points_per_decade) for k = 0, 1, ... while <= x_to.
std::vector<double> geometric_grid(double x_from, double x_to, int points_per_decade);

/// Exact values by the REDUCED summatory algorithm, main term from `coeffs`
/// (which must be the weight-2 polynomial of the same variant).
std::vector<ErrorRecord> error_scan(Variant variant, double x_from, double x_to, int points_per_decade,
                                    const MainTermPolynomial& coeffs);

/// Least-squares slope of log|delta| against log x. Records with
/// |delta| <= epsilon are dropped; without an explicit epsilon the cut is
/// 1e-6 * sqrt(x) per record. Needs at least five retained records.
double slope_fit(const std::vector<ErrorRecord>& records, std::optional<double> epsilon = std::nullopt);

inline constexpr const char* kCsvHeader = "x,exact,main_term,delta,normalized_delta,relative_error";

void write_csv(std::ostream& out, const std::vector<ErrorRecord>& records);
std::vector<ErrorRecord> read_csv(std::istream& in);

/// Locale-independent shortest form with 15 significant digits.
std::string format_csv_number(double v);

}  // namespace zmn
