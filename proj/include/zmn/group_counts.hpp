#pragma once

#include <cstdint>
#include <string>

#include "zmn/arith.hpp"

namespace zmn {

// Closed formulas for the number of subgroups s(m,n) of Z_m x Z_n:
//   F1  sum_{a|m, b|n} gcd(a,b)
//   F2  sum_{d|gcd(m,n)} phi(d) tau(m/d) tau(n/d)
//   F3  sum_{d|gcd(m,n)} d tau(mn/d^2)
enum class SFormula { F1, F2, F3 };

// Closed formulas for the number of cyclic subgroups c(m,n):
//   C1  sum_{a|m, b|n, gcd(m/a,n/b)=1} gcd(a,b)
//   C2  sum_{a|m, b|n} phi(gcd(a,b))
//   C3  sum_{d|gcd(m,n)} (mu*phi)(d) tau(m/d) tau(n/d)
//   C4  sum_{d|gcd(m,n)} phi(d) tau(mn/d^2)
enum class CFormula { C1, C2, C3, C4 };

struct GroupCountRecord {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t s_count = 0;
  std::int64_t c_count = 0;
  std::string source;  // "F3/C4", "ORACLE", ...
};

struct SubgroupCounts {
  std::int64_t total = 0;
  std::int64_t cyclic = 0;
  friend bool operator==(const SubgroupCounts&, const SubgroupCounts&) = default;
};

std::int64_t s_count(std::int64_t m, std::int64_t n, SFormula formula, const ArithTables& tables);
std::int64_t c_count(std::int64_t m, std::int64_t n, CFormula formula, const ArithTables& tables);

/// (mu*phi)(d) by direct Dirichlet convolution over the divisors of d.
std::int64_t mu_conv_phi(std::int64_t d, const ArithTables& tables);

GroupCountRecord count_record(std::int64_t m, std::int64_t n, SFormula sf, CFormula cf,
                              const ArithTables& tables);

inline constexpr std::int64_t kDefaultOracleCap = 10'000;

/// Brute-force subgroup enumeration of Z_m x Z_n.
///
/// Every subgroup is generated by at most two elements. The cyclic subgroups
/// <g> are listed first; the full lattice is then obtained by closing every
/// pair <g> + <h> under addition. Subgroups are identified by their element
/// sets (bitsets over the encoding a*n + b) held in a hash set.
SubgroupCounts enumerate_subgroups(std::int64_t m, std::int64_t n,
                                   std::int64_t cap = kDefaultOracleCap);

std::string to_string(SFormula f);
std::string to_string(CFormula f);

}  // namespace zmn
