#pragma once

#include <cstdint>

#include "zmn/arith.hpp"
#include "zmn/residue.hpp"

namespace zmn {

enum class Algorithm { Naive, Reduced };

inline constexpr double kNaiveCap = 1e6;

/// D(x) = sum_{mn<=x} s-or-c(m,n), or the weighted D~(x) with log(x/mn).
struct SummatoryResult {
  double x = 0.0;
  Variant variant = Variant::S;
  bool weighted = false;
  std::uint64_t exact = 0;  // unweighted sums only
  double value = 0.0;       // weighted sum, or exact converted to double
  Algorithm algorithm = Algorithm::Reduced;
  double elapsed = 0.0;     // seconds
};

/// NAIVE walks every pair m*n <= floor(x) and needs tables with limit >= x.
/// REDUCED evaluates sum_{d <= sqrt x} w(d) K(x/d^2) with w(d) = d (s) or
/// phi(d) (c) and K the tau^2 kernel; tables are only consulted for phi(d).
SummatoryResult summatory(Variant variant, bool weighted, double x, Algorithm algorithm, const ArithTables& tables);

/// Same, building whatever tables the algorithm needs.
SummatoryResult summatory(Variant variant, bool weighted, double x, Algorithm algorithm);

struct DirichletCheck {
  double partial = 0.0;  // sum_{mn<=N} a(m,n) m^-z n^-w
  double closed = 0.0;   // zeta^2(z) zeta^2(w) zeta(z+w-1) / zeta^k(z+w)
  double gap() const { return closed - partial; }
};

/// Numeric check of the double Dirichlet series of s(m,n) (k=1) or c(m,n) (k=2)
/// at real z, w > 1.
DirichletCheck dirichlet_truncation(Variant variant, double z, double w, std::int64_t truncation);

std::string to_string(Algorithm a);

}  // namespace zmn
