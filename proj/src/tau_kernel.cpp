#include "zmn/tau_kernel.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zmn/compensated.hpp"
#include "zmn/errors.hpp"

namespace zmn {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t floor_limit(double y, const char* what) {
  if (!(y >= 0)) throw DomainError(std::string(what) + ": y must be >= 0");
  if (y > static_cast<double>(kKernelMaxY))
    throw SizeError(std::string(what) + ": y exceeds kernel cap " + std::to_string(kKernelMaxY));
  return static_cast<std::uint64_t>(std::floor(y));
}

struct SegmentPartial {
  std::vector<std::uint64_t> counts;
  std::vector<CompensatedSum> weighted;
};

}  // namespace

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;
  std::vector<char> composite(n + 1, 0);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
  }
  return primes;
}

void sieve_tau_segment(std::uint64_t lo, std::span<const std::uint32_t> primes, std::span<std::uint16_t> out) {
  const std::size_t len = out.size();
  if (len == 0) return;
  if (lo < 1) throw DomainError("sieve_tau_segment: segment must start at 1 or later");
  const std::uint64_t hi = lo + len;  // exclusive
  if (hi - 1 > kKernelMaxY) throw SizeError("sieve_tau_segment: segment beyond kernel cap");

  thread_local std::vector<std::uint32_t> cofactor;
  thread_local std::vector<std::uint8_t> exponent;
  cofactor.assign(len, 1);
  exponent.assign(len, 0);
  std::fill(out.begin(), out.end(), std::uint16_t{1});

  for (std::uint32_t p : primes) {
    if (std::uint64_t{p} * p > hi - 1) break;
    for (std::uint64_t pk = p;; pk *= p) {
      for (std::uint64_t m = (lo + pk - 1) / pk * pk; m < hi; m += pk) {
        ++exponent[m - lo];
        cofactor[m - lo] *= p;
      }
      if (pk > (hi - 1) / p) break;
    }
    for (std::uint64_t m = (lo + p - 1) / p * p; m < hi; m += p) {
      out[m - lo] = static_cast<std::uint16_t>(out[m - lo] * (exponent[m - lo] + 1));
      exponent[m - lo] = 0;
    }
  }
  // At most one prime factor exceeds sqrt(hi - 1).
  for (std::size_t i = 0; i < len; ++i)
    if (cofactor[i] != lo + i) out[i] = static_cast<std::uint16_t>(out[i] * 2);
}

std::vector<KernelResult> tau_square_kernel(std::span<const KernelQuery> queries, bool weighted,
                                            std::size_t segment) {
  if (segment == 0) throw DomainError("tau_square_kernel: segment size must be positive");
  std::vector<KernelResult> results(queries.size());
  if (queries.empty()) return results;

  // Queries by decreasing y: the ones still active in a segment form a prefix.
  std::vector<std::size_t> order(queries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return queries[a].y > queries[b].y; });
  const std::uint64_t y_max = queries[order.front()].y;
  if (y_max > kKernelMaxY) throw SizeError("tau_square_kernel: y exceeds kernel cap " + std::to_string(kKernelMaxY));
  if (y_max == 0) return results;

  const auto primes = primes_up_to(static_cast<std::uint32_t>(isqrt(y_max)));
  const std::uint64_t segments = (y_max + segment - 1) / segment;
  std::vector<SegmentPartial> partials(segments);

  // Active prefix length for a segment starting at lo.
  auto active_count = [&](std::uint64_t lo) {
    std::size_t n = 0;
    while (n < order.size() && queries[order[n]].y >= lo) ++n;
    return n;
  };

#pragma omp parallel
  {
    std::vector<std::uint16_t> tau;
    std::vector<std::uint64_t> prefix;
    std::vector<double> tau_sq;
    std::vector<double> log_k;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(segments); ++s) {
      const std::uint64_t lo = 1 + static_cast<std::uint64_t>(s) * segment;
      const std::uint64_t hi = std::min<std::uint64_t>(lo + segment, y_max + 1);
      const std::size_t len = hi - lo;
      tau.resize(len);
      sieve_tau_segment(lo, primes, tau);

      prefix.resize(len);
      std::uint64_t running = 0;
      for (std::size_t i = 0; i < len; ++i) {
        running += std::uint64_t{tau[i]} * tau[i];
        prefix[i] = running;
      }
      if (weighted) {
        tau_sq.resize(len);
        log_k.resize(len);
        for (std::size_t i = 0; i < len; ++i) {
          tau_sq[i] = static_cast<double>(std::uint64_t{tau[i]} * tau[i]);
          log_k[i] = std::log(static_cast<double>(lo + i));
        }
      }

      const std::size_t active = active_count(lo);
      SegmentPartial& part = partials[s];
      part.counts.resize(active);
      if (weighted) part.weighted.resize(active);
      for (std::size_t q = 0; q < active; ++q) {
        const KernelQuery& query = queries[order[q]];
        const std::size_t end = static_cast<std::size_t>(std::min(query.y, hi - 1) - lo);
        part.counts[q] = prefix[end];
        if (weighted) {
          CompensatedSum acc;
          for (std::size_t i = 0; i <= end; ++i) acc.add(tau_sq[i] * (query.offset - log_k[i]));
          part.weighted[q] = acc;
        }
      }
    }
  }

  std::vector<CompensatedSum> weighted_totals(queries.size());
  for (const auto& part : partials) {
    for (std::size_t q = 0; q < part.counts.size(); ++q) {
      auto& r = results[order[q]];
      r.tau_square_sum = checked_add(r.tau_square_sum, part.counts[q]);
      if (weighted) weighted_totals[order[q]].add(part.weighted[q]);
    }
  }
  if (weighted)
    for (std::size_t i = 0; i < results.size(); ++i) results[i].weighted = weighted_totals[i].value();
  return results;
}

std::uint64_t tau_square_sum(double y) {
  const KernelQuery q{floor_limit(y, "tau_square_sum"), 0.0};
  return tau_square_kernel({&q, 1}, false).front().tau_square_sum;
}

double weighted_kernel(double y, double offset) {
  if (!(y >= 1)) throw DomainError("weighted_kernel: y must be >= 1");
  const KernelQuery q{floor_limit(y, "weighted_kernel"), offset};
  return tau_square_kernel({&q, 1}, true).front().weighted;
}

std::vector<std::uint16_t> tau_table_reference(std::uint64_t y) {
  std::vector<std::uint16_t> tau(y + 1, 0);
  for (std::uint64_t d = 1; d <= y; ++d)
    for (std::uint64_t m = d; m <= y; m += d) ++tau[m];
  return tau;
}

std::uint64_t tau_square_sum_reference(std::uint64_t y) {
  const auto tau = tau_table_reference(y);
  std::uint64_t sum = 0;
  for (std::uint64_t k = 1; k <= y; ++k) sum = checked_add(sum, std::uint64_t{tau[k]} * tau[k]);
  return sum;
}

double weighted_kernel_reference(std::uint64_t y, double offset) {
  const auto tau = tau_table_reference(y);
  CompensatedSum acc;
  for (std::uint64_t k = 1; k <= y; ++k)
    acc.add(static_cast<double>(std::uint64_t{tau[k]} * tau[k]) * (offset - std::log(static_cast<double>(k))));
  return acc.value();
}

}  // namespace zmn
