#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace zmn {

/// Largest y the segmented kernel accepts (factor accumulators are 32-bit).
inline constexpr std::uint64_t kKernelMaxY = 0xFFFFFFFFULL;
/// Entries per sieve segment.
inline constexpr std::size_t kSegmentSize = std::size_t{1} << 22;

struct KernelQuery {
  std::uint64_t y = 0;   // upper summation limit
  double offset = 0.0;   // C in sum tau(k)^2 (C - log k)
};

struct KernelResult {
  std::uint64_t tau_square_sum = 0;  // sum_{k<=y} tau(k)^2
  double weighted = 0.0;             // sum_{k<=y} tau(k)^2 (C - log k); 0 unless requested
};

/// Answers every query in a single pass of a segmented factorization sieve.
///
/// Segments are processed in parallel (OpenMP); per-segment partial sums are
/// merged in segment order, so results depend only on `segment`, not on the
/// thread count.
std::vector<KernelResult> tau_square_kernel(std::span<const KernelQuery> queries, bool weighted,
                                            std::size_t segment = kSegmentSize);

/// tau(k) for k in [lo, lo + out.size()), lo >= 1, using primes up to sqrt of
/// the segment end.
void sieve_tau_segment(std::uint64_t lo, std::span<const std::uint32_t> primes, std::span<std::uint16_t> out);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// sum_{k <= floor(y)} tau(k)^2, y >= 0.
std::uint64_t tau_square_sum(double y);

/// sum_{k <= floor(y)} tau(k)^2 (C - log k), y >= 1.
double weighted_kernel(double y, double offset);

// Serial reference: full-array divisor-increment sieve, no segmentation or threads.
std::vector<std::uint16_t> tau_table_reference(std::uint64_t y);
std::uint64_t tau_square_sum_reference(std::uint64_t y);
double weighted_kernel_reference(std::uint64_t y, double offset);

}  // namespace zmn
