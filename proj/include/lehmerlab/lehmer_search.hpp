#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lehmerlab::lehmer {

inline constexpr std::uint64_t kMaxScanBound = (std::uint64_t{1} << 63) - 1;
inline constexpr std::uint64_t kDefaultSegmentLength = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxSegmentLength = std::uint64_t{1} << 26;

struct ScanConfig {
  std::uint64_t lo = 2;
  std::uint64_t hi = 2;
  std::uint64_t segment_length = kDefaultSegmentLength;
  unsigned worker_count = 1;
  bool collect_carmichael = false;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

struct ScanReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> lehmer_candidates;
  std::optional<std::vector<std::uint64_t>> carmichael_found;
  std::uint64_t composites_tested = 0;
  double elapsed_ms = 0.0;
};

struct PhiEntry {
  std::uint64_t n = 0;
  std::uint64_t phi = 0;

  friend bool operator==(const PhiEntry&, const PhiEntry&) = default;
};

/// Primes up to and including `limit`, by a plain sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Euler's totient for every n in [lo, hi] by segmented sieving with the base
/// primes up to sqrt(hi). Rejects lo < 2, hi < lo, hi > 2^63 - 1 and ranges
/// longer than `max_length`.
std::vector<PhiEntry> sieve_phi_segment(std::uint64_t lo, std::uint64_t hi,
                                        std::uint64_t max_length = kMaxSegmentLength);

/// Odd and squarefree: necessary conditions any Lehmer number must meet.
bool known_constraint_filter(std::uint64_t n);

/// Tests phi(n) | n - 1 for every composite n in [config.lo, config.hi].
///
/// Segments are distributed across `worker_count` threads and merged in
/// ascending order, so the report does not depend on the worker count or on
/// the segment length. Every hit is re-verified with arith::is_lehmer and
/// must pass known_constraint_filter; a failure of either is a logic_error.
ScanReport scan_range(const ScanConfig& config);

}  // namespace lehmerlab::lehmer
