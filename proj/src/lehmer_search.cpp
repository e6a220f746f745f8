#include "lehmerlab/lehmer_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <new>
#include <stdexcept>
#include <string>
#include <thread>

#include "lehmerlab/arith.hpp"

namespace lehmerlab::lehmer {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2) throw std::invalid_argument("range start must be at least 2");
  if (hi < lo) throw std::invalid_argument("range end is below range start");
  if (hi > kMaxScanBound) throw std::invalid_argument("range end exceeds 2^63 - 1");
}

// Per-segment sieve state. `korselt` is only filled when requested and holds,
// for each n, whether n is squarefree with (p - 1) | (n - 1) for all p | n.
struct SegmentSieve {
  std::vector<std::uint64_t> phi;
  std::vector<std::uint8_t> korselt;
};

SegmentSieve sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base,
                           bool track_korselt) {
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  SegmentSieve s;
  std::vector<std::uint64_t> rest(len);
  s.phi.resize(len);
  for (std::size_t i = 0; i < len; ++i) rest[i] = s.phi[i] = lo + i;
  if (track_korselt) s.korselt.assign(len, 1);

  for (const std::uint32_t p32 : base) {
    const std::uint64_t p = p32;
    if (p * p > hi) break;
    std::uint64_t first = (lo + p - 1) / p * p;
    for (std::uint64_t m = first; m <= hi; m += p) {
      const std::size_t i = static_cast<std::size_t>(m - lo);
      s.phi[i] = s.phi[i] / p * (p - 1);
      rest[i] /= p;
      if (rest[i] % p == 0) {
        if (track_korselt) s.korselt[i] = 0;
        do {
          rest[i] /= p;
        } while (rest[i] % p == 0);
      }
      if (track_korselt && (m - 1) % (p - 1) != 0) s.korselt[i] = 0;
    }
  }
  // At most one prime factor exceeds sqrt(hi); it is left in `rest`.
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t q = rest[i];
    if (q > 1) {
      s.phi[i] = s.phi[i] / q * (q - 1);
      if (track_korselt && ((lo + i) - 1) % (q - 1) != 0) s.korselt[i] = 0;
    }
  }
  return s;
}

struct SegmentResult {
  std::vector<std::uint64_t> candidates;
  std::vector<std::uint64_t> carmichael;
  std::uint64_t composites = 0;
};

SegmentResult scan_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base,
                           bool collect_carmichael) {
  const SegmentSieve s = sieve_segment(lo, hi, base, collect_carmichael);
  SegmentResult out;
  for (std::size_t i = 0; i < s.phi.size(); ++i) {
    const std::uint64_t n = lo + i;
    const std::uint64_t phi = s.phi[i];
    if (phi == n - 1) continue;  // prime
    ++out.composites;
    if ((n - 1) % phi == 0) {
      if (!arith::is_lehmer(n)) {
        throw std::logic_error("sieve reported phi(n) | n - 1 but arith disagrees for n = " +
                               std::to_string(n));
      }
      if (!known_constraint_filter(n)) {
        throw std::logic_error("Lehmer candidate violates odd/squarefree constraint: " +
                               std::to_string(n));
      }
      out.candidates.push_back(n);
    }
    if (collect_carmichael && s.korselt[i]) {
      if (!arith::is_carmichael(n)) {
        throw std::logic_error("sieve Korselt flag disagrees with arith for n = " + std::to_string(n));
      }
      out.carmichael.push_back(n);
    }
  }
  return out;
}

}  // namespace

void ScanConfig::validate() const {
  check_range(lo, hi);
  if (segment_length < 2) throw std::invalid_argument("segment length must be at least 2");
  if (segment_length > kMaxSegmentLength) throw std::invalid_argument("segment length too large");
  if (worker_count == 0) throw std::invalid_argument("worker count must be positive");
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PhiEntry> sieve_phi_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t max_length) {
  check_range(lo, hi);
  if (hi - lo + 1 > max_length) throw std::invalid_argument("segment longer than the allowed bound");
  const auto base = primes_up_to(static_cast<std::uint32_t>(isqrt(hi)));
  const auto s = sieve_segment(lo, hi, base, false);
  std::vector<PhiEntry> out(s.phi.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {lo + i, s.phi[i]};
  return out;
}

bool known_constraint_filter(std::uint64_t n) { return n % 2 == 1 && arith::is_squarefree(n); }

ScanReport scan_range(const ScanConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  const std::uint64_t root = isqrt(config.hi);
  if (root > UINT32_MAX) throw std::invalid_argument("range end too large for base-prime table");
  std::vector<std::uint32_t> base;
  try {
    base = primes_up_to(static_cast<std::uint32_t>(root));
  } catch (const std::bad_alloc&) {
    throw std::runtime_error("out of memory allocating base primes");
  }

  const std::uint64_t span = config.hi - config.lo;
  const std::uint64_t segments = span / config.segment_length + 1;
  std::vector<SegmentResult> results(static_cast<std::size_t>(segments));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t k = next.fetch_add(1);
      if (k >= segments) return;
      const std::uint64_t seg_lo = config.lo + k * config.segment_length;
      const std::uint64_t seg_hi = std::min(config.hi, seg_lo + config.segment_length - 1);
      try {
        results[k] = scan_segment(seg_lo, seg_hi, base, config.collect_carmichael);
      } catch (const std::bad_alloc&) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::make_exception_ptr(std::runtime_error("out of memory allocating segment"));
        next = segments;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = segments;
      }
    }
  };

  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(config.worker_count, segments));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ScanReport report;
  report.lo = config.lo;
  report.hi = config.hi;
  if (config.collect_carmichael) report.carmichael_found.emplace();
  for (auto& r : results) {
    report.composites_tested += r.composites;
    report.lehmer_candidates.insert(report.lehmer_candidates.end(), r.candidates.begin(), r.candidates.end());
    if (config.collect_carmichael) {
      report.carmichael_found->insert(report.carmichael_found->end(), r.carmichael.begin(), r.carmichael.end());
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lehmerlab::lehmer
