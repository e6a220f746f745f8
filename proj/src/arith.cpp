#include "lehmerlab/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace lehmerlab::arith {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTrialBound = 1000;

// Bases that make strong-probable-prime testing exact below 3.3 * 10^24,
// which covers the full unsigned 64-bit range.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or n on failure.
std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t c, std::uint64_t y0) {
  auto f = [&](std::uint64_t v) {
    const std::uint64_t s = mul_mod(v, v, n);
    return s >= n - c ? s - (n - c) : s + c;
  };
  constexpr std::uint64_t kBatch = 128;
  std::uint64_t y = y0, x = y0, ys = y0, q = 1, g = 1;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const std::uint64_t steps = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
    if (r > (std::uint64_t{1} << 26)) break;
  }
  if (g == n) {
    // Batch overshot; replay one step at a time.
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

// Deterministic fallback: Fermat's method always terminates for odd composites.
std::uint64_t fermat_factor(std::uint64_t n) {
  std::uint64_t a = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(a) * a < n) ++a;
  for (;; ++a) {
    const u128 b2 = static_cast<u128>(a) * a - n;
    std::uint64_t b = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(b2)));
    while (static_cast<u128>(b) * b > b2) --b;
    while (static_cast<u128>(b + 1) * (b + 1) <= b2) ++b;
    if (static_cast<u128>(b) * b == b2) return a - b;
  }
}

std::uint64_t find_factor(std::uint64_t n) {
  std::mt19937_64 rng(n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t c = rng() % (n - 1) + 1;
    const std::uint64_t y0 = rng() % n;
    const std::uint64_t g = pollard_brent(n, c, y0);
    if (g != 1 && g != n) return g;
  }
  return fermat_factor(n);
}

void split(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = find_factor(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::uint64_t Factorization::reconstruct() const {
  u128 acc = 1;
  for (const auto& [p, e] : factors) {
    for (unsigned i = 0; i < e; ++i) {
      acc *= p;
      if (acc > UINT64_MAX) return 0;
    }
  }
  return static_cast<std::uint64_t>(acc);
}

bool Factorization::is_valid() const {
  if (value == 0) return false;
  if ((value == 1) != factors.empty()) return false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].multiplicity == 0 || !is_prime(factors[i].prime)) return false;
    if (i > 0 && factors[i - 1].prime >= factors[i].prime) return false;
  }
  return reconstruct() == value;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.value = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= kTrialBound && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (rest > 1) {
    std::map<std::uint64_t, unsigned> large;
    split(rest, large);
    for (const auto& [p, e] : large) f.factors.push_back({p, e});
  }
  if (f.reconstruct() != n) {
    throw std::logic_error("factorize: reconstruction check failed for " + std::to_string(n));
  }
  return f;
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : f.factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

bool is_squarefree(std::uint64_t n) {
  const auto f = factorize(n);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.multiplicity == 1; });
}

bool is_carmichael(std::uint64_t n) {
  if (n < 4 || is_prime(n)) return false;
  const auto f = factorize(n);
  return std::all_of(f.factors.begin(), f.factors.end(), [n](const PrimePower& pp) {
    return pp.multiplicity == 1 && (n - 1) % (pp.prime - 1) == 0;
  });
}

bool is_lehmer(std::uint64_t n) {
  if (n < 2) throw std::domain_error("is_lehmer: n must be at least 2");
  if (is_prime(n)) return false;
  return (n - 1) % euler_phi(n) == 0;
}

}  // namespace lehmerlab::arith
