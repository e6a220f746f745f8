#pragma once

// Exact 64-bit arithmetic: primality, factorization, Euler's totient and the
// Korselt / Lehmer predicates built on top of them.

#include <cstdint>
#include <vector>

namespace lehmerlab::arith {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An integer together with its prime factorization.
///
/// Primes are strictly increasing and every multiplicity is at least one.
/// The empty factor list stands for the value 1.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  /// Product of prime^multiplicity, or 0 if it does not fit in 64 bits.
  std::uint64_t reconstruct() const;
  bool is_valid() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic for every 64-bit input (fixed strong-probable-prime bases).
bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument for n == 0.
Factorization factorize(std::uint64_t n);

/// Throws std::invalid_argument for n == 0.
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const Factorization& f);

bool is_squarefree(std::uint64_t n);

// Korselt: composite, squarefree and (p - 1) | (n - 1) for every prime p | n.
bool is_carmichael(std::uint64_t n);

/// Composite n with phi(n) | n - 1. Throws std::domain_error for n < 2.
bool is_lehmer(std::uint64_t n);

}  // namespace lehmerlab::arith
