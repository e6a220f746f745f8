#pragma once

// Automorphism counts of finite abelian groups in closed form.
//
// A finite abelian p-group is written as Z_{p^{n_1}} x ... x Z_{p^{n_k}} with
// n_1 <= ... <= n_k. With a_r = max{s : n_s = n_r} and b_r = min{s : n_s = n_r}
// (1-based), its automorphism group has order
//
//   prod_i (p^{a_i} - p^{i-1}) * prod_u p^{n_u (k - a_u)} * prod_v p^{(n_v - 1)(k - b_v + 1)}.
//
// A general finite abelian group is the direct product of its p-primary
// parts, and |Aut| is multiplicative over that decomposition.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lehmerlab/bigint.hpp"

namespace lehmerlab::abelian {

/// The abelian p-group prod_i Z_{p^{n_i}}. The partition is sorted ascending
/// on construction.
class PrimaryComponent {
 public:
  /// Throws std::invalid_argument if p is not prime, the partition is empty or
  /// contains a zero.
  PrimaryComponent(std::uint64_t p, std::vector<unsigned> partition);

  std::uint64_t prime() const { return prime_; }
  const std::vector<unsigned>& partition() const { return partition_; }
  std::size_t rank() const { return partition_.size(); }
  unsigned exponent_sum() const;
  BigInt order() const;

  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;

 private:
  std::uint64_t prime_;
  std::vector<unsigned> partition_;
};

/// A finite abelian group as a list of primary components with distinct
/// primes, kept sorted by prime. The empty list is the trivial group.
class AbelianSpec {
 public:
  AbelianSpec() = default;
  /// Throws std::invalid_argument on a repeated prime.
  explicit AbelianSpec(std::vector<PrimaryComponent> components);

  const std::vector<PrimaryComponent>& components() const { return components_; }
  bool is_trivial() const { return components_.empty(); }
  /// Cyclic iff every primary part has rank one.
  bool is_cyclic() const;

  friend bool operator==(const AbelianSpec&, const AbelianSpec&) = default;

 private:
  std::vector<PrimaryComponent> components_;
};

// 1-based position helpers for the formula. Both throw std::out_of_range if r
// is not in [1, k] and std::invalid_argument if the partition is not a
// nonempty ascending list of positive integers.
std::size_t a_index(std::span<const unsigned> partition, std::size_t r);
std::size_t b_index(std::span<const unsigned> partition, std::size_t r);

BigInt aut_order_primary(const PrimaryComponent& c);
BigInt aut_order(const AbelianSpec& spec);
BigInt group_order(const AbelianSpec& spec);

/// Z_n as the product of Z_{p^e} over the prime powers p^e || n.
AbelianSpec decompose_cyclic(std::uint64_t n);

/// (|G| - 1) mod |Aut(G)| == 0. Throws std::domain_error for the trivial group.
bool satisfies_condition1(const AbelianSpec& spec);

/// Parses `p^e1,e2,...;q^f1,...` (whitespace around tokens allowed; "1" or an
/// empty string is the trivial group). Throws std::invalid_argument.
AbelianSpec parse_abelian_spec(std::string_view text);
/// Inverse of parse_abelian_spec.
std::string to_spec_string(const AbelianSpec& spec);
/// Human label such as "Z_12" or "Z_2^2 x Z_3".
std::string display_name(const AbelianSpec& spec);

/// All partitions of `total` as ascending part lists, in lexicographic order.
std::vector<std::vector<unsigned>> partitions_of(unsigned total);
/// One spec per isomorphism class of abelian groups of order n (n >= 1).
std::vector<AbelianSpec> abelian_groups_of_order(std::uint64_t n);

}  // namespace lehmerlab::abelian
