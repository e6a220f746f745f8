#pragma once

// Finite groups given by explicit Cayley tables, with brute-force invariants:
// element orders, exponent, center, the generalized totient and exact
// automorphism counts.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lehmerlab/abelian_aut.hpp"
#include "lehmerlab/bigint.hpp"

namespace lehmerlab::groups {

using Element = std::uint16_t;

inline constexpr std::size_t kDefaultMaxOrder = 512;
inline constexpr std::size_t kHardMaxOrder = 65535;

/// The table order cap: LEHMERLAB_MAX_TABLE_ORDER if set to a valid positive
/// integer (clamped to kHardMaxOrder), otherwise kDefaultMaxOrder.
std::size_t max_table_order();

class OrderCapError : public std::runtime_error {
 public:
  OrderCapError(std::size_t order, std::size_t cap);
  std::size_t order() const { return order_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t order_;
  std::size_t cap_;
};

/// Raised when a table is not a group. Holds at most the first ten violations.
class GroupAxiomError : public std::runtime_error {
 public:
  explicit GroupAxiomError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class TableParseError : public std::runtime_error {
 public:
  TableParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An immutable finite group on the indices 0..m-1 with identity 0.
class CayleyGroup {
 public:
  /// Validates the table (range, identity at 0, inverses, associativity) and
  /// throws GroupAxiomError listing the violations, or OrderCapError.
  static CayleyGroup from_table(std::string name, std::size_t order, std::vector<Element> table,
                                std::size_t max_order = max_table_order());

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  Element mul(Element a, Element b) const { return table_[std::size_t{a} * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::span<const Element> row(Element a) const { return {table_.data() + std::size_t{a} * order_, order_}; }
  bool is_abelian() const;

  CayleyGroup renamed(std::string name) const;

  friend bool operator==(const CayleyGroup& a, const CayleyGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  CayleyGroup() = default;

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

CayleyGroup make_cyclic(std::size_t n);
CayleyGroup make_abelian(const abelian::AbelianSpec& spec);
/// Symmetries of the n-gon, order 2n, n >= 3.
CayleyGroup make_dihedral(std::size_t n);
/// <a, x | a^{2n} = 1, x^2 = a^n, x a x^-1 = a^-1>, order 4n, n >= 2.
CayleyGroup make_dicyclic(std::size_t n);
/// Permutations of {0..n-1} composed right to left, 1 <= n <= 5.
CayleyGroup make_symmetric(std::size_t n);
CayleyGroup make_alternating(std::size_t n);
/// Upper unitriangular 3x3 matrices over F_p, p an odd prime.
CayleyGroup make_heisenberg(std::uint64_t p);
CayleyGroup direct_product(const CayleyGroup& g, const CayleyGroup& h);

/// Throws std::out_of_range if x is not an element of g.
std::uint64_t element_order(const CayleyGroup& g, std::size_t x);
std::vector<std::uint64_t> element_orders(const CayleyGroup& g);
std::uint64_t exponent(const CayleyGroup& g);
bool is_cyclic(const CayleyGroup& g);
/// Number of elements whose order equals the exponent.
std::uint64_t phi_G(const CayleyGroup& g);
std::vector<Element> center(const CayleyGroup& g);
/// |G / Z(G)|, the order of the inner automorphism group.
std::uint64_t inn_order(const CayleyGroup& g);

/// Primary decomposition of an abelian table, read off from the number of
/// solutions of x^(p^j) = 1. Empty for nonabelian groups.
std::optional<abelian::AbelianSpec> identify_abelian(const CayleyGroup& g);

/// Greedy generating set: each step adds the element that most enlarges the
/// generated subgroup (ties go to the smallest index).
std::vector<Element> generating_set(const CayleyGroup& g);

struct AutSearchOptions {
  std::size_t max_order = max_table_order();
};

/// Exact |Aut(G)| by backtracking over images of a generating set.
///
/// Candidate images are restricted to elements with the same order, the same
/// centralizer size and the same root counts. The count is the product of
/// the orbit sizes along the stabilizer chain of the generators, each orbit
/// being found by exhibiting a complete automorphism for every member.
/// Throws OrderCapError above options.max_order.
BigInt aut_order_bruteforce(const CayleyGroup& g, const AutSearchOptions& options = {});

/// Counts automorphisms one at a time. Throws std::length_error once the
/// count passes `limit`. Only useful as a cross-check on small groups.
std::uint64_t aut_order_enumerate(const CayleyGroup& g, std::uint64_t limit);

/// (|G| - 1) mod |Aut(G)| == 0. Throws std::domain_error for the trivial group.
bool satisfies_condition1(const CayleyGroup& g, const AutSearchOptions& options = {});

enum class Condition2Status { holds, fails, undefined_zero_phi };

struct Condition2Verdict {
  Condition2Status status = Condition2Status::undefined_zero_phi;
  std::uint64_t phi_value = 0;
  std::optional<std::uint64_t> remainder;  // absent when undefined
};

std::string_view to_string(Condition2Status status);

/// (|G| - 1) mod phi_G(G), or undefined_zero_phi when no element attains the
/// exponent. Throws std::domain_error for the trivial group.
Condition2Verdict check_condition2(const CayleyGroup& g);

/// Cheap isomorphism invariant used for catalog de-duplication. Equal
/// fingerprints do not imply isomorphism.
struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::vector<std::uint64_t> order_multiset;
  std::size_t center_size = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const CayleyGroup& g);

/// Text format: first data line is m, followed by m rows of m indices.
/// Lines starting with '#' and blank lines are ignored.
CayleyGroup load_cayley_table(std::istream& in, std::string name = "table",
                              std::size_t max_order = max_table_order());
CayleyGroup load_cayley_table_file(const std::filesystem::path& path,
                                   std::size_t max_order = max_table_order());
void write_cayley_table(const CayleyGroup& g, std::ostream& out);

}  // namespace lehmerlab::groups
