#pragma once

// Verification harnesses over a catalog of small groups: the automorphism
// divisibility condition |G| - 1 = 0 mod |Aut(G)| against its characterization
// (cyclic of prime or Lehmer order), and an exploratory scan of
// |G| - 1 = 0 mod phi(G).

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lehmerlab/abelian_aut.hpp"
#include "lehmerlab/bigint.hpp"
#include "lehmerlab/group_engine.hpp"

namespace lehmerlab::catalog {

inline constexpr std::string_view kCatalogNote = "catalog is representative, not exhaustive";

struct CatalogEntry {
  groups::CayleyGroup group;
  std::optional<abelian::AbelianSpec> spec;  // set for groups built from an abelian spec
};

/// Every abelian group of each order 2..max_order, D_n, dicyclic groups, S_3,
/// A_4, S_4, A_5, S_5 and Heisenberg groups that fit, then `extra`. Groups
/// with equal fingerprints (and equal automorphism counts, when those are
/// needed to tell them apart) are kept once, first come first served. Sorted
/// by (order, name). Throws std::invalid_argument for max_order < 2 and
/// OrderCapError above the table cap.
std::vector<CatalogEntry> build_catalog(std::size_t max_order, std::span<const groups::CayleyGroup> extra = {});

struct VerifyRecord {
  std::string name;
  std::size_t order = 0;
  bool is_abelian = false;
  bool is_cyclic = false;
  BigInt aut_order;
  std::string aut_method;               // "bruteforce" or "formula"
  std::optional<bool> aut_cross_check;  // brute force vs formula, abelian members only
  bool condition1 = false;
  bool expected1 = false;
  std::uint64_t exponent = 0;
  std::uint64_t phi_G = 0;
  groups::Condition2Verdict condition2;
  bool agrees = false;
};

struct VerifyOptions {
  /// Abelian groups above this order take |Aut| from the closed formula only.
  std::size_t abelian_bruteforce_max_order = 128;
  groups::AutSearchOptions search;
};

/// One record per catalog group. expected1 is "cyclic and of prime or Lehmer
/// order"; agrees is condition1 == expected1.
std::vector<VerifyRecord> verify_theorem1(std::span<const CatalogEntry> catalog, const VerifyOptions& options = {});
std::vector<VerifyRecord> verify_theorem1(std::size_t max_order);

/// A record is consistent when it agrees and, where both |Aut| routes ran,
/// they matched.
bool record_consistent(const VerifyRecord& r);

struct Relation2Record {
  std::string name;
  std::size_t order = 0;
  bool is_abelian = false;
  bool is_cyclic = false;
  std::uint64_t exponent = 0;
  groups::Condition2Verdict verdict;
};

struct Relation2Buckets {
  std::vector<Relation2Record> holds;
  std::vector<Relation2Record> fails;
  std::vector<Relation2Record> undefined_zero_phi;
};

Relation2Buckets scan_relation2(std::span<const CatalogEntry> catalog);
Relation2Buckets scan_relation2(std::size_t max_order);

}  // namespace lehmerlab::catalog
