#include "lehmerlab/catalog_verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lehmerlab/arith.hpp"

namespace lehmerlab::catalog {

namespace {

bool before(const std::string& name_a, std::size_t order_a, const std::string& name_b, std::size_t order_b) {
  return order_a != order_b ? order_a < order_b : name_a < name_b;
}

class Deduplicator {
 public:
  bool admit(const groups::CayleyGroup& g) {
    auto fp = groups::fingerprint(g);
    auto& bucket = seen_[fp.order];
    for (auto& prior : bucket) {
      if (!(prior.fp == fp)) continue;
      // Abelian groups are determined by their element-order multiset.
      if (fp.abelian) return false;
      if (!prior.aut) prior.aut = groups::aut_order_bruteforce(*prior.group);
      if (*prior.aut == groups::aut_order_bruteforce(g)) return false;
    }
    bucket.push_back({std::move(fp), &g, std::nullopt});
    return true;
  }

 private:
  struct Seen {
    groups::Fingerprint fp;
    const groups::CayleyGroup* group;
    std::optional<BigInt> aut;
  };
  std::map<std::size_t, std::vector<Seen>> seen_;
};

}  // namespace

std::vector<CatalogEntry> build_catalog(std::size_t max_order, std::span<const groups::CayleyGroup> extra) {
  if (max_order < 2) throw std::invalid_argument("catalog needs max_order >= 2");
  const std::size_t cap = groups::max_table_order();
  if (max_order > cap) throw groups::OrderCapError(max_order, cap);

  std::vector<CatalogEntry> candidates;
  for (std::size_t n = 2; n <= max_order; ++n) {
    for (auto& spec : abelian::abelian_groups_of_order(n)) {
      auto g = groups::make_abelian(spec);
      candidates.push_back({std::move(g), std::move(spec)});
    }
  }
  auto add = [&](groups::CayleyGroup g) { candidates.push_back({std::move(g), std::nullopt}); };
  if (max_order >= 6) add(groups::make_symmetric(3));
  if (max_order >= 12) add(groups::make_alternating(4));
  if (max_order >= 24) add(groups::make_symmetric(4));
  if (max_order >= 60) add(groups::make_alternating(5));
  if (max_order >= 120) add(groups::make_symmetric(5));
  for (std::size_t n = 3; 2 * n <= max_order; ++n) add(groups::make_dihedral(n));
  for (std::size_t n = 2; 4 * n <= max_order; ++n) add(groups::make_dicyclic(n));
  for (std::uint64_t p = 3; p * p * p <= max_order; p += 2) {
    if (arith::is_prime(p)) add(groups::make_heisenberg(p));
  }
  for (const auto& g : extra) add(g);

  // Candidates live in a stable vector while the deduplicator points into it.
  std::vector<bool> keep(candidates.size());
  Deduplicator dedup;
  for (std::size_t i = 0; i < candidates.size(); ++i) keep[i] = dedup.admit(candidates[i].group);

  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) out.push_back(std::move(candidates[i]));
  }
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return before(a.group.name(), a.group.order(), b.group.name(), b.group.order());
  });
  return out;
}

std::vector<VerifyRecord> verify_theorem1(std::span<const CatalogEntry> catalog, const VerifyOptions& options) {
  std::vector<VerifyRecord> records;
  records.reserve(catalog.size());
  for (const auto& entry : catalog) {
    const auto& g = entry.group;
    if (g.order() < 2) continue;
    VerifyRecord r;
    r.name = g.name();
    r.order = g.order();
    r.is_abelian = g.is_abelian();
    r.is_cyclic = groups::is_cyclic(g);
    if (entry.spec && g.order() > options.abelian_bruteforce_max_order) {
      r.aut_order = abelian::aut_order(*entry.spec);
      r.aut_method = "formula";
    } else {
      r.aut_order = groups::aut_order_bruteforce(g, options.search);
      r.aut_method = "bruteforce";
      if (entry.spec) r.aut_cross_check = abelian::aut_order(*entry.spec) == r.aut_order;
    }
    r.condition1 = (to_big(r.order - 1) % r.aut_order) == 0;
    r.expected1 = r.is_cyclic && (arith::is_prime(r.order) || arith::is_lehmer(r.order));
    r.agrees = r.condition1 == r.expected1;
    r.exponent = groups::exponent(g);
    r.condition2 = groups::check_condition2(g);
    r.phi_G = r.condition2.phi_value;
    records.push_back(std::move(r));
  }
  std::stable_sort(records.begin(), records.end(), [](const VerifyRecord& a, const VerifyRecord& b) {
    return before(a.name, a.order, b.name, b.order);
  });
  return records;
}

std::vector<VerifyRecord> verify_theorem1(std::size_t max_order) {
  const auto catalog = build_catalog(max_order);
  return verify_theorem1(catalog);
}

bool record_consistent(const VerifyRecord& r) { return r.agrees && r.aut_cross_check.value_or(true); }

Relation2Buckets scan_relation2(std::span<const CatalogEntry> catalog) {
  Relation2Buckets buckets;
  for (const auto& entry : catalog) {
    const auto& g = entry.group;
    if (g.order() < 2) continue;
    Relation2Record r;
    r.name = g.name();
    r.order = g.order();
    r.is_abelian = g.is_abelian();
    r.is_cyclic = groups::is_cyclic(g);
    r.exponent = groups::exponent(g);
    r.verdict = groups::check_condition2(g);
    switch (r.verdict.status) {
      case groups::Condition2Status::holds: buckets.holds.push_back(std::move(r)); break;
      case groups::Condition2Status::fails: buckets.fails.push_back(std::move(r)); break;
      case groups::Condition2Status::undefined_zero_phi: buckets.undefined_zero_phi.push_back(std::move(r)); break;
    }
  }
  auto order_records = [](std::vector<Relation2Record>& v) {
    std::stable_sort(v.begin(), v.end(), [](const Relation2Record& a, const Relation2Record& b) {
      return before(a.name, a.order, b.name, b.order);
    });
  };
  order_records(buckets.holds);
  order_records(buckets.fails);
  order_records(buckets.undefined_zero_phi);
  return buckets;
}

Relation2Buckets scan_relation2(std::size_t max_order) {
  const auto catalog = build_catalog(max_order);
  return scan_relation2(catalog);
}

}  // namespace lehmerlab::catalog
