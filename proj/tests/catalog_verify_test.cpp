#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "lehmerlab/catalog_verify.hpp"
#include "oracles.hpp"

using namespace lehmerlab;
using namespace lehmerlab::catalog;

namespace {

std::vector<std::string> names_of(const std::vector<CatalogEntry>& cat) {
  std::vector<std::string> out;
  for (const auto& e : cat) out.push_back(e.group.name());
  return out;
}

std::set<std::string> names_of(const std::vector<Relation2Record>& records) {
  std::set<std::string> out;
  for (const auto& r : records) out.insert(r.name);
  return out;
}

oracle::Table to_table(const groups::CayleyGroup& g) {
  oracle::Table t(g.order(), std::vector<int>(g.order()));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      t[a][b] = g.mul(static_cast<groups::Element>(a), static_cast<groups::Element>(b));
  return t;
}

}  // namespace

TEST(Catalog, OrderEight) {
  const auto cat = build_catalog(8);
  const std::vector<std::string> expected{"Z_2",   "Z_3", "Z_2^2", "Z_4", "Z_5",       "S_3",   "Z_6",
                                          "Z_7",   "D_4", "Q_8",   "Z_2 x Z_4", "Z_2^3", "Z_8"};
  EXPECT_EQ(names_of(cat), expected);
}

TEST(Catalog, SmallestAndErrors) {
  EXPECT_EQ(names_of(build_catalog(2)), std::vector<std::string>{"Z_2"});
  EXPECT_THROW(build_catalog(1), std::invalid_argument);
  EXPECT_THROW(build_catalog(513), groups::OrderCapError);
}

TEST(Catalog, OrderTwentySevenHasHeisenberg) {
  const auto names = names_of(build_catalog(27));
  EXPECT_NE(std::find(names.begin(), names.end(), "Heisenberg(3)"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "A_4"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "S_4"), names.end());
}

TEST(Catalog, ExtrasAreDeduplicated) {
  const std::vector<groups::CayleyGroup> extra{groups::make_symmetric(3).renamed("my_s3"),
                                               groups::make_dicyclic(3).renamed("mine")};
  const auto names = names_of(build_catalog(12, extra));
  EXPECT_EQ(std::count(names.begin(), names.end(), "my_s3"), 0);
  EXPECT_EQ(std::count(names.begin(), names.end(), "mine"), 0);
  const std::vector<groups::CayleyGroup> order13{groups::make_cyclic(13).renamed("thirteen")};
  const auto more = names_of(build_catalog(12, order13));
  EXPECT_EQ(std::count(more.begin(), more.end(), "thirteen"), 1);
}

TEST(Catalog, FingerprintCollisionsDifferInAut) {
  const auto cat = build_catalog(32);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (groups::fingerprint(cat[i].group) != groups::fingerprint(cat[j].group)) continue;
      EXPECT_NE(groups::aut_order_bruteforce(cat[i].group), groups::aut_order_bruteforce(cat[j].group))
          << cat[i].group.name() << " " << cat[j].group.name();
    }
  }
}

TEST(Verify, OrderSixtyFour) {
  const auto records = verify_theorem1(64);
  ASSERT_FALSE(records.empty());
  for (const auto& r : records) {
    EXPECT_TRUE(record_consistent(r)) << r.name;
    EXPECT_EQ(r.condition1, r.is_cyclic && oracle::is_prime_trial(r.order)) << r.name;
    if (r.aut_cross_check) EXPECT_TRUE(*r.aut_cross_check) << r.name;
  }
}

TEST(Verify, FormulaAboveBruteForceLimit) {
  const auto cat = build_catalog(8);
  VerifyOptions opts;
  opts.abelian_bruteforce_max_order = 4;
  for (const auto& r : verify_theorem1(cat, opts)) {
    if (r.is_abelian && r.order > 4) {
      EXPECT_EQ(r.aut_method, "formula") << r.name;
      EXPECT_FALSE(r.aut_cross_check.has_value()) << r.name;
    } else {
      EXPECT_EQ(r.aut_method, "bruteforce") << r.name;
    }
  }
}

TEST(Relation2, BucketsAtEightyOne) {
  const auto b = scan_relation2(81);
  const auto holds = names_of(b.holds);
  const auto fails = names_of(b.fails);
  const auto undefined = names_of(b.undefined_zero_phi);
  for (const char* n : {"Z_2", "Z_2^2", "Z_2^3", "Z_2^4", "Z_2^5", "Z_2^6", "Z_3^2", "Z_3^3", "Z_3^4", "Z_5^2",
                        "Z_7^2", "Heisenberg(3)"}) {
    EXPECT_TRUE(holds.count(n)) << n;
  }
  EXPECT_TRUE(fails.count("Q_8"));
  EXPECT_TRUE(fails.count("Z_4"));
  EXPECT_TRUE(undefined.count("S_3"));
}

TEST(Relation2, BucketsMatchOrderEnumeration) {
  const auto cat = build_catalog(64);
  const auto b = scan_relation2(cat);
  EXPECT_EQ(b.holds.size() + b.fails.size() + b.undefined_zero_phi.size(), cat.size());
  const auto holds = names_of(b.holds);
  const auto fails = names_of(b.fails);
  for (const auto& e : cat) {
    const auto t = to_table(e.group);
    std::vector<int> orders;
    int exp = 1;
    for (int x = 0; x < static_cast<int>(t.size()); ++x) {
      orders.push_back(oracle::order_of(t, x));
      exp = std::lcm(exp, orders.back());
    }
    const auto phi = std::count(orders.begin(), orders.end(), exp);
    const std::string& n = e.group.name();
    if (phi == 0) {
      EXPECT_FALSE(holds.count(n) || fails.count(n)) << n;
    } else {
      EXPECT_EQ(holds.count(n) == 1, (t.size() - 1) % phi == 0) << n;
    }
  }
}
