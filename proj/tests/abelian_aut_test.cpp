#include <gtest/gtest.h>

#include "lehmerlab/abelian_aut.hpp"
#include "oracles.hpp"

using namespace lehmerlab;
using namespace lehmerlab::abelian;

namespace {

BigInt aut_of(std::uint64_t p, std::vector<unsigned> partition) {
  return aut_order_primary(PrimaryComponent(p, std::move(partition)));
}

std::vector<int> moduli_of(std::uint64_t p, const std::vector<unsigned>& partition) {
  std::vector<int> out;
  for (unsigned e : partition) {
    int q = 1;
    for (unsigned i = 0; i < e; ++i) q *= static_cast<int>(p);
    out.push_back(q);
  }
  return out;
}

}  // namespace

TEST(Indices, Examples) {
  const std::vector<unsigned> part{1, 1, 2, 3, 3, 3};
  const std::vector<std::size_t> a{2, 2, 3, 6, 6, 6};
  const std::vector<std::size_t> b{1, 1, 3, 4, 4, 4};
  for (std::size_t r = 1; r <= part.size(); ++r) {
    EXPECT_EQ(a_index(part, r), a[r - 1]) << r;
    EXPECT_EQ(b_index(part, r), b[r - 1]) << r;
  }
  EXPECT_THROW(a_index(part, 0), std::out_of_range);
  EXPECT_THROW(b_index(part, 7), std::out_of_range);
  const std::vector<unsigned> unsorted{2, 1};
  EXPECT_THROW(a_index(unsorted, 1), std::invalid_argument);
  const std::vector<unsigned> with_zero{0, 1};
  EXPECT_THROW(b_index(with_zero, 1), std::invalid_argument);
}

TEST(AutPrimary, Examples) {
  EXPECT_EQ(aut_of(2, {1}), 1);
  EXPECT_EQ(aut_of(2, {2}), 2);
  EXPECT_EQ(aut_of(2, {1, 1}), 6);
  EXPECT_EQ(aut_of(2, {1, 2}), 8);
  EXPECT_EQ(aut_of(2, {1, 1, 1}), 168);
  EXPECT_EQ(aut_of(3, {1, 1}), 48);
  EXPECT_EQ(aut_of(3, {2}), 6);
  EXPECT_EQ(aut_of(5, {3}), 100);
}

TEST(AutPrimary, MatchesBasisImageOracle) {
  struct Case {
    std::uint64_t p;
    std::vector<unsigned> partition;
  };
  const std::vector<Case> cases{{2, {1}},       {2, {2}},       {2, {3}},       {2, {4}},    {2, {1, 1}},
                                {2, {1, 2}},    {2, {1, 3}},    {2, {2, 2}},    {2, {1, 1, 1}}, {2, {1, 1, 2}},
                                {2, {1, 1, 1, 1}}, {3, {1}},    {3, {2}},       {3, {3}},    {3, {1, 1}},
                                {3, {1, 2}},    {3, {1, 1, 1}}, {5, {1, 1}},    {5, {2}},    {7, {1, 1}}};
  for (const auto& c : cases) {
    const auto expected = oracle::aut_count_basis_images(moduli_of(c.p, c.partition));
    EXPECT_EQ(aut_of(c.p, c.partition), to_big(expected)) << c.p << " rank " << c.partition.size();
  }
}

TEST(AutPrimary, SmallCasesMatchBijectionOracle) {
  EXPECT_EQ(aut_of(2, {1, 1}), to_big(oracle::aut_count_all_bijections(oracle::product_of_cyclic({2, 2}))));
  EXPECT_EQ(aut_of(2, {1, 2}), to_big(oracle::aut_count_all_bijections(oracle::product_of_cyclic({2, 4}))));
  EXPECT_EQ(aut_of(2, {1, 1, 1}), to_big(oracle::aut_count_all_bijections(oracle::product_of_cyclic({2, 2, 2}))));
  EXPECT_EQ(aut_of(3, {1, 1}), to_big(oracle::aut_count_all_bijections(oracle::product_of_cyclic({3, 3}))));
}

TEST(AutPrimary, ElementaryAbelianIsGeneralLinear) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned k = 1; k <= 4; ++k) {
      EXPECT_EQ(aut_of(p, std::vector<unsigned>(k, 1)), to_big(oracle::gl_order(p, k))) << p << "^" << k;
    }
  }
}

TEST(AutPrimary, CyclicPrimePower) {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    std::uint64_t pe = p;
    for (unsigned e = 1; pe <= 100000; ++e, pe *= p) {
      EXPECT_EQ(aut_of(p, {e}), to_big(oracle::phi_gcd_count(pe))) << p << "^" << e;
    }
  }
}

TEST(AutPrimary, PrimeDividesAutUnlessPartitionIsOne) {
  std::size_t checked = 0;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    std::uint64_t pe = p;
    for (unsigned e = 1; pe <= 4096; ++e, pe *= p) {
      for (const auto& part : partitions_of(e)) {
        const BigInt aut = aut_of(p, part);
        const bool divisible = aut % static_cast<unsigned long>(p) == 0;
        EXPECT_EQ(divisible, part != std::vector<unsigned>{1}) << p << "^" << e;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(AutPrimary, ConstantPartitionIsGeneralLinearTimesPower) {
  // Aut(Z_{p^n}^k) has order p^{(n-1)k^2} |GL(k, p)|.
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (unsigned n = 1; n <= 4; ++n) {
        BigInt expected = to_big(oracle::gl_order(p, k));
        for (unsigned i = 0; i < (n - 1) * k * k; ++i) expected *= static_cast<unsigned long>(p);
        EXPECT_EQ(aut_of(p, std::vector<unsigned>(k, n)), expected) << p << " " << k << " " << n;
      }
    }
  }
}

TEST(AutOrder, CyclicMatchesTotient) {
  const auto phi = oracle::phi_mobius_table(10000);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    ASSERT_EQ(aut_order(decompose_cyclic(n)), to_big(static_cast<std::uint64_t>(phi[n]))) << n;
  }
}

TEST(AutOrder, MultiplicativeOverPrimes) {
  const auto spec = parse_abelian_spec("2^1,1;3^1,1");
  EXPECT_EQ(aut_order(spec), 6 * 48);
  EXPECT_EQ(group_order(spec), 36);
  EXPECT_EQ(aut_order(AbelianSpec{}), 1);
  EXPECT_EQ(group_order(AbelianSpec{}), 1);
}

TEST(Condition1, AbelianSliceToTenThousand) {
  std::size_t groups = 0;
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    for (const auto& spec : abelian_groups_of_order(n)) {
      const bool expected = spec.is_cyclic() && oracle::is_prime_trial(n);
      ASSERT_EQ(satisfies_condition1(spec), expected) << to_spec_string(spec);
      ++groups;
    }
  }
  EXPECT_GT(groups, 10000u);
  EXPECT_THROW(satisfies_condition1(AbelianSpec{}), std::domain_error);
}

TEST(Enumeration, PartitionsAndGroupCounts) {
  EXPECT_EQ(partitions_of(4), (std::vector<std::vector<unsigned>>{{1, 1, 1, 1}, {1, 1, 2}, {1, 3}, {2, 2}, {4}}));
  const std::vector<std::size_t> partition_counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (unsigned n = 1; n < partition_counts.size(); ++n) EXPECT_EQ(partitions_of(n).size(), partition_counts[n]);
  EXPECT_EQ(abelian_groups_of_order(1).size(), 1u);
  EXPECT_EQ(abelian_groups_of_order(16).size(), 5u);
  EXPECT_EQ(abelian_groups_of_order(72).size(), 6u);
  EXPECT_EQ(abelian_groups_of_order(97).size(), 1u);
}

TEST(Parse, RoundTrip) {
  for (const char* text : {"2^1", "2^1,2", "2^1,1,3;3^2;5^1", "1"}) {
    const auto spec = parse_abelian_spec(text);
    EXPECT_EQ(parse_abelian_spec(to_spec_string(spec)), spec) << text;
  }
  EXPECT_EQ(parse_abelian_spec(" 3^2 ; 2^2,1 "), parse_abelian_spec("2^1,2;3^2"));
  EXPECT_TRUE(parse_abelian_spec("").is_trivial());
  EXPECT_EQ(display_name(parse_abelian_spec("2^2;3^1")), "Z_12");
  EXPECT_EQ(display_name(parse_abelian_spec("2^1,1;3^1")), "Z_2^2 x Z_3");
  EXPECT_EQ(display_name(parse_abelian_spec("2^1,2")), "Z_2 x Z_4");
}

TEST(Parse, Errors) {
  for (const char* text : {"4^1", "2^0", "2^", "^1", "2^1;2^2", "2^a", "2^1,,2", "x"}) {
    EXPECT_THROW(parse_abelian_spec(text), std::invalid_argument) << text;
  }
  EXPECT_THROW(PrimaryComponent(6, {1}), std::invalid_argument);
  EXPECT_THROW(PrimaryComponent(2, {}), std::invalid_argument);
}
