#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mckay/chars_local.hpp"
#include "mckay/grouporacle.hpp"

using namespace mckay;

namespace {

const Partition kExample{7, 7, 5, 4, 3, 2, 2};

MultiPartition level_of(int p, int k, std::map<std::int64_t, Partition> entries) {
  return MultiPartition{p, k, std::move(entries)};
}

}  // namespace

TEST(LocalLabel, Examples) {
  const LocalLabel l21 = local_label(Partition{2, 1}, 3);
  EXPECT_TRUE(l21.core().empty());
  EXPECT_EQ(l21.level(1).entries, (std::map<std::int64_t, Partition>{{1, Partition{1}}}));
  EXPECT_EQ(l21.level(1).positions(), 3);

  for (int n = 1; n < 5; ++n) {
    const LocalLabel row = local_label(Partition(std::vector<int>{n}), 5);
    EXPECT_EQ(row.depth(), 1);
    EXPECT_EQ(row.core(), Partition(std::vector<int>{n}));
  }

  // 30 = 1*3 + 1*27: level 1 weight 1, level 3 weight 1.
  ASSERT_FALSE(is_p_prime_degree(kExample, 3));
  EXPECT_THROW(local_label(kExample, 3), DomainError);
  EXPECT_THROW(local_label(Partition{3, 1, 1}, 3), DomainError);
}

TEST(LocalLabel, TowerOfAPPrimePartitionFollowsQuotientCores) {
  // 24 = 2*3 + 2*9 in base 3, so every label has weight 2 on both levels.
  int seen = 0;
  for (const Partition& lambda : partitions_of(24)) {
    if (!is_p_prime_degree(lambda, 3)) continue;
    const LocalLabel label = local_label(lambda, 3);
    const auto quotient = p_quotient(lambda, 3);
    for (int g = 0; g < 3; ++g) ASSERT_EQ(label.level(1).at(g), p_core(quotient[static_cast<std::size_t>(g)], 3));
    ASSERT_EQ(label.level(1).weight(), 2);
    ASSERT_EQ(label.level(2).weight(), 2);
    ++seen;
  }
  EXPECT_GT(seen, 0);
}

TEST(MultiPartition, StarAndSymmetry) {
  const MultiPartition mp = level_of(3, 2, {{0, Partition{2}}, {8, Partition{1, 1}}, {4, Partition{2, 1}}});
  EXPECT_TRUE(mp.is_symmetric());
  EXPECT_EQ(mp.weight(), 7);
  const MultiPartition skew = level_of(3, 1, {{0, Partition{2}}});
  EXPECT_EQ(skew.star().entries, (std::map<std::int64_t, Partition>{{2, Partition{1, 1}}}));
  EXPECT_FALSE(skew.is_symmetric());
}

TEST(LocalDegree, Examples) {
  // Y = N_{S_3}(C_3) = S_3; the label sits on its 2-dimensional character.
  EXPECT_EQ(local_degree(local_label(Partition{2, 1}, 3)), 2);
  EXPECT_EQ(local_degree(local_label(Partition{3}, 3)), 1);
  EXPECT_EQ(local_degree(local_label(Partition{7}, 7)), 1);
  // Self-paired box at level k: product of k copies of p - 1.
  for (int p : {3, 5}) {
    for (int k = 1; k <= 2; ++k) {
      const LocalLabel label = label_from_levels(p, Partition{}, {level_of(p, k, {{self_paired_index(k, p), Partition{1}}})});
      EXPECT_EQ(local_degree(label), ipow(p - 1, k));
    }
  }
}

TEST(LocalDegree, PrimeToP) {
  for (int p : {3, 5, 7}) {
    for (int n = 1; n <= 24; ++n) {
      for (const LocalLabel& label : all_local_labels(n, p)) ASSERT_NE(local_degree(label) % p, 0);
    }
  }
}

TEST(LocalDegree, MatchesNormalizerCharacterTable) {
  // The multiset of label degrees equals the multiset of p'-degrees of N_{S_n}(P).
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {5, 3}, {6, 3}, {7, 3}, {5, 5}, {6, 5}, {7, 5}, {7, 7}}) {
    const ExactTable table = character_table(build_normalizer(n, p, false));
    std::multiset<std::int64_t> from_table;
    for (std::int64_t d : table.degrees) {
      if (d % p != 0) from_table.insert(d);
    }
    std::multiset<std::int64_t> from_labels;
    for (const LocalLabel& label : all_local_labels(n, p)) from_labels.insert(static_cast<std::int64_t>(local_degree(label)));
    EXPECT_EQ(from_labels, from_table) << "n=" << n << " p=" << p;
  }
}

TEST(IsLocalSymmetric, Examples) {
  EXPECT_TRUE(is_local_symmetric(local_label(Partition{2, 1}, 3)));
  EXPECT_FALSE(is_local_symmetric(local_label(Partition{2}, 3)));
  EXPECT_TRUE(is_local_symmetric(local_label(Partition{1}, 3)));
  EXPECT_TRUE(is_local_symmetric(LocalLabel{core_tower(kExample, 3)}));
}

TEST(Counting, GeneratingFunctionsMatchEnumeration) {
  for (int p : {3, 5}) {
    for (int k = 1; k <= 2; ++k) {
      for (int w = 0; w < p && (k == 1 || w <= 2); ++w) {
        ASSERT_EQ(multipartition_count(ipow(p, k), w), multipartitions(p, k, w).size()) << p << k << w;
        ASSERT_EQ(symmetric_multipartition_count(ipow(p, k), w), symmetric_multipartitions(p, k, w).size());
        for (const MultiPartition& mp : symmetric_multipartitions(p, k, w)) ASSERT_TRUE(mp.is_symmetric());
      }
    }
  }
  EXPECT_EQ(multipartition_count(3, 2), 9);
  EXPECT_EQ(symmetric_multipartition_count(3, 2), 1);
}

TEST(Counting, BijectionOntoLocalLabels) {
  for (int p : {3, 5, 7}) {
    for (int n = 1; n <= 24; ++n) {
      std::set<std::map<std::pair<int, std::int64_t>, Partition>> images;
      std::size_t labels = 0;
      for (const Partition& lambda : partitions_of(n)) {
        if (!is_p_prime_degree(lambda, p)) continue;
        const LocalLabel label = local_label(lambda, p);
        ASSERT_EQ(is_local_symmetric(label), is_symmetric(lambda)) << lambda.to_string();
        ASSERT_EQ(tower_to_partition(label.tower), lambda);
        images.insert(label.tower.entries);
        ++labels;
      }
      ASSERT_EQ(images.size(), labels);
      std::set<std::map<std::pair<int, std::int64_t>, Partition>> enumerated;
      for (const LocalLabel& label : all_local_labels(n, p)) enumerated.insert(label.tower.entries);
      ASSERT_EQ(images, enumerated) << "n=" << n << " p=" << p;

      BigInt expected = partition_counts(padic_digits(n, p)[0])[static_cast<std::size_t>(padic_digits(n, p)[0])];
      const auto digits = padic_digits(n, p);
      for (std::size_t k = 1; k < digits.size(); ++k) expected *= multipartition_count(ipow(p, static_cast<int>(k)), digits[k]);
      ASSERT_EQ(BigInt(labels), expected);

      std::size_t symmetric = 0;
      for (const LocalLabel& label : all_local_labels(n, p)) symmetric += is_local_symmetric(label) ? 1 : 0;
      ASSERT_EQ(symmetric, symmetric_local_labels(n, p).size());
    }
  }
}

TEST(EpsLocal, Examples) {
  const LocalLabel l21 = local_label(Partition{2, 1}, 3);
  // Closed form taken verbatim: (-1)^(1*1*1) * eps((1), sigma).
  EXPECT_EQ(eps_local(l21, NavarroAut::sigma(3)), -1);
  for (SignClass c : {SignClass::Id}) {
    for (int p : {3, 5, 7}) {
      for (int n = p; n <= 16; ++n) {
        for (const LocalLabel& label : symmetric_local_labels(n, p)) EXPECT_EQ(eps_local(label, NavarroAut::of_class(p, c)), 1);
      }
    }
  }
  // Purely regular level-1 labels of weight 2.
  const LocalLabel reg3 = label_from_levels(3, Partition{}, {level_of(3, 1, {{0, Partition{1}}, {2, Partition{1}}})});
  EXPECT_EQ(eps_local(reg3, NavarroAut::sigma(3)), -1);
  const LocalLabel reg5 = label_from_levels(5, Partition{}, {level_of(5, 1, {{0, Partition{1}}, {4, Partition{1}}})});
  EXPECT_EQ(eps_local(reg5, NavarroAut::sigma(5)), 1);
  EXPECT_THROW(eps_local(local_label(Partition{3}, 3), NavarroAut::sigma(3)), DomainError);
}

TEST(EpsLocalOracle, Examples) {
  EXPECT_EQ(eps_local_oracle(local_label(Partition{2, 1}, 3), NavarroAut::sigma(3)), 1);
  const LocalLabel singular = label_from_levels(5, Partition{}, {level_of(5, 1, {{2, Partition{2, 1}}})});
  EXPECT_EQ(eps_local_oracle(singular, NavarroAut::identity(5)), 1);
  // Regular level of weight 2 with p = 1 mod 4: the extension exponent is even.
  const LocalLabel reg5 = label_from_levels(5, Partition{}, {level_of(5, 1, {{1, Partition{1}}, {3, Partition{1}}})});
  EXPECT_EQ(eps_local_oracle(reg5, NavarroAut::sigma(5)), 1);
  EXPECT_EQ(regular_extension_sign(5, NavarroAut::sigma(5)), 1);
  EXPECT_EQ(regular_extension_sign(3, NavarroAut::sigma(3)), -1);
}

TEST(SplitDifference, SingularLevelValue) {
  // Level 1, entry (1) at p = 3: i^(1*1*1) sqrt(3) times the value sqrt(1).
  const LocalSplitDifference diff = split_difference(local_label(Partition{2, 1}, 3));
  ASSERT_EQ(diff.levels.size(), 1U);
  ASSERT_TRUE(diff.levels[0].singular.has_value());
  EXPECT_EQ(*diff.levels[0].singular, QuadValue(1, 3));
  EXPECT_EQ(diff.levels[0].regular_weight, 0);
  EXPECT_EQ(diff.core_value, QuadValue(0, 1));
}

TEST(EpsLocal, HomomorphicInF) {
  for (int p : {3, 5, 7}) {
    for (int n = p; n <= 18; ++n) {
      for (const LocalLabel& label : symmetric_local_labels(n, p)) {
        for (SignClass a : kAllSignClasses) {
          for (SignClass b : kAllSignClasses) {
            const NavarroAut f = NavarroAut::of_class(p, a, 8);
            const NavarroAut g = NavarroAut::of_class(p, b, 8);
            ASSERT_EQ(eps_local(label, compose(f, g)), eps_local(label, f) * eps_local(label, g));
            const auto fg = eps_local_oracle(label, compose(f, g));
            const auto fo = eps_local_oracle(label, f);
            const auto go = eps_local_oracle(label, g);
            ASSERT_TRUE(fg && fo && go);
            ASSERT_EQ(*fg, *fo * *go);
          }
        }
      }
    }
  }
}

TEST(EpsLocal, ClosedFormAgreesWithOracleOutsideSqrtPConvention) {
  for (int p : {3, 5, 7}) {
    for (int n = p; n <= 24; ++n) {
      for (SignClass c : kAllSignClasses) {
        const NavarroAut f = NavarroAut::of_class(p, c, factorial_valuation(n, p) + 1);
        if (p % 4 == 3 && f.e % 2 == 1) continue;
        for (const LocalLabel& label : symmetric_local_labels(n, p)) {
          const auto oracle = eps_local_oracle(label, f);
          ASSERT_TRUE(oracle.has_value());
          ASSERT_EQ(eps_local(label, f), *oracle);
        }
      }
    }
  }
}

TEST(EpsLocal, SignTransportsThroughTheBijection) {
  for (int p : {3, 5, 7}) {
    for (int n = p; n <= 24; ++n) {
      for (SignClass c : kAllSignClasses) {
        const NavarroAut f = NavarroAut::of_class(p, c, factorial_valuation(n, p) + 1);
        for (const Partition& lambda : p_prime_symmetric_labels(n, p)) {
          const auto local = eps_local_oracle(local_label(lambda, p), f);
          ASSERT_TRUE(local.has_value());
          ASSERT_EQ(*local, eps_global_direct(lambda, f)) << lambda.to_string() << " p=" << p << " " << to_string(c);
        }
      }
    }
  }
}

TEST(Diffcar, IdentityForSmallCases) {
  EXPECT_TRUE(diffcar_identity_check(3, 1));
  EXPECT_TRUE(diffcar_identity_check(5, 2));
  EXPECT_TRUE(diffcar_identity_check(7, 3));
  for (int p : {3, 5, 7}) {
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(diffcar_identity_check(p, k)) << p << " " << k;
  }
}
