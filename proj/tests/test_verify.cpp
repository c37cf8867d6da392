#include <gtest/gtest.h>

#include "mckay/verify.hpp"

using namespace mckay;

TEST(CountPPrime, Examples) {
  // A_3 is cyclic of order 3: one pair from (3), (1^3) and a split pair from (2,1).
  EXPECT_EQ(count_p_prime(3, 3, Side::Global), (PrimeCount{1, 1, 3}));
  EXPECT_EQ(count_p_prime(3, 3, Side::Local), (PrimeCount{1, 1, 3}));
  EXPECT_THROW(count_p_prime(2, 3, Side::Global), DomainError);
  EXPECT_THROW(count_p_prime(5, 4, Side::Local), DomainError);
}

TEST(CountPPrime, BothSidesAgree) {
  for (int p : {3, 5, 7}) {
    for (int n = p; n <= 24; ++n) {
      ASSERT_EQ(count_p_prime(n, p, Side::Global), count_p_prime(n, p, Side::Local)) << "n=" << n << " p=" << p;
    }
  }
}

TEST(FixedCounts, Examples) {
  const VerificationReport id = fixed_counts(3, 3, SignClass::Id);
  EXPECT_EQ(id.global.total, 3);
  EXPECT_EQ(id.global.fixed, 3);
  EXPECT_TRUE(id.ok());

  // Kappa moves the primitive cube roots of unity, so the split pair is swapped.
  const VerificationReport kappa = fixed_counts(3, 3, SignClass::Kappa);
  EXPECT_EQ(kappa.global.fixed, 1);
  EXPECT_EQ(kappa.local.fixed, 1);
  EXPECT_TRUE(kappa.ok());

  // Under sigma both sides fix everything, yet the verbatim closed forms
  // report a sqrt(3) convention defect that does not fail the run.
  const VerificationReport sigma = fixed_counts(3, 3, SignClass::Sigma);
  EXPECT_EQ(sigma.global.fixed, 3);
  EXPECT_EQ(sigma.local.fixed, 3);
  EXPECT_TRUE(sigma.ok());
  ASSERT_FALSE(sigma.defects.empty());
  for (const Defect& d : sigma.defects) {
    EXPECT_FALSE(d.fatal);
    EXPECT_NE(d.path.find("sqrt-p-convention"), std::string::npos);
  }
  EXPECT_THROW(fixed_counts(3, 5, NavarroAut::sigma(3)), DomainError);
}

TEST(FixedCounts, DefectsOnlyWhereConventionMatters) {
  for (int p : {3, 5, 7}) {
    for (int n = p; n <= 20; ++n) {
      for (SignClass c : kAllSignClasses) {
        const VerificationReport rep = fixed_counts(n, p, c);
        ASSERT_TRUE(rep.ok()) << "n=" << n << " p=" << p << " " << to_string(c);
        const bool convention_matters = p % 4 == 3 && (c == SignClass::Sigma || c == SignClass::KappaSigma);
        if (!convention_matters) {
          ASSERT_TRUE(rep.defects.empty()) << "n=" << n << " p=" << p << " " << to_string(c);
        }
      }
    }
  }
}

TEST(Scan, SmallRange) {
  ScanOptions opts;
  opts.n_min = 3;
  opts.n_max = 10;
  opts.primes = {3};
  int streamed = 0;
  const auto reports = scan(opts, [&](const VerificationReport&) { ++streamed; });
  EXPECT_EQ(reports.size(), 32U);
  EXPECT_EQ(streamed, 32);
  EXPECT_TRUE(scan_ok(reports));
  EXPECT_EQ(reports.front().sign_class, SignClass::Id);
  EXPECT_EQ(reports.back().n, 10);
}

TEST(Scan, EmptyRangeAndBudget) {
  ScanOptions empty;
  empty.n_min = 3;
  empty.n_max = 4;
  empty.primes = {5};
  EXPECT_TRUE(scan(empty).empty());

  ScanOptions tight;
  tight.n_max = 30;
  tight.primes = {3};
  tight.budget_ms = 0;
  EXPECT_THROW(scan(tight), BudgetError);
}

TEST(Describe, RendersLocalLabels) {
  EXPECT_EQ(describe(local_label(Partition{2, 1}, 3)), "L1[1]=1");
  EXPECT_EQ(describe(LocalLabel{}), "empty");
}
