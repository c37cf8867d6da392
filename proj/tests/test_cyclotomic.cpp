#include <gtest/gtest.h>

#include <random>

#include "mckay/cyclotomic.hpp"

using namespace mckay;

namespace {

CycloElt random_element(int conductor, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<BigInt> dense(static_cast<std::size_t>(conductor));
  for (auto& c : dense) c = coeff(rng);
  return CycloElt::from_powers(conductor, dense);
}

}  // namespace

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXToTheMMinusOne) {
  for (int m = 1; m <= 120; ++m) {
    std::vector<BigInt> product{1};
    for (int d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      const auto& phi = cyclotomic_polynomial(d);
      std::vector<BigInt> next(product.size() + phi.size() - 1, 0);
      for (std::size_t i = 0; i < product.size(); ++i) {
        for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += product[i] * phi[j];
      }
      product = std::move(next);
    }
    std::vector<BigInt> expected(static_cast<std::size_t>(m) + 1, 0);
    expected[0] = -1;
    expected[static_cast<std::size_t>(m)] = 1;
    ASSERT_EQ(product, expected) << m;
    ASSERT_EQ(static_cast<int>(cyclotomic_polynomial(m).size()) - 1, euler_phi(m));
  }
}

TEST(RootOfUnity, Examples) {
  EXPECT_EQ(root_of_unity(4, 1) * root_of_unity(4, 1), CycloElt::integer(-1, 4));
  EXPECT_EQ(root_of_unity(3, 1) + root_of_unity(3, 2), CycloElt::integer(-1, 3));
  for (int m = 1; m <= 24; ++m) {
    for (int k = 0; k < m; ++k) ASSERT_EQ(root_of_unity(m, k).pow(static_cast<unsigned>(m)), CycloElt::integer(1, m));
  }
}

TEST(CycloElt, CrossConductorEquality) {
  EXPECT_EQ(root_of_unity(4, 1), root_of_unity(12, 3));
  EXPECT_EQ(CycloElt::integer(7, 1), CycloElt::integer(7, 15));
  EXPECT_FALSE(root_of_unity(3, 1) == root_of_unity(3, 2));
}

TEST(GaussSum, Examples) {
  EXPECT_EQ(gauss_sum(3) * gauss_sum(3), CycloElt::integer(-3, 12));
  EXPECT_EQ(gauss_sum(5) * gauss_sum(5), CycloElt::integer(5, 20));
  EXPECT_EQ(gauss_sum(7) * gauss_sum(7), CycloElt::integer(-7, 28));
}

TEST(GaussSum, SquareForAllSmallPrimes) {
  for (std::int64_t q = 3; q <= 23; ++q) {
    if (!is_prime(q)) continue;
    const std::int64_t expected = ((q - 1) / 2) % 2 == 0 ? q : -q;
    ASSERT_EQ(gauss_sum(q) * gauss_sum(q), CycloElt::integer(expected, static_cast<int>(4 * q))) << q;
  }
}

TEST(SqrtEmbed, Examples) {
  EXPECT_EQ(sqrt_embed(1), CycloElt::integer(1, 4));
  const CycloElt r15 = sqrt_embed(15);
  EXPECT_EQ(r15.conductor(), 60);
  EXPECT_EQ(r15 * r15, CycloElt::integer(15, 60));
  EXPECT_EQ(sqrt_embed(9), CycloElt::integer(3, 4));
  for (std::int64_t m = 1; m <= 105; m += 2) ASSERT_EQ(sqrt_embed(m) * sqrt_embed(m), CycloElt::integer(m, 4)) << m;
}

TEST(ApplyAut, Examples) {
  EXPECT_EQ(apply_aut(root_of_unity(3, 1), NavarroAut::sigma(3)), root_of_unity(3, 1));
  EXPECT_EQ(apply_aut(root_of_unity(4, 1), NavarroAut::sigma(3)), root_of_unity(4, 3));
  EXPECT_EQ(apply_aut(gauss_sum(5), NavarroAut(5, 0, 2)), -gauss_sum(5));
  std::mt19937 rng(1);
  const CycloElt x = random_element(36, rng);
  EXPECT_EQ(apply_aut(x, NavarroAut::identity(3)), x);
}

TEST(ApplyAut, RingHomomorphismAndComposition) {
  std::mt19937 rng(11);
  for (int conductor : {12, 15, 20, 28, 36, 45}) {
    for (std::int64_t p : {3, 5, 7}) {
      for (int trial = 0; trial < 5; ++trial) {
        const CycloElt a = random_element(conductor, rng);
        const CycloElt b = random_element(conductor, rng);
        std::int64_t s = 1 + static_cast<std::int64_t>(rng() % 50);
        if (s % p == 0) ++s;
        const NavarroAut f(p, static_cast<std::int64_t>(rng() % 4), s, 4);
        const NavarroAut g(p, static_cast<std::int64_t>(rng() % 4), s + p, 4);
        ASSERT_EQ(apply_aut(a + b, f), apply_aut(a, f) + apply_aut(b, f));
        ASSERT_EQ(apply_aut(a * b, f), apply_aut(a, f) * apply_aut(b, f));
        ASSERT_EQ(apply_aut(apply_aut(a, g), f), apply_aut(a, compose(f, g)));
      }
    }
  }
}

TEST(QuadSignOracle, Examples) {
  EXPECT_EQ(quad_sign_oracle(QuadValue(0, 1), NavarroAut::sigma(3)), 1);
  EXPECT_EQ(quad_sign_oracle(QuadValue(1, 3), NavarroAut::sigma(3)), 1);
  EXPECT_EQ(quad_sign_oracle_full(QuadValue(1, 3), NavarroAut::sigma(3)), 1);
  EXPECT_EQ(quad_sign_oracle(QuadValue(0, 5), NavarroAut(5, 0, 2)), -1);
}

TEST(QuadSignOracle, AgreesWithClosedFormOnAllSmallValues) {
  for (std::int64_t p : {3, 5, 7}) {
    for (SignClass c : kAllSignClasses) {
      const NavarroAut f = NavarroAut::of_class(p, c, 4);
      for (std::int64_t m = 1; m <= 105; m += 2) {
        for (int a = 0; a < 4; ++a) {
          const QuadValue v(a, m);
          const int oracle = quad_sign_oracle(v, f);
          ASSERT_EQ(oracle, eps_quad(v, f)) << "p=" << p << " " << to_string(c) << " m=" << m << " a=" << a;
          ASSERT_EQ(oracle, quad_sign_oracle_full(v, f));
        }
      }
    }
  }
}

TEST(QuadSignOracle, SqrtSignAgreesAcrossResidueClasses) {
  // A generating set of automorphisms: every residue s mod p^2 and both Frobenius parities.
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t e = 0; e <= 1; ++e) {
      for (std::int64_t s = 1; s < p * p; ++s) {
        if (s % p == 0) continue;
        const NavarroAut f(p, e, s, 2);
        for (std::int64_t m = 1; m <= 105; m += 2) {
          if (valuation(m, p) > 2) continue;
          ASSERT_EQ(galois_sqrt_sign(m, f), quad_sign_oracle(QuadValue(0, m), f)) << p << " " << e << " " << s << " " << m;
        }
      }
    }
  }
}
