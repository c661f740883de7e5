#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "wedderburn/ff.hpp"

using namespace wedderburn::ff;

namespace {

Polynomial poly(std::int64_t ell, std::vector<std::int64_t> c) { return Polynomial(ell, std::move(c)); }

// All monic polynomials of the given degree, by counting in base l.
std::vector<Polynomial> monic_of_degree(std::int64_t ell, int degree) {
  std::vector<Polynomial> out;
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  while (true) {
    out.emplace_back(ell, c);
    int i = 0;
    while (i < degree && ++c[static_cast<std::size_t>(i)] == ell) c[static_cast<std::size_t>(i++)] = 0;
    if (i == degree) break;
  }
  return out;
}

// Irreducibility by trial division with every monic polynomial of degree <= deg/2.
bool brute_irreducible(const Polynomial& f) {
  if (f.degree() < 1) return false;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    for (const auto& g : monic_of_degree(f.characteristic(), d)) {
      if (poly_mod(f, g).is_zero()) return false;
    }
  }
  return true;
}

bool brute_has_square_factor(const Polynomial& f) {
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    for (const auto& g : monic_of_degree(f.characteristic(), d)) {
      if (poly_mod(f, g * g).is_zero()) return true;
    }
  }
  return false;
}

Polynomial random_monic(std::int64_t ell, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coeff(0, ell - 1);
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coeff(rng);
  c.back() = 1;
  return Polynomial(ell, c);
}

}  // namespace

TEST(PrimeField, Arithmetic) {
  const PrimeFieldElement a(3, 7);
  const PrimeFieldElement b(5, 7);
  EXPECT_EQ((a + b).residue(), 1);
  EXPECT_EQ((a - b).residue(), 5);
  EXPECT_EQ((a * b).residue(), 1);
  EXPECT_EQ(a.inverse(), b);
  EXPECT_EQ(a.pow(6).residue(), 1);
  EXPECT_THROW(PrimeFieldElement(0, 7).inverse(), std::invalid_argument);
}

TEST(Polynomial, MulExamples) {
  EXPECT_EQ(poly_mul(poly(2, {1, 1}), poly(2, {1, 1})), poly(2, {1, 0, 1}));
  const auto p = poly(5, {3, 0, 2, 1});
  EXPECT_EQ(poly_mul(p, Polynomial::constant(5, 1)), p);
  EXPECT_EQ(poly_mul(poly(5, {4, 1}), poly(5, {1, 1, 1})), Polynomial::binomial(5, 3, 1));
}

TEST(Polynomial, GcdExamples) {
  EXPECT_EQ(poly_gcd(Polynomial::binomial(7, 2, 1), poly(7, {6, 1})), poly(7, {6, 1}));
  const auto p = poly(7, {1, 2, 3});
  EXPECT_EQ(poly_gcd(p, Polynomial(7)), p.monic());
  EXPECT_EQ(poly_gcd(Polynomial::binomial(5, 3, 1), Polynomial::binomial(5, 2, 1)), poly(5, {4, 1}));
  EXPECT_THROW(poly_gcd(Polynomial(5), Polynomial(5)), std::invalid_argument);
}

TEST(Polynomial, DivModIdentity) {
  std::mt19937_64 rng(11);
  for (std::int64_t ell : {2, 3, 5, 7, 13}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_monic(ell, 3 + trial % 7, rng);
      const auto b = random_monic(ell, 1 + trial % 4, rng);
      const auto qr = poly_divmod(a, b);
      EXPECT_EQ(qr.quotient * b + qr.remainder, a);
      EXPECT_LT(qr.remainder.degree(), b.degree());
    }
  }
}

TEST(Polynomial, PowmodExamples) {
  const auto f = poly(5, {1, 0, 2, 1});
  EXPECT_EQ(poly_powmod(Polynomial::x(5), 5, f), poly_mod(Polynomial::binomial(5, 5, 0), f));
  EXPECT_TRUE(poly_powmod(poly(5, {2, 3}), 0, f).is_one());
  // X^3 - X - 1 over F_2 is irreducible, so X^7 = 1 and X^8 = X
  const auto g = poly(2, {1, 1, 0, 1});
  EXPECT_EQ(poly_powmod(Polynomial::x(2), 8, g), Polynomial::x(2));
}

TEST(Polynomial, PowmodMatchesRepeatedMultiplication) {
  std::mt19937_64 rng(5);
  for (std::int64_t ell : {2, 3, 5, 7, 13}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto mod = random_monic(ell, 2 + trial % 5, rng);
      const auto base = random_monic(ell, 1 + trial % 6, rng);
      auto acc = Polynomial::constant(ell, 1);
      for (std::uint64_t e = 0; e < 40; ++e) {
        EXPECT_EQ(poly_powmod(base, e, mod), poly_mod(acc, mod));
        acc = poly_mod(acc * base, mod);
      }
    }
  }
}

TEST(Polynomial, FactorExamples) {
  const auto factors = factor_squarefree(Polynomial::binomial(2, 3, 1));
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0], poly(2, {1, 1}));
  EXPECT_EQ(factors[1], poly(2, {1, 1, 1}));

  std::mt19937_64 rng(1);
  EXPECT_EQ(factor_degrees(Polynomial::binomial(2, 5, 1), rng), (std::vector<int>{1, 4}));
  EXPECT_EQ(factor_degrees(Polynomial::binomial(2, 7, 1), rng), (std::vector<int>{1, 3, 3}));
}

TEST(Polynomial, FactorRejectsNonSquarefree) {
  EXPECT_THROW(factor_squarefree(poly(3, {1, 2, 1})), std::invalid_argument);
  EXPECT_THROW(factor_squarefree(Polynomial::constant(3, 2)), std::invalid_argument);
}

// X^n - 1 with l not dividing n splits into phi(e)/ord_e(l) factors of degree ord_e(l) for each e | n.
TEST(Polynomial, CyclotomicDegreePattern) {
  std::mt19937_64 rng(3);
  for (std::int64_t ell : {2, 3, 5, 7, 13}) {
    for (std::int64_t n = 1; n <= 40; ++n) {
      if (n % ell == 0) continue;
      std::vector<int> expected;
      for (std::int64_t e = 1; e <= n; ++e) {
        if (n % e != 0) continue;
        std::int64_t phi = 0;
        for (std::int64_t k = 1; k <= e; ++k) phi += std::gcd(k, e) == 1;
        std::int64_t ord = 1;
        std::int64_t y = ell % e;
        while (e > 1 && y != 1) {
          y = y * ell % e;
          ++ord;
        }
        for (std::int64_t c = 0; c < phi / ord; ++c) expected.push_back(static_cast<int>(ord));
      }
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(factor_degrees(Polynomial::binomial(ell, n, 1), rng), expected) << "l=" << ell << " n=" << n;
    }
  }
}

TEST(Polynomial, RandomFactorizationProperty) {
  std::mt19937_64 gen(2024);
  for (std::int64_t ell : {2, 3, 5, 7, 13}) {
    const int max_degree = ell <= 3 ? 10 : (ell <= 7 ? 7 : 5);
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<int> deg(1, max_degree);
      const auto f = random_monic(ell, deg(gen), gen);
      if (!is_squarefree(f)) {
        EXPECT_TRUE(brute_has_square_factor(f)) << f.to_string();
        continue;
      }
      EXPECT_FALSE(brute_has_square_factor(f)) << f.to_string();
      std::mt19937_64 rng(static_cast<std::uint64_t>(trial));
      const auto factors = factor_squarefree(f, rng);
      auto product = Polynomial::constant(ell, 1);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        EXPECT_EQ(factors[i].leading(), 1);
        EXPECT_TRUE(brute_irreducible(factors[i])) << factors[i].to_string();
        for (std::size_t j = 0; j < i; ++j) EXPECT_NE(factors[i], factors[j]);
        product = product * factors[i];
      }
      EXPECT_EQ(product, f);
    }
  }
}

TEST(Polynomial, FactorizationIsSeedIndependent) {
  const auto f = Polynomial::binomial(13, 36, 2);
  std::mt19937_64 a(1);
  std::mt19937_64 b(99);
  EXPECT_EQ(factor_squarefree(f, a), factor_squarefree(f, b));
}
