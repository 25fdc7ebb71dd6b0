#include <gtest/gtest.h>

#include <stdexcept>

#include "support/families.hpp"
#include "support/oracles.hpp"
#include "symqe/oracle.hpp"
#include "symqe/qe_plus.hpp"
#include "symqe/qe_real.hpp"
#include "symqe/resultant.hpp"
#include "symqe/sturm.hpp"

using namespace symqe;
using symqe::testing::RandomRationals;

namespace {

using Quartic = std::array<Rational, 5>;

mpz_class ipow(long base, unsigned e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

// Newton-inequality family with (r, n - r) = (u + 1, v + 1).
mpz_class newton_g(long u, long v) {
  return 16 * ipow(u, 2) * ipow(u + 1, 4) * ipow(v + 1, 4) * ipow(u + v + 1, 2) *
         (u * u + 2 * u * u * u * v + u * u * v * v + 22 * u * u * v + 20 * u * v + 2 * u * u * u + u * u * u * u +
          20 * u * v * v - 8 * v * v);
}

mpz_class newton_h(long u, long v) {
  return 8 * mpz_class(u) * v * ipow(u + 1, 5) * ipow(v + 1, 5) * ipow(u + v, 3) * ipow(u + v + 1, 4);
}

Quartic random_quartic(RandomRationals& rng) {
  Quartic F;
  for (auto& c : F) c = rng.rational(6, 4);
  return F;
}

}  // namespace

TEST(ComputeDghk, DoubleRootQuartic) {
  const Quartic F{1, 0, -2, 0, 1};
  const auto d = compute_dghk(F);
  EXPECT_EQ(d.Delta, 256);
  EXPECT_EQ(d.G, 256);
  EXPECT_EQ(d.H, 0);
  EXPECT_EQ(d.K, 0);
}

TEST(ComputeDghk, NewtonFamilyAtFourVariables) {
  const SymmetricQuartic f = symqe::testing::newton_inequality(4);
  const auto d = compute_dghk(restriction(f, 2, 2).quartic_coeffs());
  EXPECT_EQ(d.G, 2248704);
  EXPECT_EQ(d.H, 5308416);
  EXPECT_EQ(d.K, 0);
}

TEST(ComputeDghk, NewtonFamilyMatchesFactoredForms) {
  for (long n = 2; n <= 20; ++n) {
    const SymmetricQuartic f = symqe::testing::newton_inequality(n);
    for (long r = 1; r <= n - 1; ++r) {
      const auto d = compute_dghk(restriction(f, r, n - r).quartic_coeffs());
      EXPECT_EQ(d.G, Rational(newton_g(r - 1, n - r - 1))) << n << "," << r;
      EXPECT_EQ(d.H, Rational(newton_h(r - 1, n - r - 1))) << n << "," << r;
      EXPECT_EQ(d.K, 0) << n << "," << r;
    }
  }
}

TEST(ComputeDghk, TwoBlockExtremalVanishes) {
  for (long n = 2; n <= 20; ++n) {
    const SymmetricQuartic h = symqe::testing::two_block_extremal(n);
    for (long r = 1; r <= n - 1; ++r) {
      const auto d = compute_dghk(restriction(h, r, n - r).quartic_coeffs());
      EXPECT_EQ(d.G, 0);
      EXPECT_EQ(d.H, 0);
      EXPECT_EQ(d.K, 0);
    }
  }
}

TEST(ComputeDghk, DegenerateLeadingAndConstantTerms) {
  RandomRationals rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational B = rng.rational(), C = rng.rational(), D = rng.rational();
    const auto d = compute_dghk(Quartic{0, B, C, D, 0});
    EXPECT_EQ(d.Delta, 9 * B * B * (C * C - 3 * B * D));
    EXPECT_EQ(d.G, -27 * B * B * B * B);
    EXPECT_EQ(d.K, B * B * D * D * (C * C - 4 * B * D));
  }
}

TEST(ComputeDghk, KVanishesOnDoubleRoot) {
  RandomRationals rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational rho = rng.rational();
    const Polynomial square{rho * rho, -2 * rho, 1};
    const Polynomial quad{rng.rational(), rng.rational(), Rational(rng.integer(1, 5))};
    const auto F = quartic_coefficients(square * quad);
    EXPECT_EQ(compute_dghk(F).K, 0);
  }
}

TEST(ComputeDghk, KMatchesEuclideanDiscriminant) {
  RandomRationals rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    Quartic F = random_quartic(rng);
    if (F[0] == 0) F[0] = 2;
    const Polynomial p = Polynomial::from_descending(F);
    EXPECT_EQ(compute_dghk(F).K, symqe::testing::euclidean_resultant(p, derivative(p)) / F[0]);
  }
}

TEST(QuarticNonnegReal, Examples) {
  EXPECT_TRUE(quartic_nonneg_real(Quartic{1, 0, 0, 0, 0}));
  EXPECT_FALSE(quartic_nonneg_real(Quartic{1, 0, -2, 0, 0}));
  EXPECT_EQ(compute_dghk(Quartic{1, 0, -2, 0, 0}).G, -512);
  EXPECT_TRUE(quartic_nonneg_real(Quartic{1, 0, 2, 0, 1}));
  EXPECT_TRUE(quartic_nonneg_real(Quartic{1, 0, -2, 0, 1}));
  EXPECT_THROW(quartic_nonneg_real(Quartic{0, 1, 0, 0, 1}), std::domain_error);
  EXPECT_THROW(quartic_nonneg_real(Quartic{-1, 0, 0, 0, 0}), std::domain_error);
}

TEST(QuarticNonnegReal, AgreesWithSturmOracle) {
  RandomRationals rng(44);
  for (int trial = 0; trial < 1000; ++trial) {
    Quartic F = random_quartic(rng);
    F[0] = rng.integer(1, 5);
    if (trial % 3 == 0) {
      // Force a double root so the boundary cases are exercised.
      const Rational rho = rng.fraction(rng.integer(-3, 3), rng.integer(1, 2));
      const Polynomial quad{rng.integer(-2, 4), rng.integer(-3, 3), F[0]};
      F = quartic_coefficients(Polynomial{rho * rho, -2 * rho, 1} * quad);
    }
    EXPECT_EQ(quartic_nonneg_real(F), nonneg_on(Polynomial::from_descending(F), Interval::real_line()));
  }
}

TEST(DecideReal, KnownNonnegativeFamilies) {
  for (long n = 2; n <= 50; ++n) {
    EXPECT_TRUE(decide_real(symqe::testing::newton_inequality(n)).decision) << n;
    EXPECT_TRUE(decide_real(symqe::testing::two_block_extremal(n)).decision) << n;
  }
  for (long n : {2L, 4L, 100L, 1000L}) EXPECT_TRUE(decide_real(SymmetricQuartic(n, 0, -2, 1, 1, 0)).decision);
}

TEST(DecideReal, StageOneWitness) {
  const auto v = decide_real(SymmetricQuartic(3, -1, 0, 0, 0, 0));
  EXPECT_FALSE(v.decision);
  EXPECT_EQ(v.witness->point, (std::vector<Rational>{1, 0, 0}));
}

TEST(DecideReal, OrthantTrueButRealFalse) {
  const SymmetricQuartic f(3, 0, 1, 0, 0, 0);  // P3 P1
  EXPECT_TRUE(decide_orthant(f).decision);
  const auto v = decide_real(f);
  EXPECT_FALSE(v.decision);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_LT(eval_point(f, v.witness->point), 0);
}

TEST(DecideReal, MatchesReferenceOnRandomInstances) {
  RandomRationals rng(45);
  for (int trial = 0; trial < 400; ++trial) {
    const SymmetricQuartic f = rng.integer_quartic(rng.integer(2, 7));
    const auto v = decide_real(f);
    EXPECT_EQ(v.decision, oracle::decide_real_reference(f));
    if (!v.decision) {
      EXPECT_LT(eval_point(f, v.witness->point), 0);
    }
  }
}

TEST(DecideReal, ReversedRestrictionHasSameNonnegativity) {
  RandomRationals rng(46);
  for (int trial = 0; trial < 300; ++trial) {
    const SymmetricQuartic f = rng.integer_quartic(rng.integer(2, 9));
    const long r = rng.integer(1, f.n() - 1);
    const RestrictionCoeffs fwd = restriction(f, r, f.n() - r);
    const RestrictionCoeffs bwd = restriction(f, f.n() - r, r);
    EXPECT_EQ(bwd.quartic_coeffs(), (Quartic{fwd.E, fwd.D, fwd.C, fwd.B, fwd.A}));
    if (fwd.quartic().is_zero()) continue;
    EXPECT_EQ(nonneg_on(fwd.quartic(), Interval::real_line()), nonneg_on(bwd.quartic(), Interval::real_line()));
  }
}

TEST(DecideReal, ParallelScanIsDeterministic) {
  RandomRationals rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const SymmetricQuartic f = rng.integer_quartic(rng.integer(2, 40));
    const auto serial = decide_real(f, {.trace = true});
    const auto parallel = decide_real(f, {.trace = true, .parallel = true, .threads = 4});
    EXPECT_EQ(serial.decision, parallel.decision);
    EXPECT_EQ(serial.trace.size(), parallel.trace.size());
    if (!serial.decision) {
      EXPECT_EQ(serial.witness->point, parallel.witness->point);
    }
  }
}
