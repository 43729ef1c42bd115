#include <gtest/gtest.h>

#include <vector>

#include "bifree/errors.hpp"
#include "bifree/pair_oracle.hpp"
#include "bifree/partial_r.hpp"
#include "bifree/random.hpp"

using bifree::PartialRTable;
using bifree::Rational;
using bifree::TwoBandsTable;

namespace {

TwoBandsTable delta_pair(std::size_t mm, std::size_t nn) {
  TwoBandsTable t(mm, nn);
  t(0, 0) = 1;
  return t;
}

bool only_linear_terms(const PartialRTable& r, const Rational& c1, const Rational& c2) {
  for (std::size_t m = 0; m <= r.left_order(); ++m) {
    for (std::size_t n = 0; n <= r.right_order(); ++n) {
      Rational expected = 0;
      if (m == 1 && n == 0) expected = c1;
      if (m == 0 && n == 1) expected = c2;
      if (r(m, n) != expected) return false;
    }
  }
  return true;
}

}  // namespace

TEST(PartialR, ProductTableHasNoMixedCumulants) {
  const auto left = bifree::MomentSequence({1, 2, 7, -1});
  const auto right = bifree::MomentSequence({1, Rational(1, 3), 0, 5, 2});
  const PartialRTable r = bifree::compute_partial_r(bifree::product_table(left, right));
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(r(m, n), 0);
  }
}

TEST(PartialR, ScalarPairHasOnlyLinearTerms) {
  EXPECT_TRUE(only_linear_terms(bifree::compute_partial_r(bifree::scalar_pair_table(3, -2, 4, 4)), 3, -2));
}

TEST(PartialR, DeltaPairHasZeroCumulants) {
  EXPECT_EQ(bifree::compute_partial_r(delta_pair(3, 4)), PartialRTable(3, 4));
}

TEST(PartialR, R11IsTheCovariance) {
  TwoBandsTable t = delta_pair(1, 1);
  t(1, 0) = Rational(2, 3);
  t(0, 1) = -5;
  t(1, 1) = 7;
  const PartialRTable r = bifree::compute_partial_r(t);
  EXPECT_EQ(r(1, 1), Rational(7) - Rational(2, 3) * -5);
  EXPECT_EQ(r(1, 0), Rational(2, 3));
  EXPECT_EQ(r(0, 1), -5);
  EXPECT_EQ(r(0, 0), 0);
}

TEST(PartialR, RejectsUnnormalizedTables) {
  TwoBandsTable t(2, 2);
  t(0, 0) = 2;
  EXPECT_THROW(bifree::compute_partial_r(t), bifree::BadNormalization);
  PartialRTable r(1, 1);
  r(0, 0) = 1;
  EXPECT_THROW(bifree::partial_r_to_moments(r), bifree::BadNormalization);
}

TEST(PartialR, WorksOnDegenerateBoxes) {
  EXPECT_EQ(bifree::compute_partial_r(delta_pair(0, 0)), PartialRTable(0, 0));
  const TwoBandsTable column = bifree::scalar_pair_table(2, 5, 3, 0);
  EXPECT_TRUE(only_linear_terms(bifree::compute_partial_r(column), 2, 0));
  EXPECT_EQ(bifree::partial_r_to_moments(bifree::compute_partial_r(column)), column);
}

TEST(PartialR, InverseExamples) {
  EXPECT_EQ(bifree::partial_r_to_moments(PartialRTable(3, 3)), delta_pair(3, 3));
  PartialRTable r(4, 3);
  r(1, 0) = Rational(1, 2);
  r(0, 1) = -3;
  EXPECT_EQ(bifree::partial_r_to_moments(r), bifree::scalar_pair_table(Rational(1, 2), -3, 4, 3));
}

TEST(PartialR, MarginalsAreOneVariableCumulants) {
  bifree::Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const TwoBandsTable t = bifree::random_two_bands(rng, 5, 4);
    const PartialRTable r = bifree::compute_partial_r(t);
    const auto ra = bifree::moments_to_r(bifree::left_marginal(t)).r;
    const auto rb = bifree::moments_to_r(bifree::right_marginal(t)).r;
    for (std::size_t m = 1; m <= 5; ++m) EXPECT_EQ(r(m, 0), ra[m - 1]);
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(r(0, n), rb[n - 1]);
  }
}

TEST(PartialR, TruncationCommutesWithTheTransform) {
  bifree::Rng rng(42);
  const TwoBandsTable t = bifree::random_two_bands(rng, 5, 5);
  EXPECT_EQ(bifree::compute_partial_r(t).truncated(3, 2), bifree::compute_partial_r(t.truncated(3, 2)));
}

TEST(PartialR, BiconvolveExamples) {
  EXPECT_EQ(bifree::biconvolve(bifree::scalar_pair_table(1, 2, 3, 3), bifree::scalar_pair_table(3, 4, 3, 3)),
            bifree::scalar_pair_table(4, 6, 3, 3));
  bifree::Rng rng(43);
  const TwoBandsTable t = bifree::random_two_bands(rng, 4, 3);
  EXPECT_EQ(bifree::biconvolve(t, delta_pair(4, 3)), t);
  EXPECT_THROW(bifree::biconvolve(t, delta_pair(3, 3)), bifree::BoxMismatch);
  EXPECT_THROW(bifree::compute_partial_r(t) + PartialRTable(4, 4), bifree::BoxMismatch);
}

TEST(PartialR, GaussianDoubling) {
  // Bi-free Gaussian pair: cumulants live in total degree 2 only.
  const bifree::FockVectors left{{Rational(1), Rational(1)}, {Rational(1), Rational(0)}};
  const bifree::FockVectors right{{Rational(0), Rational(2)}, {Rational(1), Rational(1)}};
  const auto rep = bifree::gaussian_pair_rep(left, right, 4);
  const TwoBandsTable t = bifree::two_bands_table(rep, 0, 0, 4, 4);
  const PartialRTable r = bifree::compute_partial_r(t);
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      if (m + n != 2) EXPECT_EQ(r(m, n), 0) << m << "," << n;
    }
  }
  // Oracle: two bi-free copies on the free product.
  const bifree::ProductState p({rep, rep}, 8);
  const auto a = bifree::left_action(p, 0, rep.left_ops[0]) + bifree::left_action(p, 1, rep.left_ops[0]);
  const auto b = bifree::right_action(p, 0, rep.right_ops[0]) + bifree::right_action(p, 1, rep.right_ops[0]);
  const TwoBandsTable doubled = bifree::two_bands_table(p, a, b, 4, 4);
  EXPECT_EQ(bifree::biconvolve(t, t), doubled);
  const PartialRTable rd = bifree::compute_partial_r(doubled);
  EXPECT_EQ(rd(2, 0), 2 * r(2, 0));
  EXPECT_EQ(rd(1, 1), 2 * r(1, 1));
  EXPECT_EQ(rd(0, 2), 2 * r(0, 2));
}

TEST(PartialR, MixedCumulantsVanishExamples) {
  EXPECT_TRUE(bifree::mixed_cumulants_vanish(
      bifree::product_table(bifree::MomentSequence({1, 1, 3}), bifree::MomentSequence({1, 0, 1}))));
  EXPECT_TRUE(bifree::mixed_cumulants_vanish(delta_pair(2, 2)));
  TwoBandsTable t = bifree::scalar_pair_table(1, 1, 2, 2);
  t(1, 1) += 1;
  EXPECT_FALSE(bifree::mixed_cumulants_vanish(t));
}

TEST(PartialRProperty, Roundtrip) {
  bifree::Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const TwoBandsTable t = bifree::random_two_bands(rng, 4, 5);
    EXPECT_EQ(bifree::partial_r_to_moments(bifree::compute_partial_r(t)), t);
    PartialRTable r(3, 4);
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t n = 0; n <= 4; ++n) r(m, n) = m + n == 0 ? Rational(0) : rng.rational(3, 2);
    }
    EXPECT_EQ(bifree::compute_partial_r(bifree::partial_r_to_moments(r)), r);
  }
}

TEST(PartialRProperty, LeadingCoefficientIsOne) {
  bifree::Rng rng(45);
  const TwoBandsTable t = bifree::random_two_bands(rng, 3, 3);
  const PartialRTable base = bifree::compute_partial_r(t);
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      if (m + n == 0) continue;
      TwoBandsTable bumped = t;
      bumped(m, n) += Rational(5, 3);
      const PartialRTable r = bifree::compute_partial_r(bumped);
      EXPECT_EQ(r(m, n) - base(m, n), Rational(5, 3));
      // R_{p,q} only depends on moments inside [0,p] x [0,q].
      for (std::size_t p = 0; p <= 3; ++p) {
        for (std::size_t q = 0; q <= 3; ++q) {
          if (p < m || q < n) EXPECT_EQ(r(p, q), base(p, q));
        }
      }
    }
  }
}

TEST(PartialRProperty, Bihomogeneity) {
  bifree::Rng rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    const TwoBandsTable t = bifree::random_two_bands(rng, 4, 4);
    const Rational lambda = rng.rational(3, 2) + Rational(1, 5);
    const Rational mu = rng.rational(3, 2) + Rational(1, 7);
    TwoBandsTable weight(4, 4);
    for (std::size_t m = 0; m <= 4; ++m) {
      for (std::size_t n = 0; n <= 4; ++n) {
        weight(m, n) = 1;
        for (std::size_t i = 0; i < m; ++i) weight(m, n) *= lambda;
        for (std::size_t j = 0; j < n; ++j) weight(m, n) *= mu;
      }
    }
    TwoBandsTable scaled = t;
    for (std::size_t m = 0; m <= 4; ++m) {
      for (std::size_t n = 0; n <= 4; ++n) scaled(m, n) *= weight(m, n);
    }
    const PartialRTable r = bifree::compute_partial_r(t);
    const PartialRTable rs = bifree::compute_partial_r(scaled);
    for (std::size_t m = 0; m <= 4; ++m) {
      for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(rs(m, n), weight(m, n) * r(m, n));
    }
  }
}

TEST(PartialRProperty, IntegerTablesGiveIntegerCumulants) {
  bifree::Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const PartialRTable r = bifree::compute_partial_r(bifree::random_two_bands(rng, 4, 4, 6, 1));
    for (std::size_t m = 0; m <= 4; ++m) {
      for (std::size_t n = 0; n <= 4; ++n) EXPECT_TRUE(bifree::is_integer(r(m, n)));
    }
  }
}

TEST(PartialRProperty, IndependenceIsClosedUnderConvolution) {
  bifree::Rng rng(48);
  for (int trial = 0; trial < 10; ++trial) {
    const TwoBandsTable t1 = bifree::product_table(bifree::random_moments(rng, 3), bifree::random_moments(rng, 3));
    const TwoBandsTable t2 = bifree::product_table(bifree::random_moments(rng, 3), bifree::random_moments(rng, 3));
    const TwoBandsTable sum = bifree::biconvolve(t1, t2);
    EXPECT_TRUE(bifree::mixed_cumulants_vanish(sum));
    EXPECT_EQ(sum, bifree::product_table(bifree::left_marginal(sum), bifree::right_marginal(sum)));
  }
}
