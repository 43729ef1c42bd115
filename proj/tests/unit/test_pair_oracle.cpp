#include <gtest/gtest.h>

#include <vector>

#include "bifree/errors.hpp"
#include "bifree/pair_oracle.hpp"
#include "bifree/partial_r.hpp"
#include "bifree/random.hpp"

using bifree::FockVectors;
using bifree::Letter;
using bifree::ProductOperator;
using bifree::ProductState;
using bifree::Rational;
using bifree::RationalMatrix;
using bifree::Side;
using bifree::Slot;
using bifree::TensorWord;
using bifree::TwoFacedPairRep;

namespace {

TwoFacedPairRep scalar_rep(const Rational& c1, const Rational& c2) {
  TwoFacedPairRep rep;
  rep.space = bifree::PointedSpace{2, 2};
  rep.left_ops = {c1 * RationalMatrix::identity(2)};
  rep.right_ops = {c2 * RationalMatrix::identity(2)};
  return rep;
}

TwoFacedPairRep centered_rep(bifree::Rng& rng, std::size_t dim, std::size_t vars) {
  TwoFacedPairRep rep;
  rep.space = bifree::PointedSpace{dim, dim};
  for (std::size_t k = 0; k < vars; ++k) {
    rep.left_ops.push_back(bifree::random_centered_matrix(rng, dim));
    rep.right_ops.push_back(bifree::random_centered_matrix(rng, dim));
  }
  return rep;
}

// Matrix of the rank-one projection onto e_0 along the other coordinates.
RationalMatrix projection(std::size_t dim) {
  RationalMatrix p(dim, dim);
  p(0, 0) = 1;
  return p;
}

// Columns [0, cols) of x equal those of y.
bool columns_agree(const RationalMatrix& x, const RationalMatrix& y, std::size_t cols) {
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      if (x(i, j) != y(i, j)) return false;
    }
  }
  return true;
}

Rational dot(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

}  // namespace

TEST(RationalMatrix, Arithmetic) {
  const auto a = RationalMatrix::from_rows({{1, 2}, {3, 4}});
  const auto b = RationalMatrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, RationalMatrix::from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a + b, RationalMatrix::from_rows({{1, 3}, {4, 4}}));
  EXPECT_EQ(a - a, RationalMatrix(2, 2));
  EXPECT_EQ(bifree::commutator(a, b), a * b - b * a);
  EXPECT_EQ(Rational(1, 2) * a, RationalMatrix::from_rows({{Rational(1, 2), 1}, {Rational(3, 2), 2}}));
  EXPECT_EQ(a * RationalMatrix::identity(2), a);
  EXPECT_THROW(RationalMatrix::from_rows({{1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(a * RationalMatrix(3, 3), std::invalid_argument);
}

TEST(ProductState, BasisOrderIsDeterministic) {
  const ProductState p({scalar_rep(0, 0), scalar_rep(0, 0)}, 2);
  const std::vector<TensorWord> expected{
      {}, {Slot{0, 1}}, {Slot{1, 1}}, {Slot{0, 1}, Slot{1, 1}}, {Slot{1, 1}, Slot{0, 1}},
  };
  EXPECT_EQ(p.basis(), expected);
  EXPECT_EQ(p.exactness_bound(), 2u);
  EXPECT_EQ(p.truncation_limit(), 2u);
}

TEST(ProductState, BasisOrdersByLengthThenFactorsThenCoordinates) {
  TwoFacedPairRep big;
  big.space = bifree::PointedSpace{3, 3};
  const ProductState p({big, scalar_rep(0, 0)}, 2);
  const auto basis = p.basis();
  ASSERT_EQ(basis.size(), 1u + 3u + 4u);
  EXPECT_EQ(basis[1], (TensorWord{Slot{0, 1}}));
  EXPECT_EQ(basis[2], (TensorWord{Slot{0, 2}}));
  EXPECT_EQ(basis[3], (TensorWord{Slot{1, 1}}));
  EXPECT_EQ(basis[4], (TensorWord{Slot{0, 1}, Slot{1, 1}}));
  EXPECT_EQ(basis[5], (TensorWord{Slot{0, 2}, Slot{1, 1}}));
  EXPECT_EQ(basis[6], (TensorWord{Slot{1, 1}, Slot{0, 1}}));
}

TEST(ProductState, SingleFactorIsNotTruncated) {
  bifree::Rng rng(51);
  const auto rep = bifree::random_pair_rep(rng, 3);
  const ProductState p = bifree::single_factor(rep);
  EXPECT_EQ(p.basis().size(), 3u);
  EXPECT_EQ(p.exactness_bound(), bifree::kUnboundedLength);
  // Long words are fine: the single factor is its own free product.
  std::vector<Letter> word(12, Letter{Side::Left, 0, 0});
  RationalMatrix power = RationalMatrix::identity(3);
  for (int i = 0; i < 12; ++i) power = power * rep.left_ops[0];
  EXPECT_EQ(bifree::joint_moment(p, word), power(0, 0));
}

TEST(Actions, IdentityActsAsIdentity) {
  bifree::Rng rng(52);
  const ProductState p({bifree::random_pair_rep(rng, 3), bifree::random_pair_rep(rng, 2)}, 3);
  const auto n = p.basis().size();
  for (std::size_t k = 0; k < 2; ++k) {
    const auto id = RationalMatrix::identity(p.factors()[k].space.dim);
    EXPECT_EQ(bifree::materialize(p, bifree::left_action(p, k, id)), RationalMatrix::identity(n));
    EXPECT_EQ(bifree::materialize(p, bifree::right_action(p, k, id)), RationalMatrix::identity(n));
  }
}

TEST(Actions, ScalarPartActsByTheState) {
  // T e_0 = c e_0 gives lambda_k(T) xi = c xi.
  RationalMatrix t = RationalMatrix::from_rows({{5, 1, 2}, {0, 3, 1}, {0, 4, 4}});
  TwoFacedPairRep rep;
  rep.space = bifree::PointedSpace{3, 3};
  const ProductState p({rep, rep}, 3);
  bifree::ProductVector expected;
  expected[TensorWord{}] = 5;
  EXPECT_EQ(bifree::left_action(p, 1, t).apply(bifree::vacuum_vector(), 3), expected);
  EXPECT_EQ(bifree::right_action(p, 1, t).apply(bifree::vacuum_vector(), 3), expected);
}

TEST(Actions, LeftAndRightAgreeOnTheVacuum) {
  bifree::Rng rng(53);
  const auto r1 = bifree::random_pair_rep(rng, 4);
  const ProductState p({r1, r1}, 3);
  const RationalMatrix t = bifree::random_matrix(rng, 4, 4);
  EXPECT_EQ(bifree::left_action(p, 0, t).apply(bifree::vacuum_vector(), 3),
            bifree::right_action(p, 0, t).apply(bifree::vacuum_vector(), 3));
}

TEST(Actions, LeftPrependsAndRightAppends) {
  TwoFacedPairRep rep;
  rep.space = bifree::PointedSpace{2, 2};
  const ProductState p({rep, rep}, 3);
  // T e_0 = e_1 moves the state vector into X-circ.
  const auto t = RationalMatrix::from_rows({{0, 0}, {1, 0}});
  bifree::ProductVector v;
  v[TensorWord{Slot{1, 1}}] = 1;
  bifree::ProductVector left;
  left[TensorWord{Slot{0, 1}, Slot{1, 1}}] = 1;
  bifree::ProductVector right;
  right[TensorWord{Slot{1, 1}, Slot{0, 1}}] = 1;
  EXPECT_EQ(bifree::left_action(p, 0, t).apply(v, 3), left);
  EXPECT_EQ(bifree::right_action(p, 0, t).apply(v, 3), right);
  // Truncation drops words beyond the limit.
  EXPECT_TRUE(bifree::left_action(p, 0, t).apply(v, 1).empty());
}

TEST(Actions, FactorMismatch) {
  const ProductState p({scalar_rep(1, 1), scalar_rep(1, 1)}, 2);
  EXPECT_THROW(bifree::left_action(p, 2, RationalMatrix::identity(2)), bifree::FactorMismatch);
  EXPECT_THROW(bifree::right_action(p, 0, RationalMatrix::identity(3)), bifree::FactorMismatch);
  const std::vector<Letter> bad{Letter{Side::Left, 0, 1}};
  EXPECT_THROW(bifree::joint_moment(p, bad), bifree::FactorMismatch);
}

TEST(Actions, DifferentFactorsCommuteAcrossSides) {
  bifree::Rng rng(54);
  const ProductState p({bifree::random_pair_rep(rng, 3), bifree::random_pair_rep(rng, 3)}, 3);
  const auto a = bifree::materialize(p, bifree::left_action(p, 0, bifree::random_matrix(rng, 3, 3)));
  const auto b = bifree::materialize(p, bifree::right_action(p, 1, bifree::random_matrix(rng, 3, 3)));
  // Columns of words of length < L are computed without truncation loss.
  const auto basis = p.basis();
  std::size_t reliable = 0;
  while (reliable < basis.size() && basis[reliable].size() + 1 <= 3) ++reliable;
  EXPECT_TRUE(columns_agree(a * b, b * a, reliable));
}

TEST(JointMoment, EmptyAndSingleLetterWords) {
  bifree::Rng rng(55);
  const auto r1 = bifree::random_pair_rep(rng, 3);
  const auto r2 = bifree::random_pair_rep(rng, 4);
  const ProductState p({r1, r2}, 4);
  EXPECT_EQ(bifree::joint_moment(p, std::vector<Letter>{}), 1);
  EXPECT_EQ(bifree::joint_moment(p, std::vector<Letter>{{Side::Left, 1, 0}}), r2.left_ops[0](0, 0));
  EXPECT_EQ(bifree::joint_moment(p, std::vector<Letter>{{Side::Right, 0, 0}}), r1.right_ops[0](0, 0));
}

TEST(JointMoment, TruncationGuard) {
  const ProductState p({scalar_rep(1, 1), scalar_rep(1, 1)}, 3);
  const std::vector<Letter> word(4, Letter{Side::Left, 0, 0});
  EXPECT_THROW(bifree::joint_moment(p, word), bifree::TruncationUnsound);
  auto rep = bifree::shift_pair_rep(3, RationalMatrix::identity(2));
  EXPECT_EQ(rep.exact_word_length, 5u);
  const ProductState q({rep, rep}, 8);
  EXPECT_EQ(q.exactness_bound(), 5u);
  EXPECT_THROW(bifree::joint_moment(q, std::vector<Letter>(6, Letter{Side::Right, 1, 0})), bifree::TruncationUnsound);
}

TEST(JointMoment, CenteredMismatchVanishes) {
  bifree::Rng rng(56);
  const auto r1 = centered_rep(rng, 3, 1);
  const auto r2 = centered_rep(rng, 3, 1);
  const ProductState p({r1, r2}, 4);
  EXPECT_EQ(bifree::joint_moment(p, std::vector<Letter>{{Side::Left, 0, 0}, {Side::Right, 1, 0}}), 0);
}

TEST(JointMoment, CenteredAlternatingProductFactorizes) {
  bifree::Rng rng(57);
  const auto r1 = centered_rep(rng, 3, 2);
  const auto r2 = centered_rep(rng, 4, 2);
  const ProductState p({r1, r2}, 4);
  // phi(a_2 a_1 b_2 b_1) with a_1, b_1 from factor 0 and a_2, b_2 from factor 1.
  const std::vector<Letter> word{{Side::Left, 1, 1}, {Side::Left, 0, 0}, {Side::Right, 1, 1}, {Side::Right, 0, 0}};
  const Rational expected = (r1.left_ops[0] * r1.right_ops[0])(0, 0) * (r2.left_ops[1] * r2.right_ops[1])(0, 0);
  EXPECT_EQ(bifree::joint_moment(p, word), expected);
}

TEST(JointMoment, RestrictionFidelity) {
  bifree::Rng rng(58);
  for (int trial = 0; trial < 5; ++trial) {
    const auto r1 = bifree::random_pair_rep(rng, 3, 2, 1);
    const auto r2 = bifree::random_pair_rep(rng, 2, 1, 1);
    const ProductState p({r1, r2}, 5);
    const ProductState alone = bifree::single_factor(r1);
    for (std::uint64_t code = 0; code < 3 * 3 * 3 * 3 * 3; ++code) {
      std::vector<Letter> word;
      std::uint64_t c = code;
      for (int i = 0; i < 5; ++i, c /= 3) {
        const auto x = c % 3;
        word.push_back(x == 2 ? Letter{Side::Right, 0, 0} : Letter{Side::Left, 0, static_cast<std::size_t>(x)});
      }
      ASSERT_EQ(bifree::joint_moment(p, word), bifree::joint_moment(alone, word));
    }
  }
}

TEST(JointMoment, ScalarPairsAdd) {
  const ProductState p({scalar_rep(2, 3), scalar_rep(Rational(1, 2), -1)}, 6);
  const ProductOperator a =
      bifree::left_action(p, 0, p.factors()[0].left_ops[0]) + bifree::left_action(p, 1, p.factors()[1].left_ops[0]);
  const ProductOperator b =
      bifree::right_action(p, 0, p.factors()[0].right_ops[0]) + bifree::right_action(p, 1, p.factors()[1].right_ops[0]);
  EXPECT_EQ(bifree::two_bands_table(p, a, b, 3, 3), bifree::scalar_pair_table(Rational(5, 2), 2, 3, 3));
}

TEST(TwoBandsTable, MatchesJointMoments) {
  bifree::Rng rng(59);
  const auto r1 = bifree::random_pair_rep(rng, 3);
  const auto r2 = bifree::random_pair_rep(rng, 3);
  const ProductState p({r1, r2}, 6);
  const ProductOperator a = bifree::left_action(p, 0, r1.left_ops[0]) + bifree::left_action(p, 1, r2.left_ops[0]);
  const ProductOperator b = bifree::right_action(p, 0, r1.right_ops[0]) + bifree::right_action(p, 1, r2.right_ops[0]);
  const auto table = bifree::two_bands_table(p, a, b, 3, 3);
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      std::vector<ProductOperator> ops(m, a);
      ops.insert(ops.end(), n, b);
      EXPECT_EQ(table(m, n), bifree::vacuum_expectation(p, ops));
    }
  }
}

TEST(TwoBandsTable, AdditivityOfTheTransform) {
  bifree::Rng rng(60);
  for (int trial = 0; trial < 5; ++trial) {
    const auto r1 = bifree::random_pair_rep(rng, 2 + rng.index(3));
    const auto r2 = bifree::random_pair_rep(rng, 2 + rng.index(3));
    const ProductState p({r1, r2}, 6);
    const ProductOperator a = bifree::left_action(p, 0, r1.left_ops[0]) + bifree::left_action(p, 1, r2.left_ops[0]);
    const ProductOperator b = bifree::right_action(p, 0, r1.right_ops[0]) + bifree::right_action(p, 1, r2.right_ops[0]);
    const auto t1 = bifree::two_bands_table(r1, 0, 0, 3, 3);
    const auto t2 = bifree::two_bands_table(r2, 0, 0, 3, 3);
    EXPECT_EQ(bifree::two_bands_table(p, a, b, 3, 3), bifree::biconvolve(t1, t2));
  }
}

TEST(Gaussian, MomentsAndCommutators) {
  const std::vector<FockVectors> left{{{1, 2}, {0, 1}}, {{-1, 1}, {3, Rational(1, 2)}}};
  const std::vector<FockVectors> right{{{2, 0}, {1, 1}}};
  const auto rep = bifree::gaussian_pair_rep(left, right, 3);
  EXPECT_EQ(rep.exact_word_length, 7u);
  EXPECT_EQ(rep.space.dim, 1u + 2u + 4u + 8u);
  EXPECT_EQ(rep.space.reliable_dim, 1u + 2u + 4u);
  const auto p = bifree::single_factor(rep);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(bifree::joint_moment(p, std::vector<Letter>{{Side::Left, 0, i}}), 0);
    const Rational expected = dot(right[0].h, left[i].h_star);
    EXPECT_EQ(bifree::joint_moment(p, std::vector<Letter>{{Side::Left, 0, i}, {Side::Right, 0, 0}}), expected);
    const Rational lambda = dot(right[0].h, left[i].h_star) - dot(left[i].h, right[0].h_star);
    EXPECT_TRUE(columns_agree(bifree::commutator(rep.left_ops[i], rep.right_ops[0]), lambda * projection(rep.space.dim),
                              rep.space.reliable_dim));
  }
  // phi(z_i z_k) = <h(k), h*(i)> holds for two left variables as well.
  EXPECT_EQ(bifree::joint_moment(p, std::vector<Letter>{{Side::Left, 0, 0}, {Side::Left, 0, 1}}),
            dot(left[1].h, left[0].h_star));
}

TEST(Shift, IdentityOmegaGivesShiftAndAdjoint) {
  const auto rep = bifree::shift_pair_rep(4, RationalMatrix::identity(2));
  EXPECT_EQ(rep.left_ops[0](1, 0), 1);
  EXPECT_EQ(rep.right_ops[0](0, 1), 1);
  const auto p = bifree::single_factor(rep);
  // phi(T^m T*^n) = 0 unless m = n = 0.
  const auto t = bifree::two_bands_table(rep, 0, 0, 3, 3);
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(t(m, n), m + n == 0 ? 1 : 0);
  }
  EXPECT_EQ(bifree::joint_moment(p, std::vector<Letter>{{Side::Right, 0, 0}, {Side::Left, 0, 0}}), 1);
  EXPECT_TRUE(columns_agree(bifree::commutator(rep.left_ops[0], rep.right_ops[0]), Rational(-1) * projection(4), 3));
}

TEST(Shift, CommutatorIsMinusDetOmega) {
  const auto omega = RationalMatrix::from_rows({{1, 1}, {-1, 1}});
  const auto rep = bifree::shift_pair_rep(5, omega);
  EXPECT_TRUE(columns_agree(bifree::commutator(rep.left_ops[0], rep.right_ops[0]), Rational(-2) * projection(5), 4));
  bifree::Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const auto w = bifree::random_matrix(rng, 2, 2);
    const auto r = bifree::shift_pair_rep(4, w);
    const Rational det = w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0);
    EXPECT_TRUE(columns_agree(bifree::commutator(r.left_ops[0], r.right_ops[0]), -det * projection(4), 3));
  }
  EXPECT_THROW(bifree::shift_pair_rep(1, omega), std::invalid_argument);
}
