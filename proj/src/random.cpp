#include "bifree/random.hpp"

namespace bifree {

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Rational Rng::rational(std::int64_t bound, std::int64_t max_den) {
  const std::int64_t p = integer(-bound, bound);
  const std::int64_t q = integer(1, max_den);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

TwoBandsTable random_two_bands(Rng& rng, std::size_t left_order, std::size_t right_order, std::int64_t bound,
                               std::int64_t max_den) {
  TwoBandsTable t(left_order, right_order);
  for (std::size_t m = 0; m <= left_order; ++m) {
    for (std::size_t n = 0; n <= right_order; ++n) t(m, n) = rng.rational(bound, max_den);
  }
  t(0, 0) = 1;
  return t;
}

MomentSequence random_moments(Rng& rng, std::size_t order, std::int64_t bound, std::int64_t max_den) {
  std::vector<Rational> v{Rational(1)};
  for (std::size_t n = 1; n <= order; ++n) v.push_back(rng.rational(bound, max_den));
  return MomentSequence(std::move(v));
}

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound, std::int64_t max_den) {
  RationalMatrix x(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) x(i, j) = rng.rational(bound, max_den);
  }
  return x;
}

RationalMatrix random_centered_matrix(Rng& rng, std::size_t dim, std::int64_t bound, std::int64_t max_den) {
  RationalMatrix x = random_matrix(rng, dim, dim, bound, max_den);
  x(0, 0) = 0;
  return x;
}

TwoFacedPairRep random_pair_rep(Rng& rng, std::size_t dim, std::size_t left_count, std::size_t right_count) {
  TwoFacedPairRep rep;
  rep.space = PointedSpace{dim, dim};
  for (std::size_t i = 0; i < left_count; ++i) rep.left_ops.push_back(random_matrix(rng, dim, dim));
  for (std::size_t j = 0; j < right_count; ++j) rep.right_ops.push_back(random_matrix(rng, dim, dim));
  return rep;
}

}  // namespace bifree
