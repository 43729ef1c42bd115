#pragma once

// Deterministic random instances. Draws use plain modulo reduction of a
// mt19937_64 stream, so a seed yields the same instances on every platform.

#include <cstddef>
#include <cstdint>
#include <random>

#include "bifree/pair_oracle.hpp"
#include "bifree/partial_r.hpp"
#include "bifree/rational.hpp"
#include "bifree/transforms1d.hpp"

namespace bifree {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  /// p/q with |p| <= bound and 1 <= q <= max_den.
  Rational rational(std::int64_t bound, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

/// phi(1) = 1, other entries random rationals.
TwoBandsTable random_two_bands(Rng& rng, std::size_t left_order, std::size_t right_order, std::int64_t bound = 3,
                               std::int64_t max_den = 3);

MomentSequence random_moments(Rng& rng, std::size_t order, std::int64_t bound = 3, std::int64_t max_den = 3);

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound = 2,
                             std::int64_t max_den = 2);

/// Same, with entry (0,0) = 0 so that the operator is centered for e_0.
RationalMatrix random_centered_matrix(Rng& rng, std::size_t dim, std::int64_t bound = 2, std::int64_t max_den = 2);

/// Pair representation on a space of the given dimension with independent
/// random left and right operators.
TwoFacedPairRep random_pair_rep(Rng& rng, std::size_t dim, std::size_t left_count = 1, std::size_t right_count = 1);

}  // namespace bifree
