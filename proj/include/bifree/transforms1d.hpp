#pragma once

#include <utility>
#include <vector>

#include "bifree/rational.hpp"
#include "bifree/series.hpp"

namespace bifree {

/// Moments phi(a^n), n = 0..N, of a single variable. Entry 0 should be 1;
/// operations check this and throw BadNormalization otherwise.
class MomentSequence {
 public:
  MomentSequence() : moments_{Rational(1)} {}
  explicit MomentSequence(std::vector<Rational> moments);

  std::size_t order() const { return moments_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return moments_[n]; }
  const std::vector<Rational>& values() const { return moments_; }

  MomentSequence truncated(std::size_t order) const;

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

 private:
  std::vector<Rational> moments_;
};

/// One-variable R-transform R_a(z) = K_a(z) - 1/z, stored as the power series
/// r(z). The coefficient of z^n is the cumulant R_{n+1,0} of the two-bands
/// family. Moments to order N determine r to order N - 1.
struct RTransform {
  Series1 r;

  friend bool operator==(const RTransform&, const RTransform&) = default;
};

/// Moment generating series h_a(t) = sum phi(a^n) t^n, order N.
Series1 moment_series(const MomentSequence& m);

/// t h_a(t) = G_a(1/t), order N + 1.
Series1 green_series(const MomentSequence& m);

/// 1 / K_a(z), i.e. the compositional inverse of green_series, order N + 1.
Series1 inverse_k(const MomentSequence& m);

/// z K_a(z) = 1 + z r(z), order N.
Series1 z_times_k(const MomentSequence& m);

/// Requires order >= 1.
RTransform moments_to_r(const MomentSequence& m);

/// Inverse of moments_to_r. Requires r.r.order() >= order - 1.
MomentSequence r_to_moments(const RTransform& r, std::size_t order);

/// Free additive convolution; the result has the smaller input order.
MomentSequence free_convolve1(const MomentSequence& m1, const MomentSequence& m2);

/// Subordination series (t1(t), t2(t)) of order N for the free sum a1 + a2:
/// t h_{a1+a2}(t) = t1 h_{a1}(t1) = t2 h_{a2}(t2).
/// Both inputs need order >= N.
std::pair<Series1, Series1> subordination_series(const MomentSequence& m1, const MomentSequence& m2, std::size_t order);

}  // namespace bifree
