#include "bifree/transforms1d.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bifree/errors.hpp"

namespace bifree {

namespace {

void require_normalized(const MomentSequence& m) {
  if (m[0] != 1) throw BadNormalization("phi(1) = " + to_string(m[0]) + ", expected 1");
}

}  // namespace

MomentSequence::MomentSequence(std::vector<Rational> moments) : moments_(std::move(moments)) {
  if (moments_.empty()) throw std::invalid_argument("moment sequence needs phi(1)");
}

MomentSequence MomentSequence::truncated(std::size_t order) const {
  if (order > this->order()) throw OrderTooSmall("cannot extend a moment sequence");
  return MomentSequence(
      std::vector<Rational>(moments_.begin(), moments_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

Series1 moment_series(const MomentSequence& m) { return Series1(m.values()); }

Series1 green_series(const MomentSequence& m) { return shift_up(moment_series(m)); }

Series1 inverse_k(const MomentSequence& m) {
  require_normalized(m);
  return revert(green_series(m));
}

Series1 z_times_k(const MomentSequence& m) {
  // 1/K = z v(z) with v(0) = 1, so z K = 1/v.
  return reciprocal(shift_down(inverse_k(m)));
}

RTransform moments_to_r(const MomentSequence& m) {
  require_normalized(m);
  if (m.order() == 0) throw OrderTooSmall("need at least phi(a) to form an R-transform");
  Series1 zk = z_times_k(m);
  zk[0] = 0;
  return RTransform{shift_down(zk)};
}

MomentSequence r_to_moments(const RTransform& r, std::size_t order) {
  if (order == 0) return MomentSequence();
  if (r.r.order() + 1 < order) {
    throw OrderTooSmall("r of order " + std::to_string(r.r.order()) + " cannot give moments to order " +
                        std::to_string(order));
  }
  // 1/K(z) = z / (1 + z r(z)); its inverse is t h(t).
  Series1 zk = shift_up(r.r.truncated(order - 1));
  zk[0] = 1;
  const Series1 g = revert(shift_up(reciprocal(zk)));
  return MomentSequence(std::vector<Rational>(g.coefficients().begin() + 1, g.coefficients().end()));
}

MomentSequence free_convolve1(const MomentSequence& m1, const MomentSequence& m2) {
  require_normalized(m1);
  require_normalized(m2);
  const std::size_t order = std::min(m1.order(), m2.order());
  if (order == 0) return MomentSequence();
  const RTransform r1 = moments_to_r(m1.truncated(order));
  const RTransform r2 = moments_to_r(m2.truncated(order));
  return r_to_moments(RTransform{r1.r + r2.r}, order);
}

std::pair<Series1, Series1> subordination_series(const MomentSequence& m1, const MomentSequence& m2,
                                                 std::size_t order) {
  require_normalized(m1);
  require_normalized(m2);
  if (m1.order() < order || m2.order() < order) {
    throw OrderTooSmall("subordination to order " + std::to_string(order) + " needs moments to that order");
  }
  const MomentSequence a1 = m1.truncated(order);
  const MomentSequence a2 = m2.truncated(order);
  // t_k(t) = 1 / K_{a_k}(G_{a1+a2}(1/t)).
  const Series1 sum_green = green_series(free_convolve1(a1, a2));
  Series1 t1 = compose(inverse_k(a1), sum_green);
  Series1 t2 = compose(inverse_k(a2), sum_green);
  return {t1.truncated(order), t2.truncated(order)};
}

}  // namespace bifree
