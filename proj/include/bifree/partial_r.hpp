#pragma once

#include <cstddef>
#include <vector>

#include "bifree/rational.hpp"
#include "bifree/series.hpp"
#include "bifree/transforms1d.hpp"

namespace bifree {

/// Rational array indexed by bidegree (m, n) on the box [0, M] x [0, N].
/// The tag keeps moment tables and cumulant tables apart at compile time.
template <class Tag>
class BidegreeTable {
 public:
  explicit BidegreeTable(std::size_t left_order = 0, std::size_t right_order = 0)
      : left_order_(left_order), right_order_(right_order), values_((left_order + 1) * (right_order + 1)) {}

  std::size_t left_order() const { return left_order_; }
  std::size_t right_order() const { return right_order_; }
  bool same_box(const BidegreeTable& other) const {
    return left_order_ == other.left_order_ && right_order_ == other.right_order_;
  }

  const Rational& operator()(std::size_t m, std::size_t n) const { return values_[m * (right_order_ + 1) + n]; }
  Rational& operator()(std::size_t m, std::size_t n) { return values_[m * (right_order_ + 1) + n]; }

  /// Restriction to the sub-box [0, m] x [0, n].
  BidegreeTable truncated(std::size_t left_order, std::size_t right_order) const {
    BidegreeTable out(left_order, right_order);
    for (std::size_t m = 0; m <= left_order; ++m) {
      for (std::size_t n = 0; n <= right_order; ++n) out(m, n) = (*this)(m, n);
    }
    return out;
  }

  friend bool operator==(const BidegreeTable&, const BidegreeTable&) = default;

 private:
  std::size_t left_order_;
  std::size_t right_order_;
  std::vector<Rational> values_;
};

struct MomentsTag {};
struct CumulantsTag {};

/// Two-bands moments phi(a^m b^n) of a left variable a and a right variable b.
using TwoBandsTable = BidegreeTable<MomentsTag>;
/// Two-bands bi-free cumulants R_{m,n}(a, b); entry (0,0) is always 0.
using PartialRTable = BidegreeTable<CumulantsTag>;

PartialRTable operator+(const PartialRTable& x, const PartialRTable& y);

/// Column 0: phi(a^m).
MomentSequence left_marginal(const TwoBandsTable& t);
/// Row 0: phi(b^n).
MomentSequence right_marginal(const TwoBandsTable& t);

/// H_{a,b}(t, s) = sum phi(a^m b^n) t^m s^n.
Series2 moment_generating_series(const TwoBandsTable& t);

/// Table of a "scalar pair" a = c1, b = c2: entries c1^m c2^n.
TwoBandsTable scalar_pair_table(const Rational& c1, const Rational& c2, std::size_t left_order,
                                std::size_t right_order);

/// Product table phi(a^m) phi(b^n) of classically independent marginals.
TwoBandsTable product_table(const MomentSequence& left, const MomentSequence& right);

/// Partial bi-free R-transform
///   R(z, w) = 1 + z R_a(z) + w R_b(w) - zw / G_{a,b}(K_a(z), K_b(w)),
/// evaluated without poles as
///   1 + (zK_a - 1) + (wK_b - 1) - (zK_a)(wK_b) / H_{a,b}(1/K_a(z), 1/K_b(w)).
/// Throws BadNormalization unless t(0,0) = 1.
PartialRTable compute_partial_r(const TwoBandsTable& t);

/// The unique moment table whose partial R-transform is r. Solved entry by
/// entry in increasing bidegree, using that R_{m,n} - phi(a^m b^n) only
/// involves moments of strictly smaller bidegree. Throws BadNormalization
/// unless r(0,0) = 0.
TwoBandsTable partial_r_to_moments(const PartialRTable& r);

/// Bi-free additive convolution of two-bands distributions. Throws BoxMismatch
/// if the boxes differ.
TwoBandsTable biconvolve(const TwoBandsTable& t1, const TwoBandsTable& t2);

/// True iff R_{m,n} = 0 for every m, n >= 1 in the box.
bool mixed_cumulants_vanish(const TwoBandsTable& t);

}  // namespace bifree
