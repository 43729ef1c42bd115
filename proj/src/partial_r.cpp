#include "bifree/partial_r.hpp"

#include "bifree/errors.hpp"

namespace bifree {

PartialRTable operator+(const PartialRTable& x, const PartialRTable& y) {
  if (!x.same_box(y)) throw BoxMismatch("cumulant tables have different boxes");
  PartialRTable out(x.left_order(), x.right_order());
  for (std::size_t m = 0; m <= x.left_order(); ++m) {
    for (std::size_t n = 0; n <= x.right_order(); ++n) out(m, n) = x(m, n) + y(m, n);
  }
  return out;
}

MomentSequence left_marginal(const TwoBandsTable& t) {
  std::vector<Rational> v;
  for (std::size_t m = 0; m <= t.left_order(); ++m) v.push_back(t(m, 0));
  return MomentSequence(std::move(v));
}

MomentSequence right_marginal(const TwoBandsTable& t) {
  std::vector<Rational> v;
  for (std::size_t n = 0; n <= t.right_order(); ++n) v.push_back(t(0, n));
  return MomentSequence(std::move(v));
}

Series2 moment_generating_series(const TwoBandsTable& t) {
  Series2 h(t.left_order(), t.right_order());
  for (std::size_t m = 0; m <= t.left_order(); ++m) {
    for (std::size_t n = 0; n <= t.right_order(); ++n) h(m, n) = t(m, n);
  }
  return h;
}

TwoBandsTable scalar_pair_table(const Rational& c1, const Rational& c2, std::size_t left_order,
                                std::size_t right_order) {
  TwoBandsTable t(left_order, right_order);
  Rational left_power = 1;
  for (std::size_t m = 0; m <= left_order; ++m) {
    Rational value = left_power;
    for (std::size_t n = 0; n <= right_order; ++n) {
      t(m, n) = value;
      value *= c2;
    }
    left_power *= c1;
  }
  return t;
}

TwoBandsTable product_table(const MomentSequence& left, const MomentSequence& right) {
  TwoBandsTable t(left.order(), right.order());
  for (std::size_t m = 0; m <= left.order(); ++m) {
    for (std::size_t n = 0; n <= right.order(); ++n) t(m, n) = left[m] * right[n];
  }
  return t;
}

PartialRTable compute_partial_r(const TwoBandsTable& t) {
  if (t(0, 0) != 1) throw BadNormalization("phi(1) = " + to_string(t(0, 0)) + ", expected 1");
  const std::size_t mm = t.left_order();
  const std::size_t nn = t.right_order();
  const MomentSequence a = left_marginal(t);
  const MomentSequence b = right_marginal(t);

  const Series1 zka = z_times_k(a);  // order mm
  const Series1 wkb = z_times_k(b);  // order nn
  const Series2 h_at_inverse_k = compose1_into_2(moment_generating_series(t), inverse_k(a), inverse_k(b));
  const Series2 fraction = Series2::from_left(zka, nn) * Series2::from_right(mm, wkb) * reciprocal(h_at_inverse_k);

  PartialRTable r(mm, nn);
  for (std::size_t m = 0; m <= mm; ++m) {
    for (std::size_t n = 0; n <= nn; ++n) {
      Rational value = -fraction(m, n);
      if (m == 0 && n == 0) {
        value += 1;
      } else if (n == 0) {
        value += zka[m];
      } else if (m == 0) {
        value += wkb[n];
      }
      r(m, n) = value;
    }
  }
  return r;
}

TwoBandsTable partial_r_to_moments(const PartialRTable& r) {
  if (sgn(r(0, 0)) != 0) throw BadNormalization("cumulant table must have R(0,0) = 0");
  TwoBandsTable t(r.left_order(), r.right_order());
  t(0, 0) = 1;
  for (std::size_t m = 0; m <= r.left_order(); ++m) {
    for (std::size_t n = 0; n <= r.right_order(); ++n) {
      if (m == 0 && n == 0) continue;
      // With phi(a^m b^n) = 0 the sub-box cumulant is exactly the lower-order part.
      const PartialRTable lower = compute_partial_r(t.truncated(m, n));
      t(m, n) = r(m, n) - lower(m, n);
    }
  }
  return t;
}

TwoBandsTable biconvolve(const TwoBandsTable& t1, const TwoBandsTable& t2) {
  if (!t1.same_box(t2)) throw BoxMismatch("two-bands tables have different boxes");
  return partial_r_to_moments(compute_partial_r(t1) + compute_partial_r(t2));
}

bool mixed_cumulants_vanish(const TwoBandsTable& t) {
  const PartialRTable r = compute_partial_r(t);
  for (std::size_t m = 1; m <= r.left_order(); ++m) {
    for (std::size_t n = 1; n <= r.right_order(); ++n) {
      if (sgn(r(m, n)) != 0) return false;
    }
  }
  return true;
}

}  // namespace bifree
