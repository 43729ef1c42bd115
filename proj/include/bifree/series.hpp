#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bifree/rational.hpp"

namespace bifree {

/// Truncated power series c_0 + c_1 t + ... + c_N t^N over the rationals.
///
/// A series of order N carries no information about t^{N+1} and beyond, so
/// every binary operation truncates to the smaller operand order.
class Series1 {
 public:
  explicit Series1(std::size_t order = 0) : coeffs_(order + 1) {}
  /// Takes ownership of the coefficient list; order = size - 1 (must be non-empty).
  explicit Series1(std::vector<Rational> coeffs);

  static Series1 constant(const Rational& c, std::size_t order);
  /// The series t.
  static Series1 identity(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Drops coefficients above `order`; `order` may not exceed order().
  Series1 truncated(std::size_t order) const;

  friend bool operator==(const Series1&, const Series1&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Series1 operator+(const Series1& f, const Series1& g);
Series1 operator-(const Series1& f, const Series1& g);
Series1 operator-(const Series1& f);
Series1 operator*(const Series1& f, const Series1& g);
Series1 operator*(const Rational& c, const Series1& f);

/// t * f, one order higher.
Series1 shift_up(const Series1& f);
/// f / t; requires f[0] = 0 and order >= 1.
Series1 shift_down(const Series1& f);

/// Multiplicative inverse. Throws ZeroConstantTerm if f[0] = 0.
Series1 reciprocal(const Series1& f);

/// Compositional inverse g with f(g(t)) = t, computed by Lagrange inversion.
/// Throws NotInvertible unless f[0] = 0 and f[1] != 0.
Series1 revert(const Series1& f);

/// f(g(t)), truncated to min(f.order(), g.order()). Throws
/// NonzeroConstantSubstitution if g[0] != 0.
Series1 compose(const Series1& f, const Series1& g);

/// Truncated series in two commuting variables t (left) and s (right) on the
/// box [0, M] x [0, N].
class Series2 {
 public:
  explicit Series2(std::size_t left_order = 0, std::size_t right_order = 0)
      : left_order_(left_order), right_order_(right_order), coeffs_((left_order + 1) * (right_order + 1)) {}

  static Series2 constant(const Rational& c, std::size_t left_order, std::size_t right_order);
  /// f(t) viewed as a two-variable series on the box (f.order(), right_order).
  static Series2 from_left(const Series1& f, std::size_t right_order);
  /// g(s) viewed as a two-variable series on the box (left_order, g.order()).
  static Series2 from_right(std::size_t left_order, const Series1& g);

  std::size_t left_order() const { return left_order_; }
  std::size_t right_order() const { return right_order_; }

  const Rational& operator()(std::size_t m, std::size_t n) const { return coeffs_[index(m, n)]; }
  Rational& operator()(std::size_t m, std::size_t n) { return coeffs_[index(m, n)]; }

  Series2 truncated(std::size_t left_order, std::size_t right_order) const;

  friend bool operator==(const Series2&, const Series2&) = default;

 private:
  std::size_t index(std::size_t m, std::size_t n) const { return m * (right_order_ + 1) + n; }

  std::size_t left_order_;
  std::size_t right_order_;
  std::vector<Rational> coeffs_;
};

Series2 operator+(const Series2& f, const Series2& g);
Series2 operator-(const Series2& f, const Series2& g);
Series2 operator*(const Series2& f, const Series2& g);
Series2 operator*(const Rational& c, const Series2& f);

/// Throws ZeroConstantTerm if f(0,0) = 0.
Series2 reciprocal(const Series2& f);

/// H(f(t), g(s)) on the box (min(M, f.order()), min(N, g.order())).
/// Throws NonzeroConstantSubstitution if f[0] or g[0] is nonzero.
Series2 compose1_into_2(const Series2& h, const Series1& f, const Series1& g);

}  // namespace bifree
