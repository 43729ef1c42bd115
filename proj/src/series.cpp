#include "bifree/series.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "bifree/errors.hpp"

namespace bifree {

Series1::Series1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("Series1 needs at least one coefficient");
}

Series1 Series1::constant(const Rational& c, std::size_t order) {
  Series1 f(order);
  f[0] = c;
  return f;
}

Series1 Series1::identity(std::size_t order) {
  Series1 f(order);
  if (order >= 1) f[1] = 1;
  return f;
}

Series1 Series1::truncated(std::size_t order) const {
  if (order > this->order()) throw OrderTooSmall("cannot extend a truncated series");
  return Series1(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

Series1 operator+(const Series1& f, const Series1& g) {
  Series1 out(std::min(f.order(), g.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out[k] = f[k] + g[k];
  return out;
}

Series1 operator-(const Series1& f, const Series1& g) {
  Series1 out(std::min(f.order(), g.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out[k] = f[k] - g[k];
  return out;
}

Series1 operator-(const Series1& f) {
  Series1 out(f.order());
  for (std::size_t k = 0; k <= out.order(); ++k) out[k] = -f[k];
  return out;
}

Series1 operator*(const Series1& f, const Series1& g) {
  const std::size_t n = std::min(f.order(), g.order());
  Series1 out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(f[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

Series1 operator*(const Rational& c, const Series1& f) {
  Series1 out(f.order());
  for (std::size_t k = 0; k <= out.order(); ++k) out[k] = c * f[k];
  return out;
}

Series1 shift_up(const Series1& f) {
  Series1 out(f.order() + 1);
  for (std::size_t k = 0; k <= f.order(); ++k) out[k + 1] = f[k];
  return out;
}

Series1 shift_down(const Series1& f) {
  if (f.order() == 0) throw OrderTooSmall("shift_down of an order-0 series");
  if (sgn(f[0]) != 0) throw std::invalid_argument("shift_down needs a zero constant term");
  Series1 out(f.order() - 1);
  for (std::size_t k = 0; k <= out.order(); ++k) out[k] = f[k + 1];
  return out;
}

Series1 reciprocal(const Series1& f) {
  if (sgn(f[0]) == 0) throw ZeroConstantTerm("reciprocal of a series with f[0] = 0");
  const Rational inv0 = 1 / f[0];
  Series1 g(f.order());
  g[0] = inv0;
  for (std::size_t k = 1; k <= f.order(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += f[i] * g[k - i];
    g[k] = -acc * inv0;
  }
  return g;
}

// Lagrange inversion: with phi(w) = w / f(w), [t^n] g = (1/n) [w^{n-1}] phi^n.
Series1 revert(const Series1& f) {
  if (f.order() == 0 || sgn(f[0]) != 0 || sgn(f[1]) == 0) {
    throw NotInvertible("revert needs f[0] = 0 and f[1] != 0");
  }
  const std::size_t n = f.order();
  Series1 g(n);
  const Series1 phi = reciprocal(shift_down(f));  // order n - 1
  Series1 power = Series1::constant(1, n - 1);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * phi;
    g[k] = power[k - 1] / static_cast<long>(k);
  }
  return g;
}

Series1 compose(const Series1& f, const Series1& g) {
  if (sgn(g[0]) != 0) throw NonzeroConstantSubstitution("inner series has a nonzero constant term");
  const std::size_t n = std::min(f.order(), g.order());
  const Series1 inner = g.truncated(n);
  // Horner: f0 + g (f1 + g (f2 + ...)).
  Series1 acc = Series1::constant(f[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = inner * acc;
    acc[0] += f[k];
  }
  return acc;
}

Series2 Series2::constant(const Rational& c, std::size_t left_order, std::size_t right_order) {
  Series2 f(left_order, right_order);
  f(0, 0) = c;
  return f;
}

Series2 Series2::from_left(const Series1& f, std::size_t right_order) {
  Series2 out(f.order(), right_order);
  for (std::size_t m = 0; m <= f.order(); ++m) out(m, 0) = f[m];
  return out;
}

Series2 Series2::from_right(std::size_t left_order, const Series1& g) {
  Series2 out(left_order, g.order());
  for (std::size_t n = 0; n <= g.order(); ++n) out(0, n) = g[n];
  return out;
}

Series2 Series2::truncated(std::size_t left_order, std::size_t right_order) const {
  if (left_order > left_order_ || right_order > right_order_) {
    throw OrderTooSmall("cannot extend a truncated series");
  }
  Series2 out(left_order, right_order);
  for (std::size_t m = 0; m <= left_order; ++m) {
    for (std::size_t n = 0; n <= right_order; ++n) out(m, n) = (*this)(m, n);
  }
  return out;
}

Series2 operator+(const Series2& f, const Series2& g) {
  Series2 out(std::min(f.left_order(), g.left_order()), std::min(f.right_order(), g.right_order()));
  for (std::size_t m = 0; m <= out.left_order(); ++m) {
    for (std::size_t n = 0; n <= out.right_order(); ++n) out(m, n) = f(m, n) + g(m, n);
  }
  return out;
}

Series2 operator-(const Series2& f, const Series2& g) {
  Series2 out(std::min(f.left_order(), g.left_order()), std::min(f.right_order(), g.right_order()));
  for (std::size_t m = 0; m <= out.left_order(); ++m) {
    for (std::size_t n = 0; n <= out.right_order(); ++n) out(m, n) = f(m, n) - g(m, n);
  }
  return out;
}

Series2 operator*(const Series2& f, const Series2& g) {
  const std::size_t mm = std::min(f.left_order(), g.left_order());
  const std::size_t nn = std::min(f.right_order(), g.right_order());
  Series2 out(mm, nn);
  for (std::size_t p = 0; p <= mm; ++p) {
    for (std::size_t q = 0; q <= nn; ++q) {
      const Rational& fpq = f(p, q);
      if (sgn(fpq) == 0) continue;
      for (std::size_t m = p; m <= mm; ++m) {
        for (std::size_t n = q; n <= nn; ++n) out(m, n) += fpq * g(m - p, n - q);
      }
    }
  }
  return out;
}

Series2 operator*(const Rational& c, const Series2& f) {
  Series2 out(f.left_order(), f.right_order());
  for (std::size_t m = 0; m <= f.left_order(); ++m) {
    for (std::size_t n = 0; n <= f.right_order(); ++n) out(m, n) = c * f(m, n);
  }
  return out;
}

Series2 reciprocal(const Series2& f) {
  if (sgn(f(0, 0)) == 0) throw ZeroConstantTerm("reciprocal of a series with f(0,0) = 0");
  const Rational inv0 = 1 / f(0, 0);
  const std::size_t mm = f.left_order();
  const std::size_t nn = f.right_order();
  Series2 g(mm, nn);
  for (std::size_t m = 0; m <= mm; ++m) {
    for (std::size_t n = 0; n <= nn; ++n) {
      if (m == 0 && n == 0) {
        g(0, 0) = inv0;
        continue;
      }
      Rational acc = 0;
      for (std::size_t p = 0; p <= m; ++p) {
        for (std::size_t q = 0; q <= n; ++q) {
          if (p == 0 && q == 0) continue;
          acc += f(p, q) * g(m - p, n - q);
        }
      }
      g(m, n) = -acc * inv0;
    }
  }
  return g;
}

namespace {

std::vector<Series1> powers(const Series1& f, std::size_t count) {
  std::vector<Series1> out;
  out.reserve(count + 1);
  out.push_back(Series1::constant(1, f.order()));
  for (std::size_t p = 1; p <= count; ++p) out.push_back(out.back() * f);
  return out;
}

}  // namespace

Series2 compose1_into_2(const Series2& h, const Series1& f, const Series1& g) {
  if (sgn(f[0]) != 0 || sgn(g[0]) != 0) {
    throw NonzeroConstantSubstitution("substituted series must vanish at 0");
  }
  const std::size_t mm = std::min(h.left_order(), f.order());
  const std::size_t nn = std::min(h.right_order(), g.order());
  const auto fp = powers(f.truncated(mm), mm);
  const auto gq = powers(g.truncated(nn), nn);

  Series2 out(mm, nn);
  for (std::size_t q = 0; q <= nn; ++q) {
    // A_q(t) = sum_p H[p][q] f(t)^p
    Series1 column(mm);
    for (std::size_t p = 0; p <= mm; ++p) {
      const Rational& hpq = h(p, q);
      if (sgn(hpq) == 0) continue;
      for (std::size_t i = p; i <= mm; ++i) column[i] += hpq * fp[p][i];
    }
    for (std::size_t i = 0; i <= mm; ++i) {
      if (sgn(column[i]) == 0) continue;
      for (std::size_t j = q; j <= nn; ++j) out(i, j) += column[i] * gq[q][j];
    }
  }
  return out;
}

}  // namespace bifree
