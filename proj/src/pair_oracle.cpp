#include "bifree/pair_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bifree/errors.hpp"

namespace bifree {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

void require_same_shape(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix shape mismatch");
}

}  // namespace

RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y) {
  require_same_shape(x, y);
  RationalMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) + y(i, j);
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& x, const RationalMatrix& y) {
  require_same_shape(x, y);
  RationalMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) - y(i, j);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Rational& xik = x(i, k);
      if (sgn(xik) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        if (sgn(y(k, j)) != 0) out(i, j) += xik * y(k, j);
      }
    }
  }
  return out;
}

RationalMatrix operator*(const Rational& c, const RationalMatrix& x) {
  RationalMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = c * x(i, j);
  }
  return out;
}

RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y) { return x * y - y * x; }

void validate(const TwoFacedPairRep& rep) {
  const std::size_t d = rep.space.dim;
  if (d == 0) throw std::invalid_argument("pointed space needs the state vector");
  if (rep.space.reliable_dim == 0 || rep.space.reliable_dim > d) {
    throw std::invalid_argument("reliable_dim must lie in [1, dim]");
  }
  for (const auto* ops : {&rep.left_ops, &rep.right_ops}) {
    for (const auto& op : *ops) {
      if (op.rows() != d || op.cols() != d) {
        throw std::invalid_argument("operator is " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                                    " on a space of dimension " + std::to_string(d));
      }
    }
  }
}

bool TensorWordLess::operator()(const TensorWord& x, const TensorWord& y) const {
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].factor != y[i].factor) return x[i].factor < y[i].factor;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].coord != y[i].coord) return x[i].coord < y[i].coord;
  }
  return false;
}

ProductState::ProductState(std::vector<TwoFacedPairRep> factors, std::size_t max_word_len)
    : factors_(std::move(factors)), max_word_len_(max_word_len) {
  if (factors_.empty()) throw std::invalid_argument("free product needs at least one factor");
  for (const auto& f : factors_) validate(f);
}

std::size_t ProductState::exactness_bound() const {
  std::size_t bound = factors_.size() >= 2 ? max_word_len_ : kUnboundedLength;
  for (const auto& f : factors_) bound = std::min(bound, f.exact_word_length);
  return bound;
}

namespace {

void append_words_of_length(const ProductState& p, std::size_t length, TensorWord& prefix,
                            std::vector<std::vector<std::uint32_t>>& factor_seqs) {
  if (prefix.size() == length) {
    std::vector<std::uint32_t> seq;
    for (const auto& s : prefix) seq.push_back(s.factor);
    factor_seqs.push_back(std::move(seq));
    return;
  }
  for (std::uint32_t k = 0; k < p.factors().size(); ++k) {
    if (p.factors()[k].space.dim < 2) continue;
    if (!prefix.empty() && prefix.back().factor == k) continue;
    prefix.push_back(Slot{k, 1});
    append_words_of_length(p, length, prefix, factor_seqs);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TensorWord> ProductState::basis() const {
  std::vector<TensorWord> out{TensorWord{}};
  const std::size_t max_len = std::min<std::size_t>(max_word_len_, factors_.size() >= 2 ? max_word_len_ : 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::uint32_t>> factor_seqs;
    TensorWord prefix;
    append_words_of_length(*this, len, prefix, factor_seqs);
    for (const auto& seq : factor_seqs) {
      // Odometer over coordinates, last slot fastest.
      TensorWord w;
      for (auto k : seq) w.push_back(Slot{k, 1});
      bool advanced = true;
      while (advanced) {
        out.push_back(w);
        advanced = false;
        for (std::size_t i = len; i-- > 0;) {
          if (w[i].coord + 1 < factors_[w[i].factor].space.dim) {
            ++w[i].coord;
            advanced = true;
            break;
          }
          w[i].coord = 1;
        }
      }
    }
  }
  return out;
}

bool ProductState::is_reliable(const TensorWord& w) const {
  if (factors_.size() >= 2 && w.size() + 1 > max_word_len_) return false;
  if (w.size() == 1) return w.front().coord < factors_[w.front().factor].space.reliable_dim;
  return true;
}

ProductState single_factor(const TwoFacedPairRep& rep) { return ProductState({rep}, 1); }

ProductVector vacuum_vector() {
  ProductVector v;
  v.emplace(TensorWord{}, Rational(1));
  return v;
}

ProductOperator::ProductOperator(Rational coefficient, FactorAction action) {
  terms_.emplace_back(std::move(coefficient), std::move(action));
}

ProductOperator operator+(ProductOperator x, const ProductOperator& y) {
  x.terms_.insert(x.terms_.end(), y.terms_.begin(), y.terms_.end());
  return x;
}

ProductOperator operator*(const Rational& c, ProductOperator x) {
  for (auto& term : x.terms_) term.first *= c;
  return x;
}

namespace {

void act(const FactorAction& a, const Rational& c, const TensorWord& w, std::size_t max_len, ProductVector& out) {
  const RationalMatrix& t = a.op;
  const auto k = static_cast<std::uint32_t>(a.factor);
  const bool left = a.side == Side::Left;
  const bool touches = !w.empty() && (left ? w.front().factor : w.back().factor) == k;

  if (touches) {
    const std::uint32_t col = left ? w.front().coord : w.back().coord;
    if (sgn(t(0, col)) != 0 && w.size() - 1 <= max_len) {
      TensorWord shorter = left ? TensorWord(w.begin() + 1, w.end()) : TensorWord(w.begin(), w.end() - 1);
      out[std::move(shorter)] += c * t(0, col);
    }
    if (w.size() > max_len) return;
    for (std::uint32_t r = 1; r < t.rows(); ++r) {
      if (sgn(t(r, col)) == 0) continue;
      TensorWord same = w;
      (left ? same.front() : same.back()).coord = r;
      out[std::move(same)] += c * t(r, col);
    }
    return;
  }

  if (sgn(t(0, 0)) != 0 && w.size() <= max_len) out[w] += c * t(0, 0);
  if (w.size() + 1 > max_len) return;
  for (std::uint32_t r = 1; r < t.rows(); ++r) {
    if (sgn(t(r, 0)) == 0) continue;
    TensorWord longer;
    longer.reserve(w.size() + 1);
    if (left) longer.push_back(Slot{k, r});
    longer.insert(longer.end(), w.begin(), w.end());
    if (!left) longer.push_back(Slot{k, r});
    out[std::move(longer)] += c * t(r, 0);
  }
}

void drop_zeros(ProductVector& v) {
  std::erase_if(v, [](const auto& kv) { return sgn(kv.second) == 0; });
}

void prune(ProductVector& v, std::size_t max_len) {
  std::erase_if(v, [max_len](const auto& kv) { return kv.first.size() > max_len; });
}

Rational vacuum_component(const ProductVector& v) {
  auto it = v.find(TensorWord{});
  return it == v.end() ? Rational(0) : it->second;
}

ProductOperator make_action(const ProductState& p, Side side, std::size_t k, const RationalMatrix& t) {
  if (k >= p.factors().size()) {
    throw FactorMismatch("factor " + std::to_string(k) + " of " + std::to_string(p.factors().size()));
  }
  const std::size_t d = p.factors()[k].space.dim;
  if (t.rows() != d || t.cols() != d) {
    throw FactorMismatch("operator size does not match factor " + std::to_string(k) + " of dimension " +
                         std::to_string(d));
  }
  return ProductOperator(Rational(1), FactorAction{side, k, t});
}

void require_exact(const ProductState& p, std::size_t word_length) {
  if (word_length > p.exactness_bound()) {
    throw TruncationUnsound("word of length " + std::to_string(word_length) + " exceeds exactness bound " +
                            std::to_string(p.exactness_bound()));
  }
}

}  // namespace

ProductVector ProductOperator::apply(const ProductVector& v, std::size_t max_len) const {
  ProductVector out;
  for (const auto& [word, coeff] : v) {
    for (const auto& [scale, action] : terms_) act(action, coeff * scale, word, max_len, out);
  }
  drop_zeros(out);
  return out;
}

ProductOperator left_action(const ProductState& p, std::size_t k, const RationalMatrix& t) {
  return make_action(p, Side::Left, k, t);
}

ProductOperator right_action(const ProductState& p, std::size_t k, const RationalMatrix& t) {
  return make_action(p, Side::Right, k, t);
}

RationalMatrix materialize(const ProductState& p, const ProductOperator& op) {
  const auto basis = p.basis();
  const std::size_t limit = std::min(p.truncation_limit(), p.max_word_len());
  RationalMatrix out(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    ProductVector column;
    column.emplace(basis[j], Rational(1));
    for (const auto& [word, coeff] : op.apply(column, limit)) {
      const auto it = std::lower_bound(basis.begin(), basis.end(), word, TensorWordLess{});
      out(static_cast<std::size_t>(it - basis.begin()), j) = coeff;
    }
  }
  return out;
}

Rational vacuum_expectation(const ProductState& p, std::span<const ProductOperator> product) {
  require_exact(p, product.size());
  const std::size_t limit = p.truncation_limit();
  ProductVector v = vacuum_vector();
  // After applying product[i], i operators remain, each changing the length by
  // at most one: longer components cannot reach the vacuum.
  for (std::size_t i = product.size(); i-- > 0;) {
    v = product[i].apply(v, std::min(limit, i));
    if (v.empty()) return 0;
  }
  return vacuum_component(v);
}

Rational joint_moment(const ProductState& p, std::span<const Letter> word) {
  std::vector<ProductOperator> ops;
  ops.reserve(word.size());
  for (const auto& letter : word) {
    if (letter.factor >= p.factors().size()) throw FactorMismatch("letter names a missing factor");
    const auto& f = p.factors()[letter.factor];
    const auto& vars = letter.side == Side::Left ? f.left_ops : f.right_ops;
    if (letter.var >= vars.size()) throw FactorMismatch("letter names a missing variable");
    ops.push_back(make_action(p, letter.side, letter.factor, vars[letter.var]));
  }
  return vacuum_expectation(p, ops);
}

TwoBandsTable two_bands_table(const ProductState& p, const ProductOperator& a, const ProductOperator& b,
                              std::size_t left_order, std::size_t right_order) {
  require_exact(p, left_order + right_order);
  const std::size_t limit = p.truncation_limit();
  TwoBandsTable table(left_order, right_order);
  ProductVector vb = vacuum_vector();
  for (std::size_t n = 0; n <= right_order; ++n) {
    if (n > 0) vb = b.apply(vb, std::min(limit, right_order - n + left_order));
    ProductVector va = vb;
    prune(va, left_order);
    for (std::size_t m = 0; m <= left_order; ++m) {
      if (m > 0) va = a.apply(va, std::min(limit, left_order - m));
      table(m, n) = vacuum_component(va);
    }
  }
  return table;
}

TwoBandsTable two_bands_table(const TwoFacedPairRep& rep, std::size_t left_var, std::size_t right_var,
                              std::size_t left_order, std::size_t right_order) {
  if (left_var >= rep.left_ops.size() || right_var >= rep.right_ops.size()) {
    throw FactorMismatch("variable index out of range");
  }
  const ProductState p = single_factor(rep);
  return two_bands_table(p, left_action(p, 0, rep.left_ops[left_var]), right_action(p, 0, rep.right_ops[right_var]),
                         left_order, right_order);
}

namespace {

using FockWord = std::vector<std::uint32_t>;

struct FockBasis {
  std::vector<FockWord> words;
  std::map<FockWord, std::size_t> index;
};

FockBasis fock_basis(std::size_t d, std::size_t cutoff) {
  FockBasis basis;
  basis.words.push_back({});
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= cutoff; ++len) {
    const std::size_t end = basis.words.size();
    for (std::size_t w = begin; w < end; ++w) {
      for (std::uint32_t i = 0; i < d; ++i) {
        FockWord next = basis.words[w];
        next.push_back(i);
        basis.words.push_back(std::move(next));
      }
    }
    begin = end;
  }
  for (std::size_t i = 0; i < basis.words.size(); ++i) basis.index.emplace(basis.words[i], i);
  return basis;
}

// z = creation(h) + annihilation(h*), both acting at the front (left) or back (right).
RationalMatrix fock_field(const FockBasis& basis, const FockVectors& v, Side side, std::size_t cutoff) {
  const std::size_t n = basis.words.size();
  RationalMatrix z(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const FockWord& w = basis.words[col];
    if (w.size() < cutoff) {
      for (std::uint32_t i = 0; i < v.h.size(); ++i) {
        if (sgn(v.h[i]) == 0) continue;
        FockWord longer;
        if (side == Side::Left) longer.push_back(i);
        longer.insert(longer.end(), w.begin(), w.end());
        if (side == Side::Right) longer.push_back(i);
        z(basis.index.at(longer), col) += v.h[i];
      }
    }
    if (!w.empty()) {
      const std::uint32_t i = side == Side::Left ? w.front() : w.back();
      const FockWord shorter = side == Side::Left ? FockWord(w.begin() + 1, w.end()) : FockWord(w.begin(), w.end() - 1);
      z(basis.index.at(shorter), col) += v.h_star[i];
    }
  }
  return z;
}

}  // namespace

TwoFacedPairRep gaussian_pair_rep(const std::vector<FockVectors>& left, const std::vector<FockVectors>& right,
                                  std::size_t cutoff) {
  if (cutoff < 1) throw std::invalid_argument("Fock cutoff must be >= 1");
  std::size_t d = 0;
  for (const auto* family : {&left, &right}) {
    for (const auto& v : *family) {
      if (d == 0) d = v.h.size();
      if (v.h.size() != d || v.h_star.size() != d || d == 0) {
        throw std::invalid_argument("all Fock vectors must share one positive dimension");
      }
    }
  }
  if (d == 0) throw std::invalid_argument("gaussian_pair_rep needs at least one variable");

  const FockBasis basis = fock_basis(d, cutoff);
  TwoFacedPairRep rep;
  rep.space.dim = basis.words.size();
  // Words shorter than the cutoff.
  rep.space.reliable_dim = static_cast<std::size_t>(
      std::count_if(basis.words.begin(), basis.words.end(), [cutoff](const FockWord& w) { return w.size() < cutoff; }));
  rep.exact_word_length = 2 * cutoff + 1;
  for (const auto& v : left) rep.left_ops.push_back(fock_field(basis, v, Side::Left, cutoff));
  for (const auto& v : right) rep.right_ops.push_back(fock_field(basis, v, Side::Right, cutoff));
  return rep;
}

TwoFacedPairRep gaussian_pair_rep(const FockVectors& left, const FockVectors& right, std::size_t cutoff) {
  return gaussian_pair_rep(std::vector<FockVectors>{left}, std::vector<FockVectors>{right}, cutoff);
}

TwoFacedPairRep shift_pair_rep(std::size_t dim, const RationalMatrix& omega) {
  if (dim < 2) throw std::invalid_argument("shift model needs dim >= 2");
  if (omega.rows() != 2 || omega.cols() != 2) throw std::invalid_argument("omega must be 2x2");
  RationalMatrix shift(dim, dim);
  for (std::size_t k = 0; k + 1 < dim; ++k) shift(k + 1, k) = 1;
  RationalMatrix adjoint(dim, dim);
  for (std::size_t k = 0; k + 1 < dim; ++k) adjoint(k, k + 1) = 1;

  TwoFacedPairRep rep;
  rep.space = PointedSpace{dim, dim - 1};
  rep.exact_word_length = 2 * dim - 1;
  rep.left_ops.push_back(omega(0, 0) * shift + omega(0, 1) * adjoint);
  rep.right_ops.push_back(omega(1, 0) * shift + omega(1, 1) * adjoint);
  return rep;
}

}  // namespace bifree
