#pragma once

// Brute-force operator model for bi-free families: pointed vector spaces,
// their truncated free product and the left/right actions on it.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "bifree/partial_r.hpp"
#include "bifree/rational.hpp"

namespace bifree {

enum class Side : std::uint8_t { Left, Right };

/// Dense rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows = 0, std::size_t cols = 0) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix operator-(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix operator*(const Rational& c, const RationalMatrix& x);
RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y);

inline constexpr std::size_t kUnboundedLength = std::numeric_limits<std::size_t>::max();

/// Finite-dimensional space with state vector e_0; X° = span(e_1, ..., e_{dim-1}).
/// Models obtained by truncating an infinite-dimensional construction mark the
/// coordinates on which commutators are still faithful: e_0 .. e_{reliable_dim-1}.
struct PointedSpace {
  std::size_t dim = 1;
  std::size_t reliable_dim = 1;
};

/// Left and right variables of one factor, acting on a pointed space.
struct TwoFacedPairRep {
  PointedSpace space;
  std::vector<RationalMatrix> left_ops;
  std::vector<RationalMatrix> right_ops;
  /// Words up to this length have the same vacuum moments as the untruncated model.
  std::size_t exact_word_length = kUnboundedLength;
};

/// Throws std::invalid_argument if an operator has the wrong shape.
void validate(const TwoFacedPairRep& rep);

/// One tensor slot: a basis vector e_coord (coord >= 1) of X°_factor.
struct Slot {
  std::uint32_t factor;
  std::uint32_t coord;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Basis vector of the free product: empty word = xi, otherwise an
/// alternating tensor e_{c1} ⊗ ... ⊗ e_{cn} with adjacent factors distinct.
using TensorWord = std::vector<Slot>;

/// Orders words by (length, factor sequence, coordinate sequence).
struct TensorWordLess {
  bool operator()(const TensorWord& x, const TensorWord& y) const;
};

using ProductVector = std::map<TensorWord, Rational, TensorWordLess>;

/// Free product of the factors' pointed spaces, truncated to tensor words of
/// length <= max_word_len.
class ProductState {
 public:
  ProductState(std::vector<TwoFacedPairRep> factors, std::size_t max_word_len);

  const std::vector<TwoFacedPairRep>& factors() const { return factors_; }
  std::size_t max_word_len() const { return max_word_len_; }

  /// Longest operator word whose vacuum expectation is free of truncation error.
  std::size_t exactness_bound() const;

  /// Maximum tensor length kept when applying operators; a single factor is
  /// its own free product and is never truncated.
  std::size_t truncation_limit() const { return factors_.size() >= 2 ? max_word_len_ : kUnboundedLength; }

  /// All basis words, in TensorWordLess order. Size grows geometrically with
  /// max_word_len; meant for small models.
  std::vector<TensorWord> basis() const;

  /// Basis words on which commutators of left and right actions are computed
  /// without truncation error.
  bool is_reliable(const TensorWord& w) const;

 private:
  std::vector<TwoFacedPairRep> factors_;
  std::size_t max_word_len_;
};

/// A single factor is its own free product (no truncation occurs).
ProductState single_factor(const TwoFacedPairRep& rep);

ProductVector vacuum_vector();

struct FactorAction {
  Side side;
  std::size_t factor;
  RationalMatrix op;
};

/// Linear combination of left/right actions lambda_k(T), rho_k(T).
class ProductOperator {
 public:
  ProductOperator() = default;
  ProductOperator(Rational coefficient, FactorAction action);

  const std::vector<std::pair<Rational, FactorAction>>& terms() const { return terms_; }

  /// Applies the operator; components longer than max_len are dropped.
  ProductVector apply(const ProductVector& v, std::size_t max_len) const;

  friend ProductOperator operator+(ProductOperator x, const ProductOperator& y);
  friend ProductOperator operator*(const Rational& c, ProductOperator x);

 private:
  std::vector<std::pair<Rational, FactorAction>> terms_;
};

/// lambda_k(T): T acts on the first tensor slot. Throws FactorMismatch if k is
/// out of range or T has the wrong size for factor k.
ProductOperator left_action(const ProductState& p, std::size_t k, const RationalMatrix& t);
/// rho_k(T): T acts on the last tensor slot.
ProductOperator right_action(const ProductState& p, std::size_t k, const RationalMatrix& t);

/// Matrix of the operator in the basis() order.
RationalMatrix materialize(const ProductState& p, const ProductOperator& op);

/// phi_xi(z_1 z_2 ... z_r). Throws TruncationUnsound if r exceeds exactness_bound().
Rational vacuum_expectation(const ProductState& p, std::span<const ProductOperator> product);

/// A letter of a joint moment: variable `var` of the given side of factor `factor`.
struct Letter {
  Side side;
  std::size_t factor;
  std::size_t var;
};

/// phi_xi of the product of lambda_factor(left_ops[var]) / rho_factor(right_ops[var]).
Rational joint_moment(const ProductState& p, std::span<const Letter> word);

/// Table phi_xi(a^m b^n) for product-space operators a, b.
TwoBandsTable two_bands_table(const ProductState& p, const ProductOperator& a, const ProductOperator& b,
                              std::size_t left_order, std::size_t right_order);

/// Two-bands table of a single factor's variables left_ops[i], right_ops[j].
TwoBandsTable two_bands_table(const TwoFacedPairRep& rep, std::size_t left_var, std::size_t right_var,
                              std::size_t left_order, std::size_t right_order);

/// A vector h together with the functional h* used for annihilation.
struct FockVectors {
  std::vector<Rational> h;
  std::vector<Rational> h_star;
};

/// Bi-free Gaussian system on the full Fock space over Q^d truncated to words
/// of length <= cutoff: left z_i = l(h) + l*(h*), right z_j = r(h) + r*(h*).
/// Pairings <x, y> are the bilinear sum x_k y_k.
TwoFacedPairRep gaussian_pair_rep(const std::vector<FockVectors>& left, const std::vector<FockVectors>& right,
                                  std::size_t cutoff);

/// Single-pair convenience overload.
TwoFacedPairRep gaussian_pair_rep(const FockVectors& left, const FockVectors& right, std::size_t cutoff);

/// Pair (w00 S + w01 S*, w10 S + w11 S*) with S the unilateral shift truncated
/// to Q^dim and state vector e_0. Requires dim >= 2.
TwoFacedPairRep shift_pair_rep(std::size_t dim, const RationalMatrix& omega);

}  // namespace bifree
