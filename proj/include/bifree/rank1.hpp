#pragma once

// Two-faced systems with [a_i, b_j] = lambda_ij P, where P is the idempotent
// with P x P = phi(x) P. All moments follow from the coefficients matrix and
// the two-bands moments phi(a_{i1} ... a_{ip} b_{j1} ... b_{jq}).

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "bifree/pair_oracle.hpp"
#include "bifree/rational.hpp"

namespace bifree {

/// A variable of the system: left variable a_index or right variable b_index.
struct IndexLetter {
  Side side;
  std::size_t index;
  friend bool operator==(const IndexLetter&, const IndexLetter&) = default;
};

using Word = std::vector<IndexLetter>;

struct Band {
  Side side;
  std::size_t first;  // inclusive, 0-based
  std::size_t last;   // inclusive
  friend bool operator==(const Band&, const Band&) = default;
};

struct BandDecomposition {
  std::vector<Band> bands;
  bool starts_left = false;
};

/// Maximal runs of same-side letters; the empty word has no bands.
BandDecomposition band_decompose(const Word& w);

/// Every word over the given variables of length <= max_len, ordered by
/// length, then lexicographically with left letters before right letters.
std::vector<Word> all_words(std::size_t left_count, std::size_t right_count, std::size_t max_len);

/// Canonical two-bands word: left indices followed by right indices.
struct IJWord {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  std::size_t size() const { return left.size() + right.size(); }
  friend auto operator<=>(const IJWord&, const IJWord&) = default;
};

/// Every IJ-word of total length <= cap, ordered by (length, left, right).
std::vector<IJWord> ij_words(std::size_t left_count, std::size_t right_count, std::size_t cap);

/// Linear combination of the elements P z_{i1} ... z_{ip} z_{j1} ... z_{jq}.
using VElement = std::map<IJWord, Rational>;

class Rank1System {
 public:
  /// `two_bands` must hold exactly the IJ-words of length <= cap, with the
  /// empty word mapped to 1. Throws std::invalid_argument otherwise.
  Rank1System(std::size_t left_count, std::size_t right_count, RationalMatrix lambda,
              std::map<IJWord, Rational> two_bands, std::size_t cap);

  std::size_t left_count() const { return left_count_; }
  std::size_t right_count() const { return right_count_; }
  std::size_t cap() const { return cap_; }
  const RationalMatrix& lambda() const { return lambda_; }
  const std::map<IJWord, Rational>& two_bands() const { return two_bands_; }

  /// Throws CapExceeded for words longer than cap().
  const Rational& two_bands_moment(const IJWord& w) const;

  friend bool operator==(const Rank1System&, const Rank1System&) = default;

 private:
  std::size_t left_count_;
  std::size_t right_count_;
  RationalMatrix lambda_;
  std::map<IJWord, Rational> two_bands_;
  std::size_t cap_;
};

/// Right multiplication by z_k on the span of the P z_{i..} z_{j..}. A right
/// letter is appended; a left letter is moved through the right block, each
/// commutator contributing -phi(i-block j_1..j_{t-1}) lambda_{k,j_t} P z_{j_{t+1}}..z_{j_q}.
VElement apply_t(const Rank1System& s, const VElement& v, IndexLetter k);

/// phi(z_{k1} ... z_{kr}) from the T-recursion starting at P.
Rational mixed_moment(const Rank1System& s, const Word& w);

/// Single-pair systems only: coefficients add and two-bands moments combine
/// by bi-free convolution. Throws UnsupportedIndexSets for larger index sets
/// and BoxMismatch if the caps differ.
Rank1System biconvolve_rank1(const Rank1System& s1, const Rank1System& s2);

/// Two-bands moments phi(a^m b^n), m + n <= cap, of a single-pair system,
/// laid out on the box (cap, cap); entries with m + n > cap are 0.
TwoBandsTable padded_table(const Rank1System& s);

/// Reads the coefficients matrix off the commutators (checked on the reliable
/// basis words) and the two-bands moments off the vacuum expectations.
/// Throws NotRank1 if a commutator is not a multiple of P, TruncationUnsound
/// if cap exceeds the model's exactness bound.
Rank1System extract_system(const ProductState& p, std::span<const ProductOperator> left,
                           std::span<const ProductOperator> right, std::size_t cap);

Rank1System extract_system(const TwoFacedPairRep& rep, std::size_t cap);

}  // namespace bifree
