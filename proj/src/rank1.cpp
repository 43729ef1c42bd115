#include "bifree/rank1.hpp"

#include <stdexcept>
#include <string>

#include "bifree/errors.hpp"
#include "bifree/partial_r.hpp"

namespace bifree {

BandDecomposition band_decompose(const Word& w) {
  BandDecomposition out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (out.bands.empty() || out.bands.back().side != w[i].side) {
      out.bands.push_back(Band{w[i].side, i, i});
    } else {
      out.bands.back().last = i;
    }
  }
  out.starts_left = !w.empty() && w.front().side == Side::Left;
  return out;
}

namespace {

void append_tuples(std::size_t alphabet, std::size_t length, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> t(length, 0);
  if (length > 0 && alphabet == 0) return;
  while (true) {
    out.push_back(t);
    std::size_t i = length;
    while (i > 0 && t[i - 1] + 1 == alphabet) t[--i] = 0;
    if (i == 0) return;
    ++t[i - 1];
  }
}

}  // namespace

std::vector<Word> all_words(std::size_t left_count, std::size_t right_count, std::size_t max_len) {
  std::vector<IndexLetter> alphabet;
  for (std::size_t i = 0; i < left_count; ++i) alphabet.push_back(IndexLetter{Side::Left, i});
  for (std::size_t j = 0; j < right_count; ++j) alphabet.push_back(IndexLetter{Side::Right, j});
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::vector<std::size_t>> tuples;
    append_tuples(alphabet.size(), len, tuples);
    for (const auto& t : tuples) {
      Word w;
      for (auto x : t) w.push_back(alphabet[x]);
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<IJWord> ij_words(std::size_t left_count, std::size_t right_count, std::size_t cap) {
  std::vector<IJWord> out;
  for (std::size_t len = 0; len <= cap; ++len) {
    for (std::size_t p = len + 1; p-- > 0;) {
      std::vector<std::vector<std::size_t>> lefts;
      std::vector<std::vector<std::size_t>> rights;
      append_tuples(left_count, p, lefts);
      append_tuples(right_count, len - p, rights);
      for (const auto& l : lefts) {
        for (const auto& r : rights) out.push_back(IJWord{l, r});
      }
    }
  }
  return out;
}

Rank1System::Rank1System(std::size_t left_count, std::size_t right_count, RationalMatrix lambda,
                         std::map<IJWord, Rational> two_bands, std::size_t cap)
    : left_count_(left_count),
      right_count_(right_count),
      lambda_(std::move(lambda)),
      two_bands_(std::move(two_bands)),
      cap_(cap) {
  if (lambda_.rows() != left_count_ || lambda_.cols() != right_count_) {
    throw std::invalid_argument("coefficients matrix must be |I| x |J|");
  }
  const auto expected = ij_words(left_count_, right_count_, cap_);
  if (expected.size() != two_bands_.size()) {
    throw std::invalid_argument("two-bands table has " + std::to_string(two_bands_.size()) + " words, expected " +
                                std::to_string(expected.size()) + " for cap " + std::to_string(cap_));
  }
  for (const auto& w : expected) {
    if (!two_bands_.contains(w)) throw std::invalid_argument("two-bands table is missing a word");
  }
  if (two_bands_.at(IJWord{}) != 1) throw BadNormalization("phi(1) must be 1");
}

const Rational& Rank1System::two_bands_moment(const IJWord& w) const {
  if (w.size() > cap_) {
    throw CapExceeded("two-bands word of length " + std::to_string(w.size()) + " beyond cap " + std::to_string(cap_));
  }
  return two_bands_.at(w);
}

namespace {

void check_letter(const Rank1System& s, IndexLetter k) {
  const std::size_t count = k.side == Side::Left ? s.left_count() : s.right_count();
  if (k.index >= count) throw std::out_of_range("letter index " + std::to_string(k.index) + " out of range");
}

}  // namespace

VElement apply_t(const Rank1System& s, const VElement& v, IndexLetter k) {
  check_letter(s, k);
  VElement out;
  for (const auto& [word, coeff] : v) {
    IJWord moved = word;
    if (k.side == Side::Right) {
      moved.right.push_back(k.index);
      out[std::move(moved)] += coeff;
      continue;
    }
    moved.left.push_back(k.index);
    out[std::move(moved)] += coeff;

    IJWord prefix{word.left, {}};
    for (std::size_t t = 0; t < word.right.size(); ++t) {
      const Rational& lam = s.lambda()(k.index, word.right[t]);
      if (sgn(lam) != 0) {
        IJWord tail{
            {}, std::vector<std::size_t>(word.right.begin() + static_cast<std::ptrdiff_t>(t + 1), word.right.end())};
        out[std::move(tail)] -= coeff * s.two_bands_moment(prefix) * lam;
      }
      prefix.right.push_back(word.right[t]);
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

Rational mixed_moment(const Rank1System& s, const Word& w) {
  VElement v{{IJWord{}, Rational(1)}};
  for (const auto& letter : w) v = apply_t(s, v, letter);
  // P z.. P = phi(z..) P, and phi(P) = 1.
  Rational total = 0;
  for (const auto& [word, coeff] : v) total += coeff * s.two_bands_moment(word);
  return total;
}

TwoBandsTable padded_table(const Rank1System& s) {
  if (s.left_count() != 1 || s.right_count() != 1) {
    throw UnsupportedIndexSets("two-bands table needs exactly one left and one right variable");
  }
  TwoBandsTable t(s.cap(), s.cap());
  for (const auto& [word, value] : s.two_bands()) t(word.left.size(), word.right.size()) = value;
  return t;
}

Rank1System biconvolve_rank1(const Rank1System& s1, const Rank1System& s2) {
  for (const auto* s : {&s1, &s2}) {
    if (s->left_count() != 1 || s->right_count() != 1) {
      throw UnsupportedIndexSets(
          "bi-free convolution of two-bands data is only available for one left and one right "
          "variable");
    }
  }
  if (s1.cap() != s2.cap()) throw BoxMismatch("systems have different caps");
  // R_{m,n} only involves moments in the box [0,m] x [0,n], so the entries
  // with m + n <= cap are unaffected by the zero padding.
  const TwoBandsTable sum = biconvolve(padded_table(s1), padded_table(s2));
  std::map<IJWord, Rational> two_bands;
  for (const auto& w : ij_words(1, 1, s1.cap())) two_bands.emplace(w, sum(w.left.size(), w.right.size()));
  return Rank1System(1, 1, s1.lambda() + s2.lambda(), std::move(two_bands), s1.cap());
}

Rank1System extract_system(const ProductState& p, std::span<const ProductOperator> left,
                           std::span<const ProductOperator> right, std::size_t cap) {
  if (cap > p.exactness_bound()) {
    throw TruncationUnsound("cap " + std::to_string(cap) + " exceeds exactness bound " +
                            std::to_string(p.exactness_bound()));
  }
  const std::size_t limit = p.truncation_limit();
  RationalMatrix lambda(left.size(), right.size());
  for (const auto& w : p.basis()) {
    if (!p.is_reliable(w)) continue;
    ProductVector column;
    column.emplace(w, Rational(1));
    for (std::size_t i = 0; i < left.size(); ++i) {
      const ProductVector a_col = left[i].apply(column, limit);
      for (std::size_t j = 0; j < right.size(); ++j) {
        const ProductVector ab = left[i].apply(right[j].apply(column, limit), limit);
        const ProductVector ba = right[j].apply(a_col, limit);
        ProductVector c = ab;
        for (const auto& [word, coeff] : ba) c[word] -= coeff;
        std::erase_if(c, [](const auto& kv) { return sgn(kv.second) == 0; });
        // [a_i, b_j] = lambda_ij P, where P projects onto xi along X°.
        for (const auto& [word, coeff] : c) {
          if (!w.empty() || !word.empty()) {
            throw NotRank1("commutator [a" + std::to_string(i) + ", b" + std::to_string(j) +
                           "] is not a multiple of P");
          }
          lambda(i, j) = coeff;
        }
      }
    }
  }

  std::map<IJWord, Rational> two_bands;
  for (const auto& word : ij_words(left.size(), right.size(), cap)) {
    std::vector<ProductOperator> ops;
    for (auto i : word.left) ops.push_back(left[i]);
    for (auto j : word.right) ops.push_back(right[j]);
    two_bands.emplace(word, vacuum_expectation(p, ops));
  }
  // phi(P) = <P xi, xi> = 1 in the vector-state model.
  return Rank1System(left.size(), right.size(), std::move(lambda), std::move(two_bands), cap);
}

Rank1System extract_system(const TwoFacedPairRep& rep, std::size_t cap) {
  const ProductState p = single_factor(rep);
  std::vector<ProductOperator> left;
  std::vector<ProductOperator> right;
  for (const auto& op : rep.left_ops) left.push_back(left_action(p, 0, op));
  for (const auto& op : rep.right_ops) right.push_back(right_action(p, 0, op));
  return extract_system(p, left, right, cap);
}

}  // namespace bifree
