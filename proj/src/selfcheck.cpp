#include "bifree/selfcheck.hpp"

#include <functional>
#include <sstream>

#include "bifree/errors.hpp"
#include "bifree/pair_oracle.hpp"
#include "bifree/partial_r.hpp"
#include "bifree/random.hpp"
#include "bifree/rank1.hpp"
#include "bifree/transforms1d.hpp"

namespace bifree {

namespace {

constexpr std::size_t kBox = 3;

std::size_t random_dim(Rng& rng) { return 2 + rng.index(3); }

// Each case returns an empty string on success, else a description.
using Case = std::function<std::string(Rng&, std::size_t)>;

std::string additivity_case(Rng& rng, bool inject_fault) {
  const TwoFacedPairRep r1 = random_pair_rep(rng, random_dim(rng));
  const TwoFacedPairRep r2 = random_pair_rep(rng, random_dim(rng));
  const ProductState p({r1, r2}, 2 * kBox);
  const ProductOperator a = left_action(p, 0, r1.left_ops[0]) + left_action(p, 1, r2.left_ops[0]);
  const ProductOperator b = right_action(p, 0, r1.right_ops[0]) + right_action(p, 1, r2.right_ops[0]);
  TwoBandsTable sum = two_bands_table(p, a, b, kBox, kBox);
  if (inject_fault) sum(kBox, kBox) += 1;
  const PartialRTable lhs = compute_partial_r(sum);
  const PartialRTable rhs = compute_partial_r(two_bands_table(r1, 0, 0, kBox, kBox)) +
                            compute_partial_r(two_bands_table(r2, 0, 0, kBox, kBox));
  for (std::size_t m = 0; m <= kBox; ++m) {
    for (std::size_t n = 0; n <= kBox; ++n) {
      if (lhs(m, n) != rhs(m, n)) {
        return "R(" + std::to_string(m) + "," + std::to_string(n) + ") of the sum is " + to_string(lhs(m, n)) +
               ", sum of cumulants is " + to_string(rhs(m, n));
      }
    }
  }
  return {};
}

void alternating_patterns(std::size_t factors, std::size_t length, std::vector<std::size_t>& current,
                          std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == length) {
    out.push_back(current);
    return;
  }
  for (std::size_t f = 0; f < factors; ++f) {
    if (!current.empty() && current.back() == f) continue;
    current.push_back(f);
    alternating_patterns(factors, length, current, out);
    current.pop_back();
  }
}

std::string centered_factorization_case(Rng& rng) {
  constexpr std::size_t kFactors = 3;
  constexpr std::size_t kMaxLen = 3;
  std::vector<TwoFacedPairRep> reps;
  for (std::size_t f = 0; f < kFactors; ++f) {
    const std::size_t d = random_dim(rng);
    TwoFacedPairRep rep;
    rep.space = PointedSpace{d, d};
    for (std::size_t k = 0; k < kMaxLen; ++k) {
      rep.left_ops.push_back(random_centered_matrix(rng, d));
      rep.right_ops.push_back(random_centered_matrix(rng, d));
    }
    reps.push_back(std::move(rep));
  }
  const ProductState p(reps, 2 * kMaxLen);
  std::vector<std::vector<std::vector<std::size_t>>> patterns(kMaxLen + 1);
  for (std::size_t len = 0; len <= kMaxLen; ++len) {
    std::vector<std::size_t> cur;
    alternating_patterns(kFactors, len, cur, patterns[len]);
  }
  for (std::size_t m = 0; m <= kMaxLen; ++m) {
    for (const auto& alpha : patterns[m]) {
      for (std::size_t n = 0; n <= kMaxLen; ++n) {
        for (const auto& beta : patterns[n]) {
          // phi(a_m ... a_1 b_n ... b_1), with a_k the k-th left operator of factor alpha(k).
          std::vector<Letter> word;
          for (std::size_t k = m; k-- > 0;) word.push_back(Letter{Side::Left, alpha[k], k});
          for (std::size_t l = n; l-- > 0;) word.push_back(Letter{Side::Right, beta[l], l});
          Rational expected = m == n ? 1 : 0;
          for (std::size_t k = 0; k < m && expected != 0; ++k) {
            if (alpha[k] != beta[k]) {
              expected = 0;
            } else {
              const TwoFacedPairRep& rep = reps[alpha[k]];
              expected *= (rep.left_ops[k] * rep.right_ops[k])(0, 0);
            }
          }
          const Rational got = joint_moment(p, word);
          if (got != expected) {
            return "pattern of lengths " + std::to_string(m) + "," + std::to_string(n) + " gives " + to_string(got) +
                   ", expected " + to_string(expected);
          }
        }
      }
    }
  }
  return {};
}

Series2 quotient(const Series1& h_left, const Series1& h_right, const Series2& big_h) {
  const std::size_t mm = big_h.left_order();
  const std::size_t nn = big_h.right_order();
  return Series2::from_left(h_left, nn) * Series2::from_right(mm, h_right) * reciprocal(big_h);
}

std::string subordination_case(Rng& rng) {
  constexpr std::size_t kOrder = kBox;
  const TwoFacedPairRep r1 = random_pair_rep(rng, random_dim(rng));
  const TwoFacedPairRep r2 = random_pair_rep(rng, random_dim(rng));
  const TwoBandsTable t1 = two_bands_table(r1, 0, 0, kOrder, kOrder);
  const TwoBandsTable t2 = two_bands_table(r2, 0, 0, kOrder, kOrder);
  const ProductState p({r1, r2}, 2 * kOrder);
  const ProductOperator a = left_action(p, 0, r1.left_ops[0]) + left_action(p, 1, r2.left_ops[0]);
  const ProductOperator b = right_action(p, 0, r1.right_ops[0]) + right_action(p, 1, r2.right_ops[0]);
  const TwoBandsTable sum = two_bands_table(p, a, b, kOrder, kOrder);

  const auto [ta1, ta2] = subordination_series(left_marginal(t1), left_marginal(t2), kOrder);
  const auto [sb1, sb2] = subordination_series(right_marginal(t1), right_marginal(t2), kOrder);

  const Series1 ha1 = compose(moment_series(left_marginal(t1)), ta1);
  const Series1 ha2 = compose(moment_series(left_marginal(t2)), ta2);
  const Series1 ha = moment_series(left_marginal(sum));
  if (ha1 + ha2 - Series1::constant(1, kOrder) != ha) return "h_{a1+a2}(t) != h_{a1}(t1) + h_{a2}(t2) - 1";
  if (ta1 * ha1 != Series1::identity(kOrder) * ha) return "t1 h_{a1}(t1) != t h_{a1+a2}(t)";

  const Series1 hb1 = compose(moment_series(right_marginal(t1)), sb1);
  const Series1 hb2 = compose(moment_series(right_marginal(t2)), sb2);
  const Series1 hb = moment_series(right_marginal(sum));

  const Series2 lhs1 = quotient(ha1, hb1, compose1_into_2(moment_generating_series(t1), ta1, sb1));
  const Series2 lhs2 = quotient(ha2, hb2, compose1_into_2(moment_generating_series(t2), ta2, sb2));
  const Series2 rhs = quotient(ha, hb, moment_generating_series(sum));
  if (lhs1 + lhs2 - Series2::constant(1, kOrder, kOrder) != rhs) {
    return "two-variable subordination identity fails";
  }
  return {};
}

std::string rank1_case(Rng& rng) {
  constexpr std::size_t kLen = 4;
  std::vector<TwoFacedPairRep> reps;
  {
    FockVectors left{{rng.rational(2, 2), rng.rational(2, 2)}, {rng.rational(2, 2), rng.rational(2, 2)}};
    FockVectors right{{rng.rational(2, 2), rng.rational(2, 2)}, {rng.rational(2, 2), rng.rational(2, 2)}};
    reps.push_back(gaussian_pair_rep(left, right, 2));
  }
  reps.push_back(shift_pair_rep(3, random_matrix(rng, 2, 2)));
  for (const auto& rep : reps) {
    const std::size_t cap = std::min(kLen, rep.exact_word_length);
    const Rank1System s = extract_system(rep, cap);
    const ProductState p = single_factor(rep);
    for (const auto& word : all_words(1, 1, cap)) {
      std::vector<Letter> letters;
      for (const auto& x : word) letters.push_back(Letter{x.side, 0, 0});
      const Rational got = mixed_moment(s, word);
      const Rational expected = joint_moment(p, letters);
      if (got != expected) return "mixed moment of a length-" + std::to_string(word.size()) + " word disagrees";
    }
  }
  return {};
}

std::string independence_case(Rng& rng) {
  const TwoBandsTable t1 = product_table(random_moments(rng, kBox), random_moments(rng, kBox));
  const TwoBandsTable t2 = product_table(random_moments(rng, kBox), random_moments(rng, kBox));
  if (!mixed_cumulants_vanish(t1) || !mixed_cumulants_vanish(t2)) return "product table has mixed cumulants";
  const TwoBandsTable sum = biconvolve(t1, t2);
  if (!mixed_cumulants_vanish(sum)) return "convolution has mixed cumulants";
  for (std::size_t m = 0; m <= kBox; ++m) {
    for (std::size_t n = 0; n <= kBox; ++n) {
      if (sum(m, n) != sum(m, 0) * sum(0, n)) return "convolution is not a product table";
    }
  }
  return {};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t size, const Case& body) {
  SuiteResult result{name, true, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < size; ++i) {
    std::string failure;
    try {
      failure = body(rng, i);
    } catch (const Error& e) {
      failure = e.what();
    }
    ++result.cases;
    if (!failure.empty()) {
      result.passed = false;
      result.detail = "case " + std::to_string(i) + ": " + failure;
      break;
    }
  }
  return result;
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options) {
  // Every suite gets its own stream so suites can be reordered or skipped.
  const std::uint64_t s = options.seed;
  const std::size_t n = options.size;
  return {
      run_suite("additivity", s ^ 0x1, n,
                [&](Rng& rng, std::size_t) { return additivity_case(rng, options.inject_fault); }),
      run_suite("centered_factorization", s ^ 0x2, n,
                [](Rng& rng, std::size_t) { return centered_factorization_case(rng); }),
      run_suite("subordination", s ^ 0x3, n, [](Rng& rng, std::size_t) { return subordination_case(rng); }),
      run_suite("rank1_determination", s ^ 0x4, n, [](Rng& rng, std::size_t) { return rank1_case(rng); }),
      run_suite("independence_closure", s ^ 0x5, n, [](Rng& rng, std::size_t) { return independence_case(rng); }),
  };
}

std::string format_report(const SelfcheckOptions& options, const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  out << "selfcheck seed=" << options.seed << " size=" << options.size;
  if (options.inject_fault) out << " inject-fault";
  out << '\n';
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.passed) out << ": " << r.detail;
    out << '\n';
  }
  out << (all_passed(results) ? "all suites passed" : "some suites failed") << '\n';
  return out.str();
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace bifree
