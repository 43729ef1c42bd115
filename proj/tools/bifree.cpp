// bifree: exact two-bands cumulants, bi-free convolution and rank-one
// commutation moments from the command line.
//
// Exit codes: 0 ok, 1 other error, 2 parse error or unknown index,
// 3 bad normalization, 4 box mismatch, 5 cap exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bifree/errors.hpp"
#include "bifree/io.hpp"
#include "bifree/partial_r.hpp"
#include "bifree/rank1.hpp"
#include "bifree/selfcheck.hpp"

namespace {

enum ExitCode : int { kOk = 0, kOther = 1, kParse = 2, kNormalization = 3, kBox = 4, kCap = 5 };

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw bifree::Error("cannot write \"" + output + "\"");
  out << text;
}

std::uint64_t seed_from_env() {
  const char* env = std::getenv(bifree::kSeedEnvVar);
  if (env == nullptr || *env == '\0') return bifree::kDefaultSeed;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw bifree::ParseError(std::string(bifree::kSeedEnvVar) + " must be a non-negative integer");
  }
}

int run_cumulants(const std::string& input, const std::vector<std::size_t>& box, const std::string& output) {
  bifree::TwoBandsTable t = bifree::parse_two_bands(bifree::read_file(input));
  if (!box.empty()) {
    if (box[0] > t.left_order() || box[1] > t.right_order()) {
      throw bifree::BoxMismatch("requested box (" + std::to_string(box[0]) + "," + std::to_string(box[1]) +
                                ") exceeds the input box (" + std::to_string(t.left_order()) + "," +
                                std::to_string(t.right_order()) + ")");
    }
    t = t.truncated(box[0], box[1]);
  }
  emit(bifree::serialize(bifree::compute_partial_r(t)), output);
  return kOk;
}

int run_convolve(const std::string& first, const std::string& second, const std::string& output) {
  const bifree::Document a = bifree::parse_document(bifree::read_file(first));
  const bifree::Document b = bifree::parse_document(bifree::read_file(second));
  if (a.index() != b.index()) {
    throw bifree::ParseError("cannot convolve a " + bifree::kind_name(a) + " with a " + bifree::kind_name(b));
  }
  if (const auto* ta = std::get_if<bifree::TwoBandsTable>(&a)) {
    emit(bifree::serialize(bifree::biconvolve(*ta, std::get<bifree::TwoBandsTable>(b))), output);
  } else if (const auto* sa = std::get_if<bifree::Rank1System>(&a)) {
    emit(bifree::serialize(bifree::biconvolve_rank1(*sa, std::get<bifree::Rank1System>(b))), output);
  } else if (const auto* ma = std::get_if<bifree::MomentSequence>(&a)) {
    emit(bifree::serialize(bifree::free_convolve1(*ma, std::get<bifree::MomentSequence>(b))), output);
  } else {
    throw bifree::ParseError("convolve expects two_bands_pair, rank1_system or moment_seq inputs");
  }
  return kOk;
}

int run_moment(const std::string& input, const std::string& word) {
  const bifree::Rank1System s = bifree::parse_rank1_system(bifree::read_file(input));
  const bifree::Word w = bifree::parse_word(word, s.left_count(), s.right_count());
  std::cout << bifree::to_string(bifree::mixed_moment(s, w)) << '\n';
  return kOk;
}

int run_selfcheck(std::optional<std::uint64_t> seed, std::size_t size, bool inject_fault) {
  bifree::SelfcheckOptions options;
  options.seed = seed ? *seed : seed_from_env();
  options.size = size;
  options.inject_fault = inject_fault;
  const auto results = bifree::run_selfcheck(options);
  std::cout << bifree::format_report(options, results);
  return bifree::all_passed(results) ? kOk : kOther;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-bands bi-free cumulants and rank-one commutation moments"};
  app.require_subcommand(1);

  std::string output;

  auto* cumulants = app.add_subcommand("cumulants", "Partial R-transform of a two_bands_pair file");
  std::string cumulants_input;
  std::vector<std::size_t> box;
  cumulants->add_option("input", cumulants_input, "two_bands_pair JSON file")->required();
  cumulants->add_option("--box", box, "Truncate to bidegree box M N first")->expected(2);
  cumulants->add_option("-o,--output", output, "Write JSON here instead of stdout");

  auto* convolve = app.add_subcommand("convolve", "Bi-free additive convolution of two files of the same kind");
  std::string conv_a;
  std::string conv_b;
  convolve->add_option("a", conv_a, "First input")->required();
  convolve->add_option("b", conv_b, "Second input")->required();
  convolve->add_option("-o,--output", output, "Write JSON here instead of stdout");

  auto* moment = app.add_subcommand("moment", "Mixed moment of a rank1_system");
  std::string moment_input;
  std::string word;
  moment->add_option("system", moment_input, "rank1_system JSON file")->required();
  moment->add_option("--word", word, "Letters such as \"a1 b2 a1\" (1-based)")->required();

  auto* selfcheck = app.add_subcommand("selfcheck", "Randomized exact checks against the operator model");
  std::optional<std::uint64_t> seed;
  std::size_t size = bifree::SelfcheckOptions{}.size;
  bool inject_fault = false;
  selfcheck->add_option("--seed", seed,
                        std::string("Random seed (default: $") + bifree::kSeedEnvVar + " or " +
                            std::to_string(bifree::kDefaultSeed) + ")");
  selfcheck->add_option("--size", size, "Random cases per suite")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  selfcheck->add_flag("--inject-fault", inject_fault, "Corrupt one oracle moment (the run must fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*cumulants) return run_cumulants(cumulants_input, box, output);
    if (*convolve) return run_convolve(conv_a, conv_b, output);
    if (*moment) return run_moment(moment_input, word);
    if (*selfcheck) return run_selfcheck(seed, size, inject_fault);
  } catch (const bifree::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const bifree::BadNormalization& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNormalization;
  } catch (const bifree::BoxMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBox;
  } catch (const bifree::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}
