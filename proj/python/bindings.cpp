// Python bindings. Rationals cross the boundary as strings "p/q"; the
// package __init__ converts them to and from fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "bifree/errors.hpp"
#include "bifree/io.hpp"
#include "bifree/partial_r.hpp"
#include "bifree/rank1.hpp"
#include "bifree/selfcheck.hpp"
#include "bifree/transforms1d.hpp"

namespace py = pybind11;

namespace {

using Grid = std::vector<std::vector<std::string>>;

template <class Table>
Table table_from_grid(const Grid& grid) {
  if (grid.empty() || grid[0].empty()) throw bifree::ParseError("table must have at least one row and column");
  Table t(grid.size() - 1, grid[0].size() - 1);
  for (std::size_t m = 0; m < grid.size(); ++m) {
    if (grid[m].size() != grid[0].size()) throw bifree::ParseError("table rows have different lengths");
    for (std::size_t n = 0; n < grid[m].size(); ++n) t(m, n) = bifree::parse_rational(grid[m][n]);
  }
  return t;
}

template <class Table>
Grid grid_from_table(const Table& t) {
  Grid grid(t.left_order() + 1, std::vector<std::string>(t.right_order() + 1));
  for (std::size_t m = 0; m <= t.left_order(); ++m) {
    for (std::size_t n = 0; n <= t.right_order(); ++n) grid[m][n] = bifree::to_string(t(m, n));
  }
  return grid;
}

bifree::MomentSequence moments_from_strings(const std::vector<std::string>& values) {
  std::vector<bifree::Rational> m;
  for (const auto& v : values) m.push_back(bifree::parse_rational(v));
  return bifree::MomentSequence(std::move(m));
}

std::vector<std::string> strings_from_moments(const bifree::MomentSequence& m) {
  std::vector<std::string> out;
  for (const auto& v : m.values()) out.push_back(bifree::to_string(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact two-bands bi-free cumulants";

  auto base = py::register_exception<bifree::Error>(mod, "BifreeError", PyExc_ValueError);
  py::register_exception<bifree::ParseError>(mod, "ParseError", base.ptr());
  py::register_exception<bifree::BadNormalization>(mod, "BadNormalization", base.ptr());
  py::register_exception<bifree::BoxMismatch>(mod, "BoxMismatch", base.ptr());
  py::register_exception<bifree::CapExceeded>(mod, "CapExceeded", base.ptr());

  mod.def("compute_partial_r", [](const Grid& moments) {
    return grid_from_table(bifree::compute_partial_r(table_from_grid<bifree::TwoBandsTable>(moments)));
  });
  mod.def("partial_r_to_moments", [](const Grid& cumulants) {
    return grid_from_table(bifree::partial_r_to_moments(table_from_grid<bifree::PartialRTable>(cumulants)));
  });
  mod.def("biconvolve", [](const Grid& t1, const Grid& t2) {
    return grid_from_table(
        bifree::biconvolve(table_from_grid<bifree::TwoBandsTable>(t1), table_from_grid<bifree::TwoBandsTable>(t2)));
  });
  mod.def("free_convolve1", [](const std::vector<std::string>& m1, const std::vector<std::string>& m2) {
    return strings_from_moments(bifree::free_convolve1(moments_from_strings(m1), moments_from_strings(m2)));
  });
  mod.def("mixed_moment", [](const std::string& system_json, const std::string& word) {
    const bifree::Rank1System s = bifree::parse_rank1_system(system_json);
    return bifree::to_string(bifree::mixed_moment(s, bifree::parse_word(word, s.left_count(), s.right_count())));
  });
  mod.def(
      "selfcheck",
      [](std::uint64_t seed, std::size_t size, bool inject_fault) {
        const bifree::SelfcheckOptions options{seed, size, inject_fault};
        const auto results = bifree::run_selfcheck(options);
        return py::make_tuple(bifree::all_passed(results), bifree::format_report(options, results));
      },
      py::arg("seed") = bifree::kDefaultSeed, py::arg("size") = bifree::SelfcheckOptions{}.size,
      py::arg("inject_fault") = false);
}
