#pragma once

// JSON documents {"format_version": "1", "kind": ..., "payload": ...}.
// Rationals are written as strings "p/q" and read from strings or integers.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "bifree/partial_r.hpp"
#include "bifree/rank1.hpp"
#include "bifree/transforms1d.hpp"

namespace bifree {

inline constexpr std::string_view kFormatVersion = "1";

using Document = std::variant<TwoBandsTable, Rank1System, MomentSequence, PartialRTable>;

/// "two_bands_pair", "rank1_system", "moment_seq" or "partial_r_table".
std::string kind_name(const Document& doc);

/// Throws ParseError on malformed JSON, unknown kinds or fields, missing
/// fields and badly shaped payloads; BadNormalization if a rank-one system
/// has two_bands("") != 1.
Document parse_document(std::string_view text);

/// Pretty-printed with two-space indentation and a trailing newline.
std::string serialize(const Document& doc);

/// Parses a kind-specific document; ParseError if the kind differs.
TwoBandsTable parse_two_bands(std::string_view text);
Rank1System parse_rank1_system(std::string_view text);
MomentSequence parse_moment_seq(std::string_view text);

/// Whitespace-separated letters "a<i>" (left) and "b<j>" (right), 1-based.
/// Throws ParseError for bad syntax or indices outside [1, count].
Word parse_word(std::string_view text, std::size_t left_count, std::size_t right_count);
std::string format_word(const Word& w);

/// IJ-words use the same syntax; left letters must precede right letters.
IJWord parse_ij_word(std::string_view text, std::size_t left_count, std::size_t right_count);
std::string format_ij_word(const IJWord& w);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace bifree
