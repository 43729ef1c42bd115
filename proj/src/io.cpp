#include "bifree/io.hpp"

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "bifree/errors.hpp"

namespace bifree {

using nlohmann::json;

namespace {

void require_fields(const json& obj, std::string_view where, std::initializer_list<std::string_view> fields) {
  if (!obj.is_object()) throw ParseError(std::string(where) + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto f : fields) known = known || key == f;
    if (!known) throw ParseError("unknown field \"" + key + "\" in " + std::string(where));
  }
  for (auto f : fields) {
    if (!obj.contains(std::string(f)))
      throw ParseError("missing field \"" + std::string(f) + "\" in " + std::string(where));
  }
}

Rational rational_from(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) {
    // Re-read from the literal so large integers keep every digit.
    return parse_rational(v.dump());
  }
  throw ParseError("expected a rational as a string or an integer, got " + v.dump());
}

std::size_t size_from(const json& v, std::string_view what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const json& array_of(const json& v, std::size_t size, std::string_view what) {
  if (!v.is_array() || v.size() != size) {
    throw ParseError(std::string(what) + " must be an array of length " + std::to_string(size));
  }
  return v;
}

template <class Table>
Table table_from(const json& payload, const char* values_key) {
  require_fields(payload, "payload", {"left_order", "right_order", values_key});
  const std::size_t mm = size_from(payload["left_order"], "left_order");
  const std::size_t nn = size_from(payload["right_order"], "right_order");
  Table t(mm, nn);
  const json& rows = array_of(payload[values_key], mm + 1, values_key);
  for (std::size_t m = 0; m <= mm; ++m) {
    const json& row = array_of(rows[m], nn + 1, "each row");
    for (std::size_t n = 0; n <= nn; ++n) t(m, n) = rational_from(row[n]);
  }
  return t;
}

template <class Table>
json table_to(const Table& t, const char* values_key) {
  json rows = json::array();
  for (std::size_t m = 0; m <= t.left_order(); ++m) {
    json row = json::array();
    for (std::size_t n = 0; n <= t.right_order(); ++n) row.push_back(to_string(t(m, n)));
    rows.push_back(std::move(row));
  }
  json out = json::object();
  out["left_order"] = t.left_order();
  out["right_order"] = t.right_order();
  out[values_key] = std::move(rows);
  return out;
}

Rank1System system_from(const json& payload) {
  require_fields(payload, "payload", {"left_count", "right_count", "cap", "lambda", "two_bands"});
  const std::size_t p = size_from(payload["left_count"], "left_count");
  const std::size_t q = size_from(payload["right_count"], "right_count");
  const std::size_t cap = size_from(payload["cap"], "cap");
  RationalMatrix lambda(p, q);
  const json& rows = array_of(payload["lambda"], p, "lambda");
  for (std::size_t i = 0; i < p; ++i) {
    const json& row = array_of(rows[i], q, "each lambda row");
    for (std::size_t j = 0; j < q; ++j) lambda(i, j) = rational_from(row[j]);
  }
  const json& entries = payload["two_bands"];
  if (!entries.is_array()) throw ParseError("two_bands must be an array");
  std::map<IJWord, Rational> two_bands;
  for (const json& e : entries) {
    require_fields(e, "two_bands entry", {"word", "value"});
    if (!e["word"].is_string()) throw ParseError("word must be a string");
    IJWord w = parse_ij_word(e["word"].get<std::string>(), p, q);
    if (w.size() > cap) throw ParseError("two_bands word \"" + e["word"].get<std::string>() + "\" longer than cap");
    if (!two_bands.emplace(std::move(w), rational_from(e["value"])).second) {
      throw ParseError("duplicate two_bands word \"" + e["word"].get<std::string>() + "\"");
    }
  }
  try {
    return Rank1System(p, q, std::move(lambda), std::move(two_bands), cap);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json system_to(const Rank1System& s) {
  json lambda = json::array();
  for (std::size_t i = 0; i < s.left_count(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s.right_count(); ++j) row.push_back(to_string(s.lambda()(i, j)));
    lambda.push_back(std::move(row));
  }
  json entries = json::array();
  for (const auto& w : ij_words(s.left_count(), s.right_count(), s.cap())) {
    json e = json::object();
    e["word"] = format_ij_word(w);
    e["value"] = to_string(s.two_bands().at(w));
    entries.push_back(std::move(e));
  }
  json out = json::object();
  out["left_count"] = s.left_count();
  out["right_count"] = s.right_count();
  out["cap"] = s.cap();
  out["lambda"] = std::move(lambda);
  out["two_bands"] = std::move(entries);
  return out;
}

MomentSequence sequence_from(const json& payload) {
  require_fields(payload, "payload", {"moments"});
  const json& values = payload["moments"];
  if (!values.is_array() || values.empty()) throw ParseError("moments must be a non-empty array");
  std::vector<Rational> v;
  for (const json& x : values) v.push_back(rational_from(x));
  return MomentSequence(std::move(v));
}

json sequence_to(const MomentSequence& m) {
  json values = json::array();
  for (const auto& x : m.values()) values.push_back(to_string(x));
  json out = json::object();
  out["moments"] = std::move(values);
  return out;
}

IndexLetter parse_letter(std::string_view token, std::size_t left_count, std::size_t right_count) {
  const std::string tok(token);
  if (token.size() < 2 || (token[0] != 'a' && token[0] != 'b')) {
    throw ParseError("bad letter \"" + tok + "\"; expected a<i> or b<j>");
  }
  std::size_t index = 0;
  const char* first = token.data() + 1;
  const char* last = token.data() + token.size();
  if (*first == '0' || *first == '+' || *first == '-') throw ParseError("bad index in letter \"" + tok + "\"");
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last) throw ParseError("bad index in letter \"" + tok + "\"");
  const Side side = token[0] == 'a' ? Side::Left : Side::Right;
  const std::size_t count = side == Side::Left ? left_count : right_count;
  if (index > count) {
    throw ParseError("unknown index in letter \"" + tok + "\" (" + std::to_string(count) + " declared)");
  }
  return IndexLetter{side, index - 1};
}

}  // namespace

std::string kind_name(const Document& doc) {
  switch (doc.index()) {
    case 0:
      return "two_bands_pair";
    case 1:
      return "rank1_system";
    case 2:
      return "moment_seq";
    default:
      return "partial_r_table";
  }
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  require_fields(root, "document", {"format_version", "kind", "payload"});
  if (!root["format_version"].is_string() || root["format_version"].get<std::string>() != kFormatVersion) {
    throw ParseError("unsupported format_version " + root["format_version"].dump());
  }
  if (!root["kind"].is_string()) throw ParseError("kind must be a string");
  const std::string kind = root["kind"].get<std::string>();
  const json& payload = root["payload"];
  try {
    if (kind == "two_bands_pair") return table_from<TwoBandsTable>(payload, "moments");
    if (kind == "partial_r_table") return table_from<PartialRTable>(payload, "cumulants");
    if (kind == "rank1_system") return system_from(payload);
    if (kind == "moment_seq") return sequence_from(payload);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown kind \"" + kind + "\"");
}

std::string serialize(const Document& doc) {
  json root = json::object();
  root["format_version"] = kFormatVersion;
  root["kind"] = kind_name(doc);
  root["payload"] = std::visit(
      [](const auto& value) -> json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, TwoBandsTable>) {
          return table_to(value, "moments");
        } else if constexpr (std::is_same_v<T, PartialRTable>) {
          return table_to(value, "cumulants");
        } else if constexpr (std::is_same_v<T, Rank1System>) {
          return system_to(value);
        } else {
          return sequence_to(value);
        }
      },
      doc);
  return root.dump(2) + "\n";
}

namespace {

template <class T>
T parse_kind(std::string_view text) {
  Document doc = parse_document(text);
  if (!std::holds_alternative<T>(doc)) {
    throw ParseError("unexpected kind \"" + kind_name(doc) + "\" (wanted \"" + kind_name(Document(T{})) + "\")");
  }
  return std::get<T>(std::move(doc));
}

}  // namespace

TwoBandsTable parse_two_bands(std::string_view text) { return parse_kind<TwoBandsTable>(text); }
MomentSequence parse_moment_seq(std::string_view text) { return parse_kind<MomentSequence>(text); }

Rank1System parse_rank1_system(std::string_view text) {
  Document doc = parse_document(text);
  if (!std::holds_alternative<Rank1System>(doc)) {
    throw ParseError("unexpected kind \"" + kind_name(doc) + "\" (wanted \"rank1_system\")");
  }
  return std::get<Rank1System>(std::move(doc));
}

Word parse_word(std::string_view text, std::size_t left_count, std::size_t right_count) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) w.push_back(parse_letter(token, left_count, right_count));
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty()) out += ' ';
    out += letter.side == Side::Left ? 'a' : 'b';
    out += std::to_string(letter.index + 1);
  }
  return out;
}

IJWord parse_ij_word(std::string_view text, std::size_t left_count, std::size_t right_count) {
  IJWord out;
  for (const auto& letter : parse_word(text, left_count, right_count)) {
    if (letter.side == Side::Left) {
      if (!out.right.empty())
        throw ParseError("left letters must come before right letters in \"" + std::string(text) + "\"");
      out.left.push_back(letter.index);
    } else {
      out.right.push_back(letter.index);
    }
  }
  return out;
}

std::string format_ij_word(const IJWord& w) {
  Word letters;
  for (auto i : w.left) letters.push_back(IndexLetter{Side::Left, i});
  for (auto j : w.right) letters.push_back(IndexLetter{Side::Right, j});
  return format_word(letters);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace bifree
