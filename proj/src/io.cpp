#include "gogmagog/io.hpp"

#include <charconv>
#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace gogmagog {

std::optional<Format> format_from_string(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  return std::nullopt;
}

namespace {

void append_row(std::ostringstream& out, const std::vector<int>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out << ' ';
    out << row[i];
  }
  out << '\n';
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw parse_error(std::string("cannot read ") + what + " from '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Row lengths are fixed by (kind, n); enforcing them here is what lets the
// rest of the library index rows without re-checking.
std::pair<size_t, size_t> row_lengths(Kind kind, int n) {
  const auto nn = static_cast<size_t>(n);
  return kind == Kind::magog ? std::pair{nn - 1, nn} : std::pair{nn, nn - 1};
}

AnyTrapezoid assemble(Kind kind, TrapezoidParams params, std::vector<int> row1,
                      std::vector<int> row2) {
  if (kind == Kind::magog) {
    return AnyTrapezoid(MagogTrapezoid{params, std::move(row1), std::move(row2)});
  }
  return AnyTrapezoid(GogTrapezoid{params, std::move(row1), std::move(row2)});
}

}  // namespace

std::string serialize_text(const AnyTrapezoid& t) {
  const TrapezoidParams& p = params_of(t);
  std::ostringstream out;
  out << to_string(kind_of(t)) << ' ' << p.n << ' ' << p.ell << '\n';
  std::visit(
      [&](const auto& v) {
        append_row(out, v.row1);
        append_row(out, v.row2);
      },
      t);
  return out.str();
}

AnyTrapezoid parse_text(std::string_view text) {
  const std::vector<std::string_view> tokens = tokenize(text);
  if (tokens.size() < 3) throw parse_error("expected a '<kind> <n> <ell>' header");
  const auto kind = kind_from_string(tokens[0]);
  if (!kind) throw parse_error("unknown kind '" + std::string(tokens[0]) + "'");
  TrapezoidParams params{parse_int(tokens[1], "n"), parse_int(tokens[2], "ell")};
  if (!params.valid()) throw parse_error("params out of range: need n >= 3 and ell >= 0");
  const auto [len1, len2] = row_lengths(*kind, params.n);
  if (tokens.size() != 3 + len1 + len2) {
    std::ostringstream msg;
    msg << "expected " << len1 + len2 << " entries after the header, found "
        << tokens.size() - 3;
    throw parse_error(msg.str());
  }
  std::vector<int> row1(len1);
  std::vector<int> row2(len2);
  for (size_t i = 0; i < len1; ++i) row1[i] = parse_int(tokens[3 + i], "a row 1 entry");
  for (size_t i = 0; i < len2; ++i) row2[i] = parse_int(tokens[3 + len1 + i], "a row 2 entry");
  return assemble(*kind, params, std::move(row1), std::move(row2));
}

std::string serialize_json(const AnyTrapezoid& t) {
  const TrapezoidParams& p = params_of(t);
  nlohmann::json j;
  j["ell"] = p.ell;
  j["kind"] = to_string(kind_of(t));
  j["n"] = p.n;
  std::visit(
      [&](const auto& v) {
        j["row1"] = v.row1;
        j["row2"] = v.row2;
      },
      t);
  return j.dump();
}

AnyTrapezoid parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad json: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("expected a json object");
  for (const auto& key : {"ell", "kind", "n", "row1", "row2"}) {
    if (!j.contains(key)) throw parse_error(std::string("missing key '") + key + "'");
  }
  if (j.size() != 5) throw parse_error("unexpected extra keys");
  if (!j["kind"].is_string()) throw parse_error("'kind' must be a string");
  const auto kind = kind_from_string(j["kind"].get<std::string>());
  if (!kind) throw parse_error("unknown kind '" + j["kind"].get<std::string>() + "'");
  if (!j["n"].is_number_integer() || !j["ell"].is_number_integer()) {
    throw parse_error("'n' and 'ell' must be integers");
  }
  TrapezoidParams params{j["n"].get<int>(), j["ell"].get<int>()};
  if (!params.valid()) throw parse_error("params out of range: need n >= 3 and ell >= 0");
  const auto [len1, len2] = row_lengths(*kind, params.n);
  std::vector<int> rows[2];
  const char* names[2] = {"row1", "row2"};
  const size_t lens[2] = {len1, len2};
  for (int r = 0; r < 2; ++r) {
    const nlohmann::json& arr = j[names[r]];
    if (!arr.is_array()) throw parse_error(std::string("'") + names[r] + "' must be an array");
    if (arr.size() != lens[r]) {
      std::ostringstream msg;
      msg << "'" << names[r] << "' holds " << arr.size() << " entries, expected " << lens[r];
      throw parse_error(msg.str());
    }
    rows[r].reserve(arr.size());
    for (const auto& el : arr) {
      if (!el.is_number_integer()) {
        throw parse_error(std::string("'") + names[r] + "' entries must be integers");
      }
      rows[r].push_back(el.get<int>());
    }
  }
  return assemble(*kind, params, std::move(rows[0]), std::move(rows[1]));
}

AnyTrapezoid parse_any(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? parse_json(text) : parse_text(text);
  }
  throw parse_error("empty input");
}

std::string serialize(const AnyTrapezoid& t, Format format) {
  return format == Format::text ? serialize_text(t) : serialize_json(t);
}

}  // namespace gogmagog
