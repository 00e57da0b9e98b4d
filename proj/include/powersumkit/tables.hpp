#pragma once

// Triangular number tables and their plain / CSV / JSON renderings.
//
// JSON: {"family": "<name>", "rows": [["<cell>", ...], ...]}, every cell a
// decimal string ("p/q" for non-integral rationals) so big values survive.
// CSV: one triangle row per line, cells joined by commas.

#include "powersumkit/combinatorics.hpp"
#include "powersumkit/exact_core.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace powersumkit {

enum class TableFamily { Stirling1, Stirling2, LS1, LS2, CentralU, CentralBigU, CentralV, CentralBigV, Bernoulli };
enum class TableFormat { Plain, Csv, Json };

inline constexpr std::array<TableFamily, 9> kAllFamilies{
    TableFamily::Stirling1, TableFamily::Stirling2,   TableFamily::LS1,
    TableFamily::LS2,       TableFamily::CentralU,    TableFamily::CentralBigU,
    TableFamily::CentralV,  TableFamily::CentralBigV, TableFamily::Bernoulli,
};

inline std::string_view family_name(TableFamily f) {
  switch (f) {
    case TableFamily::Stirling1: return "stirling1";
    case TableFamily::Stirling2: return "stirling2";
    case TableFamily::LS1: return "ls1";
    case TableFamily::LS2: return "ls2";
    case TableFamily::CentralU: return "central_u";
    case TableFamily::CentralBigU: return "central_U";
    case TableFamily::CentralV: return "central_v";
    case TableFamily::CentralBigV: return "central_V";
    case TableFamily::Bernoulli: return "bernoulli";
  }
  return "?";
}

/// Family names are case-sensitive: central_u and central_U differ.
inline std::optional<TableFamily> parse_family(std::string_view text) {
  for (auto f : kAllFamilies)
    if (family_name(f) == text) return f;
  return std::nullopt;
}

inline std::optional<TableFormat> parse_format(std::string_view text) {
  if (text == "plain") return TableFormat::Plain;
  if (text == "csv") return TableFormat::Csv;
  if (text == "json") return TableFormat::Json;
  return std::nullopt;
}

inline constexpr long kDefaultRowsCap = 64;

/// The row cap, overridable through POWERSUMKIT_ROWS_CAP.
inline long rows_cap() {
  if (const char* env = std::getenv("POWERSUMKIT_ROWS_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return v;
  }
  return kDefaultRowsCap;
}

/// Rows 0..last; row n holds columns 0..n.
struct Table {
  std::string family;
  std::vector<std::vector<Rational>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

/// Cell (n, k) of a family. Bernoulli row n is the coefficient list of B_n(x).
inline Rational table_cell(TableFamily family, long n, long k) {
  switch (family) {
    case TableFamily::Stirling1: return Rational(stirling_first_unsigned(n, k));
    case TableFamily::Stirling2: return Rational(stirling_second(n, k));
    case TableFamily::LS1: return Rational(legendre_stirling_first(n, k));
    case TableFamily::LS2: return Rational(legendre_stirling_second(n, k));
    case TableFamily::CentralU: return Rational(central_factorial_first(n, k, Parity::Even));
    case TableFamily::CentralBigU: return Rational(central_factorial_second(n, k, Parity::Even));
    case TableFamily::CentralV: return Rational(central_factorial_first(n, k, Parity::Odd));
    case TableFamily::CentralBigV: return Rational(central_factorial_second(n, k, Parity::Odd));
    case TableFamily::Bernoulli: return bernoulli_polynomial(n).coeff(static_cast<std::size_t>(k));
  }
  return 0;
}

/// Rows 0..last_row inclusive. Throws DomainError past `cap`.
inline Table make_table(TableFamily family, long last_row, long cap = rows_cap()) {
  if (last_row < 0) throw DomainError("table: rows must be >= 0");
  if (last_row > cap) {
    throw DomainError("table: rows " + std::to_string(last_row) + " exceeds cap " + std::to_string(cap));
  }
  Table t{std::string(family_name(family)), {}};
  for (long n = 0; n <= last_row; ++n) {
    std::vector<Rational> row;
    for (long k = 0; k <= n; ++k) row.push_back(table_cell(family, n, k));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline std::string render_csv(const Table& t) {
  std::string out;
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

inline std::string render_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : row) cells.push_back(to_string(c));
    rows.push_back(std::move(cells));
  }
  nlohmann::json doc{{"family", t.family}, {"rows", std::move(rows)}};
  return doc.dump() + "\n";
}

/// Right-aligned columns under an "n \ k" header.
inline std::string render_plain(const Table& t) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (const auto& c : row) {
      line.push_back(to_string(c));
      width = std::max(width, line.back().size());
    }
    cells.push_back(std::move(line));
  }
  const std::size_t label = std::max<std::size_t>(std::to_string(t.rows.size()).size(), 3);
  std::ostringstream os;
  auto pad = [](std::string s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  os << t.family << '\n' << pad("n\\k", label) << " |";
  for (std::size_t k = 0; k < cells.size(); ++k) os << ' ' << pad(std::to_string(k), width);
  os << '\n';
  for (std::size_t n = 0; n < cells.size(); ++n) {
    os << pad(std::to_string(n), label) << " |";
    for (const auto& c : cells[n]) os << ' ' << pad(c, width);
    os << '\n';
  }
  return os.str();
}

inline std::string render_table(const Table& t, TableFormat format) {
  switch (format) {
    case TableFormat::Plain: return render_plain(t);
    case TableFormat::Csv: return render_csv(t);
    case TableFormat::Json: return render_json(t);
  }
  return {};
}

/// Inverse of render_json. Throws DomainError on schema violations.
inline Table parse_table_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("table json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string() || !doc.contains("rows") ||
      !doc["rows"].is_array()) {
    throw DomainError("table json: expected {\"family\": str, \"rows\": [[str, ...], ...]}");
  }
  Table t{doc["family"].get<std::string>(), {}};
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw DomainError("table json: row is not an array");
    std::vector<Rational> cells;
    for (const auto& c : row) {
      if (!c.is_string()) throw DomainError("table json: cell is not a string");
      cells.push_back(parse_rational(c.get<std::string>()));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

/// Inverse of render_csv; CSV carries no family name, so the caller supplies it.
inline Table parse_table_csv(std::string_view text, std::string family) {
  Table t{std::move(family), {}};
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<Rational> cells;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) cells.push_back(parse_rational(field));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

}  // namespace powersumkit
