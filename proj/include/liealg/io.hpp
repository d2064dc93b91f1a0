#pragma once

// File formats:
//   structure constants  {"dim": R, "label": "...", "brackets": [{"i":1,"j":2,"k":1,"c":"1/2"}, ...]}
//   matrices (JSON)      [["1","0"],["-1/2","3"]]   or {"matrix": [[...]]}
//   matrices (text)      one row per line, entries separated by blanks, e.g. "1 0 -1/2"

#include "liealg/algebra.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace liealg {

using Json = nlohmann::ordered_json;

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error("expected a rational string such as \"3/4\", got " + j.dump());
}

inline Json matrix_to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json matrix_to_json(const Matrix<double>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

inline const Json& matrix_rows(const Json& j) {
  if (j.is_object() && j.contains("matrix")) return j.at("matrix");
  if (!j.is_array()) throw Error("matrix must be a JSON array of rows");
  return j;
}

template <class T, class F>
Matrix<T> matrix_from_json_with(const Json& j, F&& convert) {
  const Json& rows = matrix_rows(j);
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.at(0).size() : 0;
  Matrix<T> m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (!rows[r].is_array() || rows[r].size() != nc) throw Error("ragged matrix in JSON");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = convert(rows[r][c]);
  }
  return m;
}

inline double double_from_text(const std::string& s) {
  if (s.find('/') != std::string::npos) return to_double(parse_rational(s));
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid number '" + s + "'", 0);
  }
  if (used != s.size()) throw ParseError("invalid number '" + s + "'", used);
  return v;
}

}  // namespace detail

inline Matrix<Rational> matrix_from_json(const Json& j) {
  return detail::matrix_from_json_with<Rational>(j, rational_from_json);
}

inline Matrix<double> numeric_matrix_from_json(const Json& j) {
  return detail::matrix_from_json_with<double>(j, [](const Json& e) {
    if (e.is_number()) return e.get<double>();
    if (e.is_string()) return detail::double_from_text(e.get<std::string>());
    throw Error("matrix entry must be a number or string");
  });
}

/// Text grid, one row per line; exact entries print as "p" or "p/q".
inline std::string format_matrix(const Matrix<Rational>& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

inline std::string format_matrix(const Matrix<double>& m) {
  std::string out;
  char buf[64];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<std::string>> split_grid(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> row;
    std::string w;
    while (words >> w) row.push_back(w);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw Error("ragged matrix text");
  return rows;
}

inline bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (text[p] == '[' || text[p] == '{');
}

}  // namespace detail

/// Parses a matrix given either as JSON or as a text grid.
inline Matrix<Rational> parse_matrix(const std::string& text) {
  if (detail::looks_like_json(text)) return matrix_from_json(Json::parse(text));
  const auto grid = detail::split_grid(text);
  Matrix<Rational> m(grid.size(), grid.empty() ? 0 : grid[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(grid[r][c]);
  return m;
}

inline Matrix<double> parse_numeric_matrix(const std::string& text) {
  if (detail::looks_like_json(text)) return numeric_matrix_from_json(Json::parse(text));
  const auto grid = detail::split_grid(text);
  Matrix<double> m(grid.size(), grid.empty() ? 0 : grid[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = detail::double_from_text(grid[r][c]);
  return m;
}

inline Json algebra_to_json(const LieAlgebra& l) {
  Json j;
  j["dim"] = l.dim();
  if (l.label()) j["label"] = *l.label();
  Json brackets = Json::array();
  for (const auto& e : l.tensor().entries())
    brackets.push_back(Json{{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", to_string(e.c)}});
  j["brackets"] = std::move(brackets);
  return j;
}

/// Canonical text of the structure-constants file; byte-stable under re-parsing.
inline std::string write_algebra(const LieAlgebra& l) { return algebra_to_json(l).dump(2) + "\n"; }

inline LieAlgebra algebra_from_json(const Json& j, bool validate = true) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("brackets"))
    throw Error("structure-constants file needs \"dim\" and \"brackets\"");
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<BracketEntry> entries;
  for (const auto& b : j.at("brackets")) {
    BracketEntry e;
    e.i = b.at("i").get<std::size_t>();
    e.j = b.at("j").get<std::size_t>();
    e.k = b.at("k").get<std::size_t>();
    e.c = rational_from_json(b.at("c"));
    entries.push_back(std::move(e));
  }
  std::optional<std::string> label;
  if (j.contains("label")) label = j.at("label").get<std::string>();
  return validate ? LieAlgebra::create(dim, entries, label) : LieAlgebra::unchecked(dim, entries, label);
}

inline LieAlgebra read_algebra(const std::string& text, bool validate = true) {
  return algebra_from_json(Json::parse(text), validate);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace liealg
