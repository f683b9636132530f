#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grid.hpp"

namespace anyangle {

class map_parse_error : public std::runtime_error {
 public:
  map_parse_error(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

inline int header_value(const std::vector<std::string>& lines, std::size_t i, const std::string& key) {
  const int ln = static_cast<int>(i) + 1;
  if (i >= lines.size()) throw map_parse_error(ln, 1, "missing '" + key + "' header line");
  std::istringstream in(lines[i]);
  std::string k;
  long long v = 0;
  in >> k;
  if (k != key) throw map_parse_error(ln, 1, "expected '" + key + "', found '" + k + "'");
  if (!(in >> v) || v < 1 || v > 1000000) throw map_parse_error(ln, static_cast<int>(key.size()) + 2, "bad " + key + " value");
  std::string rest;
  if (in >> rest) throw map_parse_error(ln, 1, "trailing text after " + key);
  return static_cast<int>(v);
}

inline grid parse_ascii(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw map_parse_error(1, 1, "empty map");
  {
    std::istringstream in(lines[0]);
    std::string k, v;
    in >> k >> v;
    if (k != "type" || v.empty()) throw map_parse_error(1, 1, "expected 'type <name>' header");
  }
  const int h = header_value(lines, 1, "height");
  const int w = header_value(lines, 2, "width");
  if (lines.size() < 4 || lines[3] != "map") throw map_parse_error(4, 1, "expected 'map'");
  const std::size_t first = 4;
  if (lines.size() - first != static_cast<std::size_t>(h))
    throw map_parse_error(static_cast<int>(std::min(lines.size(), first + h)) + 1, 1,
                          "header height " + std::to_string(h) + " but body has " + std::to_string(lines.size() - first) +
                              " rows");
  std::vector<double> costs(static_cast<std::size_t>(w) * h, 1.0);
  for (int r = 0; r < h; ++r) {
    const std::string& row = lines[first + r];
    const int ln = static_cast<int>(first) + r + 1;
    if (row.size() != static_cast<std::size_t>(w))
      throw map_parse_error(ln, static_cast<int>(std::min(row.size(), static_cast<std::size_t>(w))) + 1,
                            "row has " + std::to_string(row.size()) + " glyphs, header width is " + std::to_string(w));
    const int cy = h - 1 - r;  // first body row is the northernmost
    for (int cx = 0; cx < w; ++cx) {
      double c;
      switch (row[cx]) {
        case '.': case 'G': c = 1.0; break;
        case '@': case 'O': case 'T': c = infinity; break;
        default:
          throw map_parse_error(ln, cx + 1, std::string("unknown glyph '") + row[cx] + "'");
      }
      costs[static_cast<std::size_t>(cx) + static_cast<std::size_t>(cy) * w] = c;
    }
  }
  return grid(w, h, std::move(costs));
}

inline std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
  }
  return {line, col};
}

inline grid parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [l, c] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw map_parse_error(l, c, "malformed JSON");
  }
  auto fail = [](const std::string& m) { return map_parse_error(1, 1, m); };
  if (!j.is_object() || !j.contains("width") || !j.contains("height") || !j.contains("costs"))
    throw fail("JSON map needs width, height and costs");
  if (!j["width"].is_number_integer() || !j["height"].is_number_integer()) throw fail("width/height must be integers");
  const int w = j["width"].get<int>(), h = j["height"].get<int>();
  if (w < 1 || h < 1) throw fail("width/height must be positive");
  const auto& rows = j["costs"];
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(h))
    throw fail("costs must hold " + std::to_string(h) + " rows");
  std::vector<double> costs(static_cast<std::size_t>(w) * h, 1.0);
  for (int r = 0; r < h; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(w))
      throw fail("costs[" + std::to_string(r) + "] must hold " + std::to_string(w) + " entries");
    const int cy = h - 1 - r;
    for (int cx = 0; cx < w; ++cx) {
      const auto& v = row[cx];
      double c;
      if (v.is_string() && v.get<std::string>() == "inf")
        c = infinity;
      else if (v.is_number())
        c = v.get<double>();
      else
        throw fail("costs[" + std::to_string(r) + "][" + std::to_string(cx) + "] must be a number or \"inf\"");
      if (!(c >= 1.0))
        throw fail("costs[" + std::to_string(r) + "][" + std::to_string(cx) + "] must be at least 1");
      costs[static_cast<std::size_t>(cx) + static_cast<std::size_t>(cy) * w] = c;
    }
  }
  return grid(w, h, std::move(costs));
}

}  // namespace detail

// ASCII octile map or the JSON cost grid; chosen by the first non-blank byte.
inline grid load_map(std::string_view bytes) {
  const auto p = bytes.find_first_not_of(" \t\r\n");
  if (p != std::string_view::npos && bytes[p] == '{') return detail::parse_json(bytes);
  return detail::parse_ascii(bytes);
}

// Blocked cells become '@'. Finite costs other than 1 cannot be written here.
inline std::string to_ascii_map(const grid& g) {
  if (!g.uniform()) throw std::invalid_argument("ASCII maps carry no traversal costs; use the JSON form");
  std::string out = "type octile\nheight " + std::to_string(g.height()) + "\nwidth " + std::to_string(g.width()) + "\nmap\n";
  for (int cy = g.height() - 1; cy >= 0; --cy) {
    for (int cx = 0; cx < g.width(); ++cx) out += g.is_blocked(cx, cy) ? '@' : '.';
    out += '\n';
  }
  return out;
}

inline std::string to_json_map(const grid& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int cy = g.height() - 1; cy >= 0; --cy) {
    nlohmann::json row = nlohmann::json::array();
    for (int cx = 0; cx < g.width(); ++cx) {
      const double c = g.cost(cx, cy);
      if (c == infinity)
        row.push_back("inf");
      else if (c == std::floor(c))
        row.push_back(static_cast<long long>(c));
      else
        row.push_back(c);
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["width"] = g.width();
  j["height"] = g.height();
  j["costs"] = std::move(rows);
  return j.dump() + "\n";
}

}  // namespace anyangle
