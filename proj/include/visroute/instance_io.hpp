#pragma once

// Instance serialization.  Two formats with exact rational coordinates and a
// deterministic canonical form, so save -> load -> save is byte-identical:
//
// text:  line 1 "n m", then n lines "id x y", then m lines "a b" (ids).
//        '#' starts a comment, blank lines are skipped, UTF-8 throughout.
//        Coordinates are "p/q" rationals or plain decimals, both parsed
//        exactly; exponent-form floats are refused.
//
// json:  {"points": [{"id": .., "x": "p/q", "y": "p/q"}, ..],
//         "constraints": [[a, b], ..]}
//        x/y must be strings; numeric literals are refused since they would
//        have passed through binary floating point.

#include "visroute/instance.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace visroute {

struct ParseError : std::runtime_error {
  int line = 0;
  ParseError(const std::string& what, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

inline Instance parse_instance_text(std::string_view text, Validation level = Validation::full,
                                    int cone_count = 6) {
  std::vector<std::string> rows;
  rows.reserve(64);
  std::vector<int> row_lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      rows.push_back(raw);
      row_lines.push_back(line_no);
    }
  }
  if (rows.empty()) throw ParseError("empty instance", 1);

  auto tokens_of = [](const std::string& row) {
    std::istringstream ss(row);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
  };

  auto header = tokens_of(rows[0]);
  if (header.size() != 2) throw ParseError("expected header 'n m'", row_lines[0]);
  long n = 0, m = 0;
  try {
    n = std::stol(header[0]);
    m = std::stol(header[1]);
  } catch (const std::exception&) {
    throw ParseError("header counts must be integers", row_lines[0]);
  }
  if (n < 0 || m < 0) throw ParseError("negative counts", row_lines[0]);
  if (long(rows.size()) != 1 + n + m)
    throw ParseError("expected " + std::to_string(1 + n + m) + " data lines, found " +
                         std::to_string(rows.size()),
                     row_lines.back());

  std::vector<Point> points;
  points.reserve(n);
  for (long i = 0; i < n; ++i) {
    const auto toks = tokens_of(rows[1 + i]);
    const int at = row_lines[1 + i];
    if (toks.size() != 3) throw ParseError("expected 'id x y'", at);
    Point p;
    try {
      p.id = std::stoll(toks[0]);
    } catch (const std::exception&) {
      throw ParseError("vertex id must be an integer", at);
    }
    try {
      p.x = parse_rational(toks[1]);
      p.y = parse_rational(toks[2]);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), at);
    }
    points.push_back(std::move(p));
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> constraints;
  constraints.reserve(m);
  for (long i = 0; i < m; ++i) {
    const auto toks = tokens_of(rows[1 + n + i]);
    const int at = row_lines[1 + n + i];
    if (toks.size() != 2) throw ParseError("expected constraint 'a b'", at);
    try {
      constraints.emplace_back(std::stoll(toks[0]), std::stoll(toks[1]));
    } catch (const std::exception&) {
      throw ParseError("constraint endpoints must be integer ids", at);
    }
  }
  return Instance(std::move(points), std::move(constraints), level, cone_count);
}

inline std::string serialize_instance_text(const Instance& inst) {
  std::ostringstream os;
  os << inst.size() << ' ' << inst.constraints().size() << '\n';
  for (const auto& p : inst.points())
    os << p.id << ' ' << format_rational(p.x) << ' ' << format_rational(p.y) << '\n';
  for (auto [a, b] : inst.constraints())
    os << inst.id_of(a) << ' ' << inst.id_of(b) << '\n';
  return os.str();
}

inline Instance parse_instance_json(std::string_view text, Validation level = Validation::full,
                                    int cone_count = 6) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1);
  }
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("constraints"))
    throw ParseError("expected object with 'points' and 'constraints'", 1);

  std::vector<Point> points;
  for (const auto& jp : doc["points"]) {
    Point p;
    if (!jp.contains("id") || !jp["id"].is_number_integer())
      throw ParseError("point id must be an integer", 1);
    p.id = jp["id"].get<std::int64_t>();
    for (const char* key : {"x", "y"}) {
      if (!jp.contains(key)) throw ParseError(std::string("point missing '") + key + "'", 1);
      if (!jp[key].is_string())
        throw ParseError(std::string("coordinate '") + key +
                             "' must be a string (floats are refused)",
                         1);
    }
    try {
      p.x = parse_rational(jp["x"].get<std::string>());
      p.y = parse_rational(jp["y"].get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(e.what(), 1);
    }
    points.push_back(std::move(p));
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> constraints;
  for (const auto& jc : doc["constraints"]) {
    if (!jc.is_array() || jc.size() != 2 || !jc[0].is_number_integer() ||
        !jc[1].is_number_integer())
      throw ParseError("constraint must be a pair of integer ids", 1);
    constraints.emplace_back(jc[0].get<std::int64_t>(), jc[1].get<std::int64_t>());
  }
  return Instance(std::move(points), std::move(constraints), level, cone_count);
}

inline std::string serialize_instance_json(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["points"] = nlohmann::ordered_json::array();
  for (const auto& p : inst.points()) {
    nlohmann::ordered_json jp;
    jp["id"] = p.id;
    jp["x"] = format_rational(p.x);
    jp["y"] = format_rational(p.y);
    doc["points"].push_back(std::move(jp));
  }
  doc["constraints"] = nlohmann::ordered_json::array();
  for (auto [a, b] : inst.constraints())
    doc["constraints"].push_back({inst.id_of(a), inst.id_of(b)});
  return doc.dump(2) + "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(content.data(), std::streamsize(content.size()));
}

inline bool json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

inline Instance load_instance(const std::string& path, Validation level = Validation::full,
                              int cone_count = 6) {
  const std::string content = read_file(path);
  return json_path(path) ? parse_instance_json(content, level, cone_count)
                         : parse_instance_text(content, level, cone_count);
}

inline void save_instance(const std::string& path, const Instance& inst) {
  write_file(path, json_path(path) ? serialize_instance_json(inst)
                                   : serialize_instance_text(inst));
}

}  // namespace visroute
