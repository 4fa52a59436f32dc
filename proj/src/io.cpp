#include "gp/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gp::io {

namespace {

using nlohmann::json;

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

json point_to_array(const Point& p) {
  json a = json::array();
  for (Coord c : p.coords()) a.push_back(c);
  return a;
}

json set_to_array(const PointSet& s) {
  json a = json::array();
  for (const Point& p : s) a.push_back(point_to_array(p));
  return a;
}

Coord parse_coord(const std::string& token) {
  std::size_t used = 0;
  Coord value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer coordinate: '" + token + "'");
  }
  require(used == token.size(), "trailing junk in coordinate: '" + token + "'");
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(line);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trimmed(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  return s.substr(b);
}

}  // namespace

std::string points_to_json(const PointSet& s, const std::optional<std::string>& convention) {
  require(!s.empty(), "refusing to serialize an empty point set");
  json j;
  j["dim"] = s.dimension();
  j["points"] = set_to_array(s);
  if (convention) j["convention"] = *convention;
  return j.dump(2);
}

PointSet points_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  require(j.is_object() && j.contains("dim") && j.contains("points"),
          "expected an object with \"dim\" and \"points\"");
  require(j["dim"].is_number_unsigned() && j["dim"].get<std::uint64_t>() >= 1,
          "\"dim\" must be a positive integer");
  const auto dim = j["dim"].get<std::size_t>();
  require(j["points"].is_array(), "\"points\" must be an array");
  std::vector<Point> points;
  points.reserve(j["points"].size());
  for (const json& row : j["points"]) {
    require(row.is_array() && row.size() == dim, "every point needs exactly \"dim\" coordinates");
    std::vector<Coord> coords;
    coords.reserve(dim);
    for (const json& c : row) {
      require(c.is_number_integer(), "coordinates must be integers");
      coords.push_back(c.get<Coord>());
    }
    points.emplace_back(std::move(coords));
  }
  return PointSet(std::move(points));
}

std::string points_to_csv(const PointSet& s) {
  require(!s.empty(), "refusing to serialize an empty point set");
  std::ostringstream out;
  for (std::size_t j = 1; j <= s.dimension(); ++j) out << (j > 1 ? "," : "") << 'x' << j;
  out << '\n';
  for (const Point& p : s) {
    for (std::size_t j = 0; j < p.dimension(); ++j) out << (j > 0 ? "," : "") << p[j];
    out << '\n';
  }
  return out.str();
}

PointSet points_from_csv(const std::string& text) {
  std::vector<Point> points;
  std::istringstream in(text);
  std::string line;
  std::size_t dim = 0;
  bool first = true;
  while (std::getline(in, line)) {
    line = trimmed(line);
    if (line.empty()) continue;
    const std::vector<std::string> tokens = split(line, ',');
    if (first) {
      first = false;
      dim = tokens.size();
      // a header row (x1,...,xn or similar) is optional; data rows are all-numeric
      bool numeric = true;
      for (const auto& t : tokens)
        if (t.find_first_not_of("-0123456789") != std::string::npos) numeric = false;
      if (!numeric) continue;
    }
    require(tokens.size() == dim, "ragged CSV row: '" + line + "'");
    std::vector<Coord> coords;
    coords.reserve(dim);
    for (const auto& t : tokens) coords.push_back(parse_coord(t));
    points.emplace_back(std::move(coords));
  }
  require(!points.empty(), "CSV contains no points");
  return PointSet(std::move(points));
}

PointSet load_points(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  if (path.ends_with(".json")) return points_from_json(text);
  if (path.ends_with(".csv")) return points_from_csv(text);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  require(first != std::string::npos, "input is empty");
  return text[first] == '{' ? points_from_json(text) : points_from_csv(text);
}

std::string table_csv(const ExtremalSet& x) {
  const std::size_t count = x.points.size();
  const std::size_t n = x.points.dimension();
  std::ostringstream out;
  out << 'i';
  for (std::size_t i = 1; i <= count; ++i) out << ',' << i;
  out << '\n';
  for (std::size_t j = 0; j < n; ++j) {
    out << "x_{i," << j + 1 << '}';
    for (std::size_t i = 0; i < count; ++i) out << ',' << x.points[i][j];
    out << '\n';
  }
  return out.str();
}

std::string witness_to_json(const WitnessTriple& t) {
  json j;
  j["u"] = point_to_array(t.u);
  j["v"] = point_to_array(t.v);
  j["w"] = point_to_array(t.w);
  return j.dump(2);
}

std::string witness_search_to_json(const WitnessSearch& search, bool include_trace) {
  json j;
  j["u"] = point_to_array(search.triple.u);
  j["v"] = point_to_array(search.triple.v);
  j["w"] = point_to_array(search.triple.w);
  if (include_trace) {
    json stages = json::array();
    for (const auto& stage : search.stages) stages.push_back(stage);
    j["stages"] = std::move(stages);
  }
  return j.dump(2);
}

GridSpec parse_grid(const std::string& text) {
  const std::size_t colon = text.find(':');
  require(colon != std::string::npos, "grid must look like box:4x4, torus:8x8 or lattice:3");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  require(!rest.empty(), "missing grid sides in '" + text + "'");
  if (kind == "lattice") return GridSpec::infinite(static_cast<std::size_t>(parse_coord(rest)));
  std::vector<Coord> sides;
  for (const auto& token : split(rest, 'x')) sides.push_back(parse_coord(token));
  if (kind == "box") return GridSpec::box(std::move(sides));
  if (kind == "torus") return GridSpec::torus(std::move(sides));
  throw std::invalid_argument("unknown grid kind '" + kind + "'");
}

std::string solve_report_to_json(const SolveReport& report) {
  json j;
  j["grid"] = report.grid.describe();
  j["gp"] = report.result.gp;
  if (report.mode == SolveMode::CountAll) {
    j["mode"] = "count";
    if (report.result.count_maximum) j["count_maximum"] = *report.result.count_maximum;
    if (report.result.count_maximum_up_to_symmetry)
      j["count_maximum_up_to_symmetry"] = *report.result.count_maximum_up_to_symmetry;
  } else {
    j["mode"] = "witness";
    if (!report.result.witness_sets.empty())
      j["witness_set"] = set_to_array(report.result.witness_sets.front());
  }
  if (report.include_stats) {
    j["nodes_explored"] = report.result.nodes_explored;
    j["elapsed_seconds"] = report.result.elapsed.count();
  }
  return j.dump(2);
}

}  // namespace gp::io
