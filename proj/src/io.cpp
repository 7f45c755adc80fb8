#include "kgck/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "kgck/error.hpp"

namespace kgck {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const json& require(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) field_error(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) field_error(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& value, const std::string& where) {
  if (!value.is_string()) field_error(where, "expected a string");
  return value.get<std::string>();
}

std::uint32_t require_positive(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 1 ||
      value.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    field_error(where, "expected a positive integer");
  }
  return static_cast<std::uint32_t>(value.get<std::int64_t>());
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SkeletonSpec parse_graph(std::string_view text) {
  const json doc = parse_json(text);
  SkeletonSpec spec;
  spec.rank = require_positive(require(doc, "rank", "graph"), "rank");

  const json& vertices = require(doc, "vertices", "graph");
  if (!vertices.is_array()) field_error("vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    spec.vertices.push_back(require_string(vertices[i], "vertices[" + std::to_string(i) + "]"));
  }

  const json& edges = require(doc, "edges", "graph");
  if (!edges.is_array()) field_error("edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    spec.edges.push_back({require_string(require(e, "id", where), where + ".id"),
                          require_positive(require(e, "color", where), where + ".color"),
                          require_string(require(e, "range", where), where + ".range"),
                          require_string(require(e, "source", where), where + ".source")});
  }

  if (auto it = doc.find("squares"); it != doc.end()) {
    if (!it->is_array()) field_error("squares", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "squares[" + std::to_string(i) + "]";
      const json& sq = (*it)[i];
      if (!sq.is_array() || sq.size() != 4) {
        field_error(where, "expected [e, f, f', e'] with exactly 4 edge ids");
      }
      spec.squares.push_back({require_string(sq[0], where + "[0]"),
                              require_string(sq[1], where + "[1]"),
                              require_string(sq[2], where + "[2]"),
                              require_string(sq[3], where + "[3]")});
    }
  }
  check_structure(spec);
  return spec;
}

SkeletonSpec read_graph_file(const std::string& path) {
  try {
    return parse_graph(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

std::string emit_graph(const SkeletonSpec& spec) {
  const SkeletonSpec canonical = validate(spec).spec();
  json doc;
  doc["rank"] = canonical.rank;
  doc["vertices"] = canonical.vertices;
  doc["edges"] = json::array();
  for (const auto& e : canonical.edges) {
    doc["edges"].push_back({{"id", e.id}, {"color", e.color}, {"range", e.range}, {"source", e.source}});
  }
  doc["squares"] = json::array();
  for (const auto& s : canonical.squares) {
    doc["squares"].push_back({s.e, s.f, s.f_prime, s.e_prime});
  }
  return doc.dump(2) + "\n";
}

std::vector<PathFamily> parse_generators(const KGraph& g, std::string_view text) {
  const json doc = parse_json(text);
  const json& list = require(doc, "generators", "document");
  if (!list.is_array()) field_error("generators", "expected an array");
  std::vector<PathFamily> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    const json& entry = list[i];
    std::optional<VertexId> range;
    const json* paths = &entry;
    if (entry.is_object()) {
      const std::string name = require_string(require(entry, "range", where), where + ".range");
      range = g.find_vertex(name);
      if (!range) throw Error(ErrorCode::UnknownVertex, where + ".range: '" + name + "'");
      paths = &require(entry, "paths", where);
    }
    if (!paths->is_array()) field_error(where, "expected a list of path words");
    std::vector<Path> members;
    for (std::size_t j = 0; j < paths->size(); ++j) {
      members.push_back(g.parse_path(require_string((*paths)[j], where + "[" + std::to_string(j) + "]")));
    }
    if (!range) {
      if (members.empty()) field_error(where, "an empty family needs an explicit range");
      range = members.front().range();
    }
    out.emplace_back(*range, std::move(members));
  }
  return out;
}

std::vector<PathFamily> read_generators_file(const KGraph& g, const std::string& path) {
  return parse_generators(g, read_text_file(path));
}

std::string emit_generators(const KGraph& g, const std::vector<PathFamily>& families) {
  json list = json::array();
  for (const auto& f : families) {
    json paths = json::array();
    for (const auto& p : f.members()) paths.push_back(g.to_string(p));
    list.push_back({{"range", g.name(f.range())}, {"paths", paths}});
  }
  return json{{"generators", list}}.dump(2) + "\n";
}

DegreeVector parse_degree(std::string_view text, std::size_t rank) {
  std::vector<std::uint32_t> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(ErrorCode::ParseError, "bad degree '" + std::string(text) + "'");
    }
    coords.push_back(value);
    start = end + 1;
  }
  if (coords.size() != rank) {
    throw Error(ErrorCode::ParseError, "degree '" + std::string(text) + "' does not have " +
                                           std::to_string(rank) + " coordinates");
  }
  return DegreeVector(std::move(coords));
}

}  // namespace kgck
