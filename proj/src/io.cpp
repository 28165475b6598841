#include "sysgraph/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace sysgraph::io {

using nlohmann::json;

namespace {

template <typename Int>
void append_int(std::string& out, Int value) {
  std::array<char, 24> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  out.append(buf.data(), end);
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

void expect_format(const json& doc, std::string_view format) {
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string() ||
      doc["format"].get<std::string>() != format) {
    throw FormatError("expected format \"" + std::string(format) + "\"");
  }
}

template <typename T>
T get_integer(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw FormatError(std::string("missing integer field \"") + key + "\"");
  }
  return doc[key].get<T>();
}

}  // namespace

std::string graph_to_json(const ColoredGraph& g) {
  std::string out;
  out.reserve(32 + g.num_edges() * 20);
  out += R"({"format":"pcg-1","dimension":)";
  append_int(out, g.dimension());
  out += R"(,"num_vertices":)";
  append_int(out, g.num_vertices());
  out += R"(,"edges":[)";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += '[';
    append_int(out, e.u);
    out += ',';
    append_int(out, e.v);
    out += ',';
    append_int(out, e.color);
    out += ']';
  }
  out += "]}\n";
  return out;
}

ColoredGraph graph_from_json(std::string_view text) {
  const json doc = parse(text);
  expect_format(doc, kGraphFormat);
  const int d = get_integer<int>(doc, "dimension");
  const auto n = get_integer<std::int64_t>(doc, "num_vertices");
  if (n <= 0) throw FormatError("num_vertices must be positive");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw FormatError("missing edge list");
  std::vector<ColoredEdge> edges;
  edges.reserve(doc["edges"].size());
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer()) {
      throw FormatError("edges must be [u, v, color] integer triples");
    }
    const auto u = e[0].get<std::int64_t>();
    const auto v = e[1].get<std::int64_t>();
    const auto c = e[2].get<std::int64_t>();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(GraphError::Kind::IdOutOfRange, "edge endpoint out of range");
    }
    if (c < 1 || c > d) {
      throw GraphError(GraphError::Kind::ColorOutOfRange, "edge color out of range", 0, 0,
                       static_cast<Color>(c));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(c)});
  }
  return ColoredGraph::validate(d, static_cast<std::uint64_t>(n), edges);
}

std::string complex_to_json(const RawComplex& c) {
  std::string out = R"({"format":"scx-1","num_colors":)";
  append_int(out, c.num_colors);
  out += R"(,"vertices":[)";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ',';
    out += '[';
    append_int(out, c.vertices[i].id);
    out += ',';
    append_int(out, c.vertices[i].color);
    out += ']';
  }
  out += R"(],"facets":[)";
  for (std::size_t f = 0; f < c.facets.size(); ++f) {
    if (f) out += ',';
    out += '[';
    for (std::size_t k = 0; k < c.facets[f].size(); ++k) {
      if (k) out += ',';
      append_int(out, c.facets[f][k]);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

RawComplex complex_from_json(std::string_view text) {
  const json doc = parse(text);
  expect_format(doc, kComplexFormat);
  RawComplex c;
  c.num_colors = get_integer<int>(doc, "num_colors");
  if (!doc.contains("vertices") || !doc["vertices"].is_array() || !doc.contains("facets") ||
      !doc["facets"].is_array()) {
    throw FormatError("scx-1 needs vertices and facets arrays");
  }
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
      throw FormatError("vertices must be [id, color] pairs");
    }
    c.vertices.push_back({v[0].get<std::int64_t>(), v[1].get<Color>()});
  }
  for (const auto& f : doc["facets"]) {
    if (!f.is_array()) throw FormatError("facets must be arrays of vertex ids");
    std::vector<std::int64_t> facet;
    for (const auto& id : f) {
      if (!id.is_number_integer()) throw FormatError("facet entries must be integers");
      facet.push_back(id.get<std::int64_t>());
    }
    c.facets.push_back(std::move(facet));
  }
  return c;
}

std::string detect_format(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string()) {
    throw FormatError("input has no \"format\" field");
  }
  return doc["format"].get<std::string>();
}

std::string_view palette(Color c) {
  static constexpr std::array<std::string_view, 12> kNames = {
      "red",  "blue", "green", "orange", "purple", "brown",
      "magenta", "cyan", "gold", "gray", "olive", "navy"};
  return kNames[static_cast<std::size_t>(c - 1) % kNames.size()];
}

std::string graph_to_dot(const ColoredGraph& g) {
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) os << "  " << v << ";\n";
  for (const auto& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v << " [color=" << palette(e.color)
       << ", label=\"" << e.color << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string complex_to_dot(const ChromaticComplex& c) {
  const auto adj = one_skeleton(c.raw());
  std::ostringstream os;
  os << "graph C {\n  node [shape=circle, style=filled];\n";
  for (std::uint32_t v = 0; v < c.num_vertices(); ++v) {
    os << "  " << c.raw().vertices[v].id << " [fillcolor=" << palette(c.color_of(v)) << "];\n";
  }
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    for (auto w : adj[v]) {
      if (w > v) os << "  " << c.raw().vertices[v].id << " -- " << c.raw().vertices[w].id << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_csv_edges(const ColoredGraph& g) {
  std::string out = "u,v,color\n";
  for (const auto& e : g.edges()) {
    append_int(out, e.u);
    out += ',';
    append_int(out, e.v);
    out += ',';
    append_int(out, e.color);
    out += '\n';
  }
  return out;
}

std::string complex_to_csv_edges(const ChromaticComplex& c) {
  const auto adj = one_skeleton(c.raw());
  std::string out = "u,v\n";
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    for (auto w : adj[v]) {
      if (w <= v) continue;
      append_int(out, c.raw().vertices[v].id);
      out += ',';
      append_int(out, c.raw().vertices[w].id);
      out += '\n';
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace sysgraph::io
