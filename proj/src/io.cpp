#include "fano/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "fano/errors.hpp"

namespace fano::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

struct RawEdge {
  std::string id;
  std::string v;
  std::string w;
  int sign = 1;
  int line = 0;
};

struct RawRot {
  std::string vertex;
  std::vector<std::string> halfedges;
  int line = 0;
};

struct RawEmbedding {
  std::vector<std::pair<std::string, int>> vertices;  // id, line
  std::vector<RawEdge> edges;
  std::vector<RawRot> rots;
};

int parse_sign(const std::string& token, int line) {
  if (token == "+" || token == "+1" || token == "1") return 1;
  if (token == "-" || token == "-1") return -1;
  fail_at(line, "signature must be + or -, got '" + token + "'");
}

RawEmbedding read_text(std::string_view text, bool sign_optional) {
  RawEmbedding raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string& kind = words[0];
    if (kind == "vertex") {
      if (words.size() != 2) fail_at(number, "expected 'vertex <id>'");
      raw.vertices.emplace_back(words[1], number);
    } else if (kind == "edge") {
      if (words.size() == 4 && sign_optional) {
        raw.edges.push_back(RawEdge{words[1], words[2], words[3], 1, number});
      } else if (words.size() == 5) {
        raw.edges.push_back(
            RawEdge{words[1], words[2], words[3], parse_sign(words[4], number), number});
      } else {
        fail_at(number, "expected 'edge <id> <v> <w> <+|->'");
      }
    } else if (kind == "rot") {
      if (words.size() < 2) fail_at(number, "expected 'rot <v> : <e>:<end> ...'");
      RawRot rot{words[1], {}, number};
      std::size_t i = 2;
      if (!rot.vertex.empty() && rot.vertex.back() == ':') {
        rot.vertex.pop_back();
      } else if (i < words.size() && words[i] == ":") {
        ++i;
      } else {
        fail_at(number, "expected ':' after the vertex id in a rot line");
      }
      for (; i < words.size(); ++i) rot.halfedges.push_back(words[i]);
      raw.rots.push_back(std::move(rot));
    } else {
      fail_at(number, "unknown record '" + kind + "'");
    }
  }
  return raw;
}

std::pair<std::string, int> split_halfedge(const std::string& token, int line) {
  const auto colon = token.rfind(':');
  if (colon == std::string::npos || colon + 2 != token.size() ||
      (token[colon + 1] != '0' && token[colon + 1] != '1')) {
    fail_at(line, "half-edge '" + token + "' is not of the form <edge>:<0|1>");
  }
  return {token.substr(0, colon), token[colon + 1] - '0'};
}

struct Resolved {
  std::vector<std::string> vertex_names;
  std::map<std::string, int> vertex_index;
  std::vector<Edge> edges;
  std::map<std::string, int> edge_index;
};

Resolved resolve_graph(const RawEmbedding& raw) {
  Resolved r;
  for (const auto& [id, line] : raw.vertices) {
    if (!r.vertex_index.emplace(id, static_cast<int>(r.vertex_names.size())).second) {
      fail_at(line, "duplicate vertex '" + id + "'");
    }
    r.vertex_names.push_back(id);
  }
  for (const RawEdge& e : raw.edges) {
    const auto v = r.vertex_index.find(e.v);
    const auto w = r.vertex_index.find(e.w);
    if (v == r.vertex_index.end()) fail_at(e.line, "edge '" + e.id + "' uses unknown vertex '" + e.v + "'");
    if (w == r.vertex_index.end()) fail_at(e.line, "edge '" + e.id + "' uses unknown vertex '" + e.w + "'");
    if (!r.edge_index.emplace(e.id, static_cast<int>(r.edges.size())).second) {
      fail_at(e.line, "duplicate edge '" + e.id + "'");
    }
    r.edges.push_back(Edge{e.id, {v->second, w->second}, e.sign});
  }
  return r;
}

EmbeddedGraph build_embedding(const RawEmbedding& raw) {
  Resolved r = resolve_graph(raw);
  const int n = static_cast<int>(r.vertex_names.size());
  std::vector<std::vector<HalfEdge>> rotation(n);
  std::vector<int> rot_line(n, 0);
  std::map<std::pair<int, int>, int> placed;  // half-edge -> line
  for (const RawRot& rot : raw.rots) {
    const auto v = r.vertex_index.find(rot.vertex);
    if (v == r.vertex_index.end()) fail_at(rot.line, "rot for unknown vertex '" + rot.vertex + "'");
    if (rot_line[v->second] != 0) {
      fail_at(rot.line, "second rot line for '" + rot.vertex + "' (first at line " +
                            std::to_string(rot_line[v->second]) + ")");
    }
    rot_line[v->second] = rot.line;
    for (const std::string& token : rot.halfedges) {
      const auto [name, end] = split_halfedge(token, rot.line);
      const auto e = r.edge_index.find(name);
      if (e == r.edge_index.end()) fail_at(rot.line, "unknown edge '" + name + "'");
      const auto [it, inserted] = placed.emplace(std::make_pair(e->second, end), rot.line);
      if (!inserted) {
        fail_at(rot.line, "half-edge " + token + " placed twice (also at line " +
                              std::to_string(it->second) + ")");
      }
      if (r.edges[e->second].ends[end] != v->second) {
        fail_at(rot.line, "half-edge " + token + " belongs to vertex '" +
                              r.vertex_names[r.edges[e->second].ends[end]] + "', not '" +
                              rot.vertex + "'");
      }
      rotation[v->second].push_back(HalfEdge{e->second, end});
    }
  }
  for (const RawEdge& e : raw.edges) {
    for (int end = 0; end < 2; ++end) {
      if (!placed.count({r.edge_index[e.id], end})) {
        fail_at(e.line, "half-edge " + e.id + ":" + std::to_string(end) +
                            " does not appear in any rot line");
      }
    }
  }
  try {
    return EmbeddedGraph(std::move(r.vertex_names), std::move(r.edges), std::move(rotation));
  } catch (const StructuralError& err) {
    throw InputError(err.what());
  }
}

RawEmbedding read_json(std::string_view text, bool sign_optional) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    const std::size_t upto = std::min<std::size_t>(err.byte, text.size());
    int line = 1;
    for (std::size_t i = 0; i + 1 < upto; ++i) line += text[i] == '\n' ? 1 : 0;
    fail_at(line, std::string("malformed JSON: ") + err.what());
  }
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw InputError("JSON: " + what);
  };
  need(doc.is_object(), "top level must be an object");
  RawEmbedding raw;
  try {
    if (doc.contains("vertex")) {
      need(doc["vertex"].is_array(), "'vertex' must be an array of ids");
      int i = 0;
      for (const auto& v : doc["vertex"]) raw.vertices.emplace_back(v.get<std::string>(), ++i);
    }
    if (doc.contains("edge")) {
      need(doc["edge"].is_array(), "'edge' must be an array");
      int i = 0;
      for (const auto& e : doc["edge"]) {
        ++i;
        need(e.is_object() && e.contains("id") && e.contains("v") && e.contains("w"),
             "edge[" + std::to_string(i - 1) + "] needs id, v and w");
        RawEdge edge{e["id"].get<std::string>(), e["v"].get<std::string>(),
                     e["w"].get<std::string>(), 1, i};
        if (e.contains("sign")) {
          const std::string s = e["sign"].is_string() ? e["sign"].get<std::string>()
                                                      : std::to_string(e["sign"].get<int>());
          edge.sign = parse_sign(s, i);
        } else {
          need(sign_optional, "edge[" + std::to_string(i - 1) + "] needs a sign");
        }
        raw.edges.push_back(std::move(edge));
      }
    }
    if (doc.contains("rot")) {
      need(doc["rot"].is_object(), "'rot' must map vertex ids to half-edge lists");
      int i = 0;
      for (const auto& [vertex, list] : doc["rot"].items()) {
        RawRot rot{vertex, {}, ++i};
        for (const auto& h : list) rot.halfedges.push_back(h.get<std::string>());
        raw.rots.push_back(std::move(rot));
      }
    }
  } catch (const json::exception& err) {
    throw InputError(std::string("JSON: ") + err.what());
  }
  return raw;
}

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

}  // namespace

EmbeddedGraph parse_embedding_text(std::string_view text) {
  return build_embedding(read_text(text, false));
}

EmbeddedGraph parse_embedding_json(std::string_view text) {
  return build_embedding(read_json(text, false));
}

EmbeddedGraph parse_embedding(std::string_view text) {
  return looks_like_json(text) ? parse_embedding_json(text) : parse_embedding_text(text);
}

AbstractGraph parse_abstract_graph(std::string_view text) {
  const RawEmbedding raw = looks_like_json(text) ? read_json(text, true) : read_text(text, true);
  const Resolved r = resolve_graph(raw);
  AbstractGraph out;
  out.vertex_names = r.vertex_names;
  for (const Edge& e : r.edges) {
    out.edges.emplace_back(e.ends[0], e.ends[1]);
    out.edge_names.push_back(e.name);
  }
  return out;
}

std::string format_embedding_text(const EmbeddedGraph& g) {
  std::ostringstream out;
  for (const auto& name : g.vertex_names()) out << "vertex " << name << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << e.name << ' ' << g.vertex_name(e.ends[0]) << ' '
        << g.vertex_name(e.ends[1]) << ' ' << (e.sign == 1 ? '+' : '-') << '\n';
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.is_isolated(v)) continue;
    out << "rot " << g.vertex_name(v) << " :";
    for (const HalfEdge& h : g.rotation(v)) out << ' ' << g.edge(h.edge).name << ':' << h.end;
    out << '\n';
  }
  return out.str();
}

std::string format_embedding_json(const EmbeddedGraph& g) {
  json doc;
  doc["vertex"] = g.vertex_names();
  doc["edge"] = json::array();
  for (const Edge& e : g.edges()) {
    doc["edge"].push_back({{"id", e.name},
                           {"v", g.vertex_name(e.ends[0])},
                           {"w", g.vertex_name(e.ends[1])},
                           {"sign", e.sign == 1 ? "+" : "-"}});
  }
  doc["rot"] = json::object();
  for (int v = 0; v < g.num_vertices(); ++v) {
    json list = json::array();
    for (const HalfEdge& h : g.rotation(v)) list.push_back(g.edge(h.edge).name + ":" + std::to_string(h.end));
    doc["rot"][g.vertex_name(v)] = list;
  }
  return doc.dump(2) + "\n";
}

Bidirection parse_bidirection(const EmbeddedGraph& g, std::string_view text) {
  Bidirection out(g.num_flags());
  std::vector<int> seen(g.num_flags(), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto words = split_words(line);
    if (words.empty()) continue;
    if (words.size() != 3 || words[0] != "flag") fail_at(number, "expected 'flag <e>:<end>:<side> in|out'");
    const std::string& token = words[1];
    const auto c2 = token.rfind(':');
    const auto c1 = c2 == std::string::npos || c2 == 0 ? std::string::npos : token.rfind(':', c2 - 1);
    if (c1 == std::string::npos) fail_at(number, "flag '" + token + "' is not <e>:<end>:<side>");
    const std::string name = token.substr(0, c1);
    const std::string end = token.substr(c1 + 1, c2 - c1 - 1);
    const std::string side = token.substr(c2 + 1);
    if ((end != "0" && end != "1") || (side != "0" && side != "1")) {
      fail_at(number, "flag '" + token + "' needs end and side in {0,1}");
    }
    const auto e = g.find_edge(name);
    if (!e) fail_at(number, "unknown edge '" + name + "'");
    if (words[2] != "in" && words[2] != "out") fail_at(number, "direction must be in or out");
    const int x = flag_id(*e, end[0] - '0', side[0] - '0');
    if (seen[x]) fail_at(number, "flag " + token + " given twice (also line " + std::to_string(seen[x]) + ")");
    seen[x] = number;
    out.set(x, words[2] == "out");
  }
  for (int x = 0; x < g.num_flags(); ++x) {
    if (!seen[x]) {
      const Flag f = flag_of(x);
      throw InputError("bidirection is missing flag " + g.edge(f.edge).name + ":" +
                       std::to_string(f.end) + ":" + std::to_string(f.side));
    }
  }
  return out;
}

std::string format_bidirection(const EmbeddedGraph& g, const Bidirection& delta) {
  std::ostringstream out;
  for (int x = 0; x < delta.num_flags(); ++x) {
    const Flag f = flag_of(x);
    out << "flag " << g.edge(f.edge).name << ':' << f.end << ':' << f.side << ' '
        << (delta.is_out(x) ? "out" : "in") << '\n';
  }
  return out.str();
}

namespace {

const char* dot_color(Color c) {
  switch (c) {
    case Color::kV: return "red";
    case Color::kF: return "blue";
    case Color::kZ: return "green";
    case Color::kA: return "yellow";
  }
  return "black";
}

}  // namespace

std::string gem_to_dot(const FlagGraph& graph, const std::vector<std::string>& isolated) {
  std::ostringstream out;
  out << "graph gem {\n";
  if (!isolated.empty()) {
    out << "  // isolated vertices:";
    for (const auto& name : isolated) out << ' ' << name;
    out << '\n';
  }
  for (int x = 0; x < graph.num_flags(); ++x) {
    out << "  " << x << " [label=\"" << x << "\\n" << graph.label_name(graph.label(x)) << "\"];\n";
  }
  for (const auto& e : graph.colored_edges()) {
    out << "  " << e.x << " -- " << e.y << " [color=" << dot_color(e.color) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string gem_to_json(const FlagGraph& graph, const std::vector<std::string>& isolated) {
  json doc;
  doc["flags"] = graph.num_flags();
  json labels = json::array();
  for (int x = 0; x < graph.num_flags(); ++x) labels.push_back(graph.label_name(graph.label(x)));
  doc["labels"] = labels;
  json edges = json::object();
  for (Color c : kAllColors) {
    if (graph.has_color(c)) edges[std::string(1, color_letter(c))] = json::array();
  }
  for (const auto& e : graph.colored_edges()) {
    edges[std::string(1, color_letter(e.color))].push_back({e.x, e.y});
  }
  doc["edges"] = edges;
  doc["isolated_vertices"] = isolated;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace fano::io
