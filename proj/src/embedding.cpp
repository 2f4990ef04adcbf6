#include "fano/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fano/errors.hpp"
#include "fano/fano.hpp"
#include "fano/gem.hpp"

namespace fano {

char color_letter(Color c) {
  switch (c) {
    case Color::kV: return 'v';
    case Color::kF: return 'f';
    case Color::kZ: return 'z';
    case Color::kA: return 'a';
  }
  return '?';
}

namespace {

std::string describe(const std::vector<Edge>& edges, HalfEdge h) {
  std::ostringstream out;
  out << edges[h.edge].name << ':' << h.end;
  return out.str();
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges,
                             std::vector<std::vector<HalfEdge>> rotation)
    : vertex_names_(std::move(vertex_names)),
      edges_(std::move(edges)),
      rotation_(std::move(rotation)) {
  const int n = num_vertices();
  if (static_cast<int>(rotation_.size()) != n) {
    throw StructuralError("rotation list count does not match vertex count");
  }
  {
    std::vector<std::string> sorted = vertex_names_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw StructuralError("duplicate vertex id '" + *dup + "'");
  }
  {
    std::vector<std::string> sorted;
    for (const Edge& e : edges_) sorted.push_back(e.name);
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw StructuralError("duplicate edge id '" + *dup + "'");
  }
  for (const Edge& e : edges_) {
    if (e.sign != 1 && e.sign != -1) {
      throw StructuralError("edge '" + e.name + "' has signature other than +1/-1");
    }
    for (int v : e.ends) {
      if (v < 0 || v >= n) throw StructuralError("edge '" + e.name + "' has an unknown endpoint");
    }
  }
  position_.assign(2 * edges_.size(), -1);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
      const HalfEdge h = rotation_[v][i];
      if (h.edge < 0 || h.edge >= num_edges() || (h.end != 0 && h.end != 1)) {
        throw StructuralError("rotation at '" + vertex_names_[v] + "' names an unknown half-edge");
      }
      if (edges_[h.edge].ends[h.end] != v) {
        throw StructuralError("half-edge " + describe(edges_, h) + " placed at '" +
                              vertex_names_[v] + "' but belongs to '" +
                              vertex_names_[edges_[h.edge].ends[h.end]] + "'");
      }
      int& slot = position_[2 * h.edge + h.end];
      if (slot != -1) {
        throw StructuralError("half-edge " + describe(edges_, h) + " placed twice");
      }
      slot = i;
    }
  }
  for (int e = 0; e < num_edges(); ++e) {
    for (int end = 0; end < 2; ++end) {
      if (position_[2 * e + end] == -1) {
        throw StructuralError("half-edge " + describe(edges_, HalfEdge{e, end}) +
                              " missing from its vertex rotation");
      }
    }
  }
}

int EmbeddedGraph::num_isolated_vertices() const {
  return static_cast<int>(
      std::count_if(rotation_.begin(), rotation_.end(), [](const auto& r) { return r.empty(); }));
}

HalfEdge EmbeddedGraph::successor(HalfEdge h) const {
  const auto& rot = rotation_[vertex_of(h)];
  return rot[(position(h) + 1) % rot.size()];
}

HalfEdge EmbeddedGraph::predecessor(HalfEdge h) const {
  const auto& rot = rotation_[vertex_of(h)];
  return rot[(position(h) + rot.size() - 1) % rot.size()];
}

std::optional<int> EmbeddedGraph::find_vertex(std::string_view name) const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (vertex_names_[v] == name) return v;
  }
  return std::nullopt;
}

std::optional<int> EmbeddedGraph::find_edge(std::string_view name) const {
  for (int e = 0; e < num_edges(); ++e) {
    if (edges_[e].name == name) return e;
  }
  return std::nullopt;
}

EmbeddedGraph EmbeddedGraph::with_signs(const std::vector<int>& signs) const {
  if (static_cast<int>(signs.size()) != num_edges()) {
    throw InputError("signature vector length differs from edge count");
  }
  std::vector<Edge> edges = edges_;
  for (int e = 0; e < num_edges(); ++e) edges[e].sign = signs[e];
  return EmbeddedGraph(vertex_names_, std::move(edges), rotation_);
}

EmbeddedGraph EmbeddedGraph::local_flip(int v) const {
  std::vector<Edge> edges = edges_;
  for (Edge& e : edges) {
    if ((e.ends[0] == v) != (e.ends[1] == v)) e.sign = -e.sign;
  }
  auto rotation = rotation_;
  std::reverse(rotation[v].begin(), rotation[v].end());
  return EmbeddedGraph(vertex_names_, std::move(edges), std::move(rotation));
}

bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  if (a.vertex_names_ != b.vertex_names_ || a.rotation_ != b.rotation_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.name != y.name || x.ends != y.ends || x.sign != y.sign) return false;
  }
  return true;
}

int flag_partner(const EmbeddedGraph& g, Color c, int flag) {
  const Flag x = flag_of(flag);
  switch (c) {
    case Color::kV:
      return flag_id(x.edge, x.end, 1 - x.side);
    case Color::kF: {
      const int side = g.edge(x.edge).sign == 1 ? 1 - x.side : x.side;
      return flag_id(x.edge, 1 - x.end, side);
    }
    case Color::kZ:
      return flag_partner(g, Color::kV, flag_partner(g, Color::kF, flag));
    case Color::kA: {
      const HalfEdge h{x.edge, x.end};
      if (x.side == 1) {
        const HalfEdge next = g.successor(h);
        return flag_id(next.edge, next.end, 0);
      }
      const HalfEdge prev = g.predecessor(h);
      return flag_id(prev.edge, prev.end, 1);
    }
  }
  return flag;
}

namespace {

std::vector<ClosedWalkTrace> trace_orbits(const EmbeddedGraph& g, WalkKind kind) {
  const Color step = kind == WalkKind::kFace ? Color::kF : Color::kZ;
  std::vector<ClosedWalkTrace> out;
  std::vector<char> seen(g.num_flags(), 0);
  for (int start = 0; start < g.num_flags(); ++start) {
    if (seen[start]) continue;
    ClosedWalkTrace trace{kind, {}, -1};
    int x = start;
    do {
      trace.steps.push_back(x);
      seen[x] = 1;
      x = flag_partner(g, step, x);
      trace.steps.push_back(x);
      seen[x] = 1;
      x = flag_partner(g, Color::kA, x);
    } while (x != start);
    out.push_back(std::move(trace));
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.is_isolated(v)) out.push_back(ClosedWalkTrace{kind, {}, v});
  }
  return out;
}

}  // namespace

std::vector<ClosedWalkTrace> trace_faces(const EmbeddedGraph& g) {
  return trace_orbits(g, WalkKind::kFace);
}

std::vector<ClosedWalkTrace> trace_zigzags(const EmbeddedGraph& g) {
  return trace_orbits(g, WalkKind::kZigzag);
}

DegreeSequences degree_sequences(const EmbeddedGraph& g) {
  DegreeSequences out;
  for (int v = 0; v < g.num_vertices(); ++v) out.vertices.push_back(g.degree(v));
  for (const auto& t : trace_faces(g)) out.faces.push_back(t.degree());
  for (const auto& t : trace_zigzags(g)) out.zigzags.push_back(t.degree());
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.faces.begin(), out.faces.end());
  std::sort(out.zigzags.begin(), out.zigzags.end());
  return out;
}

std::vector<int> vertex_components(const EmbeddedGraph& g, int* count) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.ends[0])] = find(e.ends[1]);
  std::vector<int> comp(g.num_vertices(), -1);
  std::vector<int> index_of_root(g.num_vertices(), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int r = find(v);
    if (index_of_root[r] == -1) index_of_root[r] = next++;
    comp[v] = index_of_root[r];
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool is_connected(const EmbeddedGraph& g) {
  int count = 0;
  vertex_components(g, &count);
  return count <= 1;
}

SurfaceData surface_data(const EmbeddedGraph& g) {
  int count = 0;
  const std::vector<int> comp = vertex_components(g, &count);
  SurfaceData out;
  out.components.resize(count);
  for (int v = 0; v < g.num_vertices(); ++v) out.components[comp[v]].vertices.push_back(v);
  for (const Edge& e : g.edges()) ++out.components[comp[e.ends[0]]].num_edges;
  for (const auto& face : trace_faces(g)) {
    const int v = face.steps.empty() ? face.isolated_vertex
                                     : g.vertex_of(HalfEdge{flag_of(face.steps[0]).edge,
                                                            flag_of(face.steps[0]).end});
    ++out.components[comp[v]].num_faces;
  }

  // A component is orientable exactly when its gem component is bipartite.
  const Jewel jewel = build_jewel(g);
  const SLabeling labeling = jewel_s_labeling(jewel, ColorSet::of({Color::kV, Color::kF, Color::kA}));
  for (int e = 0; e < g.num_edges(); ++e) {
    const int c = comp[g.edge(e).ends[0]];
    if (!labeling.component_ok[labeling.component[flag_id(e, 0, 0)]]) {
      out.components[c].orientable = false;
    }
  }

  for (auto& c : out.components) {
    c.euler_characteristic = static_cast<int>(c.vertices.size()) - c.num_edges + c.num_faces;
    c.genus = c.orientable ? (2 - c.euler_characteristic) / 2 : 2 - c.euler_characteristic;
    out.euler_characteristic += c.euler_characteristic;
    out.orientable = out.orientable && c.orientable;
  }
  return out;
}

}  // namespace fano
