#include "fano/eulerian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fano/errors.hpp"
#include "fano/twist.hpp"

namespace fano {

std::string to_string(const EulerianTriple& t) {
  auto b = [](bool x) { return x ? 'T' : 'F'; };
  return std::string("(") + b(t.even_vertex) + "," + b(t.even_face) + "," + b(t.even_zigzag) + ")";
}

EulerianTriple eulerian_triple(const Jewel& jewel) {
  const BigonCensus census = bigon_census(jewel);
  auto all_zero_mod4 = [](const std::vector<int>& lengths) {
    return std::all_of(lengths.begin(), lengths.end(), [](int n) { return n % 4 == 0; });
  };
  return EulerianTriple{all_zero_mod4(census.v_gons), all_zero_mod4(census.f_gons),
                        all_zero_mod4(census.z_gons)};
}

EulerianTriple eulerian_triple(const EmbeddedGraph& g) { return eulerian_triple(build_jewel(g)); }

EulerianTriple fano_implies_eulerian(FanoSet x) {
  // A member with bv = 1 makes every v-gon carry an even number of a-edges,
  // and likewise for bf with f-gons and bz with z-gons.
  EulerianTriple out;
  for (int p : x.members()) {
    const FanoVector beta(p);
    out.even_vertex = out.even_vertex || beta.bv();
    out.even_face = out.even_face || beta.bf();
    out.even_zigzag = out.even_zigzag || beta.bz();
  }
  return out;
}

std::string to_string(MixedKind k) {
  switch (k) {
    case MixedKind::kCT: return "ct-direction";
    case MixedKind::kDT: return "dt-direction";
    case MixedKind::kBT: return "bt-direction";
    case MixedKind::kBD: return "bd-antidirection";
    case MixedKind::kBC: return "bc-antidirection";
    case MixedKind::kCD: return "cd-antidirection";
  }
  return "?";
}

BidirectionKind kind_of(MixedKind k) {
  switch (k) {
    case MixedKind::kCT:
    case MixedKind::kDT:
    case MixedKind::kBT: return BidirectionKind::kDirection;
    default: return BidirectionKind::kAntidirection;
  }
}

std::array<EdgeType, 2> allowed_types(MixedKind k) {
  switch (k) {
    case MixedKind::kCT: return {EdgeType::kC, EdgeType::kTMinus};
    case MixedKind::kDT: return {EdgeType::kD, EdgeType::kTMinus};
    case MixedKind::kBT: return {EdgeType::kB, EdgeType::kTMinus};
    case MixedKind::kBD: return {EdgeType::kB, EdgeType::kD};
    case MixedKind::kBC: return {EdgeType::kB, EdgeType::kC};
    case MixedKind::kCD: return {EdgeType::kC, EdgeType::kD};
  }
  return {EdgeType::kOther, EdgeType::kOther};
}

MixedSearch find_mixed_bidirection(const Jewel& jewel, MixedKind kind) {
  // Both allowed types agree on one simplex color (constant for the
  // directions, flipped for the antidirections), so the labels only have to
  // be consistent on the bigons of that color with a.
  Color walk_color = Color::kV;
  switch (kind) {
    case MixedKind::kCT:
    case MixedKind::kBD: walk_color = Color::kV; break;
    case MixedKind::kDT:
    case MixedKind::kBC: walk_color = Color::kF; break;
    case MixedKind::kBT:
    case MixedKind::kCD: walk_color = Color::kZ; break;
  }
  const bool direction = kind_of(kind) == BidirectionKind::kDirection;
  LabelGraph graph;
  graph.num_vertices = jewel.num_flags();
  for (Color c : {walk_color, Color::kA}) {
    for (int x = 0; x < jewel.num_flags(); ++x) {
      const int y = jewel.partner(c, x);
      if (x > y) continue;
      graph.edges.emplace_back(x, y);
      graph.in_s.push_back(static_cast<char>((c == Color::kA) == direction));
    }
  }
  const SLabeling lab = s_labeling(graph);
  MixedSearch out;
  out.found = lab.ok;
  if (lab.ok) {
    out.bidirection = Bidirection(lab.labels);
  } else {
    out.obstruction = lab.witness->vertices;
    out.obstruction.pop_back();
  }
  return out;
}

MixedSearch find_mixed_bidirection(const EmbeddedGraph& g, MixedKind kind) {
  return find_mixed_bidirection(build_jewel(g), kind);
}

std::vector<std::vector<CircuitStep>> euler_circuits(const AbstractGraph& graph) {
  const int n = graph.num_vertices();
  const std::vector<int> deg = graph.degrees();
  for (int v = 0; v < n; ++v) {
    if (deg[v] % 2 != 0) {
      throw InputError("vertex '" + graph.vertex_names[v] + "' has odd degree " +
                       std::to_string(deg[v]));
    }
  }
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < graph.num_edges(); ++i) {
    adj[graph.edges[i].first].push_back(i);
    if (graph.edges[i].first != graph.edges[i].second) adj[graph.edges[i].second].push_back(i);
  }
  std::vector<char> used(graph.num_edges(), 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<std::vector<CircuitStep>> out;

  for (int start = 0; start < n; ++start) {
    if (adj[start].empty() || std::all_of(adj[start].begin(), adj[start].end(),
                                          [&](int e) { return used[e]; })) {
      continue;
    }
    struct Frame {
      int vertex;
      CircuitStep via;
    };
    std::vector<Frame> stack{{start, {-1, true}}};
    std::vector<CircuitStep> circuit;
    while (!stack.empty()) {
      const int v = stack.back().vertex;
      while (next[v] < adj[v].size() && used[adj[v][next[v]]]) ++next[v];
      if (next[v] == adj[v].size()) {
        if (stack.back().via.edge >= 0) circuit.push_back(stack.back().via);
        stack.pop_back();
        continue;
      }
      const int e = adj[v][next[v]];
      used[e] = 1;
      const auto [a, b] = graph.edges[e];
      const bool forward = a == v;
      stack.push_back(Frame{forward ? b : a, CircuitStep{e, forward}});
    }
    std::reverse(circuit.begin(), circuit.end());
    out.push_back(std::move(circuit));
  }
  return out;
}

EmbeddedGraph construct_embedding(const AbstractGraph& graph, EulerTarget target) {
  const int n = graph.num_vertices();
  if (n == 0) throw InputError("graph has no vertices");
  {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [u, w] : graph.edges) parent[find(u)] = find(w);
    for (int v = 1; v < n; ++v) {
      if (find(v) != find(0)) {
        throw InputError("graph is not connected: '" + graph.vertex_names[v] +
                         "' is unreachable from '" + graph.vertex_names[0] + "'");
      }
    }
  }
  if (target == EulerTarget::kMedialBipartite && graph.num_edges() % 2 != 0) {
    throw InputError("graph has an odd number of edges (" + std::to_string(graph.num_edges()) +
                     "); this target needs an even count");
  }
  const auto circuits = euler_circuits(graph);

  std::vector<Edge> edges(graph.num_edges());
  std::vector<std::vector<HalfEdge>> group0(n), group1(n);
  if (!circuits.empty()) {
    const auto& circuit = circuits.front();
    for (std::size_t i = 0; i < circuit.size(); ++i) {
      const CircuitStep step = circuit[i];
      const auto [a, b] = graph.edges[step.edge];
      Edge& e = edges[step.edge];
      e.name = step.edge < static_cast<int>(graph.edge_names.size())
                   ? graph.edge_names[step.edge]
                   : "e" + std::to_string(step.edge);
      e.ends = step.forward ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
      e.sign = 1;
      // Bundle: split half-edges into outgoing and incoming along the circuit.
      // Medial-bipartite: split by the parity of the edge's circuit position.
      if (target == EulerTarget::kBundle) {
        group0[e.ends[0]].push_back(HalfEdge{step.edge, 0});
        group1[e.ends[1]].push_back(HalfEdge{step.edge, 1});
      } else {
        auto& group = (i % 2 == 0) ? group0 : group1;
        group[e.ends[0]].push_back(HalfEdge{step.edge, 0});
        group[e.ends[1]].push_back(HalfEdge{step.edge, 1});
      }
    }
  }
  std::vector<std::vector<HalfEdge>> rotation(n);
  for (int v = 0; v < n; ++v) {
    if (group0[v].size() != group1[v].size()) {
      throw StructuralError("unbalanced half-edge groups at '" + graph.vertex_names[v] + "'");
    }
    for (std::size_t i = 0; i < group0[v].size(); ++i) {
      rotation[v].push_back(group0[v][i]);
      rotation[v].push_back(group1[v][i]);
    }
  }
  return EmbeddedGraph(graph.vertex_names, std::move(edges), std::move(rotation));
}

std::vector<VfGon> enumerate_vf_gons(const Jewel& jewel, std::size_t cap) {
  const int n = jewel.num_flags();
  std::vector<VfGon> out;
  std::vector<int> commit(jewel.num_labels(), -1);
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  std::vector<Color> joins;

  int start = 0;
  // Called with the walk standing on flag y, just reached along an a-edge.
  std::function<void(int)> extend = [&](int y) {
    const int label = jewel.label(y);
    for (int choice = 0; choice < 2; ++choice) {
      if (commit[label] != -1 && commit[label] != choice) continue;
      const bool fresh = commit[label] == -1;
      if (fresh) commit[label] = choice;
      const Color c = choice == 0 ? Color::kV : Color::kF;
      const int next = jewel.partner(c, y);
      joins.push_back(c);
      if (next == start) {
        if (out.size() >= cap) throw DomainError("more than " + std::to_string(cap) + " v/f-gons");
        out.push_back(VfGon{path, joins});
      } else if (next > start && !on_path[next]) {
        const int after = jewel.partner(Color::kA, next);
        if (after > start && !on_path[after]) {
          path.push_back(next);
          path.push_back(after);
          on_path[next] = on_path[after] = 1;
          extend(after);
          on_path[next] = on_path[after] = 0;
          path.pop_back();
          path.pop_back();
        }
      }
      joins.pop_back();
      if (fresh) commit[label] = -1;
    }
  };

  for (start = 0; start < n; ++start) {
    const int y = jewel.partner(Color::kA, start);
    if (y < start) continue;
    path = {start, y};
    on_path[start] = on_path[y] = 1;
    extend(y);
    on_path[start] = on_path[y] = 0;
  }
  return out;
}

bool all_partial_duals_eulerian(const Jewel& jewel) {
  const auto gons = enumerate_vf_gons(jewel);
  return std::all_of(gons.begin(), gons.end(), [](const VfGon& c) { return c.length() % 4 == 0; });
}

bool all_partial_duals_eulerian(const EmbeddedGraph& g) {
  if (!is_connected(g)) throw InputError("embedding is not connected");
  return all_partial_duals_eulerian(build_jewel(g));
}

std::vector<bool> all_partial_duals_eulerian_per_component(const EmbeddedGraph& g) {
  int count = 0;
  const std::vector<int> comp = vertex_components(g, &count);
  std::vector<bool> out(count, true);
  for (const VfGon& c : enumerate_vf_gons(build_jewel(g))) {
    if (c.length() % 4 == 0) continue;
    const Flag x = flag_of(c.flags.front());
    out[comp[g.vertex_of(HalfEdge{x.edge, x.end})]] = false;
  }
  return out;
}

namespace {

void check_oracle_size(const EmbeddedGraph& g) {
  if (g.num_edges() > 16) throw DomainError("exhaustive partial-dual check limited to 16 edges");
}

std::vector<int> subset_of(std::uint32_t mask, int m) {
  std::vector<int> out;
  for (int e = 0; e < m; ++e) {
    if (mask >> e & 1u) out.push_back(e);
  }
  return out;
}

}  // namespace

bool all_partial_duals_eulerian_oracle(const EmbeddedGraph& g) {
  check_oracle_size(g);
  const int m = g.num_edges();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const EmbeddedGraph h = partial_dual(g, subset_of(mask, m));
    for (int v = 0; v < h.num_vertices(); ++v) {
      if (h.degree(v) % 2 != 0) return false;
    }
  }
  return true;
}

ColorCounts cycle_color_counts(const Jewel& jewel, const std::vector<int>& cycle) {
  ColorCounts out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int x = cycle[i];
    const int y = cycle[(i + 1) % cycle.size()];
    int matches = 0;
    Color found = Color::kV;
    for (Color c : kAllColors) {
      if (jewel.partner(c, x) == y) {
        ++matches;
        found = c;
      }
    }
    if (matches != 1) {
      throw InputError("flags " + std::to_string(x) + " and " + std::to_string(y) +
                       (matches == 0 ? " are not adjacent" : " are joined by parallel edges"));
    }
    switch (found) {
      case Color::kV: ++out.v; break;
      case Color::kF: ++out.f; break;
      case Color::kZ: ++out.z; break;
      case Color::kA: ++out.a; break;
    }
  }
  return out;
}

SingleVertexDiagnosis all_partial_duals_single_vertex(const EmbeddedGraph& g) {
  SingleVertexDiagnosis out;
  if (g.num_vertices() != 1) {
    out.reason = "embedding has " + std::to_string(g.num_vertices()) + " vertices";
    return out;
  }
  const auto& rot = g.rotation(0);
  std::vector<std::array<int, 2>> pos(g.num_edges(), {-1, -1});
  for (int i = 0; i < static_cast<int>(rot.size()); ++i) pos[rot[i].edge][rot[i].end] = i;
  for (auto& p : pos) {
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).sign == 1) out.untwisted.push_back(e);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    for (int f = e + 1; f < g.num_edges(); ++f) {
      const bool first_inside = pos[e][0] < pos[f][0] && pos[f][0] < pos[e][1];
      const bool second_inside = pos[e][0] < pos[f][1] && pos[f][1] < pos[e][1];
      if (first_inside != second_inside) out.interlaced.push_back({e, f});
    }
  }

  // Cross-check: reading the rotation as a chord diagram, matched ends must
  // nest like parentheses.
  std::vector<int> stack;
  std::vector<char> opened(g.num_edges(), 0);
  bool nested = true;
  for (const HalfEdge& h : rot) {
    if (!opened[h.edge]) {
      opened[h.edge] = 1;
      stack.push_back(h.edge);
    } else if (!stack.empty() && stack.back() == h.edge) {
      stack.pop_back();
    } else {
      nested = false;
    }
  }
  out.chord_check = nested && out.untwisted.empty();
  out.holds = out.untwisted.empty() && out.interlaced.empty();
  if (!out.untwisted.empty()) {
    out.reason = "loop '" + g.edge(out.untwisted.front()).name + "' is not twisted";
  } else if (!out.interlaced.empty()) {
    out.reason = "loops '" + g.edge(out.interlaced.front()[0]).name + "' and '" +
                 g.edge(out.interlaced.front()[1]).name + "' are interlaced";
  }
  return out;
}

bool all_partial_duals_single_vertex_oracle(const EmbeddedGraph& g) {
  check_oracle_size(g);
  const int m = g.num_edges();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (partial_dual(g, subset_of(mask, m)).num_vertices() != 1) return false;
  }
  return true;
}

}  // namespace fano
