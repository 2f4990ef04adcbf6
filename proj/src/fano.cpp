#include "fano/fano.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fano/errors.hpp"
#include "fano/twist.hpp"

namespace fano {

ColorSet FanoVector::jewel_color_set() const {
  ColorSet s;
  if (bf() ^ bz()) s = s | ColorSet::of({Color::kV});
  if (bv() ^ bz()) s = s | ColorSet::of({Color::kF});
  if (bv() ^ bf()) s = s | ColorSet::of({Color::kZ});
  if (bv() ^ bf() ^ bz()) s = s | ColorSet::of({Color::kA});
  return s;
}

std::string FanoVector::bits_string() const {
  return {static_cast<char>('0' + bv()), static_cast<char>('0' + bf()),
          static_cast<char>('0' + bz())};
}

FanoSet FanoSet::of(std::initializer_list<int> packed) {
  FanoSet s;
  for (int p : packed) s.insert(FanoVector(p));
  return s;
}

int FanoSet::size() const { return __builtin_popcount(mask_); }

bool FanoSet::is_subspace() const {
  if (!contains(FanoVector(0))) return false;
  for (int p = 0; p < 8; ++p) {
    for (int q = 0; q < 8; ++q) {
      if (contains(FanoVector(p)) && contains(FanoVector(q)) && !contains(FanoVector(p ^ q))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<int> FanoSet::members() const {
  std::vector<int> out;
  for (int p = 0; p < 8; ++p) {
    if (contains(FanoVector(p))) out.push_back(p);
  }
  return out;
}

std::string FanoSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int p : members()) {
    if (!first) out += ",";
    out += FanoVector(p).bits_string();
    first = false;
  }
  return out + "}";
}

std::string FanoSet::nim_labels() const {
  std::string out = "{";
  bool first = true;
  for (int p : members()) {
    if (p == 0) continue;
    if (!first) out += ",";
    out += "p" + std::to_string(p);
    first = false;
  }
  return out + "}";
}

const char* condition_name(FanoVector p) {
  switch (p.packed()) {
    case 1: return "orientable";
    case 2: return "one-sided-iff-odd";
    case 3: return "bipartite";
    case 4: return "directable";
    case 5: return "face-2-colorable";
    case 6: return "zigzag-2-colorable";
    case 7: return "medial-bipartite";
    default: return "trivial";
  }
}

SLabeling s_labeling(const LabelGraph& graph, const std::vector<int>& roots) {
  const int n = graph.num_vertices;
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < static_cast<int>(graph.edges.size()); ++i) {
    const auto [u, w] = graph.edges[i];
    adj[u].emplace_back(w, i);
    if (u != w) adj[w].emplace_back(u, i);
  }

  SLabeling out;
  out.labels.assign(n, 0);
  out.component.assign(n, -1);
  std::vector<int> parent_edge(n, -1);
  std::vector<int> depth(n, 0);

  auto parent_of = [&](int x) {
    const auto [a, b] = graph.edges[parent_edge[x]];
    return a == x ? b : a;
  };

  auto climb = [&](int x, std::vector<int>& verts, std::vector<int>& edges, int stop) {
    while (x != stop) {
      verts.push_back(x);
      edges.push_back(parent_edge[x]);
      x = parent_of(x);
    }
  };

  auto make_witness = [&](int u, int w, int edge) {
    int a = u, b = w;
    while (depth[a] > depth[b]) a = parent_of(a);
    while (depth[b] > depth[a]) b = parent_of(b);
    while (a != b) {
      a = parent_of(a);
      b = parent_of(b);
    }
    const int lca = a;
    std::vector<int> up_u, up_u_edges, up_w, up_w_edges;
    climb(u, up_u, up_u_edges, lca);
    climb(w, up_w, up_w_edges, lca);
    OddWalk walk;
    walk.vertices.push_back(lca);
    for (auto it = up_u.rbegin(); it != up_u.rend(); ++it) walk.vertices.push_back(*it);
    for (auto it = up_u_edges.rbegin(); it != up_u_edges.rend(); ++it) walk.edges.push_back(*it);
    walk.edges.push_back(edge);
    for (std::size_t i = 0; i < up_w.size(); ++i) {
      walk.vertices.push_back(up_w[i]);
      walk.edges.push_back(up_w_edges[i]);
    }
    walk.vertices.push_back(lca);
    return walk;
  };

  std::vector<int> order = roots;
  order.reserve(roots.size() + n);
  for (int v = 0; v < n; ++v) order.push_back(v);

  int comp = 0;
  std::vector<int> queue;
  for (int root : order) {
    if (root < 0 || root >= n) throw InputError("s_labeling root out of range");
    if (out.component[root] != -1) continue;
    bool consistent = true;
    out.component[root] = comp;
    out.labels[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (const auto& [w, e] : adj[u]) {
        const std::uint8_t want = out.labels[u] ^ static_cast<std::uint8_t>(graph.in_s[e] ? 1 : 0);
        if (out.component[w] == -1) {
          out.component[w] = comp;
          out.labels[w] = want;
          parent_edge[w] = e;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (out.labels[w] != want) {
          if (consistent && !out.witness) out.witness = make_witness(u, w, e);
          consistent = false;
        }
      }
    }
    out.component_ok.push_back(consistent ? 1 : 0);
    out.ok = out.ok && consistent;
    ++comp;
  }
  return out;
}

LabelGraph flag_label_graph(const FlagGraph& graph, ColorSet s) {
  LabelGraph out;
  out.num_vertices = graph.num_flags();
  for (const auto& e : graph.colored_edges()) {
    out.edges.emplace_back(e.x, e.y);
    out.in_s.push_back(s.contains(e.color) ? 1 : 0);
  }
  return out;
}

SLabeling jewel_s_labeling(const FlagGraph& graph, ColorSet s) {
  return s_labeling(flag_label_graph(graph, s));
}

bool cwbar(const Jewel& jewel, FanoVector beta) {
  if (beta.is_zero()) return true;
  return jewel_s_labeling(jewel, beta.jewel_color_set()).ok;
}

FanoSet fano_set(const Jewel& jewel) {
  FanoSet out;
  for (int p = 0; p < 8; ++p) {
    if (cwbar(jewel, FanoVector(p))) out.insert(FanoVector(p));
  }
  return out;
}

FanoSet fano_set(const EmbeddedGraph& g) { return fano_set(build_jewel(g)); }

namespace {

bool holds(const EmbeddedGraph& g, int packed) { return cwbar(build_jewel(g), FanoVector(packed)); }

}  // namespace

bool is_orientable(const EmbeddedGraph& g) { return holds(g, 1); }
bool is_one_sided_iff_odd(const EmbeddedGraph& g) { return holds(g, 2); }
bool is_bipartite(const EmbeddedGraph& g) { return holds(g, 3); }
bool is_face_2_colorable(const EmbeddedGraph& g) { return holds(g, 5); }
bool is_zigzag_2_colorable(const EmbeddedGraph& g) { return holds(g, 6); }
bool is_medial_bipartite(const EmbeddedGraph& g) { return holds(g, 7); }

Directability is_directable(const EmbeddedGraph& g) {
  const Jewel jewel = build_jewel(g);
  const SLabeling lab = jewel_s_labeling(jewel, FanoVector(4).jewel_color_set());
  Directability out;
  out.directable = lab.ok;
  if (!lab.ok) return out;
  // The flag at the tail of an edge carries label 1, the head carries 0.
  for (int e = 0; e < g.num_edges(); ++e) {
    out.direction.push_back(lab.labels[flag_id(e, 0, 0)] == 1 ? 0 : 1);
  }
  return out;
}

namespace {

DerivedGraph quotient(const Jewel& jewel, std::string name, FanoVector condition, Color contract,
                      std::vector<Color> keep, bool merge_inside_simplex) {
  DerivedGraph out;
  out.name = std::move(name);
  out.condition = condition;
  std::vector<int> node(jewel.num_flags(), -1);
  for (int x = 0; x < jewel.num_flags(); ++x) {
    const int y = jewel.partner(contract, x);
    if (x < y) node[x] = node[y] = out.num_vertices++;
  }
  std::vector<char> merged(jewel.num_labels(), 0);
  for (Color c : keep) {
    for (int x = 0; x < jewel.num_flags(); ++x) {
      const int y = jewel.partner(c, x);
      if (x > y) continue;
      if (merge_inside_simplex && c != Color::kA) {
        if (merged[jewel.label(x)]) continue;
        merged[jewel.label(x)] = 1;
      }
      out.edges.emplace_back(node[x], node[y]);
    }
  }
  LabelGraph lg{out.num_vertices, out.edges, std::vector<char>(out.edges.size(), 1)};
  out.bipartite = s_labeling(lg).ok;
  return out;
}

}  // namespace

std::vector<DerivedGraph> derived_graphs(const EmbeddedGraph& g) {
  const Jewel j = build_jewel(g);
  using C = Color;
  return {
      quotient(j, "diagonal", FanoVector(1), C::kZ, {C::kV, C::kF, C::kA}, true),
      quotient(j, "side", FanoVector(2), C::kF, {C::kV, C::kA}, true),
      quotient(j, "end", FanoVector(4), C::kV, {C::kF, C::kA}, true),
      quotient(j, "corner", FanoVector(6), C::kA, {C::kV, C::kF}, false),
      quotient(j, "petrie-corner", FanoVector(5), C::kA, {C::kV, C::kZ}, false),
      quotient(j, "wilson-corner", FanoVector(3), C::kA, {C::kF, C::kZ}, false),
  };
}

MetatheoremReport verify_metatheorems(FanoSet x) {
  MetatheoremReport out;
  out.fano = x;
  if (!x.contains(FanoVector(0))) out.violations.push_back("000 missing");
  for (int p = 1; p < 8; ++p) {
    for (int q = p + 1; q < 8; ++q) {
      if (x.contains(FanoVector(p)) && x.contains(FanoVector(q)) &&
          !x.contains(FanoVector(p ^ q))) {
        out.closed_under_sum = false;
        out.violations.push_back("line {" + FanoVector(p).bits_string() + "," +
                                 FanoVector(q).bits_string() + "} lacks " +
                                 FanoVector(p ^ q).bits_string());
      }
    }
  }
  const int nonzero = x.size() - (x.contains(FanoVector(0)) ? 1 : 0);
  if (nonzero != 0 && nonzero != 1 && nonzero != 3 && nonzero != 7) {
    out.nonzero_count_ok = false;
    out.violations.push_back("nonzero count " + std::to_string(nonzero));
  }
  return out;
}

MetatheoremReport verify_metatheorems(const EmbeddedGraph& g) {
  const FanoSet x = fano_set(g);
  MetatheoremReport out = verify_metatheorems(x);
  auto swap_vf = [](FanoVector p) { return FanoVector(p.bf(), p.bv(), p.bz()); };
  auto swap_fz = [](FanoVector p) { return FanoVector(p.bv(), p.bz(), p.bf()); };
  auto swap_vz = [](FanoVector p) { return FanoVector(p.bz(), p.bf(), p.bv()); };
  if (fano_set(dual(g)) != x.mapped(swap_vf)) out.violations.push_back("dual does not swap bv,bf");
  if (fano_set(petrie_dual(g)) != x.mapped(swap_fz)) {
    out.violations.push_back("Petrie dual does not swap bf,bz");
  }
  if (fano_set(wilson_dual(g)) != x.mapped(swap_vz)) {
    out.violations.push_back("Wilson dual does not swap bv,bz");
  }
  return out;
}

std::vector<int> AbstractGraph::degrees() const {
  std::vector<int> deg(vertex_names.size(), 0);
  for (const auto& [u, w] : edges) {
    ++deg[u];
    ++deg[w];
  }
  return deg;
}

AbstractGraph underlying_graph(const EmbeddedGraph& g) {
  AbstractGraph out;
  out.vertex_names = g.vertex_names();
  for (const Edge& e : g.edges()) {
    out.edges.emplace_back(e.ends[0], e.ends[1]);
    out.edge_names.push_back(e.name);
  }
  return out;
}

FanoSet which_embeddings_possible(const AbstractGraph& graph) {
  const int n = graph.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, w] : graph.edges) parent[find(u)] = find(w);

  const std::vector<int> deg = graph.degrees();
  bool even_degrees = std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
  std::vector<int> edge_count(n, 0);
  for (const auto& [u, w] : graph.edges) ++edge_count[find(u)];
  bool even_edges = true;
  for (int v = 0; v < n; ++v) {
    if (find(v) == v && edge_count[v] % 2 != 0) even_edges = false;
  }
  LabelGraph lg{n, graph.edges, std::vector<char>(graph.edges.size(), 1)};
  const bool bipartite = s_labeling(lg).ok;

  FanoSet out = FanoSet::of({0, 1, 2});
  if (bipartite) out.insert(FanoVector(3));
  if (even_degrees) {
    out.insert(FanoVector(4));
    out.insert(FanoVector(5));
    out.insert(FanoVector(6));
    if (even_edges) out.insert(FanoVector(7));
  }
  return out;
}

}  // namespace fano
