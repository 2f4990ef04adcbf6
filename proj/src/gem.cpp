#include "fano/gem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "fano/errors.hpp"

namespace fano {

std::string ColorSet::to_string() const {
  std::string out;
  for (Color c : kAllColors) {
    if (contains(c)) out.push_back(color_letter(c));
  }
  return out;
}

FlagGraph::FlagGraph(std::array<std::vector<int>, 4> partner, std::vector<int> label,
                     std::vector<std::string> names)
    : partner_(std::move(partner)), label_(std::move(label)), names_(std::move(names)) {}

void FlagGraph::check_matching(Color c) const {
  const auto& p = partner_[static_cast<int>(c)];
  if (static_cast<int>(p.size()) != num_flags()) {
    throw StructuralError(std::string("color ") + color_letter(c) + " matching has wrong size");
  }
  for (int x = 0; x < num_flags(); ++x) {
    const int y = p[x];
    if (y < 0 || y >= num_flags() || y == x || p[y] != x) {
      throw StructuralError(std::string("color ") + color_letter(c) +
                            " is not a perfect matching at flag " + std::to_string(x));
    }
  }
}

void FlagGraph::check_labels() const {
  const auto& v = partner_[static_cast<int>(Color::kV)];
  const auto& f = partner_[static_cast<int>(Color::kF)];
  std::vector<int> count(names_.size(), 0);
  for (int x = 0; x < num_flags(); ++x) {
    if (v[x] == f[x] || v[f[x]] != f[v[x]]) {
      throw StructuralError("v/f bigon through flag " + std::to_string(x) + " is not a 4-cycle");
    }
    const int l = label_[x];
    if (l < 0 || l >= num_labels()) {
      throw StructuralError("flag " + std::to_string(x) + " carries an unknown edge label");
    }
    if (label_[v[x]] != l || label_[f[x]] != l) {
      throw StructuralError("edge label is not constant on the e-square of flag " +
                            std::to_string(x));
    }
    ++count[l];
  }
  for (int l = 0; l < num_labels(); ++l) {
    if (count[l] != 4) throw StructuralError("edge label '" + names_[l] + "' is not on exactly one e-square");
  }
}

std::vector<int> FlagGraph::flags_with_label(int index) const {
  std::vector<int> out;
  for (int x = 0; x < num_flags(); ++x) {
    if (label_[x] == index) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> FlagGraph::bigons(Color first, Color second) const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(num_flags(), 0);
  for (int start = 0; start < num_flags(); ++start) {
    if (seen[start]) continue;
    std::vector<int> walk;
    int x = start;
    do {
      walk.push_back(x);
      seen[x] = 1;
      x = partner(first, x);
      walk.push_back(x);
      seen[x] = 1;
      x = partner(second, x);
    } while (x != start);
    out.push_back(std::move(walk));
  }
  return out;
}

std::vector<int> FlagGraph::components(int* count) const {
  std::vector<int> comp(num_flags(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < num_flags(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (Color c : kAllColors) {
        if (!has_color(c)) continue;
        const int y = partner(c, x);
        if (comp[y] == -1) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

std::vector<FlagGraph::ColoredEdge> FlagGraph::colored_edges() const {
  std::vector<ColoredEdge> out;
  for (Color c : kAllColors) {
    if (!has_color(c)) continue;
    for (int x = 0; x < num_flags(); ++x) {
      const int y = partner(c, x);
      if (x < y) out.push_back(ColoredEdge{c, x, y});
    }
  }
  return out;
}

Gem::Gem(std::vector<int> v, std::vector<int> f, std::vector<int> a, std::vector<int> label,
         std::vector<std::string> names)
    : FlagGraph({std::move(v), std::move(f), {}, std::move(a)}, std::move(label),
                std::move(names)) {
  for (Color c : {Color::kV, Color::kF, Color::kA}) check_matching(c);
  check_labels();
}

Jewel::Jewel(std::vector<int> v, std::vector<int> f, std::vector<int> z, std::vector<int> a,
             std::vector<int> label, std::vector<std::string> names)
    : FlagGraph({std::move(v), std::move(f), std::move(z), std::move(a)}, std::move(label),
                std::move(names)) {
  for (Color c : kAllColors) check_matching(c);
  check_labels();
  for (int x = 0; x < num_flags(); ++x) {
    if (partner(Color::kZ, x) != partner(Color::kV, partner(Color::kF, x))) {
      throw StructuralError("z-edge at flag " + std::to_string(x) +
                            " is not a diagonal of its e-square");
    }
  }
}

std::array<int, 4> Jewel::simplex(int index) const {
  const std::vector<int> flags = flags_with_label(index);
  const int x0 = flags.front();
  const int x1 = partner(Color::kV, x0);
  const int x2 = partner(Color::kF, x1);
  const int x3 = partner(Color::kV, x2);
  return {x0, x1, x2, x3};
}

namespace {

std::vector<int> partners_of(const EmbeddedGraph& g, Color c) {
  std::vector<int> out(g.num_flags());
  for (int x = 0; x < g.num_flags(); ++x) out[x] = flag_partner(g, c, x);
  return out;
}

std::vector<int> flag_labels(const EmbeddedGraph& g) {
  std::vector<int> out(g.num_flags());
  for (int x = 0; x < g.num_flags(); ++x) out[x] = x / 4;
  return out;
}

std::vector<std::string> edge_names(const EmbeddedGraph& g) {
  std::vector<std::string> out;
  for (const Edge& e : g.edges()) out.push_back(e.name);
  return out;
}

std::vector<int> copy_partner(const FlagGraph& g, Color c) {
  std::vector<int> out(g.num_flags());
  for (int x = 0; x < g.num_flags(); ++x) out[x] = g.partner(c, x);
  return out;
}

std::vector<int> copy_labels(const FlagGraph& g) {
  std::vector<int> out(g.num_flags());
  for (int x = 0; x < g.num_flags(); ++x) out[x] = g.label(x);
  return out;
}

}  // namespace

Gem build_gem(const EmbeddedGraph& g) {
  return Gem(partners_of(g, Color::kV), partners_of(g, Color::kF), partners_of(g, Color::kA),
             flag_labels(g), edge_names(g));
}

Jewel build_jewel(const EmbeddedGraph& g) { return gem_to_jewel(build_gem(g)); }

Jewel gem_to_jewel(const Gem& gem) {
  std::vector<int> z(gem.num_flags());
  for (int x = 0; x < gem.num_flags(); ++x) {
    z[x] = gem.partner(Color::kV, gem.partner(Color::kF, x));
  }
  return Jewel(copy_partner(gem, Color::kV), copy_partner(gem, Color::kF), std::move(z),
               copy_partner(gem, Color::kA), copy_labels(gem), gem.label_names());
}

Gem jewel_to_gem(const Jewel& jewel) {
  return Gem(copy_partner(jewel, Color::kV), copy_partner(jewel, Color::kF),
             copy_partner(jewel, Color::kA), copy_labels(jewel), jewel.label_names());
}

EmbeddedGraph gem_to_embedding(const Gem& gem) { return gem_to_embedding(gem, {}); }

EmbeddedGraph gem_to_embedding(const Gem& gem, const std::vector<std::string>& isolated) {
  const int n_flags = gem.num_flags();
  const int n_edges = gem.num_labels();

  // End 0 of each edge is the v-edge holding the smallest flag of its e-square.
  std::vector<int> smallest(n_edges, n_flags);
  for (int x = 0; x < n_flags; ++x) smallest[gem.label(x)] = std::min(smallest[gem.label(x)], x);
  std::vector<int> end_of(n_flags);
  for (int x = 0; x < n_flags; ++x) {
    const int s = smallest[gem.label(x)];
    end_of[x] = (x == s || x == gem.partner(Color::kV, s)) ? 0 : 1;
  }

  std::vector<int> side_of(n_flags, -1);
  std::vector<int> vertex_of(n_flags, -1);
  std::vector<std::vector<HalfEdge>> rotation;
  const auto vgons = gem.bigons(Color::kV, Color::kA);
  for (int v = 0; v < static_cast<int>(vgons.size()); ++v) {
    std::vector<HalfEdge> rot;
    const auto& walk = vgons[v];
    for (std::size_t i = 0; i < walk.size(); i += 2) {
      side_of[walk[i]] = 0;
      side_of[walk[i + 1]] = 1;
      vertex_of[walk[i]] = vertex_of[walk[i + 1]] = v;
      rot.push_back(HalfEdge{gem.label(walk[i]), end_of[walk[i]]});
    }
    rotation.push_back(std::move(rot));
  }

  std::vector<Edge> edges(n_edges);
  for (int e = 0; e < n_edges; ++e) {
    edges[e].name = gem.label_name(e);
    edges[e].ends = {-1, -1};
  }
  for (int x = 0; x < n_flags; ++x) {
    Edge& e = edges[gem.label(x)];
    e.ends[end_of[x]] = vertex_of[x];
    if (end_of[x] == 0 && side_of[x] == 0) {
      e.sign = side_of[gem.partner(Color::kF, x)] == 1 ? 1 : -1;
    }
  }

  std::vector<std::string> names;
  int counter = 0;
  auto fresh_name = [&]() {
    for (;;) {
      std::string candidate = "v" + std::to_string(counter++);
      if (std::find(isolated.begin(), isolated.end(), candidate) == isolated.end()) {
        return candidate;
      }
    }
  };
  for (std::size_t v = 0; v < vgons.size(); ++v) names.push_back(fresh_name());
  for (const std::string& name : isolated) {
    names.push_back(name);
    rotation.emplace_back();
  }
  return EmbeddedGraph(std::move(names), std::move(edges), std::move(rotation));
}

BigonCensus bigon_census(const Jewel& jewel) {
  auto lengths = [&](Color a, Color b) {
    std::vector<int> out;
    for (const auto& walk : jewel.bigons(a, b)) out.push_back(static_cast<int>(walk.size()));
    std::sort(out.begin(), out.end());
    return out;
  };
  return BigonCensus{lengths(Color::kV, Color::kA), lengths(Color::kF, Color::kA),
                     lengths(Color::kZ, Color::kA), lengths(Color::kV, Color::kF)};
}

MedialCheckerboard medial_checkerboard(const EmbeddedGraph& g) {
  const Gem gem = build_gem(g);
  const int n_flags = gem.num_flags();

  // Around each e-square the flags are x0 -v- x1 -f- x2 -v- x3 -f- x0. The
  // corner after flag x in that order lies in a face of the color of the
  // e-square edge leaving x.
  std::vector<Color> corner_color(n_flags);
  std::vector<std::vector<HalfEdge>> rotation(g.num_edges());
  std::vector<int> medial_edge_of(n_flags, -1);
  std::vector<int> halfedge_flag;
  std::vector<Edge> edges;
  for (int x = 0; x < n_flags; ++x) {
    const int y = gem.partner(Color::kA, x);
    if (x > y) continue;
    const int m = static_cast<int>(edges.size());
    medial_edge_of[x] = medial_edge_of[y] = m;
    halfedge_flag.push_back(x);
    halfedge_flag.push_back(y);
    edges.push_back(Edge{"a" + std::to_string(x) + "_" + std::to_string(y),
                         {gem.label(x), gem.label(y)}, 1});
  }
  auto halfedge_at = [&](int x) {
    const int m = medial_edge_of[x];
    return HalfEdge{m, halfedge_flag[2 * m] == x ? 0 : 1};
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    const int x0 = flag_id(e, 0, 0);
    const int x1 = gem.partner(Color::kV, x0);
    const int x2 = gem.partner(Color::kF, x1);
    const int x3 = gem.partner(Color::kV, x2);
    corner_color[x0] = corner_color[x2] = Color::kV;
    corner_color[x1] = corner_color[x3] = Color::kF;
    rotation[e] = {halfedge_at(x0), halfedge_at(x1), halfedge_at(x2), halfedge_at(x3)};
  }
  // A medial edge keeps its sides consistent exactly when the corner after it
  // at one end has a different color from the corner after it at the other.
  for (std::size_t m = 0; m < edges.size(); ++m) {
    const Color c0 = corner_color[halfedge_flag[2 * m]];
    const Color c1 = corner_color[halfedge_flag[2 * m + 1]];
    edges[m].sign = c0 != c1 ? 1 : -1;
  }

  std::vector<std::string> names = gem.label_names();
  MedialCheckerboard out{EmbeddedGraph(std::move(names), std::move(edges), std::move(rotation)),
                         std::move(halfedge_flag), {}};
  for (const auto& face : trace_faces(out.graph)) {
    const Flag first = flag_of(face.steps.front());
    const int x = out.halfedge_flag[2 * first.edge + first.end];
    const Color after = corner_color[x];
    const Color other = after == Color::kV ? Color::kF : Color::kV;
    out.face_color.push_back(first.side == 1 ? after : other);
  }
  return out;
}

namespace {

std::string encode_flag_graph(const FlagGraph& g, int isolated) {
  std::vector<Color> colors;
  for (Color c : kAllColors) {
    if (g.has_color(c)) colors.push_back(c);
  }
  std::vector<std::string> sorted = g.label_names();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> rank(g.num_labels());
  for (int l = 0; l < g.num_labels(); ++l) {
    rank[l] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), g.label_name(l)) -
                               sorted.begin());
  }

  int n_comp = 0;
  const std::vector<int> comp = g.components(&n_comp);
  std::vector<std::vector<int>> anchors(n_comp);
  std::vector<int> best_rank(n_comp, g.num_labels());
  for (int x = 0; x < g.num_flags(); ++x) {
    const int r = rank[g.label(x)];
    auto& list = anchors[comp[x]];
    if (r < best_rank[comp[x]]) {
      best_rank[comp[x]] = r;
      list.clear();
    }
    if (r == best_rank[comp[x]]) list.push_back(x);
  }

  // Labels pin every e-square, so a component is rigid once the image of one
  // flag is chosen; trying each flag of the smallest-label e-square as the
  // anchor covers every isomorphism, reflections included.
  std::vector<int> order(g.num_flags(), -1);
  std::vector<std::vector<int>> encodings;
  for (int c = 0; c < n_comp; ++c) {
    std::vector<int> best;
    for (int anchor : anchors[c]) {
      std::vector<int> queue{anchor};
      order[anchor] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Color col : colors) {
          const int y = g.partner(col, queue[head]);
          if (order[y] == -1) {
            order[y] = static_cast<int>(queue.size());
            queue.push_back(y);
          }
        }
      }
      std::vector<int> code;
      code.reserve(queue.size() * (colors.size() + 1));
      for (int x : queue) {
        code.push_back(rank[g.label(x)]);
        for (Color col : colors) code.push_back(order[g.partner(col, x)]);
      }
      for (int x : queue) order[x] = -1;
      if (best.empty() || code < best) best = std::move(code);
    }
    encodings.push_back(std::move(best));
  }
  std::sort(encodings.begin(), encodings.end());

  std::ostringstream out;
  out << "colors=";
  for (Color c : colors) out << color_letter(c);
  out << ";labels=";
  for (const auto& s : sorted) out << s.size() << ':' << s;
  out << ";isolated=" << isolated;
  for (const auto& code : encodings) {
    out << ";[";
    for (int v : code) out << v << ',';
    out << ']';
  }
  return out.str();
}

}  // namespace

std::string canonical_form(const EmbeddedGraph& g) {
  return encode_flag_graph(build_gem(g), g.num_isolated_vertices());
}

std::string canonical_form(const FlagGraph& gem_or_jewel) {
  return encode_flag_graph(gem_or_jewel, 0);
}

}  // namespace fano
