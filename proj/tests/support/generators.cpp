#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace fano::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<std::string> names(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

EmbeddedGraph random_embedding(Rng& rng, const EmbeddingShape& shape) {
  const int m = uniform(rng, shape.min_edges, shape.max_edges);
  int n = uniform(rng, 1, shape.max_vertices);
  if (shape.connected) n = std::min(n, m + 1);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    int a = uniform(rng, 0, n - 1);
    int b = uniform(rng, 0, n - 1);
    if (shape.connected && i + 1 < n) {
      a = i + 1;
      b = uniform(rng, 0, i);
    }
    if (rng() & 1) std::swap(a, b);
    edges.push_back(Edge{"e" + std::to_string(i), {a, b}, (rng() & 1) ? 1 : -1});
  }
  std::vector<std::vector<HalfEdge>> rotation(n);
  for (int i = 0; i < m; ++i) {
    rotation[edges[i].ends[0]].push_back(HalfEdge{i, 0});
    rotation[edges[i].ends[1]].push_back(HalfEdge{i, 1});
  }
  for (auto& rot : rotation) std::shuffle(rot.begin(), rot.end(), rng);
  return EmbeddedGraph(names("v", n), std::move(edges), std::move(rotation));
}

AbstractGraph random_eulerian_graph(Rng& rng, int max_vertices, int max_edges) {
  const int n = uniform(rng, 1, max_vertices);
  const int length = uniform(rng, 1, max_edges);
  std::vector<int> walk(length);
  for (int& w : walk) w = uniform(rng, 0, n - 1);
  // Keep only vertices the walk touches so the graph is connected.
  std::vector<int> rename(n, -1);
  int used = 0;
  for (int& w : walk) {
    if (rename[w] == -1) rename[w] = used++;
    w = rename[w];
  }
  AbstractGraph g;
  g.vertex_names = names("v", used);
  for (int i = 0; i < length; ++i) {
    g.edges.emplace_back(walk[i], walk[(i + 1) % length]);
    g.edge_names.push_back("e" + std::to_string(i));
  }
  return g;
}

namespace {

std::vector<int> doubled_walk(Rng& rng, int n) {
  std::vector<int> walk;
  for (int v = 0; v < n; ++v) {
    walk.push_back(v);
    walk.push_back(v);
  }
  std::shuffle(walk.begin(), walk.end(), rng);
  return walk;
}

AbstractGraph walk_graph(const std::vector<int>& walk, int n) {
  AbstractGraph g;
  g.vertex_names = names("m", n);
  const int len = static_cast<int>(walk.size());
  for (int i = 0; i < len; ++i) {
    g.edges.emplace_back(walk[i], walk[(i + 1) % len]);
    g.edge_names.push_back("x" + std::to_string(i));
  }
  return g;
}

}  // namespace

FourRegularInput random_4regular_direction(Rng& rng, int max_vertices) {
  const int n = uniform(rng, 1, max_vertices);
  FourRegularInput in{walk_graph(doubled_walk(rng, n), n), {}};
  for (int i = 0; i < in.graph.num_edges(); ++i) {
    in.halfedge_out.push_back(1);
    in.halfedge_out.push_back(0);
  }
  return in;
}

FourRegularInput random_4regular_antidirection(Rng& rng, int max_vertices) {
  const int n = uniform(rng, 1, max_vertices);
  FourRegularInput in{walk_graph(doubled_walk(rng, n), n), {}};
  for (int i = 0; i < in.graph.num_edges(); ++i) {
    in.halfedge_out.push_back(static_cast<std::uint8_t>(i % 2));
    in.halfedge_out.push_back(static_cast<std::uint8_t>(i % 2));
  }
  return in;
}

std::optional<FourRegularInput> random_4regular_total(Rng& rng, int max_vertices) {
  const int n = uniform(rng, 1, max_vertices);
  FourRegularInput in{walk_graph(doubled_walk(rng, n), n), {}};
  LabelGraph lg{n, in.graph.edges, std::vector<char>(in.graph.edges.size(), 1)};
  const SLabeling sides = s_labeling(lg);
  if (!sides.ok) return std::nullopt;
  for (const auto& [u, w] : in.graph.edges) {
    in.halfedge_out.push_back(sides.labels[u]);
    in.halfedge_out.push_back(sides.labels[w]);
  }
  return in;
}

Bidirection random_balanced_or_total(Rng& rng, const Jewel& jewel) {
  Bidirection out(jewel.num_flags());
  for (int e = 0; e < jewel.num_labels(); ++e) {
    std::vector<int> flags = jewel.flags_with_label(e);
    if (rng() % 3 == 0) {
      const bool all_out = rng() & 1;
      for (int x : flags) out.set(x, all_out);
    } else {
      std::shuffle(flags.begin(), flags.end(), rng);
      out.set(flags[0], true);
      out.set(flags[1], true);
      out.set(flags[2], false);
      out.set(flags[3], false);
    }
  }
  return out;
}

std::vector<int> random_subset(Rng& rng, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (rng() & 1) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<int> relabel_by_first_appearance(const std::vector<int>& word) {
  std::vector<int> map(word.size(), -1);
  std::vector<int> out;
  int next = 0;
  for (int x : word) {
    if (map[x] == -1) map[x] = next++;
    out.push_back(map[x]);
  }
  return out;
}

bool is_rotation_minimal(const std::vector<int>& word) {
  std::vector<int> rotated(word.size());
  for (std::size_t s = 1; s < word.size(); ++s) {
    for (std::size_t i = 0; i < word.size(); ++i) rotated[i] = word[(i + s) % word.size()];
    if (relabel_by_first_appearance(rotated) < word) return false;
  }
  return true;
}

}  // namespace

void for_each_bouquet(int loops, const std::function<void(const EmbeddedGraph&)>& visit) {
  // Words of length 2k where each loop appears twice and loops first appear
  // in increasing order.
  std::vector<int> word;
  std::vector<int> count(loops, 0);
  std::function<void(int)> build = [&](int opened) {
    if (static_cast<int>(word.size()) == 2 * loops) {
      if (!is_rotation_minimal(word)) return;
      for (std::uint32_t signs = 0; signs < (1u << loops); ++signs) {
        std::vector<Edge> edges;
        for (int e = 0; e < loops; ++e) {
          edges.push_back(Edge{"l" + std::to_string(e), {0, 0}, (signs >> e & 1u) ? -1 : 1});
        }
        std::vector<int> seen(loops, 0);
        std::vector<HalfEdge> rot;
        for (int x : word) rot.push_back(HalfEdge{x, seen[x]++});
        visit(EmbeddedGraph({"v"}, std::move(edges), {rot}));
      }
      return;
    }
    for (int x = 0; x < opened; ++x) {
      if (count[x] == 1) {
        ++count[x];
        word.push_back(x);
        build(opened);
        word.pop_back();
        --count[x];
      }
    }
    if (opened < loops) {
      ++count[opened];
      word.push_back(opened);
      build(opened + 1);
      word.pop_back();
      --count[opened];
    }
  };
  build(0);
}

}  // namespace fano::testing
