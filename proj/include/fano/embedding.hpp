#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fano {

// Edge colors of gems and jewels. A gem uses V, F and A only.
enum class Color : std::uint8_t { kV = 0, kF = 1, kZ = 2, kA = 3 };

inline constexpr std::array<Color, 4> kAllColors = {Color::kV, Color::kF, Color::kZ,
                                                    Color::kA};

char color_letter(Color c);

struct HalfEdge {
  int edge = 0;
  int end = 0;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct Edge {
  std::string name;
  std::array<int, 2> ends{};  // vertex index at end 0 and at end 1
  int sign = 1;               // +1 untwisted, -1 twisted
};

// A flag is (edge, end, side). Side 0 faces the rotation predecessor of the
// half-edge, side 1 faces its successor. Flags are numbered 4*edge + 2*end + side.
struct Flag {
  int edge = 0;
  int end = 0;
  int side = 0;
  friend auto operator<=>(const Flag&, const Flag&) = default;
};

constexpr int flag_id(int edge, int end, int side) { return 4 * edge + 2 * end + side; }
constexpr int flag_id(Flag f) { return flag_id(f.edge, f.end, f.side); }
constexpr Flag flag_of(int id) { return Flag{id / 4, (id / 2) % 2, id % 2}; }

// Cellularly embedded multigraph given by a rotation system with edge signatures.
// Immutable once constructed; the constructor validates every invariant and
// throws StructuralError on the first violation.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  EmbeddedGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges,
                std::vector<std::vector<HalfEdge>> rotation);

  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_flags() const { return 4 * num_edges(); }

  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<HalfEdge>& rotation(int v) const { return rotation_[v]; }
  const std::vector<std::vector<HalfEdge>>& rotations() const { return rotation_; }

  int vertex_of(HalfEdge h) const { return edges_[h.edge].ends[h.end]; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
  bool is_isolated(int v) const { return rotation_[v].empty(); }
  int num_isolated_vertices() const;

  HalfEdge successor(HalfEdge h) const;
  HalfEdge predecessor(HalfEdge h) const;

  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_edge(std::string_view name) const;

  // Same graph and rotations with a new signature vector.
  EmbeddedGraph with_signs(const std::vector<int>& signs) const;

  // Reverses the rotation at v and flips the signature of every non-loop
  // edge at v. The embedding is unchanged up to equivalence.
  EmbeddedGraph local_flip(int v) const;

  friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b);

 private:
  int position(HalfEdge h) const { return position_[2 * h.edge + h.end]; }

  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> rotation_;
  std::vector<int> position_;
};

// Partner of a flag under one gem color, read straight from the rotation system.
// v joins the two sides of a half-edge, a joins side 1 of a half-edge with side 0
// of its rotation successor, f joins the two ends of an edge along one side, and
// z is the composite of v and f.
int flag_partner(const EmbeddedGraph& g, Color c, int flag);

enum class WalkKind { kFace, kZigzag };

// A face or zigzag as the cyclic sequence of flags it visits. Positions 2i and
// 2i+1 are joined by an f-edge (z-edge for zigzags) and positions 2i+1 and 2i+2
// by an a-edge. An isolated vertex yields a single walk with no steps.
struct ClosedWalkTrace {
  WalkKind kind = WalkKind::kFace;
  std::vector<int> steps;
  int isolated_vertex = -1;

  int degree() const { return static_cast<int>(steps.size()) / 2; }
};

std::vector<ClosedWalkTrace> trace_faces(const EmbeddedGraph& g);
std::vector<ClosedWalkTrace> trace_zigzags(const EmbeddedGraph& g);

struct DegreeSequences {
  std::vector<int> vertices;  // sorted ascending
  std::vector<int> faces;
  std::vector<int> zigzags;
};

DegreeSequences degree_sequences(const EmbeddedGraph& g);

struct SurfaceComponent {
  std::vector<int> vertices;
  int num_edges = 0;
  int num_faces = 0;
  int euler_characteristic = 0;
  bool orientable = true;
  // Orientable genus for orientable components, crosscap number otherwise.
  int genus = 0;
};

struct SurfaceData {
  std::vector<SurfaceComponent> components;
  int euler_characteristic = 0;
  bool orientable = true;
};

SurfaceData surface_data(const EmbeddedGraph& g);

// Vertex components of the underlying graph; component[v] is a dense index.
std::vector<int> vertex_components(const EmbeddedGraph& g, int* count = nullptr);

bool is_connected(const EmbeddedGraph& g);

}  // namespace fano
