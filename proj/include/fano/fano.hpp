#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano/embedding.hpp"
#include "fano/gem.hpp"

namespace fano {

// A vector (bv, bf, bz) of Z2^3, packed as 4*bv + 2*bf + bz. The packed value
// doubles as the nim label of the corresponding Fano plane point.
class FanoVector {
 public:
  constexpr FanoVector() = default;
  constexpr explicit FanoVector(int packed) : bits_(static_cast<std::uint8_t>(packed & 7)) {}
  constexpr FanoVector(int bv, int bf, int bz)
      : bits_(static_cast<std::uint8_t>(((bv & 1) << 2) | ((bf & 1) << 1) | (bz & 1))) {}

  constexpr int packed() const { return bits_; }
  constexpr int bv() const { return (bits_ >> 2) & 1; }
  constexpr int bf() const { return (bits_ >> 1) & 1; }
  constexpr int bz() const { return bits_ & 1; }
  constexpr bool is_zero() const { return bits_ == 0; }
  constexpr FanoVector operator^(FanoVector o) const { return FanoVector(bits_ ^ o.bits_); }
  constexpr bool operator==(const FanoVector&) const = default;

  // The color set S such that the condition holds iff the jewel has an S-labeling.
  ColorSet jewel_color_set() const;
  std::string bits_string() const;  // "bv bf bz" as three digits, e.g. "011"

 private:
  std::uint8_t bits_ = 0;
};

// A subset of the eight vectors, one bit per packed value.
class FanoSet {
 public:
  constexpr FanoSet() = default;
  static constexpr FanoSet from_mask(std::uint8_t mask) {
    FanoSet s;
    s.mask_ = mask;
    return s;
  }
  static FanoSet of(std::initializer_list<int> packed);

  constexpr bool contains(FanoVector p) const { return (mask_ >> p.packed()) & 1; }
  void insert(FanoVector p) { mask_ |= static_cast<std::uint8_t>(1u << p.packed()); }
  constexpr std::uint8_t mask() const { return mask_; }
  int size() const;
  constexpr bool operator==(const FanoSet&) const = default;

  bool is_subspace() const;
  // Relabels each member by applying `f` to it.
  template <class F>
  FanoSet mapped(F f) const {
    FanoSet out;
    for (int p = 0; p < 8; ++p) {
      if (contains(FanoVector(p))) out.insert(f(FanoVector(p)));
    }
    return out;
  }
  std::vector<int> members() const;
  std::string to_string() const;      // {000,011}
  std::string nim_labels() const;     // {p3} over the nonzero members

 private:
  std::uint8_t mask_ = 0;
};

// Names of the seven nonzero conditions, indexed by packed value 1..7.
const char* condition_name(FanoVector p);

// A graph to be 0/1-labeled: an edge flips the label exactly when it lies in S.
struct LabelGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<char> in_s;
};

struct OddWalk {
  std::vector<int> vertices;  // closed: first vertex repeated at the end
  std::vector<int> edges;     // edges[i] joins vertices[i] and vertices[i+1]
};

struct SLabeling {
  bool ok = true;
  std::vector<std::uint8_t> labels;
  std::vector<int> component;      // per vertex
  std::vector<char> component_ok;  // per component
  // A closed walk with an odd number of S-edges, present when !ok. It is a
  // cycle of the BFS forest plus one edge, so short but not always shortest.
  std::optional<OddWalk> witness;
};

// Labels every vertex so that exactly the S-edges join differently labeled
// vertices. Components are rooted at `roots` first (labeled 0) and then at
// their smallest unvisited vertex.
SLabeling s_labeling(const LabelGraph& graph, const std::vector<int>& roots = {});

// LabelGraph on the flags using the colors present in the jewel, with edge
// order matching FlagGraph::colored_edges.
LabelGraph flag_label_graph(const FlagGraph& graph, ColorSet s);
SLabeling jewel_s_labeling(const FlagGraph& graph, ColorSet s);

bool cwbar(const Jewel& jewel, FanoVector beta);
FanoSet fano_set(const EmbeddedGraph& g);
FanoSet fano_set(const Jewel& jewel);

struct Directability {
  bool directable = false;
  // direction[e] is the end the edge leaves from: 0 means end 0 to end 1.
  std::vector<int> direction;
};

bool is_orientable(const EmbeddedGraph& g);
bool is_one_sided_iff_odd(const EmbeddedGraph& g);
bool is_bipartite(const EmbeddedGraph& g);
Directability is_directable(const EmbeddedGraph& g);
bool is_face_2_colorable(const EmbeddedGraph& g);
bool is_zigzag_2_colorable(const EmbeddedGraph& g);
bool is_medial_bipartite(const EmbeddedGraph& g);

struct DerivedGraph {
  std::string name;
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  bool bipartite = false;
  FanoVector condition;
};

// The six graphs whose bipartiteness captures a Fano condition: diagonal (001),
// side (010), end (100), corner (110), Petrie corner (101), Wilson corner (011).
std::vector<DerivedGraph> derived_graphs(const EmbeddedGraph& g);

struct MetatheoremReport {
  FanoSet fano;
  bool closed_under_sum = true;
  bool nonzero_count_ok = true;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

MetatheoremReport verify_metatheorems(const EmbeddedGraph& g);
MetatheoremReport verify_metatheorems(FanoSet x);

struct AbstractGraph {
  std::vector<std::string> vertex_names;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> edge_names;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;
};

AbstractGraph underlying_graph(const EmbeddedGraph& g);

// Conditions some cellular embedding of the graph can satisfy, judged per
// connected component.
FanoSet which_embeddings_possible(const AbstractGraph& graph);

}  // namespace fano
