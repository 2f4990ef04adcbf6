#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fano/embedding.hpp"

namespace fano {

class ColorSet {
 public:
  constexpr ColorSet() = default;
  static constexpr ColorSet of(std::initializer_list<Color> colors) {
    ColorSet s;
    for (Color c : colors) s.bits_ |= static_cast<std::uint8_t>(1u << static_cast<int>(c));
    return s;
  }
  static constexpr ColorSet from_bits(std::uint8_t bits) {
    ColorSet s;
    s.bits_ = bits & 0xF;
    return s;
  }
  constexpr bool contains(Color c) const { return (bits_ >> static_cast<int>(c)) & 1u; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr ColorSet operator|(ColorSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ColorSet complement() const { return from_bits(~bits_); }
  constexpr bool operator==(const ColorSet&) const = default;

  // Letters in v, f, z, a order, for example "vfa".
  std::string to_string() const;

 private:
  std::uint8_t bits_ = 0;
};

// Flags joined by color matchings. Every flag carries the index of the edge
// whose e-square (or e-simplex) it lies in; the edge names travel with it.
class FlagGraph {
 public:
  int num_flags() const { return static_cast<int>(label_.size()); }
  bool has_color(Color c) const { return !partner_[static_cast<int>(c)].empty() || num_flags() == 0; }
  int partner(Color c, int x) const { return partner_[static_cast<int>(c)][x]; }
  int label(int x) const { return label_[x]; }
  int num_labels() const { return static_cast<int>(names_.size()); }
  const std::string& label_name(int index) const { return names_[index]; }
  const std::vector<std::string>& label_names() const { return names_; }

  // The flags carrying a given edge label, ascending.
  std::vector<int> flags_with_label(int index) const;

  // Orbits of the two alternating colors, each listed as a walk that starts at
  // its smallest flag and steps along `first` before `second`.
  std::vector<std::vector<int>> bigons(Color first, Color second) const;

  // Connected components over the present colors.
  std::vector<int> components(int* count = nullptr) const;

  // Every colored edge once, as (color, smaller flag, larger flag).
  struct ColoredEdge {
    Color color;
    int x;
    int y;
  };
  std::vector<ColoredEdge> colored_edges() const;

 protected:
  FlagGraph() = default;
  FlagGraph(std::array<std::vector<int>, 4> partner, std::vector<int> label,
            std::vector<std::string> names);
  void check_matching(Color c) const;
  void check_labels() const;

  std::array<std::vector<int>, 4> partner_;
  std::vector<int> label_;
  std::vector<std::string> names_;
};

// Properly 3-edge-colored cubic graph in colors v, f, a whose v/f bigons are
// 4-cycles (e-squares). Validated on construction.
class Gem : public FlagGraph {
 public:
  Gem() = default;
  Gem(std::vector<int> v, std::vector<int> f, std::vector<int> a, std::vector<int> label,
      std::vector<std::string> names);
};

// A gem with the diagonals of each e-square added in color z, so each
// v/f/z component is a K4 (an e-simplex). Validated on construction.
class Jewel : public FlagGraph {
 public:
  Jewel() = default;
  Jewel(std::vector<int> v, std::vector<int> f, std::vector<int> z, std::vector<int> a,
        std::vector<int> label, std::vector<std::string> names);

  // The four flags of the e-simplex for edge label `index`, ordered
  // x, v(x), f(v(x)), v(f(v(x))) from its smallest flag x.
  std::array<int, 4> simplex(int index) const;
};

Gem build_gem(const EmbeddedGraph& g);
Jewel build_jewel(const EmbeddedGraph& g);
Jewel gem_to_jewel(const Gem& gem);
Gem jewel_to_gem(const Jewel& jewel);

// Reads an embedding back off a gem: vertices are v-gons (named v0, v1, ...
// in order of their smallest flag), edges are e-squares named by their label.
EmbeddedGraph gem_to_embedding(const Gem& gem);

// As above, then appends the given isolated vertices.
EmbeddedGraph gem_to_embedding(const Gem& gem, const std::vector<std::string>& isolated);

struct BigonCensus {
  std::vector<int> v_gons;     // lengths in flags, sorted
  std::vector<int> f_gons;
  std::vector<int> z_gons;
  std::vector<int> e_squares;
};

BigonCensus bigon_census(const Jewel& jewel);

// The medial graph drawn on the same surface: vertices are the edges of the
// embedding (named after them), medial edges are the a-edges of the gem.
// Medial edge i joins flags halfedge_flag[2i] (end 0) and halfedge_flag[2i+1].
struct MedialCheckerboard {
  EmbeddedGraph graph;
  std::vector<int> halfedge_flag;
  // Color of each medial face in trace_faces(graph) order: kV or kF.
  std::vector<Color> face_color;
};

MedialCheckerboard medial_checkerboard(const EmbeddedGraph& g);

// Key that is equal for two embeddings exactly when their gems are isomorphic
// by a map preserving colors and edge labels (and the isolated-vertex count
// agrees). Vertex names and rotation starting points do not matter.
std::string canonical_form(const EmbeddedGraph& g);
std::string canonical_form(const FlagGraph& gem_or_jewel);

}  // namespace fano
