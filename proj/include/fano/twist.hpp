#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fano/embedding.hpp"
#include "fano/gem.hpp"

namespace fano {

// A permutation of the colors {v, f, z}: image[c] is where color c goes.
// Words compose left to right, so (d * t) applies d first and then t.
class TwistElement {
 public:
  constexpr TwistElement() = default;
  static constexpr TwistElement identity() { return TwistElement(); }
  static constexpr TwistElement dual() { return TwistElement({1, 0, 2}); }    // swaps v, f
  static constexpr TwistElement petrie() { return TwistElement({0, 2, 1}); }  // swaps f, z
  static constexpr TwistElement wilson() { return TwistElement({2, 1, 0}); }  // swaps v, z

  // Letters d, t, w read left to right; the empty string is the identity.
  static TwistElement parse(std::string_view letters);

  constexpr Color apply(Color c) const {
    if (c == Color::kA) return c;
    return static_cast<Color>(image_[static_cast<int>(c)]);
  }
  constexpr TwistElement then(TwistElement next) const {
    TwistElement out;
    for (int c = 0; c < 3; ++c) out.image_[c] = next.image_[image_[c]];
    return out;
  }
  constexpr TwistElement operator*(TwistElement next) const { return then(next); }
  constexpr TwistElement inverse() const {
    TwistElement out;
    for (int c = 0; c < 3; ++c) out.image_[image_[c]] = static_cast<std::uint8_t>(c);
    return out;
  }
  constexpr bool is_identity() const { return *this == TwistElement(); }
  constexpr bool operator==(const TwistElement&) const = default;

  // Shortest spelling in the letters dtw, for example "dt"; "" for the identity.
  std::string spelling() const;

 private:
  constexpr explicit TwistElement(std::array<std::uint8_t, 3> image) : image_(image) {}
  std::array<std::uint8_t, 3> image_ = {0, 1, 2};
};

inline constexpr std::array<TwistElement, 6> kAllTwistElements = {
    TwistElement::identity(),
    TwistElement::dual(),
    TwistElement::petrie(),
    TwistElement::wilson(),
    TwistElement::dual() * TwistElement::petrie(),
    TwistElement::petrie() * TwistElement::dual(),
};

// One element per edge, indexed like the edges of the embedding.
class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(int num_edges) : per_edge_(num_edges) {}

  static TwistWord uniform(int num_edges, TwistElement t);
  static TwistWord on(int num_edges, const std::vector<int>& edges, TwistElement t);

  // Parses tokens like "e1:d e2:t e3:dt" against the edge names of `g`.
  // Repeated tokens for one edge compose left to right.
  static TwistWord parse(const EmbeddedGraph& g, std::string_view text);

  int size() const { return static_cast<int>(per_edge_.size()); }
  TwistElement at(int e) const { return per_edge_[e]; }
  void set(int e, TwistElement t) { per_edge_[e] = t; }

  TwistWord then(const TwistWord& next) const;
  bool operator==(const TwistWord&) const = default;

 private:
  std::vector<TwistElement> per_edge_;
};

// Permutes the colors inside each e-simplex; flags keep their identities.
Jewel apply_twist(const Jewel& jewel, const TwistWord& word);

EmbeddedGraph twisted_dual(const EmbeddedGraph& g, const TwistWord& word);
EmbeddedGraph partial_dual(const EmbeddedGraph& g, const std::vector<int>& edges);
EmbeddedGraph partial_wilson(const EmbeddedGraph& g, const std::vector<int>& edges);
// Flips signatures directly, so applying it twice returns `g` exactly.
EmbeddedGraph partial_petrie(const EmbeddedGraph& g, const std::vector<int>& edges);

EmbeddedGraph dual(const EmbeddedGraph& g);
EmbeddedGraph petrie_dual(const EmbeddedGraph& g);
EmbeddedGraph wilson_dual(const EmbeddedGraph& g);

std::vector<int> all_edges(const EmbeddedGraph& g);

struct GroupRelationReport {
  int checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the defining relations of the twisted-duality group on `g`, and that
// `random_words` random sequences of up to four (operation, edge subset) steps
// agree with their single composed word.
GroupRelationReport verify_group_relations(const EmbeddedGraph& g, int random_words = 8,
                                           unsigned seed = 1);

}  // namespace fano
