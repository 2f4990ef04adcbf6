#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fano/embedding.hpp"
#include "fano/fano.hpp"
#include "fano/gem.hpp"
#include "fano/twist.hpp"

namespace fano {

// Each flag owns one half-edge of the medial graph (its a-half-edge). A
// bidirection says whether that half-edge points into the flag's e-simplex
// (label 0) or out of it (label 1).
class Bidirection {
 public:
  Bidirection() = default;
  explicit Bidirection(int num_flags) : out_(num_flags, 0) {}
  explicit Bidirection(std::vector<std::uint8_t> out) : out_(std::move(out)) {}

  int num_flags() const { return static_cast<int>(out_.size()); }
  std::uint8_t label(int flag) const { return out_[flag]; }
  bool is_out(int flag) const { return out_[flag] != 0; }
  void set(int flag, bool out) { out_[flag] = out ? 1 : 0; }
  const std::vector<std::uint8_t>& labels() const { return out_; }
  bool operator==(const Bidirection&) const = default;

 private:
  std::vector<std::uint8_t> out_;
};

enum class EdgeType { kB, kC, kD, kTMinus, kTPlus, kOther };

std::string to_string(EdgeType t);

// Every medial edge directed: its two half-edges disagree in label.
bool is_direction(const FlagGraph& jewel, const Bidirection& delta);
// Every medial edge introverted or extraverted: its half-edges agree.
bool is_antidirection(const FlagGraph& jewel, const Bidirection& delta);
// Every e-simplex has two in and two out, or all four the same.
bool is_balanced_or_total(const FlagGraph& jewel, const Bidirection& delta);

EdgeType classify_edge(const FlagGraph& jewel, const Bidirection& delta, int edge);
std::vector<EdgeType> classify_edges(const FlagGraph& jewel, const Bidirection& delta);
std::vector<EdgeType> classify_edges(const EmbeddedGraph& g, const Bidirection& delta);

// Type after twisting the edge by `t`. The letters follow the colors: c with
// v, d with f, b with z; t- and t+ are fixed.
EdgeType predict_type_change(EdgeType type, TwistElement t);

// Twists the jewel (flags keep their identity, so `delta` still applies) and
// classifies every edge of the result.
std::vector<EdgeType> apply_and_reclassify(const Jewel& jewel, const Bidirection& delta,
                                           const TwistWord& word);

enum class BidirectionKind { kDirection, kAntidirection };

// The condition equivalent to having a (kind, type)-bidirection.
FanoVector condition_for(BidirectionKind kind, EdgeType type);

struct BidirectionSearch {
  bool found = false;
  Bidirection bidirection;
  // When absent: a closed walk in the medial graph, as the a-edges it crosses
  // (each given by its smaller flag), along which no choice is consistent.
  std::vector<int> obstruction;
};

// Searches for a bidirection all of whose edges have the given type, by fixing
// one of the two admissible patterns in each e-simplex and propagating across
// medial edges.
BidirectionSearch find_bidirection(const Jewel& jewel, BidirectionKind kind, EdgeType type);
BidirectionSearch find_direction(const EmbeddedGraph& g, EdgeType type);
BidirectionSearch find_antidirection(const EmbeddedGraph& g, EdgeType type);

// Searches for a bidirection where edge e must have type required[e].
BidirectionSearch find_bidirection_with_types(const Jewel& jewel, BidirectionKind kind,
                                              const std::vector<EdgeType>& required);

// Whether twisting by `word` yields an embedding with the condition tied to
// (kind, target), decided on `g` before twisting.
bool twisted_dual_target_feasible(const EmbeddedGraph& g, const TwistWord& word,
                                  BidirectionKind kind, EdgeType target);
bool orientable_twisted_dual_feasible(const EmbeddedGraph& g, const TwistWord& word);
bool bipartite_twisted_dual_feasible(const EmbeddedGraph& g, const TwistWord& word);

// The element of smallest spelling taking `from` to `to`.
TwistElement element_mapping(EdgeType from, EdgeType to);

struct TwistedDualConstruction {
  Bidirection antidirection;
  std::vector<EdgeType> types;
  TwistWord word;
  EmbeddedGraph result;
};

// Builds a balanced antidirection from Euler circuits of the medial graph and
// twists each edge so its type becomes `target`: c gives a bipartite twisted
// dual, d a 2-face-colorable one, b a 2-zigzag-colorable one. Throws
// StructuralError if the result fails its condition.
TwistedDualConstruction bipartite_twisted_dual_construct(const EmbeddedGraph& g,
                                                         EdgeType target = EdgeType::kC);

// A 4-regular graph whose vertices stand for the edges of the embedding to be
// built. Medial edge i has half-edges 2i (at edges[i].first) and 2i+1.
struct FourRegularInput {
  AbstractGraph graph;
  std::vector<std::uint8_t> halfedge_out;  // 1 when half-edge points away from its vertex
};

// Builds a jewel whose medial graph is `input.graph` and whose embedding has
// the condition of (kind, target). `choice` selects among the free color
// assignments (two per balanced vertex, six per total vertex), vertex by
// vertex in mixed radix. Throws InputError when the bidirection does not fit.
Jewel embed_4regular(const FourRegularInput& input, BidirectionKind kind, EdgeType target,
                     std::uint64_t choice = 0);

// Every jewel embed_4regular can return for this input; throws DomainError
// past `cap` results.
std::vector<Jewel> enumerate_4regular_embeddings(const FourRegularInput& input,
                                                 BidirectionKind kind, EdgeType target,
                                                 std::size_t cap = 4096);

}  // namespace fano
