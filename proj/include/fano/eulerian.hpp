#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fano/bidirection.hpp"
#include "fano/embedding.hpp"
#include "fano/fano.hpp"
#include "fano/gem.hpp"

namespace fano {

struct EulerianTriple {
  bool even_vertex = false;
  bool even_face = false;
  bool even_zigzag = false;
  bool operator==(const EulerianTriple&) const = default;
};

std::string to_string(const EulerianTriple& t);

// All vertex (face, zigzag) degrees even, read off the v-gon (f-gon, z-gon)
// lengths, which must be multiples of four.
EulerianTriple eulerian_triple(const EmbeddedGraph& g);
EulerianTriple eulerian_triple(const Jewel& jewel);

// Properties forced by the conditions in `x`: a property is reported true only
// when some member of x implies it.
EulerianTriple fano_implies_eulerian(FanoSet x);

// Bidirections that mix two types. The first three are directions (ct, dt, bt),
// the last three antidirections (bd, bc, cd).
enum class MixedKind { kCT, kDT, kBT, kBD, kBC, kCD };

std::string to_string(MixedKind k);
BidirectionKind kind_of(MixedKind k);
std::array<EdgeType, 2> allowed_types(MixedKind k);

struct MixedSearch {
  bool found = false;
  Bidirection bidirection;
  // When absent: a bigon of the jewel, as its flags in order, that has an odd
  // number of edges of the flipping color.
  std::vector<int> obstruction;
};

MixedSearch find_mixed_bidirection(const EmbeddedGraph& g, MixedKind kind);
MixedSearch find_mixed_bidirection(const Jewel& jewel, MixedKind kind);

struct CircuitStep {
  int edge = 0;
  bool forward = true;  // traversed from edges[edge].first to .second
};

// One closed Euler circuit per connected component that has edges. Throws
// InputError naming a vertex of odd degree.
std::vector<std::vector<CircuitStep>> euler_circuits(const AbstractGraph& graph);

enum class EulerTarget {
  kBundle,           // orientable, directable and 2-face-colorable
  kMedialBipartite,  // medial-bipartite and orientable; needs an even edge count
};

// Embeds a connected graph with all degrees even, rotation read from an Euler
// circuit. Throws InputError naming the offending vertex or parity.
EmbeddedGraph construct_embedding(const AbstractGraph& graph, EulerTarget target);

// A cycle of the jewel alternating a-edges with v- or f-edges that uses only
// one of those two colors inside each e-square it enters.
struct VfGon {
  std::vector<int> flags;  // flags[0] smallest; flags[0]-flags[1] is an a-edge
  std::vector<Color> joins;  // color between flags[2i+1] and flags[2i+2]
  int length() const { return static_cast<int>(flags.size()); }
};

// Throws DomainError once more than `cap` cycles are found.
std::vector<VfGon> enumerate_vf_gons(const Jewel& jewel, std::size_t cap = 1000000);

// Every partial dual has only even degrees. Needs a connected embedding
// (InputError otherwise); the per-component form drops that requirement.
bool all_partial_duals_eulerian(const EmbeddedGraph& g);
bool all_partial_duals_eulerian(const Jewel& jewel);
std::vector<bool> all_partial_duals_eulerian_per_component(const EmbeddedGraph& g);

// Checks all 2^|E| partial duals directly. Limited to |E| <= 16.
bool all_partial_duals_eulerian_oracle(const EmbeddedGraph& g);

struct ColorCounts {
  int v = 0;
  int f = 0;
  int z = 0;
  int a = 0;
};

// Counts the colors on a closed walk given by consecutive flags; consecutive
// flags must be joined by an edge of a unique color.
ColorCounts cycle_color_counts(const Jewel& jewel, const std::vector<int>& cycle);

struct SingleVertexDiagnosis {
  bool holds = false;
  std::string reason;            // empty when holds
  std::vector<int> untwisted;    // loops that are not twisted
  std::vector<std::array<int, 2>> interlaced;  // pairs of interlaced loops
  bool chord_check = false;      // non-crossing chord diagram cross-check
};

// All partial duals have exactly one vertex.
SingleVertexDiagnosis all_partial_duals_single_vertex(const EmbeddedGraph& g);

// Checks all 2^|E| partial duals directly. Limited to |E| <= 16.
bool all_partial_duals_single_vertex_oracle(const EmbeddedGraph& g);

}  // namespace fano
