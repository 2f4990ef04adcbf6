#pragma once

#include <cstdint>

#include "fano/embedding.hpp"
#include "fano/fano.hpp"
#include "fano/gem.hpp"

// Reference implementations that share no code path with the library's
// labeling-based decisions. They are slow and meant for small inputs.
namespace fano::oracle {

// Bit mask over the 16 color-parity classes (bit k set when some simple cycle
// has v,f,z,a counts whose parities spell k = v + 2f + 4z + 8a).
// Limited to 54 flags.
std::uint16_t simple_cycle_parities(const FlagGraph& graph);

FanoSet fano_by_cycle_parity(const Jewel& jewel);

// Contract every edge whose color is outside `s`, then 2-color what remains.
bool contraction_bipartite(const FlagGraph& graph, ColorSet s);
FanoSet fano_by_contraction(const Jewel& jewel);

bool orientable_by_signatures(const EmbeddedGraph& g);
bool one_sided_iff_odd_by_signatures(const EmbeddedGraph& g);
bool bipartite_by_bfs(const EmbeddedGraph& g);
bool faces_2_colorable(const EmbeddedGraph& g);
bool zigzags_2_colorable(const EmbeddedGraph& g);
bool medial_bipartite_by_corners(const EmbeddedGraph& g);
// Tries every orientation of the edges. Limited to 16 edges.
bool directable_brute_force(const EmbeddedGraph& g);
// Every face boundary, read along its trace, runs with or against all edges.
bool faces_directed(const EmbeddedGraph& g, const std::vector<int>& tail_end);

FanoSet fano_by_semantics(const EmbeddedGraph& g);

}  // namespace fano::oracle
