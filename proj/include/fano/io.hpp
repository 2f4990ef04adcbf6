#pragma once

#include <string>
#include <string_view>

#include "fano/bidirection.hpp"
#include "fano/embedding.hpp"
#include "fano/fano.hpp"
#include "fano/gem.hpp"

namespace fano::io {

// Line-oriented embedding format:
//
//   vertex <id>
//   edge <id> <v> <w> <+|->        end 0 sits at v, end 1 at w
//   rot <v> : <e>:<end> <e>:<end> ...
//
// '#' starts a comment. A vertex without a rot line must be isolated.
// Errors are InputError messages of the form "line N: ...".
EmbeddedGraph parse_embedding_text(std::string_view text);
std::string format_embedding_text(const EmbeddedGraph& g);

// The same fields as JSON:
//   {"vertex": [...], "edge": [{"id","v","w","sign"}], "rot": {"<v>": ["e:0", ...]}}
EmbeddedGraph parse_embedding_json(std::string_view text);
std::string format_embedding_json(const EmbeddedGraph& g);

// Chooses the parser by the first non-blank character ('{' means JSON).
EmbeddedGraph parse_embedding(std::string_view text);

// Accepts the text or JSON format with rot lines optional and signs optional.
AbstractGraph parse_abstract_graph(std::string_view text);

// One line per flag: "flag <edge>:<end>:<side> in|out". Every flag must appear.
Bidirection parse_bidirection(const EmbeddedGraph& g, std::string_view text);
std::string format_bidirection(const EmbeddedGraph& g, const Bidirection& delta);

// Graphviz export with v red, f blue, z green, a yellow. Isolated vertices,
// which have no flags, are listed in a comment block and a JSON field.
std::string gem_to_dot(const FlagGraph& graph, const std::vector<std::string>& isolated = {});
std::string gem_to_json(const FlagGraph& graph, const std::vector<std::string>& isolated = {});

std::string read_file(const std::string& path);

}  // namespace fano::io
