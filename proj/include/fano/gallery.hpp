#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/embedding.hpp"
#include "fano/eulerian.hpp"
#include "fano/fano.hpp"
#include "fano/gem.hpp"

namespace fano {

struct GalleryEntry {
  std::string name;
  std::string description;
  EmbeddedGraph embedding;
  FanoSet expected_fano;
  EulerianTriple expected_eulerian;
};

// The ten reference embeddings with their frozen Fano sets and Eulerian triples.
const std::vector<GalleryEntry>& gallery();
const GalleryEntry& gallery_entry(const std::string& name);

// Toroidal grid C_{2k} x C_{2l}; vertex v(i,j) is named "v<i*rows+j>".
EmbeddedGraph torus_grid(int columns, int rows);

// Twelve-flag gem with one vertex of degree 6, given by its colored edges.
Gem twelve_flag_gem();

struct GalleryCheck {
  std::string name;
  FanoSet fano;
  EulerianTriple eulerian;
  bool ok = false;
};

std::vector<GalleryCheck> check_gallery();

}  // namespace fano
