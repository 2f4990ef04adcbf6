#include <doctest.h>

#include "fano/errors.hpp"
#include "fano/fano.hpp"
#include "fano/gallery.hpp"
#include "fano/io.hpp"
#include "oracles.hpp"

using namespace fano;

TEST_SUITE("fano") {
  TEST_CASE("vector packing and color sets") {
    const FanoVector p(1, 0, 1);
    CHECK(p.packed() == 5);
    CHECK(p.bits_string() == "101");
    CHECK(p.bv() == 1);
    CHECK(p.bf() == 0);
    CHECK((p ^ FanoVector(3)) == FanoVector(6));
    CHECK(FanoVector(1).jewel_color_set().to_string() == "vfa");
    CHECK(FanoVector(3).jewel_color_set().to_string() == "fz");
    CHECK(FanoVector(4).jewel_color_set().to_string() == "fza");
    CHECK(FanoVector(7).jewel_color_set().to_string() == "a");
    CHECK(FanoVector(6).jewel_color_set().to_string() == "vf");
    CHECK(std::string(condition_name(FanoVector(5))) == "face-2-colorable");
  }

  TEST_CASE("sets, subspaces and nim labels") {
    const FanoSet line = FanoSet::of({0, 3, 5, 6});
    CHECK(line.size() == 4);
    CHECK(line.is_subspace());
    CHECK(line.to_string() == "{000,011,101,110}");
    CHECK(line.nim_labels() == "{p3,p5,p6}");
    CHECK_FALSE(FanoSet::of({0, 1, 2}).is_subspace());
    CHECK_FALSE(FanoSet::of({1}).is_subspace());
    CHECK(FanoSet::of({0}).nim_labels() == "{}");
    CHECK(line.members() == std::vector<int>{0, 3, 5, 6});
    const FanoSet shifted = line.mapped([](FanoVector v) { return FanoVector(v.bf(), v.bv(), v.bz()); });
    CHECK(shifted == FanoSet::of({0, 3, 6, 5}));
  }

  TEST_CASE("s_labeling splits by parity and reports an odd walk") {
    LabelGraph triangle{3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, 1}};
    const SLabeling bad = s_labeling(triangle);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness.has_value());
    int s_edges = 0;
    for (int e : bad.witness->edges) s_edges += triangle.in_s[e];
    CHECK(s_edges % 2 == 1);
    CHECK(bad.witness->vertices.front() == bad.witness->vertices.back());

    LabelGraph mixed{3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, 0}};
    const SLabeling good = s_labeling(mixed, {2});
    CHECK(good.ok);
    CHECK(good.labels[2] == 0);
    CHECK(good.labels[0] == 0);
    CHECK(good.labels[1] == 1);

    LabelGraph loop{2, {{0, 0}, {0, 1}}, {1, 0}};
    const SLabeling looped = s_labeling(loop);
    CHECK_FALSE(looped.ok);
    CHECK(looped.witness->edges == std::vector<int>{0});

    LabelGraph two_parts{4, {{0, 1}, {2, 3}, {3, 2}}, {1, 1, 0}};
    const SLabeling parts = s_labeling(two_parts);
    CHECK_FALSE(parts.ok);
    CHECK(parts.component[0] != parts.component[2]);
    CHECK(parts.component_ok[parts.component[0]]);
    CHECK_FALSE(parts.component_ok[parts.component[2]]);
  }

  TEST_CASE("gallery Fano sets") {
    for (const auto& entry : gallery()) {
      CHECK_MESSAGE(fano_set(entry.embedding) == entry.expected_fano, entry.name);
    }
  }

  TEST_CASE("named predicates agree with cwbar") {
    for (const auto& entry : gallery()) {
      const EmbeddedGraph& g = entry.embedding;
      const FanoSet x = fano_set(g);
      CHECK(is_orientable(g) == x.contains(FanoVector(1)));
      CHECK(is_one_sided_iff_odd(g) == x.contains(FanoVector(2)));
      CHECK(is_bipartite(g) == x.contains(FanoVector(3)));
      CHECK(is_directable(g).directable == x.contains(FanoVector(4)));
      CHECK(is_face_2_colorable(g) == x.contains(FanoVector(5)));
      CHECK(is_zigzag_2_colorable(g) == x.contains(FanoVector(6)));
      CHECK(is_medial_bipartite(g) == x.contains(FanoVector(7)));
    }
  }

  TEST_CASE("directable embeddings come with a face-consistent direction") {
    for (const auto& entry : gallery()) {
      const Directability d = is_directable(entry.embedding);
      if (!d.directable) continue;
      CHECK_MESSAGE(oracle::faces_directed(entry.embedding, d.direction), entry.name);
    }
  }

  TEST_CASE("derived graphs") {
    const EmbeddedGraph& g = gallery_entry("projective-circle").embedding;
    const auto graphs = derived_graphs(g);
    REQUIRE(graphs.size() == 6);
    const FanoSet x = fano_set(g);
    for (const auto& d : graphs) {
      CHECK_MESSAGE(d.bipartite == x.contains(d.condition), d.name);
      for (const auto& [u, w] : d.edges) {
        CHECK(u >= 0);
        CHECK(w < d.num_vertices);
      }
    }
    CHECK(graphs[0].condition == FanoVector(1));
    CHECK(graphs[3].condition == FanoVector(6));
  }

  TEST_CASE("metatheorem checks") {
    CHECK(verify_metatheorems(FanoSet::of({0, 3, 5, 6})).ok());
    CHECK_FALSE(verify_metatheorems(FanoSet::of({0, 1, 2})).ok());
    CHECK_FALSE(verify_metatheorems(FanoSet::of({1})).ok());
    for (const auto& entry : gallery()) CHECK_MESSAGE(verify_metatheorems(entry.embedding).ok(), entry.name);
  }

  TEST_CASE("which embeddings an abstract graph admits") {
    const AbstractGraph k4 = underlying_graph(gallery_entry("k4-plane").embedding);
    CHECK(k4.degrees() == std::vector<int>{3, 3, 3, 3});
    CHECK(which_embeddings_possible(k4) == FanoSet::of({0, 1, 2}));
    const AbstractGraph grid = underlying_graph(torus_grid(4, 4));
    CHECK(which_embeddings_possible(grid) == FanoSet::from_mask(0xFF));
    // A triangle has even degrees but an odd edge count.
    AbstractGraph triangle{{"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}}, {"x", "y", "z"}};
    CHECK(which_embeddings_possible(triangle) == FanoSet::of({0, 1, 2, 4, 5, 6}));
  }

  TEST_CASE("oracles agree on the gallery") {
    for (const auto& entry : gallery()) {
      if (entry.embedding.num_flags() > 40) continue;
      const Jewel j = build_jewel(entry.embedding);
      CHECK_MESSAGE(oracle::fano_by_contraction(j) == entry.expected_fano, entry.name);
      CHECK_MESSAGE(oracle::fano_by_semantics(entry.embedding) == entry.expected_fano, entry.name);
    }
  }
}
