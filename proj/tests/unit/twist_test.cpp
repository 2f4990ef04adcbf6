#include <doctest.h>

#include <algorithm>
#include <set>

#include "fano/errors.hpp"
#include "fano/fano.hpp"
#include "fano/gallery.hpp"
#include "fano/twist.hpp"
#include "generators.hpp"

using namespace fano;

namespace {

// Multiset of edge-label pairs joined by a-edges: the medial graph up to
// relabeling of its half-edges.
std::multiset<std::pair<std::string, std::string>> medial_label_pairs(const EmbeddedGraph& g) {
  const Jewel j = build_jewel(g);
  std::multiset<std::pair<std::string, std::string>> out;
  for (int x = 0; x < j.num_flags(); ++x) {
    const int y = j.partner(Color::kA, x);
    if (x > y) continue;
    auto p = std::minmax(j.label_name(j.label(x)), j.label_name(j.label(y)));
    out.emplace(p.first, p.second);
  }
  return out;
}

}  // namespace

TEST_SUITE("twist") {
  TEST_CASE("the six elements form S3") {
    const auto d = TwistElement::dual();
    const auto t = TwistElement::petrie();
    CHECK((d * d).is_identity());
    CHECK((t * t).is_identity());
    CHECK(d * t * d == TwistElement::wilson());
    CHECK(t * d * t == TwistElement::wilson());
    CHECK((d * t * d * t * d * t).is_identity());
    CHECK((d * t).inverse() == t * d);
    for (TwistElement a : kAllTwistElements) {
      CHECK((a * a.inverse()).is_identity());
      CHECK(TwistElement::parse(a.spelling()) == a);
      int same = 0;
      for (TwistElement b : kAllTwistElements) same += a == b ? 1 : 0;
      CHECK(same == 1);
    }
  }

  TEST_CASE("elements act on colors and fix a") {
    CHECK(TwistElement::dual().apply(Color::kV) == Color::kF);
    CHECK(TwistElement::petrie().apply(Color::kF) == Color::kZ);
    CHECK(TwistElement::wilson().apply(Color::kZ) == Color::kV);
    CHECK(TwistElement::parse("dt").apply(Color::kV) == Color::kZ);
    for (TwistElement a : kAllTwistElements) CHECK(a.apply(Color::kA) == Color::kA);
    CHECK_THROWS_AS(TwistElement::parse("dx"), InputError);
  }

  TEST_CASE("word parsing") {
    const EmbeddedGraph& k4 = gallery_entry("k4-plane").embedding;
    const TwistWord w = TwistWord::parse(k4, "e01:d e13:dt e01:t");
    CHECK(w.at(*k4.find_edge("e01")) == TwistElement::parse("dt"));
    CHECK(w.at(*k4.find_edge("e13")) == TwistElement::parse("dt"));
    CHECK(w.at(*k4.find_edge("e23")).is_identity());
    CHECK_THROWS_AS(TwistWord::parse(k4, "e99:d"), InputError);
    CHECK_THROWS_AS(TwistWord::parse(k4, "e01"), InputError);
    CHECK(TwistWord::parse(k4, "") == TwistWord(6));
  }

  TEST_CASE("duals of K4 and the torus grid") {
    const EmbeddedGraph& k4 = gallery_entry("k4-plane").embedding;
    const EmbeddedGraph k4_dual = dual(k4);
    CHECK(degree_sequences(k4_dual).vertices == std::vector<int>{3, 3, 3, 3});
    CHECK(surface_data(k4_dual).euler_characteristic == 2);
    CHECK(canonical_form(dual(k4_dual)) == canonical_form(k4));

    const EmbeddedGraph petrie = petrie_dual(k4);
    CHECK(degree_sequences(petrie).faces == degree_sequences(k4).zigzags);
    CHECK(degree_sequences(petrie).zigzags == degree_sequences(k4).faces);
    CHECK(surface_data(petrie).euler_characteristic == 4 - 6 + 3);

    const EmbeddedGraph wilson = wilson_dual(k4);
    CHECK(degree_sequences(wilson).vertices == degree_sequences(k4).zigzags);

    const EmbeddedGraph grid = torus_grid(4, 4);
    CHECK(degree_sequences(dual(grid)).vertices == std::vector<int>(16, 4));
  }

  TEST_CASE("partial Petrie twice is the identity exactly") {
    testing::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const EmbeddedGraph g = testing::random_embedding(rng, {0, 6, 4, false});
      const auto subset = testing::random_subset(rng, g.num_edges());
      CHECK(partial_petrie(partial_petrie(g, subset), subset) == g);
    }
  }

  TEST_CASE("partial dual on every edge equals the dual") {
    for (const auto& entry : gallery()) {
      const EmbeddedGraph& g = entry.embedding;
      CHECK(canonical_form(partial_dual(g, all_edges(g))) == canonical_form(dual(g)));
      CHECK(canonical_form(partial_wilson(g, all_edges(g))) == canonical_form(wilson_dual(g)));
    }
  }

  TEST_CASE("apply_twist is a right action") {
    testing::Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      const EmbeddedGraph g = testing::random_embedding(rng, {1, 6, 4, false});
      TwistWord w1(g.num_edges()), w2(g.num_edges());
      for (int e = 0; e < g.num_edges(); ++e) {
        w1.set(e, kAllTwistElements[rng() % 6]);
        w2.set(e, kAllTwistElements[rng() % 6]);
      }
      const Jewel j = build_jewel(g);
      CHECK(canonical_form(apply_twist(apply_twist(j, w1), w2)) == canonical_form(apply_twist(j, w1.then(w2))));
      CHECK(canonical_form(twisted_dual(twisted_dual(g, w1), w2)) == canonical_form(twisted_dual(g, w1.then(w2))));
    }
  }

  TEST_CASE("twisted duals keep the medial graph") {
    testing::Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
      const EmbeddedGraph g = testing::random_embedding(rng, {1, 6, 4, false});
      TwistWord w(g.num_edges());
      for (int e = 0; e < g.num_edges(); ++e) w.set(e, kAllTwistElements[rng() % 6]);
      CHECK(medial_label_pairs(twisted_dual(g, w)) == medial_label_pairs(g));
    }
  }

  TEST_CASE("group relations on the gallery") {
    for (const auto& entry : gallery()) {
      const GroupRelationReport r = verify_group_relations(entry.embedding, 4, 3);
      CHECK_MESSAGE(r.ok(), entry.name);
      CHECK(r.checks > 0);
    }
  }
}
