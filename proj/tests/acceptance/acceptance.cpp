// Acceptance run: one PASS/FAIL line per criterion. Seeds and sample sizes
// are fixed, so every run checks the same inputs against a fixed time budget.
//
//   acceptance            run all ten criteria
//   acceptance 3 7        run only criteria 3 and 7

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fano/bidirection.hpp"
#include "fano/errors.hpp"
#include "fano/eulerian.hpp"
#include "fano/fano.hpp"
#include "fano/gallery.hpp"
#include "fano/gem.hpp"
#include "fano/twist.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fano;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

// Collects the first few failure descriptions and counts the rest.
class Failures {
 public:
  void add(const std::string& what) {
    if (shown_.size() < 3) shown_.push_back(what);
    ++count_;
  }
  Outcome outcome(const std::string& ok_detail) const {
    if (count_ == 0) return {true, ok_detail};
    std::ostringstream out;
    out << count_ << " failure(s)";
    for (const auto& s : shown_) out << "; " << s;
    return {false, out.str()};
  }

 private:
  std::vector<std::string> shown_;
  int count_ = 0;
};

std::string describe(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << "v/" << g.num_edges() << "e " << canonical_form(g).substr(0, 40);
  return out.str();
}

TwistWord random_word(testing::Rng& rng, int edges) {
  TwistWord w(edges);
  for (int e = 0; e < edges; ++e) w.set(e, kAllTwistElements[rng() % kAllTwistElements.size()]);
  return w;
}

// ---- 1 ---------------------------------------------------------------------

Outcome gallery_exactness() {
  Failures f;
  int entries = 0;
  for (const auto& check : check_gallery()) {
    ++entries;
    if (!check.ok) {
      f.add(check.name + " gave " + check.fano.to_string() + " " + to_string(check.eulerian));
    }
  }
  if (entries != 10) f.add("gallery has " + std::to_string(entries) + " entries, expected 10");
  return f.outcome("10 entries exact");
}

// ---- 2 ---------------------------------------------------------------------

Outcome metatheorem_at_scale() {
  testing::Rng rng(2002);
  Failures f;
  std::set<int> sizes;
  for (int i = 0; i < 2000; ++i) {
    const EmbeddedGraph g = testing::random_embedding(rng, {0, 8, 5, false});
    const MetatheoremReport r = verify_metatheorems(g);
    const int nonzero = r.fano.size() - 1;
    sizes.insert(nonzero);
    const bool count_ok = nonzero == 0 || nonzero == 1 || nonzero == 3 || nonzero == 7;
    if (!r.ok() || !count_ok || !r.fano.is_subspace()) f.add(describe(g) + " X=" + r.fano.to_string());
  }
  std::ostringstream detail;
  detail << "2000 embeddings, |X-| seen:";
  for (int s : sizes) detail << ' ' << s;
  return f.outcome(detail.str());
}

// ---- 3 ---------------------------------------------------------------------

Outcome oracle_equivalence() {
  testing::Rng rng(3003);
  Failures f;
  int checked = 0;
  int max_flags = 0;
  while (checked < 500) {
    const EmbeddedGraph g = testing::random_embedding(rng, {0, 6, 5, false});
    const Jewel j = build_jewel(g);
    if (j.num_flags() > 24) continue;
    max_flags = std::max(max_flags, j.num_flags());
    ++checked;
    const FanoSet by_cycles = oracle::fano_by_cycle_parity(j);
    const FanoSet by_contraction = oracle::fano_by_contraction(j);
    for (int p = 0; p < 8; ++p) {
      const FanoVector beta(p);
      const bool fast = cwbar(j, beta);
      if (fast != by_cycles.contains(beta) || fast != by_contraction.contains(beta)) {
        f.add(describe(g) + " beta=" + beta.bits_string());
      }
    }
  }
  return f.outcome("500 jewels (max " + std::to_string(max_flags) + " flags), 8 conditions each");
}

// ---- 4 ---------------------------------------------------------------------

// The reclassification table written out literally: dual swaps c and d,
// Petrie swaps b and d, both fix t- and t+.
EdgeType after_dual(EdgeType t) {
  if (t == EdgeType::kC) return EdgeType::kD;
  if (t == EdgeType::kD) return EdgeType::kC;
  return t;
}

EdgeType after_petrie(EdgeType t) {
  if (t == EdgeType::kB) return EdgeType::kD;
  if (t == EdgeType::kD) return EdgeType::kB;
  return t;
}

Outcome type_change_table() {
  testing::Rng rng(4004);
  Failures f;
  int edges_checked = 0;
  for (int i = 0; i < 500; ++i) {
    const EmbeddedGraph g = testing::random_embedding(rng, {1, 7, 5, false});
    const Jewel j = build_jewel(g);
    const Bidirection delta = testing::random_balanced_or_total(rng, j);
    const std::vector<int> subset = testing::random_subset(rng, g.num_edges());
    const std::vector<EdgeType> before = classify_edges(j, delta);
    std::vector<char> in_subset(g.num_edges(), 0);
    for (int e : subset) in_subset[e] = 1;

    const auto dual_types =
        apply_and_reclassify(j, delta, TwistWord::on(g.num_edges(), subset, TwistElement::dual()));
    const auto petrie_types =
        apply_and_reclassify(j, delta, TwistWord::on(g.num_edges(), subset, TwistElement::petrie()));
    for (int e = 0; e < g.num_edges(); ++e) {
      ++edges_checked;
      const EdgeType want_dual = in_subset[e] ? after_dual(before[e]) : before[e];
      const EdgeType want_petrie = in_subset[e] ? after_petrie(before[e]) : before[e];
      if (dual_types[e] != want_dual || petrie_types[e] != want_petrie) {
        f.add(describe(g) + " edge " + g.edge(e).name + " " + to_string(before[e]) + " -> " +
              to_string(dual_types[e]) + "/" + to_string(petrie_types[e]));
      }
    }
  }
  return f.outcome("500 triples, " + std::to_string(edges_checked) + " edge reclassifications");
}

// ---- 5 ---------------------------------------------------------------------

Outcome searches_match_conditions() {
  struct Row {
    BidirectionKind kind;
    EdgeType type;
  };
  const std::vector<Row> rows = {
      {BidirectionKind::kDirection, EdgeType::kB},     {BidirectionKind::kDirection, EdgeType::kD},
      {BidirectionKind::kDirection, EdgeType::kC},     {BidirectionKind::kDirection, EdgeType::kTPlus},
      {BidirectionKind::kAntidirection, EdgeType::kC}, {BidirectionKind::kAntidirection, EdgeType::kD},
      {BidirectionKind::kAntidirection, EdgeType::kB},
  };
  testing::Rng rng(5005);
  Failures f;
  int found = 0;
  for (int i = 0; i < 500; ++i) {
    const EmbeddedGraph g = testing::random_embedding(rng, {0, 7, 5, false});
    const Jewel j = build_jewel(g);
    for (const Row& row : rows) {
      const FanoVector beta = condition_for(row.kind, row.type);
      const BidirectionSearch s = row.kind == BidirectionKind::kDirection ? find_direction(g, row.type)
                                                                          : find_antidirection(g, row.type);
      if (s.found != cwbar(j, beta)) {
        f.add(describe(g) + " " + to_string(row.type) + " for " + beta.bits_string());
        continue;
      }
      if (!s.found) continue;
      ++found;
      const bool shape = row.kind == BidirectionKind::kDirection ? is_direction(j, s.bidirection)
                                                                 : is_antidirection(j, s.bidirection);
      bool types_ok = true;
      for (EdgeType t : classify_edges(j, s.bidirection)) {
        const bool total = t == EdgeType::kTPlus || t == EdgeType::kTMinus;
        types_ok = types_ok && (row.type == EdgeType::kTPlus ? total : t == row.type);
      }
      if (!shape || !types_ok) f.add(describe(g) + " returned bidirection has the wrong shape");
    }
  }
  return f.outcome("500 embeddings x 7 searches, " + std::to_string(found) + " bidirections verified");
}

// ---- 6 ---------------------------------------------------------------------

Outcome twisted_dual_constructions() {
  testing::Rng rng(6006);
  Failures f;
  for (int i = 0; i < 500; ++i) {
    const EmbeddedGraph g = testing::random_embedding(rng, {0, 7, 5, false});
    try {
      const auto bip = bipartite_twisted_dual_construct(g, EdgeType::kC);
      if (!oracle::bipartite_by_bfs(bip.result)) f.add(describe(g) + " result not bipartite");
      const auto face = bipartite_twisted_dual_construct(g, EdgeType::kD);
      if (!oracle::faces_2_colorable(face.result)) f.add(describe(g) + " result faces not 2-colorable");
      const auto zig = bipartite_twisted_dual_construct(g, EdgeType::kB);
      if (!oracle::zigzags_2_colorable(zig.result)) f.add(describe(g) + " result zigzags not 2-colorable");
    } catch (const std::exception& e) {
      f.add(describe(g) + " threw: " + e.what());
    }
  }
  return f.outcome("500 embeddings x 3 targets, checked by independent colorings");
}

// ---- 7 ---------------------------------------------------------------------

Outcome vf_gon_theorem() {
  testing::Rng rng(7007);
  Failures f;
  int holds = 0;
  for (int i = 0; i < 300; ++i) {
    // Half the sample is drawn with all vertex degrees even; without that,
    // nearly every sample fails on the embedding itself.
    EmbeddedGraph g = testing::random_embedding(rng, {1, 8, 5, true});
    while (i % 2 == 1 && !eulerian_triple(g).even_vertex) g = testing::random_embedding(rng, {1, 8, 5, true});
    const bool fast = all_partial_duals_eulerian(g);
    if (fast != all_partial_duals_eulerian_oracle(g)) f.add(describe(g));
    holds += fast ? 1 : 0;
  }
  const Gem gem = twelve_flag_gem();
  const Jewel j = gem_to_jewel(gem);
  if (!all_partial_duals_eulerian(j)) f.add("twelve-flag gem: predicate false");
  if (!all_partial_duals_eulerian_oracle(gem_to_embedding(gem))) f.add("twelve-flag gem: oracle false");
  const ColorCounts c = cycle_color_counts(j, {0, 2, 3, 4, 8, 9, 10, 11});
  const bool premise = (c.v + c.f) % 2 == 0 || c.a % 2 == 0;
  if (c.a != 3 || c.f != 2 || c.v != 3 || premise) f.add("twelve-flag cycle counts differ");
  return f.outcome("300 connected embeddings (" + std::to_string(holds) +
                   " positive); twelve-flag holds with cycle counts a=3 f=2 v=3");
}

// ---- 8 ---------------------------------------------------------------------

Outcome single_vertex_theorem() {
  Failures f;
  int embeddings = 0;
  int holds = 0;
  for (int loops = 0; loops <= 6; ++loops) {
    testing::for_each_bouquet(loops, [&](const EmbeddedGraph& g) {
      ++embeddings;
      const SingleVertexDiagnosis d = all_partial_duals_single_vertex(g);
      holds += d.holds ? 1 : 0;
      if (d.holds != all_partial_duals_single_vertex_oracle(g) || d.holds != d.chord_check) {
        f.add(describe(g));
      }
    });
  }
  return f.outcome(std::to_string(embeddings) + " one-vertex embeddings (" + std::to_string(holds) +
                   " positive)");
}

// ---- 9 ---------------------------------------------------------------------

Outcome group_relations() {
  testing::Rng rng(9009);
  Failures f;
  int gems = 0;
  auto euler_check = [&](const EmbeddedGraph& g) {
    ++gems;
    const BigonCensus c = bigon_census(build_jewel(g));
    const int chi = static_cast<int>(c.v_gons.size()) - static_cast<int>(c.e_squares.size()) +
                    static_cast<int>(c.f_gons.size()) + g.num_isolated_vertices() * 2;
    if (chi != surface_data(g).euler_characteristic) f.add(describe(g) + " Euler count");
  };
  for (int i = 0; i < 500; ++i) {
    const EmbeddedGraph g = testing::random_embedding(rng, {0, 7, 5, false});
    const std::vector<int> subset = testing::random_subset(rng, g.num_edges());
    const std::string key = canonical_form(g);
    const EmbeddedGraph d = partial_dual(g, subset);
    const EmbeddedGraph t = partial_petrie(g, subset);
    const EmbeddedGraph dd = partial_dual(d, subset);
    const EmbeddedGraph tt = partial_petrie(t, subset);
    const EmbeddedGraph dtd = partial_dual(partial_petrie(d, subset), subset);
    const EmbeddedGraph tdt = partial_petrie(partial_dual(t, subset), subset);
    if (canonical_form(dd) != key) f.add(describe(g) + " g** != g");
    if (canonical_form(tt) != key) f.add(describe(g) + " gxx != g");
    if (canonical_form(dtd) != canonical_form(tdt)) f.add(describe(g) + " g*x* != gx*x");
    const GroupRelationReport r = verify_group_relations(g, 2, static_cast<unsigned>(i));
    if (!r.ok()) f.add(describe(g) + " " + r.violations.front());
    const TwistWord w = random_word(rng, g.num_edges());
    for (const EmbeddedGraph* h : {&g, &d, &t, &dd, &dtd, &tdt}) euler_check(*h);
    euler_check(twisted_dual(g, w));
  }
  return f.outcome("500 embeddings, " + std::to_string(gems) + " gems Euler-checked");
}

// ---- 10 --------------------------------------------------------------------

std::multiset<std::pair<std::string, std::string>> a_edge_labels(const Jewel& j) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (int x = 0; x < j.num_flags(); ++x) {
    const int y = j.partner(Color::kA, x);
    if (x < y) out.insert(std::minmax(j.label_name(j.label(x)), j.label_name(j.label(y))));
  }
  return out;
}

std::multiset<std::pair<std::string, std::string>> edge_labels(const AbstractGraph& g) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (const auto& [u, w] : g.edges) out.insert(std::minmax(g.vertex_names[u], g.vertex_names[w]));
  return out;
}

Outcome constructions() {
  testing::Rng rng(10010);
  Failures f;
  int even = 0;
  for (int i = 0; i < 100; ++i) {
    const AbstractGraph g = testing::random_eulerian_graph(rng, 5, 10);
    const FanoSet bundle = fano_set(construct_embedding(g, EulerTarget::kBundle));
    for (int p : {1, 4, 5}) {
      if (!bundle.contains(FanoVector(p))) f.add("bundle target misses " + FanoVector(p).bits_string());
    }
    if (g.num_edges() % 2 == 0) {
      ++even;
      const EmbeddedGraph m = construct_embedding(g, EulerTarget::kMedialBipartite);
      if (!oracle::medial_bipartite_by_corners(m) || !oracle::orientable_by_signatures(m)) {
        f.add("111 target fails on " + std::to_string(g.num_edges()) + " edges");
      }
    }
  }

  struct Request {
    BidirectionKind kind;
    EdgeType type;
  };
  const std::vector<Request> requests = {
      {BidirectionKind::kDirection, EdgeType::kB},     {BidirectionKind::kDirection, EdgeType::kC},
      {BidirectionKind::kDirection, EdgeType::kD},     {BidirectionKind::kAntidirection, EdgeType::kB},
      {BidirectionKind::kAntidirection, EdgeType::kC}, {BidirectionKind::kAntidirection, EdgeType::kD},
  };
  int embedded = 0;
  int totals = 0;
  while (embedded < 100) {
    const Request& req = requests[embedded % requests.size()];
    FourRegularInput in;
    Request use = req;
    if (embedded % 10 == 9) {
      const auto total = testing::random_4regular_total(rng, 5);
      if (!total) continue;
      in = *total;
      use = {BidirectionKind::kDirection, EdgeType::kTPlus};
      ++totals;
    } else {
      in = req.kind == BidirectionKind::kDirection ? testing::random_4regular_direction(rng, 5)
                                                   : testing::random_4regular_antidirection(rng, 5);
    }
    ++embedded;
    const FanoVector beta = condition_for(use.kind, use.type);
    const std::uint64_t choice = rng();
    const Jewel j = embed_4regular(in, use.kind, use.type, choice);
    const EmbeddedGraph g = gem_to_embedding(jewel_to_gem(j));
    if (!oracle::fano_by_semantics(g).contains(beta)) f.add("embed_4regular misses " + beta.bits_string());
    if (a_edge_labels(j) != edge_labels(in.graph)) f.add("medial graph differs from the input");
  }
  return f.outcome("100 Eulerian graphs (" + std::to_string(even) + " even), 100 four-regular inputs (" +
                   std::to_string(totals) + " total)");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "gallery exactness", 1.0, gallery_exactness},
      {2, "metatheorem on 2000 random embeddings", 30.0, metatheorem_at_scale},
      {3, "labeling equals cycle-parity and contraction oracles", 60.0, oracle_equivalence},
      {4, "type-change table under dual and Petrie", 30.0, type_change_table},
      {5, "direction/antidirection searches equal condition bits", 30.0, searches_match_conditions},
      {6, "bipartite, face and zigzag twisted-dual constructions", 60.0, twisted_dual_constructions},
      {7, "v/f-gon theorem against the partial-dual oracle", 60.0, vf_gon_theorem},
      {8, "single-vertex theorem on bouquets up to 6 loops", 120.0, single_vertex_theorem},
      {9, "twisted-duality relations and gem Euler count", 60.0, group_relations},
      {10, "Euler-circuit and 4-regular constructions", 30.0, constructions},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.number << "] " << c.title << ": "
              << o.detail << " (" << std::fixed << std::setprecision(2) << seconds << " s, budget "
              << std::setprecision(0) << c.budget_seconds << " s" << (in_time ? "" : ", OVER BUDGET") << ")"
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
