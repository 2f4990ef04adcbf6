#include "fano/twist.hpp"

#include <random>
#include <sstream>

#include "fano/errors.hpp"

namespace fano {

TwistElement TwistElement::parse(std::string_view letters) {
  TwistElement out;
  for (char ch : letters) {
    switch (ch) {
      case 'd': out = out * dual(); break;
      case 't': out = out * petrie(); break;
      case 'w': out = out * wilson(); break;
      default:
        throw InputError(std::string("unknown twist letter '") + ch + "' (expected d, t or w)");
    }
  }
  return out;
}

std::string TwistElement::spelling() const {
  if (is_identity()) return "";
  if (*this == dual()) return "d";
  if (*this == petrie()) return "t";
  if (*this == wilson()) return "w";
  if (*this == dual() * petrie()) return "dt";
  return "td";
}

TwistWord TwistWord::uniform(int num_edges, TwistElement t) {
  TwistWord w(num_edges);
  for (int e = 0; e < num_edges; ++e) w.set(e, t);
  return w;
}

TwistWord TwistWord::on(int num_edges, const std::vector<int>& edges, TwistElement t) {
  TwistWord w(num_edges);
  for (int e : edges) {
    if (e < 0 || e >= num_edges) throw InputError("twist names an edge out of range");
    w.set(e, t);
  }
  return w;
}

TwistWord TwistWord::parse(const EmbeddedGraph& g, std::string_view text) {
  TwistWord w(g.num_edges());
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto colon = token.rfind(':');
    if (colon == std::string::npos) {
      throw InputError("twist token '" + token + "' is not of the form edge:letters");
    }
    const std::string name = token.substr(0, colon);
    const auto e = g.find_edge(name);
    if (!e) throw InputError("twist names unknown edge '" + name + "'");
    w.set(*e, w.at(*e) * TwistElement::parse(std::string_view(token).substr(colon + 1)));
  }
  return w;
}

TwistWord TwistWord::then(const TwistWord& next) const {
  if (size() != next.size()) throw InputError("twist words of different lengths");
  TwistWord out(size());
  for (int e = 0; e < size(); ++e) out.set(e, at(e) * next.at(e));
  return out;
}

Jewel apply_twist(const Jewel& jewel, const TwistWord& word) {
  if (word.size() != jewel.num_labels()) throw InputError("twist word length differs from edge count");
  const int n = jewel.num_flags();
  std::array<std::vector<int>, 4> partner;
  for (auto& p : partner) p.resize(n);
  std::vector<int> labels(n);
  for (int x = 0; x < n; ++x) {
    const TwistElement t = word.at(jewel.label(x));
    for (Color c : kAllColors) partner[static_cast<int>(t.apply(c))][x] = jewel.partner(c, x);
    labels[x] = jewel.label(x);
  }
  return Jewel(std::move(partner[0]), std::move(partner[1]), std::move(partner[2]),
               std::move(partner[3]), std::move(labels), jewel.label_names());
}

namespace {

std::vector<std::string> isolated_names(const EmbeddedGraph& g) {
  std::vector<std::string> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.is_isolated(v)) out.push_back(g.vertex_name(v));
  }
  return out;
}

}  // namespace

EmbeddedGraph twisted_dual(const EmbeddedGraph& g, const TwistWord& word) {
  const Jewel twisted = apply_twist(build_jewel(g), word);
  return gem_to_embedding(jewel_to_gem(twisted), isolated_names(g));
}

EmbeddedGraph partial_dual(const EmbeddedGraph& g, const std::vector<int>& edges) {
  return twisted_dual(g, TwistWord::on(g.num_edges(), edges, TwistElement::dual()));
}

EmbeddedGraph partial_wilson(const EmbeddedGraph& g, const std::vector<int>& edges) {
  return twisted_dual(g, TwistWord::on(g.num_edges(), edges, TwistElement::wilson()));
}

EmbeddedGraph partial_petrie(const EmbeddedGraph& g, const std::vector<int>& edges) {
  std::vector<int> signs;
  for (const Edge& e : g.edges()) signs.push_back(e.sign);
  for (int e : edges) {
    if (e < 0 || e >= g.num_edges()) throw InputError("partial Petrie names an edge out of range");
    signs[e] = -signs[e];
  }
  return g.with_signs(signs);
}

std::vector<int> all_edges(const EmbeddedGraph& g) {
  std::vector<int> out(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) out[e] = e;
  return out;
}

EmbeddedGraph dual(const EmbeddedGraph& g) { return partial_dual(g, all_edges(g)); }
EmbeddedGraph petrie_dual(const EmbeddedGraph& g) { return partial_petrie(g, all_edges(g)); }
EmbeddedGraph wilson_dual(const EmbeddedGraph& g) { return partial_wilson(g, all_edges(g)); }

GroupRelationReport verify_group_relations(const EmbeddedGraph& g, int random_words,
                                           unsigned seed) {
  GroupRelationReport report;
  const std::string base = canonical_form(g);
  auto expect_same = [&](const EmbeddedGraph& h, const std::string& what) {
    ++report.checks;
    if (canonical_form(h) != base) report.violations.push_back(what);
  };
  const std::vector<int> all = all_edges(g);

  expect_same(dual(dual(g)), "g** != g");
  expect_same(petrie_dual(petrie_dual(g)), "gxx != g");
  expect_same(wilson_dual(wilson_dual(g)), "gww != g");
  ++report.checks;
  if (!(partial_petrie(partial_petrie(g, all), all) == g)) {
    report.violations.push_back("partial Petrie twice is not the identity");
  }
  ++report.checks;
  if (canonical_form(partial_dual(petrie_dual(partial_dual(g, all)), all)) !=
      canonical_form(petrie_dual(partial_dual(petrie_dual(g), all)))) {
    report.violations.push_back("g*x* != gx*x");
  }
  ++report.checks;
  if (canonical_form(wilson_dual(g)) != canonical_form(partial_dual(petrie_dual(dual(g)), all))) {
    report.violations.push_back("gw != g*x*");
  }

  std::mt19937 rng(seed);
  const std::array<TwistElement, 3> generators = {TwistElement::dual(), TwistElement::petrie(),
                                                  TwistElement::wilson()};
  for (int round = 0; round < random_words; ++round) {
    const int steps = 1 + static_cast<int>(rng() % 4);
    EmbeddedGraph stepwise = g;
    TwistWord composed(g.num_edges());
    std::string description;
    for (int s = 0; s < steps; ++s) {
      const int which = static_cast<int>(rng() % 3);
      std::vector<int> subset;
      for (int e = 0; e < g.num_edges(); ++e) {
        if (rng() & 1) subset.push_back(e);
      }
      composed = composed.then(TwistWord::on(g.num_edges(), subset, generators[which]));
      if (which == 0) stepwise = partial_dual(stepwise, subset);
      if (which == 1) stepwise = partial_petrie(stepwise, subset);
      if (which == 2) stepwise = partial_wilson(stepwise, subset);
      description += "dtw"[which];
    }
    ++report.checks;
    if (canonical_form(stepwise) != canonical_form(twisted_dual(g, composed))) {
      report.violations.push_back("stepwise word " + description + " differs from composed word");
    }
  }
  return report;
}

}  // namespace fano
