#include "fano/bidirection.hpp"

#include <array>

#include "fano/errors.hpp"
#include "fano/eulerian.hpp"

namespace fano {

std::string to_string(EdgeType t) {
  switch (t) {
    case EdgeType::kB: return "b";
    case EdgeType::kC: return "c";
    case EdgeType::kD: return "d";
    case EdgeType::kTMinus: return "t-";
    case EdgeType::kTPlus: return "t+";
    case EdgeType::kOther: return "other";
  }
  return "?";
}

namespace {

void check_size(const FlagGraph& jewel, const Bidirection& delta) {
  if (delta.num_flags() != jewel.num_flags()) {
    throw InputError("bidirection covers " + std::to_string(delta.num_flags()) +
                     " flags, jewel has " + std::to_string(jewel.num_flags()));
  }
}

// Square order x0 -v- x1 -f- x2 -v- x3 -f- x0 from the smallest flag.
std::array<int, 4> square(const FlagGraph& jewel, int edge) {
  const int x0 = jewel.flags_with_label(edge).front();
  const int x1 = jewel.partner(Color::kV, x0);
  const int x2 = jewel.partner(Color::kF, x1);
  const int x3 = jewel.partner(Color::kV, x2);
  return {x0, x1, x2, x3};
}

// Labels along the square that realise a type, up to complement.
std::array<std::uint8_t, 4> pattern(EdgeType t) {
  switch (t) {
    case EdgeType::kB: return {0, 1, 0, 1};
    case EdgeType::kC: return {0, 0, 1, 1};
    case EdgeType::kD: return {0, 1, 1, 0};
    case EdgeType::kTMinus:
    case EdgeType::kTPlus: return {0, 0, 0, 0};
    case EdgeType::kOther: break;
  }
  throw InputError("no bidirection pattern for type 'other'");
}

int letter_color(EdgeType t) {
  switch (t) {
    case EdgeType::kC: return 0;
    case EdgeType::kD: return 1;
    case EdgeType::kB: return 2;
    default: return -1;
  }
}

EdgeType color_letter_type(Color c) {
  switch (c) {
    case Color::kV: return EdgeType::kC;
    case Color::kF: return EdgeType::kD;
    default: return EdgeType::kB;
  }
}

}  // namespace

bool is_direction(const FlagGraph& jewel, const Bidirection& delta) {
  check_size(jewel, delta);
  for (int x = 0; x < jewel.num_flags(); ++x) {
    if (delta.label(x) == delta.label(jewel.partner(Color::kA, x))) return false;
  }
  return true;
}

bool is_antidirection(const FlagGraph& jewel, const Bidirection& delta) {
  check_size(jewel, delta);
  for (int x = 0; x < jewel.num_flags(); ++x) {
    if (delta.label(x) != delta.label(jewel.partner(Color::kA, x))) return false;
  }
  return true;
}

bool is_balanced_or_total(const FlagGraph& jewel, const Bidirection& delta) {
  check_size(jewel, delta);
  for (int e = 0; e < jewel.num_labels(); ++e) {
    int outs = 0;
    for (int x : square(jewel, e)) outs += delta.label(x);
    if (outs == 1 || outs == 3) return false;
  }
  return true;
}

EdgeType classify_edge(const FlagGraph& jewel, const Bidirection& delta, int edge) {
  check_size(jewel, delta);
  const auto [x0, x1, x2, x3] = square(jewel, edge);
  const bool flip_v = delta.label(x0) != delta.label(x1);
  const bool flip_v2 = delta.label(x2) != delta.label(x3);
  const bool flip_f = delta.label(x1) != delta.label(x2);
  const bool flip_f2 = delta.label(x3) != delta.label(x0);
  if (flip_v != flip_v2 || flip_f != flip_f2) return EdgeType::kOther;
  if (flip_v && flip_f) return EdgeType::kB;
  if (flip_f) return EdgeType::kC;
  if (flip_v) return EdgeType::kD;
  return delta.is_out(x0) ? EdgeType::kTPlus : EdgeType::kTMinus;
}

std::vector<EdgeType> classify_edges(const FlagGraph& jewel, const Bidirection& delta) {
  std::vector<EdgeType> out;
  for (int e = 0; e < jewel.num_labels(); ++e) out.push_back(classify_edge(jewel, delta, e));
  return out;
}

std::vector<EdgeType> classify_edges(const EmbeddedGraph& g, const Bidirection& delta) {
  return classify_edges(build_jewel(g), delta);
}

EdgeType predict_type_change(EdgeType type, TwistElement t) {
  const int c = letter_color(type);
  if (c < 0) return type;
  return color_letter_type(t.apply(static_cast<Color>(c)));
}

std::vector<EdgeType> apply_and_reclassify(const Jewel& jewel, const Bidirection& delta,
                                           const TwistWord& word) {
  return classify_edges(apply_twist(jewel, word), delta);
}

FanoVector condition_for(BidirectionKind kind, EdgeType type) {
  if (kind == BidirectionKind::kDirection) {
    switch (type) {
      case EdgeType::kB: return FanoVector(1);
      case EdgeType::kC: return FanoVector(4);
      case EdgeType::kD: return FanoVector(2);
      case EdgeType::kTMinus:
      case EdgeType::kTPlus: return FanoVector(7);
      case EdgeType::kOther: break;
    }
  } else {
    switch (type) {
      case EdgeType::kB: return FanoVector(6);
      case EdgeType::kC: return FanoVector(3);
      case EdgeType::kD: return FanoVector(5);
      default: break;
    }
  }
  throw InputError("no condition for a " + to_string(type) +
                   (kind == BidirectionKind::kDirection ? "-direction" : "-antidirection"));
}

BidirectionSearch find_bidirection_with_types(const Jewel& jewel, BidirectionKind kind,
                                              const std::vector<EdgeType>& required) {
  if (static_cast<int>(required.size()) != jewel.num_labels()) {
    throw InputError("required type list length differs from edge count");
  }
  std::vector<std::uint8_t> offset(jewel.num_flags(), 0);
  for (int e = 0; e < jewel.num_labels(); ++e) {
    const auto p = pattern(required[e]);
    const auto sq = square(jewel, e);
    for (int i = 0; i < 4; ++i) offset[sq[i]] = p[i];
  }

  // One state bit per e-simplex picks the pattern or its complement. A medial
  // edge forces the two states it joins to agree or differ.
  const std::uint8_t across = kind == BidirectionKind::kDirection ? 1 : 0;
  LabelGraph simplices;
  simplices.num_vertices = jewel.num_labels();
  std::vector<int> a_edge_flag;
  for (int x = 0; x < jewel.num_flags(); ++x) {
    const int y = jewel.partner(Color::kA, x);
    if (x > y) continue;
    simplices.edges.emplace_back(jewel.label(x), jewel.label(y));
    simplices.in_s.push_back(static_cast<char>(across ^ offset[x] ^ offset[y]));
    a_edge_flag.push_back(x);
  }
  const SLabeling states = s_labeling(simplices);

  BidirectionSearch out;
  out.found = states.ok;
  if (!states.ok) {
    for (int e : states.witness->edges) out.obstruction.push_back(a_edge_flag[e]);
    return out;
  }
  out.bidirection = Bidirection(jewel.num_flags());
  for (int x = 0; x < jewel.num_flags(); ++x) {
    out.bidirection.set(x, (states.labels[jewel.label(x)] ^ offset[x]) != 0);
  }
  return out;
}

BidirectionSearch find_bidirection(const Jewel& jewel, BidirectionKind kind, EdgeType type) {
  condition_for(kind, type);
  return find_bidirection_with_types(jewel, kind,
                                     std::vector<EdgeType>(jewel.num_labels(), type));
}

BidirectionSearch find_direction(const EmbeddedGraph& g, EdgeType type) {
  return find_bidirection(build_jewel(g), BidirectionKind::kDirection, type);
}

BidirectionSearch find_antidirection(const EmbeddedGraph& g, EdgeType type) {
  return find_bidirection(build_jewel(g), BidirectionKind::kAntidirection, type);
}

bool twisted_dual_target_feasible(const EmbeddedGraph& g, const TwistWord& word,
                                  BidirectionKind kind, EdgeType target) {
  condition_for(kind, target);
  std::vector<EdgeType> required;
  for (int e = 0; e < g.num_edges(); ++e) {
    required.push_back(predict_type_change(target, word.at(e).inverse()));
  }
  return find_bidirection_with_types(build_jewel(g), kind, required).found;
}

bool orientable_twisted_dual_feasible(const EmbeddedGraph& g, const TwistWord& word) {
  return twisted_dual_target_feasible(g, word, BidirectionKind::kDirection, EdgeType::kB);
}

bool bipartite_twisted_dual_feasible(const EmbeddedGraph& g, const TwistWord& word) {
  return twisted_dual_target_feasible(g, word, BidirectionKind::kAntidirection, EdgeType::kC);
}

TwistElement element_mapping(EdgeType from, EdgeType to) {
  static constexpr std::array<TwistElement, 6> kBySpelling = {
      TwistElement::identity(),
      TwistElement::dual(),
      TwistElement::petrie(),
      TwistElement::dual() * TwistElement::petrie(),
      TwistElement::petrie() * TwistElement::dual(),
      TwistElement::wilson(),
  };
  for (TwistElement t : kBySpelling) {
    if (predict_type_change(from, t) == to) return t;
  }
  throw InputError("no twist takes type " + to_string(from) + " to " + to_string(to));
}

TwistedDualConstruction bipartite_twisted_dual_construct(const EmbeddedGraph& g,
                                                         EdgeType target) {
  const FanoVector goal = condition_for(BidirectionKind::kAntidirection, target);
  const Jewel jewel = build_jewel(g);

  AbstractGraph medial;
  medial.vertex_names = jewel.label_names();
  std::vector<int> a_edge_flag;
  for (int x = 0; x < jewel.num_flags(); ++x) {
    const int y = jewel.partner(Color::kA, x);
    if (x > y) continue;
    medial.edges.emplace_back(jewel.label(x), jewel.label(y));
    a_edge_flag.push_back(x);
  }

  // Alternating introverted and extraverted medial edges along an Euler
  // circuit leaves two in and two out at every e-simplex.
  TwistedDualConstruction out;
  out.antidirection = Bidirection(jewel.num_flags());
  for (const auto& circuit : euler_circuits(medial)) {
    for (std::size_t i = 0; i < circuit.size(); ++i) {
      const int x = a_edge_flag[circuit[i].edge];
      const bool label = (i % 2) == 1;
      out.antidirection.set(x, label);
      out.antidirection.set(jewel.partner(Color::kA, x), label);
    }
  }
  out.types = classify_edges(jewel, out.antidirection);
  out.word = TwistWord(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) out.word.set(e, element_mapping(out.types[e], target));
  out.result = twisted_dual(g, out.word);
  if (!cwbar(build_jewel(out.result), goal)) {
    throw StructuralError("twisted dual construction missed condition " + goal.bits_string());
  }
  return out;
}

namespace {

struct SimplexLayout {
  std::array<int, 4> flags{};
  bool total = false;
  int equal_pair = 0;  // for balanced vertices: matching index pairing equal labels
};

// The three perfect matchings of four items, each as the partner table.
constexpr std::array<std::array<int, 4>, 3> kMatchings = {{
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
}};

}  // namespace

namespace {

std::vector<SimplexLayout> layout_4regular(const FourRegularInput& input, BidirectionKind kind,
                                           EdgeType target) {
  const AbstractGraph& m = input.graph;
  if (static_cast<int>(input.halfedge_out.size()) != 2 * m.num_edges()) {
    throw InputError("bidirection must give one label per medial half-edge");
  }
  condition_for(kind, target);
  std::vector<std::vector<int>> at(m.num_vertices());
  for (int i = 0; i < m.num_edges(); ++i) {
    at[m.edges[i].first].push_back(2 * i);
    at[m.edges[i].second].push_back(2 * i + 1);
    const bool differ = input.halfedge_out[2 * i] != input.halfedge_out[2 * i + 1];
    if (kind == BidirectionKind::kDirection && !differ) {
      throw InputError("medial edge " + std::to_string(i) + " is not directed");
    }
    if (kind == BidirectionKind::kAntidirection && differ) {
      throw InputError("medial edge " + std::to_string(i) + " is not antidirected");
    }
  }
  const bool want_total = target == EdgeType::kTMinus || target == EdgeType::kTPlus;
  std::vector<SimplexLayout> layout(m.num_vertices());
  for (int u = 0; u < m.num_vertices(); ++u) {
    if (at[u].size() != 4) {
      throw InputError("vertex '" + m.vertex_names[u] + "' has degree " +
                       std::to_string(at[u].size()) + ", expected 4");
    }
    SimplexLayout& s = layout[u];
    int outs = 0;
    for (int i = 0; i < 4; ++i) {
      s.flags[i] = at[u][i];
      outs += input.halfedge_out[at[u][i]];
    }
    s.total = outs == 0 || outs == 4;
    if (want_total != s.total || (!s.total && outs != 2)) {
      throw InputError("vertex '" + m.vertex_names[u] + "' is not " +
                       (want_total ? "total" : "balanced"));
    }
    if (!s.total) {
      for (int k = 0; k < 3; ++k) {
        if (input.halfedge_out[s.flags[0]] == input.halfedge_out[s.flags[kMatchings[k][0]]]) {
          s.equal_pair = k;
        }
      }
    }
  }
  return layout;
}

std::uint64_t choice_count(const std::vector<SimplexLayout>& layout, std::size_t cap) {
  std::uint64_t total = 1;
  for (const auto& s : layout) {
    total *= s.total ? 6 : 2;
    if (total > cap) return cap + 1;
  }
  return total;
}

Jewel assemble(const FourRegularInput& input, const std::vector<SimplexLayout>& layout,
               EdgeType target, std::uint64_t choice) {
  const AbstractGraph& m = input.graph;
  const int n = 2 * m.num_edges();
  std::array<std::vector<int>, 4> partner;
  for (auto& p : partner) p.assign(n, -1);
  std::vector<int> label(n);
  for (int i = 0; i < m.num_edges(); ++i) {
    partner[3][2 * i] = 2 * i + 1;
    partner[3][2 * i + 1] = 2 * i;
  }
  // The color whose matching pairs equal labels is the one the type leaves
  // unflipped: z for b, v for c, f for d.
  const int fixed_color = target == EdgeType::kB ? 2 : target == EdgeType::kC ? 0 : 1;
  static constexpr std::array<std::array<int, 3>, 6> kPerms = {
      {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  for (int u = 0; u < m.num_vertices(); ++u) {
    const SimplexLayout& s = layout[u];
    std::array<int, 3> matching_of_color{};
    if (s.total) {
      matching_of_color = kPerms[choice % 6];
      choice /= 6;
    } else {
      const int bit = static_cast<int>(choice % 2);
      choice /= 2;
      const int others[2] = {(s.equal_pair + 1) % 3, (s.equal_pair + 2) % 3};
      matching_of_color[fixed_color] = s.equal_pair;
      matching_of_color[(fixed_color + 1) % 3] = others[bit];
      matching_of_color[(fixed_color + 2) % 3] = others[1 - bit];
    }
    for (int c = 0; c < 3; ++c) {
      const auto& mt = kMatchings[matching_of_color[c]];
      for (int i = 0; i < 4; ++i) partner[c][s.flags[i]] = s.flags[mt[i]];
    }
    for (int x : s.flags) label[x] = u;
  }
  return Jewel(std::move(partner[0]), std::move(partner[1]), std::move(partner[2]),
               std::move(partner[3]), std::move(label), m.vertex_names);
}

}  // namespace

Jewel embed_4regular(const FourRegularInput& input, BidirectionKind kind, EdgeType target,
                     std::uint64_t choice) {
  const auto layout = layout_4regular(input, kind, target);
  return assemble(input, layout, target, choice);
}

std::vector<Jewel> enumerate_4regular_embeddings(const FourRegularInput& input,
                                                 BidirectionKind kind, EdgeType target,
                                                 std::size_t cap) {
  const auto layout = layout_4regular(input, kind, target);
  const std::uint64_t count = choice_count(layout, cap);
  if (count > cap) {
    throw DomainError("more than " + std::to_string(cap) + " embeddings in the class");
  }
  std::vector<Jewel> out;
  for (std::uint64_t c = 0; c < count; ++c) out.push_back(assemble(input, layout, target, c));
  return out;
}

}  // namespace fano
