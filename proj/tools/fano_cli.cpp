#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fano/bidirection.hpp"
#include "fano/embedding.hpp"
#include "fano/errors.hpp"
#include "fano/eulerian.hpp"
#include "fano/fano.hpp"
#include "fano/gallery.hpp"
#include "fano/gem.hpp"
#include "fano/io.hpp"
#include "fano/twist.hpp"

namespace {

using fano::EmbeddedGraph;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailed = 2;

struct Output {
  bool as_json = false;
};

EmbeddedGraph load(const std::string& path) { return fano::io::parse_embedding(fano::io::read_file(path)); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> isolated_names(const EmbeddedGraph& g) {
  std::vector<std::string> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.is_isolated(v)) out.push_back(g.vertex_name(v));
  }
  return out;
}

std::string word_text(const EmbeddedGraph& g, const fano::TwistWord& word) {
  std::ostringstream out;
  bool first = true;
  for (int e = 0; e < word.size(); ++e) {
    if (word.at(e).is_identity()) continue;
    out << (first ? "" : " ") << g.edge(e).name << ':' << word.at(e).spelling();
    first = false;
  }
  return out.str();
}

void print_embedding(const Output& o, const EmbeddedGraph& g) {
  std::cout << (o.as_json ? fano::io::format_embedding_json(g) : fano::io::format_embedding_text(g));
}

std::optional<fano::FanoVector> parse_condition(const std::string& text) {
  if (text.size() == 3 && text.find_first_not_of("01") == std::string::npos) {
    return fano::FanoVector(text[0] - '0', text[1] - '0', text[2] - '0');
  }
  for (int p = 1; p < 8; ++p) {
    if (text == fano::condition_name(fano::FanoVector(p))) return fano::FanoVector(p);
  }
  return std::nullopt;
}

// ---- analyze / fano --------------------------------------------------------

json fano_json(fano::FanoSet x) {
  json conditions = json::array();
  for (int p = 1; p < 8; ++p) {
    const fano::FanoVector beta(p);
    conditions.push_back({{"bits", beta.bits_string()},
                          {"name", fano::condition_name(beta)},
                          {"holds", x.contains(beta)}});
  }
  return {{"conditions", conditions}, {"set", x.to_string()}, {"nim", x.nim_labels()}};
}

void print_fano_text(fano::FanoSet x) {
  for (int p = 1; p < 8; ++p) {
    const fano::FanoVector beta(p);
    std::cout << '(' << beta.bits_string() << ") " << fano::condition_name(beta) << ": "
              << yes_no(x.contains(beta)) << '\n';
  }
  std::cout << "subspace " << x.nim_labels() << '\n';
}

int cmd_analyze(const Output& o, const std::string& path) {
  const EmbeddedGraph g = load(path);
  const fano::FanoSet x = fano::fano_set(g);
  const fano::EulerianTriple triple = fano::eulerian_triple(g);
  const fano::SurfaceData surface = fano::surface_data(g);
  const auto derived = fano::derived_graphs(g);
  if (o.as_json) {
    json report = fano_json(x);
    report["vertices"] = g.num_vertices();
    report["edges"] = g.num_edges();
    report["euler_characteristic"] = surface.euler_characteristic;
    report["orientable"] = surface.orientable;
    report["components"] = surface.components.size();
    report["eulerian"] = {{"even_vertex", triple.even_vertex},
                          {"even_face", triple.even_face},
                          {"even_zigzag", triple.even_zigzag}};
    json graphs = json::array();
    for (const auto& d : derived) {
      graphs.push_back({{"name", d.name},
                        {"condition", d.condition.bits_string()},
                        {"vertices", d.num_vertices},
                        {"edges", d.edges.size()},
                        {"bipartite", d.bipartite}});
    }
    report["derived_graphs"] = graphs;
    std::cout << report.dump(2) << '\n';
    return kOk;
  }
  std::cout << "vertices " << g.num_vertices() << ", edges " << g.num_edges() << ", components "
            << surface.components.size() << '\n';
  std::cout << "euler characteristic " << surface.euler_characteristic << '\n';
  std::cout << "orientable " << yes_no(surface.orientable) << '\n';
  print_fano_text(x);
  std::cout << "eulerian " << fano::to_string(triple) << '\n';
  for (const auto& d : derived) {
    std::cout << d.name << " graph (" << d.condition.bits_string() << "): " << d.num_vertices
              << " vertices, " << d.edges.size() << " edges, bipartite " << yes_no(d.bipartite) << '\n';
  }
  return kOk;
}

int cmd_fano(const Output& o, const std::string& path, const std::vector<std::string>& required) {
  const EmbeddedGraph g = load(path);
  const fano::FanoSet x = fano::fano_set(g);
  std::vector<std::string> missing;
  for (const auto& r : required) {
    const auto beta = parse_condition(r);
    if (!beta) throw fano::InputError("unknown condition '" + r + "'");
    if (!x.contains(*beta)) missing.push_back(beta->bits_string());
  }
  if (o.as_json) {
    json report = fano_json(x);
    report["missing"] = missing;
    std::cout << report.dump(2) << '\n';
  } else {
    print_fano_text(x);
    for (const auto& m : missing) std::cout << "required condition " << m << " does not hold\n";
  }
  return missing.empty() ? kOk : kCheckFailed;
}

// ---- twist -----------------------------------------------------------------

struct TwistArgs {
  std::string path;
  std::string word;
  bool dual_all = false;
  bool petrie_all = false;
  bool wilson_all = false;
};

int cmd_twist(const Output& o, const TwistArgs& args) {
  const EmbeddedGraph g = load(args.path);
  const int chosen = !args.word.empty() + args.dual_all + args.petrie_all + args.wilson_all;
  if (chosen != 1) {
    throw fano::InputError("give exactly one of --twist, --dual-all, --petrie-all, --wilson-all");
  }
  fano::TwistWord word;
  if (args.dual_all) word = fano::TwistWord::uniform(g.num_edges(), fano::TwistElement::dual());
  if (args.petrie_all) word = fano::TwistWord::uniform(g.num_edges(), fano::TwistElement::petrie());
  if (args.wilson_all) word = fano::TwistWord::uniform(g.num_edges(), fano::TwistElement::wilson());
  if (!args.word.empty()) word = fano::TwistWord::parse(g, args.word);
  print_embedding(o, fano::twisted_dual(g, word));
  return kOk;
}

// ---- bidirection -----------------------------------------------------------

struct BidirectionArgs {
  std::string path;
  std::string find;
  std::string classify;
  std::string construct;
};

std::pair<fano::BidirectionKind, fano::EdgeType> parse_search(const std::string& text) {
  const auto dash = text.find('-');
  if (dash == std::string::npos) throw fano::InputError("expected <type>-direction or <type>-antidirection");
  const std::string letter = text.substr(0, dash);
  const std::string kind = text.substr(dash + 1);
  static const std::map<std::string, fano::EdgeType> types = {
      {"b", fano::EdgeType::kB}, {"c", fano::EdgeType::kC}, {"d", fano::EdgeType::kD},
      {"t", fano::EdgeType::kTPlus}};
  const auto it = types.find(letter);
  if (it == types.end()) throw fano::InputError("unknown edge type '" + letter + "'");
  if (kind == "direction") return {fano::BidirectionKind::kDirection, it->second};
  if (kind == "antidirection") return {fano::BidirectionKind::kAntidirection, it->second};
  throw fano::InputError("unknown bidirection kind '" + kind + "'");
}

std::vector<std::string> obstruction_text(const EmbeddedGraph& g, const std::vector<int>& flags) {
  std::vector<std::string> out;
  for (int x : flags) {
    const fano::Flag f = fano::flag_of(x);
    std::ostringstream s;
    s << g.edge(f.edge).name << ':' << f.end << ':' << f.side;
    out.push_back(s.str());
  }
  return out;
}

int bidirection_find(const Output& o, const EmbeddedGraph& g, const std::string& request) {
  const auto [kind, type] = parse_search(request);
  const fano::FanoVector condition = fano::condition_for(kind, type);
  const auto search = fano::find_bidirection(fano::build_jewel(g), kind, type);
  const auto obstruction = obstruction_text(g, search.obstruction);
  if (o.as_json) {
    json report = {{"search", request}, {"condition", condition.bits_string()}, {"found", search.found}};
    if (search.found) {
      report["bidirection"] = fano::io::format_bidirection(g, search.bidirection);
    } else {
      report["obstruction"] = obstruction;
    }
    std::cout << report.dump(2) << '\n';
  } else if (search.found) {
    std::cout << "# " << request << " found (condition " << condition.bits_string() << ")\n"
              << fano::io::format_bidirection(g, search.bidirection);
  } else {
    std::cout << "no " << request << " (condition " << condition.bits_string() << " fails)\n";
    std::cout << "obstruction through a-edges at flags:";
    for (const auto& s : obstruction) std::cout << ' ' << s;
    std::cout << '\n';
  }
  return search.found ? kOk : kCheckFailed;
}

int bidirection_classify(const Output& o, const EmbeddedGraph& g, const std::string& path) {
  const fano::Jewel jewel = fano::build_jewel(g);
  const fano::Bidirection delta = fano::io::parse_bidirection(g, fano::io::read_file(path));
  const auto types = fano::classify_edges(jewel, delta);
  const bool direction = fano::is_direction(jewel, delta);
  const bool antidirection = fano::is_antidirection(jewel, delta);
  const bool balanced = fano::is_balanced_or_total(jewel, delta);
  if (o.as_json) {
    json per_edge = json::object();
    for (int e = 0; e < g.num_edges(); ++e) per_edge[g.edge(e).name] = fano::to_string(types[e]);
    std::cout << json{{"types", per_edge},
                      {"direction", direction},
                      {"antidirection", antidirection},
                      {"balanced_or_total", balanced}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  for (int e = 0; e < g.num_edges(); ++e) std::cout << g.edge(e).name << ": " << fano::to_string(types[e]) << '\n';
  std::cout << "direction " << yes_no(direction) << "\nantidirection " << yes_no(antidirection)
            << "\nbalanced or total " << yes_no(balanced) << '\n';
  return kOk;
}

int bidirection_construct(const Output& o, const EmbeddedGraph& g, const std::string& target) {
  static const std::map<std::string, fano::EdgeType> targets = {
      {"bipartite-twisted-dual", fano::EdgeType::kC},
      {"face-2-colorable-twisted-dual", fano::EdgeType::kD},
      {"zigzag-2-colorable-twisted-dual", fano::EdgeType::kB}};
  const auto it = targets.find(target);
  if (it == targets.end()) throw fano::InputError("unknown construction '" + target + "'");
  const auto built = fano::bipartite_twisted_dual_construct(g, it->second);
  const std::string word = word_text(g, built.word);
  if (o.as_json) {
    std::cout << json{{"word", word},
                      {"antidirection", fano::io::format_bidirection(g, built.antidirection)},
                      {"result", json::parse(fano::io::format_embedding_json(built.result))}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "# twist word: " << (word.empty() ? "(identity)" : word) << '\n';
  std::cout << fano::io::format_embedding_text(built.result);
  return kOk;
}

int cmd_bidirection(const Output& o, const BidirectionArgs& args) {
  const int chosen = !args.find.empty() + !args.classify.empty() + !args.construct.empty();
  if (chosen != 1) throw fano::InputError("give exactly one of --find, --classify, --construct");
  const EmbeddedGraph g = load(args.path);
  if (!args.find.empty()) return bidirection_find(o, g, args.find);
  if (!args.classify.empty()) return bidirection_classify(o, g, args.classify);
  return bidirection_construct(o, g, args.construct);
}

// ---- eulerian --------------------------------------------------------------

struct EulerianArgs {
  std::string path;
  bool triple = false;
  bool all_eulerian = false;
  bool oracle = false;
  bool all_single_vertex = false;
  std::string construct;
};

int eulerian_predicate(const Output& o, const std::string& name, bool holds,
                       const std::string& reason = {}) {
  if (o.as_json) {
    json report = {{"property", name}, {"holds", holds}};
    if (!reason.empty()) report["reason"] = reason;
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << name << ": " << yes_no(holds) << '\n';
    if (!reason.empty()) std::cout << "reason: " << reason << '\n';
  }
  return holds ? kOk : kCheckFailed;
}

int cmd_eulerian(const Output& o, const EulerianArgs& args) {
  const int chosen = args.triple + args.all_eulerian + args.all_single_vertex + !args.construct.empty();
  if (chosen != 1) {
    throw fano::InputError(
        "give exactly one of --triple, --all-partial-duals-eulerian, "
        "--all-partial-duals-single-vertex, --construct-from-euler-circuit");
  }
  if (args.oracle && !args.all_eulerian && !args.all_single_vertex) {
    throw fano::InputError("--oracle applies to the all-partial-duals checks only");
  }
  const std::string text = fano::io::read_file(args.path);
  if (!args.construct.empty()) {
    fano::EulerTarget target;
    if (args.construct == "bundle") {
      target = fano::EulerTarget::kBundle;
    } else if (args.construct == "111" || args.construct == "medial-bipartite") {
      target = fano::EulerTarget::kMedialBipartite;
    } else {
      throw fano::InputError("unknown target '" + args.construct + "' (bundle or 111)");
    }
    print_embedding(o, fano::construct_embedding(fano::io::parse_abstract_graph(text), target));
    return kOk;
  }
  const EmbeddedGraph g = fano::io::parse_embedding(text);
  if (args.triple) {
    const auto t = fano::eulerian_triple(g);
    if (o.as_json) {
      std::cout << json{{"even_vertex", t.even_vertex}, {"even_face", t.even_face}, {"even_zigzag", t.even_zigzag}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << fano::to_string(t) << '\n';
    }
    return kOk;
  }
  if (args.all_eulerian) {
    const bool holds = args.oracle ? fano::all_partial_duals_eulerian_oracle(g)
                                   : fano::all_partial_duals_eulerian(g);
    return eulerian_predicate(o, "all partial duals eulerian", holds);
  }
  if (args.oracle) {
    return eulerian_predicate(o, "all partial duals single-vertex",
                              fano::all_partial_duals_single_vertex_oracle(g));
  }
  const auto diagnosis = fano::all_partial_duals_single_vertex(g);
  return eulerian_predicate(o, "all partial duals single-vertex", diagnosis.holds, diagnosis.reason);
}

// ---- gallery / export ------------------------------------------------------

int cmd_gallery(const Output& o, const std::string& only) {
  if (!only.empty()) fano::gallery_entry(only);
  bool all_ok = true;
  json rows = json::array();
  for (const auto& check : fano::check_gallery()) {
    if (!only.empty() && check.name != only) continue;
    const auto& entry = fano::gallery_entry(check.name);
    all_ok = all_ok && check.ok;
    if (o.as_json) {
      rows.push_back({{"name", check.name},
                      {"ok", check.ok},
                      {"fano", check.fano.to_string()},
                      {"expected_fano", entry.expected_fano.to_string()},
                      {"eulerian", fano::to_string(check.eulerian)},
                      {"expected_eulerian", fano::to_string(entry.expected_eulerian)}});
    } else {
      std::cout << (check.ok ? "PASS " : "FAIL ") << check.name << "  fano " << check.fano.to_string()
                << " eulerian " << fano::to_string(check.eulerian);
      if (!check.ok) {
        std::cout << "  (expected " << entry.expected_fano.to_string() << ' '
                  << fano::to_string(entry.expected_eulerian) << ')';
      }
      std::cout << '\n';
    }
  }
  if (o.as_json) std::cout << rows.dump(2) << '\n';
  return all_ok ? kOk : kCheckFailed;
}

int cmd_export(const std::string& path, const std::string& format, bool jewel) {
  const EmbeddedGraph g = load(path);
  const auto isolated = isolated_names(g);
  if (jewel) {
    const fano::Jewel j = fano::build_jewel(g);
    std::cout << (format == "dot" ? fano::io::gem_to_dot(j, isolated) : fano::io::gem_to_json(j, isolated));
  } else {
    const fano::Gem gem = fano::build_gem(g);
    std::cout << (format == "dot" ? fano::io::gem_to_dot(gem, isolated) : fano::io::gem_to_json(gem, isolated));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze cellular graph embeddings through their gems and jewels"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Surface data, the seven conditions and Eulerian properties");
  analyze->add_option("file", path, "Embedding file (text or JSON)")->required();

  std::vector<std::string> required;
  auto* fano_cmd = app.add_subcommand("fano", "Fano set of an embedding");
  fano_cmd->add_option("file", path)->required();
  fano_cmd->add_option("--require", required, "Conditions (bits like 011 or names) that must hold");

  TwistArgs twist_args;
  auto* twist = app.add_subcommand("twist", "Apply a twisted duality word and print the result");
  twist->add_option("file", twist_args.path)->required();
  twist->add_option("--twist", twist_args.word, "Word such as \"e1:d e2:t e3:dt\"");
  twist->add_flag("--dual-all", twist_args.dual_all);
  twist->add_flag("--petrie-all", twist_args.petrie_all);
  twist->add_flag("--wilson-all", twist_args.wilson_all);

  BidirectionArgs bidi_args;
  auto* bidi = app.add_subcommand("bidirection", "Find, classify or construct medial bidirections");
  bidi->add_option("file", bidi_args.path)->required();
  bidi->add_option("--find", bidi_args.find, "For example c-direction or b-antidirection");
  bidi->add_option("--classify", bidi_args.classify, "File with one 'flag e:end:side in|out' line per flag");
  bidi->add_option("--construct", bidi_args.construct,
                   "bipartite-twisted-dual, face-2-colorable-twisted-dual or zigzag-2-colorable-twisted-dual");

  EulerianArgs euler_args;
  auto* euler = app.add_subcommand("eulerian", "Eulerian properties and Euler-circuit constructions");
  euler->add_option("file", euler_args.path)->required();
  euler->add_flag("--triple", euler_args.triple);
  euler->add_flag("--all-partial-duals-eulerian", euler_args.all_eulerian);
  euler->add_flag("--oracle", euler_args.oracle, "Check every partial dual directly");
  euler->add_flag("--all-partial-duals-single-vertex", euler_args.all_single_vertex);
  euler->add_option("--construct-from-euler-circuit", euler_args.construct, "bundle or 111");

  std::string only;
  auto* gallery = app.add_subcommand("gallery", "Check the built-in reference embeddings");
  gallery->add_option("--name", only, "Check a single entry");

  std::string export_format = "dot";
  bool export_jewel = false;
  auto* export_cmd = app.add_subcommand("export", "Write the gem (or jewel) as DOT or JSON");
  export_cmd->add_option("file", path)->required();
  export_cmd->add_option("--as", export_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_flag("--jewel", export_jewel, "Include the z-edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  const Output o{format == "json"};
  try {
    if (*analyze) return cmd_analyze(o, path);
    if (*fano_cmd) return cmd_fano(o, path, required);
    if (*twist) return cmd_twist(o, twist_args);
    if (*bidi) return cmd_bidirection(o, bidi_args);
    if (*euler) return cmd_eulerian(o, euler_args);
    if (*gallery) return cmd_gallery(o, only);
    if (*export_cmd) return cmd_export(path, export_format, export_jewel);
  } catch (const fano::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const fano::StructuralError& e) {
    std::cerr << "invalid embedding: " << e.what() << '\n';
    return kInputError;
  } catch (const fano::DomainError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
