#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "coxdiag/complexes.hpp"
#include "coxdiag/coxeter.hpp"
#include "coxdiag/cw_complex.hpp"
#include "coxdiag/diagram.hpp"
#include "coxdiag/errors.hpp"
#include "coxdiag/parabolic.hpp"
#include "coxdiag/rewrite.hpp"
#include "coxdiag/search.hpp"
#include "coxdiag/system_file.hpp"
#include "coxdiag/zamolodzhikov.hpp"

namespace coxdiag::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string group;
  std::string command;
  std::string system_path;
  std::string format = "text";
  std::string output_path;
  std::string budget_text;
  std::uint64_t seed = 0;

  std::string word;
  std::string other_word;
  std::string subset;
  std::string diagram_path;
  std::string other_path;
  std::string complex_path;
  std::string relation_path;
  std::string kind;
  std::string emit = "text";
  std::string mode = "oriented";
  bool zam = false;
  bool pruned = false;

  Budget budget;
};

// Fields render as `key: value` lines; `body` follows verbatim. With
// `body_only` the text form is just the body (DOT output).
struct Report {
  json fields = json::object();
  std::string body_key;
  std::string body;
  bool body_only = false;
  int status = kExitOk;
  std::string error;
};

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "?";
  if (v.is_array() || v.is_object()) {
    std::string out;
    for (const auto& item : v) {
      if (!out.empty()) out += ' ';
      out += scalar_text(item);
    }
    return out;
  }
  return v.dump();
}

std::string render(const Report& r, bool as_json) {
  if (as_json) {
    json all = r.fields;
    if (!r.body_key.empty()) all[r.body_key] = r.body;
    return all.dump(2) + "\n";
  }
  if (r.body_only) return r.body;
  // With a body the fields become comments so the output parses as a dump.
  const std::string lead = r.body.empty() ? "" : "# ";
  std::string out;
  for (const auto& [key, value] : r.fields.items()) {
    const bool numeric = std::all_of(value.begin(), value.end(),
                                     [](const json& v) { return v.is_number() || v.is_null(); });
    if (value.is_array() && !numeric) {
      for (const auto& item : value) out += lead + key + ": " + scalar_text(item) + "\n";
      if (value.empty()) out += lead + key + ":\n";
    } else {
      out += lead + key + ": " + scalar_text(value) + "\n";
    }
  }
  out += r.body;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::string word_text(const CoxeterSystem& sys, const Word& w) {
  return w.empty() ? "e" : format_word(sys, w);
}

// "e" (or nothing) is the empty word unless a generator is called e.
Word read_word(const CoxeterSystem& sys, const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  if (text.substr(first, last - first + 1) == "e" && !sys.find("e")) return {};
  return parse_word(sys, text);
}

std::string subset_text(const CoxeterSystem& sys, GeneratorSet s) {
  return format_subset(sys, s);
}

Mode read_mode(const std::string& text) {
  if (text == "oriented") return Mode::Oriented;
  if (text == "unoriented") return Mode::Unoriented;
  throw UsageError("--mode must be oriented or unoriented");
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

json betti_json(const std::vector<std::optional<std::size_t>>& h) {
  json out = json::array();
  for (const auto& b : h) out.push_back(b ? json(*b) : json(nullptr));
  return out;
}

json counts_json(const CWComplexMod2& c) {
  json out = json::array();
  for (std::size_t n : c.counts()) out.push_back(n);
  return out;
}

std::uint64_t node_budget_or(const Budget& b, std::uint64_t fallback) {
  if (b.nodes) return *b.nodes;
  if (b.seconds) return std::numeric_limits<std::uint64_t>::max();
  return fallback;
}

void require(bool ok, const char* message) {
  if (!ok) throw UsageError(message);
}

// ---- group ----

Report group_info(const Invocation&, const CoxeterSystem& sys) {
  Report r;
  r.fields["rank"] = sys.rank();
  r.fields["generators"] = sys.names();
  json pairs = json::array();
  for (Generator s = 0; s < sys.rank(); ++s) {
    for (Generator t = s + 1; t < sys.rank(); ++t) {
      const int m = sys.m(s, t);
      pairs.push_back(sys.name(s) + " " + sys.name(t) + " " +
                      (m == kInfinity ? std::string("inf") : std::to_string(m)));
    }
  }
  r.fields["m"] = pairs;
  r.fields["order"] = group_order(sys, sys.all()).to_string();
  r.fields["type"] = is_finitary(sys, sys.all()) ? type_name(sys, sys.all()) : "infinite";
  json fin = json::array();
  for (GeneratorSet s : finitary_subsets(sys, sys.all())) {
    if (s.empty()) continue;
    fin.push_back({{"subset", subset_text(sys, s)},
                   {"type", type_name(sys, s)},
                   {"order", group_order(sys, s).to_string()}});
  }
  r.fields["finitary"] = fin;
  return r;
}

Report group_enumerate(const Invocation& inv, const CoxeterSystem& sys) {
  const GeneratorSet subset = inv.subset.empty() ? sys.all() : parse_subset(sys, inv.subset);
  if (!is_finitary(sys, subset)) {
    throw DomainError("subset " + subset_text(sys, subset) + " generates an infinite group");
  }
  Report r;
  r.fields["subset"] = subset_text(sys, subset);
  const auto elements = enumerate(sys, subset);
  r.fields["order"] = elements.size();
  json list = json::array();
  for (const Element& e : elements) {
    list.push_back({{"length", e.length()}, {"word", word_text(sys, e.normal())}});
  }
  r.fields["elements"] = list;
  return r;
}

Report group_normal_form(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.word.empty(), "--word is required");
  const Word w = read_word(sys, inv.word);
  const Element e = normal_form(sys, w);
  Report r;
  r.fields["input"] = word_text(sys, w);
  r.fields["normal"] = word_text(sys, e.normal());
  r.fields["length"] = e.length();
  r.fields["left_descents"] = subset_text(sys, descents(sys, e, Side::Left));
  r.fields["right_descents"] = subset_text(sys, descents(sys, e, Side::Right));
  return r;
}

// ---- word ----

Report word_reduce(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.word.empty(), "--word is required");
  const Word w = read_word(sys, inv.word);
  const Element e = normal_form(sys, w);
  Report r;
  r.fields["input"] = word_text(sys, w);
  r.fields["normal"] = word_text(sys, e.normal());
  r.fields["length"] = e.length();
  r.fields["input_reduced"] = e.length() == w.size();
  return r;
}

Report word_equal(const Invocation& inv, const CoxeterSystem& sys, bool positive) {
  require(!inv.word.empty() && !inv.other_word.empty(), "--word and --other are required");
  const Word u = read_word(sys, inv.word);
  const Word v = read_word(sys, inv.other_word);
  Report r;
  if (positive) {
    r.fields["word"] = word_text(sys, u);
    r.fields["other"] = word_text(sys, v);
    r.fields["equal"] = positive_braid_equal(sys, u, v);
  } else {
    const Element a = normal_form(sys, u);
    const Element b = normal_form(sys, v);
    r.fields["normal"] = word_text(sys, a.normal());
    r.fields["other_normal"] = word_text(sys, b.normal());
    r.fields["equal"] = a == b;
  }
  return r;
}

Report word_graph(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.word.empty(), "--word is required");
  require(inv.emit == "text" || inv.emit == "dot", "--emit must be text or dot");
  const Element e = normal_form(sys, read_word(sys, inv.word));
  const ReducedExpressionGraph g = reduced_expression_graph(sys, e);
  Report r;
  r.fields["element"] = word_text(sys, e.normal());
  r.fields["vertices"] = g.vertices.size();
  r.fields["edges"] = g.edges.size();
  r.fields["connected"] = g.connected();
  std::string dot = "graph reduced_words {\n";
  for (const Word& w : g.vertices) dot += "  " + dot_quote(word_text(sys, w)) + ";\n";
  for (const auto& edge : g.edges) {
    dot += "  " + dot_quote(word_text(sys, g.vertices[edge.from])) + " -- " +
           dot_quote(word_text(sys, g.vertices[edge.to])) + " [label=" +
           dot_quote(std::to_string(edge.position) + ":" + sys.name(edge.s) + "," +
                     sys.name(edge.t)) +
           "];\n";
  }
  dot += "}\n";
  if (inv.emit == "dot") {
    r.body_key = "dot";
    r.body = dot;
    r.body_only = true;
  } else {
    json words = json::array();
    for (const Word& w : g.vertices) words.push_back(word_text(sys, w));
    r.fields["words"] = words;
  }
  return r;
}

// ---- diagram ----

Diagram load_diagram(const CoxeterSystem& sys, const std::string& path) {
  Diagram d = parse_diagram(sys, read_file(path));
  validate(sys, d);
  return d;
}

RuleCatalog make_catalog(const Invocation& inv, const CoxeterSystem& sys, Mode mode) {
  RuleCatalog catalog(sys, mode);
  if (inv.zam) {
    ZamSearchOptions options;
    options.seed = inv.seed;
    install_all_zamolodzhikov(catalog, options);
  }
  return catalog;
}

void describe_diagram(Report& r, const CoxeterSystem& sys, const Diagram& d,
                      const std::string& prefix) {
  const auto [dom, cod] = boundary(d);
  r.fields[prefix + "mode"] = d.mode() == Mode::Oriented ? "oriented" : "unoriented";
  r.fields[prefix + "slices"] = d.size();
  r.fields[prefix + "domain"] = format_strands(sys, dom.strands);
  r.fields[prefix + "codomain"] = format_strands(sys, cod.strands);
}

Report diagram_check(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.diagram_path.empty(), "--diagram is required");
  const Diagram d = load_diagram(sys, inv.diagram_path);
  Report r;
  describe_diagram(r, sys, d, "");
  r.fields["boundary_image"] = word_text(sys, group_image(sys, d.domain()).normal());
  r.fields["valid"] = true;
  return r;
}

Report diagram_normalize(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.diagram_path.empty(), "--diagram is required");
  const Diagram d = load_diagram(sys, inv.diagram_path);
  const RuleCatalog catalog = make_catalog(inv, sys, d.mode());
  const NormalizeResult n = normalize(catalog, d, node_budget_or(inv.budget, 100'000));
  Report r;
  r.fields["slices_before"] = d.size();
  r.fields["slices_after"] = n.diagram.size();
  r.fields["nodes"] = n.nodes;
  r.fields["certificate"] = lines_of(format_certificate(n.certificate));
  r.body_key = "diagram";
  r.body = format_diagram(sys, n.diagram);
  return r;
}

Report diagram_equal(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.diagram_path.empty() && !inv.other_path.empty(),
          "--diagram and --other are required");
  const Diagram a = load_diagram(sys, inv.diagram_path);
  const Diagram b = load_diagram(sys, inv.other_path);
  const RuleCatalog catalog = make_catalog(inv, sys, a.mode());
  SearchOptions options;
  options.node_budget = node_budget_or(inv.budget, options.node_budget);
  if (inv.budget.seconds) options.time_budget_seconds = *inv.budget.seconds;
  const SearchResult res = search_equality(catalog, a, b, options);
  Report r;
  r.fields["status"] = std::string(status_name(res.status));
  r.fields["nodes"] = res.nodes;
  r.fields["moves"] = res.certificate.size();
  r.fields["certificate"] = lines_of(format_certificate(res.certificate));
  return r;
}

Report diagram_forget(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.diagram_path.empty(), "--diagram is required");
  const Diagram d = load_diagram(sys, inv.diagram_path);
  if (d.mode() != Mode::Oriented) throw DomainError("diagram is already unoriented");
  Report r;
  r.body_key = "diagram";
  r.body = format_diagram(sys, forget_orientation(d));
  return r;
}

// ---- complex ----

CWComplexMod2 build_kind(const std::string& kind, const CoxeterSystem& sys) {
  if (kind == "dual") return dual_coxeter_complex(sys, false);
  if (kind == "dual-completed") return dual_coxeter_complex(sys, true);
  if (kind == "coxeter") return coxeter_complex(sys);
  if (kind == "salvetti") return salvetti_complex(sys);
  if (kind == "bw") return bw_complex(sys);
  if (kind == "presentation") return presentation_complex(coxeter_presentation(sys));
  if (kind == "cover") return universal_cover_2skeleton(sys);
  throw UsageError("unknown complex kind '" + kind + "'");
}

std::string one_skeleton_dot(const CWComplexMod2& c) {
  const auto vertices = c.cells_of_dim(0);
  std::string dot = "graph one_skeleton {\n";
  for (std::size_t v : vertices) {
    dot += "  v" + std::to_string(v) + " [label=" + dot_quote(c.cell(v).label) + "];\n";
  }
  for (std::size_t e : c.cells_of_dim(1)) {
    const Cell& cell = c.cell(e);
    const std::string label = " [label=" + dot_quote(cell.label) + "];\n";
    if (cell.boundary.size() == 2) {
      dot += "  v" + std::to_string(cell.boundary[0]) + " -- v" +
             std::to_string(cell.boundary[1]) + label;
    } else if (cell.boundary.empty() && vertices.size() == 1) {
      dot += "  v" + std::to_string(vertices[0]) + " -- v" + std::to_string(vertices[0]) + label;
    } else {
      dot += "  // cell " + std::to_string(e) + " has no endpoint pair\n";
    }
  }
  dot += "}\n";
  return dot;
}

Report complex_build(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.kind.empty(), "--kind is required");
  require(inv.emit == "text" || inv.emit == "dot", "--emit must be text or dot");
  const CWComplexMod2 c = build_kind(inv.kind, sys);
  Report r;
  if (inv.emit == "dot") {
    r.body_key = "dot";
    r.body = one_skeleton_dot(c);
    r.body_only = true;
    return r;
  }
  r.fields["kind"] = inv.kind;
  r.fields["counts"] = counts_json(c);
  r.body_key = "dump";
  r.body = format_complex(c);
  return r;
}

Report complex_homology(const Invocation& inv, const CoxeterSystem* sys) {
  require(inv.kind.empty() != inv.complex_path.empty(), "give exactly one of --kind or --complex");
  CWComplexMod2 c;
  if (!inv.complex_path.empty()) {
    c = parse_complex(read_file(inv.complex_path));
  } else {
    require(sys != nullptr, "--system is required with --kind");
    c = build_kind(inv.kind, *sys);
  }
  check_boundary_squared(c);
  Report r;
  r.fields["counts"] = counts_json(c);
  r.fields["euler"] = euler_characteristic(c);
  r.fields["betti_mod2"] = betti_json(homology_mod2(c));
  return r;
}

Report complex_census(const Invocation& inv, const CoxeterSystem& sys) {
  const CellCensus c =
      inv.pruned ? pruned_half_skeleton_census(sys) : coxeter_3presentation_census(sys);
  Report r;
  r.fields["census"] = inv.pruned ? "pruned" : "full";
  r.fields["group_order"] = c.group_order;
  r.fields["vertices"] = c.vertices;
  r.fields["edges"] = c.edges;
  r.fields["quadratic"] = c.quadratic;
  r.fields["braid"] = c.braid;
  r.fields["z"] = c.z;
  r.fields["rotation"] = c.rotation;
  r.fields["flip"] = c.flip;
  r.fields["zamolodzhikov"] = c.zamolodzhikov;
  r.fields["three_cells"] = c.three_cells();
  r.fields["kept_z"] = c.kept_z;
  r.fields["kept_rotation_flip"] = c.kept_rotation_flip;
  r.fields["kept_zamolodzhikov"] = c.kept_zamolodzhikov;
  r.fields["kept"] = c.kept();
  r.fields["removed"] = c.removed();
  return r;
}

// ---- zam ----

ZamSearchOptions zam_options(const Invocation& inv) {
  ZamSearchOptions options;
  options.node_budget = node_budget_or(inv.budget, options.node_budget);
  if (inv.budget.seconds) options.time_budget_seconds = *inv.budget.seconds;
  options.seed = inv.seed;
  return options;
}

void describe_relation(Report& r, const CoxeterSystem& sys, const ZamRelation& rel) {
  r.fields["type"] = zam_type_tag(sys, rel.subset);
  r.fields["faces"] = sphere_face_count(sys, rel.subset);
  r.fields["hemisphere1"] = rel.cells1.size();
  r.fields["hemisphere2"] = rel.cells2.size();
}

Report zam_generate(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.subset.empty(), "--triple is required");
  const GeneratorSet subset = parse_subset(sys, inv.subset);
  Report r;
  try {
    const ZamRelation rel = generate_zamolodzhikov(sys, subset, zam_options(inv));
    r.fields["status"] = "generated";
    describe_relation(r, sys, rel);
    r.fields["verified"] = verify_zamolodzhikov(sys, rel);
    r.body_key = "relation";
    r.body = format_zam_relation(sys, rel);
  } catch (const LimitExceeded& e) {
    r.fields["status"] = "budget-exhausted";
    r.status = kExitDomain;
    r.error = e.what();
  }
  return r;
}

Report zam_verify(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.relation_path.empty(), "--relation is required");
  const ZamRelation rel = parse_zam_relation(sys, read_file(inv.relation_path));
  Report r;
  describe_relation(r, sys, rel);
  const bool ok = verify_zamolodzhikov(sys, rel);
  r.fields["verified"] = ok;
  if (!ok) {
    r.status = kExitDomain;
    r.error = "relation does not verify: paths are not complementary hemispheres";
  }
  return r;
}

Report zam_install_dump(const Invocation& inv, const CoxeterSystem& sys) {
  require(!inv.subset.empty() || !inv.relation_path.empty(), "--triple or --relation is required");
  const Mode mode = read_mode(inv.mode);
  const ZamRelation rel = !inv.relation_path.empty()
                              ? parse_zam_relation(sys, read_file(inv.relation_path))
                              : generate_zamolodzhikov(sys, parse_subset(sys, inv.subset),
                                                       zam_options(inv));
  const RewriteRule rule = install_zamolodzhikov(sys, rel, mode);
  Report r;
  r.fields["id"] = rule.id;
  r.fields["family"] = std::string(family_name(rule.family));
  r.fields["type"] = rule.type_tag;
  r.fields["lhs_slices"] = rule.lhs.size();
  r.fields["rhs_slices"] = rule.rhs.size();
  r.fields["sound"] = check_rule_soundness(sys, rule);
  r.body_key = "rule";
  r.body = "# lhs\n" + format_diagram(sys, rule.lhs) + "# rhs\n" + format_diagram(sys, rule.rhs);
  return r;
}

using Handler = std::function<Report(const Invocation&, const CoxeterSystem&)>;

Report dispatch(const Invocation& inv) {
  const std::string key = inv.group + " " + inv.command;
  if (key == "complex homology") {
    std::optional<CoxeterSystem> sys;
    if (!inv.system_path.empty()) sys = parse_system_file(inv.system_path);
    return complex_homology(inv, sys ? &*sys : nullptr);
  }
  static const std::map<std::string, Handler> handlers = {
      {"group info", group_info},
      {"group enumerate", group_enumerate},
      {"group normal-form", group_normal_form},
      {"word reduce", word_reduce},
      {"word equal",
       [](const Invocation& i, const CoxeterSystem& s) { return word_equal(i, s, false); }},
      {"word positive-equal",
       [](const Invocation& i, const CoxeterSystem& s) { return word_equal(i, s, true); }},
      {"word graph", word_graph},
      {"diagram check", diagram_check},
      {"diagram normalize", diagram_normalize},
      {"diagram equal", diagram_equal},
      {"diagram forget-orientation", diagram_forget},
      {"complex build", complex_build},
      {"complex census", complex_census},
      {"zam generate", zam_generate},
      {"zam verify", zam_verify},
      {"zam install-dump", zam_install_dump},
  };
  const auto it = handlers.find(key);
  if (it == handlers.end()) throw UsageError("unknown subcommand '" + key + "'");
  require(!inv.system_path.empty(), "--system is required");
  const CoxeterSystem sys = parse_system_file(inv.system_path);
  return it->second(inv, sys);
}

void add_common(CLI::App* app, Invocation& inv) {
  app->add_option("--system", inv.system_path, "Coxeter system file");
  app->add_option("--format", inv.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--output", inv.output_path, "Write the report to this file");
  app->add_option("--budget", inv.budget_text, "Node count (1000000) or wall time (600s)");
  app->add_option("--seed", inv.seed, "Seed for randomized choices");
}

}  // namespace

Budget parse_budget(std::string_view text) {
  Budget b;
  if (text.empty()) throw std::invalid_argument("empty budget");
  if (text.back() == 's') {
    const std::string number(text.substr(0, text.size() - 1));
    std::size_t used = 0;
    double seconds = 0;
    try {
      seconds = std::stod(number, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (number.empty() || used != number.size() || !(seconds > 0)) {
      throw std::invalid_argument("bad time budget '" + std::string(text) + "'");
    }
    b.seconds = seconds;
    return b;
  }
  std::uint64_t nodes = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), nodes);
  if (ec != std::errc{} || p != text.data() + text.size() || nodes == 0) {
    throw std::invalid_argument("bad node budget '" + std::string(text) + "'");
  }
  b.nodes = nodes;
  return b;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Coxeter and Artin diagram calculus", "coxdiag"};
  app.require_subcommand(1);
  app.fallthrough();
  add_common(&app, inv);

  struct Leaf {
    const char* group;
    const char* name;
    const char* help;
  };
  const std::vector<Leaf> leaves = {
      {"group", "info", "Rank, order and finitary subsets"},
      {"group", "enumerate", "List the elements of a finite parabolic subgroup"},
      {"group", "normal-form", "Canonical reduced word and descent sets"},
      {"word", "reduce", "Reduce a word to normal form"},
      {"word", "equal", "Compare two words in W"},
      {"word", "positive-equal", "Compare two positive words in the Artin monoid"},
      {"word", "graph", "Reduced-expression graph of an element"},
      {"diagram", "check", "Validate a diagram and print its boundary"},
      {"diagram", "normalize", "Shrink a diagram with non-increasing moves"},
      {"diagram", "equal", "Search for an equality certificate"},
      {"diagram", "forget-orientation", "Erase strand signs"},
      {"complex", "build", "Build a complex and dump it"},
      {"complex", "homology", "Mod-2 Betti numbers of a built or dumped complex"},
      {"complex", "census", "3-cell census of the Coxeter 3-presentation"},
      {"zam", "generate", "Generate a Zamolodzhikov relation for a rank-3 subset"},
      {"zam", "verify", "Verify a dumped Zamolodzhikov relation"},
      {"zam", "install-dump", "Install a Zamolodzhikov relation as a rewrite rule"},
  };
  std::map<std::string, CLI::App*> groups;
  for (const char* g : {"group", "word", "diagram", "complex", "zam"}) {
    groups[g] = app.add_subcommand(g)->require_subcommand(1);
  }
  for (const Leaf& leaf : leaves) {
    CLI::App* sub = groups[leaf.group]->add_subcommand(leaf.name, leaf.help);
    const std::string group = leaf.group;
    const std::string name = leaf.name;
    sub->callback([&inv, group, name] {
      inv.group = group;
      inv.command = name;
    });
    if (group == "group" || group == "word") {
      if (name == "enumerate") sub->add_option("--subset", inv.subset, "Generator subset");
      if (name != "info" && name != "enumerate") {
        sub->add_option("--word", inv.word, "Word such as \"s1 s2 s1\"");
      }
      if (name == "equal" || name == "positive-equal") {
        sub->add_option("--other", inv.other_word, "Second word");
      }
      if (name == "graph") {
        sub->add_option("--emit", inv.emit, "text or dot");
      }
    } else if (group == "diagram") {
      sub->add_option("--diagram", inv.diagram_path, "Diagram file");
      if (name == "equal") sub->add_option("--other", inv.other_path, "Second diagram file");
      if (name == "equal" || name == "normalize") {
        sub->add_flag("--zam", inv.zam, "Install Zamolodzhikov rules");
      }
    } else if (group == "complex") {
      if (name != "census") {
        sub->add_option("--kind", inv.kind,
                        "dual, dual-completed, coxeter, salvetti, bw, presentation or cover");
      }
      if (name == "build") sub->add_option("--emit", inv.emit, "text or dot");
      if (name == "homology") sub->add_option("--complex", inv.complex_path, "Complex dump file");
      if (name == "census") sub->add_flag("--pruned", inv.pruned, "Keep only non-redundant cells");
    } else if (group == "zam") {
      if (name != "verify") sub->add_option("--triple", inv.subset, "Rank-3 subset, e.g. s1,s2,s3");
      if (name != "generate") sub->add_option("--relation", inv.relation_path, "Relation dump");
      if (name == "install-dump") sub->add_option("--mode", inv.mode, "oriented or unoriented");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    for (const CLI::App* level = &app; level != nullptr;) {
      if (level->get_subcommands().empty()) {
        auto extra = level->remaining();
        if (extra.empty()) extra = app.remaining();
        if (!extra.empty() && level->get_require_subcommand_min() > 0) {
          err << "usage error: unknown subcommand '" << extra.front() << "'\n";
          return kExitUsage;
        }
        break;
      }
      level = level->get_subcommands().front();
    }
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string budget_text = inv.budget_text;
    if (budget_text.empty()) {
      if (const char* env = std::getenv(kBudgetEnv)) budget_text = env;
    }
    if (!budget_text.empty()) {
      try {
        inv.budget = parse_budget(budget_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    const Report report = dispatch(inv);
    const std::string text = render(report, inv.format == "json");
    if (inv.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(inv.output_path, std::ios::binary);
      if (!file) throw DomainError("cannot write " + inv.output_path);
      file << text;
    }
    if (report.status != kExitOk) err << "error: " << report.error << '\n';
    return report.status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace coxdiag::cli
