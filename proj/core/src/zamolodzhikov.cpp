#include "coxdiag/zamolodzhikov.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "coxdiag/errors.hpp"
#include "coxdiag/parabolic.hpp"

namespace coxdiag {

Word apply_braid_move(const CoxeterSystem& sys, const Word& w, const BraidMove& move) {
  if (move.s >= sys.rank() || move.t >= sys.rank() || move.s == move.t) {
    throw DomainError("braid move names an invalid pair");
  }
  const int m = sys.m(move.s, move.t);
  if (m == kInfinity) throw DomainError("no braid move for m = inf");
  const auto mu = static_cast<std::size_t>(m);
  if (move.position + mu > w.size()) throw DomainError("braid move runs past the word");
  Word out = w;
  for (std::size_t i = 0; i < mu; ++i) {
    const Generator want = i % 2 == 0 ? move.s : move.t;
    if (w[move.position + i] != want) throw DomainError("word does not contain the braid at that position");
    out[move.position + i] = i % 2 == 0 ? move.t : move.s;
  }
  return out;
}

SphereFace face_of_move(const CoxeterSystem& sys, const Word& w, const BraidMove& move) {
  const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(std::min(move.position, w.size())));
  const GeneratorSet pair{move.s, move.t};
  return {pair, min_coset_representative(sys, normal_form(sys, prefix), pair)};
}

namespace {

void require_rank3_finitary(const CoxeterSystem& sys, GeneratorSet subset) {
  if (subset.size() != 3 || !subset.is_subset_of(sys.all())) {
    throw DomainError("subset " + format_subset(sys, subset) + " does not have rank 3");
  }
  if (!is_finitary(sys, subset)) {
    throw DomainError("subset " + format_subset(sys, subset) + " is not finitary");
  }
}

std::vector<GeneratorSet> pairs_of(GeneratorSet subset) {
  std::vector<GeneratorSet> out;
  const auto g = subset.members();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) out.push_back(GeneratorSet{g[i], g[j]});
  return out;
}

}  // namespace

SphereCellStructure sphere_cells(const CoxeterSystem& sys, GeneratorSet subset) {
  require_rank3_finitary(sys, subset);
  const auto elements = enumerate(sys, subset);
  SphereCellStructure out;
  out.subset = subset;
  out.vertices = elements.size();
  for (Generator s : subset.members()) {
    std::set<Element> cosets;
    for (const Element& x : elements) cosets.insert(min_coset_representative(sys, x, GeneratorSet{s}));
    out.edges += cosets.size();
  }
  for (GeneratorSet pair : pairs_of(subset)) {
    std::set<Element> cosets;
    for (const Element& x : elements) cosets.insert(min_coset_representative(sys, x, pair));
    for (const Element& rep : cosets) out.faces.push_back({pair, rep});
  }
  std::sort(out.faces.begin(), out.faces.end());
  return out;
}

std::size_t sphere_face_count(const CoxeterSystem& sys, GeneratorSet subset) {
  require_rank3_finitary(sys, subset);
  const std::uint64_t order = group_order(sys, subset).value();
  std::size_t total = 0;
  for (GeneratorSet pair : pairs_of(subset)) {
    const auto g = pair.members();
    total += order / (2 * static_cast<std::uint64_t>(sys.m(g[0], g[1])));
  }
  return total;
}

std::string zam_type_tag(const CoxeterSystem& sys, GeneratorSet subset) {
  return type_name(sys, subset);
}

namespace {

struct Arc {
  std::size_t to;
  std::size_t face;
  BraidMove move;
};

class WalkSearch {
 public:
  // The walk must pass through `via`.
  WalkSearch(std::vector<std::vector<Arc>> adj, std::size_t faces, std::size_t start,
             std::size_t via, const ZamSearchOptions& options)
      : adj_(std::move(adj)), faces_(faces), start_(start), via_(via), options_(options),
        begun_(std::chrono::steady_clock::now()) {
    full_ = faces_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << faces_) - 1;
  }

  // Closed walk from start crossing every face once, as arcs.
  std::vector<Arc> run() {
    if (!dfs(start_, 0, start_ == via_)) {
      throw LimitExceeded("no closed face walk exists from the start word");
    }
    std::reverse(path_.begin(), path_.end());
    return path_;
  }

 private:
  bool dfs(std::size_t node, std::uint64_t used, bool passed) {
    passed = passed || node == via_;
    if (used == full_) return node == start_ && passed;
    if (++expanded_ > options_.node_budget) {
      throw LimitExceeded("Zamolodzhikov search exhausted its node budget");
    }
    if (options_.time_budget_seconds > 0 && (expanded_ & 1023) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - begun_).count();
      if (elapsed > options_.time_budget_seconds) {
        throw LimitExceeded("Zamolodzhikov search exhausted its time budget");
      }
    }
    const Key key{node, used, passed};
    if (failed_.count(key)) return false;
    if (!feasible(node, used, passed)) {
      failed_.insert(key);
      return false;
    }
    for (const Arc& arc : adj_[node]) {
      const std::uint64_t bit = std::uint64_t{1} << arc.face;
      if (used & bit) continue;
      if (dfs(arc.to, used | bit, passed)) {
        path_.push_back(arc);
        return true;
      }
    }
    failed_.insert(key);
    return false;
  }

  // Every unused face, the start and (if still needed) `via` must be
  // reachable through unused faces.
  bool feasible(std::size_t node, std::uint64_t used, bool passed) {
    seen_.assign(adj_.size(), false);
    stack_.clear();
    stack_.push_back(node);
    seen_[node] = true;
    std::uint64_t touched = used;
    while (!stack_.empty()) {
      const std::size_t x = stack_.back();
      stack_.pop_back();
      for (const Arc& arc : adj_[x]) {
        const std::uint64_t bit = std::uint64_t{1} << arc.face;
        if (used & bit) continue;
        touched |= bit;
        if (!seen_[arc.to]) {
          seen_[arc.to] = true;
          stack_.push_back(arc.to);
        }
      }
    }
    return touched == full_ && seen_[start_] && (passed || seen_[via_]);
  }

  struct Key {
    std::size_t node;
    std::uint64_t used;
    bool passed;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.used * 0x9E3779B97F4A7C15ULL ^ (k.node << 1) ^ k.passed);
    }
  };

  std::vector<std::vector<Arc>> adj_;
  std::size_t faces_;
  std::size_t start_;
  std::size_t via_;
  ZamSearchOptions options_;
  std::chrono::steady_clock::time_point begun_;
  std::uint64_t full_ = 0;
  std::uint64_t expanded_ = 0;
  std::unordered_set<Key, KeyHash> failed_;
  std::vector<Arc> path_;
  std::vector<bool> seen_;
  std::vector<std::size_t> stack_;
};

BraidMove reversed(const BraidMove& mv) { return {mv.position, mv.t, mv.s}; }

std::vector<SphereFace> faces_along(const CoxeterSystem& sys, Word w,
                                    const std::vector<BraidMove>& path) {
  std::vector<SphereFace> out;
  for (const BraidMove& mv : path) {
    out.push_back(face_of_move(sys, w, mv));
    w = apply_braid_move(sys, w, mv);
  }
  return out;
}

}  // namespace

ZamRelation generate_zamolodzhikov(const CoxeterSystem& sys, GeneratorSet subset,
                                   const ZamSearchOptions& options) {
  require_rank3_finitary(sys, subset);
  const SphereCellStructure sphere = sphere_cells(sys, subset);
  if (sphere.faces.size() > 64) throw DomainError("sphere has more than 64 faces");
  const Element w0 = longest_element(sys, subset);
  const ReducedExpressionGraph graph = reduced_expression_graph(sys, w0);

  std::map<SphereFace, std::size_t> face_index;
  for (std::size_t i = 0; i < sphere.faces.size(); ++i) face_index.emplace(sphere.faces[i], i);

  std::vector<std::vector<Arc>> adj(graph.vertices.size());
  for (const auto& e : graph.edges) {
    const Word& from = graph.vertices[e.from];
    const BraidMove mv{e.position, e.s, e.t};
    const std::size_t f = face_index.at(face_of_move(sys, from, mv));
    adj[e.from].push_back({e.to, f, mv});
    adj[e.to].push_back({e.from, f, reversed(mv)});
  }
  if (options.seed != 0) {
    std::mt19937_64 rng(options.seed);
    for (auto& arcs : adj) std::shuffle(arcs.begin(), arcs.end(), rng);
  }

  const std::size_t start = 0;  // vertices are sorted, so this is the lex-least word
  const Word& a = graph.vertices[start];
  // The gallery opposite to a on the sphere: reversed, then conjugated by w0.
  Word antipode;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const Element conj = multiply(sys, multiply_generator(sys, w0, *it), w0);
    if (conj.length() != 1) throw InternalError("conjugation by w0 did not fix the generators");
    antipode.push_back(conj.normal().front());
  }
  const std::size_t via = graph.index_of(antipode);
  WalkSearch search(std::move(adj), sphere.faces.size(), start, via, options);
  const std::vector<Arc> walk = search.run();

  std::vector<std::size_t> nodes{start};
  for (const Arc& arc : walk) nodes.push_back(arc.to);
  const std::size_t total = walk.size();
  // Split at the visit to the antipode closest to the middle of the walk.
  std::size_t split = 0;
  std::size_t best_gap = SIZE_MAX;
  for (std::size_t k = 1; k < total; ++k) {
    if (nodes[k] != via) continue;
    const std::size_t gap = k * 2 > total ? k * 2 - total : total - k * 2;
    if (gap < best_gap) {
      best_gap = gap;
      split = k;
    }
  }
  if (split == 0) throw InternalError("face walk misses the antipodal word");

  ZamRelation rel;
  rel.subset = subset;
  rel.a = a;
  rel.b = graph.vertices[nodes[split]];
  for (std::size_t k = 0; k < split; ++k) rel.path1.push_back(walk[k].move);
  for (std::size_t k = total; k-- > split;) {
    rel.path2.push_back(reversed(walk[k].move));
  }
  rel.cells1 = faces_along(sys, rel.a, rel.path1);
  rel.cells2 = faces_along(sys, rel.a, rel.path2);
  if (!verify_zamolodzhikov(sys, rel)) throw InternalError("generated relation fails verification");
  return rel;
}

bool verify_zamolodzhikov(const CoxeterSystem& sys, const ZamRelation& rel) {
  try {
    require_rank3_finitary(sys, rel.subset);
    const Element w0 = longest_element(sys, rel.subset);
    for (const Word* end : {&rel.a, &rel.b}) {
      if (end->size() != w0.length()) return false;
      for (Generator g : *end) {
        if (!rel.subset.contains(g)) return false;
      }
      if (normal_form(sys, *end) != w0) return false;
    }
    for (const auto* path : {&rel.path1, &rel.path2}) {
      Word w = rel.a;
      for (const BraidMove& mv : *path) {
        if (!rel.subset.contains(mv.s) || !rel.subset.contains(mv.t)) return false;
        w = apply_braid_move(sys, w, mv);
      }
      if (w != rel.b) return false;
    }
    const auto c1 = faces_along(sys, rel.a, rel.path1);
    const auto c2 = faces_along(sys, rel.a, rel.path2);
    if (c1 != rel.cells1 || c2 != rel.cells2) return false;
    if (c1.size() != rel.path1.size() || c2.size() != rel.path2.size()) return false;
    std::vector<SphereFace> all = c1;
    all.insert(all.end(), c2.begin(), c2.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    return all == sphere_cells(sys, rel.subset).faces;
  } catch (const DomainError&) {
    return false;
  }
}

std::string format_zam_relation(const CoxeterSystem& sys, const ZamRelation& rel) {
  std::ostringstream out;
  out << "subset " << format_subset(sys, rel.subset) << '\n';
  out << "a " << format_word(sys, rel.a) << '\n';
  out << "b " << format_word(sys, rel.b) << '\n';
  for (const auto& mv : rel.path1) {
    out << "p1 " << mv.position << ' ' << sys.name(mv.s) << ' ' << sys.name(mv.t) << '\n';
  }
  for (const auto& mv : rel.path2) {
    out << "p2 " << mv.position << ' ' << sys.name(mv.s) << ' ' << sys.name(mv.t) << '\n';
  }
  return out.str();
}

ZamRelation parse_zam_relation(const CoxeterSystem& sys, std::string_view text) {
  ZamRelation rel;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_subset = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::string rest;
    std::getline(ls, rest);
    try {
      if (kw == "subset") {
        rel.subset = parse_subset(sys, rest);
        have_subset = true;
      } else if (kw == "a") {
        rel.a = parse_word(sys, rest);
      } else if (kw == "b") {
        rel.b = parse_word(sys, rest);
      } else if (kw == "p1" || kw == "p2") {
        std::istringstream ms(rest);
        std::size_t pos = 0;
        std::string s, t, extra;
        if (!(ms >> pos >> s >> t) || (ms >> extra)) {
          throw ParseError(lineno, 1, "expected '" + kw + " <position> <s> <t>'");
        }
        const auto gs = sys.find(s);
        const auto gt = sys.find(t);
        if (!gs || !gt) throw ParseError(lineno, 1, "unknown generator in braid move");
        (kw == "p1" ? rel.path1 : rel.path2).push_back({pos, *gs, *gt});
      } else {
        throw ParseError(lineno, 1, "unknown keyword '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParseError(lineno, 1, e.what());
    }
  }
  if (!have_subset) throw ParseError(lineno, 1, "missing subset line");
  try {
    rel.cells1 = faces_along(sys, rel.a, rel.path1);
    rel.cells2 = faces_along(sys, rel.a, rel.path2);
  } catch (const DomainError&) {
    // Invalid paths leave the cell lists empty; verification then fails.
    rel.cells1.clear();
    rel.cells2.clear();
  }
  return rel;
}

}  // namespace coxdiag
