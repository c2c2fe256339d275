#include "coxdiag/search.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "coxdiag/errors.hpp"

namespace coxdiag {

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Proven: return "proven";
    case SearchStatus::BoundaryMismatch: return "boundary-mismatch";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Swaps slices r and r+1, preferring the leftward pass.
bool try_swap(std::vector<Slice>& s, std::size_t r, Certificate& steps) {
  Direction dir;
  if (can_pass_left(s[r], s[r + 1])) dir = Direction::Forward;
  else if (can_pass_right(s[r], s[r + 1])) dir = Direction::Backward;
  else return false;
  steps.push_back({std::string(kInterchangeId), r, s[r].offset, dir});
  auto [a, b] = interchange(s[r], s[r + 1], dir);
  s[r] = a;
  s[r + 1] = b;
  return true;
}

bool window_matches(const StrandWord& level, std::size_t offset, const StrandWord& want) {
  if (offset + want.size() > level.size()) return false;
  return std::equal(want.begin(), want.end(), level.begin() + static_cast<std::ptrdiff_t>(offset));
}

struct Gathered {
  std::vector<Slice> slices;
  Certificate steps;
  std::size_t lo = 0;
};

// Rearranges `s` by interchanges so that the pattern's slices sit
// contiguously from the slice at index i upwards. Slices in the way either
// sink below the block or let the next pattern slice pass them.
std::optional<Gathered> gather(const std::vector<Slice>& s, std::size_t i, const Diagram& pat) {
  const auto& ps = pat.slices();
  Gathered g{s, {}, i};
  std::size_t hi = i + 1;
  const std::size_t n = s.size();
  for (std::size_t j = 1; j < ps.size(); ++j) {
    bool placed = false;
    for (std::size_t p = hi; p < n && !placed; ++p) {
      if (g.slices[p].symbol != ps[j].symbol) continue;
      const Gathered backup = g;
      const std::size_t backup_hi = hi;
      for (std::size_t q = hi; q < p; ++q) {
        std::vector<Slice> trial = g.slices;
        Certificate trial_steps;
        bool ok = true;
        for (std::size_t r = q; r-- > g.lo;) {
          if (!try_swap(trial, r, trial_steps)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          g.slices = std::move(trial);
          g.steps.insert(g.steps.end(), trial_steps.begin(), trial_steps.end());
          ++g.lo;
          ++hi;
        }
      }
      bool ok = true;
      for (std::size_t r = p; r-- > hi;) {
        if (!try_swap(g.slices, r, g.steps)) {
          ok = false;
          break;
        }
      }
      if (ok && g.slices[g.lo].offset >= ps[0].offset) {
        const std::size_t base = g.slices[g.lo].offset - ps[0].offset;
        ok = g.slices[hi].offset == base + ps[j].offset;
      } else {
        ok = false;
      }
      if (ok) {
        ++hi;
        placed = true;
      } else {
        g = backup;
        hi = backup_hi;
      }
    }
    if (!placed) return std::nullopt;
  }
  return g;
}

using Clock = std::chrono::steady_clock;

bool out_of_time(Clock::time_point start, double seconds) {
  if (seconds <= 0) return false;
  return std::chrono::duration<double>(Clock::now() - start).count() > seconds;
}

struct Node {
  Diagram diagram;
  std::string parent;
  Certificate steps;  // from parent to this node
};

using NodeMap = std::unordered_map<std::string, Node>;

Certificate path_to(const NodeMap& seen, std::string key) {
  std::vector<const Certificate*> parts;
  while (true) {
    const Node& n = seen.at(key);
    if (n.parent.empty()) break;
    parts.push_back(&n.steps);
    key = n.parent;
  }
  Certificate out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    out.insert(out.end(), (*it)->begin(), (*it)->end());
  }
  return out;
}

// Root keys are marked by an empty parent, so node keys must never be empty.
std::string node_key(const Diagram& d) { return "k" + encode(d); }

bool smaller(const Diagram& a, const std::string& ka, const Diagram& b, const std::string& kb) {
  if (a.size() != b.size()) return a.size() < b.size();
  return ka < kb;
}

Certificate concat(std::initializer_list<const Certificate*> parts) {
  Certificate out;
  for (const Certificate* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

namespace {

// Candidates that can be pulled down to position p with the smallest
// (offset, symbol).
std::vector<std::size_t> least_pullable(const std::vector<Slice>& s, std::size_t p) {
  std::vector<std::size_t> out;
  Slice best;
  for (std::size_t q = p; q < s.size(); ++q) {
    Slice cur = s[q];
    bool ok = true;
    for (std::size_t r = q; r-- > p;) {
      if (can_pass_left(s[r], cur)) cur = interchange(s[r], cur, Direction::Forward).first;
      else if (can_pass_right(s[r], cur)) cur = interchange(s[r], cur, Direction::Backward).first;
      else {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (out.empty() || cur < best) {
      best = cur;
      out.assign(1, q);
    } else if (cur == best) {
      out.push_back(q);
    }
  }
  return out;
}

struct CanonSearch {
  std::optional<std::vector<Slice>> best;
  Certificate best_cert;
  std::size_t leaves = 0;
  static constexpr std::size_t kMaxLeaves = 64;

  void run(std::vector<Slice> s, std::size_t p, Certificate cert) {
    while (p < s.size()) {
      const auto cands = least_pullable(s, p);
      if (cands.empty()) throw InternalError("canonical_form: nothing can move down");
      // Equal keys from different slices: both continuations are explored.
      for (std::size_t k = 1; k < cands.size() && leaves < kMaxLeaves; ++k) {
        std::vector<Slice> alt = s;
        Certificate alt_cert = cert;
        for (std::size_t r = cands[k]; r-- > p;) {
          if (!try_swap(alt, r, alt_cert)) throw InternalError("canonical_form: planned swap failed");
        }
        run(std::move(alt), p + 1, std::move(alt_cert));
      }
      for (std::size_t r = cands[0]; r-- > p;) {
        if (!try_swap(s, r, cert)) throw InternalError("canonical_form: planned swap failed");
      }
      ++p;
    }
    ++leaves;
    if (!best || s < *best || (s == *best && cert.size() < best_cert.size())) {
      best = std::move(s);
      best_cert = std::move(cert);
    }
  }
};

}  // namespace

std::pair<Diagram, Certificate> canonical_form(const Diagram& d) {
  // Each pass is lex-non-increasing; a floating cup can expose a smaller
  // arrangement to the next pass, so iterate to a fixed point.
  std::vector<Slice> cur = d.slices();
  Certificate cert;
  while (true) {
    CanonSearch search;
    search.run(cur, 0, {});
    if (*search.best == cur) break;
    cert.insert(cert.end(), search.best_cert.begin(), search.best_cert.end());
    cur = std::move(*search.best);
  }
  return {Diagram(d.domain(), std::move(cur)), std::move(cert)};
}

std::vector<MacroMove> macro_moves(const RuleCatalog& catalog, const Diagram& canonical,
                                   RuleSet set, std::size_t max_slices) {
  std::vector<MacroMove> out;
  if (canonical.mode() != catalog.mode()) return out;
  std::unordered_set<std::string> seen;
  const auto levels = canonical.levels();
  const auto& s = canonical.slices();

  auto emit = [&](const Diagram& arranged, Certificate steps, const Move& mv) {
    steps.push_back(mv);
    Diagram result = apply_move(catalog, arranged, mv);
    if (result.size() > max_slices) return;
    auto [canon, tail] = canonical_form(result);
    if (!seen.insert(encode(canon)).second) return;
    steps.insert(steps.end(), tail.begin(), tail.end());
    out.push_back({std::move(steps), std::move(canon)});
  };

  for (const RewriteRule& rule : catalog.rules()) {
    const bool contraction = rule.is_contraction();
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
      const bool allowed = contraction ? (dir == Direction::Forward ? set.contractions : set.expansions)
                                       : set.neutral;
      if (!allowed) continue;
      const Diagram& src = dir == Direction::Forward ? rule.lhs : rule.rhs;
      const Diagram& dst = dir == Direction::Forward ? rule.rhs : rule.lhs;
      if (canonical.size() - src.size() + dst.size() > max_slices) continue;
      const StrandWord& want = src.domain().strands;
      if (src.size() == 0) {
        for (std::size_t i = 0; i < levels.size(); ++i) {
          for (std::size_t o = 0; o + want.size() <= levels[i].size(); ++o) {
            if (window_matches(levels[i], o, want)) emit(canonical, {}, {rule.id, i, o, dir});
          }
        }
        continue;
      }
      const Slice& first = src.slices().front();
      for (std::size_t i = 0; i + src.size() <= s.size(); ++i) {
        if (s[i].symbol != first.symbol || s[i].offset < first.offset) continue;
        auto g = gather(s, i, src);
        if (!g) continue;
        const std::size_t o = g->slices[g->lo].offset - first.offset;
        Diagram arranged(canonical.domain(), g->slices);
        if (!window_matches(arranged.level(g->lo), o, want)) continue;
        emit(arranged, std::move(g->steps), {rule.id, g->lo, o, dir});
      }
    }
  }
  return out;
}

NormalizeResult normalize(const RuleCatalog& catalog, const Diagram& d, std::uint64_t node_budget) {
  if (d.mode() != catalog.mode()) throw DomainError("diagram mode does not match the rule catalog");
  auto [c0, cert0] = canonical_form(d);
  NodeMap seen;
  using Entry = std::pair<std::size_t, std::string>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  const std::string root = node_key(c0);
  seen.emplace(root, Node{c0, "", {}});
  queue.push({c0.size(), root});
  std::string best = root;
  std::uint64_t nodes = 1;
  while (!queue.empty()) {
    const std::string key = queue.top().second;
    queue.pop();
    const Diagram current = seen.at(key).diagram;
    if (smaller(current, key, seen.at(best).diagram, best)) best = key;
    if (nodes >= node_budget) break;
    for (MacroMove& mm : macro_moves(catalog, current, RuleSet::non_increasing(), current.size())) {
      std::string k = node_key(mm.result);
      if (seen.count(k)) continue;
      const std::size_t size = mm.result.size();
      seen.emplace(k, Node{std::move(mm.result), key, std::move(mm.steps)});
      queue.push({size, std::move(k)});
      ++nodes;
    }
  }
  // Anything still queued was generated but never popped; it may be smaller.
  while (!queue.empty()) {
    const std::string& key = queue.top().second;
    if (smaller(seen.at(key).diagram, key, seen.at(best).diagram, best)) best = key;
    queue.pop();
  }
  Certificate path = path_to(seen, best);
  NormalizeResult out{seen.at(best).diagram, concat({&cert0, &path}), nodes};
  return out;
}

SearchResult search_equality(const RuleCatalog& catalog, const Diagram& d1, const Diagram& d2,
                             const SearchOptions& options) {
  if (d1.mode() != catalog.mode() || d2.mode() != catalog.mode()) {
    throw DomainError("diagram mode does not match the rule catalog");
  }
  SearchResult res;
  if (d1.mode() != d2.mode() || d1.domain() != d2.domain() || d1.codomain() != d2.codomain()) {
    res.status = SearchStatus::BoundaryMismatch;
    return res;
  }
  if (d1 == d2) {
    res.status = SearchStatus::Proven;
    return res;
  }
  const auto start = Clock::now();
  auto finish = [&](Certificate cert) {
    if (replay(catalog, d1, cert) != d2) throw InternalError("certificate does not replay");
    res.status = SearchStatus::Proven;
    res.certificate = std::move(cert);
    return res;
  };

  auto [c1, k1] = canonical_form(d1);
  auto [c2, k2] = canonical_form(d2);
  if (c1 == c2) {
    const Certificate back = reverse_certificate(catalog, d2, k2);
    return finish(concat({&k1, &back}));
  }

  const std::uint64_t normalize_budget = std::max<std::uint64_t>(options.node_budget / 4, 1);
  const NormalizeResult n1 = normalize(catalog, d1, normalize_budget);
  const NormalizeResult n2 = normalize(catalog, d2, normalize_budget);
  res.nodes = n1.nodes + n2.nodes;
  const Certificate n2_back = reverse_certificate(catalog, d2, n2.certificate);
  if (n1.diagram == n2.diagram) return finish(concat({&n1.certificate, &n2_back}));

  const std::size_t cap = std::max(n1.diagram.size(), n2.diagram.size()) + options.slack;
  NodeMap seen[2];
  std::vector<std::string> frontier[2];
  const Diagram* roots[2] = {&n1.diagram, &n2.diagram};
  for (int side = 0; side < 2; ++side) {
    const std::string k = node_key(*roots[side]);
    seen[side].emplace(k, Node{*roots[side], "", {}});
    frontier[side].push_back(k);
  }
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    const int other = 1 - side;
    std::vector<std::string> next;
    for (const std::string& key : frontier[side]) {
      if (res.nodes >= options.node_budget || out_of_time(start, options.time_budget_seconds)) {
        return res;
      }
      const Diagram current = seen[side].at(key).diagram;
      for (MacroMove& mm : macro_moves(catalog, current, RuleSet::all(), cap)) {
        std::string k = node_key(mm.result);
        if (seen[side].count(k)) continue;
        seen[side].emplace(k, Node{std::move(mm.result), key, std::move(mm.steps)});
        ++res.nodes;
        if (seen[other].count(k)) {
          Certificate p0 = path_to(seen[0], k);
          Certificate p1 = path_to(seen[1], k);
          const Certificate p1_back = reverse_certificate(catalog, n2.diagram, p1);
          return finish(concat({&n1.certificate, &p0, &p1_back, &n2_back}));
        }
        next.push_back(std::move(k));
      }
    }
    frontier[side] = std::move(next);
  }
  return res;
}

}  // namespace coxdiag
