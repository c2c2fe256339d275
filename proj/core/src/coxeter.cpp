#include "coxdiag/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "coxdiag/errors.hpp"

namespace coxdiag {

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Generator>(__builtin_ctz(b)));
  }
  return out;
}

std::vector<GeneratorSet> subsets_by_size(GeneratorSet set) {
  std::vector<GeneratorSet> out;
  // Enumerate submasks of set.bits().
  const std::uint32_t full = set.bits();
  std::uint32_t sub = full;
  while (true) {
    out.emplace_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
  std::sort(out.begin(), out.end(), [](GeneratorSet a, GeneratorSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  return out;
}

CoxeterSystem CoxeterSystem::from_matrix(std::vector<std::vector<int>> m,
                                         std::vector<std::string> names) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("Coxeter matrix must have positive rank");
  if (n > kMaxRank) throw DomainError("rank exceeds " + std::to_string(kMaxRank));
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("Coxeter matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 1) {
      throw DomainError("diagonal entry m(" + std::to_string(i) + "," + std::to_string(i) +
                        ") must be 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] != m[j][i]) {
        throw DomainError("Coxeter matrix is not symmetric at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
      if (m[i][j] < 2) {
        throw DomainError("off-diagonal entry m(" + std::to_string(i) + "," +
                          std::to_string(j) + ") must be >= 2");
      }
    }
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  }
  if (names.size() != n) throw DomainError("expected one name per generator");
  for (std::size_t i = 0; i < n; ++i) {
    if (names[i].empty()) throw DomainError("generator names must be non-empty");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw DomainError("duplicate generator name '" + names[i] + "'");
    }
  }
  CoxeterSystem sys;
  sys.names_ = std::move(names);
  sys.m_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sys.m_[i * n + j] = m[i][j];
  }
  return sys;
}

std::optional<Generator> CoxeterSystem::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Generator>(i);
  }
  return std::nullopt;
}

CoxeterSystem CoxeterSystem::restrict_to(GeneratorSet subset) const {
  const auto gens = subset.members();
  std::vector<std::vector<int>> m(gens.size(), std::vector<int>(gens.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    names.push_back(names_[gens[i]]);
    for (std::size_t j = 0; j < gens.size(); ++j) m[i][j] = this->m(gens[i], gens[j]);
  }
  return from_matrix(std::move(m), std::move(names));
}

namespace {

std::vector<std::vector<int>> identity_matrix(std::size_t n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void set_m(std::vector<std::vector<int>>& m, std::size_t i, std::size_t j, int v) {
  m[i][j] = v;
  m[j][i] = v;
}

}  // namespace

CoxeterSystem make_a(std::size_t n) {
  auto m = identity_matrix(n);
  for (std::size_t i = 0; i + 1 < n; ++i) set_m(m, i, i + 1, 3);
  return CoxeterSystem::from_matrix(std::move(m));
}

CoxeterSystem make_b(std::size_t n) {
  auto m = identity_matrix(n);
  for (std::size_t i = 0; i + 1 < n; ++i) set_m(m, i, i + 1, 3);
  if (n >= 2) set_m(m, n - 2, n - 1, 4);
  return CoxeterSystem::from_matrix(std::move(m));
}

CoxeterSystem make_h3() { return make_rank3(5, 3, 2); }

CoxeterSystem make_dihedral(int m_st) {
  auto m = identity_matrix(2);
  set_m(m, 0, 1, m_st);
  return CoxeterSystem::from_matrix(std::move(m));
}

CoxeterSystem make_a1_x_dihedral(int m_st) { return make_rank3(2, m_st, 2); }

CoxeterSystem make_rank3(int m01, int m12, int m02) {
  auto m = identity_matrix(3);
  set_m(m, 0, 1, m01);
  set_m(m, 1, 2, m12);
  set_m(m, 0, 2, m02);
  return CoxeterSystem::from_matrix(std::move(m));
}

Element make_element_unchecked(Word normal) { return Element(std::move(normal)); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a
  std::size_t h = 1469598103934665603ULL;
  for (Generator g : w) {
    h ^= g;
    h *= 1099511628211ULL;
  }
  return h ^ w.size();
}

void check_word(const CoxeterSystem& sys, std::span<const Generator> w) {
  for (Generator g : w) {
    if (g >= sys.rank()) {
      throw DomainError("letter index " + std::to_string(g) + " is not a generator");
    }
  }
}

namespace {

// Calls f(replacement) for every braid move applicable to w.
template <typename F>
void for_each_braid_move(const CoxeterSystem& sys, const Word& w, F&& f) {
  const std::size_t n = w.size();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const Generator s = w[p];
    const Generator t = w[p + 1];
    if (s == t) continue;
    const int m = sys.m(s, t);
    if (m == kInfinity || p + static_cast<std::size_t>(m) > n) continue;
    bool alternating = true;
    for (int k = 2; k < m && alternating; ++k) {
      alternating = w[p + k] == ((k % 2 == 0) ? s : t);
    }
    if (!alternating) continue;
    f(p, s, t, static_cast<std::size_t>(m));
  }
}

Word apply_braid_move(const Word& w, std::size_t p, Generator s, Generator t, std::size_t m) {
  Word out = w;
  for (std::size_t k = 0; k < m; ++k) out[p + k] = (k % 2 == 0) ? t : s;
  return out;
}

std::vector<Word> closure_unsorted(const CoxeterSystem& sys, const Word& w,
                                   std::size_t limit) {
  if (limit == 0) throw LimitExceeded("braid closure limit is 0");
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> order{w};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Word current = order[head];
    for_each_braid_move(sys, current, [&](std::size_t p, Generator s, Generator t, std::size_t m) {
      Word next = apply_braid_move(current, p, s, t, m);
      if (seen.insert(next).second) {
        if (seen.size() > limit) {
          throw LimitExceeded("braid closure exceeded " + std::to_string(limit) + " words");
        }
        order.push_back(std::move(next));
      }
    });
  }
  return order;
}

// Reduced-word closure of an element given by a reduced word.
struct ReducedClosure {
  std::vector<Word> words;
  Word minimum() const { return *std::min_element(words.begin(), words.end()); }
};

ReducedClosure reduced_closure(const CoxeterSystem& sys, const Word& reduced,
                               std::size_t limit) {
  return ReducedClosure{closure_unsorted(sys, reduced, limit)};
}

}  // namespace

std::vector<Word> braid_closure(const CoxeterSystem& sys, const Word& w, std::size_t limit) {
  check_word(sys, w);
  auto out = closure_unsorted(sys, w, limit);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_reduced(const CoxeterSystem& sys, const Word& w, std::size_t limit) {
  for (const Word& v : braid_closure(sys, w, limit)) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1]) return false;
    }
  }
  return true;
}

Element multiply_generator(const CoxeterSystem& sys, const Element& a, Generator s,
                           std::size_t limit) {
  if (s >= sys.rank()) throw DomainError("letter index " + std::to_string(s) + " is not a generator");
  const ReducedClosure closure = reduced_closure(sys, a.normal(), limit);
  // Exchange condition: ws < w iff some reduced word of w ends in s.
  Word shorter;
  bool descent = false;
  for (const Word& v : closure.words) {
    if (!v.empty() && v.back() == s) {
      shorter.assign(v.begin(), v.end() - 1);
      descent = true;
      break;
    }
  }
  if (descent) return make_element_unchecked(reduced_closure(sys, shorter, limit).minimum());
  Word longer = a.normal();
  longer.push_back(s);
  return make_element_unchecked(reduced_closure(sys, longer, limit).minimum());
}

Element normal_form(const CoxeterSystem& sys, const Word& w, std::size_t limit) {
  check_word(sys, w);
  if (limit == 0) throw LimitExceeded("braid closure limit is 0");
  Element current;
  for (Generator s : w) current = multiply_generator(sys, current, s, limit);
  return current;
}

Element multiply(const CoxeterSystem& sys, const Element& a, const Element& b,
                 std::size_t limit) {
  Element current = a;
  for (Generator s : b.normal()) current = multiply_generator(sys, current, s, limit);
  return current;
}

Element inverse(const CoxeterSystem& sys, const Element& a) {
  Word w(a.normal().rbegin(), a.normal().rend());
  return normal_form(sys, w);
}

GeneratorSet descents(const CoxeterSystem& sys, const Element& w, Side side) {
  GeneratorSet out;
  for (const Word& v : closure_unsorted(sys, w.normal(), kDefaultClosureLimit)) {
    if (v.empty()) break;
    out.insert(side == Side::Right ? v.back() : v.front());
  }
  return out;
}

bool positive_braid_equal(const CoxeterSystem& sys, const Word& u, const Word& v,
                          std::size_t limit) {
  check_word(sys, u);
  check_word(sys, v);
  if (u.size() != v.size()) return false;
  if (u == v) return true;
  // Braid moves preserve length, so the closure is the whole congruence class.
  const auto closure = braid_closure(sys, u, limit);
  return std::binary_search(closure.begin(), closure.end(), v);
}

Element min_coset_representative(const CoxeterSystem& sys, const Element& w,
                                 GeneratorSet subset) {
  Element current = w;
  while (true) {
    const GeneratorSet d = descents(sys, current, Side::Right);
    const GeneratorSet hit(d.bits() & subset.bits());
    if (hit.empty()) return current;
    current = multiply_generator(sys, current, hit.members().front());
  }
}

std::size_t ReducedExpressionGraph::index_of(const Word& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) throw DomainError("word is not a vertex of the graph");
  return static_cast<std::size_t>(it - vertices.begin());
}

bool ReducedExpressionGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(vertices.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  return count == vertices.size();
}

ReducedExpressionGraph reduced_expression_graph(const CoxeterSystem& sys, const Element& w,
                                                std::size_t limit) {
  ReducedExpressionGraph g;
  g.target = w;
  g.vertices = braid_closure(sys, w.normal(), limit);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const Word& from = g.vertices[i];
    for_each_braid_move(sys, from, [&](std::size_t p, Generator s, Generator t, std::size_t m) {
      const std::size_t j = g.index_of(apply_braid_move(from, p, s, t, m));
      if (i < j) g.edges.push_back({i, j, p, s, t});
    });
  }
  return g;
}

std::string format_word(const CoxeterSystem& sys, std::span<const Generator> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i] < sys.rank() ? sys.name(w[i]) : "?" + std::to_string(w[i]);
  }
  return out;
}

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace

Word parse_word(const CoxeterSystem& sys, std::string_view text) {
  Word w;
  for (const std::string& token : split_tokens(text)) {
    if (auto g = sys.find(token)) {
      w.push_back(*g);
      continue;
    }
    Word letters;
    for (char c : token) {
      auto g = sys.find(std::string_view(&c, 1));
      if (!g) throw DomainError("unknown generator '" + token + "'");
      letters.push_back(*g);
    }
    w.insert(w.end(), letters.begin(), letters.end());
  }
  return w;
}

// Accepts "{s,t}" as written by format_subset, or a plain word "s t".
GeneratorSet parse_subset(const CoxeterSystem& sys, std::string_view text) {
  std::string body(text);
  const auto first = body.find_first_not_of(" \t");
  const auto last = body.find_last_not_of(" \t");
  if (first != std::string::npos && body[first] == '{') {
    if (body[last] != '}') throw DomainError("unterminated subset '" + body + "'");
    body = body.substr(first + 1, last - first - 1);
    for (char& c : body)
      if (c == ',') c = ' ';
  }
  GeneratorSet out;
  for (Generator g : parse_word(sys, body)) out.insert(g);
  return out;
}

std::string format_subset(const CoxeterSystem& sys, GeneratorSet subset) {
  std::string out = "{";
  bool first = true;
  for (Generator g : subset.members()) {
    if (!first) out += ',';
    out += sys.name(g);
    first = false;
  }
  return out + "}";
}

}  // namespace coxdiag
