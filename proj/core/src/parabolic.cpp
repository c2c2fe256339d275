#include "coxdiag/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coxdiag/errors.hpp"

namespace coxdiag {

std::uint64_t GroupOrder::value() const {
  if (!value_) throw DomainError("group is infinite");
  return *value_;
}

std::string GroupOrder::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::string FiniteComponent::name() const {
  if (family == 'I') return "I2(" + std::to_string(m) + ")";
  return std::string(1, family) + std::to_string(rank);
}

std::vector<std::vector<Generator>> diagram_components(const CoxeterSystem& sys,
                                                       GeneratorSet subset) {
  std::vector<std::vector<Generator>> out;
  GeneratorSet unvisited = subset;
  while (!unvisited.empty()) {
    const Generator start = unvisited.members().front();
    std::vector<Generator> comp{start};
    unvisited.erase(start);
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Generator t : unvisited.members()) {
        if (sys.m(comp[head], t) >= 3) {
          comp.push_back(t);
          unvisited.erase(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("group order exceeds 64 bits");
  return r;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

std::uint64_t pow2(std::size_t n) {
  if (n >= 64) throw DomainError("group order exceeds 64 bits");
  return std::uint64_t{1} << n;
}

std::optional<FiniteComponent> classify_component(const CoxeterSystem& sys,
                                                  const std::vector<Generator>& nodes) {
  FiniteComponent c;
  c.generators = nodes;
  c.rank = nodes.size();
  const std::size_t n = nodes.size();
  if (n == 1) {
    c.family = 'A';
    c.order = 2;
    return c;
  }
  // Edges of the diagram (m >= 3).
  struct Edge {
    std::size_t a, b;
    int m;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int m = sys.m(nodes[i], nodes[j]);
      if (m == kInfinity) return std::nullopt;
      if (m >= 3) {
        edges.push_back({i, j, m});
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  if (n == 2) {
    c.family = 'I';
    c.m = edges.front().m;
    c.order = checked_mul(2, static_cast<std::uint64_t>(c.m));
    return c;
  }
  if (edges.size() != n - 1) return std::nullopt;  // not a tree
  auto label = [&](std::size_t a, std::size_t b) { return sys.m(nodes[a], nodes[b]); };

  std::vector<std::size_t> branch;
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return std::nullopt;
    if (adj[i].size() == 3) branch.push_back(i);
    if (adj[i].size() == 1) leaves.push_back(i);
  }
  if (branch.size() > 1) return std::nullopt;

  if (branch.empty()) {
    // A path; read its labels from one end.
    std::vector<std::size_t> path{leaves.front()};
    std::size_t prev = n;
    while (path.size() < n) {
      const std::size_t cur = path.back();
      for (std::size_t nb : adj[cur]) {
        if (nb != prev) {
          prev = cur;
          path.push_back(nb);
          break;
        }
      }
    }
    std::vector<int> labels;
    for (std::size_t i = 0; i + 1 < n; ++i) labels.push_back(label(path[i], path[i + 1]));
    std::vector<std::size_t> special;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] != 3) special.push_back(i);
    }
    if (special.empty()) {
      c.family = 'A';
      c.order = factorial(n + 1);
      return c;
    }
    if (special.size() > 1) return std::nullopt;
    const std::size_t at = special.front();
    const bool at_end = at == 0 || at + 1 == labels.size();
    const int m = labels[at];
    if (m == 4 && at_end) {
      c.family = 'B';
      c.order = checked_mul(pow2(n), factorial(n));
      return c;
    }
    if (m == 4 && n == 4 && at == 1) {
      c.family = 'F';
      c.order = 1152;
      return c;
    }
    if (m == 5 && at_end && n == 3) {
      c.family = 'H';
      c.order = 120;
      return c;
    }
    if (m == 5 && at_end && n == 4) {
      c.family = 'H';
      c.order = 14400;
      return c;
    }
    return std::nullopt;
  }

  // One branch node: all labels 3, arms (1,1,k), (1,2,2), (1,2,3), (1,2,4).
  for (const auto& e : edges) {
    if (e.m != 3) return std::nullopt;
  }
  const std::size_t center = branch.front();
  std::vector<std::size_t> arms;
  for (std::size_t first : adj[center]) {
    std::size_t len = 1;
    std::size_t prev = center;
    std::size_t cur = first;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    c.family = 'D';
    c.order = checked_mul(pow2(n - 1), factorial(n));
    return c;
  }
  if (arms[0] == 1 && arms[1] == 2) {
    c.family = 'E';
    if (arms[2] == 2) c.order = 51840;
    else if (arms[2] == 3) c.order = 2903040;
    else if (arms[2] == 4) c.order = 696729600;
    else return std::nullopt;
    return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<FiniteComponent>> classify(const CoxeterSystem& sys,
                                                     GeneratorSet subset) {
  std::vector<FiniteComponent> out;
  for (const auto& comp : diagram_components(sys, subset)) {
    auto c = classify_component(sys, comp);
    if (!c) return std::nullopt;
    out.push_back(std::move(*c));
  }
  return out;
}

bool is_finitary(const CoxeterSystem& sys, GeneratorSet subset) {
  return classify(sys, subset).has_value();
}

GroupOrder group_order(const CoxeterSystem& sys, GeneratorSet subset) {
  const auto comps = classify(sys, subset);
  if (!comps) return GroupOrder::infinite();
  std::uint64_t order = 1;
  for (const auto& c : *comps) order = checked_mul(order, c.order);
  return GroupOrder::finite(order);
}

std::string type_name(const CoxeterSystem& sys, GeneratorSet subset) {
  const auto comps = classify(sys, subset);
  if (!comps) throw DomainError("subset " + format_subset(sys, subset) + " is not finitary");
  if (comps->empty()) return "A0";
  // Larger components first, so A1 x I2(m) reads the usual way round.
  auto sorted = *comps;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.rank < b.rank;
  });
  std::string out;
  for (const auto& c : sorted) {
    if (!out.empty()) out += 'x';
    out += c.name();
  }
  return out;
}

bool gram_positive_definite(const CoxeterSystem& sys, GeneratorSet subset, double tolerance) {
  const auto gens = subset.members();
  const std::size_t n = gens.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int m = sys.m(gens[i], gens[j]);
      if (i == j) a[i * n + j] = 1.0;
      else if (m == kInfinity) a[i * n + j] = -1.0;
      else a[i * n + j] = -std::cos(std::numbers::pi / m);
    }
  }
  // In-place Cholesky; fails on a pivot at or below the tolerance.
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
    if (d <= tolerance) return false;
    const double root = std::sqrt(d);
    a[j * n + j] = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
      a[i * n + j] = v / root;
    }
  }
  return true;
}

std::vector<Element> enumerate(const CoxeterSystem& sys, GeneratorSet subset) {
  if (!is_finitary(sys, subset)) {
    throw DomainError("subset " + format_subset(sys, subset) + " is not finitary");
  }
  const auto gens = subset.members();
  std::vector<Element> out{Element{}};
  std::vector<Element> level{Element{}};
  while (!level.empty()) {
    std::vector<Element> next;
    for (const Element& x : level) {
      const GeneratorSet d = descents(sys, x, Side::Right);
      for (Generator s : gens) {
        if (!d.contains(s)) next.push_back(multiply_generator(sys, x, s));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

Element longest_element(const CoxeterSystem& sys, GeneratorSet subset) {
  if (!is_finitary(sys, subset)) {
    throw DomainError("subset " + format_subset(sys, subset) + " is not finitary");
  }
  Element current;
  while (true) {
    const GeneratorSet d = descents(sys, current, Side::Right);
    const GeneratorSet ascents(subset.bits() & ~d.bits());
    if (ascents.empty()) return current;
    current = multiply_generator(sys, current, ascents.members().front());
  }
}

std::vector<GeneratorSet> finitary_subsets(const CoxeterSystem& sys, GeneratorSet within) {
  std::vector<GeneratorSet> out;
  for (GeneratorSet s : subsets_by_size(within)) {
    if (is_finitary(sys, s)) out.push_back(s);
  }
  return out;
}

}  // namespace coxdiag
