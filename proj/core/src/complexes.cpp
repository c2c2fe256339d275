#include "coxdiag/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "coxdiag/errors.hpp"
#include "coxdiag/finite_group.hpp"
#include "coxdiag/parabolic.hpp"

namespace coxdiag {

namespace {

std::string element_label(const CoxeterSystem& sys, const Element& e) {
  if (e.is_identity()) return "e";
  std::string out;
  for (std::size_t i = 0; i < e.normal().size(); ++i) {
    if (i) out += '.';
    out += sys.name(e.normal()[i]);
  }
  return out;
}

std::string cell_label(const CoxeterSystem& sys, GeneratorSet subset, const Element& rep) {
  return format_subset(sys, subset) + "@" + element_label(sys, rep);
}

// Cosets of every subset, computed once per builder.
class CosetCache {
 public:
  explicit CosetCache(const FiniteGroup& g) : g_(g) {}

  const FiniteGroup::Cosets& get(GeneratorSet subset) {
    auto it = cache_.find(subset.bits());
    if (it == cache_.end()) it = cache_.emplace(subset.bits(), g_.cosets(subset)).first;
    return it->second;
  }

  // Element indices of each coset of `subset`.
  std::vector<std::vector<std::size_t>> members(GeneratorSet subset) {
    const auto& c = get(subset);
    std::vector<std::vector<std::size_t>> out(c.representative.size());
    for (std::size_t x = 0; x < g_.size(); ++x) out[c.coset_of[x]].push_back(x);
    return out;
  }

 private:
  const FiniteGroup& g_;
  std::map<std::uint32_t, FiniteGroup::Cosets> cache_;
};

void check_built(const CWComplexMod2& c) {
  try {
    check_boundary_squared(c);
  } catch (const DomainError& e) {
    throw InternalError(std::string("complex builder: ") + e.what());
  }
}

Relator alternating_relator(Generator s, Generator t, int m) {
  Relator r;
  for (int i = 0; i < m; ++i) r.push_back({i % 2 == 0 ? s : t, false});
  for (int i = m - 1; i >= 0; --i) r.push_back({i % 2 == 0 ? t : s, true});
  return r;
}

}  // namespace

CWComplexMod2 dual_coxeter_complex(const CoxeterSystem& sys, bool completed) {
  const FiniteGroup g(sys);
  CosetCache cache(g);
  CWComplexMod2 out;
  std::map<std::pair<std::uint32_t, std::size_t>, std::size_t> id;
  for (GeneratorSet j : subsets_by_size(sys.all())) {
    if (j == sys.all() && !completed) continue;
    const auto& cosets = cache.get(j);
    const auto members = cache.members(j);
    for (std::size_t c = 0; c < members.size(); ++c) {
      std::vector<std::size_t> bnd;
      for (Generator x : j.members()) {
        GeneratorSet face = j;
        face.erase(x);
        const auto& sub = cache.get(face);
        std::set<std::size_t> inside;
        for (std::size_t e : members[c]) inside.insert(sub.coset_of[e]);
        for (std::size_t c2 : inside) bnd.push_back(id.at({face.bits(), c2}));
      }
      id[{j.bits(), c}] = out.add_cell(j.size(), cell_label(sys, j, g.element(cosets.representative[c])),
                                       std::move(bnd));
    }
  }
  check_built(out);
  return out;
}

CWComplexMod2 coxeter_complex(const CoxeterSystem& sys) {
  const FiniteGroup g(sys);
  CosetCache cache(g);
  CWComplexMod2 out;
  std::map<std::pair<std::uint32_t, std::size_t>, std::size_t> id;
  auto subsets = subsets_by_size(sys.all());
  // Largest proper subsets give the vertices, so walk down in size.
  for (auto it = subsets.rbegin(); it != subsets.rend(); ++it) {
    const GeneratorSet i = *it;
    if (i == sys.all()) continue;
    const auto& cosets = cache.get(i);
    for (std::size_t c = 0; c < cosets.representative.size(); ++c) {
      const std::size_t rep = cosets.representative[c];
      std::vector<std::size_t> bnd;
      for (Generator x = 0; x < sys.rank(); ++x) {
        if (i.contains(x)) continue;
        GeneratorSet bigger = i;
        bigger.insert(x);
        if (bigger == sys.all()) continue;
        bnd.push_back(id.at({bigger.bits(), cache.get(bigger).coset_of[rep]}));
      }
      id[{i.bits(), c}] = out.add_cell(sys.rank() - 1 - i.size(), cell_label(sys, i, g.element(rep)),
                                       std::move(bnd));
    }
  }
  check_built(out);
  return out;
}

CWComplexMod2 salvetti_complex(const CoxeterSystem& sys) {
  const FiniteGroup g(sys);
  CWComplexMod2 out;
  const std::size_t n = g.size();
  std::vector<std::size_t> vertex(n);
  for (std::size_t w = 0; w < n; ++w) {
    vertex[w] = out.add_cell(0, cell_label(sys, GeneratorSet{}, g.element(w)), {});
  }
  std::vector<std::vector<std::size_t>> edge(sys.rank(), std::vector<std::size_t>(n));
  for (GeneratorSet subset : subsets_by_size(sys.all())) {
    const auto gens = subset.members();
    if (gens.size() == 1) {
      const Generator s = gens[0];
      for (std::size_t w = 0; w < n; ++w) {
        edge[s][w] = out.add_cell(1, cell_label(sys, subset, g.element(w)),
                                  {vertex[w], vertex[g.times(w, s)]});
      }
    } else if (gens.size() == 2) {
      const Generator s = gens[0];
      const Generator t = gens[1];
      const int m = sys.m(s, t);
      for (std::size_t w = 0; w < n; ++w) {
        std::vector<std::size_t> bnd;
        for (auto [a, b] : {std::pair{s, t}, std::pair{t, s}}) {
          std::size_t h = w;
          for (int i = 0; i < m; ++i) {
            const Generator x = i % 2 == 0 ? a : b;
            bnd.push_back(edge[x][h]);
            h = g.times(h, x);
          }
        }
        out.add_cell(2, cell_label(sys, subset, g.element(w)), std::move(bnd));
      }
    } else if (gens.size() >= 3) {
      for (std::size_t w = 0; w < n; ++w) {
        out.add_unattached_cell(gens.size(), cell_label(sys, subset, g.element(w)));
      }
    }
  }
  check_built(out);
  return out;
}

CWComplexMod2 bw_complex(const CoxeterSystem& sys) {
  CWComplexMod2 out;
  std::vector<std::size_t> edge(sys.rank());
  for (GeneratorSet subset : finitary_subsets(sys, sys.all())) {
    const auto gens = subset.members();
    const std::string label = format_subset(sys, subset);
    if (gens.empty()) {
      out.add_cell(0, label, {});
    } else if (gens.size() == 1) {
      edge[gens[0]] = out.add_cell(1, label, {});
    } else if (gens.size() == 2) {
      std::vector<std::size_t> bnd;
      if (sys.m(gens[0], gens[1]) % 2 == 1) bnd = {edge[gens[0]], edge[gens[1]]};
      out.add_cell(2, label, std::move(bnd));
    } else {
      out.add_unattached_cell(gens.size(), label);
    }
  }
  check_built(out);
  return out;
}

Relator parse_relator(const std::vector<std::string>& generators, std::string_view text) {
  Relator out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    bool inverse = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inverse = true;
      tok.resize(tok.size() - 3);
    }
    auto it = std::find(generators.begin(), generators.end(), tok);
    if (it == generators.end()) throw DomainError("unknown generator '" + tok + "' in relator");
    out.push_back({static_cast<std::size_t>(it - generators.begin()), inverse});
  }
  return out;
}

std::string format_relator(const std::vector<std::string>& generators, const Relator& r) {
  if (r.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ' ';
    out += generators.at(r[i].gen);
    if (r[i].inverse) out += "^-1";
  }
  return out;
}

CWComplexMod2 presentation_complex(const Presentation& p) {
  if (p.relation_names.size() != p.relations.size()) {
    throw DomainError("presentation needs one name per relation");
  }
  CWComplexMod2 out;
  out.add_cell(0, "*", {});
  std::vector<std::size_t> edge;
  for (const auto& name : p.generators) edge.push_back(out.add_cell(1, name, {}));
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    std::vector<std::size_t> bnd;
    for (const Letter& l : p.relations[i]) {
      if (l.gen >= edge.size()) throw DomainError("relator letter out of range");
      bnd.push_back(edge[l.gen]);
    }
    out.add_cell(2, p.relation_names[i], std::move(bnd));
  }
  check_built(out);
  return out;
}

Presentation coxeter_presentation(const CoxeterSystem& sys) {
  Presentation p;
  p.generators = sys.names();
  for (Generator s = 0; s < sys.rank(); ++s) {
    p.relation_names.push_back("q:" + sys.name(s));
    p.relations.push_back({{s, false}, {s, false}});
  }
  for (Generator s = 0; s < sys.rank(); ++s) {
    for (Generator t = s + 1; t < sys.rank(); ++t) {
      if (sys.m(s, t) == kInfinity) continue;
      p.relation_names.push_back("b:" + sys.name(s) + "," + sys.name(t));
      p.relations.push_back(alternating_relator(s, t, sys.m(s, t)));
    }
  }
  return p;
}

CWComplexMod2 universal_cover_2skeleton(const CoxeterSystem& sys) {
  const FiniteGroup g(sys);
  const Presentation p = coxeter_presentation(sys);
  CWComplexMod2 out;
  const std::size_t n = g.size();
  std::vector<std::size_t> vertex(n);
  for (std::size_t w = 0; w < n; ++w) vertex[w] = out.add_cell(0, element_label(sys, g.element(w)), {});
  std::vector<std::vector<std::size_t>> edge(sys.rank(), std::vector<std::size_t>(n));
  for (Generator s = 0; s < sys.rank(); ++s) {
    for (std::size_t w = 0; w < n; ++w) {
      edge[s][w] = out.add_cell(1, sys.name(s) + "@" + element_label(sys, g.element(w)),
                                {vertex[w], vertex[g.times(w, s)]});
    }
  }
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    for (std::size_t w = 0; w < n; ++w) {
      std::vector<std::size_t> bnd;
      std::size_t h = w;
      for (const Letter& l : p.relations[r]) {
        const auto x = static_cast<Generator>(l.gen);
        if (l.inverse) {
          h = g.times(h, x);  // generators are involutions in W
          bnd.push_back(edge[x][h]);
        } else {
          bnd.push_back(edge[x][h]);
          h = g.times(h, x);
        }
      }
      if (h != w) throw InternalError("relator does not close up in W");
      out.add_cell(2, p.relation_names[r] + "@" + element_label(sys, g.element(w)), std::move(bnd));
    }
  }
  check_built(out);
  return out;
}

CellCensus coxeter_3presentation_census(const CoxeterSystem& sys) {
  const GroupOrder order = group_order(sys, sys.all());
  if (order.is_infinite()) throw DomainError("census needs a finite group");
  const std::size_t n = order.value();
  const std::size_t r = sys.rank();
  std::size_t pairs = 0;
  std::size_t triples = 0;
  for (GeneratorSet s : finitary_subsets(sys, sys.all())) {
    pairs += s.size() == 2;
    triples += s.size() == 3;
  }
  CellCensus c;
  c.group_order = n;
  c.vertices = n;
  c.edges = r * n;
  c.quadratic = r * n;
  c.braid = pairs * n;
  c.z = r * n;
  c.rotation = pairs * n;
  c.flip = pairs * n;
  c.zamolodzhikov = triples * n;
  c.kept_z = c.z;
  c.kept_rotation_flip = c.rotation + c.flip;
  c.kept_zamolodzhikov = c.zamolodzhikov;
  return c;
}

CellCensus pruned_half_skeleton_census(const CoxeterSystem& sys) {
  CellCensus c = coxeter_3presentation_census(sys);
  const std::size_t n = c.group_order;
  c.kept_z = sys.rank() * (n / 2);
  c.kept_rotation_flip = 0;
  c.kept_zamolodzhikov = 0;
  for (GeneratorSet s : finitary_subsets(sys, sys.all())) {
    if (s.size() == 2) {
      const auto g = s.members();
      const auto m = static_cast<std::size_t>(sys.m(g[0], g[1]));
      c.kept_rotation_flip += (2 * m - 1) * (n / (2 * m));
    } else if (s.size() == 3) {
      c.kept_zamolodzhikov += n / group_order(sys, s).value();
    }
  }
  return c;
}

Gallery gallery_from_word(const CoxeterSystem& sys, const Element& x, const Word& w) {
  check_word(sys, w);
  Gallery out;
  out.chambers.push_back(x);
  for (Generator s : w) out.chambers.push_back(multiply_generator(sys, out.chambers.back(), s));
  out.minimal = is_reduced(sys, w);
  return out;
}

}  // namespace coxdiag
