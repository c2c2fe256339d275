// Acceptance suite: one PASS/FAIL line per criterion with its pinned limits.
// Exit status is nonzero when any criterion fails.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxdiag/complexes.hpp"
#include "coxdiag/coxeter.hpp"
#include "coxdiag/cw_complex.hpp"
#include "coxdiag/errors.hpp"
#include "coxdiag/parabolic.hpp"
#include "coxdiag/rewrite.hpp"
#include "coxdiag/search.hpp"
#include "coxdiag/zamolodzhikov.hpp"
#include "oracles.hpp"
#include "random_diagrams.hpp"

using namespace coxdiag;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed checks; a criterion passes when nothing was recorded.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Homology = std::vector<std::optional<std::size_t>>;

Homology known(std::initializer_list<std::size_t> values) {
  Homology h;
  for (auto v : values) h.emplace_back(v);
  return h;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "(" + out + ")";
}

template <class Image>
void check_against_oracle(Outcome& o, const std::string& name, const CoxeterSystem& sys,
                          std::size_t expected, Image image, std::size_t oracle_order) {
  const auto elements = enumerate(sys, sys.all());
  o.expect(elements.size() == expected, name + " order " + std::to_string(elements.size()));
  o.expect(oracle_order == expected, name + " oracle order " + std::to_string(oracle_order));
  std::set<decltype(image(Word{}))> images;
  for (const Element& e : elements) {
    const auto img = image(e.normal());
    images.insert(img);
    for (Generator s = 0; s < sys.rank(); ++s) {
      Word ws = e.normal();
      ws.push_back(s);
      if (image(multiply_generator(sys, e, s).normal()) != image(ws)) {
        o.expect(false, name + " product disagrees with oracle");
        return;
      }
    }
  }
  o.expect(images.size() == expected, name + " images not distinct");
}

// 1. Group orders against permutation, signed-permutation, dihedral and
// reflection-matrix models.
Outcome group_orders() {
  Outcome o;
  check_against_oracle(
      o, "A3", make_a(3), 24, [](const Word& w) { return oracle::symmetric_image(3, w); }, 24);
  check_against_oracle(
      o, "B3", make_b(3), 48, [](const Word& w) { return oracle::signed_image(3, w); },
      oracle::signed_group_order(3));
  const auto h3 = make_h3();
  check_against_oracle(
      o, "H3", h3, 120, [&](const Word& w) { return oracle::rounded(oracle::reflection_image(h3, w)); },
      oracle::reflection_group_order(h3, 1000));
  for (int m = 2; m <= 7; ++m) {
    check_against_oracle(
        o, "I2(" + std::to_string(m) + ")", make_dihedral(m), static_cast<std::size_t>(2 * m),
        [m](const Word& w) {
          const auto d = oracle::dihedral_image(m, w);
          return std::pair<int, bool>(d.rot, d.flip);
        },
        static_cast<std::size_t>(2 * m));
  }
  o.summary = "A3, B3, H3, I2(2..7) element-by-element";
  return o;
}

// Sylvester's criterion on the cosine matrix.
bool gram_oracle(int m01, int m12, int m02) {
  auto c = [](int m) { return m == kInfinity ? 1.0 : std::cos(std::numbers::pi / m); };
  const double a = c(m01), b = c(m12), d = c(m02);
  const double minor2 = 1 - a * a;
  const double det = 1 - a * a - b * b - d * d - 2 * a * b * d;
  return minor2 > 1e-9 && det > 1e-9;
}

// Expected finiteness from the rank-3 classification.
bool expected_finite(int m01, int m12, int m02) {
  std::vector<int> ms = {m01, m12, m02};
  if (std::count(ms.begin(), ms.end(), kInfinity) > 0) return false;
  const auto twos = std::count(ms.begin(), ms.end(), 2);
  if (twos >= 2) return true;  // A1 x I2(m)
  if (twos == 0) return false;  // triangle
  std::vector<int> rest;
  for (int m : ms)
    if (m != 2) rest.push_back(m);
  std::sort(rest.begin(), rest.end());
  return rest[0] == 3 && (rest[1] == 3 || rest[1] == 4 || rest[1] == 5);
}

// 2. Rank-3 finiteness over every labelling from {2,3,4,5,6,inf}.
Outcome rank3_finiteness() {
  Outcome o;
  const std::vector<int> values = {2, 3, 4, 5, 6, kInfinity};
  std::size_t instances = 0, finite = 0;
  for (int a : values) {
    for (int b : values) {
      for (int c : values) {
        const auto sys = make_rank3(a, b, c);
        const bool fin = is_finitary(sys, sys.all());
        const std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")";
        ++instances;
        finite += fin;
        o.expect(fin == expected_finite(a, b, c), "classification disagrees at " + tag);
        o.expect(fin == gram_positive_definite(sys, sys.all(), 1e-9), "library Gram at " + tag);
        o.expect(fin == gram_oracle(a, b, c), "oracle Gram at " + tag);
        if (fin) {
          const std::string type = type_name(sys, sys.all());
          o.expect(type == "A3" || type == "B3" || type == "H3" || type.rfind("A1x", 0) == 0 ||
                       type.find("xA1") != std::string::npos,
                   "unexpected finite type " + type + " at " + tag);
        }
      }
    }
  }
  o.summary = std::to_string(instances) + " systems, " + std::to_string(finite) + " finite";
  return o;
}

// 3. Matsumoto connectivity, and the 16 reduced words of w0(A3) by brute force.
Outcome matsumoto() {
  Outcome o;
  std::size_t graphs = 0;
  for (const auto& sys : {make_a(3), make_b(3)}) {
    for (const Element& w : enumerate(sys, sys.all())) {
      ++graphs;
      if (!reduced_expression_graph(sys, w).connected()) {
        o.expect(false, "disconnected graph for " + format_word(sys, w.normal()));
      }
    }
  }
  const auto a3 = make_a(3);
  const auto w0 = longest_element(a3, a3.all());
  const oracle::Perm reversal = {3, 2, 1, 0};
  std::size_t brute = 0;
  for (int code = 0; code < 729; ++code) {
    Word w;
    for (int k = 0, c = code; k < 6; ++k, c /= 3) w.push_back(static_cast<Generator>(c % 3));
    brute += oracle::symmetric_image(3, w) == reversal;
  }
  const std::size_t graph_words = reduced_expression_graph(a3, w0).vertices.size();
  o.expect(brute == 16, "brute-force count " + std::to_string(brute));
  o.expect(graph_words == 16, "graph has " + std::to_string(graph_words) + " words");
  o.summary = std::to_string(graphs) + " graphs connected, w0(A3) words " +
              std::to_string(graph_words);
  return o;
}

void expect_homology(Outcome& o, const std::string& name, const CWComplexMod2& c,
                     const Homology& want) {
  const auto h = homology_mod2(c);
  o.expect(h == want, name + " homology");
  std::vector<std::size_t> dense = oracle::betti_mod2(c);
  Homology dense_h(dense.begin(), dense.end());
  o.expect(dense_h == want, name + " dense oracle homology");
}

// 4. Dual Coxeter complexes.
Outcome dual_complexes() {
  Outcome o;
  for (int m = 2; m <= 6; ++m) {
    const std::string name = "I2(" + std::to_string(m) + ")";
    const auto c = dual_coxeter_complex(make_dihedral(m), true);
    const std::size_t mm = static_cast<std::size_t>(2 * m);
    o.expect(c.counts() == std::vector<std::size_t>{mm, mm, 1}, name + " counts " + join(c.counts()));
    o.expect(euler_characteristic(c) == 1, name + " euler");
    expect_homology(o, name, c, known({1, 0, 0}));
  }
  std::vector<std::size_t> h3_counts;
  for (const auto& [name, sys] : std::vector<std::pair<std::string, CoxeterSystem>>{
           {"A3", make_a(3)}, {"B3", make_b(3)}, {"H3", make_h3()}}) {
    const auto sphere = dual_coxeter_complex(sys, false);
    expect_homology(o, name + " sphere", sphere, known({1, 0, 1}));
    o.expect(euler_characteristic(sphere) == 2, name + " sphere euler");
    const auto ball = dual_coxeter_complex(sys, true);
    expect_homology(o, name + " ball", ball, known({1, 0, 0, 0}));
    o.expect(euler_characteristic(ball) == 1, name + " ball euler");
    if (name == "H3") h3_counts = ball.counts();
  }
  o.expect(h3_counts == std::vector<std::size_t>{120, 180, 62, 1}, "H3 counts " + join(h3_counts));
  o.summary = "I2(2..6) balls, A3/B3/H3 spheres and balls, H3 cells " + join(h3_counts);
  return o;
}

// 5. Product of dual complexes against the dual complex of the product group.
Outcome products() {
  Outcome o;
  for (int m : {2, 3, 4}) {
    const std::string name = "A1xI2(" + std::to_string(m) + ")";
    const auto prod = product_complex(dual_coxeter_complex(make_a(1), true),
                                      dual_coxeter_complex(make_dihedral(m), true));
    const auto direct = dual_coxeter_complex(make_a1_x_dihedral(m), true);
    o.expect(prod.counts() == direct.counts(),
             name + " counts " + join(prod.counts()) + " vs " + join(direct.counts()));
    check_boundary_squared(prod);
    o.expect(homology_mod2(prod) == homology_mod2(direct), name + " homology");
  }
  o.summary = "m = 2, 3, 4";
  return o;
}

// 6. Salvetti complexes and the one-vertex quotient.
Outcome salvetti() {
  Outcome o;
  const auto a1 = salvetti_complex(make_a(1));
  o.expect(a1.counts() == std::vector<std::size_t>{2, 2}, "A1 counts " + join(a1.counts()));
  o.expect(homology_mod2(a1) == known({1, 1}), "A1 homology");
  const auto a3 = salvetti_complex(make_a(3));
  o.expect(a3.counts() == std::vector<std::size_t>{24, 72, 72, 24}, "A3 counts " + join(a3.counts()));
  const auto bw3 = bw_complex(make_dihedral(3));
  o.expect(bw3.counts() == std::vector<std::size_t>{1, 2, 1}, "|B|(I2(3)) counts");
  const auto h3 = homology_mod2(bw3);
  o.expect(h3.size() > 1 && h3[1] == 1u, "|B|(I2(3)) H1");
  o.expect(homology_mod2(bw_complex(make_dihedral(2))) == known({1, 2, 1}), "|B|(I2(2)) homology");
  o.summary = "A1 circle, A3 counts " + join(a3.counts()) + ", dihedral quotients";
  return o;
}

// 7. The pancake census for I2(3).
Outcome pancake() {
  Outcome o;
  const auto sys = make_dihedral(3);
  const auto cover = universal_cover_2skeleton(sys);
  o.expect(cover.counts() == std::vector<std::size_t>{6, 12, 18},
           "cover counts " + join(cover.counts()));
  const auto full = coxeter_3presentation_census(sys);
  o.expect(full.z == 12 && full.rotation == 6 && full.flip == 6, "3-cell census");
  const auto pruned = pruned_half_skeleton_census(sys);
  o.expect(pruned.kept_z == 6, "kept z " + std::to_string(pruned.kept_z));
  o.expect(pruned.kept_rotation_flip == 5,
           "kept rotation/flip " + std::to_string(pruned.kept_rotation_flip));
  o.summary = "z 12, rotation 6, flip 6, kept 6 + 5";
  return o;
}

// Faces by grouping the elements of W_I into cosets x W_J directly.
std::size_t coset_face_count(const CoxeterSystem& sys, GeneratorSet subset) {
  const auto elements = enumerate(sys, subset);
  std::size_t faces = 0;
  for (GeneratorSet pair : subsets_by_size(subset)) {
    if (pair.size() != 2) continue;
    const auto wj = enumerate(sys, pair);
    std::set<std::set<Word>> cosets;
    for (const Element& x : elements) {
      std::set<Word> coset;
      for (const Element& y : wj) coset.insert(multiply(sys, x, y).normal());
      cosets.insert(coset);
    }
    faces += cosets.size();
  }
  return faces;
}

// 8. Zamolodzhikov generation and verification.
Outcome zamolodzhikov(double& h3_seconds) {
  Outcome o;
  struct Case {
    std::string name;
    CoxeterSystem sys;
    std::size_t faces;
  };
  std::vector<Case> cases;
  for (int m = 2; m <= 5; ++m) {
    cases.push_back({"A1xI2(" + std::to_string(m) + ")", make_a1_x_dihedral(m),
                     static_cast<std::size_t>(2 + 2 * m)});
  }
  cases.push_back({"A3", make_a(3), 14});
  cases.push_back({"B3", make_b(3), 26});
  std::string detail;
  for (const auto& c : cases) {
    const auto start = Clock::now();
    try {
      const auto rel = generate_zamolodzhikov(c.sys, c.sys.all());
      o.expect(verify_zamolodzhikov(c.sys, rel), c.name + " does not verify");
      o.expect(rel.cells1.size() + rel.cells2.size() == c.faces, c.name + " hemisphere total");
    } catch (const LimitExceeded&) {
      o.expect(false, c.name + " exhausted the default budget");
    }
    const double t = seconds_since(start);
    o.expect(t < 60.0, c.name + " took " + std::to_string(t) + "s");
    o.expect(sphere_face_count(c.sys, c.sys.all()) == c.faces, c.name + " face formula");
    o.expect(coset_face_count(c.sys, c.sys.all()) == c.faces, c.name + " coset enumeration");
    o.expect(sphere_cells(c.sys, c.sys.all()).faces.size() == c.faces, c.name + " sphere cells");
  }

  const auto h3 = make_h3();
  o.expect(sphere_face_count(h3, h3.all()) == 62, "H3 face formula");
  o.expect(coset_face_count(h3, h3.all()) == 62, "H3 coset enumeration");
  const auto start = Clock::now();
  std::string how = "default";
  std::optional<ZamRelation> rel;
  try {
    rel = generate_zamolodzhikov(h3, h3.all());
  } catch (const LimitExceeded&) {
    how = "extended";
    ZamSearchOptions extended;
    extended.node_budget = std::numeric_limits<std::uint64_t>::max();
    extended.time_budget_seconds = 600;
    try {
      rel = generate_zamolodzhikov(h3, h3.all(), extended);
    } catch (const LimitExceeded&) {
    }
  }
  h3_seconds = seconds_since(start);
  o.expect(rel.has_value(), "H3 exhausted the extended budget");
  if (rel) {
    o.expect(verify_zamolodzhikov(h3, *rel), "H3 does not verify");
    o.expect(rel->cells1.size() + rel->cells2.size() == 62, "H3 hemisphere total");
  }
  o.expect(h3_seconds < 600.0, "H3 took " + std::to_string(h3_seconds) + "s");
  std::ostringstream s;
  s << "A1xI2(2..5), A3, B3 at default budget; H3 at " << how << " budget in " << std::fixed
    << std::setprecision(2) << h3_seconds << "s";
  o.summary = s.str();
  return o;
}

// Relabels generators by g -> g+1 mod rank in a diagram.
Diagram relabel(const Diagram& d, std::size_t rank) {
  auto shift = [rank](Generator g) { return static_cast<Generator>((g + 1) % rank); };
  ObjectWord dom = d.domain();
  for (Strand& s : dom.strands) s.gen = shift(s.gen);
  std::vector<Slice> slices;
  for (Slice sl : d.slices()) {
    Symbol& sym = sl.symbol;
    if (sym.kind == SymbolKind::Vertex) {
      Generator a = shift(sym.s), b = shift(sym.t);
      Direction dir = sym.dir;
      if (a > b) {
        std::swap(a, b);
        dir = dir == Direction::Forward ? Direction::Backward : Direction::Forward;
      }
      sym = Symbol::vertex(a, b, sym.m, dir);
    } else {
      sym.s = sym.t = shift(sym.s);
    }
    slices.push_back(sl);
  }
  return Diagram(dom, std::move(slices));
}

std::vector<CoxeterSystem> catalog_systems() {
  return {make_a(2), make_b(2), make_dihedral(5), make_dihedral(6), make_dihedral(2),
          make_dihedral(kInfinity), make_a(3), make_b(3), make_h3(), make_a1_x_dihedral(3),
          make_a1_x_dihedral(4)};
}

// 9. Soundness of the whole generated catalog, with a mutation control.
Outcome soundness() {
  Outcome o;
  std::size_t rules = 0, mutants = 0, mutants_caught = 0;
  for (const auto& sys : catalog_systems()) {
    for (Mode mode : {Mode::Oriented, Mode::Unoriented}) {
      RuleCatalog catalog(sys, mode);
      install_all_zamolodzhikov(catalog);
      for (const RewriteRule& r : catalog.rules()) {
        ++rules;
        o.expect(check_rule_soundness(sys, r), "unsound rule " + r.id);
        std::vector<RewriteRule> mutated;
        if (r.rhs.size() > 0 || !r.rhs.domain().strands.empty()) {
          RewriteRule m = r;
          m.rhs = relabel(r.rhs, sys.rank());
          if (m.rhs != r.rhs) mutated.push_back(m);
        }
        if (r.lhs.size() > 0) {
          RewriteRule m = r;
          std::vector<Slice> slices = r.lhs.slices();
          slices.pop_back();
          m.lhs = Diagram(r.lhs.domain(), slices);
          mutated.push_back(m);
        }
        for (const auto& m : mutated) {
          ++mutants;
          mutants_caught += !check_rule_soundness(sys, m);
        }
      }
    }
  }
  o.expect(mutants > 0 && mutants_caught == mutants,
           std::to_string(mutants - mutants_caught) + " mutated rules passed");
  o.summary = std::to_string(rules) + " rules sound, " + std::to_string(mutants_caught) + "/" +
              std::to_string(mutants) + " mutants rejected";
  return o;
}

// 10. Equality search on seeded random walks.
Outcome equality_search() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  const std::vector<CoxeterSystem> systems = {make_a(2), make_b(2), make_dihedral(6), make_a(3),
                                              make_b(3)};
  constexpr int kTrialsPerCatalog = 50;
  std::size_t trials = 0, proven = 0, inconclusive = 0, controls = 0, controls_ok = 0;
  std::uint64_t max_nodes = 0;
  for (const auto& sys : systems) {
    for (Mode mode : {Mode::Oriented, Mode::Unoriented}) {
      RuleCatalog catalog(sys, mode);
      if (sys.rank() == 3) install_all_zamolodzhikov(catalog);
      const Sign pos = mode == Mode::Oriented ? Sign::Plus : Sign::None;
      for (int k = 0; k < kTrialsPerCatalog; ++k) {
        const Diagram d1 = testgen::random_diagram(rng, sys, mode, 6, 8);
        Diagram d2 = d1;
        const std::size_t steps = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        testgen::random_walk(rng, catalog, d2, steps);
        SearchOptions options;
        options.node_budget = 1'000'000;
        const auto r = search_equality(catalog, d1, d2, options);
        ++trials;
        max_nodes = std::max(max_nodes, r.nodes);
        if (r.status == SearchStatus::Inconclusive) ++inconclusive;
        if (r.status == SearchStatus::Proven && replay(catalog, d1, r.certificate) == d2) {
          ++proven;
        }

        // An extra strand on the right changes both boundaries.
        const Diagram extra = Diagram::identity(ObjectWord{mode, {{0, pos}}});
        ++controls;
        controls_ok +=
            search_equality(catalog, d1, tensor(d2, extra), options).status ==
            SearchStatus::BoundaryMismatch;
      }
    }
  }
  o.expect(trials >= 500, "only " + std::to_string(trials) + " trials");
  o.expect(proven == trials, std::to_string(trials - proven) + " trials not proven");
  o.expect(inconclusive == 0, std::to_string(inconclusive) + " inconclusive");
  o.expect(controls_ok == controls, std::to_string(controls - controls_ok) + " controls missed");
  o.summary = std::to_string(proven) + "/" + std::to_string(trials) + " proven, " +
              std::to_string(inconclusive) + " inconclusive, " + std::to_string(controls_ok) +
              "/" + std::to_string(controls) + " mismatch controls, max nodes " +
              std::to_string(max_nodes);
  return o;
}

// 11. forget_orientation is a functor compatible with the rules.
Outcome functor() {
  Outcome o;
  std::mt19937_64 rng(7);
  const std::vector<CoxeterSystem> systems = {make_a(2), make_b(2), make_a(3), make_dihedral(5)};
  std::size_t diagrams = 0, instances = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const auto& sys = systems[i % systems.size()];
    const Diagram a = testgen::random_diagram(rng, sys, Mode::Oriented, 6, 6);
    const Diagram b =
        testgen::random_diagram_on(rng, sys, Mode::Oriented, a.codomain().strands, 8, 6);
    const Diagram c = testgen::random_diagram(rng, sys, Mode::Oriented, 4, 4);
    ++diagrams;
    o.expect(forget_orientation(compose(a, b)) ==
                 compose(forget_orientation(a), forget_orientation(b)),
             "compose " + std::to_string(i));
    o.expect(forget_orientation(tensor(a, c)) ==
                 tensor(forget_orientation(a), forget_orientation(c)),
             "tensor " + std::to_string(i));
    const auto [dom, cod] = boundary(forget_orientation(a));
    o.expect(dom == forget_orientation(a.domain()) && cod == forget_orientation(a.codomain()),
             "boundary " + std::to_string(i));
  }

  for (const auto& sys : systems) {
    RuleCatalog oriented(sys, Mode::Oriented);
    if (sys.rank() == 3) install_all_zamolodzhikov(oriented);
    RuleCatalog unoriented(sys, Mode::Unoriented);
    if (sys.rank() == 3) install_all_zamolodzhikov(unoriented);
    for (const RewriteRule& r : oriented.rules()) {
      ++instances;
      const RewriteRule image = forget_orientation(r);
      o.expect(check_rule_soundness(sys, image), "forgotten rule " + r.id + " unsound");
      SearchOptions options;
      options.node_budget = 100'000;
      const auto res = search_equality(unoriented, image.lhs, image.rhs, options);
      o.expect(res.status == SearchStatus::Proven,
               "forgotten rule " + r.id + " not derivable: " + std::string(status_name(res.status)));
    }
  }
  o.summary = std::to_string(diagrams) + " diagrams, " + std::to_string(instances) +
              " oriented rules derivable after forgetting";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::vector<int> only;
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  double h3_seconds = 0;
  const std::vector<Criterion> criteria = {
      {1, "group orders", 5, group_orders},
      {2, "rank-3 finiteness", 5, rank3_finiteness},
      {3, "Matsumoto connectivity", 30, matsumoto},
      {4, "dual Coxeter complex", 60, dual_complexes},
      {5, "product complex", 5, products},
      {6, "Salvetti and quotient", 5, salvetti},
      {7, "pancake census", 1, pancake},
      // Each generation is limited separately inside the criterion.
      {8, "Zamolodzhikov generation", 60 * 6 + 600, [&] { return zamolodzhikov(h3_seconds); }},
      {9, "rewrite soundness", 10, soundness},
      {10, "equality search", 120, equality_search},
      {11, "functor check", 30, functor},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    if (t >= c.limit_seconds) o.failures.push_back("exceeded " + std::to_string(c.limit_seconds) + "s");
    const bool pass = o.failures.empty();
    failed += !pass;
    std::cout << "criterion " << std::setw(2) << c.id << " " << (pass ? "PASS" : "FAIL") << "  "
              << c.name << ": " << o.summary << " [" << std::fixed << std::setprecision(2) << t
              << "s, limit " << std::setprecision(0) << c.limit_seconds << "s]\n";
    for (std::size_t k = 0; k < o.failures.size() && k < 10; ++k) {
      std::cout << "    " << o.failures[k] << "\n";
    }
    if (o.failures.size() > 10) std::cout << "    ... " << o.failures.size() - 10 << " more\n";
  }
  return failed == 0 ? 0 : 1;
}
