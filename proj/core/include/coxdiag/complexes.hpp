#pragma once

// Cell complexes attached to a Coxeter system: the Coxeter complex, the dual
// Coxeter complex, the Salvetti complex, the one-vertex complex of the Artin
// group, presentation complexes and their universal covers, plus censuses of
// the 3-cells of the Coxeter 3-presentation.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coxdiag/coxeter.hpp"
#include "coxdiag/cw_complex.hpp"

namespace coxdiag {

// k-cells are cosets x W_J for |J| = k; the boundary of (J, C) is every
// (J', C') with J' of corank 1 in J and C' inside C. The top cell (J = S) is
// present only when `completed`. Throws DomainError when W is infinite.
CWComplexMod2 dual_coxeter_complex(const CoxeterSystem& sys, bool completed);

// Faces are cosets x W_I for proper subsets I, of dimension rank-1-|I|.
// Throws DomainError when W is infinite.
CWComplexMod2 coxeter_complex(const CoxeterSystem& sys);

// Cells (I, w) for finitary I and w in W. Cells of rank at least 3 are
// counted without attaching maps. Throws DomainError when W is infinite.
CWComplexMod2 salvetti_complex(const CoxeterSystem& sys);

// One k-cell per finitary subset of size k. The 2-cell of {s,t} has
// boundary (m mod 2)(s + t); cells of rank at least 3 are counted only.
CWComplexMod2 bw_complex(const CoxeterSystem& sys);

struct Letter {
  std::size_t gen = 0;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Relator = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::string> relation_names;
  std::vector<Relator> relations;
};

// Relator text: space separated generator names, each optionally followed by
// ^-1; "1" or an empty string is the empty relator.
Relator parse_relator(const std::vector<std::string>& generators, std::string_view text);
std::string format_relator(const std::vector<std::string>& generators, const Relator& r);

// One 0-cell, one 1-cell per generator, and one 2-cell per relation whose
// mod-2 boundary is the parity of each generator's occurrences.
CWComplexMod2 presentation_complex(const Presentation& p);

// Quadratic relations s s for every generator, then braid relations
// (s t ...)(t s ...)^-1 for every pair with finite m.
Presentation coxeter_presentation(const CoxeterSystem& sys);

// The Cayley complex of the Coxeter presentation: 0-cells W, 1-cells (s, g)
// from g to gs, and 2-cells (r, g) attached along r read from g. Throws
// DomainError when W is infinite.
CWComplexMod2 universal_cover_2skeleton(const CoxeterSystem& sys);

// 3-cells of the Coxeter 3-presentation over the universal cover, and the
// counts kept after discarding redundant ones.
struct CellCensus {
  std::size_t group_order = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t quadratic = 0;
  std::size_t braid = 0;
  std::size_t z = 0;
  std::size_t rotation = 0;
  std::size_t flip = 0;
  std::size_t zamolodzhikov = 0;
  std::size_t kept_z = 0;
  std::size_t kept_rotation_flip = 0;
  std::size_t kept_zamolodzhikov = 0;

  std::size_t three_cells() const { return z + rotation + flip + zamolodzhikov; }
  std::size_t kept() const { return kept_z + kept_rotation_flip + kept_zamolodzhikov; }
  std::size_t removed() const { return three_cells() - kept(); }
};

// Full counts; the kept fields equal the totals. Throws DomainError when W
// is infinite.
CellCensus coxeter_3presentation_census(const CoxeterSystem& sys);

// Keeps |W|/2 z-cells per generator, (2m-1)|W|/(2m) rotation and flip cells
// per pair and |W|/|W_I| Zamolodzhikov cells per rank-3 finitary subset.
CellCensus pruned_half_skeleton_census(const CoxeterSystem& sys);

struct Gallery {
  std::vector<Element> chambers;  // x, x s1, x s1 s2, ...
  bool minimal = false;
};

Gallery gallery_from_word(const CoxeterSystem& sys, const Element& x, const Word& w);

}  // namespace coxdiag
