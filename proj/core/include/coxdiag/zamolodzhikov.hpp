#pragma once

// Generalized Zamolodzhikov relations: for a finitary rank-3 subset I, two
// braid-move paths between reduced words of w_I whose crossed faces split the
// 2-sphere of the Coxeter complex of W_I into complementary hemispheres.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxdiag/coxeter.hpp"

namespace coxdiag {

// Replaces the alternating subword of length m(s,t) starting at `position`,
// whose first letter is s, by the one starting with t.
struct BraidMove {
  std::size_t position = 0;
  Generator s = 0;
  Generator t = 0;

  friend bool operator==(const BraidMove&, const BraidMove&) = default;
};

// A 2-cell of the sphere: the coset x W_J for a rank-2 J, named by its
// minimal representative.
struct SphereFace {
  GeneratorSet pair;
  Element representative;

  friend bool operator==(const SphereFace&, const SphereFace&) = default;
  friend bool operator<(const SphereFace& a, const SphereFace& b) {
    if (a.pair != b.pair) return a.pair < b.pair;
    return a.representative < b.representative;
  }
};

struct ZamRelation {
  GeneratorSet subset;
  Word a;
  Word b;
  std::vector<BraidMove> path1;
  std::vector<BraidMove> path2;
  std::vector<SphereFace> cells1;
  std::vector<SphereFace> cells2;
};

// Throws DomainError if the subword at the move's position is not the
// alternating word it names.
Word apply_braid_move(const CoxeterSystem& sys, const Word& w, const BraidMove& move);

// The face crossed by a braid move applied to `w`.
SphereFace face_of_move(const CoxeterSystem& sys, const Word& w, const BraidMove& move);

struct SphereCellStructure {
  GeneratorSet subset;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<SphereFace> faces;  // sorted
};

// Throws DomainError unless `subset` has rank 3 and is finitary.
SphereCellStructure sphere_cells(const CoxeterSystem& sys, GeneratorSet subset);

// Sum over rank-2 J inside I of |W_I| / (2 m_J).
std::size_t sphere_face_count(const CoxeterSystem& sys, GeneratorSet subset);

struct ZamSearchOptions {
  std::uint64_t node_budget = 2'000'000;
  double time_budget_seconds = 0;  // 0 disables the time limit
  std::uint64_t seed = 0;
};

// Throws LimitExceeded when the budget runs out before a relation is found.
ZamRelation generate_zamolodzhikov(const CoxeterSystem& sys, GeneratorSet subset,
                                   const ZamSearchOptions& options = {});

bool verify_zamolodzhikov(const CoxeterSystem& sys, const ZamRelation& rel);

// Type tag such as "A3" or "A1xI2(4)".
std::string zam_type_tag(const CoxeterSystem& sys, GeneratorSet subset);

// Text form: `subset`, `a`, `b`, then `p1`/`p2` lines with `<position> <s> <t>`.
std::string format_zam_relation(const CoxeterSystem& sys, const ZamRelation& rel);
ZamRelation parse_zam_relation(const CoxeterSystem& sys, std::string_view text);

}  // namespace coxdiag
