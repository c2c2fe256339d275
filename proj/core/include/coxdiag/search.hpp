#pragma once

// Equality search over the move graph of a rule catalog. Nodes are diagrams
// in interchange-canonical form, so planar rearrangements of independent
// slices collapse to one node.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coxdiag/rewrite.hpp"

namespace coxdiag {

// Sorts slices by repeatedly pulling down the slice that can reach the
// current position with the smallest (offset, symbol). Returns the sorted
// diagram and the interchange moves that produce it.
std::pair<Diagram, Certificate> canonical_form(const Diagram& d);

// One rule application up to interchange, followed by re-canonicalization.
// `steps` replays from the source diagram to `result`.
struct MacroMove {
  Certificate steps;
  Diagram result;
};

// All macro moves out of a canonical diagram, de-duplicated by result.
// Interchange itself is not a macro move. Results with more than
// `max_slices` slices are dropped.
std::vector<MacroMove> macro_moves(const RuleCatalog& catalog, const Diagram& canonical,
                                   RuleSet set, std::size_t max_slices = SIZE_MAX);

struct NormalizeResult {
  Diagram diagram;
  Certificate certificate;
  std::uint64_t nodes = 0;
};

// Best-first exploration of everything reachable without increasing the
// slice count; returns the smallest diagram seen under (slice count,
// encoding).
NormalizeResult normalize(const RuleCatalog& catalog, const Diagram& d,
                          std::uint64_t node_budget = 100'000);

enum class SearchStatus { Proven, BoundaryMismatch, Inconclusive };

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000;
  // Bidirectional search may grow diagrams this many slices past the larger
  // normalized side.
  std::size_t slack = 4;
  double time_budget_seconds = 0;  // 0 disables the time limit
};

struct SearchResult {
  SearchStatus status = SearchStatus::Inconclusive;
  Certificate certificate;
  std::uint64_t nodes = 0;
};

SearchResult search_equality(const RuleCatalog& catalog, const Diagram& d1, const Diagram& d2,
                             const SearchOptions& options = {});

std::string_view status_name(SearchStatus s);

}  // namespace coxdiag
