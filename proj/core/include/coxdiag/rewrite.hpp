#pragma once

// Rewrite rules on strip diagrams and their application.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coxdiag/diagram.hpp"
#include "coxdiag/zamolodzhikov.hpp"

namespace coxdiag {

enum class RuleFamily : std::uint8_t {
  Interchange,
  ZigZag,
  Cyclicity,
  Bridge,
  CircleRemove,
  CancelVertexPair,
  UnorientedFenn,
  Zamolodzhikov,
};

std::string_view family_name(RuleFamily f);

// lhs and rhs are patterns: their slice offsets are relative to the left edge
// of the matched window. lhs never has fewer slices than rhs, so applying a
// rule forward never grows a diagram.
struct RewriteRule {
  std::string id;
  RuleFamily family = RuleFamily::ZigZag;
  std::string type_tag;  // Zamolodzhikov rules only
  Diagram lhs;
  Diagram rhs;

  bool is_contraction() const { return lhs.size() > rhs.size(); }
};

inline constexpr std::string_view kInterchangeId = "interchange";

// A rule application. For ordinary rules `slice` is the index of the first
// replaced slice (or the insertion level when the source side is empty) and
// `offset` the left edge of the window. Forward replaces lhs by rhs.
//
// For interchange, slices `slice` and `slice + 1` swap; `offset` is the
// offset of the lower one, and Forward means the upper slice passes to the
// left of the lower one, Backward to the right.
struct Move {
  std::string rule;
  std::size_t slice = 0;
  std::size_t offset = 0;
  Direction dir = Direction::Forward;

  friend bool operator==(const Move&, const Move&) = default;
};

using Certificate = std::vector<Move>;

struct RuleSet {
  bool contractions = true;  // forward direction of shrinking rules
  bool expansions = false;   // backward direction of shrinking rules
  bool neutral = true;       // both directions of size-preserving rules
  bool interchange = true;

  static RuleSet contraction_only() { return {true, false, false, false}; }
  static RuleSet non_increasing() { return {true, false, true, true}; }
  static RuleSet all() { return {true, true, true, true}; }
};

// The rule catalog for one system and mode: zig-zags, circle removal,
// bridges, cancelling vertex pairs, cyclicity, and any installed
// Zamolodzhikov rules.
class RuleCatalog {
 public:
  RuleCatalog(const CoxeterSystem& sys, Mode mode);

  const CoxeterSystem& system() const { return sys_; }
  Mode mode() const { return mode_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  // nullptr when absent.
  const RewriteRule* find(std::string_view id) const;

  // Throws DomainError on a duplicate id, a mode mismatch or an unsound rule.
  void add(RewriteRule rule);

 private:
  CoxeterSystem sys_;
  Mode mode_;
  std::vector<RewriteRule> rules_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Swap conditions for adjacent slices (lower below upper).
bool can_pass_left(const Slice& lower, const Slice& upper);
bool can_pass_right(const Slice& lower, const Slice& upper);
// Returns {new lower, new upper}. Throws DomainError if not allowed.
std::pair<Slice, Slice> interchange(const Slice& lower, const Slice& upper, Direction dir);

// Throws DomainError if the move does not apply.
Diagram apply_move(const RuleCatalog& catalog, const Diagram& d, const Move& move);

// Contiguous matches plus interchange swaps, sorted by slice index, offset,
// rule id and direction.
std::vector<Move> enumerate_moves(const RuleCatalog& catalog, const Diagram& d, RuleSet set);

// The move undoing `move`, given the diagram it is applied to.
Move inverse_move(const Diagram& before, const Move& move);

Diagram replay(const RuleCatalog& catalog, Diagram d, const Certificate& cert);

// A certificate from the end of `cert` back to `start`.
Certificate reverse_certificate(const RuleCatalog& catalog, const Diagram& start,
                                const Certificate& cert);

// Boundaries agree, both sides are valid for the system, and every slice
// preserves the image in W so region labels are consistent.
bool check_rule_soundness(const CoxeterSystem& sys, const RewriteRule& rule);

// The rule P1 = P2 with both paths drawn as vertex slices on the domain a.
// Throws DomainError if the relation does not verify.
RewriteRule install_zamolodzhikov(const CoxeterSystem& sys, const ZamRelation& rel, Mode mode);

// Same rule with both sides unoriented.
RewriteRule forget_orientation(const RewriteRule& rule);

std::string format_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

// Generates, verifies and installs one Zamolodzhikov rule for every finitary
// rank-3 subset of the catalog's system.
void install_all_zamolodzhikov(RuleCatalog& catalog, const ZamSearchOptions& options = {});

}  // namespace coxdiag
