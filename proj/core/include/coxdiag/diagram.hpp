#pragma once

// Strip diagrams as lists of horizontal slices. Each slice applies one
// generating symbol (cup, cap or 2m-valent vertex) to a window of the word
// entering it; strands outside the window pass straight through.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxdiag/coxeter.hpp"

namespace coxdiag {

enum class Mode : std::uint8_t { Oriented, Unoriented };

enum class Sign : std::uint8_t { None, Plus, Minus };

struct Strand {
  Generator gen = 0;
  Sign sign = Sign::None;

  Strand dual() const {
    return {gen, sign == Sign::Plus ? Sign::Minus : sign == Sign::Minus ? Sign::Plus : Sign::None};
  }
  friend bool operator==(const Strand&, const Strand&) = default;
  friend auto operator<=>(const Strand&, const Strand&) = default;
};

using StrandWord = std::vector<Strand>;

struct ObjectWord {
  Mode mode = Mode::Unoriented;
  StrandWord strands;

  std::size_t size() const { return strands.size(); }
  friend bool operator==(const ObjectWord&, const ObjectWord&) = default;
};

// Cup/cap variant names the signs left to right: PlusMinus is s+ s-.
enum class Variant : std::uint8_t { None, PlusMinus, MinusPlus };

enum class SymbolKind : std::uint8_t { Cup, Cap, Vertex };

enum class Direction : std::uint8_t { Forward, Backward };

// A vertex always stores s < t. Forward maps the alternating word of length
// m starting with s to the one starting with t; Backward is the reverse.
struct Symbol {
  SymbolKind kind = SymbolKind::Cup;
  Generator s = 0;
  Generator t = 0;
  int m = 0;
  Variant variant = Variant::None;
  Direction dir = Direction::Forward;

  static Symbol cup(Generator s, Variant v = Variant::None) {
    return {SymbolKind::Cup, s, s, 0, v, Direction::Forward};
  }
  static Symbol cap(Generator s, Variant v = Variant::None) {
    return {SymbolKind::Cap, s, s, 0, v, Direction::Forward};
  }
  // Throws DomainError unless s < t and 2 <= m < infinity.
  static Symbol vertex(Generator s, Generator t, int m, Direction dir);

  // Strands consumed and produced in the given mode. Oriented vertices act
  // on positive strands.
  StrandWord domain(Mode mode) const;
  StrandWord codomain(Mode mode) const;
  std::size_t domain_size() const;
  std::size_t codomain_size() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

struct Slice {
  std::size_t offset = 0;
  Symbol symbol;

  friend bool operator==(const Slice&, const Slice&) = default;
  friend auto operator<=>(const Slice&, const Slice&) = default;
};

// Alternating word s t s ... of the given length.
StrandWord alternating(Generator s, Generator t, int length, Sign sign);

class Diagram {
 public:
  Diagram() = default;
  // Type-checks every slice; throws DomainError on a malformed slice or a
  // mode violation.
  Diagram(ObjectWord domain, std::vector<Slice> slices);

  static Diagram identity(ObjectWord word) { return Diagram(std::move(word), {}); }

  Mode mode() const { return domain_.mode; }
  const ObjectWord& domain() const { return domain_; }
  const std::vector<Slice>& slices() const { return slices_; }
  std::size_t size() const { return slices_.size(); }

  // Recomputed from the slices on every call.
  ObjectWord codomain() const;
  // The word entering slice i (level 0 is the domain, level size() the codomain).
  StrandWord level(std::size_t i) const;
  std::vector<StrandWord> levels() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) {
    if (auto c = a.domain_.strands <=> b.domain_.strands; c != 0) return c;
    return a.slices_ <=> b.slices_;
  }

 private:
  ObjectWord domain_;
  std::vector<Slice> slices_;
};

// Applies a slice to a word, throwing DomainError if it does not fit.
StrandWord apply_slice(Mode mode, const StrandWord& word, const Slice& slice);

std::pair<ObjectWord, ObjectWord> boundary(const Diagram& d);

Diagram compose(const Diagram& first, const Diagram& second);
Diagram tensor(const Diagram& left, const Diagram& right);

// Checks generators, vertex labels and finiteness against a system.
void validate(const CoxeterSystem& sys, const Diagram& d);

// Image in W: signs are dropped since every generator is an involution there.
Element group_image(const CoxeterSystem& sys, const StrandWord& word);
Element group_image(const CoxeterSystem& sys, const ObjectWord& word);

// labels[i][j] is the region left of strand j at level i (j = width is the
// rightmost region).
struct RegionLabeling {
  std::vector<std::vector<Element>> labels;
};

// Throws InternalError if two descriptions of a region disagree.
RegionLabeling label_regions(const CoxeterSystem& sys, const Diagram& d, const Element& leftmost);

Diagram forget_orientation(const Diagram& d);
ObjectWord forget_orientation(const ObjectWord& w);

// Text format:
//   mode oriented|unoriented
//   domain <strands>          s+ s- (oriented) or s (unoriented)
//   slice <offset> cup <s> [+-|-+]
//   slice <offset> cap <s> [+-|-+]
//   slice <offset> bv <s> <t> fwd|bwd
std::string format_diagram(const CoxeterSystem& sys, const Diagram& d);
Diagram parse_diagram(const CoxeterSystem& sys, std::string_view text);

std::string format_strands(const CoxeterSystem& sys, const StrandWord& w);
StrandWord parse_strands(const CoxeterSystem& sys, Mode mode, std::string_view text);

// Stable compact key for hashing and ordering in searches.
std::string encode(const Diagram& d);

}  // namespace coxdiag
