#pragma once

// Coxeter systems, words and the word problem.
//
// Elements are represented by their canonical word: the reduced expression
// that is lexicographically least (by generator index) among all reduced
// expressions of the element. All reduced expressions of an element are
// connected by braid moves, so the canonical word can be found by closing a
// single reduced word under braid moves and taking the minimum.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxdiag {

using Generator = std::uint8_t;
using Word = std::vector<Generator>;

// m(s, t) for a pair with no braid relation.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

inline constexpr std::size_t kMaxRank = 32;
inline constexpr std::size_t kDefaultClosureLimit = std::size_t{1} << 20;

// A subset of the generators, stored as a bit mask.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<Generator> gens) {
    for (Generator g : gens) insert(g);
  }

  static GeneratorSet all(std::size_t rank) {
    return GeneratorSet(rank >= 32 ? ~std::uint32_t{0}
                                   : (std::uint32_t{1} << rank) - 1);
  }

  bool contains(Generator g) const { return (bits_ >> g) & 1U; }
  void insert(Generator g) { bits_ |= std::uint32_t{1} << g; }
  void erase(Generator g) { bits_ &= ~(std::uint32_t{1} << g); }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }
  bool is_subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Generator> members() const;

  friend bool operator==(GeneratorSet, GeneratorSet) = default;
  friend auto operator<=>(GeneratorSet a, GeneratorSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

// Subsets of `set` ordered by size, then by bit pattern.
std::vector<GeneratorSet> subsets_by_size(GeneratorSet set);

class CoxeterSystem {
 public:
  // Validates and builds a system. `m` must be square and symmetric with
  // 1 on the diagonal and entries >= 2 (or kInfinity) off it. Names default
  // to s0, s1, ...
  static CoxeterSystem from_matrix(std::vector<std::vector<int>> m,
                                   std::vector<std::string> names = {});

  std::size_t rank() const { return names_.size(); }
  int m(Generator s, Generator t) const { return m_[s * rank() + t]; }
  const std::string& name(Generator s) const { return names_[s]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Generator> find(std::string_view name) const;
  GeneratorSet all() const { return GeneratorSet::all(rank()); }

  // The parabolic system on a subset, generators renumbered in index order.
  CoxeterSystem restrict_to(GeneratorSet subset) const;

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  CoxeterSystem() = default;
  std::vector<std::string> names_;
  std::vector<int> m_;
};

// Convenience constructors for named types.
CoxeterSystem make_a(std::size_t n);
CoxeterSystem make_b(std::size_t n);
CoxeterSystem make_h3();
CoxeterSystem make_dihedral(int m);
// A1 x I2(m) with the isolated node first.
CoxeterSystem make_a1_x_dihedral(int m);
// Rank 3 system from the three off-diagonal entries m01, m12, m02.
CoxeterSystem make_rank3(int m01, int m12, int m02);

// The lex-least reduced word plus its length.
class Element {
 public:
  Element() = default;

  const Word& normal() const { return normal_; }
  std::size_t length() const { return normal_.size(); }
  bool is_identity() const { return normal_.empty(); }

  friend bool operator==(const Element&, const Element&) = default;
  // Length first, then lexicographic on the canonical word.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.normal_ < b.normal_;
  }

 private:
  friend Element make_element_unchecked(Word normal);
  explicit Element(Word normal) : normal_(std::move(normal)) {}
  Word normal_;
};

// Only for words already known to be canonical.
Element make_element_unchecked(Word normal);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};
struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return WordHash{}(e.normal()); }
};

enum class Side { Left, Right };

void check_word(const CoxeterSystem& sys, std::span<const Generator> w);

// All words reachable from `w` by braid moves, sorted. Throws LimitExceeded
// when the set would exceed `limit`.
std::vector<Word> braid_closure(const CoxeterSystem& sys, const Word& w,
                                std::size_t limit = kDefaultClosureLimit);

// Tits' criterion: reduced iff no word in the braid closure has two equal
// adjacent letters.
bool is_reduced(const CoxeterSystem& sys, const Word& w,
                std::size_t limit = kDefaultClosureLimit);

Element normal_form(const CoxeterSystem& sys, const Word& w,
                    std::size_t limit = kDefaultClosureLimit);

Element multiply(const CoxeterSystem& sys, const Element& a, const Element& b,
                 std::size_t limit = kDefaultClosureLimit);

Element multiply_generator(const CoxeterSystem& sys, const Element& a, Generator s,
                           std::size_t limit = kDefaultClosureLimit);

Element inverse(const CoxeterSystem& sys, const Element& a);

GeneratorSet descents(const CoxeterSystem& sys, const Element& w, Side side);

bool positive_braid_equal(const CoxeterSystem& sys, const Word& u, const Word& v,
                          std::size_t limit = kDefaultClosureLimit);

Element min_coset_representative(const CoxeterSystem& sys, const Element& w,
                                 GeneratorSet subset);

struct ReducedExpressionEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t position = 0;  // start of the alternating subword in `from`
  Generator s = 0;           // first letter of the subword in `from`
  Generator t = 0;
};

struct ReducedExpressionGraph {
  Element target;
  std::vector<Word> vertices;  // sorted
  std::vector<ReducedExpressionEdge> edges;

  std::size_t index_of(const Word& w) const;
  bool connected() const;
};

ReducedExpressionGraph reduced_expression_graph(const CoxeterSystem& sys, const Element& w,
                                                std::size_t limit = kDefaultClosureLimit);

// Text helpers. Words are written as space separated generator names.
std::string format_word(const CoxeterSystem& sys, std::span<const Generator> w);
// Accepts names separated by spaces or commas; a token that is not a name but
// spells a run of single-character names is split into letters.
Word parse_word(const CoxeterSystem& sys, std::string_view text);
GeneratorSet parse_subset(const CoxeterSystem& sys, std::string_view text);
std::string format_subset(const CoxeterSystem& sys, GeneratorSet subset);

}  // namespace coxdiag
