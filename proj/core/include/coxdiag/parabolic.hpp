#pragma once

// Parabolic subgroups: finiteness by classification, group orders, element
// enumeration and longest elements.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxdiag/coxeter.hpp"

namespace coxdiag {

// |W_I|, or infinity.
class GroupOrder {
 public:
  static GroupOrder infinite() { return GroupOrder(); }
  static GroupOrder finite(std::uint64_t n) { return GroupOrder(n); }

  bool is_infinite() const { return !value_.has_value(); }
  std::uint64_t value() const;  // throws DomainError when infinite
  std::string to_string() const;

  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;

 private:
  GroupOrder() = default;
  explicit GroupOrder(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

// One irreducible finite component of a Coxeter diagram.
struct FiniteComponent {
  char family = 'A';  // A B D E F H I
  std::size_t rank = 0;
  int m = 0;  // only for family 'I'
  std::vector<Generator> generators;
  std::uint64_t order = 0;

  std::string name() const;  // "A3", "B3", "H3", "I2(5)", ...
};

// Connected components of the Coxeter diagram restricted to `subset`
// (edges where m >= 3), each sorted by index, components ordered by their
// smallest member.
std::vector<std::vector<Generator>> diagram_components(const CoxeterSystem& sys,
                                                       GeneratorSet subset);

// Classification of each component, or nullopt if any component is not of
// finite type.
std::optional<std::vector<FiniteComponent>> classify(const CoxeterSystem& sys,
                                                     GeneratorSet subset);

bool is_finitary(const CoxeterSystem& sys, GeneratorSet subset);

GroupOrder group_order(const CoxeterSystem& sys, GeneratorSet subset);

// Type tag such as "A3", "B3", "A1xI2(4)"; throws if not finitary.
std::string type_name(const CoxeterSystem& sys, GeneratorSet subset);

// Positive definiteness of the cosine Gram matrix, by Cholesky with pivot
// threshold `tolerance`. Independent of the classification table; exposed
// for cross-checking it.
bool gram_positive_definite(const CoxeterSystem& sys, GeneratorSet subset,
                            double tolerance = 1e-9);

// All elements of W_I ordered by length, then lexicographically.
std::vector<Element> enumerate(const CoxeterSystem& sys, GeneratorSet subset);

Element longest_element(const CoxeterSystem& sys, GeneratorSet subset);

// Finitary subsets of `within`, ordered by size then bit pattern.
std::vector<GeneratorSet> finitary_subsets(const CoxeterSystem& sys, GeneratorSet within);

}  // namespace coxdiag
