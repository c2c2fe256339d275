#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "coxdiag/coxeter.hpp"

namespace coxdiag {

// A finite Coxeter group with its elements indexed in enumeration order and a
// right-multiplication table by generators. Builders of cell complexes work on
// indices instead of re-solving the word problem.
class FiniteGroup {
 public:
  // Throws DomainError when W is infinite.
  explicit FiniteGroup(const CoxeterSystem& sys);

  const CoxeterSystem& system() const { return sys_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t index_of(const Element& e) const;

  std::size_t times(std::size_t x, Generator s) const { return right_[x * sys_.rank() + s]; }
  std::size_t times_word(std::size_t x, std::span<const Generator> w) const;
  std::size_t length(std::size_t x) const { return elements_[x].length(); }

  // Coset id of every element for the right cosets x W_I, and the number of
  // cosets. Ids follow the order of the minimal coset representatives.
  struct Cosets {
    std::vector<std::size_t> coset_of;
    std::vector<std::size_t> representative;  // element index per coset
  };
  Cosets cosets(GeneratorSet subset) const;

  // Elements of x W_I.
  std::vector<std::size_t> coset_members(std::size_t x, GeneratorSet subset) const;

 private:
  CoxeterSystem sys_;
  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  std::vector<std::size_t> right_;
};

}  // namespace coxdiag
