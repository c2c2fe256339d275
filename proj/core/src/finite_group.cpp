#include "coxdiag/finite_group.hpp"

#include <algorithm>

#include "coxdiag/errors.hpp"
#include "coxdiag/parabolic.hpp"

namespace coxdiag {

FiniteGroup::FiniteGroup(const CoxeterSystem& sys) : sys_(sys) {
  elements_ = enumerate(sys_, sys_.all());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  const std::size_t r = sys_.rank();
  right_.assign(elements_.size() * r, 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (Generator s = 0; s < r; ++s) {
      right_[i * r + s] = index_of(multiply_generator(sys_, elements_[i], s));
    }
  }
}

std::size_t FiniteGroup::index_of(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw DomainError("element is not in the group");
  return it->second;
}

std::size_t FiniteGroup::times_word(std::size_t x, std::span<const Generator> w) const {
  for (Generator s : w) x = times(x, s);
  return x;
}

FiniteGroup::Cosets FiniteGroup::cosets(GeneratorSet subset) const {
  Cosets out;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  out.coset_of.assign(size(), unset);
  // Elements are in length order, so the first element reached in each coset
  // is its minimal representative.
  for (std::size_t x = 0; x < size(); ++x) {
    if (out.coset_of[x] != unset) continue;
    const std::size_t id = out.representative.size();
    out.representative.push_back(x);
    for (std::size_t y : coset_members(x, subset)) out.coset_of[y] = id;
  }
  return out;
}

std::vector<std::size_t> FiniteGroup::coset_members(std::size_t x, GeneratorSet subset) const {
  const auto gens = subset.members();
  std::vector<std::size_t> members{x};
  std::vector<bool> seen(size(), false);
  seen[x] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Generator s : gens) {
      const std::size_t y = times(members[head], s);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace coxdiag
