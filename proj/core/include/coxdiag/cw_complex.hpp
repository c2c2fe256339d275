#pragma once

// Finite CW complexes with incidence taken mod 2, and their cellular
// homology over GF(2).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coxdiag {

struct Cell {
  std::size_t dim = 0;
  std::string label;
  std::vector<std::size_t> boundary;  // ids of (dim-1)-cells with coefficient 1, sorted
  bool attached = true;               // false when only the cell's existence is modelled
};

class CWComplexMod2 {
 public:
  // Boundary ids must name existing cells of dimension dim-1; ids repeated
  // an even number of times cancel. Labels may not contain whitespace.
  // Throws DomainError.
  std::size_t add_cell(std::size_t dim, std::string label, std::vector<std::size_t> boundary);
  // A cell counted without an attaching map.
  std::size_t add_unattached_cell(std::size_t dim, std::string label);

  std::size_t size() const { return cells_.size(); }
  const Cell& cell(std::size_t id) const { return cells_.at(id); }
  const std::vector<Cell>& cells() const { return cells_; }
  // counts()[k] is the number of k-cells; empty for the empty complex.
  std::vector<std::size_t> counts() const;
  const std::vector<std::size_t>& cells_of_dim(std::size_t k) const;
  // True when every k-cell has an attaching map.
  bool attached_in(std::size_t k) const;

 private:
  std::vector<Cell> cells_;
  std::vector<std::vector<std::size_t>> by_dim_;
};

// Throws DomainError naming the first attached cell whose boundary has
// non-zero boundary.
void check_boundary_squared(const CWComplexMod2& c);

long long euler_characteristic(const CWComplexMod2& c);

// Rank of the boundary map from k-cells to (k-1)-cells over GF(2).
std::size_t boundary_rank(const CWComplexMod2& c, std::size_t k);

// Betti numbers b_0 .. b_top over GF(2). An entry is empty when it depends
// on an unattached cell. Throws DomainError if the boundary squares to
// non-zero.
std::vector<std::optional<std::size_t>> homology_mod2(const CWComplexMod2& c);

// Cells are pairs, dimensions add, and the boundary follows the Leibniz
// rule mod 2. Labels are "(a)x(b)".
CWComplexMod2 product_complex(const CWComplexMod2& a, const CWComplexMod2& b);

// Text dump:
//   cell <dim> <id> <label>     one per cell, ids in order
//   bnd <id> <id...>            one per attached cell of positive dimension
std::string format_complex(const CWComplexMod2& c);
CWComplexMod2 parse_complex(std::string_view text);

}  // namespace coxdiag
