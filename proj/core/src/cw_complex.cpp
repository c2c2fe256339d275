#include "coxdiag/cw_complex.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <unordered_map>

#include "coxdiag/errors.hpp"

namespace coxdiag {

namespace {

std::vector<std::size_t> reduce_mod2(std::vector<std::size_t> ids) {
  std::sort(ids.begin(), ids.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(ids[i]);
    i = j;
  }
  return out;
}

void check_label(const std::string& label) {
  if (label.empty()) throw DomainError("cell label is empty");
  for (char ch : label) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      throw DomainError("cell label '" + label + "' contains whitespace");
    }
  }
}

const std::vector<std::size_t> kNoCells;

}  // namespace

std::size_t CWComplexMod2::add_cell(std::size_t dim, std::string label,
                                    std::vector<std::size_t> boundary) {
  check_label(label);
  if (dim == 0 && !boundary.empty()) throw DomainError("0-cells have empty boundary");
  for (std::size_t id : boundary) {
    if (id >= cells_.size()) throw DomainError("boundary names unknown cell " + std::to_string(id));
    if (cells_[id].dim + 1 != dim) {
      throw DomainError("boundary of a " + std::to_string(dim) + "-cell names a " +
                        std::to_string(cells_[id].dim) + "-cell");
    }
  }
  const std::size_t id = cells_.size();
  cells_.push_back({dim, std::move(label), reduce_mod2(std::move(boundary)), true});
  if (by_dim_.size() <= dim) by_dim_.resize(dim + 1);
  by_dim_[dim].push_back(id);
  return id;
}

std::size_t CWComplexMod2::add_unattached_cell(std::size_t dim, std::string label) {
  if (dim == 0) return add_cell(0, std::move(label), {});
  check_label(label);
  const std::size_t id = cells_.size();
  cells_.push_back({dim, std::move(label), {}, false});
  if (by_dim_.size() <= dim) by_dim_.resize(dim + 1);
  by_dim_[dim].push_back(id);
  return id;
}

std::vector<std::size_t> CWComplexMod2::counts() const {
  std::vector<std::size_t> out;
  for (const auto& ids : by_dim_) out.push_back(ids.size());
  return out;
}

const std::vector<std::size_t>& CWComplexMod2::cells_of_dim(std::size_t k) const {
  return k < by_dim_.size() ? by_dim_[k] : kNoCells;
}

bool CWComplexMod2::attached_in(std::size_t k) const {
  for (std::size_t id : cells_of_dim(k)) {
    if (!cells_[id].attached) return false;
  }
  return true;
}

void check_boundary_squared(const CWComplexMod2& c) {
  for (const Cell& cell : c.cells()) {
    if (cell.dim < 2 || !cell.attached) continue;
    std::vector<std::size_t> all;
    bool known = true;
    for (std::size_t f : cell.boundary) {
      const Cell& face = c.cell(f);
      known &= face.attached;
      all.insert(all.end(), face.boundary.begin(), face.boundary.end());
    }
    if (known && !reduce_mod2(std::move(all)).empty()) {
      throw DomainError("boundary of boundary of cell '" + cell.label + "' is non-zero");
    }
  }
}

long long euler_characteristic(const CWComplexMod2& c) {
  long long chi = 0;
  const auto counts = c.counts();
  for (std::size_t k = 0; k < counts.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[k]);
  }
  return chi;
}

std::size_t boundary_rank(const CWComplexMod2& c, std::size_t k) {
  if (k == 0) return 0;
  const auto& rows = c.cells_of_dim(k);
  const auto& cols = c.cells_of_dim(k - 1);
  if (rows.empty() || cols.empty()) return 0;
  std::unordered_map<std::size_t, std::size_t> col_index;
  for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;
  const std::size_t words = (cols.size() + 63) / 64;
  // Pivot rows keyed by their highest set bit.
  std::vector<std::vector<std::uint64_t>> pivots(cols.size());
  std::vector<bool> has_pivot(cols.size(), false);
  std::size_t rank = 0;
  for (std::size_t id : rows) {
    const Cell& cell = c.cell(id);
    if (!cell.attached) throw DomainError("boundary rank needs attached cells");
    std::vector<std::uint64_t> row(words, 0);
    for (std::size_t f : cell.boundary) {
      const std::size_t j = col_index.at(f);
      row[j / 64] ^= std::uint64_t{1} << (j % 64);
    }
    while (true) {
      std::size_t w = words;
      while (w > 0 && row[w - 1] == 0) --w;
      if (w == 0) break;
      const std::size_t bit = (w - 1) * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(row[w - 1])));
      if (!has_pivot[bit]) {
        pivots[bit] = std::move(row);
        has_pivot[bit] = true;
        ++rank;
        break;
      }
      for (std::size_t i = 0; i < w; ++i) row[i] ^= pivots[bit][i];
    }
  }
  return rank;
}

std::vector<std::optional<std::size_t>> homology_mod2(const CWComplexMod2& c) {
  check_boundary_squared(c);
  const auto counts = c.counts();
  std::vector<std::optional<std::size_t>> ranks(counts.size() + 1);
  for (std::size_t k = 0; k <= counts.size(); ++k) {
    if (c.attached_in(k)) ranks[k] = boundary_rank(c, k);
  }
  std::vector<std::optional<std::size_t>> betti(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (ranks[k] && ranks[k + 1]) betti[k] = counts[k] - *ranks[k] - *ranks[k + 1];
  }
  return betti;
}

CWComplexMod2 product_complex(const CWComplexMod2& a, const CWComplexMod2& b) {
  CWComplexMod2 out;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
  const std::size_t top = a.counts().size() + b.counts().size();
  for (std::size_t d = 0; d + 1 < top; ++d) {
    for (std::size_t da = 0; da <= d; ++da) {
      const std::size_t db = d - da;
      for (std::size_t x : a.cells_of_dim(da)) {
        for (std::size_t y : b.cells_of_dim(db)) {
          const Cell& cx = a.cell(x);
          const Cell& cy = b.cell(y);
          std::string label = "(" + cx.label + ")x(" + cy.label + ")";
          if (!cx.attached || !cy.attached) {
            id[{x, y}] = out.add_unattached_cell(d, std::move(label));
            continue;
          }
          std::vector<std::size_t> bnd;
          for (std::size_t f : cx.boundary) bnd.push_back(id.at({f, y}));
          for (std::size_t g : cy.boundary) bnd.push_back(id.at({x, g}));
          id[{x, y}] = out.add_cell(d, std::move(label), std::move(bnd));
        }
      }
    }
  }
  return out;
}

std::string format_complex(const CWComplexMod2& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << "cell " << c.cell(i).dim << ' ' << i << ' ' << c.cell(i).label << '\n';
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Cell& cell = c.cell(i);
    if (cell.dim == 0 || !cell.attached) continue;
    out << "bnd " << i;
    for (std::size_t f : cell.boundary) out << ' ' << f;
    out << '\n';
  }
  return out.str();
}

CWComplexMod2 parse_complex(std::string_view text) {
  struct Pending {
    std::size_t dim;
    std::string label;
    std::optional<std::vector<std::size_t>> boundary;
  };
  std::vector<Pending> cells;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "cell") {
      std::size_t dim = 0;
      std::size_t id = 0;
      std::string label;
      if (!(ls >> dim >> id >> label)) throw ParseError(lineno, 1, "expected 'cell <dim> <id> <label>'");
      if (id != cells.size()) throw ParseError(lineno, 1, "cell ids must be consecutive from 0");
      cells.push_back({dim, label, std::nullopt});
    } else if (kw == "bnd") {
      std::size_t id = 0;
      if (!(ls >> id)) throw ParseError(lineno, 1, "expected 'bnd <id> <id...>'");
      if (id >= cells.size()) throw ParseError(lineno, 1, "bnd for unknown cell");
      if (cells[id].boundary) throw ParseError(lineno, 1, "duplicate bnd line");
      std::vector<std::size_t> bnd;
      std::size_t f = 0;
      while (ls >> f) bnd.push_back(f);
      if (!ls.eof()) throw ParseError(lineno, 1, "bad cell id in bnd line");
      cells[id].boundary = std::move(bnd);
    } else {
      throw ParseError(lineno, 1, "unknown keyword '" + kw + "'");
    }
  }
  CWComplexMod2 out;
  for (auto& p : cells) {
    if (p.boundary || p.dim == 0) {
      try {
        out.add_cell(p.dim, p.label, p.boundary.value_or(std::vector<std::size_t>{}));
      } catch (const DomainError& e) {
        throw ParseError(0, 0, e.what());
      }
    } else {
      out.add_unattached_cell(p.dim, p.label);
    }
  }
  return out;
}

}  // namespace coxdiag
