#include "coxdiag/diagram.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "coxdiag/errors.hpp"

namespace coxdiag {

namespace {

StrandWord pair_for(Generator s, Variant v, Mode mode) {
  if (mode == Mode::Unoriented) {
    if (v != Variant::None) throw DomainError("cup/cap variant in unoriented mode");
    return {{s, Sign::None}, {s, Sign::None}};
  }
  if (v == Variant::PlusMinus) return {{s, Sign::Plus}, {s, Sign::Minus}};
  if (v == Variant::MinusPlus) return {{s, Sign::Minus}, {s, Sign::Plus}};
  throw DomainError("oriented cup/cap needs a variant");
}

Sign mode_sign(Mode mode) { return mode == Mode::Oriented ? Sign::Plus : Sign::None; }

void check_strand_mode(Mode mode, const Strand& x) {
  if ((mode == Mode::Oriented) != (x.sign != Sign::None)) {
    throw DomainError("strand sign does not match diagram mode");
  }
}

}  // namespace

Symbol Symbol::vertex(Generator s, Generator t, int m, Direction dir) {
  if (s >= t) throw DomainError("vertex generators must be given in increasing order");
  if (m < 2 || m == kInfinity) throw DomainError("vertex needs a finite m >= 2");
  return {SymbolKind::Vertex, s, t, m, Variant::None, dir};
}

StrandWord alternating(Generator s, Generator t, int length, Sign sign) {
  StrandWord out;
  out.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) out.push_back({i % 2 == 0 ? s : t, sign});
  return out;
}

StrandWord Symbol::domain(Mode mode) const {
  switch (kind) {
    case SymbolKind::Cup:
      return {};
    case SymbolKind::Cap:
      return pair_for(s, variant, mode);
    case SymbolKind::Vertex:
      return dir == Direction::Forward ? alternating(s, t, m, mode_sign(mode))
                                       : alternating(t, s, m, mode_sign(mode));
  }
  return {};
}

StrandWord Symbol::codomain(Mode mode) const {
  switch (kind) {
    case SymbolKind::Cup:
      return pair_for(s, variant, mode);
    case SymbolKind::Cap:
      return {};
    case SymbolKind::Vertex:
      return dir == Direction::Forward ? alternating(t, s, m, mode_sign(mode))
                                       : alternating(s, t, m, mode_sign(mode));
  }
  return {};
}

std::size_t Symbol::domain_size() const {
  return kind == SymbolKind::Cup ? 0 : kind == SymbolKind::Cap ? 2 : static_cast<std::size_t>(m);
}

std::size_t Symbol::codomain_size() const {
  return kind == SymbolKind::Cap ? 0 : kind == SymbolKind::Cup ? 2 : static_cast<std::size_t>(m);
}

StrandWord apply_slice(Mode mode, const StrandWord& word, const Slice& slice) {
  const StrandWord in = slice.symbol.domain(mode);
  if (slice.offset + in.size() > word.size()) throw DomainError("slice extends past the word");
  if (!std::equal(in.begin(), in.end(), word.begin() + static_cast<std::ptrdiff_t>(slice.offset))) {
    throw DomainError("slice domain does not match the strands at offset " +
                      std::to_string(slice.offset));
  }
  const StrandWord out = slice.symbol.codomain(mode);
  StrandWord result;
  result.reserve(word.size() - in.size() + out.size());
  result.insert(result.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(slice.offset));
  result.insert(result.end(), out.begin(), out.end());
  result.insert(result.end(), word.begin() + static_cast<std::ptrdiff_t>(slice.offset + in.size()),
                word.end());
  return result;
}

Diagram::Diagram(ObjectWord domain, std::vector<Slice> slices)
    : domain_(std::move(domain)), slices_(std::move(slices)) {
  for (const Strand& x : domain_.strands) check_strand_mode(domain_.mode, x);
  StrandWord word = domain_.strands;
  for (const Slice& sl : slices_) word = apply_slice(domain_.mode, word, sl);
}

ObjectWord Diagram::codomain() const {
  StrandWord word = domain_.strands;
  for (const Slice& sl : slices_) word = apply_slice(domain_.mode, word, sl);
  return {domain_.mode, std::move(word)};
}

StrandWord Diagram::level(std::size_t i) const {
  StrandWord word = domain_.strands;
  for (std::size_t k = 0; k < i && k < slices_.size(); ++k) {
    word = apply_slice(domain_.mode, word, slices_[k]);
  }
  return word;
}

std::vector<StrandWord> Diagram::levels() const {
  std::vector<StrandWord> out{domain_.strands};
  out.reserve(slices_.size() + 1);
  for (const Slice& sl : slices_) out.push_back(apply_slice(domain_.mode, out.back(), sl));
  return out;
}

std::pair<ObjectWord, ObjectWord> boundary(const Diagram& d) {
  return {d.domain(), d.codomain()};
}

Diagram compose(const Diagram& first, const Diagram& second) {
  if (first.mode() != second.mode()) throw DomainError("mode mismatch in compose");
  if (first.codomain() != second.domain()) throw DomainError("boundary mismatch in compose");
  std::vector<Slice> slices = first.slices();
  slices.insert(slices.end(), second.slices().begin(), second.slices().end());
  return Diagram(first.domain(), std::move(slices));
}

Diagram tensor(const Diagram& left, const Diagram& right) {
  if (left.mode() != right.mode()) throw DomainError("mode mismatch in tensor");
  ObjectWord dom = left.domain();
  dom.strands.insert(dom.strands.end(), right.domain().strands.begin(),
                     right.domain().strands.end());
  std::vector<Slice> slices = left.slices();
  const std::size_t shift = left.codomain().size();
  for (Slice sl : right.slices()) {
    sl.offset += shift;
    slices.push_back(sl);
  }
  return Diagram(std::move(dom), std::move(slices));
}

void validate(const CoxeterSystem& sys, const Diagram& d) {
  for (const Strand& x : d.domain().strands) {
    if (x.gen >= sys.rank()) throw DomainError("strand generator out of range");
  }
  for (const Slice& sl : d.slices()) {
    const Symbol& sym = sl.symbol;
    if (sym.s >= sys.rank() || sym.t >= sys.rank()) {
      throw DomainError("slice generator out of range");
    }
    if (sym.kind == SymbolKind::Vertex && sys.m(sym.s, sym.t) != sym.m) {
      throw DomainError("vertex " + sys.name(sym.s) + "," + sys.name(sym.t) +
                        " has valence inconsistent with m");
    }
  }
}

Element group_image(const CoxeterSystem& sys, const StrandWord& word) {
  Word w;
  w.reserve(word.size());
  for (const Strand& x : word) w.push_back(x.gen);
  return normal_form(sys, w);
}

Element group_image(const CoxeterSystem& sys, const ObjectWord& word) {
  return group_image(sys, word.strands);
}

RegionLabeling label_regions(const CoxeterSystem& sys, const Diagram& d, const Element& leftmost) {
  RegionLabeling out;
  const auto levels = d.levels();
  for (const StrandWord& lv : levels) {
    std::vector<Element> row{leftmost};
    for (const Strand& x : lv) row.push_back(multiply_generator(sys, row.back(), x.gen));
    out.labels.push_back(std::move(row));
  }
  // Regions left of a slice are shared with the level below by construction;
  // regions to its right must agree too.
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Slice& sl = d.slices()[i];
    const auto& below = out.labels[i];
    const auto& above = out.labels[i + 1];
    const std::size_t right_below = sl.offset + sl.symbol.domain_size();
    const std::size_t right_above = sl.offset + sl.symbol.codomain_size();
    if (below.size() - right_below != above.size() - right_above) {
      throw InternalError("slice changes the number of pass-through regions");
    }
    for (std::size_t k = 0; right_below + k < below.size(); ++k) {
      if (below[right_below + k] != above[right_above + k]) {
        throw InternalError("inconsistent region labels across slice " + std::to_string(i));
      }
    }
  }
  return out;
}

ObjectWord forget_orientation(const ObjectWord& w) {
  if (w.mode != Mode::Oriented) throw DomainError("forget_orientation needs an oriented word");
  ObjectWord out{Mode::Unoriented, {}};
  for (const Strand& x : w.strands) out.strands.push_back({x.gen, Sign::None});
  return out;
}

Diagram forget_orientation(const Diagram& d) {
  ObjectWord dom = forget_orientation(d.domain());
  std::vector<Slice> slices = d.slices();
  for (Slice& sl : slices) sl.symbol.variant = Variant::None;
  return Diagram(std::move(dom), std::move(slices));
}

std::string format_strands(const CoxeterSystem& sys, const StrandWord& w) {
  std::string out;
  for (const Strand& x : w) {
    if (!out.empty()) out += ' ';
    out += sys.name(x.gen);
    if (x.sign == Sign::Plus) out += '+';
    if (x.sign == Sign::Minus) out += '-';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

Generator lookup(const CoxeterSystem& sys, std::string_view name, int line) {
  auto g = sys.find(name);
  if (!g) throw ParseError(line, 1, "unknown generator '" + std::string(name) + "'");
  return *g;
}

Strand parse_strand(const CoxeterSystem& sys, Mode mode, std::string_view tok, int line) {
  if (mode == Mode::Oriented) {
    if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-')) {
      throw ParseError(line, 1, "oriented strand '" + std::string(tok) + "' needs a sign");
    }
    const Sign sign = tok.back() == '+' ? Sign::Plus : Sign::Minus;
    return {lookup(sys, tok.substr(0, tok.size() - 1), line), sign};
  }
  return {lookup(sys, tok, line), Sign::None};
}

Variant parse_variant(std::string_view tok, int line) {
  if (tok == "+-") return Variant::PlusMinus;
  if (tok == "-+") return Variant::MinusPlus;
  throw ParseError(line, 1, "bad cup/cap variant '" + std::string(tok) + "'");
}

}  // namespace

StrandWord parse_strands(const CoxeterSystem& sys, Mode mode, std::string_view text) {
  StrandWord out;
  for (auto tok : split_ws(text)) out.push_back(parse_strand(sys, mode, tok, 1));
  return out;
}

std::string format_diagram(const CoxeterSystem& sys, const Diagram& d) {
  std::ostringstream out;
  out << "mode " << (d.mode() == Mode::Oriented ? "oriented" : "unoriented") << '\n';
  out << "domain";
  const std::string dom = format_strands(sys, d.domain().strands);
  if (!dom.empty()) out << ' ' << dom;
  out << '\n';
  for (const Slice& sl : d.slices()) {
    const Symbol& sym = sl.symbol;
    out << "slice " << sl.offset << ' ';
    if (sym.kind == SymbolKind::Vertex) {
      out << "bv " << sys.name(sym.s) << ' ' << sys.name(sym.t) << ' '
          << (sym.dir == Direction::Forward ? "fwd" : "bwd");
    } else {
      out << (sym.kind == SymbolKind::Cup ? "cup " : "cap ") << sys.name(sym.s);
      if (sym.variant == Variant::PlusMinus) out << " +-";
      if (sym.variant == Variant::MinusPlus) out << " -+";
    }
    out << '\n';
  }
  return out.str();
}

Diagram parse_diagram(const CoxeterSystem& sys, std::string_view text) {
  std::optional<Mode> mode;
  std::optional<StrandWord> domain;
  std::vector<Slice> slices;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "mode") {
      if (mode) throw ParseError(lineno, 1, "duplicate mode line");
      if (toks.size() != 2) throw ParseError(lineno, 1, "expected 'mode oriented|unoriented'");
      if (toks[1] == "oriented") mode = Mode::Oriented;
      else if (toks[1] == "unoriented") mode = Mode::Unoriented;
      else throw ParseError(lineno, 6, "unknown mode '" + std::string(toks[1]) + "'");
    } else if (toks[0] == "domain") {
      if (!mode) throw ParseError(lineno, 1, "domain before mode");
      if (domain) throw ParseError(lineno, 1, "duplicate domain line");
      domain.emplace();
      for (std::size_t i = 1; i < toks.size(); ++i) {
        domain->push_back(parse_strand(sys, *mode, toks[i], lineno));
      }
    } else if (toks[0] == "slice") {
      if (!domain) throw ParseError(lineno, 1, "slice before domain");
      if (toks.size() < 4) throw ParseError(lineno, 1, "truncated slice line");
      std::size_t offset = 0;
      try {
        std::size_t used = 0;
        offset = std::stoul(std::string(toks[1]), &used);
        if (used != toks[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(lineno, 7, "bad offset '" + std::string(toks[1]) + "'");
      }
      Symbol sym;
      if (toks[2] == "cup" || toks[2] == "cap") {
        const Generator s = lookup(sys, toks[3], lineno);
        Variant v = Variant::None;
        if (*mode == Mode::Oriented) {
          if (toks.size() != 5) throw ParseError(lineno, 1, "oriented cup/cap needs +- or -+");
          v = parse_variant(toks[4], lineno);
        } else if (toks.size() != 4) {
          throw ParseError(lineno, 1, "unoriented cup/cap takes no variant");
        }
        sym = toks[2] == "cup" ? Symbol::cup(s, v) : Symbol::cap(s, v);
      } else if (toks[2] == "bv") {
        if (toks.size() != 6) throw ParseError(lineno, 1, "expected 'bv <s> <t> fwd|bwd'");
        const Generator s = lookup(sys, toks[3], lineno);
        const Generator t = lookup(sys, toks[4], lineno);
        if (s >= t) {
          throw ParseError(lineno, 1, "bv generators must be listed in index order");
        }
        Direction dir;
        if (toks[5] == "fwd") dir = Direction::Forward;
        else if (toks[5] == "bwd") dir = Direction::Backward;
        else throw ParseError(lineno, 1, "expected fwd or bwd");
        const int m = sys.m(s, t);
        if (m == kInfinity) throw ParseError(lineno, 1, "no vertex for m = inf");
        sym = Symbol::vertex(s, t, m, dir);
      } else {
        throw ParseError(lineno, 1, "unknown symbol '" + std::string(toks[2]) + "'");
      }
      slices.push_back({offset, sym});
    } else {
      throw ParseError(lineno, 1, "unknown keyword '" + std::string(toks[0]) + "'");
    }
  }
  if (!mode) throw ParseError(lineno, 1, "missing mode line");
  if (!domain) throw ParseError(lineno, 1, "missing domain line");
  Diagram d(ObjectWord{*mode, std::move(*domain)}, std::move(slices));
  validate(sys, d);
  return d;
}

std::string encode(const Diagram& d) {
  std::string out;
  out.reserve(2 + 2 * d.domain().size() + 7 * d.size());
  out.push_back(static_cast<char>(d.mode()));
  out.push_back(static_cast<char>(d.domain().size()));
  for (const Strand& x : d.domain().strands) {
    out.push_back(static_cast<char>(x.gen));
    out.push_back(static_cast<char>(x.sign));
  }
  for (const Slice& sl : d.slices()) {
    out.push_back(static_cast<char>(sl.offset));
    out.push_back(static_cast<char>(sl.symbol.kind));
    out.push_back(static_cast<char>(sl.symbol.s));
    out.push_back(static_cast<char>(sl.symbol.t));
    out.push_back(static_cast<char>(sl.symbol.m));
    out.push_back(static_cast<char>(sl.symbol.variant));
    out.push_back(static_cast<char>(sl.symbol.dir));
  }
  return out;
}

}  // namespace coxdiag
