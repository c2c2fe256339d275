#include "coxdiag/rewrite.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "coxdiag/errors.hpp"
#include "coxdiag/parabolic.hpp"

namespace coxdiag {

std::string_view family_name(RuleFamily f) {
  switch (f) {
    case RuleFamily::Interchange: return "interchange";
    case RuleFamily::ZigZag: return "zigzag";
    case RuleFamily::Cyclicity: return "cyclicity";
    case RuleFamily::Bridge: return "bridge";
    case RuleFamily::CircleRemove: return "circle-remove";
    case RuleFamily::CancelVertexPair: return "cancel-vertex-pair";
    case RuleFamily::UnorientedFenn: return "unoriented-fenn";
    case RuleFamily::Zamolodzhikov: return "zamolodzhikov";
  }
  return "?";
}

namespace {

Variant variant_of(const Strand& left, Mode mode) {
  if (mode == Mode::Unoriented) return Variant::None;
  return left.sign == Sign::Plus ? Variant::PlusMinus : Variant::MinusPlus;
}

Slice cup_of(const Strand& left, std::size_t offset, Mode mode) {
  return {offset, Symbol::cup(left.gen, variant_of(left, mode))};
}

Slice cap_of(const Strand& left, std::size_t offset, Mode mode) {
  return {offset, Symbol::cap(left.gen, variant_of(left, mode))};
}

Diagram pattern(Mode mode, StrandWord dom, std::vector<Slice> slices) {
  return Diagram(ObjectWord{mode, std::move(dom)}, std::move(slices));
}

StrandWord dual_reversed(const StrandWord& w) {
  StrandWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->dual());
  return out;
}

std::string sign_suffix(Sign s) {
  return s == Sign::Plus ? "+" : s == Sign::Minus ? "-" : "";
}

std::string variant_suffix(Variant v) {
  return v == Variant::PlusMinus ? "+-" : v == Variant::MinusPlus ? "-+" : "";
}

void add_strand_rules(const CoxeterSystem& sys, Mode mode, Generator s,
                      std::vector<RewriteRule>& out) {
  const std::string& name = sys.name(s);
  std::vector<Sign> signs = mode == Mode::Oriented ? std::vector<Sign>{Sign::Plus, Sign::Minus}
                                                   : std::vector<Sign>{Sign::None};
  for (Sign sg : signs) {
    const Strand x{s, sg};
    const Strand xb = x.dual();
    // Cup to the right of x, then cap joining x to the cup's left leg.
    out.push_back({"zigzag-l:" + name + sign_suffix(sg), RuleFamily::ZigZag, "",
                   pattern(mode, {x}, {cup_of(xb, 1, mode), cap_of(x, 0, mode)}),
                   pattern(mode, {x}, {})});
    out.push_back({"zigzag-r:" + name + sign_suffix(sg), RuleFamily::ZigZag, "",
                   pattern(mode, {x}, {cup_of(x, 0, mode), cap_of(xb, 1, mode)}),
                   pattern(mode, {x}, {})});
  }
  if (mode == Mode::Oriented) {
    for (Variant v : {Variant::PlusMinus, Variant::MinusPlus}) {
      const Strand left{s, v == Variant::PlusMinus ? Sign::Plus : Sign::Minus};
      const StrandWord pair{left, left.dual()};
      out.push_back({"circle:" + name + ":" + variant_suffix(v), RuleFamily::CircleRemove, "",
                     pattern(mode, {}, {cup_of(left, 0, mode), cap_of(left, 0, mode)}),
                     pattern(mode, {}, {})});
      out.push_back({"bridge:" + name + ":" + variant_suffix(v), RuleFamily::Bridge, "",
                     pattern(mode, pair, {cap_of(left, 0, mode), cup_of(left, 0, mode)}),
                     pattern(mode, pair, {})});
    }
  } else {
    const Strand x{s, Sign::None};
    out.push_back({"fenn-circle:" + name, RuleFamily::UnorientedFenn, "",
                   pattern(mode, {}, {cup_of(x, 0, mode), cap_of(x, 0, mode)}),
                   pattern(mode, {}, {})});
    out.push_back({"fenn-bridge:" + name, RuleFamily::UnorientedFenn, "",
                   pattern(mode, {x, x}, {cap_of(x, 0, mode), cup_of(x, 0, mode)}),
                   pattern(mode, {x, x}, {})});
  }
}

void add_pair_rules(const CoxeterSystem& sys, Mode mode, Generator s, Generator t,
                    std::vector<RewriteRule>& out) {
  const int m = sys.m(s, t);
  const auto mu = static_cast<std::size_t>(m);
  const std::string pair = sys.name(s) + "," + sys.name(t);
  const Symbol fwd = Symbol::vertex(s, t, m, Direction::Forward);
  const Symbol bwd = Symbol::vertex(s, t, m, Direction::Backward);

  out.push_back({"cancel:" + pair + ":fb", RuleFamily::CancelVertexPair, "",
                 pattern(mode, fwd.domain(mode), {{0, fwd}, {0, bwd}}),
                 pattern(mode, fwd.domain(mode), {})});
  out.push_back({"cancel:" + pair + ":bf", RuleFamily::CancelVertexPair, "",
                 pattern(mode, bwd.domain(mode), {{0, bwd}, {0, fwd}}),
                 pattern(mode, bwd.domain(mode), {})});

  for (const Symbol& v : {fwd, bwd}) {
    const Symbol opposite = v.dir == Direction::Forward ? bwd : fwd;
    const StrandWord a = v.domain(mode);
    const StrandWord b = v.codomain(mode);
    const std::string tag = pair + (v.dir == Direction::Forward ? ":fwd" : ":bwd");
    if (mode == Mode::Unoriented) {
      // One click of rotation turns the vertex into the opposite one.
      StrandWord left_dom(a.begin() + 1, a.end());
      left_dom.push_back(b.back());
      out.push_back({"cyc-l:" + tag, RuleFamily::Cyclicity, "",
                     pattern(mode, left_dom,
                             {cup_of(a.front(), 0, mode), {1, v}, cap_of(b.back(), mu, mode)}),
                     pattern(mode, left_dom, {{0, opposite}})});
      StrandWord right_dom{b.front()};
      right_dom.insert(right_dom.end(), a.begin(), a.end() - 1);
      out.push_back({"cyc-r:" + tag, RuleFamily::Cyclicity, "",
                     pattern(mode, right_dom,
                             {cup_of(a.back(), mu, mode), {1, v}, cap_of(b.front(), 0, mode)}),
                     pattern(mode, right_dom, {{0, opposite}})});
    } else {
      // Strands keep their orientation, so the vertex only returns to itself
      // after a half turn: the left and right mates agree.
      const StrandWord b_star = dual_reversed(b);
      std::vector<Slice> left;
      for (std::size_t k = 0; k < mu; ++k) left.push_back(cup_of(a[mu - 1 - k].dual(), k, mode));
      left.push_back({mu, v});
      for (std::size_t k = 0; k < mu; ++k) left.push_back(cap_of(b[mu - 1 - k], 2 * mu - 1 - k, mode));
      std::vector<Slice> right;
      for (std::size_t k = 0; k < mu; ++k) right.push_back(cup_of(a[k], mu + k, mode));
      right.push_back({mu, v});
      for (std::size_t k = 0; k < mu; ++k) right.push_back(cap_of(b[k].dual(), mu - 1 - k, mode));
      out.push_back({"mate:" + tag, RuleFamily::Cyclicity, "", pattern(mode, b_star, left),
                     pattern(mode, b_star, right)});
    }
  }
}

std::size_t signed_delta(std::size_t base, std::size_t minus, std::size_t plus) {
  return base - minus + plus;
}

}  // namespace

RuleCatalog::RuleCatalog(const CoxeterSystem& sys, Mode mode) : sys_(sys), mode_(mode) {
  std::vector<RewriteRule> rules;
  for (Generator s = 0; s < sys_.rank(); ++s) add_strand_rules(sys_, mode_, s, rules);
  for (Generator s = 0; s < sys_.rank(); ++s) {
    for (Generator t = s + 1; t < sys_.rank(); ++t) {
      if (sys_.m(s, t) != kInfinity) add_pair_rules(sys_, mode_, s, t, rules);
    }
  }
  for (auto& r : rules) add(std::move(r));
}

const RewriteRule* RuleCatalog::find(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &rules_[it->second];
}

void RuleCatalog::add(RewriteRule rule) {
  if (rule.id == kInterchangeId || index_.count(rule.id)) {
    throw DomainError("duplicate rule id '" + rule.id + "'");
  }
  if (rule.id.find_first_of(" \t\n") != std::string::npos) {
    throw DomainError("rule id '" + rule.id + "' contains whitespace");
  }
  if (rule.lhs.mode() != mode_ || rule.rhs.mode() != mode_) {
    throw DomainError("rule '" + rule.id + "' has the wrong mode");
  }
  if (!check_rule_soundness(sys_, rule)) throw DomainError("rule '" + rule.id + "' is unsound");
  if (rule.lhs.size() < rule.rhs.size()) std::swap(rule.lhs, rule.rhs);
  index_.emplace(rule.id, rules_.size());
  rules_.push_back(std::move(rule));
}

bool can_pass_left(const Slice& lower, const Slice& upper) {
  return upper.offset + upper.symbol.domain_size() <= lower.offset;
}

bool can_pass_right(const Slice& lower, const Slice& upper) {
  return upper.offset >= lower.offset + lower.symbol.codomain_size();
}

std::pair<Slice, Slice> interchange(const Slice& lower, const Slice& upper, Direction dir) {
  if (dir == Direction::Forward) {
    if (!can_pass_left(lower, upper)) throw DomainError("slices do not interchange leftwards");
    Slice a = lower;
    a.offset = signed_delta(lower.offset, upper.symbol.domain_size(), upper.symbol.codomain_size());
    return {upper, a};
  }
  if (!can_pass_right(lower, upper)) throw DomainError("slices do not interchange rightwards");
  Slice b = upper;
  b.offset = signed_delta(upper.offset, lower.symbol.codomain_size(), lower.symbol.domain_size());
  return {b, lower};
}

namespace {

const RewriteRule& rule_or_throw(const RuleCatalog& catalog, std::string_view id) {
  const RewriteRule* r = catalog.find(id);
  if (!r) throw DomainError("unknown rule '" + std::string(id) + "'");
  return *r;
}

bool window_matches(const StrandWord& level, std::size_t offset, const StrandWord& want) {
  if (offset + want.size() > level.size()) return false;
  return std::equal(want.begin(), want.end(), level.begin() + static_cast<std::ptrdiff_t>(offset));
}

bool slices_match(const std::vector<Slice>& slices, std::size_t i, const Diagram& pat,
                  std::size_t offset) {
  const auto& ps = pat.slices();
  if (i + ps.size() > slices.size()) return false;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    if (slices[i + j].symbol != ps[j].symbol) return false;
    if (slices[i + j].offset != offset + ps[j].offset) return false;
  }
  return true;
}

}  // namespace

Diagram apply_move(const RuleCatalog& catalog, const Diagram& d, const Move& move) {
  if (move.rule == kInterchangeId) {
    if (move.slice + 1 >= d.size()) throw DomainError("interchange past the last slice");
    const Slice& lower = d.slices()[move.slice];
    if (lower.offset != move.offset) throw DomainError("interchange offset mismatch");
    auto [a, b] = interchange(lower, d.slices()[move.slice + 1], move.dir);
    auto slices = d.slices();
    slices[move.slice] = a;
    slices[move.slice + 1] = b;
    return Diagram(d.domain(), std::move(slices));
  }
  const RewriteRule& rule = rule_or_throw(catalog, move.rule);
  const Diagram& src = move.dir == Direction::Forward ? rule.lhs : rule.rhs;
  const Diagram& dst = move.dir == Direction::Forward ? rule.rhs : rule.lhs;
  if (d.mode() != src.mode()) throw DomainError("rule mode does not match diagram");
  if (move.slice > d.size()) throw DomainError("move slice index out of range");
  const StrandWord level = d.level(move.slice);
  if (!window_matches(level, move.offset, src.domain().strands) ||
      !slices_match(d.slices(), move.slice, src, move.offset)) {
    throw DomainError("rule '" + move.rule + "' does not match at slice " +
                      std::to_string(move.slice) + ", offset " + std::to_string(move.offset));
  }
  std::vector<Slice> slices(d.slices().begin(),
                            d.slices().begin() + static_cast<std::ptrdiff_t>(move.slice));
  for (Slice sl : dst.slices()) {
    sl.offset += move.offset;
    slices.push_back(sl);
  }
  slices.insert(slices.end(),
                d.slices().begin() + static_cast<std::ptrdiff_t>(move.slice + src.size()),
                d.slices().end());
  return Diagram(d.domain(), std::move(slices));
}

std::vector<Move> enumerate_moves(const RuleCatalog& catalog, const Diagram& d, RuleSet set) {
  std::vector<Move> out;
  if (d.mode() != catalog.mode()) return out;
  const auto levels = d.levels();
  const auto& slices = d.slices();
  for (const RewriteRule& rule : catalog.rules()) {
    const bool contraction = rule.is_contraction();
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
      const bool allowed = contraction ? (dir == Direction::Forward ? set.contractions : set.expansions)
                                       : set.neutral;
      if (!allowed) continue;
      const Diagram& src = dir == Direction::Forward ? rule.lhs : rule.rhs;
      const StrandWord& want = src.domain().strands;
      if (src.size() == 0) {
        for (std::size_t i = 0; i < levels.size(); ++i) {
          if (levels[i].size() < want.size()) continue;
          for (std::size_t o = 0; o + want.size() <= levels[i].size(); ++o) {
            if (window_matches(levels[i], o, want)) out.push_back({rule.id, i, o, dir});
          }
        }
        continue;
      }
      const Slice& first = src.slices().front();
      for (std::size_t i = 0; i + src.size() <= slices.size(); ++i) {
        if (slices[i].symbol != first.symbol || slices[i].offset < first.offset) continue;
        const std::size_t o = slices[i].offset - first.offset;
        if (slices_match(slices, i, src, o) && window_matches(levels[i], o, want)) {
          out.push_back({rule.id, i, o, dir});
        }
      }
    }
  }
  if (set.interchange) {
    for (std::size_t i = 0; i + 1 < slices.size(); ++i) {
      if (can_pass_left(slices[i], slices[i + 1])) {
        out.push_back({std::string(kInterchangeId), i, slices[i].offset, Direction::Forward});
      }
      if (can_pass_right(slices[i], slices[i + 1])) {
        out.push_back({std::string(kInterchangeId), i, slices[i].offset, Direction::Backward});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) {
    return std::tie(a.slice, a.offset, a.rule, a.dir) < std::tie(b.slice, b.offset, b.rule, b.dir);
  });
  return out;
}

Move inverse_move(const Diagram& before, const Move& move) {
  Move inv = move;
  inv.dir = move.dir == Direction::Forward ? Direction::Backward : Direction::Forward;
  if (move.rule == kInterchangeId) {
    if (move.slice + 1 >= before.size()) throw DomainError("interchange past the last slice");
    auto [a, b] = interchange(before.slices()[move.slice], before.slices()[move.slice + 1],
                              move.dir);
    (void)b;
    inv.offset = a.offset;
  }
  return inv;
}

Diagram replay(const RuleCatalog& catalog, Diagram d, const Certificate& cert) {
  for (const Move& m : cert) d = apply_move(catalog, d, m);
  return d;
}

Certificate reverse_certificate(const RuleCatalog& catalog, const Diagram& start,
                                const Certificate& cert) {
  std::vector<Diagram> before;
  before.reserve(cert.size());
  Diagram d = start;
  for (const Move& m : cert) {
    before.push_back(d);
    d = apply_move(catalog, d, m);
  }
  Certificate out;
  out.reserve(cert.size());
  for (std::size_t k = cert.size(); k-- > 0;) out.push_back(inverse_move(before[k], cert[k]));
  return out;
}

bool check_rule_soundness(const CoxeterSystem& sys, const RewriteRule& rule) {
  try {
    if (rule.lhs.mode() != rule.rhs.mode()) return false;
    if (rule.lhs.domain() != rule.rhs.domain()) return false;
    if (rule.lhs.codomain() != rule.rhs.codomain()) return false;
    validate(sys, rule.lhs);
    validate(sys, rule.rhs);
    for (const Diagram* side : {&rule.lhs, &rule.rhs}) {
      for (const Slice& sl : side->slices()) {
        if (group_image(sys, sl.symbol.domain(side->mode())) !=
            group_image(sys, sl.symbol.codomain(side->mode()))) {
          return false;
        }
      }
    }
    return group_image(sys, rule.lhs.domain()) == group_image(sys, rule.lhs.codomain());
  } catch (const DomainError&) {
    return false;
  }
}

namespace {

std::vector<Slice> path_slices(const CoxeterSystem& sys, Word w, const std::vector<BraidMove>& path) {
  std::vector<Slice> out;
  for (const BraidMove& mv : path) {
    const Generator lo = std::min(mv.s, mv.t);
    const Generator hi = std::max(mv.s, mv.t);
    const Direction dir = mv.s == lo ? Direction::Forward : Direction::Backward;
    out.push_back({mv.position, Symbol::vertex(lo, hi, sys.m(lo, hi), dir)});
    w = apply_braid_move(sys, w, mv);
  }
  return out;
}

}  // namespace

RewriteRule install_zamolodzhikov(const CoxeterSystem& sys, const ZamRelation& rel, Mode mode) {
  if (!verify_zamolodzhikov(sys, rel)) throw DomainError("Zamolodzhikov relation does not verify");
  const Sign sign = mode == Mode::Oriented ? Sign::Plus : Sign::None;
  StrandWord dom;
  for (Generator g : rel.a) dom.push_back({g, sign});
  RewriteRule rule;
  rule.family = RuleFamily::Zamolodzhikov;
  rule.type_tag = zam_type_tag(sys, rel.subset);
  rule.id = "zam:" + rule.type_tag + ":";
  bool first = true;
  for (Generator g : rel.subset.members()) {
    if (!first) rule.id += ',';
    rule.id += sys.name(g);
    first = false;
  }
  rule.lhs = pattern(mode, dom, path_slices(sys, rel.a, rel.path1));
  rule.rhs = pattern(mode, dom, path_slices(sys, rel.a, rel.path2));
  if (rule.lhs.size() < rule.rhs.size()) std::swap(rule.lhs, rule.rhs);
  return rule;
}

RewriteRule forget_orientation(const RewriteRule& rule) {
  RewriteRule out = rule;
  if (rule.lhs.mode() == Mode::Oriented) {
    out.lhs = forget_orientation(rule.lhs);
    out.rhs = forget_orientation(rule.rhs);
  }
  return out;
}

std::string format_certificate(const Certificate& cert) {
  std::ostringstream out;
  for (const Move& m : cert) {
    out << m.rule << ' ' << m.slice << ' ' << m.offset << ' '
        << (m.dir == Direction::Forward ? "fwd" : "bwd") << '\n';
  }
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  Certificate out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    Move m;
    std::string dir;
    if (!(ls >> m.rule)) continue;
    if (!(ls >> m.slice >> m.offset >> dir)) {
      throw ParseError(lineno, 1, "expected '<rule> <slice> <offset> fwd|bwd'");
    }
    if (dir == "fwd") m.dir = Direction::Forward;
    else if (dir == "bwd") m.dir = Direction::Backward;
    else throw ParseError(lineno, 1, "expected fwd or bwd, got '" + dir + "'");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, 1, "trailing token '" + extra + "'");
    out.push_back(std::move(m));
  }
  return out;
}

void install_all_zamolodzhikov(RuleCatalog& catalog, const ZamSearchOptions& options) {
  const CoxeterSystem& sys = catalog.system();
  for (GeneratorSet subset : finitary_subsets(sys, sys.all())) {
    if (subset.size() != 3) continue;
    const ZamRelation rel = generate_zamolodzhikov(sys, subset, options);
    catalog.add(install_zamolodzhikov(sys, rel, catalog.mode()));
  }
}

}  // namespace coxdiag
