#include "coxdiag/system_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "coxdiag/errors.hpp"

namespace coxdiag {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<long> to_int(std::string_view s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

CoxeterSystem parse_system(std::string_view text) {
  std::optional<std::size_t> rank;
  int rank_line = 0;
  std::vector<std::optional<std::string>> names;
  std::map<std::pair<std::size_t, std::size_t>, int> entries;
  std::map<std::string, std::size_t, std::less<>> by_name;
  // `m` lines may precede their `gen` lines; resolve names after the scan.
  struct Pending {
    int line;
    Token a, b;
    int value;
  };
  std::vector<Pending> pending;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const auto& kw = toks[0];
    auto expect_count = [&](std::size_t n) {
      if (toks.size() < n) {
        throw ParseError(lineno, static_cast<int>(line.size()) + 1,
                         "expected " + std::to_string(n - 1) + " arguments after '" +
                             std::string(kw.text) + "'");
      }
      if (toks.size() > n) throw ParseError(lineno, toks[n].column, "unexpected token");
    };
    if (kw.text == "rank") {
      expect_count(2);
      if (rank) throw ParseError(lineno, kw.column, "duplicate rank");
      const auto v = to_int(toks[1].text);
      if (!v || *v < 1 || *v > static_cast<long>(kMaxRank)) {
        throw ParseError(lineno, toks[1].column, "bad rank '" + std::string(toks[1].text) + "'");
      }
      rank = static_cast<std::size_t>(*v);
      rank_line = lineno;
      names.assign(*rank, std::nullopt);
    } else if (kw.text == "gen") {
      expect_count(3);
      if (!rank) throw ParseError(lineno, kw.column, "gen before rank");
      const auto v = to_int(toks[1].text);
      if (!v || *v < 0 || *v >= static_cast<long>(*rank)) {
        throw ParseError(lineno, toks[1].column, "bad generator index '" +
                                                     std::string(toks[1].text) + "'");
      }
      const auto idx = static_cast<std::size_t>(*v);
      if (names[idx]) throw ParseError(lineno, toks[1].column, "duplicate generator index");
      const std::string name(toks[2].text);
      if (by_name.count(name)) {
        throw ParseError(lineno, toks[2].column, "duplicate generator name '" + name + "'");
      }
      names[idx] = name;
      by_name.emplace(name, idx);
    } else if (kw.text == "m") {
      expect_count(4);
      int value = 0;
      if (toks[3].text == "inf") {
        value = kInfinity;
      } else {
        const auto v = to_int(toks[3].text);
        if (!v || *v < 2 || *v > 1000000) {
          throw ParseError(lineno, toks[3].column,
                           "bad m value '" + std::string(toks[3].text) + "'");
        }
        value = static_cast<int>(*v);
      }
      pending.push_back({lineno, toks[1], toks[2], value});
    } else {
      throw ParseError(lineno, kw.column, "unknown keyword '" + std::string(kw.text) + "'");
    }
  }

  if (!rank) throw ParseError(lineno, 1, "missing rank");
  for (std::size_t i = 0; i < *rank; ++i) {
    if (!names[i]) {
      throw ParseError(rank_line, 1, "generator " + std::to_string(i) + " undeclared");
    }
  }
  for (const auto& p : pending) {
    auto lookup = [&](const Token& t) {
      auto it = by_name.find(t.text);
      if (it == by_name.end()) {
        throw ParseError(p.line, t.column, "unknown generator '" + std::string(t.text) + "'");
      }
      return it->second;
    };
    std::size_t a = lookup(p.a);
    std::size_t b = lookup(p.b);
    if (a == b) throw ParseError(p.line, p.b.column, "m of a generator with itself");
    if (a > b) std::swap(a, b);
    if (!entries.emplace(std::pair{a, b}, p.value).second) {
      throw ParseError(p.line, p.a.column,
                       "duplicate pair " + *names[a] + "," + *names[b]);
    }
  }

  std::vector<std::vector<int>> m(*rank, std::vector<int>(*rank, 1));
  std::vector<std::string> final_names;
  for (std::size_t i = 0; i < *rank; ++i) final_names.push_back(*names[i]);
  for (std::size_t i = 0; i < *rank; ++i) {
    for (std::size_t j = i + 1; j < *rank; ++j) {
      auto it = entries.find({i, j});
      if (it == entries.end()) {
        throw ParseError(lineno, 1,
                         "pair " + final_names[i] + "," + final_names[j] + " unspecified");
      }
      m[i][j] = m[j][i] = it->second;
    }
  }
  return CoxeterSystem::from_matrix(std::move(m), std::move(final_names));
}

CoxeterSystem parse_system_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

std::string format_system(const CoxeterSystem& sys) {
  std::ostringstream out;
  out << "rank " << sys.rank() << '\n';
  for (std::size_t i = 0; i < sys.rank(); ++i) out << "gen " << i << ' ' << sys.name(i) << '\n';
  for (Generator i = 0; i < sys.rank(); ++i) {
    for (Generator j = i + 1; j < sys.rank(); ++j) {
      out << "m " << sys.name(i) << ' ' << sys.name(j) << ' ';
      if (sys.m(i, j) == kInfinity) out << "inf";
      else out << sys.m(i, j);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace coxdiag
