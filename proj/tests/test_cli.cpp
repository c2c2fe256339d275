#include <doctest.h>
#include <stdlib.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dot_check.hpp"

using coxdiag::cli::kExitDomain;
using coxdiag::cli::kExitOk;
using coxdiag::cli::kExitUsage;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = coxdiag::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COXDIAG_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "coxdiag_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) return true;
  }
  return false;
}

// Unsets the budget variable for the duration of a test.
struct BudgetEnv {
  explicit BudgetEnv(const char* value = nullptr) {
    if (value) {
      setenv(coxdiag::cli::kBudgetEnv, value, 1);
    } else {
      unsetenv(coxdiag::cli::kBudgetEnv);
    }
  }
  ~BudgetEnv() { unsetenv(coxdiag::cli::kBudgetEnv); }
};

}  // namespace

TEST_CASE("budget parsing") {
  using coxdiag::cli::parse_budget;
  CHECK(parse_budget("1000000").nodes == 1000000u);
  CHECK_FALSE(parse_budget("1000000").seconds.has_value());
  CHECK(parse_budget("600s").seconds == 600.0);
  CHECK(parse_budget("1.5s").seconds == 1.5);
  for (const char* bad : {"", "s", "0", "-3", "12x", "1e6", "0s", "abc s", "5 s"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_budget(bad), std::invalid_argument);
  }
}

TEST_CASE("group info reports rank, order and finitary subsets") {
  const auto r = cli({"group", "info", "--system", data("a3.cox")});
  REQUIRE(r.code == kExitOk);
  CHECK(has_line(r.out, "rank: 3"));
  CHECK(has_line(r.out, "order: 24"));
  CHECK(has_line(r.out, "type: A3"));
  CHECK(has_line(r.out, "finitary: {s1,s3} A1xA1 4"));
  CHECK(has_line(r.out, "finitary: {s1,s2,s3} A3 24"));

  const auto inf = cli({"group", "info", "--system", data("i2_inf.cox")});
  REQUIRE(inf.code == kExitOk);
  CHECK(has_line(inf.out, "order: inf"));
  CHECK(has_line(inf.out, "m: s t inf"));
  CHECK_FALSE(has_line(inf.out, "finitary: {s,t} I2(inf) infinite"));
}

TEST_CASE("group enumerate and normal-form") {
  const auto r = cli({"group", "enumerate", "--system", data("b3.cox"), "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 48);
  CHECK(j["elements"].size() == 48u);
  CHECK(j["elements"][0]["word"] == "e");

  const auto sub = cli({"group", "enumerate", "--system", data("a3.cox"), "--subset", "{s1,s2}"});
  CHECK(sub.code == kExitOk);
  CHECK(has_line(sub.out, "order: 6"));

  const auto inf = cli({"group", "enumerate", "--system", data("i2_inf.cox")});
  CHECK(inf.code == kExitDomain);
  CHECK(inf.err.find("infinite") != std::string::npos);

  const auto nf = cli({"group", "normal-form", "--system", data("a2.cox"), "--word", "t s t"});
  REQUIRE(nf.code == kExitOk);
  CHECK(has_line(nf.out, "normal: s t s"));
  CHECK(has_line(nf.out, "length: 3"));
  CHECK(has_line(nf.out, "left_descents: {s,t}"));
}

TEST_CASE("word subcommands") {
  const auto r = cli({"word", "reduce", "--system", data("a3.cox"), "--word", "s1 s1 s2"});
  REQUIRE(r.code == kExitOk);
  CHECK(has_line(r.out, "normal: s2"));
  CHECK(has_line(r.out, "length: 1"));
  CHECK(has_line(r.out, "input_reduced: false"));

  const auto id = cli({"word", "reduce", "--system", data("a2.cox"), "--word", "s t s t s t"});
  CHECK(has_line(id.out, "normal: e"));

  const auto eq = cli({"word", "equal", "--system", data("a2.cox"), "--word", "s t s", "--other",
                       "t s t"});
  CHECK(has_line(eq.out, "equal: true"));
  const auto neq = cli({"word", "equal", "--system", data("a2.cox"), "--word", "s", "--other", "t"});
  CHECK(has_line(neq.out, "equal: false"));

  // Equal in W but not in the positive monoid.
  const auto pos = cli({"word", "positive-equal", "--system", data("a2.cox"), "--word", "s s",
                        "--other", "t t"});
  CHECK(pos.code == kExitOk);
  CHECK(has_line(pos.out, "equal: false"));
  const auto pos2 = cli({"word", "positive-equal", "--system", data("i2_inf.cox"), "--word",
                         "s t s", "--other", "s t s"});
  CHECK(has_line(pos2.out, "equal: true"));

  const auto bad = cli({"word", "reduce", "--system", data("a2.cox"), "--word", "s q"});
  CHECK(bad.code == kExitDomain);
  CHECK(bad.err.find("unknown generator") != std::string::npos);
}

TEST_CASE("DOT output is valid DOT") {
  CHECK(dotcheck::check_dot("graph g { a -- b [label=\"x\"]; }").empty());
  CHECK_FALSE(dotcheck::check_dot("graph g { a -> b }").empty());
  CHECK_FALSE(dotcheck::check_dot("graph g { a -- }").empty());
  CHECK_FALSE(dotcheck::check_dot("graph g { \"a }").empty());

  const auto g = cli({"word", "graph", "--system", data("a3.cox"), "--word", "s1 s2 s1 s3 s2 s1",
                      "--emit", "dot"});
  REQUIRE(g.code == kExitOk);
  CHECK(dotcheck::check_dot(g.out) == "");
  const auto text = cli({"word", "graph", "--system", data("a3.cox"), "--word", "s1 s2 s1 s3 s2 s1"});
  CHECK(has_line(text.out, "vertices: 16"));
  CHECK(has_line(text.out, "connected: true"));

  for (const char* kind : {"dual", "dual-completed", "coxeter", "salvetti", "bw", "presentation",
                           "cover"}) {
    CAPTURE(kind);
    const auto c = cli({"complex", "build", "--system", data("b3.cox"), "--kind", kind, "--emit",
                        "dot"});
    REQUIRE(c.code == kExitOk);
    CHECK(dotcheck::check_dot(c.out) == "");
  }
}

TEST_CASE("complex build, dump and homology agree") {
  const auto path = scratch("h3_dual.cells");
  const auto b = cli({"complex", "build", "--system", data("h3.cox"), "--kind", "dual-completed",
                      "--output", path.string()});
  REQUIRE(b.code == kExitOk);
  const std::string dump = slurp(path);
  CHECK(has_line(dump, "# counts: 120 180 62 1"));

  const auto from_file = cli({"complex", "homology", "--complex", path.string()});
  REQUIRE(from_file.code == kExitOk);
  CHECK(has_line(from_file.out, "betti_mod2: 1 0 0 0"));
  CHECK(has_line(from_file.out, "euler: 1"));

  const auto sphere = cli({"complex", "homology", "--system", data("h3.cox"), "--kind", "dual"});
  CHECK(has_line(sphere.out, "betti_mod2: 1 0 1"));

  const auto sal = cli({"complex", "homology", "--system", data("a3.cox"), "--kind", "salvetti",
                        "--format", "json"});
  REQUIRE(sal.code == kExitOk);
  const auto j = nlohmann::json::parse(sal.out);
  CHECK(j["counts"] == nlohmann::json({24, 72, 72, 24}));
  CHECK(j["betti_mod2"][0] == 1);
  CHECK(j["betti_mod2"][3].is_null());

  CHECK(cli({"complex", "homology", "--kind", "dual"}).code == kExitUsage);
  CHECK(cli({"complex", "homology"}).code == kExitUsage);
  CHECK(cli({"complex", "build", "--system", data("a2.cox"), "--kind", "torus"}).code ==
        kExitUsage);

  const auto bad = scratch("bad.cells");
  // The 2-cell's boundary is an arc, so the boundary of its boundary is nonzero.
  std::ofstream(bad) << "cell 0 0 a\ncell 0 1 b\ncell 1 2 e\ncell 2 3 f\nbnd 2 0 1\nbnd 3 2\n";
  const auto r = cli({"complex", "homology", "--complex", bad.string()});
  CHECK(r.code == kExitDomain);
}

TEST_CASE("complex census for the pancake example") {
  const auto full = cli({"complex", "census", "--system", data("a2.cox")});
  REQUIRE(full.code == kExitOk);
  CHECK(has_line(full.out, "z: 12"));
  CHECK(has_line(full.out, "rotation: 6"));
  CHECK(has_line(full.out, "flip: 6"));
  const auto pruned = cli({"complex", "census", "--system", data("a2.cox"), "--pruned"});
  CHECK(has_line(pruned.out, "kept_z: 6"));
  CHECK(has_line(pruned.out, "kept_rotation_flip: 5"));
  CHECK(cli({"complex", "census", "--system", data("i2_inf.cox")}).code == kExitDomain);
}

TEST_CASE("diagram subcommands") {
  const auto sys = data("a2.cox");
  const auto check = cli({"diagram", "check", "--system", sys, "--diagram", data("a2_cancel.dia")});
  REQUIRE(check.code == kExitOk);
  CHECK(has_line(check.out, "domain: s+ t+ s+"));
  CHECK(has_line(check.out, "slices: 2"));

  const auto eq = cli({"diagram", "equal", "--system", sys, "--diagram", data("a2_cancel.dia"),
                       "--other", data("a2_identity.dia")});
  REQUIRE(eq.code == kExitOk);
  CHECK(has_line(eq.out, "status: proven"));

  const auto mismatch = cli({"diagram", "equal", "--system", sys, "--diagram",
                             data("a2_cancel.dia"), "--other", data("a2_other_boundary.dia")});
  CHECK(has_line(mismatch.out, "status: boundary-mismatch"));

  const auto norm = cli({"diagram", "normalize", "--system", sys, "--diagram", data("a2_snake.dia")});
  REQUIRE(norm.code == kExitOk);
  CHECK(has_line(norm.out, "# slices_after: 0"));

  const auto forgot = cli({"diagram", "forget-orientation", "--system", sys, "--diagram",
                           data("a2_cancel.dia"), "--format", "json"});
  REQUIRE(forgot.code == kExitOk);
  const auto j = nlohmann::json::parse(forgot.out);
  const auto path = scratch("forgot.dia");
  std::ofstream(path) << j["diagram"].get<std::string>();
  const auto again = cli({"diagram", "forget-orientation", "--system", sys, "--diagram",
                          path.string()});
  CHECK(again.code == kExitDomain);
  const auto unoriented = cli({"diagram", "check", "--system", sys, "--diagram", path.string()});
  CHECK(has_line(unoriented.out, "mode: unoriented"));

  const auto bad = scratch("bad.dia");
  std::ofstream(bad) << "mode oriented\ndomain s+ t+\nslice 0 bv s t fwd\n";
  CHECK(cli({"diagram", "check", "--system", sys, "--diagram", bad.string()}).code == kExitDomain);
}

TEST_CASE("budgets from flags and the environment") {
  const std::vector<std::string> base = {"diagram", "equal", "--system", data("a2.cox"),
                                         "--diagram", data("a2_cancel.dia"), "--other",
                                         data("a2_identity.dia")};
  {
    BudgetEnv env("1");
    const auto r = cli(base);
    REQUIRE(r.code == kExitOk);
    CHECK(has_line(r.out, "status: inconclusive"));
    auto flagged = base;
    flagged.insert(flagged.end(), {"--budget", "1000"});
    CHECK(has_line(cli(flagged).out, "status: proven"));
  }
  {
    BudgetEnv env("5s");
    CHECK(has_line(cli(base).out, "status: proven"));
  }
  {
    BudgetEnv env("lots");
    const auto r = cli(base);
    CHECK(r.code == kExitUsage);
    CHECK(r.out.empty());
  }
  BudgetEnv env;
  auto bad = base;
  bad.insert(bad.end(), {"--budget", "-1"});
  CHECK(cli(bad).code == kExitUsage);
}

TEST_CASE("zam generate, verify and install-dump") {
  BudgetEnv env;
  const auto path = scratch("b3.zam");
  const auto gen = cli({"zam", "generate", "--system", data("b3.cox"), "--triple", "s1,s2,s3",
                        "--seed", "7", "--output", path.string()});
  REQUIRE(gen.code == kExitOk);
  const std::string text = slurp(path);
  CHECK(has_line(text, "# faces: 26"));
  CHECK(has_line(text, "# verified: true"));

  const auto ver = cli({"zam", "verify", "--system", data("b3.cox"), "--relation", path.string()});
  REQUIRE(ver.code == kExitOk);
  CHECK(has_line(ver.out, "verified: true"));

  // Dropping the last move of one path breaks the relation.
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) lines.push_back(l);
  }
  const auto broken = scratch("b3_broken.zam");
  {
    std::ofstream out(broken);
    bool dropped = false;
    for (std::size_t i = lines.size(); i-- > 0;) {
      if (!dropped && lines[i].rfind("p2 ", 0) == 0) {
        lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(i));
        dropped = true;
      }
    }
    REQUIRE(dropped);
    for (const auto& l : lines) out << l << '\n';
  }
  const auto bad = cli({"zam", "verify", "--system", data("b3.cox"), "--relation", broken.string()});
  CHECK(bad.code == kExitDomain);

  const auto exhausted = cli({"zam", "generate", "--system", data("b3.cox"), "--triple",
                              "s1,s2,s3", "--budget", "1"});
  CHECK(exhausted.code == kExitDomain);
  CHECK(has_line(exhausted.out, "status: budget-exhausted"));

  const auto h3 = cli({"zam", "generate", "--system", data("h3.cox"), "--triple", "s1,s2,s3",
                       "--budget", "600s", "--seed", "7"});
  REQUIRE(h3.code == kExitOk);
  CHECK(has_line(h3.out, "# faces: 62"));

  for (const char* mode : {"oriented", "unoriented"}) {
    CAPTURE(mode);
    const auto inst = cli({"zam", "install-dump", "--system", data("a3.cox"), "--triple",
                           "s1,s2,s3", "--mode", mode});
    REQUIRE(inst.code == kExitOk);
    CHECK(has_line(inst.out, "# sound: true"));
    CHECK(has_line(inst.out, "# family: zamolodzhikov"));
  }
  CHECK(cli({"zam", "install-dump", "--system", data("a3.cox"), "--triple", "s1,s2,s3", "--mode",
             "sideways"})
            .code == kExitUsage);
  CHECK(cli({"zam", "generate", "--system", data("a3.cox"), "--triple", "s1,s2"}).code ==
        kExitDomain);
}

TEST_CASE("reports are byte-identical across runs") {
  BudgetEnv env;
  const std::vector<std::vector<std::string>> invocations = {
      {"group", "enumerate", "--system", data("h3.cox")},
      {"zam", "generate", "--system", data("b3.cox"), "--triple", "s1,s2,s3", "--seed", "3"},
      {"complex", "build", "--system", data("a3.cox"), "--kind", "salvetti"},
      {"word", "graph", "--system", data("b3.cox"), "--word", "s1 s2 s1 s2", "--emit", "dot"},
  };
  for (const auto& args : invocations) {
    CAPTURE(args[0] + " " + args[1]);
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("usage and input errors map to exit codes") {
  const auto unknown = cli({"frobnicate"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("unknown subcommand 'frobnicate'") != std::string::npos);
  CHECK(cli({"group", "frobnicate", "--system", data("a2.cox")}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"group", "info"}).code == kExitUsage);
  CHECK(cli({"group", "info", "--system", data("a2.cox"), "--format", "xml"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);

  const auto missing = cli({"group", "info", "--system", data("missing_pair.cox")});
  CHECK(missing.code == kExitDomain);
  CHECK(missing.err.find("line 4, column 1") != std::string::npos);
  CHECK(missing.err.find("pair s,t unspecified") != std::string::npos);

  const auto unreadable = cli({"group", "info", "--system", data("no_such_file.cox")});
  CHECK(unreadable.code == kExitDomain);
  CHECK(unreadable.err.find("cannot read") != std::string::npos);
}
