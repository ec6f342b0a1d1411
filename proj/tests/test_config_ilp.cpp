#include <map>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "timeline/config_ilp.hpp"
#include "timeline/oracle.hpp"

using namespace timeline;

namespace {

// Minimal reader for the exported LP text: rows of "coef var" terms.
struct LpRow {
  std::map<std::string, Count> coef;
  std::string sense;
  Count rhs = 0;
};

struct LpFile {
  std::map<std::string, LpRow> rows;  // includes the objective as "value"
  std::vector<std::string> bounded, general;
};

LpFile read_lp(const std::string& text) {
  LpFile lp;
  std::istringstream in(text);
  std::string line, section, current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '\\') continue;
    if (line[0] != ' ') {
      section = line;
      continue;
    }
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (section == "Bounds") {
      lp.bounded.push_back(w.at(0));
      continue;
    }
    if (section == "General") {
      lp.general.push_back(w.at(0));
      continue;
    }
    size_t j = 0;
    if (w[0].back() == ':') {
      current = w[0].substr(0, w[0].size() - 1);
      lp.rows[current];
      j = 1;
    }
    auto& row = lp.rows[current];
    while (j < w.size()) {
      if (w[j] == "+") {
        ++j;
        continue;
      }
      if (w[j] == ">=" || w[j] == "<=" || w[j] == "=") {
        row.sense = w[j];
        row.rhs = std::stoll(w.at(j + 1));
        break;
      }
      const bool lone = j + 1 == w.size() || w[j + 1] == ">=" || w[j + 1] == "<=" || w[j + 1] == "=";
      if (lone) {  // empty row written as "0"
        ++j;
        continue;
      }
      row.coef[w.at(j + 1)] += std::stoll(w[j]);
      j += 2;
    }
  }
  return lp;
}

std::string var(int c, int s) { return "X_" + std::to_string(c) + "_" + std::to_string(s); }

}  // namespace

TEST_CASE("identical snapshots form one class") {
  TemporalGraph g(3, {{{1, 2}}, {{1, 2}}, {{1, 2}}});
  const auto prog = build_config_program(g, 1, 0, ProblemKind::DS);
  CHECK(prog.classes.size() == 1);
  CHECK(prog.multiplicity == std::vector<int>{3});
}

TEST_CASE("closed-neighborhood values") {
  TemporalGraph g(2, {{}, {{1, 2}}});
  const auto prog = build_config_program(g, 1, 0, ProblemKind::PDS);
  REQUIRE(prog.classes.size() == 2);
  CHECK(prog.classes[0].empty());
  CHECK(prog.value[1][0b01] == 2);
  CHECK(prog.value[0][0b01] == 1);
  CHECK(prog.value[0][0b11] == 2);
  const auto cover = build_config_program(g, 1, 0, ProblemKind::PVC);
  CHECK(cover.value[1][0b10] == 1);
  CHECK(cover.value[0][0b11] == 0);
}

TEST_CASE("vertex guard") {
  CHECK_THROWS_AS(build_config_program(gen_random(13, 2, 0.5, 1), 1, 0, ProblemKind::DS), GuardExceeded);
}

TEST_CASE("zero target is met by idling") {
  const auto g = gen_random(3, 4, 0.5, 2);
  const auto prog = build_config_program(g, 1, 0, ProblemKind::PDS);
  const auto sol = solve_config_exact(prog);
  REQUIRE(sol.feasible);
  for (size_t c = 0; c < prog.classes.size(); ++c)
    for (int s = 0; s < prog.num_subsets(); ++s)
      CHECK(sol.counts[c][s] == (s == 0 ? prog.multiplicity[c] : 0));
}

TEST_CASE("k = T with a single class") {
  TemporalGraph g(3, {{{1, 2}}, {{1, 2}}});
  const auto prog = build_config_program(g, 2, 0, ProblemKind::DS);
  const auto sol = solve_config_exact(prog);
  CHECK(sol.feasible);
  REQUIRE(sol.witness);
  CHECK(verify(fixtures::make(g, ProblemKind::DS, 2, 0), *sol.witness).satisfies_instance);
}

TEST_CASE("configuration search matches the oracle for ell = 0") {
  for (const auto& c : fixtures::random_grid(400, 41, 4, 4, 2, 0)) {
    CAPTURE(c.seed);
    for (auto kind : {ProblemKind::DS, ProblemKind::VC, ProblemKind::PDS, ProblemKind::PVC}) {
      auto inst = fixtures::make(c.g, kind, c.k, 0);
      if (is_partial(kind)) inst.t = oracle_solve(fixtures::make(c.g, kind == ProblemKind::PDS ? ProblemKind::DS : ProblemKind::VC, c.k, 0)).optimum + (c.seed % 2);
      const bool want = oracle_solve(inst).decision;
      const auto sol = solve_config_exact(build_config_program(c.g, c.k, inst.t, kind));
      CHECK(sol.feasible == want);
      if (sol.witness) CHECK(verify(inst, *sol.witness).satisfies_instance);
    }
  }
}

TEST_CASE("LP export") {
  ConfigProgram empty;
  const auto header_only = export_lp(empty);
  CHECK(header_only.find("X_") == std::string::npos);
  CHECK(header_only.find("Maximize") != std::string::npos);
  CHECK(header_only.find("End") != std::string::npos);

  TemporalGraph g(2, {{{1, 2}}, {{1, 2}}});
  const auto prog = build_config_program(g, 1, 3, ProblemKind::PDS);
  const auto lp = read_lp(export_lp(prog));
  CHECK(lp.general.size() == 4);
  CHECK(lp.rows.at("class_0").rhs == 2);
  CHECK(lp.rows.at("target").sense == ">=");
  CHECK(lp.rows.at("target").rhs == 3);
  CHECK(lp.rows.at("budget_1").coef.size() == 2);
}

TEST_CASE("LP export round-trips the coefficient matrix") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = gen_random(2 + seed % 3, 1 + seed % 5, 0.5, seed);
    const auto kind = seed % 2 ? ProblemKind::PDS : ProblemKind::PVC;
    const auto prog = build_config_program(g, 1 + seed % 2, 1 + seed % 4, kind);
    const auto lp = read_lp(export_lp(prog));
    const int C = static_cast<int>(prog.classes.size());
    CHECK(lp.general.size() == size_t(C) * prog.num_subsets());
    CHECK(lp.bounded.size() == lp.general.size());
    for (int c = 0; c < C; ++c)
      for (int s = 0; s < prog.num_subsets(); ++s) {
        const auto& obj = lp.rows.at("value").coef;
        const auto it = obj.find(var(c, s));
        CHECK((it == obj.end() ? 0 : it->second) == prog.value[c][s]);
        CHECK(lp.rows.at("target").coef.count(var(c, s)) == obj.count(var(c, s)));
        CHECK(lp.rows.at("class_" + std::to_string(c)).coef.at(var(c, s)) == 1);
        for (int v = 0; v < prog.n; ++v)
          CHECK(lp.rows.at("budget_" + std::to_string(v + 1)).coef.count(var(c, s)) == size_t(s >> v & 1));
      }
    for (int c = 0; c < C; ++c) CHECK(lp.rows.at("class_" + std::to_string(c)).rhs == prog.multiplicity[c]);
    for (int v = 0; v < prog.n; ++v) CHECK(lp.rows.at("budget_" + std::to_string(v + 1)).rhs == prog.k);
    CHECK(lp.rows.at("target").rhs == prog.target);
  }
}
