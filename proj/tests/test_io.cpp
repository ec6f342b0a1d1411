#include "doctest.h"
#include "support.hpp"
#include "timeline/io.hpp"

using namespace timeline;

TEST_CASE("text format") {
  const auto g = parse_instance("2 1\n1\n1 2\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.lifetime() == 1);
  CHECK(std::vector<Edge>(g.snapshot(1).begin(), g.snapshot(1).end()) == std::vector<Edge>{{1, 2}});
  CHECK(parse_instance("# comment\n2 2\n\n0\n1\n  2   1 \n") == TemporalGraph(2, {{}, {{1, 2}}}));
}

TEST_CASE("parse errors carry positions") {
  auto error_at = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  CHECK(error_at("2 1\n1\n1 1\n").first == 3);
  CHECK(error_at("2 1\n1\n1 3\n") == std::pair{3, 3});
  CHECK(error_at("2 1\n2\n1 2\n2 1\n").first == 4);
  CHECK(error_at("0 1\n0\n").first == 1);
  CHECK(error_at("2 1\n-1\n").first == 2);
  CHECK(error_at("2 2\n0\n").first == 3);
  CHECK(error_at("2 1\n0\n5\n").first == 3);
  CHECK(error_at("2 1\nx\n") == std::pair{2, 1});
  try {
    parse_instance("2 1\n1\n1 1\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
}

TEST_CASE("round trips") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = gen_random(1 + seed % 6, 1 + seed % 5, 0.4, seed);
    CHECK(parse_instance(emit_instance(g)) == g);
    CHECK(parse_instance(emit_instance_json(g)) == g);
    CHECK(emit_instance(parse_instance(emit_instance(g))) == emit_instance(g));
  }
  const auto tl = fixtures::fig1_blue();
  CHECK(parse_witness(emit_witness(tl)) == tl);
  CHECK_THROWS_AS(parse_witness("{\"intervals\": [{\"v\": 1}]}"), std::invalid_argument);
}

TEST_CASE("JSON instances") {
  CHECK(parse_instance(R"({"n": 3, "snapshots": [[[1, 2]], []]})") == TemporalGraph(3, {{{1, 2}}, {}}));
  CHECK_THROWS_AS(parse_instance(R"({"n": 3, "snapshots": [[[1, 4]]]})"), ParseError);
  CHECK_THROWS_AS(parse_instance("{ nope"), ParseError);
}
