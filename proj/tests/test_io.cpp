#include <doctest.h>

#include <random>

#include "orient/errors.hpp"
#include "orient/io.hpp"

using namespace orient;

TEST_CASE("tournament text forms") {
  Tournament cyc = parse_tournament("tournament 3\n1 2\n2 3\n3 1\n");
  CHECK(cyc == directed_triangle());
  CHECK(parse_tournament("3:101") == cyc);
  CHECK(parse_tournament(format_tournament(cyc)) == cyc);
  CHECK(parse_tournament(format_tournament(cyc, true)) == cyc);
  CHECK(parse_tournament("# comment\n4:110111") == tc4());

  CHECK_THROWS_AS(parse_tournament("tournament 3\n1 2\n2 3\n"), FormatError);   // missing arc
  CHECK_THROWS_AS(parse_tournament("tournament 3\n1 2\n2 1\n3 1\n"), FormatError);  // dup pair
  CHECK_THROWS_AS(parse_tournament("3:10"), FormatError);
  CHECK_THROWS_AS(parse_tournament("3:1x1"), FormatError);
  CHECK_THROWS_AS(parse_tournament("tournament 3\n1 4\n2 3\n3 1\n"), FormatError);
  CHECK_THROWS_AS(parse_tournament(""), FormatError);

  std::mt19937 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Tournament t = decode(n, rng() & low_mask(pair_count(n)));
    CHECK(parse_tournament(format_tournament(t, trial % 2)) == t);
  }
}

TEST_CASE("forbidden-set files") {
  std::vector<std::string> warnings;
  ForbiddenSet f = parse_forbidden_set("tournament 3\n1 2\n2 3\n1 3\n\n3:101\n", &warnings);
  CHECK(f.members().size() == 2);
  CHECK(warnings.empty());

  // the two cyclic labelings collapse to one member, with a warning
  ForbiddenSet dup = parse_forbidden_set("3:101\n3:010\n", &warnings);
  CHECK(dup.members().size() == 1);
  CHECK(warnings.size() == 1);

  CHECK_THROWS_AS(parse_forbidden_set("1:\n", nullptr), FormatError);  // 1-vertex member
}

TEST_CASE("digraph text and JSON round-trips") {
  PartialDigraph d = parse_digraph("digraph 4\n1 2\n2 3\n3 2\n");
  CHECK(d.n() == 4);
  CHECK(d.arc(0, 1));
  CHECK(!d.arc(1, 0));
  CHECK(d.symmetric_edge(1, 2));

  PartialDigraph g = parse_digraph("graph 3\n1 2\n2 3\n");
  CHECK(g.is_symmetric());
  CHECK(g.sym_edges().size() == 2);

  CHECK_THROWS_AS(parse_digraph("graph 3\n1 4\n"), FormatError);
  CHECK_THROWS_AS(parse_digraph("digraph 3\n1 1\n"), FormatError);
  CHECK_THROWS_AS(parse_digraph("tree 3\n"), FormatError);
  CHECK_THROWS_AS(digraph_from_json("{\"arcs\": []}"), FormatError);
  CHECK_THROWS_AS(digraph_from_json("{not json"), FormatError);

  std::mt19937 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    PartialDigraph original(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        switch (rng() % 4) {
          case 0: break;
          case 1: original.add_arc(u, v); break;
          case 2: original.add_arc(v, u); break;
          default: original.add_edge(u, v);
        }
      }
    CHECK(parse_digraph(format_digraph(original)) == original);
    CHECK(digraph_from_json(digraph_to_json(original)) == original);
  }
}

TEST_CASE("parsers reject garbage without crashing") {
  std::mt19937 rng(127);
  const char alphabet[] = "0123456789 \n\t:-#abcdefgraphtournmdix";
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    int len = static_cast<int>(rng() % 60);
    for (int i = 0; i < len; ++i) text += alphabet[rng() % (sizeof(alphabet) - 1)];
    for (int which = 0; which < 4; ++which) {
      try {
        switch (which) {
          case 0: parse_tournament(text); break;
          case 1: parse_digraph(text); break;
          case 2: parse_nae_formula(text); break;
          default: parse_forbidden_set(text, nullptr);
        }
      } catch (const FormatError&) {
      } catch (const DomainError&) {
      }
    }
  }
  CHECK(true);  // reaching here means no crash and no foreign exception
}
