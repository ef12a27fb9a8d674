#include <doctest.h>

#include <random>
#include <sstream>

#include "spexlab/graph6.hpp"

using namespace spexlab;

TEST_CASE("fixed encodings") {
  CHECK(encode_graph6(build_path(2)) == "A_");
  CHECK(encode_graph6(complete_graph(5)) == "D~{");
  CHECK(encode_graph6(empty_graph(0)) == "?");
  CHECK(encode_graph6(empty_graph(1)) == "@");
  CHECK(decode_graph6("A_") == build_path(2));
  CHECK(decode_graph6("D~{") == complete_graph(5));
}

TEST_CASE("round trip over random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng() % 30);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("long size prefix round trip") {
  Graph g(100);
  g.add_edge(0, 99);
  g.add_edge(42, 43);
  std::string rec = encode_graph6(g);
  CHECK(rec[0] == '~');
  CHECK(decode_graph6(rec) == g);
}

TEST_CASE("trailing newline tolerated") {
  CHECK(decode_graph6("A_\n") == build_path(2));
  CHECK(decode_graph6("A_\r\n") == build_path(2));
}

TEST_CASE("malformed records rejected") {
  CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
  CHECK_THROWS_AS(decode_graph6("A"), Graph6Error);      // truncated body
  CHECK_THROWS_AS(decode_graph6("A_~"), Graph6Error);    // extra byte
  CHECK_THROWS_AS(decode_graph6("A "), Graph6Error);     // byte below range
  CHECK_THROWS_AS(decode_graph6(std::string_view("A\x7f", 2)), Graph6Error);
}

TEST_CASE("padding bits must be zero") {
  // n=3 uses 3 bits; set a padding bit: 000111 -> '?'+7
  std::string rec = "B";
  rec.push_back(static_cast<char>(63 + 7));
  CHECK_THROWS_AS(decode_graph6(rec), Graph6Error);
}

TEST_CASE("stream reading skips header and counts bad records") {
  std::istringstream in(">>graph6<<A_\n\nD~{\nnot-a-record!!\nA_\n");
  size_t bad = 0;
  auto graphs = read_graph6_stream(in, &bad);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == build_path(2));
  CHECK(graphs[1] == complete_graph(5));
  CHECK(graphs[2] == build_path(2));
  CHECK(bad == 1);
}

TEST_CASE("error carries a byte offset") {
  try {
    decode_graph6(std::string_view("A\x20", 2));
    FAIL("expected Graph6Error");
  } catch (const Graph6Error& e) {
    CHECK(e.offset() == 1);
  }
}
