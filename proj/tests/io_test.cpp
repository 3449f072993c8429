#include "xdecomp/io.hpp"

#include <sstream>

#include "doctest.h"
#include "testutil.hpp"
#include "xdecomp/errors.hpp"
#include "xdecomp/generators.hpp"

using namespace xdecomp;
using namespace xdecomp::test;

TEST_CASE("parse_graph single edge with normalization scale") {
  std::istringstream in("2 1\n0 1 5.0\n");
  ParsedGraph pg = parse_graph(in);
  REQUIRE(pg.graph.m() == 1);
  CHECK(pg.graph.edge(0).w == Weight(1));
  CHECK(pg.weight_scale == Weight(5));
  CHECK(pg.graph.edge(0).w * pg.weight_scale == Weight(5));
}

TEST_CASE("parse_graph accepts comments and fractions") {
  std::istringstream in("# demo\n3 2\n0 1 0.25 # quarter\n1 2 3/2\n");
  ParsedGraph pg = parse_graph(in);
  REQUIRE(pg.graph.m() == 2);
  CHECK(pg.weight_scale == Weight(1) / 4);
  CHECK(pg.graph.edge(1).w == Weight(6));  // (3/2) / (1/4)
}

TEST_CASE("parse_graph error reporting") {
  {
    std::istringstream in("2 1\n0 0 1\n");
    CHECK_THROWS_AS(parse_graph(in), SelfLoopError);
  }
  {
    std::istringstream in("2 1\n0 1 0\n");
    CHECK_THROWS_AS(parse_graph(in), NonPositiveWeight);
  }
  {
    std::istringstream in("2 1\n0 1 -2\n");
    CHECK_THROWS_AS(parse_graph(in), NonPositiveWeight);
  }
  {
    std::istringstream in("2 1\n0 5 1\n");
    CHECK_THROWS_AS(parse_graph(in), OutOfRange);
  }
  {
    std::istringstream in("2 1\n0 1\n");
    try {
      parse_graph(in);
      CHECK(false);
    } catch (const MalformedLine& e) {
      CHECK(e.line_number == 2);
    }
  }
  {
    std::istringstream in("2 2\n0 1 1\n");
    CHECK_THROWS_AS(parse_graph(in), MalformedLine);
  }
}

TEST_CASE("parse_demands defaults, duplicates, negatives") {
  {
    std::istringstream in("0 2\n2 4\n");
    ParsedDemands pd = parse_demands(in, 4);
    CHECK(pd.demands[0] == Weight(1));  // normalized by min positive 2
    CHECK(pd.demands[1] == Weight(0));  // missing defaults to zero
    CHECK(pd.demands[2] == Weight(2));
    CHECK(pd.demand_scale == Weight(2));
  }
  {
    std::istringstream in("0 1\n0 2\n");
    CHECK_THROWS_AS(parse_demands(in, 2), DuplicateEntry);
  }
  {
    std::istringstream in("0 -1\n");
    CHECK_THROWS_AS(parse_demands(in, 2), NegativeDemand);
  }
  {
    std::istringstream in("9 1\n");
    CHECK_THROWS_AS(parse_demands(in, 2), OutOfRange);
  }
}

TEST_CASE("graph write/parse round-trips byte-identically") {
  WeightedGraph g = gen_random_connected(260, 1000, 16, 12345);
  REQUIRE(g.m() >= 1000);
  std::string first = graph_to_string(g);
  std::istringstream in(first);
  ParsedGraph pg = parse_graph(in);
  CHECK(pg.weight_scale == Weight(1));
  std::string second = graph_to_string(pg.graph);
  CHECK(first == second);
}

TEST_CASE("partition file round trip") {
  std::vector<VertexSet> parts = {{0, 2, 4}, {1, 3}, {5}};
  std::ostringstream os;
  write_partition(os, parts);
  std::istringstream in(os.str());
  CHECK(parse_partition(in, 6) == parts);
}

TEST_CASE("summary formats") {
  SummaryRecord rec;
  rec.parts = 2;
  rec.deleted_weight = Weight(3) / 2;
  rec.psi = Weight(1) / 8;
  rec.iterations = 3;
  rec.alpha_emp = Weight(2);
  rec.restarts = 0;
  std::ostringstream text;
  write_summary(text, rec, false);
  CHECK(text.str() ==
        "parts 2\ndeleted_weight 1.5\npsi 0.125\niterations 3\nalpha_emp 2\nrestarts 0\n");
  std::ostringstream json;
  write_summary(json, rec, true);
  CHECK(json.str().find("\"parts\":2") != std::string::npos);
}

TEST_CASE("weight string canonicalization") {
  CHECK(weight_to_string(Weight(7)) == "7");
  CHECK(weight_to_string(Weight(3) / 2) == "1.5");
  CHECK(weight_to_string(Weight(1) / 3) == "1/3");
  CHECK(weight_from_string("1.5") == Weight(3) / 2);
  CHECK(weight_from_string("1/3") == Weight(1) / 3);
  CHECK(weight_from_string("42") == Weight(42));
  Weight w = weight_from_string("0.125");
  CHECK(weight_to_string(w) == "0.125");
}
