#include "glue/io.hpp"

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "glue/errors.hpp"
#include "glue/euclid.hpp"
#include "glue/moves.hpp"
#include "test_util.hpp"

using namespace glue;
using namespace glue::testutil;

TEST_CASE("graph files round trip and freeze the key layout") {
  CHECK(graph_to_json(make_G_an(2, 2).graph).dump() ==
        R"({"edges":[[0,1],[0,1],[1,1],[1,1]],"vertices":2})");
  CHECK(graph_to_json(make_G_n(2)).dump() ==
        R"({"edges":[[0,0],[0,0]],"root":0,"vertices":1})");

  for (const Graph& g : {make_G_n(5).graph, make_G_an(4, 5).graph,
                         two_by_two_source(), two_by_two_target()}) {
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
  RootedGraph r = rooted_from_json(graph_to_json(make_G_an(3, 4)));
  CHECK(r.graph == make_G_an(3, 4).graph);
  CHECK(r.root == 0);

  // A rooted file still reads as a plain graph.
  CHECK(graph_from_json(graph_to_json(make_G_n(3))) == make_G_n(3).graph);

  Json j = graph_to_json(make_G_n(2).graph);
  CHECK(dump_canonical(j) == dump_canonical(j));
  CHECK(dump_canonical(j).back() == '\n');

  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), ParseError);
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"edges":[],"vertices":2.5})")),
      ParseError);
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"edges":[[0]],"vertices":1})")),
      ParseError);
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"edges":[[0,3]],"vertices":2})")),
      DomainError);
  CHECK_THROWS_AS(rooted_from_json(Json::parse(R"({"edges":[],"vertices":0})")),
                  ParseError);
}

TEST_CASE("path sets and monoid elements round trip") {
  PathSet s = PS({"0:e1.e2", "0:e0", "1:"});
  CHECK(pathset_to_json(s).dump() == R"(["0:e0","0:e1.e2","1:"])");
  CHECK(pathset_from_json(pathset_to_json(s)) == s);
  CHECK_THROWS_AS(pathset_from_json(Json::parse(R"(["e0"])")), ParseError);
  CHECK_THROWS_AS(pathset_from_json(Json::parse(R"(["0:e0","0:e0.e1"])")),
                  DomainError);

  MonoidElement m({{P("1:"), 1}, {P("0:e0"), 2}});
  CHECK(monoid_to_json(m).dump() ==
        R"([{"mult":2,"path":"0:e0"},{"mult":1,"path":"1:"}])");
  CHECK(monoid_from_json(monoid_to_json(m)) == m);
  CHECK(monoid_from_json(Json::array()) == MonoidElement::zero());
  CHECK_THROWS_AS(
      monoid_from_json(Json::parse(R"([{"mult":0,"path":"0:"}])")),
      DomainError);
  CHECK_THROWS_AS(
      monoid_from_json(Json::parse(R"([{"mult":-2,"path":"0:"}])")),
      ParseError);
  CHECK_THROWS_AS(
      monoid_from_json(Json::parse(R"([{"mult":1.5,"path":"0:"}])")),
      ParseError);
}

TEST_CASE("blocks and shifts round trip") {
  CHECK(block_to_json(make_block({{P("0:e2"), 0}})).dump() ==
        R"({"gamma":[0],"paths":["0:e2"]})");
  for (const Block& b : two_by_two_blocks()) {
    CHECK(block_from_json(block_to_json(b)) == b);
  }
  CHECK_THROWS_AS(
      block_from_json(Json::parse(R"({"gamma":[0,1],"paths":["0:"]})")),
      ParseError);

  Graph g2 = make_G_n(2).graph;
  VertexMultiset root = VertexMultiset::single(0);
  Shift el = elementary(g2, root, root, P("0:e0"), P("0:e1"));
  CHECK(shift_to_json(el).dump() == R"({"pairs":[["0:e0","0:e1"]]})");
  CHECK(shift_from_json(g2, root, root, shift_to_json(el)) == el);

  // Unreduced files load as their reduced form.
  Shift blown = refine(g2, identity_shift(g2, root), P("0:"));
  CHECK(blown.size() == 2);
  CHECK(shift_from_json(g2, root, root, shift_to_json(blown)) ==
        identity_shift(g2, root));

  std::mt19937 rng(99);
  Graph g45 = make_G_an(4, 5).graph;
  for (int trial = 0; trial < 10; ++trial) {
    Shift s = random_permutation_shift(g45, root, rng, 2);
    CHECK(shift_from_json(g45, root, root, shift_to_json(s)) ==
          reduce(g45, s));
  }

  CHECK_THROWS_AS(
      shift_from_json(g2, root, root, Json::parse(R"({"pairs":[["0:e0"]]})")),
      ParseError);
  CHECK_THROWS_AS(shift_from_json(g2, root, root,
                                  Json::parse(R"({"pairs":[["0:e9","0:"]]})")),
                  DomainError);
}

TEST_CASE("diagrams round trip byte for byte") {
  GluingDiagram fl = two_by_two();
  Json j = diagram_to_json(fl);
  CHECK(!j.contains("start"));
  GluingDiagram fl2 = diagram_from_json(j);
  CHECK(fl2 == fl);
  CHECK(dump_canonical(diagram_to_json(fl2)) == dump_canonical(j));

  GluingDiagram ro = two_by_two_rooted();
  Json rj = diagram_to_json(ro);
  CHECK(rj.contains("start"));
  CHECK(rj["source"]["root"] == 0);
  CHECK(rj["target"]["root"] == 0);
  GluingDiagram ro2 = diagram_from_json(rj);
  CHECK(ro2 == ro);
  CHECK(ro2.rooted());

  GluingDiagram built = build_isomorphism(4, 5, 8).diagram;
  CHECK(diagram_from_json(diagram_to_json(built)) == built);

  SUBCASE("loading revalidates unless told not to") {
    Json bad = diagram_to_json(two_by_two());
    bad["blocks"]["0"]["gamma"] = Json::array({1});
    CHECK_THROWS_AS(diagram_from_json(bad), DomainError);
    GluingDiagram loose = diagram_from_json(bad, false);
    CHECK(!validate(loose).empty());
  }

  SUBCASE("shape problems are parse errors") {
    Json base = diagram_to_json(two_by_two());
    Json missing = base;
    missing["x"].erase("1");
    CHECK_THROWS_AS(diagram_from_json(missing), ParseError);
    Json extra = base;
    extra["blocks"]["9"] = extra["blocks"]["0"];
    CHECK_THROWS_AS(diagram_from_json(extra), ParseError);
    Json badkey = base;
    badkey["blocks"]["01"] = badkey["blocks"]["0"];
    CHECK_THROWS_AS(diagram_from_json(badkey), ParseError);
  }
}

TEST_CASE("traces and move records round trip") {
  EuclidTrace t = build_reachable(3, 5).trace;
  CHECK(trace_to_json(t).dump() ==
        R"([{"l":1,"move":"base","n":2},{"l":2,"move":"expand","n":2},)"
        R"({"l":3,"move":"expand","n":2},{"l":3,"move":"add","n":5}])");
  CHECK(trace_from_json(trace_to_json(t)) == t);
  CHECK_THROWS_AS(
      trace_from_json(Json::parse(R"([{"l":1,"move":"jump","n":2}])")),
      ParseError);

  MoveRecord rec;
  GluingDiagram expanded = expand_diagram(two_by_two(), 0, 0, &rec);
  CHECK(record_to_json(rec).dump() ==
        R"({"member":0,"move":"expand","vertex":0})");
  MoveRecord back = record_from_json(record_to_json(rec));
  CHECK(back.move == "expand");
  CHECK(back.vertex == 0);
  CHECK(back.member == 0);

  MoveRecord add_rec;
  GluingDiagram grown =
      add_diagram(build_reachable(3, 2).diagram, &add_rec);
  CHECK(grown.source().edge_count() == 5);
  Json aj = record_to_json(add_rec);
  CHECK(aj["move"] == "add");
  MoveRecord add_back = record_from_json(aj);
  CHECK(add_back.move == "add");
  CHECK(add_back.rho == add_rec.rho);
  CHECK(add_back.gamma_plus == add_rec.gamma_plus);

  CHECK_THROWS_AS(record_from_json(Json::parse(R"({"move":"slide"})")),
                  ParseError);
}

TEST_CASE("dot output is stable and marks the root") {
  CHECK(graph_to_dot(make_G_n(2).graph, 0) ==
        "digraph {\n"
        "  rankdir=LR;\n"
        "  v0 [label=\"0\", shape=square];\n"
        "  v0 -> v0 [label=\"e0\"];\n"
        "  v0 -> v0 [label=\"e1\"];\n"
        "}\n");
  std::string floating = graph_to_dot(make_G_an(2, 3).graph);
  CHECK(floating.find("shape=square") == std::string::npos);

  GluingDiagram d = build_isomorphism(4, 5, 8).diagram;
  std::string dot = diagram_to_dot(d);
  CHECK(dot == diagram_to_dot(d));
  CHECK(dot.find("subgraph cluster_v0") != std::string::npos);
  CHECK(dot.find("subgraph cluster_start") != std::string::npos);
  CHECK(dot.find("style=filled") != std::string::npos);
  CHECK(dot.find("#0") != std::string::npos);

  std::string fl = diagram_to_dot(two_by_two());
  CHECK(fl.find("cluster_start") == std::string::npos);
  CHECK(fl.find("subgraph cluster_v1") != std::string::npos);
}

TEST_CASE("files round trip through disk") {
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "glue_io_test.json";
  GluingDiagram d = two_by_two_rooted();
  write_text_file(tmp.string(), dump_canonical(diagram_to_json(d)));
  CHECK(diagram_from_json(read_json_file(tmp.string())) == d);

  write_text_file(tmp.string(), "not json");
  CHECK_THROWS_AS(read_json_file(tmp.string()), ParseError);
  fs::remove(tmp);
  CHECK_THROWS_AS(read_json_file(tmp.string()), IoError);
  CHECK_THROWS_AS(
      write_text_file((fs::path("/nonexistent_dir") / "x.json").string(), "x"),
      IoError);
}
