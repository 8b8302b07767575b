#include "doctest.h"

#include "sqv/io.hpp"

using namespace sqv;

TEST_CASE("rational json") {
  CHECK(q_to_json(Q(3)).get<std::string>() == "3/1");
  CHECK(q_from_json(Json("-2/6")) == Q(-1, 3));
  CHECK(q_from_json(Json(4)) == Q(4));
  CHECK_THROWS_AS(q_from_json(Json("1/0x")), InputError);
  CHECK_THROWS_AS(q_from_json(Json(0.5)), InputError);
}

TEST_CASE("point round trip") {
  Rng rng(5);
  for (const char* d : {"A1", "A3", "D4"}) {
    Graph g = Graph::dynkin(d);
    IntVec v(g.num_vertices()), w(g.num_vertices());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = static_cast<long>(rng() % 3);
      w[i] = static_cast<long>(rng() % 3);
    }
    RepPoint pt = random_point(g, v, w, rng);
    Json j = point_to_json(pt);
    RepPoint back = point_from_json(Json::parse(j.dump()));
    CHECK(back.graph == g);
    CHECK(back == pt);
  }
}

TEST_CASE("graph json") {
  Json j = Json::parse(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]], "orientation": [1, -1]})");
  Graph g = graph_from_json(j);
  CHECK(g.num_vertices() == 3);
  CHECK(g.edge_orientation() == std::vector<int>{1, -1});
  CHECK(graph_from_json(Json::parse(R"({"dynkin": "A3"})")).num_vertices() == 3);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": [1, 1]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": [1], "edges": [[1, 2]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": [1, 2], "edges": [[1, 2]], "orientation": []})")),
                  InputError);
}

TEST_CASE("fixture validation") {
  auto parse = [](const char* s) { return fixture_from_json(Json::parse(s)); };
  Fixture f = parse(R"({"graph": {"dynkin": "A2"}, "v": [1, 1], "w": [1, 0], "delta": [1, -1]})");
  CHECK_FALSE(f.point);
  CHECK(f.delta->at(1) == -1);
  CHECK_THROWS_AS(parse(R"({"graph": {"dynkin": "A2"}, "v": [1, -1], "w": [0, 0]})"), InputError);
  CHECK_THROWS_AS(parse(R"({"graph": {"dynkin": "A2"}, "v": [1], "w": [0, 0]})"), InputError);
  CHECK_THROWS_AS(parse(R"({"graph": {"dynkin": "A2"}, "v": [1, 1], "w": [0, 0], "delta": [1, 0]})"), InputError);
  CHECK_THROWS_AS(parse(R"({"graph": {"dynkin": "A1"}, "v": [1], "w": [1], "p": {"0": [[1, 2]]}})"), InputError);
  CHECK_THROWS_AS(parse(R"({"graph": {"dynkin": "A1"}, "v": [1], "w": [1], "p": {"3": [[1]]}})"), InputError);
  Fixture g = parse(R"({"graph": {"dynkin": "A1"}, "v": [1], "w": [1], "p": {"0": [["1/2"]]}})");
  REQUIRE(g.point);
  CHECK(g.point->p[0](0, 0) == Q(1, 2));
  CHECK(g.point->q[0](0, 0) == 0);
}
