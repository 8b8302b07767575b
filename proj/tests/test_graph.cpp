#include "doctest.h"

#include "sqv/graph.hpp"

using namespace sqv;

TEST_CASE("cartan matrices") {
  CHECK(Graph::type_a(2).cartan() == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(Graph::type_a(1).cartan() == IntMatrix{{2}});
  IntMatrix d4 = Graph::type_d(4).cartan();
  // centre is vertex 1
  for (std::size_t leaf : {0u, 2u, 3u}) {
    CHECK(d4[1][leaf] == -1);
    CHECK(d4[leaf][1] == -1);
  }
  CHECK(d4[0][2] == 0);
}

TEST_CASE("graph validation") {
  CHECK_THROWS(Graph(2, {{0, 0}}, {1}));
  CHECK_THROWS(Graph(2, {{0, 1}}, {2}));
  Graph g = Graph::type_a(3);
  for (const auto& a : g.arrows()) {
    CHECK(g.arrow(a.bar).bar != a.bar);
    CHECK(a.eps + g.arrow(a.bar).eps == 0);
  }
  // eps(h) = o(h) - i(h) on the default type A orientation
  CHECK(g.arrow(*g.find_arrow(0, 1)).eps == -1);
  CHECK(g.arrow(*g.find_arrow(1, 0)).eps == 1);
}

TEST_CASE("linear Weyl action") {
  Graph a2 = Graph::type_a(2);
  CHECK(weyl_reflect(a2, 0, IntVec{1, 1}) == IntVec{-1, 2});
  CHECK(weyl_reflect(a2, 1, IntVec{0, 0}) == IntVec{0, 0});
  Graph a3 = Graph::type_a(3);
  // xi_1 = 0 at the middle vertex, so s_2 fixes (1, 0, 0)
  CHECK(weyl_reflect(a3, 1, IntVec{1, 0, 0}) == IntVec{1, 0, 0});
  IntVec once = weyl_reflect(a3, 0, IntVec{1, 0, 0});
  CHECK(once == IntVec{-1, 1, 0});
  CHECK(weyl_reflect(a3, 0, once) == IntVec{1, 0, 0});
  CHECK_THROWS(weyl_reflect(a3, 3, IntVec{0, 0, 0}));
}

TEST_CASE("affine Weyl action") {
  Graph a1 = Graph::type_a(1);
  CHECK(weyl_star(a1, 0, IntVec{1}, IntVec{2}) == IntVec{1});
  CHECK(weyl_star(a1, 0, IntVec{0}, IntVec{2}) == IntVec{2});
  Graph a2 = Graph::type_a(2);
  IntVec v{1, 2}, w{3, 1};
  CHECK(weyl_star_word(a2, {}, v, w) == v);
  CHECK(weyl_star_word(a2, {0, 1, 0}, v, w) == weyl_star_word(a2, {1, 0, 1}, v, w));
}

TEST_CASE("weyl_star identity C(s_i * v) = s_i(Cv - w) + w") {
  for (std::size_t n = 1; n <= 4; ++n) {
    Graph g = Graph::type_a(n);
    Rng rng(n);
    std::uniform_int_distribution<long> d(0, 4);
    for (int t = 0; t < 50; ++t) {
      IntVec v(n), w(n);
      for (auto& x : v) x = d(rng);
      for (auto& x : w) x = d(rng);
      for (std::size_t i = 0; i < n; ++i) {
        IntVec lhs = cartan_apply(g, weyl_star(g, i, v, w));
        IntVec cv = cartan_apply(g, v);
        for (std::size_t j = 0; j < n; ++j) cv[j] -= w[j];
        IntVec rhs = weyl_reflect(g, i, cv);
        for (std::size_t j = 0; j < n; ++j) rhs[j] += w[j];
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("roots and genericity") {
  Graph a2 = Graph::type_a(2);
  CHECK(positive_roots_bounded(a2, {1, 1}) == std::vector<IntVec>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(positive_roots_bounded(Graph::type_a(1), {3}) == std::vector<IntVec>{{1}});
  CHECK(positive_roots_bounded(Graph::type_a(3), {1, 1, 1}).size() == 6);
  CHECK_THROWS(positive_roots_bounded(a2, {40, 40}));
  CHECK(is_generic(a2, {{1, 1}, {0, 0}}, {3, 3}));
  CHECK_FALSE(is_generic(a2, {{1, -1}, {0, 0}}, {1, 1}));
  CHECK(is_generic(a2, {{0, 0}, {1, 1}}, {1, 1}));
}

TEST_CASE("longest element") {
  auto a2 = longest_element(Graph::type_a(2));
  CHECK(a2.word.size() == 3);
  CHECK(a2.theta == std::vector<std::size_t>{1, 0});
  auto a1 = longest_element(Graph::type_a(1));
  CHECK(a1.word == WeylWord{0});
  CHECK(a1.theta == std::vector<std::size_t>{0});
  auto d4 = longest_element(Graph::type_d(4));
  CHECK(d4.word.size() == 12);
  CHECK(d4.theta == std::vector<std::size_t>{0, 1, 2, 3});
  auto e6 = longest_element(Graph::type_e(6));
  CHECK(e6.word.size() == 36);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto le = longest_element(Graph::type_a(n));
    CHECK(le.word.size() == n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i) CHECK(le.theta[i] == n - 1 - i);
  }
  Graph affine(2, {{0, 1}, {0, 1}}, {-1, -1});
  CHECK_FALSE(is_dynkin(affine));
  CHECK_THROWS(longest_element(affine));
}

TEST_CASE("w0 * v closed formula in type A") {
  for (std::size_t n = 1; n <= 4; ++n) {
    Graph g = Graph::type_a(n);
    auto w0 = longest_element(g).word;
    Rng rng(7 * n);
    std::uniform_int_distribution<long> d(0, 4);
    for (int t = 0; t < 30; ++t) {
      IntVec v(n), w(n, 0);
      for (auto& x : v) x = d(rng);
      w[0] = d(rng);
      IntVec expect(n);
      for (std::size_t i = 0; i < n; ++i) expect[i] = w[0] - v[n - 1 - i];
      CHECK(weyl_star_word(g, w0, v, w) == expect);
    }
  }
}

TEST_CASE("fixed subgroups") {
  Graph a2 = Graph::type_a(2), a3 = Graph::type_a(3);
  CHECK(fixed_subgroup_scan(a2, longest_element(a2).word, DiagramAuto::identity(a2)).size() == 2);
  CHECK(fixed_subgroup_scan(a3, longest_element(a3).word, DiagramAuto::identity(a3)).size() == 8);
  CHECK(fixed_subgroup_scan(a3, {}, DiagramAuto::identity(a3)).size() == 24);
  CHECK(weyl_group_order(Graph::type_d(4)) == 192);
}

TEST_CASE("diagram automorphisms") {
  Graph a3 = Graph::type_a(3);
  auto flip = DiagramAuto::from_vertex_perm(a3, {2, 1, 0});
  CHECK(flip.c == -1);
  CHECK(flip.order() == 2);
  // eps(0 -> 1) = eps(2 -> 1) makes the flip orientation preserving
  Graph a3s(3, {{0, 1}, {2, 1}}, {-1, -1});
  auto flip2 = DiagramAuto::from_vertex_perm(a3s, {2, 1, 0});
  CHECK(flip2.c == 1);
  DiagramAuto bad = flip2;
  bad.c = -1;
  CHECK_THROWS(bad.validate(a3s));
  CHECK(DiagramAuto::identity(a3).is_identity());
}

TEST_CASE("Satake lookup") {
  auto a4 = satake_lookup('A', 4, 1);
  CHECK(a4.k == "𝔰𝔩_p⊕𝔤𝔩_{p+1}");
  CHECK(a4.satake_type == "AIII");
  CHECK(satake_lookup('A', 3, 2).satake_type == "AI");
  CHECK(satake_lookup('E', 7, 1).k == "𝔰𝔩_8");
  CHECK(satake_lookup('E', 7, 1).satake_type == "EV");
  CHECK_THROWS(satake_lookup('E', 7, 2));
}
