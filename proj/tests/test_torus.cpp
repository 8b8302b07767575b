#include "doctest.h"

#include "sqv/torus.hpp"

#include <algorithm>
#include <set>

using namespace sqv;

namespace {

// Independent scan: v^2 outermost, v^1 read off and then checked.
std::set<ModelDecomp> brute_force(const Graph& g, const DiagramAuto& a, const WeylWord& omega, const IntVec& v,
                                  const IntVec& w1, const IntVec& w2) {
  std::set<ModelDecomp> out;
  const std::size_t n = v.size();
  IntVec v2(n, 0);
  while (true) {
    IntVec d2 = permute(a, weyl_star_word(g, omega, v2, w2));
    IntVec v1(n);
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      v1[k] = v[k] - v2[k] - d2[k];
      if (v1[k] < 0 || d2[k] < 0) ok = false;
    }
    if (ok && permute(a, weyl_star_word(g, omega, v1, w1)) == v1) out.insert(ModelDecomp{{v1, v2}});
    std::size_t k = n;
    while (k > 0 && v2[k - 1] == v[k - 1]) v2[--k] = 0;
    if (k == 0) break;
    ++v2[k - 1];
  }
  return out;
}

}  // namespace

TEST_CASE("A_1 models") {
  Graph g = Graph::type_a(1);
  DiagramAuto id = DiagramAuto::identity(g);
  WeylWord w0 = longest_element(g).word;
  auto m = enumerate_models(g, id, w0, {1}, {0}, {1});
  REQUIRE(m.size() == 2);
  CHECK(m[0] == ModelDecomp{{{0}, {0}}});
  CHECK(m[1] == ModelDecomp{{{0}, {1}}});
  CHECK(to_string(m[1]) == "(0; 1)");

  CHECK(enumerate_models(g, id, w0, {0}, {0}, {0}).size() == 1);
  CHECK(enumerate_models(g, id, w0, {0}, {0}, {1}).empty());

  // w^2 = 0: only v^1 = v with the self-duality constraint.
  auto c = enumerate_models(g, id, w0, {1}, {2}, {0});
  REQUIRE(c.size() == 1);
  CHECK(c[0].parts[0] == IntVec{1});
  CHECK(enumerate_models(g, id, w0, {2}, {2}, {0}).empty());
}

TEST_CASE("multi-block models") {
  Graph g = Graph::type_a(1);
  DiagramAuto id = DiagramAuto::identity(g);
  WeylWord w0 = longest_element(g).word;
  auto m = enumerate_models_multi(g, id, w0, {2}, {0}, {{1}, {1}});
  CHECK(m.size() == 4);
  for (const auto& d : m) {
    CHECK(d.parts[0] == IntVec{0});
    CHECK(is_model(g, id, w0, {2}, {0}, {{1}, {1}}, d));
  }
  // m = 2 agrees with the two-block call.
  CHECK(enumerate_models_multi(g, id, w0, {1}, {0}, {{1}}) == enumerate_models(g, id, w0, {1}, {0}, {1}));
  // Trailing zero blocks add nothing.
  auto single = enumerate_models(g, id, w0, {1}, {0}, {1});
  auto padded = enumerate_models_multi(g, id, w0, {1}, {0}, {{1}, {0}});
  REQUIRE(padded.size() == single.size());
  for (std::size_t k = 0; k < single.size(); ++k) {
    CHECK(padded[k].parts[0] == single[k].parts[0]);
    CHECK(padded[k].parts[1] == single[k].parts[1]);
    CHECK(padded[k].parts[2] == IntVec{0});
  }
  // Swapping equal blocks permutes the answer.
  auto ab = enumerate_models_multi(g, id, w0, {3}, {0}, {{1}, {2}});
  auto ba = enumerate_models_multi(g, id, w0, {3}, {0}, {{2}, {1}});
  std::set<ModelDecomp> swapped;
  for (auto d : ba) {
    std::swap(d.parts[1], d.parts[2]);
    swapped.insert(d);
  }
  CHECK(std::set<ModelDecomp>(ab.begin(), ab.end()) == swapped);
}

TEST_CASE("models against brute force") {
  for (std::size_t n = 1; n <= 3; ++n) {
    Graph g = Graph::type_a(n);
    LongestElement le = longest_element(g);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = le.theta[i];
    for (const DiagramAuto& a : {DiagramAuto::identity(g), DiagramAuto::from_vertex_perm(g, perm)}) {
      IntVec w2(n, 0), w1(n, 0);
      w2[0] = 1;
      w2[n - 1] = 1;
      w1[(n - 1) / 2] = n % 2 ? 2 : 0;
      if (permute(a, w1) != w1) continue;
      IntVec v(n, 2);
      auto m = enumerate_models(g, a, le.word, v, w1, w2);
      auto b = brute_force(g, a, le.word, v, w1, w2);
      CHECK(std::set<ModelDecomp>(m.begin(), m.end()) == b);
    }
  }
}

TEST_CASE("model preconditions") {
  Graph g = Graph::type_a(3);
  DiagramAuto flip = DiagramAuto::from_vertex_perm(g, {2, 1, 0});
  WeylWord w0 = longest_element(g).word;
  CHECK_THROWS_WITH_AS(enumerate_models(g, flip, w0, {1, 1, 1}, {1, 0, 0}, {0, 0, 0}), doctest::Contains("a(w1)"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(enumerate_models(g, flip, w0, {1, 1, 1}, {0, 0, 0}, {1, 0, 0}), doctest::Contains("a(w)"),
                       std::invalid_argument);
  CHECK_THROWS_AS(enumerate_models(g, flip, w0, {1, 1}, {0, 0, 0}, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_models(g, flip, {5}, {1, 1, 1}, {0, 0, 0}, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("rank 2 chambers") {
  Rank2Chambers r = rank2_chambers();
  CHECK(r.walls.size() == 4);
  CHECK(r.chambers.size() == 8);
  std::set<std::vector<int>> distinct;
  for (const auto& c : r.chambers) distinct.insert(c.signs);
  CHECK(distinct.size() == 8);
  std::size_t c = r.locate(1, 2);
  CHECK(c == 0);
  CHECK(r.opposite(c) == r.locate(-1, -2));
  auto cross = r.crossings(c, r.opposite(c));
  CHECK(cross.size() == 4);
  int k = 0, rr = 0;
  for (std::size_t w : cross) (r.walls[w].kind == WallKind::K ? k : rr)++;
  CHECK(k == 2);
  CHECK(rr == 2);
  std::set<std::size_t> once(cross.begin(), cross.end());
  CHECK(once.size() == 4);
  CHECK(r.crossings(c, c).empty());
  CHECK_THROWS(r.locate(1, 1));
}
