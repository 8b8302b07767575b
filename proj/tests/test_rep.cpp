#include "doctest.h"

#include "fixtures.hpp"
#include "sqv/forms.hpp"
#include "sqv/rep.hpp"

using namespace sqv;
using fixtures::a1_point;

TEST_CASE("moment map") {
  Graph a2 = Graph::type_a(2);
  RepPoint z = RepPoint::zero(a2, {1, 2}, {2, 1});
  for (const auto& m : moment_map(z)) CHECK(m.is_zero());
  CHECK(in_lambda(z, {0, 0}));
  RepPoint pt = a1_point();
  CHECK(moment_map(pt)[0].is_zero());
  CHECK(in_lambda(pt, {0}));
  CHECK_FALSE(in_lambda(pt, {1}));

  RepPoint b = RepPoint::zero(a2, {1, 1}, {0, 0});
  std::size_t x1 = arrow_x(a2, 0), y1 = arrow_y(a2, 0);
  b.x[x1] = QMatrix{{2}};
  b.x[y1] = QMatrix{{3}};
  int eps = a2.arrow(y1).eps;
  CHECK(moment_map(b)[0] == QMatrix{{Q(6 * eps)}});
}

TEST_CASE("moment map equivariance and commuting actions") {
  Rng rng(1);
  Graph a3 = Graph::type_a(3);
  IntVec v{2, 1, 2}, w{1, 1, 0};
  for (int t = 0; t < 10; ++t) {
    RepPoint pt = random_point(a3, v, w, rng);
    GroupElem g = random_group_elem(v, rng), f = random_group_elem(w, rng);
    auto mu = moment_map(pt), mug = moment_map(act_gv(g, pt));
    auto gi = inverse_elem(g);
    for (std::size_t i = 0; i < 3; ++i) CHECK(mug[i] == g[i] * mu[i] * gi[i]);
    CHECK(act_gv(g, act_gw(f, pt)) == act_gw(f, act_gv(g, pt)));
    CHECK(act_gv(identity_elem(v), pt) == pt);
    CHECK(is_stable_positive(pt) == is_stable_positive(act_gv(g, pt)));
    CHECK(is_stable_negative(pt) == is_stable_negative(act_gv(g, pt)));
  }
}

TEST_CASE("symplectic pairing") {
  Rng rng(2);
  Graph a2 = Graph::type_a(2);
  for (int t = 0; t < 10; ++t) {
    RepPoint a = random_point(a2, {1, 2}, {2, 1}, rng), b = random_point(a2, {1, 2}, {2, 1}, rng);
    CHECK(symplectic_pair(a, a) == 0);
    CHECK(symplectic_pair(a, b) == -symplectic_pair(b, a));
  }
}

TEST_CASE("stability in the uniform chambers") {
  RepPoint pt = a1_point();
  CHECK(is_stable_positive(pt));
  RepPoint bad = pt;
  bad.q[0] = QMatrix(2, 1);
  CHECK_FALSE(is_stable_positive(bad));

  Graph a1 = Graph::type_a(1);
  RepPoint surj = RepPoint::zero(a1, {1}, {1});
  surj.p[0] = QMatrix{{1}};
  CHECK(is_stable_negative(surj));
  CHECK_FALSE(is_stable_negative(RepPoint::zero(a1, {1}, {1})));

  // im p lives at vertex 1 and reaches vertex 2 through x
  Graph a2 = Graph::type_a(2);
  RepPoint gen = RepPoint::zero(a2, {1, 1}, {1, 0});
  gen.p[0] = QMatrix{{1}};
  gen.x[arrow_x(a2, 0)] = QMatrix{{1}};
  CHECK(is_stable_negative(gen));
  gen.x[arrow_x(a2, 0)] = QMatrix{{0}};
  CHECK_FALSE(is_stable_negative(gen));
}

TEST_CASE("stability against a coordinate-subspace oracle") {
  // A_2, v = (1, 1), w = (2, 0), q_1 injective: the only candidate is S = (0, V_2),
  // which is x-invariant iff y_1 = 0.
  Graph a2 = Graph::type_a(2);
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    RepPoint pt = random_point(a2, {1, 1}, {2, 0}, rng);
    if (pt.q[0].is_zero()) continue;
    if (t % 3 == 0) pt.x[arrow_y(a2, 0)] = QMatrix(1, 1);
    bool oracle = !pt.x[arrow_y(a2, 0)].is_zero();
    CHECK(is_stable_positive(pt) == oracle);
  }
}

TEST_CASE("intertwiner") {
  Rng rng(4);
  Graph a2 = Graph::type_a(2);
  IntVec v{1, 2}, w{2, 1};
  for (int t = 0; t < 5; ++t) {
    auto pt = random_stable_point(a2, v, w, {0, 0}, 1, rng);
    REQUIRE(pt);
    auto id = intertwiner(*pt, *pt);
    REQUIRE(id);
    CHECK(act_gv(*id, *pt) == *pt);
    GroupElem g0 = random_group_elem(v, rng);
    RepPoint moved = act_gv(g0, *pt);
    auto g = intertwiner(*pt, moved);
    REQUIRE(g);
    CHECK(act_gv(*g, *pt) == moved);
  }
  // q_1 p_1 of Jordan type (2) against the zero nilpotent
  Graph a1 = Graph::type_a(1);
  RepPoint n1 = a1_point();
  RepPoint n0 = RepPoint::zero(a1, {1}, {2});
  n0.p[0] = QMatrix{{0, 0}};
  n0.q[0] = QMatrix{{0}, {1}};
  CHECK_FALSE(intertwiner(n1, n0).has_value());
}

TEST_CASE("flag map") {
  RepPoint pt = a1_point();
  FlagData fd = flag_map(pt);
  CHECK(fd.x == QMatrix{{0, 0}, {1, 0}});
  REQUIRE(fd.flag.size() == 1);
  CHECK(same_subspace(fd.flag[0], QMatrix{{0}, {1}}));
  CHECK(flag_compatible(fd.x, fd.flag));

  FlagData empty = flag_map(RepPoint::zero(Graph::type_a(2), {0, 0}, {0, 0}));
  CHECK(empty.x.rows() == 0);
  CHECK(empty.flag.size() == 2);

  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    RepPoint fp = random_flag_point(3, {3, 2, 1}, 4, rng);
    CHECK(in_lambda(fp, {0, 0, 0}));
    CHECK(is_stable_positive(fp));
    FlagData f = flag_map(fp);
    CHECK(flag_compatible(f.x, f.flag));
    for (std::size_t k = 0; k < 3; ++k) CHECK(f.flag[k].cols() == static_cast<std::size_t>(fp.v[k]));
    // G_w-equivariance
    GroupElem fw = random_group_elem(fp.w, rng);
    FlagData g = flag_map(act_gw(fw, fp));
    CHECK(g.x == fw[0] * f.x * *inverse(fw[0]));
    for (std::size_t k = 0; k < 3; ++k) CHECK(same_subspace(g.flag[k], fw[0] * f.flag[k]));
  }
  RepPoint bad = RepPoint::zero(Graph::type_a(2), {0, 0}, {0, 1});
  CHECK_THROWS(flag_map(bad));
}

TEST_CASE("random level-set points") {
  Rng rng(6);
  Graph a3 = Graph::type_a(3);
  for (int t = 0; t < 5; ++t) {
    auto pt = random_lambda_point(a3, {1, 2, 1}, {1, 0, 1}, {1, -2, 3}, rng);
    REQUIRE(pt);
    CHECK(in_lambda(*pt, {1, -2, 3}));
  }
  CHECK_FALSE(random_lambda_point(Graph::type_a(1), {1}, {0}, {1}, rng).has_value());
}
