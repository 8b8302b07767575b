#include "doctest.h"

#include "fixtures.hpp"
#include "sqv/involutions.hpp"
#include "sqv/reflection.hpp"
#include "sqv/zw.hpp"

using namespace sqv;
using fixtures::zeros;

namespace {

RepPoint lambda_point(const Graph& g, const IntVec& v, const IntVec& w, const QVec& zc, Rng& rng) {
  auto pt = random_lambda_point(g, v, w, zc, rng);
  REQUIRE(pt);
  return *pt;
}

}  // namespace

TEST_CASE("paths") {
  Graph a3 = Graph::type_a(3);
  CHECK(enumerate_paths(a3, 0).size() == 3);
  // lengths 0, 1, 2: 3 + 4 + 6
  CHECK(enumerate_paths(a3, 2).size() == 13);
  Path f{0, {0, 2}};
  CHECK(is_composable(a3, f));
  CHECK(path_source(a3, f) == 0);
  CHECK(path_target(a3, f) == 2);
  CHECK(path_eps(a3, f) == 1);
  Path fb = path_bar(a3, f);
  CHECK(fb == Path{2, {3, 1}});
  CHECK(path_bar(a3, fb) == f);
  CHECK_FALSE(is_composable(a3, Path{0, {0, 0}}));
  CHECK(path_str(a3, f) == "0->1->2");
  CHECK(path_str(a3, Path::lazy(1)) == "[1]");
}

TEST_CASE("evaluation tables of points") {
  Graph a1 = Graph::type_a(1);
  auto t1 = eval_from_point(fixtures::a1_point(), zeros(1), 6);
  CHECK(t1.table.size() == 1);
  CHECK(t1.at(Path::lazy(0)) == fixtures::a1_point().q[0] * fixtures::a1_point().p[0]);

  Graph a2 = Graph::type_a(2);
  auto z = eval_from_point(RepPoint::zero(a2, {1, 1}, {1, 1}), zeros(2), 4);
  for (const auto& [f, m] : z.table) CHECK(m.is_zero());

  Rng rng(41);
  QVec zc{Q(1), Q(-2)};
  RepPoint pt = lambda_point(a2, {2, 1}, {2, 1}, zc, rng);
  auto pe = eval_from_point(pt, zc, 6);
  CHECK(satisfies_relations(pe));
  CHECK(pe.at(Path{0, {0}}) == pt.q[1] * pt.x[0] * pt.p[0]);
  CHECK(pe.at(Path{1, {1, 0}}) == pt.q[1] * pt.x[0] * pt.x[1] * pt.p[1]);

  RepPoint off = random_point(a2, {2, 1}, {2, 1}, rng);
  CHECK_THROWS_AS(eval_from_point(off, zc, 4), std::domain_error);
}

TEST_CASE("tau0 matches tau on points") {
  Rng rng(42);
  Graph a2 = Graph::type_a(2);
  for (int delta : {1, -1}) {
    IntVec w{2, 2};
    QVec zc{Q(1, 2), Q(3)};
    RepPoint pt = lambda_point(a2, {2, 1}, w, zc, rng);
    InvolutionConfig cfg = default_config(pt, {delta, delta});
    cfg.forms_w = random_equivalent_grading(cfg.forms_w, rng);
    auto lhs = tau0(eval_from_point(pt, zc, 6), cfg.forms_w);
    QVec neg{-zc[0], -zc[1]};
    auto rhs = eval_from_point(apply_tau(pt, cfg), neg, 6);
    CHECK(lhs == rhs);
    CHECK(lhs.at(Path::lazy(0)) ==
          -right_adjoint(eval_from_point(pt, zc, 6).at(Path::lazy(0)), cfg.forms_w[0], cfg.forms_w[0]));
  }
}

TEST_CASE("tau0 squared with alternating forms") {
  Rng rng(43);
  Graph a2 = Graph::type_a(2);
  IntVec w{1, 2};
  QVec zc{Q(2), Q(-1)};
  RepPoint pt = lambda_point(a2, {1, 1}, w, zc, rng);
  auto pe = eval_from_point(pt, zc, 6);
  FormedGrading alt = random_equivalent_grading(standard_grading(w, {1, -1}), rng);
  CHECK(tau0(tau0(pe, alt), alt) == pe);
  // Uniform symmetric forms: tau0 squared flips odd-length paths.
  FormedGrading sym = standard_grading({1, 2}, {1, 1});
  auto twice = tau0(tau0(pe, sym), sym);
  for (const auto& [f, m] : pe.table) CHECK(twice.at(f) == (f.length() % 2 ? -m : m));
}

TEST_CASE("theta_a") {
  Rng rng(44);
  Graph a3 = Graph::type_a(3);
  QVec zc{Q(1), Q(2), Q(1)};
  RepPoint pt = lambda_point(a3, {1, 1, 1}, {1, 0, 1}, zc, rng);
  auto pe = eval_from_point(pt, zc, 6);
  CHECK(theta_a(pe, DiagramAuto::identity(a3)) == pe);
  DiagramAuto flip = DiagramAuto::from_vertex_perm(a3, {2, 1, 0});
  auto lhs = theta_a(pe, flip);
  auto rhs = eval_from_point(diagram_apply(flip, pt), permute(flip, zc), 6);
  CHECK(lhs == rhs);
  CHECK(theta_a(lhs, flip) == eval_from_point(diagram_apply(flip, diagram_apply(flip, pt)), zc, 6));
}

TEST_CASE("Lusztig reflection") {
  Rng rng(45);
  Graph a2 = Graph::type_a(2);

  SUBCASE("zero parameter is the identity") {
    RepPoint pt = random_flag_point(2, {2, 1}, 3, rng);
    auto pe = eval_from_point(pt, zeros(2), 6);
    CHECK(lusztig_reflect(pe, 0) == pe);
    CHECK(lusztig_reflect(pe, 1) == pe);
  }

  SUBCASE("agrees with the point-level functor") {
    for (std::size_t n : {2, 3}) {
      Graph g = Graph::type_a(n);
      IntVec v(n, 1), w(n, 1);
      v[0] = 2;
      w[0] = 2;
      QVec zc(n);
      for (std::size_t i = 0; i < n; ++i) zc[i] = Q(static_cast<long>(i) + 1) / 3;
      for (int t = 0; t < 2; ++t) {
        RepPoint pt = lambda_point(g, v, w, zc, rng);
        auto pe = eval_from_point(pt, zc, 6);
        for (std::size_t i = 0; i < n; ++i) {
          auto r = reflect_point(pt, i, Parameter{IntVec(n, 1), zc});
          auto lhs = lusztig_reflect(pe, i);
          CHECK(lhs.zeta_c == r.zeta.zeta_c);
          CHECK(lhs == eval_from_point(r.point, r.zeta.zeta_c, 6));
          CHECK(lhs.at(Path::lazy(i)) == pe.at(Path::lazy(i)) + QMatrix::scalar(pt.wdim(i), zc[i]));
        }
      }
    }
  }

  SUBCASE("braid relation and involutivity") {
    QVec zc{Q(1), Q(-3)};
    RepPoint pt = lambda_point(a2, {1, 1}, {1, 1}, zc, rng);
    auto pe = eval_from_point(pt, zc, 6);
    CHECK(lusztig_reflect(lusztig_reflect(pe, 0), 0) == pe);
    CHECK(lusztig_reflect_word(pe, {0, 1, 0}) == lusztig_reflect_word(pe, {1, 0, 1}));
  }
}

TEST_CASE("G_w action on tables") {
  Rng rng(46);
  Graph a2 = Graph::type_a(2);
  QVec zc{Q(1), Q(1)};
  RepPoint pt = lambda_point(a2, {1, 2}, {2, 1}, zc, rng);
  GroupElem gw = random_group_elem(pt.w, rng);
  CHECK(act_gw(gw, eval_from_point(pt, zc, 5)) == eval_from_point(sqv::act_gw(gw, pt), zc, 5));
  GroupElem gv = random_group_elem(pt.v, rng);
  CHECK(eval_from_point(act_gv(gv, pt), zc, 5) == eval_from_point(pt, zc, 5));
}
