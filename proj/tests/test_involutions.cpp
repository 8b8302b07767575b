#include "doctest.h"

#include "fixtures.hpp"
#include "sqv/involutions.hpp"

using namespace sqv;
using fixtures::a1_point;

namespace {

std::vector<int> alternating(std::size_t n, int first) {
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = i % 2 ? -first : first;
  return d;
}

// Dimensions with even w wherever the sign is -1.
IntVec w_for(const std::vector<int>& delta, long base) {
  IntVec w;
  for (int d : delta) w.push_back(d == -1 ? 2 * base : base);
  return w;
}

}  // namespace

TEST_CASE("tau on the A_1 fixed point") {
  RepPoint pt = a1_point();
  InvolutionConfig cfg = default_config(pt, {-1});
  CHECK(tau(pt, cfg.forms_v, cfg.forms_w) == pt);
  RepPoint z = RepPoint::zero(pt.graph, {1}, {2});
  CHECK(tau(z, cfg.forms_v, cfg.forms_w) == z);
  CHECK(tau_hat(z, cfg.forms_v, cfg.forms_w) == z);
}

TEST_CASE("moment map under tau and tau-hat") {
  Rng rng(21);
  for (std::size_t n = 1; n <= 3; ++n) {
    Graph g = Graph::type_a(n);
    auto delta = alternating(n, -1);
    IntVec w = w_for(delta, 1), v(n, 2);
    for (int t = 0; t < 5; ++t) {
      RepPoint pt = random_point(g, v, w, rng);
      InvolutionConfig cfg = default_config(pt, delta);
      cfg.forms_v = random_equivalent_grading(cfg.forms_v, rng);
      auto mu = moment_map(pt);
      auto mt = moment_map(tau(pt, cfg.forms_v, cfg.forms_w));
      auto mh = moment_map(tau_hat(pt, cfg.forms_v, cfg.forms_w));
      for (std::size_t i = 0; i < n; ++i) {
        QMatrix star = right_adjoint(mu[i], cfg.forms_v[i], cfg.forms_v[i]);
        CHECK(mt[i] == -star);
        CHECK(mh[i] == star);
      }
      RepPoint other = random_point(g, v, w, rng);
      Q om = symplectic_pair(pt, other);
      CHECK(symplectic_pair(tau_hat(pt, cfg.forms_v, cfg.forms_w), tau_hat(other, cfg.forms_v, cfg.forms_w)) == -om);
      CHECK(symplectic_pair(tau(pt, cfg.forms_v, cfg.forms_w), tau(other, cfg.forms_v, cfg.forms_w)) == om);
    }
  }
}

TEST_CASE("orders of tau and tau-hat on orbits") {
  Rng rng(22);
  for (std::size_t n = 1; n <= 3; ++n) {
    Graph g = Graph::type_a(n);
    auto delta = alternating(n, 1);
    IntVec w = w_for(delta, 1), v(n, 1);
    for (int t = 0; t < 3; ++t) {
      auto pt = random_stable_point(g, v, w, fixtures::zeros(n), 1, rng);
      REQUIRE(pt);
      InvolutionConfig cfg = default_config(*pt, delta);
      RepPoint tt = tau(tau(*pt, cfg.forms_v, cfg.forms_w), cfg.forms_v, cfg.forms_w);
      CHECK(same_orbit(tt, *pt));
      std::vector<int> uniform(n, -1);
      IntVec wu(n, 2);
      auto pu = random_stable_point(g, v, wu, fixtures::zeros(n), 1, rng);
      REQUIRE(pu);
      InvolutionConfig cu = default_config(*pu, uniform, TauMode::tau_hat);
      CHECK(same_orbit(tau_hat(tau_hat(*pu, cu.forms_v, cu.forms_w), cu.forms_v, cu.forms_w), *pu));
    }
  }
}

TEST_CASE("tau is independent of the V-forms up to G_v") {
  Rng rng(23);
  Graph g = Graph::type_a(3);
  auto delta = alternating(3, -1);
  IntVec w = w_for(delta, 1), v{2, 2, 1};
  for (int t = 0; t < 3; ++t) {
    auto pt = random_stable_point(g, v, w, {0, 0, 0}, 1, rng);
    REQUIRE(pt);
    InvolutionConfig cfg = default_config(*pt, delta);
    FormedGrading other = random_equivalent_grading(cfg.forms_v, rng);
    for (std::size_t i = 0; i < 3; ++i) other[i] = Form(other[i].gram());
    CHECK(same_orbit(tau(*pt, cfg.forms_v, cfg.forms_w), tau(*pt, other, cfg.forms_w)));
  }
}

TEST_CASE("diagram automorphisms on points") {
  Rng rng(24);
  Graph a3 = Graph::type_a(3);
  RepPoint pt = random_point(a3, {1, 2, 1}, {1, 0, 1}, rng);
  CHECK(diagram_apply(DiagramAuto::identity(a3), pt) == pt);

  Graph sym(3, {{0, 1}, {2, 1}}, {-1, -1});
  DiagramAuto flip = DiagramAuto::from_vertex_perm(sym, {2, 1, 0});
  REQUIRE(flip.c == 1);
  RepPoint sp = random_point(sym, {1, 2, 3}, {2, 0, 1}, rng);
  RepPoint fp = diagram_apply(flip, sp);
  CHECK(fp.v == IntVec{3, 2, 1});
  for (std::size_t h = 0; h < sym.num_arrows(); ++h) CHECK(fp.x[h] == sp.x[flip.inverse_arrow(h)]);
  auto mu = moment_map(sp), mf = moment_map(fp);
  for (std::size_t i = 0; i < 3; ++i) CHECK(mf[i] == mu[flip.inverse_vertex(i)]);
  CHECK(diagram_apply(flip, fp) == sp);

  DiagramAuto flip_a = DiagramAuto::from_vertex_perm(a3, {2, 1, 0});
  RepPoint q = random_point(a3, {1, 2, 1}, {2, 0, 2}, rng);
  auto mq = moment_map(q), ma = moment_map(diagram_apply(flip_a, q));
  for (std::size_t i = 0; i < 3; ++i) CHECK(ma[i] == mq[flip_a.inverse_vertex(i)]);

  // a(g . x) = a(g) . a(x)
  GroupElem g = random_group_elem(q.v, rng);
  CHECK(diagram_apply(flip_a, act_gv(g, q)) == act_gv(permute_elem(flip_a, g), diagram_apply(flip_a, q)));

  // tau and a commute once the forms are moved along
  InvolutionConfig cfg = default_config(q, {-1, 1, -1});
  RepPoint lhs = diagram_apply(flip_a, tau(q, cfg.forms_v, cfg.forms_w));
  RepPoint rhs = tau(diagram_apply(flip_a, q), permute_forms(flip_a, cfg.forms_v), permute_forms(flip_a, cfg.forms_w));
  CHECK(lhs == rhs);
}

TEST_CASE("flag involution") {
  Form j = Form::standard(2, -1);
  QMatrix e1{{1}, {0}};
  FlagPair zero = flag_sigma1(QMatrix(2, 2), {e1}, j, SigmaMode::sigma);
  CHECK(zero.x.is_zero());
  CHECK(same_subspace(zero.flag[0], e1));
  // x in sp_2, nilpotent, maps W into the Lagrangian line and the line to 0
  QMatrix x{{0, 1}, {0, 0}};
  CHECK(classify_membership(x, j) != Membership::neither);
  FlagPair fixed = flag_sigma1(x, {e1}, j, SigmaMode::sigma);
  CHECK(same_flag_pair(fixed, FlagPair{x, {e1}}));
  CHECK_THROWS(flag_sigma1(QMatrix{{0, 0}, {1, 0}}, {e1}, j, SigmaMode::sigma));

  Rng rng(25);
  Form s = Form::standard(4, 1);
  for (int t = 0; t < 5; ++t) {
    RepPoint fp = random_flag_point(2, {3, 1}, 4, rng);
    FlagData fd = flag_map(fp);
    for (auto mode : {SigmaMode::sigma, SigmaMode::sigma_hat}) {
      FlagPair once = flag_sigma1(fd.x, fd.flag, s, mode);
      CHECK(flag_compatible(once.x, once.flag));
      FlagPair twice = flag_sigma1(once.x, once.flag, s, mode);
      CHECK(same_flag_pair(twice, FlagPair{fd.x, fd.flag}));
    }
  }
}
