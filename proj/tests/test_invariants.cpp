#include "doctest.h"

#include "sqv/invariants.hpp"

using namespace sqv;

namespace {

InvolutionConfig alternating_config(const IntVec& v, const IntVec& w, Rng& rng) {
  std::vector<int> dv(v.size()), dw(w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    dv[i] = i % 2 == 0 ? 1 : -1;
    dw[i] = -dv[i];
  }
  InvolutionConfig cfg;
  cfg.forms_v = random_equivalent_grading(standard_grading(v, dv), rng);
  cfg.forms_w = random_equivalent_grading(standard_grading(w, dw), rng);
  return cfg;
}

}  // namespace

TEST_CASE("trace_cycle") {
  Graph a2 = Graph::type_a(2);
  Rng rng(81);
  CHECK(trace_cycle(RepPoint::zero(a2, {2, 2}, {1, 1}), Path{0, {0, 1}}) == 0);
  RepPoint pt = random_point(a2, {2, 2}, {1, 1}, rng);
  CHECK(trace_cycle(pt, Path{0, {0, 1}}) == (pt.x[1] * pt.x[0]).trace());
  CHECK(trace_cycle(pt, Path{1, {1, 0}}) == trace_cycle(pt, Path{0, {0, 1}}));
  CHECK(trace_cycle(pt, Path{0, {0, 1, 0, 1}}) == trace_cycle(pt, Path{1, {1, 0, 1, 0}}));
  CHECK(trace_cycle(pt, Path::lazy(1)) == 2);
  CHECK_THROWS_AS(trace_cycle(pt, Path{0, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(trace_cycle(pt, Path{0, {0, 0}}), std::invalid_argument);
}

TEST_CASE("chi_path") {
  Graph a2 = Graph::type_a(2);
  Rng rng(82);
  CHECK(chi_path(RepPoint::zero(a2, {1, 1}, {2, 1}), Path::lazy(0), QMatrix::identity(2)) == 0);
  RepPoint pt = random_point(a2, {2, 1}, {2, 2}, rng);
  CHECK(chi_path(pt, Path::lazy(0), QMatrix::identity(2)) == (pt.q[0] * pt.p[0]).trace());
  QMatrix e(2, 2);
  e(1, 0) = 1;
  QMatrix comp = pt.q[1] * pt.x[0] * pt.p[0];
  CHECK(chi_path(pt, Path{0, {0}}, e) == comp(1, 0));
  CHECK(path_composite(pt, Path{0, {0}}) == comp);
  CHECK_THROWS_AS(chi_path(pt, Path{0, {0}}, QMatrix(3, 2)), std::invalid_argument);
}

TEST_CASE("tau-fixed sampling") {
  Rng rng(83);
  Graph a2 = Graph::type_a(2);
  IntVec v{2, 2}, w{2, 2};
  InvolutionConfig cfg = alternating_config(v, w, rng);
  RepPoint pt = random_tau_fixed_point(a2, v, w, cfg, rng);
  CHECK(is_tau_fixed(pt, cfg));
  InvolutionConfig sym;
  sym.forms_v = standard_grading(v, {1, 1});
  sym.forms_w = standard_grading(w, {1, 1});
  CHECK_THROWS_AS(random_tau_fixed_point(a2, v, w, sym, rng), std::invalid_argument);
}

TEST_CASE("invariance under isometries") {
  Rng rng(84);
  for (std::size_t n : {1, 2, 3}) {
    Graph g = Graph::type_a(n);
    IntVec v(n, 2), w(n, 2);
    InvolutionConfig cfg = alternating_config(v, w, rng);
    RepPoint pt = random_tau_fixed_point(g, v, w, cfg, rng);
    auto rep = check_invariance(pt, cfg, 100, 1000 + n);
    CHECK(rep.ok());
    CHECK(rep.samples == 100);
    CHECK(rep.generators > 0);
  }
}

TEST_CASE("invariance controls") {
  Rng rng(85);
  Graph a2 = Graph::type_a(2);
  IntVec v{2, 2}, w{2, 2};
  InvolutionConfig cfg = alternating_config(v, w, rng);
  RepPoint pt = random_tau_fixed_point(a2, v, w, cfg, rng);
  CHECK(check_invariance_with(pt, cfg, {identity_elem(v)}, {}).ok());
  // A non-isometric element of G_w moves the chi generators.
  auto neg = check_invariance_with(pt, cfg, {}, {random_group_elem(w, rng)});
  CHECK_FALSE(neg.ok());
  bool moved = false;
  for (const auto& s : neg.violations) moved = moved || s.find("changed") != std::string::npos;
  CHECK(moved);
  // A non-isometric element of G_v leaves the generators alone but leaves M^tau.
  auto gv = check_invariance_with(pt, cfg, {random_group_elem(v, rng)}, {});
  REQUIRE(gv.violations.size() == 1);
  CHECK(gv.violations[0].find("tau-fixedness lost") != std::string::npos);
  // Not tau-fixed input.
  CHECK_FALSE(check_invariance(random_point(a2, v, w, rng), cfg, 1, 1).ok());
}

TEST_CASE("trace cycles are invariant under all of G_v") {
  Rng rng(86);
  Graph a3 = Graph::type_a(3);
  RepPoint pt = random_point(a3, {1, 2, 1}, {1, 0, 1}, rng);
  GroupElem g = random_group_elem(pt.v, rng);
  RepPoint y = act_gv(g, pt);
  for (const Path& f : enumerate_paths(a3, 4))
    if (!f.is_lazy() && path_source(a3, f) == path_target(a3, f)) CHECK(trace_cycle(y, f) == trace_cycle(pt, f));
}
