#include "doctest.h"

#include "sqv/kernels.hpp"

using namespace sqv;

TEST_CASE("serial and parallel kernels agree") {
  Rng rng(2024);
  for (std::size_t n : {1u, 3u, 8u, 17u, 40u}) {
    QMatrix a = random_matrix(rng, n, n + 2, 4, 3);
    QMatrix b = random_matrix(rng, n + 2, n, 4, 3);
    CHECK(kernels::multiply_serial(a, b) == kernels::multiply_parallel(a, b));
    auto es = kernels::rref_serial(a), ep = kernels::rref_parallel(a);
    CHECK(es.reduced == ep.reduced);
    CHECK(es.pivots == ep.pivots);
  }
  QMatrix low = random_matrix(rng, 30, 10) * random_matrix(rng, 10, 30);
  auto es = kernels::rref_serial(low), ep = kernels::rref_parallel(low);
  CHECK(es.reduced == ep.reduced);
  CHECK(es.pivots.size() <= 10);
}

TEST_CASE("linear algebra basics") {
  QMatrix a{{1, 2}, {2, 4}};
  CHECK(rank(a) == 1);
  QMatrix n = nullspace(a);
  CHECK(n.cols() == 1);
  CHECK((a * n).is_zero());
  CHECK((left_nullspace(a) * a).is_zero());
  CHECK_FALSE(inverse(a).has_value());
  QMatrix b{{2, 1}, {1, 1}};
  CHECK((b * *inverse(b)).is_identity());
  CHECK(determinant(b) == 1);
  CHECK(solve(a, QMatrix{{1}, {3}}) == std::nullopt);
  CHECK(solve_unique(b, QMatrix{{3}, {2}}) == QMatrix{{1}, {1}});
  QMatrix e1{{1}, {0}, {0}}, e2{{0}, {1}, {0}}, e12{{1, 1}, {1, -1}, {0, 0}};
  CHECK(same_subspace(subspace_sum(e1, e2), e12));
  CHECK(subspace_intersection(e1, e2).cols() == 0);
  CHECK(same_subspace(subspace_intersection(e12, e1), e1));
  CHECK(parse_rational("-6/4") == Q(-3, 2));
  CHECK(to_string(Q(-3, 2)) == "-3/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}
