#include "doctest.h"

#include "sqv/forms.hpp"

using namespace sqv;

namespace {

// (Te, e')_dst = (e, T*e')_src on all basis pairs.
bool right_adjoint_property(const QMatrix& t, const Form& src, const Form& dst) {
  QMatrix ts = right_adjoint(t, src, dst);
  for (std::size_t a = 0; a < src.dim(); ++a)
    for (std::size_t b = 0; b < dst.dim(); ++b) {
      QMatrix e(src.dim(), 1), f(dst.dim(), 1);
      e(a, 0) = 1;
      f(b, 0) = 1;
      if (dst.pair(t * e, f) != src.pair(e, ts * f)) return false;
    }
  return true;
}

Form random_form(Rng& rng, std::size_t dim, int delta) {
  Form base = Form::standard(dim, delta);
  return random_equivalent_grading({base}, rng)[0];
}

}  // namespace

TEST_CASE("right adjoint on a symplectic plane") {
  Form j(QMatrix{{0, 1}, {-1, 0}}, -1);
  QMatrix t{{1, 2}, {3, 4}};
  CHECK(right_adjoint(t, j, j) == QMatrix{{4, -2}, {-3, 1}});
  CHECK(right_adjoint_property(t, j, j));
  CHECK(right_adjoint(QMatrix::identity(2), j, j).is_identity());
}

TEST_CASE("adjoint identities on random instances") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    int d1 = t % 2 ? 1 : -1, d2 = t % 3 ? 1 : -1, d3 = t % 5 ? -1 : 1;
    Form f1 = random_form(rng, 2, d1), f2 = random_form(rng, 4, d2), f3 = random_form(rng, 2, d3);
    QMatrix a = random_matrix(rng, 4, 2), b = random_matrix(rng, 2, 4);
    CHECK(right_adjoint_property(a, f1, f2));
    CHECK(right_adjoint(b * a, f1, f3) == right_adjoint(a, f1, f2) * right_adjoint(b, f2, f3));
    CHECK(right_adjoint(right_adjoint(a, f1, f2), f2, f1) == Q(d1 * d2) * a);
    CHECK(left_adjoint(right_adjoint(a, f1, f2), f2, f1) == a);
    CHECK(right_adjoint(left_adjoint(a, f1, f2), f2, f1) == a);
  }
  Form s(QMatrix{{2, 1}, {1, 3}}, 1);
  QMatrix t{{1, 5}, {0, -2}};
  CHECK(left_adjoint(t, s, s) == right_adjoint(t, s, s));
}

TEST_CASE("form construction") {
  CHECK_THROWS(Form(QMatrix{{1, 1}, {1, 1}}));
  CHECK_THROWS(Form(QMatrix{{1, 2}, {0, 1}}, 1));
  CHECK_THROWS(Form::standard(3, -1));
}

TEST_CASE("jordan types") {
  CHECK(jordan_type(QMatrix(3, 3)) == Partition({1, 1, 1}));
  CHECK(jordan_type(QMatrix{{0, 1}, {0, 0}}) == Partition({2}));
  QMatrix j2{{0, 1}, {0, 0}};
  QMatrix n = block_diag({j2, j2, QMatrix(1, 1)});
  CHECK(jordan_type(n) == Partition({2, 2, 1}));
  CHECK_THROWS(jordan_type(QMatrix{{1, 0}, {0, 0}}));
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    QMatrix g = random_matrix(rng, 5, 5);
    auto gi = inverse(g);
    if (!gi) continue;
    CHECK(jordan_type(g * n * *gi) == jordan_type(n));
  }
}

TEST_CASE("orthogonal complements") {
  Form j(QMatrix{{0, 1}, {-1, 0}}, -1);
  CHECK(orthogonal_complement(QMatrix::identity(2), j).cols() == 0);
  QMatrix e1{{1}, {0}};
  CHECK(same_subspace(orthogonal_complement(e1, j), e1));
  CHECK(orthogonal_complement(QMatrix(2, 0), j).cols() == 2);
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    Form f = random_form(rng, 4, t % 2 ? 1 : -1);
    QMatrix s = random_matrix(rng, 4, static_cast<std::size_t>(t % 4));
    QMatrix perp = orthogonal_complement(s, f);
    CHECK(rank(s) + perp.cols() == 4);
    CHECK(same_subspace(orthogonal_complement(perp, f), canonical_basis(s)));
  }
}

TEST_CASE("isometries and membership") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    Form f = Form::standard(t % 2 ? 2 : 4, t % 2 ? -1 : 1);
    QMatrix g = sample_isometry(f, rng), h = sample_isometry(f, rng);
    CHECK(is_isometry(g, f));
    CHECK(is_isometry(g * h, f));
  }
  Form j = Form::standard(2, -1);
  CHECK(classify_membership(QMatrix(2, 2), j) == Membership::both);
  QMatrix sym{{1, 2}, {2, 5}};
  CHECK(classify_membership(j.gram_inverse() * sym, j) == Membership::lie_isometry);
  CHECK(classify_membership(QMatrix{{1, 2}, {3, 4}}, j) == Membership::neither);
  CHECK(classify_membership(QMatrix::identity(2), j) == Membership::symmetric_space);
}

TEST_CASE("gamma alternating signs") {
  Graph a3 = Graph::type_a(3);
  CHECK(is_gamma_alternating(a3, {1, -1, 1}));
  CHECK_FALSE(is_gamma_alternating(a3, {1, 1, -1}));
  CHECK(is_gamma_alternating(Graph::type_a(1), {-1}));
}
