#include "doctest.h"

#include "sqv/partition_ops.hpp"

#include <random>

using namespace sqv;

namespace {

// All vectors with entries in [0, cap].
std::vector<IntVec> grid(std::size_t n, long cap) {
  std::vector<IntVec> out{IntVec{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<IntVec> next;
    for (const auto& x : out)
      for (long e = 0; e <= cap; ++e) {
        IntVec y = x;
        y.push_back(e);
        next.push_back(y);
      }
    out = std::move(next);
  }
  return out;
}

bool both_sides_valid(const IntVec& v, const IntVec& w) {
  try {
    slice_labels(v, w);
    slice_labels(IntVec(v.rbegin(), v.rend()), IntVec(w.rbegin(), w.rend()));
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

TEST_CASE("transpose property sweep") {
  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    std::vector<long> parts;
    int len = static_cast<int>(rng() % 7);
    for (int k = 0; k < len; ++k) parts.push_back(1 + static_cast<long>(rng() % 6));
    Partition p(parts);
    CHECK(transpose(transpose(p)) == p);
  }
  CHECK(transpose(Partition({3, 2})) == Partition({2, 2, 1}));
  CHECK(transpose(Partition()).empty());
}

TEST_CASE("rectangular symmetry") {
  SUBCASE("two-row example") {
    auto r = rect_symmetry({1, 2, 2, 3, 2, 1}, {0, 1, 0, 1, 0, 0});
    CHECK(r.labels.mu_prime == Partition({6}));
    CHECK(r.labels.lambda == Partition({4, 2}));
    CHECK(r.hat_labels.mu_prime == Partition({7, 1}));
    CHECK(r.hat_labels.lambda == Partition({5, 3}));
    CHECK(r.mu[3] + r.hat_mu[3] == 2);
    CHECK(r.mu[3] == 0);
    CHECK(r.identity_ok());
    CHECK(r.kostka == 0);
    CHECK(r.kostka_t == 1);
    CHECK(r.kostka_t_hat == 1);
  }
  SUBCASE("n = 2") {
    auto r = rect_symmetry({0, 0}, {1, 1});
    CHECK(r.labels.mu_prime == Partition({2, 1}));
    CHECK(r.labels.lambda == Partition({2, 1}));
    CHECK(r.hat_labels.mu_prime == Partition({2, 1}));
    CHECK(r.hat_labels.lambda == Partition({2, 1}));
    CHECK(r.kostka == 1);
    CHECK(r.kostka_hat == 1);
    CHECK(r.identity_ok());
  }
  SUBCASE("w = 0") {
    auto r = rect_symmetry({0, 0, 0}, {0, 0, 0});
    CHECK(r.labels.mu_prime.empty());
    CHECK(r.hat_labels.mu_prime.empty());
    CHECK(r.labels.lambda.empty());
    CHECK(r.identity_ok());
  }
  SUBCASE("invalid flag data propagates") { CHECK_THROWS_AS(rect_symmetry({3, 0}, {1, 0}), std::invalid_argument); }
  SUBCASE("grid sweep") {
    int checked = 0;
    for (std::size_t n = 1; n <= 3; ++n)
      for (const IntVec& w : grid(n, 2))
        for (const IntVec& v : grid(n, 3)) {
          if (!both_sides_valid(v, w)) continue;
          auto r = rect_symmetry(v, w);
          CHECK(r.mu_hat_ok);
          CHECK(r.mu_prime_hat_ok);
          CHECK(r.fits_rectangle);
          CHECK(r.kostka_ok);
          ++checked;
        }
    CHECK(checked > 100);
  }
}

TEST_CASE("column removal") {
  auto c = column_removal({0, 0}, {1, 1});
  CHECK(c.breve.mu_prime == Partition({3, 2}));
  CHECK(c.breve.lambda == Partition({3, 2}));
  CHECK(remove_first_column(c.breve.mu_prime) == Partition({2, 1}));
  CHECK(remove_first_column(c.breve.lambda) == Partition({2, 1}));
  CHECK(c.consistent);

  auto z = column_removal({0, 0}, {0, 0});
  CHECK(z.breve.mu_prime.empty());
  CHECK(z.breve.lambda.empty());
  CHECK(z.consistent);

  for (std::size_t n = 1; n <= 3; ++n)
    for (const IntVec& w : grid(n, 2))
      for (const IntVec& v : grid(n, 2)) {
        if (!both_sides_valid(v, w)) continue;
        auto r = column_removal(v, w);
        CHECK(r.consistent);
        // one box added per row
        CHECK(r.breve.lambda.length() == r.labels.lambda.length());
        CHECK(r.breve.lambda.weight() == r.labels.lambda.weight() + static_cast<long>(r.labels.lambda.length()));
      }
}

TEST_CASE("row addition") {
  IntVec v{1, 2, 2, 3, 2, 1}, w{0, 1, 0, 1, 0, 0};
  auto a0 = row_addition(v, w, 0);
  CHECK(a0.ddot.mu_prime == a0.labels.mu_prime);
  CHECK(a0.ddot.lambda == a0.labels.lambda);
  auto a1 = row_addition(v, w, 1);
  CHECK(a1.ddot.mu_prime == Partition({7, 6}));
  CHECK(a1.ddot.lambda == Partition({7, 4, 2}));
  CHECK(a1.consistent);
  CHECK_THROWS(row_addition(v, w, -1));

  std::mt19937 rng(62);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng() % 3;
    IntVec vv(n), ww(n);
    for (auto& x : vv) x = rng() % 3;
    for (auto& x : ww) x = rng() % 3;
    if (!both_sides_valid(vv, ww)) continue;
    auto r = row_addition(vv, ww, static_cast<long>(rng() % 3));
    CHECK(r.consistent);
  }
}

TEST_CASE("classical type") {
  CHECK(classical_type({1, -1, 1}, 3) == ClassicalType::orthogonal);
  CHECK(classical_type({-1, 1, -1, 1}, 4) == ClassicalType::symplectic);
  CHECK(classical_type({-1}, 1) == ClassicalType::symplectic);
  CHECK(std::string(to_string(ClassicalType::orthogonal)) == "orthogonal");
  CHECK_THROWS_AS(classical_type({1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(classical_type({1}, 2), std::invalid_argument);
}
