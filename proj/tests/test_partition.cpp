#include "doctest.h"

#include "sqv/partition.hpp"

#include <random>

using namespace sqv;

TEST_CASE("transpose") {
  CHECK(transpose(Partition({3, 2})) == Partition({2, 2, 1}));
  CHECK(transpose(Partition()) == Partition());
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(0, 6);
  for (int t = 0; t < 200; ++t) {
    std::vector<long> parts(5);
    for (auto& x : parts) x = d(rng);
    Partition p(parts);
    CHECK(transpose(transpose(p)) == p);
    CHECK(transpose(p).weight() == p.weight());
  }
}

TEST_CASE("exponent notation") {
  Partition p = Partition::from_exponents({0, 2, 0, 1});
  CHECK(p == Partition({4, 2, 2}));
  CHECK(p.exponents() == std::vector<long>{0, 2, 0, 1});
  CHECK(p.str() == "(4,2,2)");
}

TEST_CASE("kostka numbers") {
  CHECK(kostka(Partition({2, 1}), Partition({2, 1})) == 1);
  CHECK(kostka(Partition({4, 2}), Partition({6})) == 0);
  CHECK(kostka(Partition({2, 1}), std::vector<long>{1, 1, 1}) == 2);
  CHECK(kostka(Partition({3, 2, 1}), std::vector<long>{1, 1, 1, 1, 1, 1}) == 16);
  for (long n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      CHECK(kostka(lam, lam) == 1);
      for (const auto& mu : partitions_of(n)) {
        auto k = kostka(lam, mu);
        CHECK(k == kostka_bruteforce(lam, mu.parts()));
        CHECK((k > 0) == dominates(lam, mu));
      }
    }
  // compositions: unsorted, with zero entries
  std::mt19937 rng(12);
  for (int t = 0; t < 150; ++t) {
    std::vector<long> mu;
    long total = 0;
    for (std::size_t k = 0, len = 1 + rng() % 5; k < len; ++k) {
      mu.push_back(static_cast<long>(rng() % 3));
      total += mu.back();
    }
    if (total == 0) continue;
    for (const auto& lam : partitions_of(total)) CHECK(kostka(lam, mu) == kostka_bruteforce(lam, mu));
  }
  CHECK_THROWS(kostka(Partition({21}), Partition({21})));
  CHECK(kostka(Partition({21}), Partition({21}), 30) == 1);
}

TEST_CASE("row and column deletion") {
  CHECK(remove_first_column(Partition({3, 1, 1})) == Partition({2}));
  CHECK(remove_first_rows(Partition({3, 1, 1}), 1) == Partition({1, 1}));
  CHECK_THROWS(remove_first_rows(Partition({1}), 2));
}
