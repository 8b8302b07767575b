#pragma once

#include "sqv/maffei.hpp"
#include "sqv/partition.hpp"

#include <string>
#include <vector>

namespace sqv {

struct LabelPair {
  Partition mu_prime;
  Partition lambda;
};

struct RectSymmetry {
  LabelPair labels;      // (mu', lambda)
  LabelPair hat_labels;  // (mu^', lambda^)
  IntVec mu, hat_mu;     // the compositions
  long w_total = 0;
  bool mu_hat_ok = false;        // mu_i + mu^_{n-i+2} = sum w
  bool mu_prime_hat_ok = false;  // mu^' = 1^{mu'_n} ... n^{mu'_1} (n+1)^{mu'_0}
  bool fits_rectangle = false;   // all four inside (n+1) x sum w
  bool kostka_ok = false;        // K_{lambda, mu'} = K_{lambda^, mu^'} and the transposed-shape version
  unsigned long long kostka = 0, kostka_hat = 0;
  unsigned long long kostka_t = 0, kostka_t_hat = 0;  // K_{mu', lambda} and K_{mu^', lambda^}
  bool identity_ok() const { return mu_hat_ok && mu_prime_hat_ok && fits_rectangle && kostka_ok; }
};

// Both label pairs for the relabelling i -> n + 1 - i.
RectSymmetry rect_symmetry(const IntVec& v, const IntVec& w, long kostka_cap = 20);

// mu^' read off from the exponents of mu' (n + 1 parts at most).
Partition mu_prime_hat_formula(const Partition& mu_prime, std::size_t n, long w_total);

struct ColumnRemoval {
  LabelPair labels;    // (mu', lambda)
  LabelPair breve;     // (mu'^breve, lambda^breve)
  LabelPair embedded;  // slice_labels of (0, v), (0, w) on A_{n+1}
  bool consistent = false;  // first-column deletions recover labels and breve == embedded
};
ColumnRemoval column_removal(const IntVec& v, const IntVec& w);

struct RowAddition {
  LabelPair labels;
  LabelPair ddot;
  LabelPair embedded;  // slice_labels of (v, 0), (w, a) on A_{n+1}
  bool consistent = false;  // deleting the first a rows recovers labels and ddot == embedded
};
RowAddition row_addition(const IntVec& v, const IntVec& w, long a);

enum class ClassicalType { orthogonal, symplectic };
const char* to_string(ClassicalType t);
// delta[k] is delta_{w,k+1}; throws std::invalid_argument unless alternating.
ClassicalType classical_type(const std::vector<int>& delta, std::size_t n);

}  // namespace sqv
