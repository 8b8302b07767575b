#include "sqv/partition_ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sqv {

namespace {

long sum(const IntVec& w) { return std::accumulate(w.begin(), w.end(), 0L); }

IntVec reversed(const IntVec& x) { return IntVec(x.rbegin(), x.rend()); }

LabelPair labels_of(const IntVec& v, const IntVec& w) {
  SliceLabel s = slice_labels(v, w);
  return {s.mu_prime, s.lambda};
}

bool fits(const Partition& p, std::size_t n, long w_total) {
  return p.largest() <= static_cast<long>(n + 1) && static_cast<long>(p.length()) <= w_total;
}

}  // namespace

Partition mu_prime_hat_formula(const Partition& mu_prime, std::size_t n, long w_total) {
  // exps[k] = mu'_{k+1}; mu'_0 is the slack.
  std::vector<long> e = mu_prime.exponents();
  e.resize(n + 1, 0);
  long slack = w_total - static_cast<long>(mu_prime.length());
  std::vector<long> hat(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) hat[i - 1] = e[n - i];
  hat[n] = slack;
  for (long x : hat)
    if (x < 0) throw std::invalid_argument("mu_prime_hat_formula: negative exponent");
  return Partition::from_exponents(hat);
}

RectSymmetry rect_symmetry(const IntVec& v, const IntVec& w, long kostka_cap) {
  if (v.size() != w.size()) throw std::invalid_argument("rect_symmetry: v and w differ in length");
  const std::size_t n = v.size();
  RectSymmetry r;
  r.w_total = sum(w);
  r.labels = labels_of(v, w);
  r.hat_labels = labels_of(reversed(v), reversed(w));
  r.mu = slice_composition(tilde_dims(v, w));
  r.hat_mu = slice_composition(hat_dims(v, w));

  r.mu_hat_ok = true;
  for (std::size_t i = 1; i <= n + 1; ++i)
    if (r.mu[i - 1] + r.hat_mu[n + 1 - i] != r.w_total) r.mu_hat_ok = false;

  r.mu_prime_hat_ok = mu_prime_hat_formula(r.labels.mu_prime, n, r.w_total) == r.hat_labels.mu_prime;
  r.fits_rectangle = fits(r.labels.mu_prime, n, r.w_total) && fits(r.hat_labels.mu_prime, n, r.w_total) &&
                     fits(r.labels.lambda, n, r.w_total) && fits(r.hat_labels.lambda, n, r.w_total);

  r.kostka = kostka(r.labels.lambda, r.labels.mu_prime, kostka_cap);
  r.kostka_hat = kostka(r.hat_labels.lambda, r.hat_labels.mu_prime, kostka_cap);
  r.kostka_t = kostka(r.labels.mu_prime, r.labels.lambda, kostka_cap);
  r.kostka_t_hat = kostka(r.hat_labels.mu_prime, r.hat_labels.lambda, kostka_cap);
  r.kostka_ok = r.kostka == r.kostka_hat && r.kostka_t == r.kostka_t_hat;
  return r;
}

ColumnRemoval column_removal(const IntVec& v, const IntVec& w) {
  if (v.size() != w.size()) throw std::invalid_argument("column_removal: v and w differ in length");
  ColumnRemoval c;
  c.labels = labels_of(v, w);
  IntVec mu = slice_composition(tilde_dims(v, w));
  mu.push_back(sum(w));
  c.breve.mu_prime = transpose(Partition(mu));
  std::vector<long> exps(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) exps[i + 1] = w[i];
  c.breve.lambda = Partition::from_exponents(exps);

  IntVec v0{0}, w0{0};
  v0.insert(v0.end(), v.begin(), v.end());
  w0.insert(w0.end(), w.begin(), w.end());
  c.embedded = labels_of(v0, w0);

  c.consistent = remove_first_column(c.breve.lambda) == c.labels.lambda &&
                 remove_first_column(c.breve.mu_prime) == c.labels.mu_prime &&
                 c.breve.mu_prime == c.embedded.mu_prime && c.breve.lambda == c.embedded.lambda;
  return c;
}

RowAddition row_addition(const IntVec& v, const IntVec& w, long a) {
  if (v.size() != w.size()) throw std::invalid_argument("row_addition: v and w differ in length");
  if (a < 0) throw std::invalid_argument("row_addition: a must be nonnegative");
  const std::size_t n = v.size();
  RowAddition r;
  r.labels = labels_of(v, w);

  std::vector<long> mu_e = r.labels.mu_prime.exponents();
  mu_e.resize(n + 1, 0);
  mu_e[n] += a;
  r.ddot.mu_prime = Partition::from_exponents(mu_e);
  std::vector<long> lam_e(w.begin(), w.end());
  lam_e.push_back(a);
  r.ddot.lambda = Partition::from_exponents(lam_e);

  IntVec v1 = v, w1 = w;
  v1.push_back(0);
  w1.push_back(a);
  r.embedded = labels_of(v1, w1);

  auto k = static_cast<std::size_t>(a);
  r.consistent = remove_first_rows(r.ddot.mu_prime, k) == r.labels.mu_prime &&
                 remove_first_rows(r.ddot.lambda, k) == r.labels.lambda && r.ddot.mu_prime == r.embedded.mu_prime &&
                 r.ddot.lambda == r.embedded.lambda;
  return r;
}

const char* to_string(ClassicalType t) { return t == ClassicalType::orthogonal ? "orthogonal" : "symplectic"; }

ClassicalType classical_type(const std::vector<int>& delta, std::size_t n) {
  if (delta.size() != n || n == 0) throw std::invalid_argument("classical_type: need one sign per vertex");
  for (std::size_t k = 0; k < n; ++k) {
    if (delta[k] != 1 && delta[k] != -1) throw std::invalid_argument("classical_type: signs must be +-1");
    if (k > 0 && delta[k] != -delta[k - 1]) throw std::invalid_argument("classical_type: pattern is not alternating");
  }
  return delta[0] == 1 ? ClassicalType::orthogonal : ClassicalType::symplectic;
}

}  // namespace sqv
