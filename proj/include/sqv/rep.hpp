#pragma once

#include "sqv/graph.hpp"
#include "sqv/matrix.hpp"

#include <optional>
#include <vector>

namespace sqv {

// A point (x_h, p_i, q_i) of M(v, w).  x[h] : V_{o(h)} -> V_{i(h)},
// p[i] : W_i -> V_i, q[i] : V_i -> W_i.
struct RepPoint {
  Graph graph;
  IntVec v, w;
  std::vector<QMatrix> x, p, q;

  static RepPoint zero(const Graph& g, const IntVec& v, const IntVec& w);
  void validate() const;
  std::size_t vdim(std::size_t i) const { return static_cast<std::size_t>(v.at(i)); }
  std::size_t wdim(std::size_t i) const { return static_cast<std::size_t>(w.at(i)); }
  bool operator==(const RepPoint& o) const;
  bool operator!=(const RepPoint& o) const { return !(*this == o); }
};

// Vertex-indexed family of square matrices (element of G_v or G_w).
using GroupElem = std::vector<QMatrix>;
GroupElem identity_elem(const IntVec& dims);
GroupElem random_group_elem(const IntVec& dims, Rng& rng);
GroupElem inverse_elem(const GroupElem& g);

std::vector<QMatrix> moment_map(const RepPoint& pt);
bool in_lambda(const RepPoint& pt, const QVec& zeta_c);
Q symplectic_pair(const RepPoint& a, const RepPoint& b);

RepPoint act_gv(const GroupElem& g, const RepPoint& pt);
RepPoint act_gw(const GroupElem& f, const RepPoint& pt);

// Stability for the chamber xi_i > 0 for all i: no nonzero x-invariant graded
// subspace inside ker q.
bool is_stable_positive(const RepPoint& pt);
// Stability for xi_i < 0 for all i: im p generates V under x.
bool is_stable_negative(const RepPoint& pt);
bool is_stable(const RepPoint& pt, const IntVec& xi);

// g in G_v with g . a = b, when one is found.
std::optional<GroupElem> intertwiner(const RepPoint& a, const RepPoint& b, Rng* rng = nullptr,
                                     int sweep = 100);
bool same_orbit(const RepPoint& a, const RepPoint& b);

// Type A_n path 0 - 1 - ... - (n-1), w supported at vertex 0.
struct FlagData {
  QMatrix x;                  // q_1 p_1
  std::vector<QMatrix> flag;  // F_1 = im q_1 ⊇ F_2 = im q_1 y_1 ⊇ ...
};
bool is_type_a_path(const Graph& g);
FlagData flag_map(const RepPoint& pt);
// x(F_k) ⊆ F_{k+1} for 0 <= k <= n, with F_0 = W and F_{n+1} = 0.
bool flag_compatible(const QMatrix& x, const std::vector<QMatrix>& flag);

// Arrows x_k : k -> k+1 and y_k : k+1 -> k of a type A path.
std::size_t arrow_x(const Graph& g, std::size_t k);
std::size_t arrow_y(const Graph& g, std::size_t k);

RepPoint random_point(const Graph& g, const IntVec& v, const IntVec& w, Rng& rng);
// Random point of Lambda_{zeta_c}(v, w).  Each try fixes one arrow of every
// pair and one of p_i, q_i at random and solves the remaining affine system;
// nullopt when every try is inconsistent.
std::optional<RepPoint> random_lambda_point(const Graph& g, const IntVec& v, const IntVec& w, const QVec& zeta_c,
                                            Rng& rng, int tries = 16);
// Random point of Lambda_{zeta_c} that is stable for the uniform chamber of sign(xi).
std::optional<RepPoint> random_stable_point(const Graph& g, const IntVec& v, const IntVec& w, const QVec& zeta_c,
                                            int xi_sign, Rng& rng, int tries = 512);
// Type A point built from a random flag and a compatible nilpotent; stable for
// xi > 0 and in Lambda_0.  Dims v must be nonincreasing and bounded by w_1.
RepPoint random_flag_point(std::size_t n, const IntVec& v, long w1, Rng& rng);

}  // namespace sqv
