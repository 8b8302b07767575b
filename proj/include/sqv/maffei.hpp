#pragma once

#include "sqv/forms.hpp"
#include "sqv/partition.hpp"
#include "sqv/rep.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sqv {

// Type A_n data is indexed as in the rest of the library (vertex k is the
// (k+1)-th node).  Inside this module a "level" i runs over 0..n with
// level i >= 1 living at vertex i-1 and level 0 standing for W~_1.

struct MaffeiDims {
  std::size_t n = 0;
  IntVec v, w;
  IntVec tilde_v, tilde_w;
  long tilde_v0() const { return tilde_w.empty() ? 0 : tilde_w[0]; }
};

// v~_i = v_i + sum_{j > i} (j - i) w_j, w~_i = delta_{i,1} sum_j j w_j.
MaffeiDims tilde_dims(const IntVec& v, const IntVec& w);
// The same after relabelling i -> n + 1 - i.
MaffeiDims hat_dims(const IntVec& v, const IntVec& w);

// The copy W_j^{(h)} (1-based j and h), or V_i when is_v is set.
struct Comp {
  bool is_v = false;
  std::size_t j = 0, h = 0;
  static Comp vpart() { return Comp{true, 0, 0}; }
  static Comp copy(std::size_t j, std::size_t h) { return Comp{false, j, h}; }
  bool operator==(const Comp&) const = default;
};

// V~_i = V_i + sum_{j > i, 1 <= h <= j - i} W_j^{(h)}, in that order with copies
// sorted by (j, h).  Copies of zero-dimensional W_j are omitted.
class MaffeiLayout {
 public:
  MaffeiLayout() = default;
  MaffeiLayout(IntVec v, IntVec w);

  std::size_t n() const { return v_.size(); }
  const IntVec& v() const { return v_; }
  const IntVec& w() const { return w_; }
  std::size_t dim(std::size_t level) const;
  std::size_t v_dim(std::size_t level) const;
  std::size_t w_dim(std::size_t j) const { return static_cast<std::size_t>(w_.at(j - 1)); }
  std::size_t comp_dim(const Comp& c, std::size_t level) const { return c.is_v ? v_dim(level) : w_dim(c.j); }
  // V-part first, then the copies.
  std::vector<Comp> comps(std::size_t level) const;
  std::vector<Comp> copies(std::size_t level) const;
  bool has(std::size_t level, const Comp& c) const;
  std::size_t offset(std::size_t level, const Comp& c) const;
  // Injection of the component into V~_level and the projection onto it.
  QMatrix inject(std::size_t level, const Comp& c) const;
  QMatrix project(std::size_t level, const Comp& c) const;
  // The same for W'_level = sum of the copies.
  QMatrix inject_w(std::size_t level) const;
  QMatrix project_w(std::size_t level) const;
  std::size_t w_prime_dim(std::size_t level) const { return dim(level) - v_dim(level); }

 private:
  IntVec v_, w_;
};

enum class GradKind { T, S };

// grad T^{j',h'}_{i,j,h} = min(h - h' + 1, h - h' + 1 + j' - j),
// grad S^{j',h'}_{i,j,h} = min(h - h', h - h' + j' - j).
// T maps W_{j'}^{(h')} in V~_i to W_j^{(h)} in V~_{i+1}; S goes back.
long grad(std::size_t i, std::size_t j, std::size_t h, std::size_t jp, std::size_t hp, GradKind kind);

struct Sl2Pair {
  QMatrix e, f;
};
// Maffei's e_i, f_i on W'_i for the level i.
Sl2Pair maffei_sl2(const IntVec& w, std::size_t level);

// A point on (v~, w~) with its block decomposition.
struct BigPoint {
  MaffeiLayout layout;
  RepPoint point;

  // x~_i : V~_i -> V~_{i+1} and y~_i : V~_{i+1} -> V~_i for 0 <= i < n; level 0 is p~, q~.
  const QMatrix& xt(std::size_t i) const;
  const QMatrix& yt(std::size_t i) const;
  QMatrix& xt(std::size_t i);
  QMatrix& yt(std::size_t i);
  QMatrix x_block(std::size_t i, const Comp& src, const Comp& dst) const;
  QMatrix y_block(std::size_t i, const Comp& src, const Comp& dst) const;
  void set_x_block(std::size_t i, const Comp& src, const Comp& dst, const QMatrix& m);
  void set_y_block(std::size_t i, const Comp& src, const Comp& dst, const QMatrix& m);
  // The flag-side nilpotent q~_1 p~_1 on W~_1.
  QMatrix flag_nilpotent() const { return point.q[0] * point.p[0]; }
};

BigPoint zero_big_point(const IntVec& v, const IntVec& w);

class MaffeiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TransversalityReport {
  std::vector<std::string> violations;  // entries start with the condition tag, e.g. "(t5)"
  bool ok() const { return violations.empty(); }
  bool cites(const std::string& tag) const;
  std::string str() const;
};
TransversalityReport is_transversal(const BigPoint& bp);

// The unique transversal point of Lambda(v~, w~) with the prescribed seeds.
// pt must lie in Lambda_0(v, w) on the default A_n graph.
BigPoint phi_embed(const RepPoint& pt);

struct SliceLabel {
  Partition mu_prime;
  Partition lambda;
  long ambient_dim = 0;
};
// Throws std::invalid_argument on a negative entry of mu.
SliceLabel slice_labels(const IntVec& v, const IntVec& w);
// The composition mu = (v~_0 - v~_1, ..., v~_{n-1} - v~_n, v~_n) for the given dims.
IntVec slice_composition(const MaffeiDims& d);

// x nilpotent and [x - e0, f0] = 0.
bool slice_membership(const QMatrix& x, const QMatrix& e0, const QMatrix& f0);

enum class TildeFormVariant { angle, brace };
// Forms on V~_0 = W~_1, V~_1, ..., V~_n (index = level).  fv, fw are the forms
// on V and W per vertex.  The declared sign is set when the Gram matrix is
// symmetric or skew.
FormedGrading tilde_form(const IntVec& v, const IntVec& w, const FormedGrading& fv, const FormedGrading& fw,
                         TildeFormVariant variant);
// The transpose on the big point: forms[1..n] on V~, forms[0] on W~_1.
BigPoint big_transpose(const BigPoint& bp, const FormedGrading& forms, bool signs);
// Blockwise adjoint table for x~ and y~ with respect to tilde_form(angle).
// Returns the failing entries.
std::vector<std::string> x_natural_defects(const BigPoint& bp, const FormedGrading& fv, const FormedGrading& fw);

}  // namespace sqv
