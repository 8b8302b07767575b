#pragma once

#include "sqv/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sqv {

using IntVec = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;
using QVec = std::vector<Q>;

struct Arrow {
  std::size_t src = 0;  // o(h)
  std::size_t dst = 0;  // i(h)
  std::size_t bar = 0;
  int eps = 1;
};

// A graph without loops, doubled into arrows h and h-bar, with orientation eps.
// Edge k produces arrows 2k (a -> b) and 2k+1 (b -> a).
class Graph {
 public:
  Graph() = default;
  // eps[k] is the orientation of the arrow a -> b of edge k.
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges, std::vector<int> eps);

  static Graph type_a(std::size_t n);
  static Graph type_d(std::size_t n);
  static Graph type_e(std::size_t n);
  // Named Dynkin graph, e.g. "A3", "D4", "E6".
  static Graph dynkin(const std::string& name);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t h) const { return arrows_.at(h); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<int>& edge_orientation() const { return eps_; }
  std::optional<std::size_t> find_arrow(std::size_t src, std::size_t dst) const;
  std::vector<std::size_t> arrows_out(std::size_t i) const;
  std::vector<std::size_t> arrows_in(std::size_t i) const;

  const IntMatrix& cartan() const { return cartan_; }
  void validate() const;
  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_ && eps_ == o.eps_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<int> eps_;
  std::vector<Arrow> arrows_;
  IntMatrix cartan_;
};

struct Parameter {
  IntVec xi;
  QVec zeta_c;
};

// Diagram automorphism: vertex and arrow permutations with eps(a(h)) = c eps(h).
struct DiagramAuto {
  std::vector<std::size_t> vertex_perm;
  std::vector<std::size_t> arrow_perm;
  int c = 1;

  static DiagramAuto identity(const Graph& g);
  // Extends a vertex permutation to arrows and computes c; throws if incompatible.
  static DiagramAuto from_vertex_perm(const Graph& g, std::vector<std::size_t> perm);
  void validate(const Graph& g) const;
  std::size_t inverse_vertex(std::size_t i) const;
  std::size_t inverse_arrow(std::size_t h) const;
  std::size_t order() const;
  bool is_identity() const;
};

using WeylWord = std::vector<std::size_t>;

IntMatrix cartan_matrix(const Graph& g);
IntVec weyl_reflect(const Graph& g, std::size_t i, const IntVec& xi);
QVec weyl_reflect(const Graph& g, std::size_t i, const QVec& xi);
IntVec weyl_star(const Graph& g, std::size_t i, const IntVec& v, const IntVec& w);
// w * v = s_{i1} * ... * s_{il} * v: the last letter acts first.
IntVec weyl_star_word(const Graph& g, const WeylWord& word, const IntVec& v, const IntVec& w);
IntVec weyl_word(const Graph& g, const WeylWord& word, const IntVec& xi);
QVec weyl_word(const Graph& g, const WeylWord& word, const QVec& xi);
Parameter weyl_word(const Graph& g, const WeylWord& word, const Parameter& z);
IntVec cartan_apply(const Graph& g, const IntVec& v);

template <class T>
std::vector<T> permute(const DiagramAuto& a, const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[a.vertex_perm[i]] = v[i];
  return out;
}

std::vector<IntVec> positive_roots_bounded(const Graph& g, const IntVec& v, long cap = 64);
bool is_generic(const Graph& g, const Parameter& zeta, const IntVec& v);

bool is_dynkin(const Graph& g);

struct LongestElement {
  WeylWord word;
  std::vector<std::size_t> theta;
};
LongestElement longest_element(const Graph& g);

// Weyl group elements as integer matrices on the root lattice (column j = image of alpha_j).
IntMatrix weyl_matrix(const Graph& g, const WeylWord& word);
std::vector<WeylWord> fixed_subgroup_scan(const Graph& g, const WeylWord& omega, const DiagramAuto& a,
                                          std::size_t group_cap = 200000);
std::size_t weyl_group_order(const Graph& g, std::size_t group_cap = 200000);

struct SatakeEntry {
  std::string k;
  std::string satake_type;
};
// type is 'A', 'D' or 'E'; rank ell; a_order is |a|.
SatakeEntry satake_lookup(char type, std::size_t ell, std::size_t a_order);

}  // namespace sqv
