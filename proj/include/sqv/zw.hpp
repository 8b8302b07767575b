#pragma once

#include "sqv/forms.hpp"
#include "sqv/graph.hpp"
#include "sqv/rep.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sqv {

// A path in the doubled graph, arrows listed in the order they are applied:
// i(h_k) = o(h_{k+1}).  An empty arrow list is the lazy path [start].
struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  static Path lazy(std::size_t i) { return Path{i, {}}; }
  bool is_lazy() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }
  auto operator<=>(const Path&) const = default;
};

std::size_t path_source(const Graph& g, const Path& f);
std::size_t path_target(const Graph& g, const Path& f);
int path_eps(const Graph& g, const Path& f);
// Reversed path with every arrow replaced by its bar.
Path path_bar(const Graph& g, const Path& f);
// first, then second; requires path_target(first) == second.start.
Path concat(const Graph& g, const Path& first, const Path& second);
bool is_composable(const Graph& g, const Path& f);
std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_length);
std::string path_str(const Graph& g, const Path& f);

// Finite evaluation table of a point of Z_w: pi'(f) in Hom(W_{o(f)}, W_{i(f)})
// for every path of length at most depth.
struct PathEval {
  Graph graph;
  IntVec w;
  QVec zeta_c;
  std::size_t depth = 0;
  std::map<Path, QMatrix> table;

  const QMatrix& at(const Path& f) const;
  bool operator==(const PathEval& o) const;
  bool operator!=(const PathEval& o) const { return !(*this == o); }
};

std::size_t default_depth(const IntVec& v);

// pi'(f) = q x_{h_s} ... x_{h_1} p.  Throws std::domain_error when the
// defining relations fail, i.e. pt is not in Lambda_{zeta_c}.
PathEval eval_from_point(const RepPoint& pt, const QVec& zeta_c, std::size_t depth);
PathEval eval_from_point(const RepPoint& pt, const QVec& zeta_c);

// pi'(f) pi'(f') = sum_{i(h)=i} eps(h) pi'(f' h-bar h f) - zeta^(i) pi'(f' f),
// for i(f') = i = o(f) and total length within depth.  Returns the first
// failing pair, if any.
std::optional<std::string> relation_defect(const PathEval& pe);
bool satisfies_relations(const PathEval& pe);

// tau_0(pi')(f) = -eps(f) pi'(f-bar)^*, a table over -zeta_c.
PathEval tau0(const PathEval& pe, const FormedGrading& forms_w);
// Table of the diagram image: f -> eps(f)^{(1-c)/2} pi'(a^{-1} f), matching diagram_apply.
PathEval theta_a(const PathEval& pe, const DiagramAuto& a);
// Reflection at i; the output lies over s_i(zeta_c).
PathEval lusztig_reflect(const PathEval& pe, std::size_t i);
PathEval lusztig_reflect_word(const PathEval& pe, const WeylWord& word);
// (g . pi')(f) = g_{i(f)} pi'(f) g_{o(f)}^{-1}.
PathEval act_gw(const GroupElem& g, const PathEval& pe);

}  // namespace sqv
