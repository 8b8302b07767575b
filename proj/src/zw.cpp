#include "sqv/zw.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sqv {

std::size_t path_source(const Graph& g, const Path& f) {
  if (f.is_lazy()) return f.start;
  return g.arrow(f.arrows.front()).src;
}

std::size_t path_target(const Graph& g, const Path& f) {
  if (f.is_lazy()) return f.start;
  return g.arrow(f.arrows.back()).dst;
}

int path_eps(const Graph& g, const Path& f) {
  int e = 1;
  for (auto h : f.arrows) e *= g.arrow(h).eps;
  return e;
}

Path path_bar(const Graph& g, const Path& f) {
  Path r{path_target(g, f), {}};
  for (auto it = f.arrows.rbegin(); it != f.arrows.rend(); ++it) r.arrows.push_back(g.arrow(*it).bar);
  return r;
}

Path concat(const Graph& g, const Path& first, const Path& second) {
  if (path_target(g, first) != path_source(g, second)) throw std::invalid_argument("concat: paths do not compose");
  Path r = first;
  r.arrows.insert(r.arrows.end(), second.arrows.begin(), second.arrows.end());
  return r;
}

bool is_composable(const Graph& g, const Path& f) {
  if (!f.is_lazy() && g.arrow(f.arrows.front()).src != f.start) return false;
  for (std::size_t k = 1; k < f.arrows.size(); ++k)
    if (g.arrow(f.arrows[k - 1]).dst != g.arrow(f.arrows[k]).src) return false;
  return true;
}

std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_length) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) layer.push_back(Path::lazy(i));
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == max_length) break;
    std::vector<Path> next;
    for (const auto& f : layer)
      for (auto h : g.arrows_out(path_target(g, f))) {
        Path e = f;
        e.arrows.push_back(h);
        next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  return out;
}

std::string path_str(const Graph& g, const Path& f) {
  std::ostringstream os;
  if (f.is_lazy()) {
    os << "[" << f.start << "]";
    return os.str();
  }
  os << g.arrow(f.arrows.front()).src;
  for (auto h : f.arrows) os << "->" << g.arrow(h).dst;
  return os.str();
}

const QMatrix& PathEval::at(const Path& f) const {
  auto it = table.find(f);
  if (it == table.end()) throw std::out_of_range("path outside the stored depth: " + path_str(graph, f));
  return it->second;
}

bool PathEval::operator==(const PathEval& o) const {
  return graph == o.graph && w == o.w && zeta_c == o.zeta_c && depth == o.depth && table == o.table;
}

std::size_t default_depth(const IntVec& v) {
  return 2 * static_cast<std::size_t>(std::accumulate(v.begin(), v.end(), 0L)) + 2;
}

namespace {

PathEval empty_like(const PathEval& pe) {
  PathEval r;
  r.graph = pe.graph;
  r.w = pe.w;
  r.zeta_c = pe.zeta_c;
  r.depth = pe.depth;
  return r;
}

void require_relations(const PathEval& pe, const char* what) {
  if (auto d = relation_defect(pe)) throw std::domain_error(std::string(what) + ": " + *d);
}

}  // namespace

PathEval eval_from_point(const RepPoint& pt, const QVec& zeta_c, std::size_t depth) {
  const Graph& g = pt.graph;
  if (zeta_c.size() != g.num_vertices()) throw std::invalid_argument("zeta_c must have length |I|");
  PathEval pe;
  pe.graph = g;
  pe.w = pt.w;
  pe.zeta_c = zeta_c;
  pe.depth = depth;
  // Walk paths depth-first, carrying x_{h_s} ... x_{h_1} p.
  struct Frame {
    Path f;
    QMatrix m;
  };
  std::vector<Frame> stack;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) stack.push_back({Path::lazy(i), pt.p[i]});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    const std::size_t t = path_target(g, fr.f);
    pe.table[fr.f] = pt.q[t] * fr.m;
    if (fr.f.length() == depth) continue;
    for (auto h : g.arrows_out(t)) {
      Path e = fr.f;
      e.arrows.push_back(h);
      stack.push_back({std::move(e), pt.x[h] * fr.m});
    }
  }
  require_relations(pe, "eval_from_point");
  return pe;
}

PathEval eval_from_point(const RepPoint& pt, const QVec& zeta_c) {
  return eval_from_point(pt, zeta_c, default_depth(pt.v));
}

std::optional<std::string> relation_defect(const PathEval& pe) {
  const Graph& g = pe.graph;
  if (pe.depth < 2) return std::nullopt;
  // Group paths by source and target.
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<const Path*>> by_source(n), by_target(n);
  for (const auto& [f, m] : pe.table) {
    by_source[path_source(g, f)].push_back(&f);
    by_target[path_target(g, f)].push_back(&f);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (const Path* first : by_target[i])
      for (const Path* second : by_source[i]) {
        // first = f' (applied first), second = f
        if (first->length() + second->length() + 2 > pe.depth) continue;
        QMatrix lhs = pe.at(*second) * pe.at(*first);
        QMatrix rhs = -pe.zeta_c[i] * pe.at(concat(g, *first, *second));
        for (auto h : g.arrows_in(i)) {
          const Arrow& a = g.arrow(h);
          Path mid{i, {a.bar, h}};
          rhs += Q(a.eps) * pe.at(concat(g, concat(g, *first, mid), *second));
        }
        if (lhs != rhs) return "relation fails for " + path_str(g, *second) + " after " + path_str(g, *first);
      }
  return std::nullopt;
}

bool satisfies_relations(const PathEval& pe) { return !relation_defect(pe); }

PathEval tau0(const PathEval& pe, const FormedGrading& forms_w) {
  const Graph& g = pe.graph;
  if (forms_w.size() != g.num_vertices()) throw std::invalid_argument("one form per vertex is required");
  for (std::size_t i = 0; i < forms_w.size(); ++i)
    if (forms_w[i].dim() != static_cast<std::size_t>(pe.w[i])) throw std::invalid_argument("form dimension mismatch");
  PathEval r = empty_like(pe);
  for (auto& z : r.zeta_c) z = -z;
  for (const auto& [f, m] : pe.table) {
    Path fb = path_bar(g, f);
    // pi'(f-bar) : W_{i(f)} -> W_{o(f)}
    QMatrix adj = right_adjoint(pe.at(fb), forms_w[path_target(g, f)], forms_w[path_source(g, f)]);
    r.table[f] = Q(-path_eps(g, f)) * adj;
  }
  require_relations(r, "tau0");
  return r;
}

PathEval theta_a(const PathEval& pe, const DiagramAuto& a) {
  const Graph& g = pe.graph;
  a.validate(g);
  PathEval r = empty_like(pe);
  r.w = permute(a, pe.w);
  r.zeta_c = permute(a, pe.zeta_c);
  for (const auto& [f, m] : pe.table) {
    Path img{a.vertex_perm[f.start], {}};
    Q sign = 1;
    for (auto h : f.arrows) {
      std::size_t ah = a.arrow_perm[h];
      img.arrows.push_back(ah);
      if (a.c == -1 && g.arrow(ah).eps == -1) sign = -sign;
    }
    r.table[img] = sign * m;
  }
  require_relations(r, "theta_a");
  return r;
}

PathEval lusztig_reflect(const PathEval& pe, std::size_t i) {
  const Graph& g = pe.graph;
  if (i >= g.num_vertices()) throw std::out_of_range("vertex out of range");
  const Q z = pe.zeta_c[i];
  PathEval r = empty_like(pe);
  r.zeta_c = weyl_reflect(g, i, pe.zeta_c);
  for (const auto& [f, m] : pe.table) {
    if (f.is_lazy()) {
      r.table[f] = f.start == i ? m + QMatrix::scalar(m.rows(), z) : m;
      continue;
    }
    // Positions t (0-based) with i(h_{t-1}) = i = o(h_t) whose removal keeps
    // the path composable, i.e. h_t is the bar of h_{t-1}.
    std::vector<std::size_t> j0;
    for (std::size_t t = 1; t < f.length(); ++t) {
      const Arrow& prev = g.arrow(f.arrows[t - 1]);
      const Arrow& cur = g.arrow(f.arrows[t]);
      if (prev.dst == i && cur.src == i && prev.src == cur.dst) j0.push_back(t);
    }
    QMatrix acc = m;
    if (sgn(z) != 0 && !j0.empty()) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << j0.size()); ++mask) {
        std::vector<bool> drop(f.length(), false);
        Q coeff = 1;
        for (std::size_t k = 0; k < j0.size(); ++k) {
          if (!(mask >> k & 1)) continue;
          const std::size_t t = j0[k];
          drop[t - 1] = drop[t] = true;
          coeff *= Q(g.arrow(f.arrows[t]).eps) * z;
        }
        Path pruned{f.start, {}};
        for (std::size_t k = 0; k < f.length(); ++k)
          if (!drop[k]) pruned.arrows.push_back(f.arrows[k]);
        acc += coeff * pe.at(pruned);
      }
    }
    r.table[f] = std::move(acc);
  }
  require_relations(r, "lusztig_reflect");
  return r;
}

PathEval lusztig_reflect_word(const PathEval& pe, const WeylWord& word) {
  PathEval r = pe;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = lusztig_reflect(r, *it);
  return r;
}

PathEval act_gw(const GroupElem& gw, const PathEval& pe) {
  const Graph& g = pe.graph;
  GroupElem gi = inverse_elem(gw);
  PathEval r = empty_like(pe);
  for (const auto& [f, m] : pe.table) r.table[f] = gw[path_target(g, f)] * m * gi[path_source(g, f)];
  return r;
}

}  // namespace sqv
