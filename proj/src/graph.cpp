#include "sqv/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sqv {

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges, std::vector<int> eps)
    : n_(n), edges_(std::move(edges)), eps_(std::move(eps)) {
  if (eps_.size() != edges_.size()) throw std::invalid_argument("orientation list must match edge list");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto [a, b] = edges_[k];
    if (eps_[k] != 1 && eps_[k] != -1) throw std::invalid_argument("orientation entries must be +1 or -1");
    arrows_.push_back({a, b, 2 * k + 1, eps_[k]});
    arrows_.push_back({b, a, 2 * k, -eps_[k]});
  }
  validate();
  cartan_.assign(n_, std::vector<long>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i) cartan_[i][i] = 2;
  for (const auto& a : arrows_) cartan_[a.src][a.dst] -= 1;
}

void Graph::validate() const {
  for (std::size_t h = 0; h < arrows_.size(); ++h) {
    const Arrow& a = arrows_[h];
    if (a.src >= n_ || a.dst >= n_) throw std::invalid_argument("arrow endpoint out of range");
    if (a.src == a.dst) throw std::invalid_argument("graph has a loop");
    const Arrow& b = arrows_[a.bar];
    if (b.bar != h || b.src != a.dst || b.dst != a.src) throw std::invalid_argument("bar is not an involution");
    if (a.eps + b.eps != 0) throw std::invalid_argument("eps(h) + eps(hbar) must vanish");
  }
}

Graph Graph::type_a(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e, std::vector<int>(e.size(), -1));
}

Graph Graph::type_d(std::size_t n) {
  if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
  e.push_back({n - 3, n - 1});
  return Graph(n, e, std::vector<int>(e.size(), -1));
}

Graph Graph::type_e(std::size_t n) {
  if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
  e.push_back({2, n - 1});
  return Graph(n, e, std::vector<int>(e.size(), -1));
}

Graph Graph::dynkin(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad Dynkin name: " + name);
  std::size_t n = std::stoul(name.substr(1));
  switch (name[0]) {
    case 'A': return type_a(n);
    case 'D': return type_d(n);
    case 'E': return type_e(n);
    default: throw std::invalid_argument("bad Dynkin name: " + name);
  }
}

std::optional<std::size_t> Graph::find_arrow(std::size_t src, std::size_t dst) const {
  for (std::size_t h = 0; h < arrows_.size(); ++h)
    if (arrows_[h].src == src && arrows_[h].dst == dst) return h;
  return std::nullopt;
}

std::vector<std::size_t> Graph::arrows_out(std::size_t i) const {
  std::vector<std::size_t> r;
  for (std::size_t h = 0; h < arrows_.size(); ++h)
    if (arrows_[h].src == i) r.push_back(h);
  return r;
}

std::vector<std::size_t> Graph::arrows_in(std::size_t i) const {
  std::vector<std::size_t> r;
  for (std::size_t h = 0; h < arrows_.size(); ++h)
    if (arrows_[h].dst == i) r.push_back(h);
  return r;
}

IntMatrix cartan_matrix(const Graph& g) { return g.cartan(); }

namespace {

void check_vertex(const Graph& g, std::size_t i) {
  if (i >= g.num_vertices()) throw std::out_of_range("vertex index out of range");
}

template <class T>
std::vector<T> reflect_impl(const Graph& g, std::size_t i, const std::vector<T>& xi) {
  check_vertex(g, i);
  if (xi.size() != g.num_vertices()) throw std::invalid_argument("vector length must equal |I|");
  const IntMatrix& c = g.cartan();
  std::vector<T> out = xi;
  for (std::size_t j = 0; j < xi.size(); ++j) out[j] = xi[j] - T(c[j][i]) * xi[i];
  return out;
}

}  // namespace

IntVec weyl_reflect(const Graph& g, std::size_t i, const IntVec& xi) { return reflect_impl(g, i, xi); }
QVec weyl_reflect(const Graph& g, std::size_t i, const QVec& xi) { return reflect_impl(g, i, xi); }

IntVec weyl_star(const Graph& g, std::size_t i, const IntVec& v, const IntVec& w) {
  check_vertex(g, i);
  if (v.size() != g.num_vertices() || w.size() != g.num_vertices())
    throw std::invalid_argument("vector length must equal |I|");
  const IntMatrix& c = g.cartan();
  IntVec out = v;
  long s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += c[i][j] * v[j];
  out[i] = v[i] - s + w[i];
  return out;
}

IntVec weyl_star_word(const Graph& g, const WeylWord& word, const IntVec& v, const IntVec& w) {
  IntVec out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = weyl_star(g, *it, out, w);
  return out;
}

IntVec weyl_word(const Graph& g, const WeylWord& word, const IntVec& xi) {
  IntVec out = xi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = weyl_reflect(g, *it, out);
  return out;
}

QVec weyl_word(const Graph& g, const WeylWord& word, const QVec& xi) {
  QVec out = xi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = weyl_reflect(g, *it, out);
  return out;
}

Parameter weyl_word(const Graph& g, const WeylWord& word, const Parameter& z) {
  return {weyl_word(g, word, z.xi), weyl_word(g, word, z.zeta_c)};
}

IntVec cartan_apply(const Graph& g, const IntVec& v) {
  const IntMatrix& c = g.cartan();
  IntVec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += c[i][j] * v[j];
  return out;
}

std::vector<IntVec> positive_roots_bounded(const Graph& g, const IntVec& v, long cap) {
  const std::size_t n = g.num_vertices();
  if (v.size() != n) throw std::invalid_argument("vector length must equal |I|");
  long total = 0;
  for (long x : v) {
    if (x < 0) throw std::invalid_argument("root box needs v >= 0");
    total += x;
  }
  if (total > cap) throw std::length_error("root search box exceeds cap");
  const IntMatrix& c = g.cartan();
  std::vector<IntVec> roots;
  IntVec gamma(n, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < n && gamma[k] == v[k]) gamma[k++] = 0;
    if (k == n) break;
    ++gamma[k];
    long q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += gamma[i] * c[i][j] * gamma[j];
    if (q <= 2) roots.push_back(gamma);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_generic(const Graph& g, const Parameter& zeta, const IntVec& v) {
  auto roots = positive_roots_bounded(g, v);
  bool xi_ok = true, zc_ok = true;
  for (const auto& r : roots) {
    long s = 0;
    Q t = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += zeta.xi.at(i) * r[i];
      t += zeta.zeta_c.at(i) * r[i];
    }
    if (s == 0) xi_ok = false;
    if (sgn(t) == 0) zc_ok = false;
  }
  return xi_ok || zc_ok;
}

bool is_dynkin(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return false;
  const IntMatrix& c = g.cartan();
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = c[i][j];
    if (sgn(determinant(m)) <= 0) return false;
  }
  return true;
}

namespace {

IntMatrix reflection_matrix(const IntMatrix& c, std::size_t i) {
  const std::size_t n = c.size();
  IntMatrix s(n, std::vector<long>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    s[j][j] = 1;
    s[i][j] -= c[i][j];
  }
  return s;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

IntMatrix identity_int(std::size_t n) {
  IntMatrix r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

bool column_positive(const IntMatrix& w, std::size_t j) {
  for (const auto& row : w)
    if (row[j] < 0) return false;
  return true;
}

}  // namespace

IntMatrix weyl_matrix(const Graph& g, const WeylWord& word) {
  const IntMatrix& c = g.cartan();
  IntMatrix w = identity_int(c.size());
  for (auto i : word) {
    check_vertex(g, i);
    w = mat_mul(w, reflection_matrix(c, i));
  }
  return w;
}

LongestElement longest_element(const Graph& g) {
  if (!is_dynkin(g)) throw std::invalid_argument("longest element needs a Dynkin graph");
  const IntMatrix& c = g.cartan();
  const std::size_t n = c.size();
  IntMatrix w = identity_int(n);
  LongestElement le;
  // Ascend by right multiplication while some w(alpha_i) is still positive.
  for (;;) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i)
      if (column_positive(w, i)) {
        pick = i;
        break;
      }
    if (pick == n) break;
    w = mat_mul(w, reflection_matrix(c, pick));
    le.word.push_back(pick);
  }
  le.theta.assign(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w[j][i] == -1) {
        bool unit = true;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j && w[k][i] != 0) unit = false;
        if (unit) le.theta[i] = j;
      }
  for (auto t : le.theta)
    if (t == n) throw std::logic_error("w0 does not permute simple roots");
  return le;
}

namespace {

template <class Visit>
void bfs_weyl(const Graph& g, std::size_t cap, Visit visit) {
  const IntMatrix& c = g.cartan();
  const std::size_t n = c.size();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(reflection_matrix(c, i));
  std::map<IntMatrix, bool> seen;
  std::deque<std::pair<IntMatrix, WeylWord>> queue;
  queue.push_back({identity_int(n), {}});
  seen[queue.front().first] = true;
  while (!queue.empty()) {
    auto [m, word] = queue.front();
    queue.pop_front();
    visit(m, word);
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix next = mat_mul(m, gens[i]);
      if (seen.count(next)) continue;
      if (seen.size() >= cap) throw std::length_error("Weyl group exceeds enumeration cap");
      seen[next] = true;
      WeylWord w2 = word;
      w2.push_back(i);
      queue.push_back({std::move(next), std::move(w2)});
    }
  }
}

}  // namespace

std::vector<WeylWord> fixed_subgroup_scan(const Graph& g, const WeylWord& omega, const DiagramAuto& a,
                                          std::size_t group_cap) {
  if (!is_dynkin(g)) throw std::invalid_argument("fixed subgroup scan needs a finite Weyl group");
  a.validate(g);
  const std::size_t n = g.num_vertices();
  IntMatrix om = weyl_matrix(g, omega);
  IntMatrix p(n, std::vector<long>(n, 0));
  for (std::size_t j = 0; j < n; ++j) p[a.vertex_perm[j]][j] = 1;
  std::vector<WeylWord> out;
  bfs_weyl(g, group_cap, [&](const IntMatrix& x, const WeylWord& word) {
    if (mat_mul(x, om) == mat_mul(om, x) && mat_mul(p, x) == mat_mul(x, p)) out.push_back(word);
  });
  return out;
}

std::size_t weyl_group_order(const Graph& g, std::size_t group_cap) {
  std::size_t count = 0;
  bfs_weyl(g, group_cap, [&](const IntMatrix&, const WeylWord&) { ++count; });
  return count;
}

DiagramAuto DiagramAuto::identity(const Graph& g) {
  DiagramAuto a;
  a.vertex_perm.resize(g.num_vertices());
  std::iota(a.vertex_perm.begin(), a.vertex_perm.end(), 0);
  a.arrow_perm.resize(g.num_arrows());
  std::iota(a.arrow_perm.begin(), a.arrow_perm.end(), 0);
  a.c = 1;
  return a;
}

DiagramAuto DiagramAuto::from_vertex_perm(const Graph& g, std::vector<std::size_t> perm) {
  if (perm.size() != g.num_vertices()) throw std::invalid_argument("vertex permutation has wrong length");
  DiagramAuto a;
  a.vertex_perm = std::move(perm);
  std::vector<bool> used(g.num_arrows(), false);
  a.arrow_perm.resize(g.num_arrows());
  for (std::size_t h = 0; h < g.num_arrows(); ++h) {
    const Arrow& ar = g.arrow(h);
    std::size_t s = a.vertex_perm.at(ar.src), d = a.vertex_perm.at(ar.dst);
    bool found = false;
    for (std::size_t k = 0; k < g.num_arrows(); ++k) {
      if (!used[k] && g.arrow(k).src == s && g.arrow(k).dst == d) {
        a.arrow_perm[h] = k;
        used[k] = true;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("vertex permutation is not a graph automorphism");
  }
  a.c = g.num_arrows() == 0 ? 1 : g.arrow(a.arrow_perm[0]).eps * g.arrow(0).eps;
  a.validate(g);
  return a;
}

void DiagramAuto::validate(const Graph& g) const {
  const std::size_t n = g.num_vertices();
  if (vertex_perm.size() != n || arrow_perm.size() != g.num_arrows())
    throw std::invalid_argument("diagram automorphism has wrong size");
  std::vector<bool> seen(n, false);
  for (auto v : vertex_perm) {
    if (v >= n || seen[v]) throw std::invalid_argument("vertex map is not a permutation");
    seen[v] = true;
  }
  std::vector<bool> seen_h(g.num_arrows(), false);
  for (auto h : arrow_perm) {
    if (h >= g.num_arrows() || seen_h[h]) throw std::invalid_argument("arrow map is not a permutation");
    seen_h[h] = true;
  }
  if (c != 1 && c != -1) throw std::invalid_argument("c must be +1 or -1");
  for (std::size_t h = 0; h < g.num_arrows(); ++h) {
    const Arrow& ar = g.arrow(h);
    const Arrow& im = g.arrow(arrow_perm[h]);
    if (im.src != vertex_perm[ar.src] || im.dst != vertex_perm[ar.dst])
      throw std::invalid_argument("arrow map does not cover the vertex map");
    if (arrow_perm[ar.bar] != im.bar) throw std::invalid_argument("arrow map does not commute with bar");
    if (im.eps != c * ar.eps) throw std::invalid_argument("orientation is not compatible with the automorphism");
  }
}

std::size_t DiagramAuto::inverse_vertex(std::size_t i) const {
  for (std::size_t j = 0; j < vertex_perm.size(); ++j)
    if (vertex_perm[j] == i) return j;
  throw std::out_of_range("vertex not in permutation");
}

std::size_t DiagramAuto::inverse_arrow(std::size_t h) const {
  for (std::size_t k = 0; k < arrow_perm.size(); ++k)
    if (arrow_perm[k] == h) return k;
  throw std::out_of_range("arrow not in permutation");
}

std::size_t DiagramAuto::order() const {
  std::vector<std::size_t> cur = vertex_perm;
  for (std::size_t k = 1;; ++k) {
    bool id = true;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i] != i) id = false;
    if (id) return k;
    std::vector<std::size_t> next(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] = vertex_perm[cur[i]];
    cur = next;
  }
}

bool DiagramAuto::is_identity() const {
  for (std::size_t i = 0; i < vertex_perm.size(); ++i)
    if (vertex_perm[i] != i) return false;
  for (std::size_t h = 0; h < arrow_perm.size(); ++h)
    if (arrow_perm[h] != h) return false;
  return c == 1;
}

SatakeEntry satake_lookup(char type, std::size_t ell, std::size_t a_order) {
  bool odd = ell % 2 == 1;
  if (type == 'A' && ell >= 1) {
    if (a_order == 1) return odd ? SatakeEntry{"𝔰𝔩_p⊕𝔤𝔩_p", "AIII"} : SatakeEntry{"𝔰𝔩_p⊕𝔤𝔩_{p+1}", "AIII"};
    if (a_order == 2) return {"𝔰𝔬_{ℓ+1}", "AI"};
  }
  if (type == 'D' && ell >= 4) {
    if (a_order == 1) return odd ? SatakeEntry{"𝔰𝔬_{ℓ−1}⊕𝔰𝔬_{ℓ+1}", "DI"} : SatakeEntry{"𝔰𝔬_ℓ⊕𝔰𝔬_ℓ", "DI"};
    if (a_order == 2) return odd ? SatakeEntry{"𝔰𝔬_ℓ⊕𝔰𝔬_ℓ", "DI"} : SatakeEntry{"𝔰𝔬_{ℓ−1}⊕𝔰𝔬_{ℓ+1}", "DI"};
  }
  if (type == 'E') {
    if (ell == 6 && a_order == 1) return {"𝔰𝔩_2⊕𝔰𝔩_6", "EII"};
    if (ell == 6 && a_order == 2) return {"𝔰𝔭_4", "EI"};
    if (ell == 7 && a_order == 1) return {"𝔰𝔩_8", "EV"};
    if (ell == 8 && a_order == 1) return {"𝔰𝔬_16", "EVIII"};
  }
  throw std::out_of_range("no Satake entry for this key");
}

}  // namespace sqv
