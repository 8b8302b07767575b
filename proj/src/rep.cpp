#include "sqv/rep.hpp"

#include "sqv/linsys.hpp"

#include <stdexcept>

namespace sqv {

RepPoint RepPoint::zero(const Graph& g, const IntVec& v, const IntVec& w) {
  const std::size_t n = g.num_vertices();
  if (v.size() != n || w.size() != n) throw std::invalid_argument("dimension vectors must have length |I|");
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] < 0 || w[i] < 0) throw std::invalid_argument("dimension vectors must be nonnegative");
  RepPoint pt{g, v, w, {}, {}, {}};
  for (const auto& a : g.arrows()) pt.x.emplace_back(pt.vdim(a.dst), pt.vdim(a.src));
  for (std::size_t i = 0; i < n; ++i) {
    pt.p.emplace_back(pt.vdim(i), pt.wdim(i));
    pt.q.emplace_back(pt.wdim(i), pt.vdim(i));
  }
  return pt;
}

void RepPoint::validate() const {
  const std::size_t n = graph.num_vertices();
  if (v.size() != n || w.size() != n) throw std::invalid_argument("dimension vectors must have length |I|");
  if (x.size() != graph.num_arrows() || p.size() != n || q.size() != n)
    throw std::invalid_argument("point has the wrong number of components");
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] < 0 || w[i] < 0) throw std::invalid_argument("dimension vectors must be nonnegative");
  for (std::size_t h = 0; h < x.size(); ++h) {
    const Arrow& a = graph.arrow(h);
    if (x[h].rows() != vdim(a.dst) || x[h].cols() != vdim(a.src)) throw std::invalid_argument("x_h has the wrong shape");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i].rows() != vdim(i) || p[i].cols() != wdim(i)) throw std::invalid_argument("p_i has the wrong shape");
    if (q[i].rows() != wdim(i) || q[i].cols() != vdim(i)) throw std::invalid_argument("q_i has the wrong shape");
  }
}

bool RepPoint::operator==(const RepPoint& o) const {
  return graph == o.graph && v == o.v && w == o.w && x == o.x && p == o.p && q == o.q;
}

GroupElem identity_elem(const IntVec& dims) {
  GroupElem g;
  for (long d : dims) g.push_back(QMatrix::identity(static_cast<std::size_t>(d)));
  return g;
}

GroupElem random_group_elem(const IntVec& dims, Rng& rng) {
  GroupElem g;
  for (long d : dims) {
    for (;;) {
      QMatrix m = random_matrix(rng, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      if (inverse(m)) {
        g.push_back(m);
        break;
      }
    }
  }
  return g;
}

GroupElem inverse_elem(const GroupElem& g) {
  GroupElem r;
  for (const auto& m : g) {
    auto inv = inverse(m);
    if (!inv) throw std::invalid_argument("group element has a singular block");
    r.push_back(*inv);
  }
  return r;
}

std::vector<QMatrix> moment_map(const RepPoint& pt) {
  const Graph& g = pt.graph;
  std::vector<QMatrix> mu;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) mu.push_back(-(pt.p[i] * pt.q[i]));
  for (std::size_t h = 0; h < g.num_arrows(); ++h) {
    const Arrow& a = g.arrow(h);
    mu[a.dst] += Q(a.eps) * (pt.x[h] * pt.x[a.bar]);
  }
  return mu;
}

bool in_lambda(const RepPoint& pt, const QVec& zeta_c) {
  auto mu = moment_map(pt);
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] != QMatrix::scalar(pt.vdim(i), zeta_c.at(i))) return false;
  return true;
}

Q symplectic_pair(const RepPoint& a, const RepPoint& b) {
  if (a.v != b.v || a.w != b.w) throw std::invalid_argument("symplectic pairing needs equal dimensions");
  Q s = 0;
  for (std::size_t h = 0; h < a.x.size(); ++h) {
    const Arrow& ar = a.graph.arrow(h);
    s += Q(ar.eps) * (a.x[h] * b.x[ar.bar]).trace();
  }
  for (std::size_t i = 0; i < a.p.size(); ++i) s += (a.p[i] * b.q[i]).trace() - (b.p[i] * a.q[i]).trace();
  return s;
}

RepPoint act_gv(const GroupElem& g, const RepPoint& pt) {
  GroupElem gi = inverse_elem(g);
  RepPoint r = pt;
  for (std::size_t h = 0; h < pt.x.size(); ++h) {
    const Arrow& a = pt.graph.arrow(h);
    r.x[h] = g[a.dst] * pt.x[h] * gi[a.src];
  }
  for (std::size_t i = 0; i < pt.p.size(); ++i) {
    r.p[i] = g[i] * pt.p[i];
    r.q[i] = pt.q[i] * gi[i];
  }
  return r;
}

RepPoint act_gw(const GroupElem& f, const RepPoint& pt) {
  GroupElem fi = inverse_elem(f);
  RepPoint r = pt;
  for (std::size_t i = 0; i < pt.p.size(); ++i) {
    r.p[i] = pt.p[i] * fi[i];
    r.q[i] = f[i] * pt.q[i];
  }
  return r;
}

bool is_stable_positive(const RepPoint& pt) {
  const Graph& g = pt.graph;
  const std::size_t n = g.num_vertices();
  std::vector<QMatrix> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = canonical_basis(nullspace(pt.q[i]));
  for (;;) {
    bool changed = false;
    std::vector<QMatrix> next = s;
    for (std::size_t h = 0; h < g.num_arrows(); ++h) {
      const Arrow& a = g.arrow(h);
      // {e in S_src : x_h e in S_dst}
      QMatrix pre = preimage(pt.x[h] * next[a.src], s[a.dst]);
      QMatrix cut = canonical_basis(next[a.src] * pre);
      if (cut.cols() < next[a.src].cols()) {
        next[a.src] = cut;
        changed = true;
      }
    }
    s = next;
    if (!changed) break;
  }
  for (const auto& m : s)
    if (m.cols() != 0) return false;
  return true;
}

bool is_stable_negative(const RepPoint& pt) {
  const Graph& g = pt.graph;
  const std::size_t n = g.num_vertices();
  std::vector<QMatrix> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = canonical_basis(pt.p[i]);
  for (;;) {
    bool changed = false;
    for (std::size_t h = 0; h < g.num_arrows(); ++h) {
      const Arrow& a = g.arrow(h);
      QMatrix grown = subspace_sum(t[a.dst], pt.x[h] * t[a.src]);
      if (grown.cols() > t[a.dst].cols()) {
        t[a.dst] = grown;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (t[i].cols() != pt.vdim(i)) return false;
  return true;
}

bool is_stable(const RepPoint& pt, const IntVec& xi) {
  bool pos = true, neg = true;
  for (long x : xi) {
    if (x <= 0) pos = false;
    if (x >= 0) neg = false;
  }
  if (pos) return is_stable_positive(pt);
  if (neg) return is_stable_negative(pt);
  throw std::invalid_argument("stability is implemented for the uniform chambers only");
}

std::optional<GroupElem> intertwiner(const RepPoint& a, const RepPoint& b, Rng* rng, int sweep) {
  if (!(a.graph == b.graph) || a.v != b.v || a.w != b.w) return std::nullopt;
  const Graph& g = a.graph;
  const std::size_t n = g.num_vertices();
  LinearSystem sys;
  for (std::size_t i = 0; i < n; ++i) sys.add_block(a.vdim(i), a.vdim(i));
  for (std::size_t h = 0; h < g.num_arrows(); ++h) {
    const Arrow& ar = g.arrow(h);
    std::size_t vd = a.vdim(ar.dst), vs = a.vdim(ar.src);
    sys.add_homogeneous({{QMatrix::identity(vd), ar.dst, a.x[h]}, {-b.x[h], ar.src, QMatrix::identity(vs)}}, vd, vs);
  }
  for (std::size_t i = 0; i < n; ++i) {
    sys.add_equation({{QMatrix::identity(a.vdim(i)), i, a.p[i]}}, b.p[i]);
    sys.add_equation({{b.q[i], i, QMatrix::identity(a.vdim(i))}}, a.q[i]);
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  auto invertible = [&](const std::vector<Q>& flat) -> std::optional<GroupElem> {
    GroupElem ge = sys.unpack(flat);
    for (const auto& m : ge)
      if (!inverse(m)) return std::nullopt;
    return ge;
  };
  const std::size_t k = sol->kernel.cols();
  if (auto r = invertible(sol->particular)) return r;
  if (k == 0) return std::nullopt;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Q> c(k, 0);
    c[j] = 1;
    if (auto r = invertible(sys.combine(*sol, c))) return r;
  }
  Rng local(0x5eed);
  Rng& gen = rng ? *rng : local;
  for (int t = 0; t < sweep; ++t) {
    std::vector<Q> c(k);
    for (auto& x : c) x = random_rational(gen, 5, 3);
    if (auto r = invertible(sys.combine(*sol, c))) return r;
  }
  return std::nullopt;
}

bool same_orbit(const RepPoint& a, const RepPoint& b) { return intertwiner(a, b).has_value(); }

bool is_type_a_path(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (g.edges().size() + 1 != n && n != 0) return false;
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!g.find_arrow(k, k + 1)) return false;
  return true;
}

std::size_t arrow_x(const Graph& g, std::size_t k) {
  auto h = g.find_arrow(k, k + 1);
  if (!h) throw std::invalid_argument("no arrow k -> k+1");
  return *h;
}

std::size_t arrow_y(const Graph& g, std::size_t k) {
  auto h = g.find_arrow(k + 1, k);
  if (!h) throw std::invalid_argument("no arrow k+1 -> k");
  return *h;
}

FlagData flag_map(const RepPoint& pt) {
  const Graph& g = pt.graph;
  if (!is_type_a_path(g)) throw std::invalid_argument("flag map needs a type A graph");
  for (std::size_t i = 1; i < pt.w.size(); ++i)
    if (pt.w[i] != 0) throw std::invalid_argument("flag map needs w supported at the first vertex");
  FlagData fd;
  const std::size_t n = g.num_vertices();
  if (n == 0) return fd;
  fd.x = pt.q[0] * pt.p[0];
  QMatrix chain = pt.q[0];
  fd.flag.push_back(canonical_basis(chain));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    chain = chain * pt.x[arrow_y(g, k)];
    fd.flag.push_back(canonical_basis(chain));
  }
  return fd;
}

bool flag_compatible(const QMatrix& x, const std::vector<QMatrix>& flag) {
  const std::size_t d = x.rows();
  std::vector<QMatrix> f;
  f.push_back(QMatrix::identity(d));
  for (const auto& s : flag) f.push_back(s);
  f.push_back(QMatrix(d, 0));
  for (std::size_t k = 0; k + 1 < f.size(); ++k)
    if (!subspace_contains(f[k + 1], x * f[k])) return false;
  return true;
}

RepPoint random_point(const Graph& g, const IntVec& v, const IntVec& w, Rng& rng) {
  RepPoint pt = RepPoint::zero(g, v, w);
  for (auto& m : pt.x) m = random_matrix(rng, m.rows(), m.cols());
  for (auto& m : pt.p) m = random_matrix(rng, m.rows(), m.cols());
  for (auto& m : pt.q) m = random_matrix(rng, m.rows(), m.cols());
  return pt;
}

std::optional<RepPoint> random_lambda_point(const Graph& g, const IntVec& v, const IntVec& w, const QVec& zeta_c,
                                            Rng& rng, int tries) {
  const std::size_t n = g.num_vertices();
  if (zeta_c.size() != n) throw std::invalid_argument("zeta_c must have length |I|");
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < tries; ++t) {
    RepPoint pt = random_point(g, v, w, rng);
    // Fix one arrow of each pair and one of p_i, q_i; mu is then affine in the rest.
    std::vector<bool> free_arrow(g.num_arrows(), false), free_p(n);
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      bool first = t == 0 ? g.arrow(2 * k).eps == 1 : coin(rng);
      free_arrow[first ? 2 * k : 2 * k + 1] = true;
    }
    for (std::size_t i = 0; i < n; ++i) free_p[i] = t == 0 ? true : coin(rng);
    LinearSystem sys;
    std::vector<std::size_t> xblock(g.num_arrows(), 0), pqblock(n);
    for (std::size_t h = 0; h < g.num_arrows(); ++h) {
      const Arrow& a = g.arrow(h);
      if (free_arrow[h]) xblock[h] = sys.add_block(pt.vdim(a.dst), pt.vdim(a.src));
    }
    for (std::size_t i = 0; i < n; ++i)
      pqblock[i] = free_p[i] ? sys.add_block(pt.vdim(i), pt.wdim(i)) : sys.add_block(pt.wdim(i), pt.vdim(i));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<LinearSystem::Term> terms;
      const std::size_t vi = pt.vdim(i);
      for (std::size_t h = 0; h < g.num_arrows(); ++h) {
        const Arrow& a = g.arrow(h);
        if (a.dst != i) continue;
        QMatrix sign = QMatrix::scalar(vi, Q(a.eps));
        if (free_arrow[h]) {
          terms.push_back({sign, xblock[h], pt.x[a.bar]});
        } else {
          terms.push_back({Q(a.eps) * pt.x[h], xblock[a.bar], QMatrix::identity(vi)});
        }
      }
      if (free_p[i]) {
        terms.push_back({-QMatrix::identity(vi), pqblock[i], pt.q[i]});
      } else {
        terms.push_back({-pt.p[i], pqblock[i], QMatrix::identity(vi)});
      }
      sys.add_equation(terms, QMatrix::scalar(vi, zeta_c[i]));
    }
    auto sol = sys.solve();
    if (!sol) continue;
    std::vector<Q> c(sol->kernel.cols());
    for (auto& x : c) x = random_rational(rng, 3);
    auto blocks = sys.unpack(sys.combine(*sol, c));
    for (std::size_t h = 0; h < g.num_arrows(); ++h)
      if (free_arrow[h]) pt.x[h] = blocks[xblock[h]];
    for (std::size_t i = 0; i < n; ++i) (free_p[i] ? pt.p[i] : pt.q[i]) = blocks[pqblock[i]];
    if (!in_lambda(pt, zeta_c)) throw std::logic_error("random_lambda_point: solved point misses the level set");
    return pt;
  }
  return std::nullopt;
}

std::optional<RepPoint> random_stable_point(const Graph& g, const IntVec& v, const IntVec& w, const QVec& zeta_c,
                                            int xi_sign, Rng& rng, int tries) {
  for (int t = 0; t < tries; ++t) {
    auto pt = random_lambda_point(g, v, w, zeta_c, rng, 4);
    if (!pt) continue;
    bool ok = xi_sign > 0 ? is_stable_positive(*pt) : is_stable_negative(*pt);
    if (ok) return pt;
  }
  return std::nullopt;
}

RepPoint random_flag_point(std::size_t n, const IntVec& v, long w1, Rng& rng) {
  if (v.size() != n) throw std::invalid_argument("v must have length n");
  long prev = w1;
  for (long d : v) {
    if (d < 0 || d > prev) throw std::invalid_argument("flag dimensions must be nonincreasing and bounded by w_1");
    prev = d;
  }
  Graph g = Graph::type_a(n);
  IntVec w(n, 0);
  if (n > 0) w[0] = w1;
  RepPoint pt = RepPoint::zero(g, v, w);
  if (n == 0) return pt;
  const std::size_t d = static_cast<std::size_t>(w1);
  QMatrix basis, basis_inv;
  for (;;) {
    basis = random_matrix(rng, d, d);
    if (auto inv = inverse(basis)) {
      basis_inv = *inv;
      break;
    }
  }
  // dims[k] = dim F_k with F_0 = W and F_{n+1} = 0.
  std::vector<std::size_t> dims{d};
  for (long x : v) dims.push_back(static_cast<std::size_t>(x));
  dims.push_back(0);
  QMatrix nil(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t level = 0;
    while (level + 1 < dims.size() && j < dims[level + 1]) ++level;
    for (std::size_t m = 0; m < dims[level + 1]; ++m) nil(m, j) = random_rational(rng, 3);
  }
  const std::size_t v1 = dims[1];
  pt.q[0] = basis.col_slice(0, v1);
  pt.p[0] = nil.row_slice(0, v1) * basis_inv;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t a = dims[k + 1], b = dims[k + 2];
    QMatrix incl(a, b);
    for (std::size_t r = 0; r < b; ++r) incl(r, r) = 1;
    pt.x[arrow_y(g, k)] = incl;
    pt.x[arrow_x(g, k)] = nil.block(0, 0, b, a);
  }
  return pt;
}

}  // namespace sqv
