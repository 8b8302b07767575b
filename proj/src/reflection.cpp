#include "sqv/reflection.hpp"

#include <sstream>

namespace sqv {

std::vector<std::size_t> out_arrows(const Graph& g, std::size_t i) { return g.arrows_out(i); }

QMatrix a_map(const RepPoint& pt, std::size_t i) {
  std::vector<QMatrix> blocks{pt.q[i]};
  for (std::size_t h : out_arrows(pt.graph, i)) blocks.push_back(pt.x[h]);
  return vstack(blocks, pt.vdim(i));
}

QMatrix b_map(const RepPoint& pt, std::size_t i) {
  std::vector<QMatrix> blocks{pt.p[i]};
  for (std::size_t h : out_arrows(pt.graph, i)) {
    const Arrow& a = pt.graph.arrow(h);
    blocks.push_back(Q(a.eps) * pt.x[a.bar]);
  }
  return hstack(blocks, pt.vdim(i));
}

namespace {

RepPoint unpack(const RepPoint& pt, std::size_t i, const QMatrix& a_new, const QMatrix& b_new) {
  RepPoint r = pt;
  const std::size_t vi = a_new.cols();
  r.v[i] = static_cast<long>(vi);
  std::size_t off = pt.wdim(i);
  r.q[i] = a_new.row_slice(0, off);
  r.p[i] = b_new.col_slice(0, off);
  for (std::size_t h : out_arrows(pt.graph, i)) {
    const Arrow& a = pt.graph.arrow(h);
    std::size_t d = pt.vdim(a.dst);
    r.x[h] = a_new.row_slice(off, d);
    r.x[a.bar] = Q(a.eps) * b_new.col_slice(off, d);
    off += d;
  }
  r.validate();
  return r;
}

}  // namespace

ReflectionResult reflect_point(const RepPoint& pt, std::size_t i, const Parameter& zeta) {
  const Graph& g = pt.graph;
  if (i >= g.num_vertices()) throw std::out_of_range("reflection vertex out of range");
  if (!in_lambda(pt, zeta.zeta_c)) throw ReflectionError("point is not in the moment-map level set");
  const Q& zi = zeta.zeta_c[i];
  const long xi = zeta.xi[i];
  ReflectionResult res;
  res.zeta = weyl_word(g, WeylWord{i}, zeta);
  res.a_old = a_map(pt, i);
  res.b_old = b_map(pt, i);
  const std::size_t u = res.a_old.rows();
  QMatrix big = res.a_old * res.b_old + QMatrix::scalar(u, zi);
  if (xi < 0 || sgn(zi) != 0) {
    if (!is_surjective(res.b_old)) throw ReflectionError("b_i is not surjective");
    if (!(res.b_old * big).is_zero()) throw ReflectionError("b_i(x) A != 0");
    res.forward = true;
    res.a_new = nullspace(res.b_old);
    auto sol = solve(res.a_new, big);
    if (!sol) throw ReflectionError("image of A is not inside ker b_i");
    res.b_new = *sol;
  } else if (xi > 0) {
    if (!is_injective(res.a_old)) throw ReflectionError("a_i is not injective");
    if (!(big * res.a_old).is_zero()) throw ReflectionError("A a_i(x) != 0");
    res.forward = false;
    res.b_new = left_nullspace(res.a_old);
    auto right_inv = solve(res.b_new, QMatrix::identity(res.b_new.rows()));
    if (!right_inv) throw ReflectionError("cokernel map has no right inverse");
    res.a_new = big * *right_inv;
  } else {
    throw ReflectionError("chamber violated: xi_i = 0 and zeta_c_i = 0");
  }
  res.point = unpack(pt, i, res.a_new, res.b_new);
  return res;
}

std::string CertificateReport::str() const {
  std::ostringstream os;
  os << "R1=" << (r1 ? "ok" : "FAIL") << " R2=" << (r2 ? "ok" : "FAIL") << " R3=" << (r3 ? "ok" : "FAIL")
     << " R4=" << (r4 ? "ok" : "FAIL");
  return os.str();
}

CertificateReport check_reflection(const RepPoint& old, std::size_t i, const Parameter& zeta,
                                   const ReflectionResult& res) {
  CertificateReport rep;
  const RepPoint& np = res.point;
  const Graph& g = old.graph;
  QMatrix a_new = a_map(np, i), b_new = b_map(np, i);
  bool packed = a_new == res.a_new && b_new == res.b_new;
  // (R1): 0 -> V'_i -> U_i -> V_i -> 0 exact, in the direction of the construction.
  const QMatrix& inj = res.forward ? a_new : res.a_old;
  const QMatrix& sur = res.forward ? res.b_old : b_new;
  rep.r1 = packed && is_injective(inj) && is_surjective(sur) && (sur * inj).is_zero() &&
           inj.cols() + sur.rows() == inj.rows();
  // (R2): a b - a' b' = s_i(zeta)_i.
  QMatrix diff = res.a_old * res.b_old - a_new * b_new;
  rep.r2 = packed && diff == QMatrix::scalar(diff.rows(), res.zeta.zeta_c[i]);
  // (R3): data away from i is unchanged.
  rep.r3 = true;
  for (std::size_t h = 0; h < g.num_arrows(); ++h) {
    const Arrow& a = g.arrow(h);
    if (a.src != i && a.dst != i && np.x[h] != old.x[h]) rep.r3 = false;
  }
  for (std::size_t j = 0; j < g.num_vertices(); ++j)
    if (j != i && (np.p[j] != old.p[j] || np.q[j] != old.q[j] || np.v[j] != old.v[j])) rep.r3 = false;
  // (R4): both points satisfy their moment-map equations; dims follow s_i * v.
  rep.r4 = in_lambda(old, zeta.zeta_c) && in_lambda(np, res.zeta.zeta_c) &&
           np.v == weyl_star(g, i, old.v, old.w);
  return rep;
}

WordResult reflect_word(const RepPoint& pt, const WeylWord& word, const Parameter& zeta) {
  const Graph& g = pt.graph;
  bool zero = true;
  for (long x : zeta.xi)
    if (x != 0) zero = false;
  for (const auto& c : zeta.zeta_c)
    if (sgn(c) != 0) zero = false;
  if (zero) {
    if (weyl_star_word(g, word, pt.v, pt.w) != pt.v)
      throw ReflectionError("zeta = 0 reflection needs omega * v = v");
    return {pt, zeta, {}};
  }
  WordResult r{pt, zeta, {}};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto step = reflect_point(r.point, *it, r.zeta);
    r.point = std::move(step.point);
    r.zeta = std::move(step.zeta);
    r.forward.push_back(step.forward);
  }
  return r;
}

Parameter permute_parameter(const DiagramAuto& a, const Parameter& z) {
  return {permute(a, z.xi), permute(a, z.zeta_c)};
}

bool parameter_equal(const Parameter& a, const Parameter& b) { return a.xi == b.xi && a.zeta_c == b.zeta_c; }

WordResult sigma_point(const RepPoint& pt, const WeylWord& omega, const DiagramAuto& a, const InvolutionConfig& cfg,
                       const Parameter& zeta) {
  RepPoint t = apply_tau(pt, cfg);
  WordResult r = reflect_word(t, omega, tau_parameter(zeta, cfg.mode));
  r.point = diagram_apply(a, r.point);
  r.zeta = permute_parameter(a, r.zeta);
  return r;
}

std::vector<std::string> sigma_compatibility(const RepPoint& pt, const WeylWord& omega, const DiagramAuto& a,
                                             const Parameter& zeta, TauMode mode) {
  const Graph& g = pt.graph;
  std::vector<std::string> bad;
  Parameter image = permute_parameter(a, weyl_word(g, omega, tau_parameter(zeta, mode)));
  if (!parameter_equal(image, zeta)) bad.push_back(mode == TauMode::tau ? "-a omega(zeta) = zeta" : "-a omega(xi) = xi, a omega(zeta_c) = zeta_c");
  if (permute(a, pt.w) != pt.w) bad.push_back("a(w) = w");
  if (permute(a, weyl_star_word(g, omega, pt.v, pt.w)) != pt.v) bad.push_back("a(omega * v) = v");
  return bad;
}

bool is_sigma_fixed(const RepPoint& pt, const WeylWord& omega, const DiagramAuto& a, const InvolutionConfig& cfg,
                    const Parameter& zeta) {
  auto bad = sigma_compatibility(pt, omega, a, zeta, cfg.mode);
  if (!bad.empty()) {
    std::string msg = "sigma compatibility violated:";
    for (const auto& b : bad) msg += " [" + b + "]";
    throw std::invalid_argument(msg);
  }
  WordResult r = sigma_point(pt, omega, a, cfg, zeta);
  return intertwiner(r.point, pt).has_value();
}

}  // namespace sqv
