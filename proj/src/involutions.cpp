#include "sqv/involutions.hpp"

#include <stdexcept>

namespace sqv {

namespace {

void check_forms(const RepPoint& pt, const FormedGrading& fv, const FormedGrading& fw) {
  const std::size_t n = pt.graph.num_vertices();
  if (fv.size() != n || fw.size() != n) throw std::invalid_argument("one form per vertex is required");
  for (std::size_t i = 0; i < n; ++i)
    if (fv[i].dim() != pt.vdim(i) || fw[i].dim() != pt.wdim(i)) throw std::invalid_argument("form dimension mismatch");
}

RepPoint transpose_point(const RepPoint& pt, const FormedGrading& fv, const FormedGrading& fw, bool signs) {
  check_forms(pt, fv, fw);
  RepPoint r = pt;
  for (std::size_t h = 0; h < pt.x.size(); ++h) {
    const Arrow& a = pt.graph.arrow(h);
    // x_hbar : V_{i(h)} -> V_{o(h)}
    QMatrix adj = right_adjoint(pt.x[a.bar], fv[a.dst], fv[a.src]);
    r.x[h] = signs ? Q(a.eps) * adj : adj;
  }
  for (std::size_t i = 0; i < pt.p.size(); ++i) {
    QMatrix qs = right_adjoint(pt.q[i], fv[i], fw[i]);
    r.p[i] = signs ? -qs : qs;
    r.q[i] = right_adjoint(pt.p[i], fw[i], fv[i]);
  }
  return r;
}

}  // namespace

InvolutionConfig default_config(const RepPoint& pt, const std::vector<int>& delta_w, TauMode mode) {
  InvolutionConfig cfg;
  cfg.forms_v = standard_grading(pt.v, std::vector<int>(pt.v.size(), 1));
  cfg.forms_w = standard_grading(pt.w, delta_w);
  cfg.mode = mode;
  return cfg;
}

RepPoint tau(const RepPoint& pt, const FormedGrading& fv, const FormedGrading& fw) {
  return transpose_point(pt, fv, fw, true);
}

RepPoint tau_hat(const RepPoint& pt, const FormedGrading& fv, const FormedGrading& fw) {
  return transpose_point(pt, fv, fw, false);
}

RepPoint apply_tau(const RepPoint& pt, const InvolutionConfig& cfg) {
  return cfg.mode == TauMode::tau ? tau(pt, cfg.forms_v, cfg.forms_w) : tau_hat(pt, cfg.forms_v, cfg.forms_w);
}

Parameter tau_parameter(const Parameter& z, TauMode mode) {
  Parameter r = z;
  for (auto& x : r.xi) x = -x;
  if (mode == TauMode::tau)
    for (auto& x : r.zeta_c) x = -x;
  return r;
}

RepPoint diagram_apply(const DiagramAuto& a, const RepPoint& pt) {
  const Graph& g = pt.graph;
  a.validate(g);
  RepPoint r = RepPoint::zero(g, permute(a, pt.v), permute(a, pt.w));
  for (std::size_t h = 0; h < g.num_arrows(); ++h) {
    std::size_t src = a.inverse_arrow(h);
    QMatrix m = pt.x[src];
    if (a.c == -1 && g.arrow(h).eps == -1) m = -m;
    r.x[h] = m;
  }
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    std::size_t src = a.inverse_vertex(i);
    r.p[i] = pt.p[src];
    r.q[i] = pt.q[src];
  }
  return r;
}

FormedGrading permute_forms(const DiagramAuto& a, const FormedGrading& f) {
  FormedGrading r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[a.vertex_perm[i]] = f[i];
  return r;
}

GroupElem permute_elem(const DiagramAuto& a, const GroupElem& g) {
  GroupElem r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[a.vertex_perm[i]] = g[i];
  return r;
}

FlagPair flag_sigma1(const QMatrix& x, const std::vector<QMatrix>& flag, const Form& form_w, SigmaMode mode) {
  if (!flag_compatible(x, flag)) throw std::invalid_argument("flag_sigma1: x(F_k) is not inside F_{k+1}");
  FlagPair out;
  QMatrix xs = right_adjoint(x, form_w, form_w);
  out.x = mode == SigmaMode::sigma ? -xs : xs;
  for (auto it = flag.rbegin(); it != flag.rend(); ++it) out.flag.push_back(orthogonal_complement(*it, form_w));
  return out;
}

bool same_flag_pair(const FlagPair& a, const FlagPair& b) {
  if (a.x != b.x || a.flag.size() != b.flag.size()) return false;
  for (std::size_t k = 0; k < a.flag.size(); ++k)
    if (!same_subspace(a.flag[k], b.flag[k])) return false;
  return true;
}

}  // namespace sqv
