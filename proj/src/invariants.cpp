#include "sqv/invariants.hpp"

#include <stdexcept>

namespace sqv {

namespace {

QMatrix path_product(const RepPoint& pt, const Path& f) {
  const Graph& g = pt.graph;
  if (!is_composable(g, f)) throw std::invalid_argument("path is not composable: " + path_str(g, f));
  QMatrix m = QMatrix::identity(pt.vdim(f.start));
  for (std::size_t h : f.arrows) m = pt.x[h] * m;
  return m;
}

struct Generator {
  Path path;
  bool cycle = true;
  std::size_t r = 0, c = 0;  // entry for chi-paths
};

std::vector<Generator> generators(const RepPoint& pt, std::size_t max_length) {
  const Graph& g = pt.graph;
  std::vector<Generator> out;
  for (const Path& f : enumerate_paths(g, max_length)) {
    std::size_t o = path_source(g, f), t = path_target(g, f);
    if (!f.is_lazy() && o == t) out.push_back({f, true});
    for (std::size_t r = 0; r < pt.wdim(t); ++r)
      for (std::size_t c = 0; c < pt.wdim(o); ++c) out.push_back({f, false, r, c});
  }
  return out;
}

Q value(const RepPoint& pt, const Generator& gen) {
  if (gen.cycle) return trace_cycle(pt, gen.path);
  return path_composite(pt, gen.path)(gen.r, gen.c);
}

std::string describe(const Graph& g, const Generator& gen) {
  if (gen.cycle) return "tr " + path_str(g, gen.path);
  return "chi(" + std::to_string(gen.r) + "," + std::to_string(gen.c) + ") " + path_str(g, gen.path);
}

}  // namespace

Q trace_cycle(const RepPoint& pt, const Path& cycle) {
  const Graph& g = pt.graph;
  if (!is_composable(g, cycle) || path_source(g, cycle) != path_target(g, cycle))
    throw std::invalid_argument("trace_cycle: not a cycle: " + path_str(g, cycle));
  return path_product(pt, cycle).trace();
}

QMatrix path_composite(const RepPoint& pt, const Path& path) {
  const Graph& g = pt.graph;
  QMatrix m = path_product(pt, path);
  return pt.q[path_target(g, path)] * m * pt.p[path_source(g, path)];
}

Q chi_path(const RepPoint& pt, const Path& path, const QMatrix& chi) {
  QMatrix m = path_composite(pt, path);
  if (chi.rows() != m.rows() || chi.cols() != m.cols()) throw std::invalid_argument("chi_path: shape mismatch");
  Q s = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s += chi(r, c) * m(r, c);
  return s;
}

RepPoint random_tau_fixed_point(const Graph& g, const IntVec& v, const IntVec& w, const InvolutionConfig& cfg,
                                Rng& rng) {
  RepPoint x = random_point(g, v, w, rng);
  RepPoint tx = apply_tau(x, cfg);
  if (apply_tau(tx, cfg) != x) throw std::invalid_argument("random_tau_fixed_point: tau is not an involution for these forms");
  RepPoint out = x;
  const Q half(1, 2);
  for (std::size_t h = 0; h < out.x.size(); ++h) out.x[h] = half * (x.x[h] + tx.x[h]);
  for (std::size_t i = 0; i < out.p.size(); ++i) {
    out.p[i] = half * (x.p[i] + tx.p[i]);
    out.q[i] = half * (x.q[i] + tx.q[i]);
  }
  return out;
}

bool is_tau_fixed(const RepPoint& pt, const InvolutionConfig& cfg) { return apply_tau(pt, cfg) == pt; }

InvarianceReport check_invariance_with(const RepPoint& pt, const InvolutionConfig& cfg,
                                       const std::vector<GroupElem>& gv, const std::vector<GroupElem>& gw,
                                       std::size_t max_length) {
  InvarianceReport rep;
  if (!is_tau_fixed(pt, cfg)) {
    rep.violations.push_back("input point is not tau-fixed");
    return rep;
  }
  const auto gens = generators(pt, max_length);
  rep.generators = gens.size();
  std::vector<Q> base;
  for (const auto& gen : gens) base.push_back(value(pt, gen));
  const std::size_t n = std::max(gv.size(), gw.size());
  for (std::size_t s = 0; s < n; ++s) {
    RepPoint y = pt;
    if (s < gv.size()) y = act_gv(gv[s], y);
    if (s < gw.size()) y = act_gw(gw[s], y);
    ++rep.samples;
    if (!is_tau_fixed(y, cfg)) rep.violations.push_back("sample " + std::to_string(s) + ": tau-fixedness lost");
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (value(y, gens[k]) != base[k])
        rep.violations.push_back("sample " + std::to_string(s) + ": " + describe(pt.graph, gens[k]) + " changed");
  }
  return rep;
}

InvarianceReport check_invariance(const RepPoint& pt, const InvolutionConfig& cfg, std::size_t num_samples,
                                  unsigned long long seed, std::size_t max_length) {
  Rng rng(seed);
  std::vector<GroupElem> gv;
  for (std::size_t s = 0; s < num_samples; ++s) {
    GroupElem g;
    for (const Form& f : cfg.forms_v) g.push_back(sample_isometry(f, rng));
    gv.push_back(std::move(g));
  }
  return check_invariance_with(pt, cfg, gv, {}, max_length);
}

}  // namespace sqv
