#pragma once

#include "sqv/involutions.hpp"
#include "sqv/zw.hpp"

#include <string>
#include <vector>

namespace sqv {

// trace(x_{h_s} ... x_{h_1}); the lazy cycle [i] gives dim V_i.
// Throws std::invalid_argument unless the path is composable and closed.
Q trace_cycle(const RepPoint& pt, const Path& cycle);

// The composite q_{i(f)} x_{h_s} ... x_{h_1} p_{o(f)} : W_{o(f)} -> W_{i(f)}.
QMatrix path_composite(const RepPoint& pt, const Path& path);
// sum_{r,c} chi(r, c) M(r, c) for the composite M.
Q chi_path(const RepPoint& pt, const Path& path, const QMatrix& chi);

// (x + tau x) / 2 for random x; requires tau to be an involution on points
// (delta_v alternating along edges and delta_v delta_w = -1 at every vertex).
RepPoint random_tau_fixed_point(const Graph& g, const IntVec& v, const IntVec& w, const InvolutionConfig& cfg,
                                Rng& rng);
bool is_tau_fixed(const RepPoint& pt, const InvolutionConfig& cfg);

struct InvarianceReport {
  std::size_t samples = 0;
  std::size_t generators = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Cycles and chi-paths (chi = each matrix entry) of length <= max_length, checked
// under num_samples isometries of the forms on V.
InvarianceReport check_invariance(const RepPoint& pt, const InvolutionConfig& cfg, std::size_t num_samples,
                                  unsigned long long seed, std::size_t max_length = 3);
// The same for the given group elements of G_v and G_w (applied together, sample by sample).
// Also reports points that stop being tau-fixed.
InvarianceReport check_invariance_with(const RepPoint& pt, const InvolutionConfig& cfg,
                                       const std::vector<GroupElem>& gv, const std::vector<GroupElem>& gw,
                                       std::size_t max_length = 3);

}  // namespace sqv
