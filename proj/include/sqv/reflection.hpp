#pragma once

#include "sqv/involutions.hpp"
#include "sqv/rep.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sqv {

struct ReflectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// U_i = W_i ⊕ ⊕_{o(h)=i} V_{i(h)}, packed with W_i first and arrows in stored order.
std::vector<std::size_t> out_arrows(const Graph& g, std::size_t i);
QMatrix a_map(const RepPoint& pt, std::size_t i);  // (q_i; x_h) : V_i -> U_i
QMatrix b_map(const RepPoint& pt, std::size_t i);  // [p_i | eps(h) x_hbar] : U_i -> V_i

struct ReflectionResult {
  RepPoint point;
  Parameter zeta;  // s_i(zeta)
  QMatrix a_old, b_old, a_new, b_new;
  bool forward = true;  // true: V'_i = ker b_i(x); false: the dual construction
};

ReflectionResult reflect_point(const RepPoint& pt, std::size_t i, const Parameter& zeta);

struct CertificateReport {
  bool r1 = false, r2 = false, r3 = false, r4 = false;
  bool ok() const { return r1 && r2 && r3 && r4; }
  std::string str() const;
};
CertificateReport check_reflection(const RepPoint& old, std::size_t i, const Parameter& zeta,
                                   const ReflectionResult& res);

struct WordResult {
  RepPoint point;
  Parameter zeta;
  std::vector<bool> forward;  // branch used at each step, in application order
};
// S_{i1} ... S_{il}: the last letter is applied first.
WordResult reflect_word(const RepPoint& pt, const WeylWord& word, const Parameter& zeta);

// sigma = a S_omega tau (or tau-hat).
WordResult sigma_point(const RepPoint& pt, const WeylWord& omega, const DiagramAuto& a, const InvolutionConfig& cfg,
                       const Parameter& zeta);
// Names of the violated conditions among -a omega(zeta) = zeta, a(w) = w, a(omega * v) = v.
std::vector<std::string> sigma_compatibility(const RepPoint& pt, const WeylWord& omega, const DiagramAuto& a,
                                             const Parameter& zeta, TauMode mode);
// Throws std::invalid_argument naming the failed conditions.
bool is_sigma_fixed(const RepPoint& pt, const WeylWord& omega, const DiagramAuto& a, const InvolutionConfig& cfg,
                    const Parameter& zeta);

Parameter permute_parameter(const DiagramAuto& a, const Parameter& z);
bool parameter_equal(const Parameter& a, const Parameter& b);

}  // namespace sqv
