#pragma once

#include "sqv/forms.hpp"
#include "sqv/rep.hpp"

namespace sqv {

enum class TauMode { tau, tau_hat };

struct InvolutionConfig {
  FormedGrading forms_v;
  FormedGrading forms_w;
  TauMode mode = TauMode::tau;
};

// Symmetric identity forms on V, standard delta_w forms on W.
InvolutionConfig default_config(const RepPoint& pt, const std::vector<int>& delta_w, TauMode mode = TauMode::tau);

// ^tau x_h = eps(h) x_hbar^*, ^tau p = -q^*, ^tau q = p^*.
RepPoint tau(const RepPoint& pt, const FormedGrading& fv, const FormedGrading& fw);
// ^tau-hat x_h = x_hbar^*, p = q^*, q = p^*.
RepPoint tau_hat(const RepPoint& pt, const FormedGrading& fv, const FormedGrading& fw);
RepPoint apply_tau(const RepPoint& pt, const InvolutionConfig& cfg);
// Parameter after tau: -zeta; after tau-hat: (-xi, zeta_c).
Parameter tau_parameter(const Parameter& z, TauMode mode);

// a(x)_h = eps(h)^{(1-c)/2} x_{a^{-1}(h)} on (a(v), a(w)).
RepPoint diagram_apply(const DiagramAuto& a, const RepPoint& pt);
FormedGrading permute_forms(const DiagramAuto& a, const FormedGrading& f);
GroupElem permute_elem(const DiagramAuto& a, const GroupElem& g);

enum class SigmaMode { sigma, sigma_hat };
struct FlagPair {
  QMatrix x;
  std::vector<QMatrix> flag;
};
// (x, F) -> (-x^*, F^perp) or (x^*, F^perp).  F^perp lists F_n^perp ⊇ ... ⊇ F_1^perp.
FlagPair flag_sigma1(const QMatrix& x, const std::vector<QMatrix>& flag, const Form& form_w, SigmaMode mode);
bool same_flag_pair(const FlagPair& a, const FlagPair& b);

}  // namespace sqv
