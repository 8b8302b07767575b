#pragma once

#include "sqv/poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sqv {

Poly hbar();

// A spectral-parameter family: the matrix at the given parameter.
using MatrixFamily = std::function<RFMatrix(const Poly&)>;

// (I - (hbar/a) X) / (1 - hbar/a), X = [[0, 1], [1, 0]].
RFMatrix k_example(const Poly& a);
// Entry (r, c) of the displayed K_1(a), built literally from the rational expression.
RatFunc k_displayed_entry(const Poly& a, std::size_t r, std::size_t c);

// (I - (hbar/u) P) / (1 - hbar/u) on C^d (x) C^d, P the leg swap.
RFMatrix yang_r(const Poly& u, std::size_t d = 2);

MatrixFamily k_example_family();
MatrixFamily yang_r_family(std::size_t d = 2);
// Constant family, for controls.
MatrixFamily constant_family(const RFMatrix& m);

// K(a) K(-a) = I.
bool check_unitarity(const MatrixFamily& k, const Poly& a);
// R12(u - v) R13(u - w) R23(v - w) = R23(v - w) R13(u - w) R12(u - v).
bool check_yang_baxter(const MatrixFamily& r, std::size_t d, const Poly& u, const Poly& v, const Poly& w);

struct TwoSided {
  RFMatrix lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

// K2(a2) R(a1 + a2) K1(a1) R(a1 - a2) and R(a1 - a2) K1(a1) R(a1 + a2) K2(a2),
// K1 on the first leg and K2 on the second.  sum_sign = -1 uses R(-(a1 + a2)) instead.
TwoSided reflection_sides(const MatrixFamily& k1, const MatrixFamily& k2, const MatrixFamily& r, const Poly& a1,
                          const Poly& a2, int sum_sign = 1);
bool check_reflection_equation(const MatrixFamily& k1, const MatrixFamily& k2, const MatrixFamily& r, const Poly& a1,
                               const Poly& a2, int sum_sign = 1);

// R(a2 - a1) K2(a2) R(a1 + a2) K1(a1) and K1(a1) R(a1 + a2) K2(a2) R(a2 - a1).
struct FusionResult {
  RFMatrix first, second;
  bool agree = false;
  const RFMatrix& fused() const { return first; }
};
FusionResult fusion(const MatrixFamily& k1, const MatrixFamily& k2, const MatrixFamily& r, const Poly& a1,
                    const Poly& a2, int sum_sign = 1);

// R_{0m}(a0 - am) ... R_{01}(a0 - a1) K_0(a0) R_{01}(a0 - a1) ... R_{0m}(a0 - am)
// on leg 0 plus one spectator leg per entry of spectators.
RFMatrix s_operator(const MatrixFamily& k0, const MatrixFamily& r, std::size_t d, const Poly& a0,
                    const std::vector<Poly>& spectators);

// R_{01}(u - v) S_0(u) R_{01}(u + v) S_1(v) = S_1(v) R_{01}(u + v) S_0(u) R_{01}(u - v)
// on F_0(u) (x) F_0(v) (x) F_1(a_1) (x) ... .
TwoSided s_reflection_sides(const MatrixFamily& k0, const MatrixFamily& r, std::size_t d, const Poly& u,
                            const Poly& v, const std::vector<Poly>& spectators);

struct IdentityCheck {
  std::string name;
  bool ok = false;
  double seconds = 0;
  bool informational = false;  // reported, not part of the verdict
};
// The K-matrix battery on the A_1, w = 2 example.
std::vector<IdentityCheck> kmatrix_battery();

}  // namespace sqv
