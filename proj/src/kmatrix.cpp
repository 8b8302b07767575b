#include "sqv/kmatrix.hpp"

#include <chrono>
#include <stdexcept>

namespace sqv {

Poly hbar() { return Poly::var("hbar"); }

RFMatrix k_example(const Poly& a) {
  Poly h = hbar();
  // a (I - (hbar/a) X) = a I - hbar X
  std::vector<Poly> num{a, -h, -h, a};
  return RFMatrix({2}, std::move(num), a - h);
}

RatFunc k_displayed_entry(const Poly& a, std::size_t r, std::size_t c) {
  if (r > 1 || c > 1) throw std::out_of_range("k_displayed_entry: index out of range");
  RatFunc ha = RatFunc(hbar()) / RatFunc(a);
  RatFunc x = r == c ? RatFunc(0) : RatFunc(1);
  RatFunc id = r == c ? RatFunc(1) : RatFunc(0);
  return (id - ha * x) / (RatFunc(1) - ha);
}

RFMatrix yang_r(const Poly& u, std::size_t d) {
  Poly h = hbar();
  const std::size_t D = d * d;
  std::vector<Poly> num(D * D);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t row = i * d + j;
      num[row * D + row] += u;
      num[row * D + (j * d + i)] -= h;
    }
  return RFMatrix({d, d}, std::move(num), u - h);
}

MatrixFamily k_example_family() {
  return [](const Poly& a) { return k_example(a); };
}

MatrixFamily yang_r_family(std::size_t d) {
  return [d](const Poly& u) { return yang_r(u, d); };
}

MatrixFamily constant_family(const RFMatrix& m) {
  return [m](const Poly&) { return m; };
}

bool check_unitarity(const MatrixFamily& k, const Poly& a) { return (k(a) * k(-a)).is_identity(); }

bool check_yang_baxter(const MatrixFamily& r, std::size_t d, const Poly& u, const Poly& v, const Poly& w) {
  std::vector<std::size_t> legs{d, d, d};
  RFMatrix r12 = embed(r(u - v), {0, 1}, legs);
  RFMatrix r13 = embed(r(u - w), {0, 2}, legs);
  RFMatrix r23 = embed(r(v - w), {1, 2}, legs);
  return r12 * r13 * r23 == r23 * r13 * r12;
}

TwoSided reflection_sides(const MatrixFamily& k1, const MatrixFamily& k2, const MatrixFamily& r, const Poly& a1,
                          const Poly& a2, int sum_sign) {
  RFMatrix K1 = k1(a1), K2 = k2(a2);
  if (K1.legs().size() != 1 || K2.legs().size() != 1) throw std::invalid_argument("reflection: K must have one leg");
  std::vector<std::size_t> legs{K1.legs()[0], K2.legs()[0]};
  RFMatrix Rp = r(Poly(sum_sign) * (a1 + a2)), Rm = r(a1 - a2);
  if (Rp.legs() != legs) throw std::invalid_argument("reflection: R legs do not match K legs");
  RFMatrix E1 = embed(K1, {0}, legs), E2 = embed(K2, {1}, legs);
  return {E2 * Rp * E1 * Rm, Rm * E1 * Rp * E2};
}

bool check_reflection_equation(const MatrixFamily& k1, const MatrixFamily& k2, const MatrixFamily& r, const Poly& a1,
                               const Poly& a2, int sum_sign) {
  return reflection_sides(k1, k2, r, a1, a2, sum_sign).equal();
}

FusionResult fusion(const MatrixFamily& k1, const MatrixFamily& k2, const MatrixFamily& r, const Poly& a1,
                    const Poly& a2, int sum_sign) {
  RFMatrix K1 = k1(a1), K2 = k2(a2);
  std::vector<std::size_t> legs{K1.legs().at(0), K2.legs().at(0)};
  RFMatrix E1 = embed(K1, {0}, legs), E2 = embed(K2, {1}, legs);
  RFMatrix Rd = r(a2 - a1), Rp = r(Poly(sum_sign) * (a1 + a2));
  FusionResult f{Rd * E2 * Rp * E1, E1 * Rp * E2 * Rd};
  f.agree = f.first == f.second;
  return f;
}

namespace {

// S on the legs `zero` (the 0-leg) and `spec` (spectators) of all_legs.
RFMatrix s_on(const MatrixFamily& k0, const MatrixFamily& r, const Poly& a0, const std::vector<Poly>& spectators,
              std::size_t zero, const std::vector<std::size_t>& spec, const std::vector<std::size_t>& all_legs) {
  RFMatrix s = embed(k0(a0), {zero}, all_legs);
  // Innermost factor R_{01} first, so S = R_{0m} ... R_{01} K R_{01} ... R_{0m}.
  for (std::size_t k = 0; k < spectators.size(); ++k) {
    RFMatrix rk = embed(r(a0 - spectators[k]), {zero, spec[k]}, all_legs);
    s = rk * s * rk;
  }
  return s;
}

}  // namespace

RFMatrix s_operator(const MatrixFamily& k0, const MatrixFamily& r, std::size_t d, const Poly& a0,
                    const std::vector<Poly>& spectators) {
  std::vector<std::size_t> legs(spectators.size() + 1, d);
  std::vector<std::size_t> spec;
  for (std::size_t k = 1; k < legs.size(); ++k) spec.push_back(k);
  return s_on(k0, r, a0, spectators, 0, spec, legs);
}

TwoSided s_reflection_sides(const MatrixFamily& k0, const MatrixFamily& r, std::size_t d, const Poly& u,
                            const Poly& v, const std::vector<Poly>& spectators) {
  std::vector<std::size_t> legs(spectators.size() + 2, d);
  std::vector<std::size_t> spec;
  for (std::size_t k = 2; k < legs.size(); ++k) spec.push_back(k);
  RFMatrix S0 = s_on(k0, r, u, spectators, 0, spec, legs);
  RFMatrix S1 = s_on(k0, r, v, spectators, 1, spec, legs);
  RFMatrix Rm = embed(r(u - v), {0, 1}, legs);
  RFMatrix Rp = embed(r(u + v), {0, 1}, legs);
  return {Rm * S0 * Rp * S1, S1 * Rp * S0 * Rm};
}

std::vector<IdentityCheck> kmatrix_battery() {
  using clock = std::chrono::steady_clock;
  std::vector<IdentityCheck> out;
  auto run = [&](const std::string& name, auto&& f, bool info = false) {
    auto t0 = clock::now();
    bool ok = f();
    out.push_back({name, ok, std::chrono::duration<double>(clock::now() - t0).count(), info});
  };
  Poly a = Poly::var("a"), a1 = Poly::var("a1"), a2 = Poly::var("a2");
  Poly u = Poly::var("u"), v = Poly::var("v"), w = Poly::var("w");
  MatrixFamily K = k_example_family(), R = yang_r_family(2);

  run("K1(a) matches the displayed matrix", [&] {
    RFMatrix k = k_example(a);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        if (k.entry(r, c) != k_displayed_entry(a, r, c)) return false;
    return k.substitute(symbol("hbar"), Poly(0)).is_identity();
  });
  run("K1(a) K1(-a) = I", [&] { return check_unitarity(K, a); });
  run("R(u) R(-u) = I", [&] { return check_unitarity(R, u); });
  run("Yang-Baxter for R", [&] { return check_yang_baxter(R, 2, u, v, w); });
  run("reflection equation (K1, K1, R)", [&] { return check_reflection_equation(K, K, R, a1, a2); });
  run("fusion factorizations agree", [&] { return fusion(K, K, R, a1, a2).agree; });
  run("S-operator m=1 reflection equation", [&] { return s_reflection_sides(K, R, 2, u, v, {w}).equal(); });
  run("reflection equation with R(-(a1+a2))", [&] { return check_reflection_equation(K, K, R, a1, a2, -1); }, true);
  run("fusion with R(-(a1+a2))", [&] { return fusion(K, K, R, a1, a2, -1).agree; }, true);
  return out;
}

}  // namespace sqv
