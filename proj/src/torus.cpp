#include "sqv/torus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sqv {

namespace {

IntVec add(IntVec a, const IntVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

bool nonneg(const IntVec& x) {
  return std::all_of(x.begin(), x.end(), [](long e) { return e >= 0; });
}

// a(w0 *_{w} u)
IntVec dual(const Graph& g, const DiagramAuto& a, const WeylWord& omega, const IntVec& u, const IntVec& w) {
  return permute(a, weyl_star_word(g, omega, u, w));
}

void check_inputs(const Graph& g, const DiagramAuto& a, const WeylWord& omega, const IntVec& v, const IntVec& w1,
                  const std::vector<IntVec>& rest) {
  const std::size_t n = g.num_vertices();
  auto fail = [](const std::string& m) { throw std::invalid_argument("enumerate_models: " + m); };
  if (v.size() != n || w1.size() != n) fail("dimension vectors must have one entry per vertex");
  for (const auto& r : rest)
    if (r.size() != n) fail("dimension vectors must have one entry per vertex");
  for (std::size_t i : omega)
    if (i >= n) fail("omega letter out of range");
  a.validate(g);
  if (!nonneg(v) || !nonneg(w1)) fail("negative dimension");
  IntVec w = w1;
  for (const auto& r : rest) {
    if (!nonneg(r)) fail("negative dimension");
    for (std::size_t k = 0; k < n; ++k) w[k] += 2 * r[k];
  }
  if (permute(a, w1) != w1) fail("a(w1) != w1");
  if (permute(a, w) != w) fail("a(w) != w for w = w1 + 2 sum w^i");
}

// All vectors 0 <= u <= v.
std::vector<IntVec> box(const IntVec& v) {
  std::vector<IntVec> out{IntVec(v.size(), 0)};
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::vector<IntVec> next;
    for (const auto& u : out)
      for (long e = 0; e <= v[k]; ++e) {
        IntVec x = u;
        x[k] = e;
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::string to_string(const ModelDecomp& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < d.parts.size(); ++k) {
    if (k) os << "; ";
    for (std::size_t i = 0; i < d.parts[k].size(); ++i) os << (i ? "," : "") << d.parts[k][i];
  }
  os << ")";
  return os.str();
}

bool is_model(const Graph& g, const DiagramAuto& a, const WeylWord& omega, const IntVec& v, const IntVec& w1,
              const std::vector<IntVec>& rest, const ModelDecomp& d) {
  if (d.parts.size() != rest.size() + 1) return false;
  for (const auto& p : d.parts)
    if (p.size() != v.size() || !nonneg(p)) return false;
  if (dual(g, a, omega, d.parts[0], w1) != d.parts[0]) return false;
  IntVec total = d.parts[0];
  for (std::size_t k = 0; k < rest.size(); ++k) {
    IntVec dk = dual(g, a, omega, d.parts[k + 1], rest[k]);
    if (!nonneg(dk)) return false;
    total = add(add(total, d.parts[k + 1]), dk);
  }
  return total == v;
}

std::vector<ModelDecomp> enumerate_models_multi(const Graph& g, const DiagramAuto& a, const WeylWord& omega,
                                                const IntVec& v, const IntVec& w1, const std::vector<IntVec>& rest) {
  check_inputs(g, a, omega, v, w1, rest);
  const std::vector<IntVec> cube = box(v);
  std::vector<ModelDecomp> out;
  for (const IntVec& v1 : cube) {
    if (dual(g, a, omega, v1, w1) != v1) continue;
    // Depth-first over the remaining blocks, tracking what is left of v.
    std::vector<IntVec> stack{v1};
    auto rec = [&](auto&& self, std::size_t k, const IntVec& used) -> void {
      if (k == rest.size()) {
        if (used == v) out.push_back(ModelDecomp{stack});
        return;
      }
      for (const IntVec& u : cube) {
        IntVec du = dual(g, a, omega, u, rest[k]);
        if (!nonneg(du)) continue;
        IntVec next = add(add(used, u), du);
        bool within = true;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (next[i] > v[i]) within = false;
        if (!within) continue;
        stack.push_back(u);
        self(self, k + 1, next);
        stack.pop_back();
      }
    };
    rec(rec, 0, v1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModelDecomp> enumerate_models(const Graph& g, const DiagramAuto& a, const WeylWord& omega,
                                          const IntVec& v, const IntVec& w1, const IntVec& w2) {
  return enumerate_models_multi(g, a, omega, v, w1, {w2});
}

std::vector<std::size_t> Rank2Chambers::crossings(std::size_t from, std::size_t to) const {
  std::vector<std::size_t> out;
  const std::size_t m = chambers.size();
  for (std::size_t c = from; c % m != to % m; ++c) {
    const Chamber& p = chambers[c % m];
    const Chamber& q = chambers[(c + 1) % m];
    for (std::size_t k = 0; k < walls.size(); ++k)
      if (p.signs[k] != q.signs[k]) out.push_back(k);
  }
  return out;
}

std::size_t Rank2Chambers::opposite(std::size_t c) const { return (c + chambers.size() / 2) % chambers.size(); }

std::size_t Rank2Chambers::locate(int a1, int a2) const {
  std::vector<int> s;
  for (const Wall& w : walls) {
    int x = w.c1 * a1 + w.c2 * a2;
    if (x == 0) throw std::invalid_argument("rank2_chambers: point lies on a wall");
    s.push_back(x > 0 ? 1 : -1);
  }
  for (std::size_t c = 0; c < chambers.size(); ++c)
    if (chambers[c].signs == s) return c;
  throw std::logic_error("rank2_chambers: sign vector not realised");
}

Rank2Chambers rank2_chambers() {
  Rank2Chambers r;
  r.walls = {{"a1=0", 1, 0, WallKind::K},
             {"a2=0", 0, 1, WallKind::K},
             {"a1-a2=0", 1, -1, WallKind::R},
             {"a1+a2=0", 1, 1, WallKind::R}};
  // One point per octant, counterclockwise from (1, 2).
  const int pts[8][2] = {{1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}, {1, -2}, {2, -1}, {2, 1}};
  for (const auto& p : pts) {
    Chamber c;
    c.a1 = p[0];
    c.a2 = p[1];
    for (const Wall& w : r.walls) c.signs.push_back(w.c1 * p[0] + w.c2 * p[1] > 0 ? 1 : -1);
    r.chambers.push_back(c);
  }
  return r;
}

}  // namespace sqv
