#pragma once

#include "sqv/graph.hpp"

#include <string>
#include <vector>

namespace sqv {

// A splitting v = v^1 + sum_{i >= 2} (v^i + a(w0 *_{w^i} v^i)) with v^1 = a(w0 *_{w^1} v^1).
struct ModelDecomp {
  std::vector<IntVec> parts;  // parts[0] = v^1, parts[k] = v^{k+1}
  bool operator==(const ModelDecomp&) const = default;
  auto operator<=>(const ModelDecomp&) const = default;
};

std::string to_string(const ModelDecomp& d);

// Throws std::invalid_argument naming the failing clause.
std::vector<ModelDecomp> enumerate_models(const Graph& g, const DiagramAuto& a, const WeylWord& omega,
                                          const IntVec& v, const IntVec& w1, const IntVec& w2);
std::vector<ModelDecomp> enumerate_models_multi(const Graph& g, const DiagramAuto& a, const WeylWord& omega,
                                                const IntVec& v, const IntVec& w1, const std::vector<IntVec>& rest);
// True when d satisfies the defining equations with nonnegative entries.
bool is_model(const Graph& g, const DiagramAuto& a, const WeylWord& omega, const IntVec& v, const IntVec& w1,
              const std::vector<IntVec>& rest, const ModelDecomp& d);

enum class WallKind { K, R };

struct Wall {
  std::string name;  // "a1=0", "a2=0", "a1-a2=0", "a1+a2=0"
  int c1 = 0, c2 = 0;  // normal: c1 a1 + c2 a2 = 0
  WallKind kind = WallKind::K;
};

struct Chamber {
  std::vector<int> signs;  // sign of c1 a1 + c2 a2 for each wall
  int a1 = 0, a2 = 0;      // an interior point
};

struct Rank2Chambers {
  std::vector<Wall> walls;
  // Counterclockwise, starting at C = {a2 > a1 > 0}.
  std::vector<Chamber> chambers;
  // Walls crossed going counterclockwise from chamber `from` to chamber `to`.
  std::vector<std::size_t> crossings(std::size_t from, std::size_t to) const;
  // Index of -C.
  std::size_t opposite(std::size_t c) const;
  std::size_t locate(int a1, int a2) const;
};

Rank2Chambers rank2_chambers();

}  // namespace sqv
