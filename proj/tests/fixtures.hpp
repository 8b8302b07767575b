#pragma once

#include "sqv/rep.hpp"

namespace fixtures {

// A_1, w = 2, v = 1, p = (1, 0), q = (0, 1)^T.
inline sqv::RepPoint a1_point() {
  sqv::RepPoint pt = sqv::RepPoint::zero(sqv::Graph::type_a(1), {1}, {2});
  pt.p[0] = sqv::QMatrix{{1, 0}};
  pt.q[0] = sqv::QMatrix{{0}, {1}};
  return pt;
}

inline sqv::Parameter param(sqv::IntVec xi, sqv::QVec zc) { return {std::move(xi), std::move(zc)}; }

inline sqv::QVec zeros(std::size_t n) { return sqv::QVec(n, 0); }

}  // namespace fixtures
