#pragma once

#include "sqv/matrix.hpp"

#include <cstddef>

// Exact kernels in two flavours: a plain serial reference and an OpenMP
// version. Both must return identical results; the tests compare them.
namespace sqv::kernels {

QMatrix multiply_serial(const QMatrix& a, const QMatrix& b);
QMatrix multiply_parallel(const QMatrix& a, const QMatrix& b);

Echelon rref_serial(const QMatrix& a);
Echelon rref_parallel(const QMatrix& a);

// Work estimate above which the dispatching entry points use OpenMP.
inline constexpr std::size_t kParallelThreshold = 1u << 14;

QMatrix multiply(const QMatrix& a, const QMatrix& b);
Echelon rref(const QMatrix& a);

int max_threads();

}  // namespace sqv::kernels
