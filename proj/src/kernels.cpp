#include "sqv/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sqv::kernels {

namespace {

void check_shapes(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
}

void row_product(const QMatrix& a, const QMatrix& b, QMatrix& c, std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Q& aik = a(i, k);
    if (sgn(aik) == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  }
}

// Pivot search shared by both elimination flavours.
bool find_pivot(const QMatrix& m, std::size_t row, std::size_t col, std::size_t& found) {
  for (std::size_t r = row; r < m.rows(); ++r) {
    if (sgn(m(r, col)) != 0) {
      found = r;
      return true;
    }
  }
  return false;
}

void swap_rows(QMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void normalize_row(QMatrix& m, std::size_t row, std::size_t col) {
  Q inv = 1 / m(row, col);
  for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
}

void eliminate_row(QMatrix& m, std::size_t target, std::size_t pivot_row, std::size_t col) {
  if (target == pivot_row || sgn(m(target, col)) == 0) return;
  Q f = m(target, col);
  for (std::size_t c = col; c < m.cols(); ++c) {
    if (sgn(m(pivot_row, c)) != 0) m(target, c) -= f * m(pivot_row, c);
  }
}

}  // namespace

QMatrix multiply_serial(const QMatrix& a, const QMatrix& b) {
  check_shapes(a, b);
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) row_product(a, b, c, i);
  return c;
}

QMatrix multiply_parallel(const QMatrix& a, const QMatrix& b) {
  check_shapes(a, b);
  QMatrix c(a.rows(), b.cols());
  const long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) row_product(a, b, c, static_cast<std::size_t>(i));
  return c;
}

Echelon rref_serial(const QMatrix& a) {
  Echelon e{a, {}};
  QMatrix& m = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p;
    if (!find_pivot(m, row, col, p)) continue;
    swap_rows(m, row, p);
    normalize_row(m, row, col);
    for (std::size_t r = 0; r < m.rows(); ++r) eliminate_row(m, r, row, col);
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

Echelon rref_parallel(const QMatrix& a) {
  Echelon e{a, {}};
  QMatrix& m = e.reduced;
  std::size_t row = 0;
  const long nrows = static_cast<long>(m.rows());
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p;
    if (!find_pivot(m, row, col, p)) continue;
    swap_rows(m, row, p);
    normalize_row(m, row, col);
#pragma omp parallel for schedule(static)
    for (long r = 0; r < nrows; ++r) eliminate_row(m, static_cast<std::size_t>(r), row, col);
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.rows() * a.cols() * b.cols() >= kParallelThreshold && a.rows() > 1) return multiply_parallel(a, b);
  return multiply_serial(a, b);
}

Echelon rref(const QMatrix& a) {
  if (a.rows() * a.rows() * a.cols() >= kParallelThreshold && a.rows() > 1) return rref_parallel(a);
  return rref_serial(a);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sqv::kernels
