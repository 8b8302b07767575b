#include "sqv/matrix.hpp"

#include "sqv/kernels.hpp"

#include <sstream>
#include <stdexcept>

namespace sqv {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Q>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

QMatrix QMatrix::identity(std::size_t n) { return scalar(n, Q(1)); }

QMatrix QMatrix::scalar(std::size_t n, const Q& c) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  QMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("set_block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool QMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Q QMatrix::trace() const {
  if (!square()) throw std::invalid_argument("trace of non-square matrix");
  Q t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Q& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << to_string((*this)(r, c));
    os << "]";
  }
  os << "]";
  return os.str();
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator-(QMatrix a) { return a *= Q(-1); }
QMatrix operator*(const QMatrix& a, const QMatrix& b) { return kernels::multiply(a, b); }
QMatrix operator*(const Q& c, QMatrix a) { return a *= c; }
QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix power(const QMatrix& a, std::size_t k) {
  QMatrix r = QMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

QMatrix hstack(const std::vector<QMatrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += b.cols();
  }
  QMatrix m(rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    m.set_block(0, c, b);
    c += b.cols();
  }
  return m;
}

QMatrix vstack(const std::vector<QMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  QMatrix m(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    m.set_block(r, 0, b);
    r += b.rows();
  }
  return m;
}

QMatrix block_diag(const std::vector<QMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  QMatrix m(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range, int den) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, range, den);
  return m;
}

Echelon rref(const QMatrix& a) { return kernels::rref(a); }

std::size_t rank(const QMatrix& a) { return rref(a).pivots.size(); }

QMatrix nullspace(const QMatrix& a) {
  Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  QMatrix n(a.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    n(free[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) n(e.pivots[r], k) = -e.reduced(r, free[k]);
  }
  return n;
}

QMatrix left_nullspace(const QMatrix& a) { return nullspace(a.transpose()).transpose(); }

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (!a.square()) return std::nullopt;
  const std::size_t n = a.rows();
  Echelon e = rref(hstack({a, QMatrix::identity(n)}, n));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Q determinant(const QMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix m = a;
  const std::size_t n = m.rows();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t r = c; r < n; ++r)
      if (sgn(m(r, c)) != 0) {
        p = r;
        break;
      }
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Q f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  Echelon e = rref(hstack({a, b}, a.rows()));
  QMatrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, n + c);
  }
  return x;
}

std::optional<QMatrix> solve_unique(const QMatrix& a, const QMatrix& b) {
  if (rank(a) != a.cols()) return std::nullopt;
  return solve(a, b);
}

bool is_injective(const QMatrix& a) { return rank(a) == a.cols(); }
bool is_surjective(const QMatrix& a) { return rank(a) == a.rows(); }

QMatrix column_space(const QMatrix& a) { return canonical_basis(a); }

QMatrix canonical_basis(const QMatrix& a) {
  Echelon e = rref(a.transpose());
  return e.reduced.row_slice(0, e.pivots.size()).transpose();
}

bool same_subspace(const QMatrix& a, const QMatrix& b) { return canonical_basis(a) == canonical_basis(b); }

bool subspace_contains(const QMatrix& big, const QMatrix& small) {
  if (small.cols() == 0) return true;
  return rank(hstack({big, small}, big.rows())) == rank(big);
}

QMatrix subspace_sum(const QMatrix& a, const QMatrix& b) { return canonical_basis(hstack({a, b}, a.rows())); }

QMatrix subspace_intersection(const QMatrix& a, const QMatrix& b) {
  // x = a s = b t  <=>  [a, -b] (s; t) = 0
  QMatrix n = nullspace(hstack({a, -b}, a.rows()));
  return canonical_basis(a * n.row_slice(0, a.cols()));
}

QMatrix preimage(const QMatrix& a, const QMatrix& s) {
  // a x = s t  <=>  [a, -s] (x; t) = 0
  QMatrix n = nullspace(hstack({a, -s}, a.rows()));
  return canonical_basis(n.row_slice(0, a.cols()));
}

}  // namespace sqv
