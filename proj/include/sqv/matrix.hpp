#pragma once

#include "sqv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace sqv {

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Q>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  static QMatrix scalar(std::size_t n, const Q& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Q& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Q& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Q>& data() const { return data_; }

  QMatrix transpose() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& b);
  QMatrix row_slice(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, cols_); }
  QMatrix col_slice(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }

  bool is_zero() const;
  bool is_identity() const;
  Q trace() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Q& c);

  friend bool operator==(const QMatrix& a, const QMatrix& b);
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Q> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Q& c, QMatrix a);
QMatrix commutator(const QMatrix& a, const QMatrix& b);
QMatrix power(const QMatrix& a, std::size_t k);

QMatrix hstack(const std::vector<QMatrix>& blocks, std::size_t rows);
QMatrix vstack(const std::vector<QMatrix>& blocks, std::size_t cols);
QMatrix block_diag(const std::vector<QMatrix>& blocks);
QMatrix kron(const QMatrix& a, const QMatrix& b);

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range = 3, int den = 1);

// Elimination results.
struct Echelon {
  QMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(const QMatrix& a);
std::size_t rank(const QMatrix& a);
// Columns form a basis of {x : a x = 0}.
QMatrix nullspace(const QMatrix& a);
// Rows form a basis of {y : y a = 0}.
QMatrix left_nullspace(const QMatrix& a);
std::optional<QMatrix> inverse(const QMatrix& a);
Q determinant(const QMatrix& a);
// Some X with a X = b, or nullopt when inconsistent.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);
// Unique X with a X = b; nullopt when inconsistent or not unique.
std::optional<QMatrix> solve_unique(const QMatrix& a, const QMatrix& b);

bool is_injective(const QMatrix& a);
bool is_surjective(const QMatrix& a);

// Subspaces are column spans. canonical_basis returns the reduced column
// echelon basis, so two subspaces are equal iff their canonical bases are.
QMatrix column_space(const QMatrix& a);
QMatrix canonical_basis(const QMatrix& a);
bool same_subspace(const QMatrix& a, const QMatrix& b);
bool subspace_contains(const QMatrix& big, const QMatrix& small);
QMatrix subspace_sum(const QMatrix& a, const QMatrix& b);
QMatrix subspace_intersection(const QMatrix& a, const QMatrix& b);
// Preimage {x : a x in S} where S is a column span in the codomain.
QMatrix preimage(const QMatrix& a, const QMatrix& s);

}  // namespace sqv
