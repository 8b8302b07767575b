#pragma once

#include "sqv/matrix.hpp"

#include <optional>
#include <vector>

namespace sqv {

// Linear equations whose unknowns are matrices X_b, with equations of the form
// sum_t L_t X_{b_t} R_t = C.
class LinearSystem {
 public:
  struct Term {
    QMatrix left;
    std::size_t block;
    QMatrix right;
  };

  std::size_t add_block(std::size_t rows, std::size_t cols);
  void add_equation(const std::vector<Term>& terms, const QMatrix& rhs);
  // Same as add_equation with a zero right-hand side of the given shape.
  void add_homogeneous(const std::vector<Term>& terms, std::size_t rows, std::size_t cols);

  std::size_t num_unknowns() const { return offsets_.empty() ? 0 : offsets_.back() + size_of(shapes_.size() - 1); }
  std::size_t num_blocks() const { return shapes_.size(); }
  std::size_t num_equations() const { return rhs_.size(); }

  struct Solution {
    std::vector<Q> particular;
    QMatrix kernel;  // columns span the homogeneous solutions
  };
  std::optional<Solution> solve() const;

  // Unpacks a flat unknown vector into the block matrices.
  std::vector<QMatrix> unpack(const std::vector<Q>& flat) const;
  std::vector<Q> combine(const Solution& s, const std::vector<Q>& coeffs) const;

 private:
  std::size_t size_of(std::size_t b) const { return shapes_[b].first * shapes_[b].second; }
  std::vector<std::pair<std::size_t, std::size_t>> shapes_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<std::pair<std::size_t, Q>>> rows_;
  std::vector<Q> rhs_;
};

}  // namespace sqv
