#include "sqv/linsys.hpp"

#include <map>
#include <stdexcept>

namespace sqv {

std::size_t LinearSystem::add_block(std::size_t rows, std::size_t cols) {
  std::size_t off = num_unknowns();
  shapes_.push_back({rows, cols});
  offsets_.push_back(off);
  return shapes_.size() - 1;
}

void LinearSystem::add_equation(const std::vector<Term>& terms, const QMatrix& rhs) {
  const std::size_t nr = rhs.rows(), nc = rhs.cols();
  std::vector<std::map<std::size_t, Q>> eqs(nr * nc);
  for (const auto& t : terms) {
    auto [br, bc] = shapes_.at(t.block);
    if (t.left.rows() != nr || t.left.cols() != br || t.right.rows() != bc || t.right.cols() != nc)
      throw std::invalid_argument("linear system: term shape mismatch");
    const std::size_t off = offsets_[t.block];
    // (L X R)(r, c) = sum_{a,b} L(r, a) X(a, b) R(b, c)
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t a = 0; a < br; ++a) {
        const Q& l = t.left(r, a);
        if (sgn(l) == 0) continue;
        for (std::size_t b = 0; b < bc; ++b)
          for (std::size_t c = 0; c < nc; ++c) {
            const Q& rr = t.right(b, c);
            if (sgn(rr) == 0) continue;
            eqs[r * nc + c][off + a * bc + b] += l * rr;
          }
      }
  }
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    std::vector<std::pair<std::size_t, Q>> row;
    for (auto& [col, val] : eqs[k])
      if (sgn(val) != 0) row.push_back({col, val});
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs(k / nc, k % nc));
  }
}

void LinearSystem::add_homogeneous(const std::vector<Term>& terms, std::size_t rows, std::size_t cols) {
  add_equation(terms, QMatrix(rows, cols));
}

std::optional<LinearSystem::Solution> LinearSystem::solve() const {
  const std::size_t n = num_unknowns();
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (!rows_[k].empty() || sgn(rhs_[k]) != 0) live.push_back(k);
  QMatrix a(live.size(), n), b(live.size(), 1);
  for (std::size_t r = 0; r < live.size(); ++r) {
    for (const auto& [col, val] : rows_[live[r]]) a(r, col) = val;
    b(r, 0) = rhs_[live[r]];
  }
  auto x = sqv::solve(a, b);
  if (!x) return std::nullopt;
  Solution s;
  s.particular.resize(n);
  for (std::size_t k = 0; k < n; ++k) s.particular[k] = (*x)(k, 0);
  s.kernel = nullspace(a);
  return s;
}

std::vector<QMatrix> LinearSystem::unpack(const std::vector<Q>& flat) const {
  if (flat.size() != num_unknowns()) throw std::invalid_argument("linear system: wrong unknown count");
  std::vector<QMatrix> out;
  for (std::size_t b = 0; b < shapes_.size(); ++b) {
    auto [r, c] = shapes_[b];
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = flat[offsets_[b] + i * c + j];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Q> LinearSystem::combine(const Solution& s, const std::vector<Q>& coeffs) const {
  if (coeffs.size() != s.kernel.cols()) throw std::invalid_argument("linear system: wrong coefficient count");
  std::vector<Q> out = s.particular;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += coeffs[k] * s.kernel(r, k);
  }
  return out;
}

}  // namespace sqv
