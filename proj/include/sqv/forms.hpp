#pragma once

#include "sqv/graph.hpp"
#include "sqv/matrix.hpp"
#include "sqv/partition.hpp"

#include <optional>
#include <vector>

namespace sqv {

// Nondegenerate bilinear form (e, e') = e^T G e', optionally declared
// symmetric (delta = +1) or skew (delta = -1).
class Form {
 public:
  Form() = default;
  explicit Form(QMatrix gram, std::optional<int> delta = std::nullopt);

  // Identity for delta = +1, [[0, I], [-I, 0]] for delta = -1.
  static Form standard(std::size_t dim, int delta);

  const QMatrix& gram() const { return gram_; }
  const QMatrix& gram_inverse() const { return inv_; }
  std::optional<int> delta() const { return delta_; }
  std::size_t dim() const { return gram_.rows(); }
  Q pair(const QMatrix& e, const QMatrix& f) const;

 private:
  QMatrix gram_;
  QMatrix inv_;
  std::optional<int> delta_;
};

// One form per vertex.
using FormedGrading = std::vector<Form>;

FormedGrading standard_grading(const IntVec& dims, const std::vector<int>& delta);
// Copy with each Gram matrix replaced by g_i^T G_i g_i for random invertible g_i.
FormedGrading random_equivalent_grading(const FormedGrading& f, Rng& rng);

// T : src -> dst.  (T e, e')_dst = (e, T* e')_src.
QMatrix right_adjoint(const QMatrix& t, const Form& src, const Form& dst);
// (e', T e)_dst = (T^! e', e)_src.
QMatrix left_adjoint(const QMatrix& t, const Form& src, const Form& dst);

// Nilpotent N: the partition of Jordan block sizes.
Partition jordan_type(const QMatrix& n);
bool is_nilpotent(const QMatrix& n);

// {y : (s, y) = 0 for all s in S}, canonical basis.
QMatrix orthogonal_complement(const QMatrix& s, const Form& form);

// Cayley transform of a random x with x = -x*.
QMatrix sample_isometry(const Form& form, Rng& rng, int max_tries = 64);
bool is_isometry(const QMatrix& g, const Form& form);

enum class Membership { lie_isometry, symmetric_space, both, neither };
Membership classify_membership(const QMatrix& x, const Form& form);
const char* to_string(Membership m);

bool is_gamma_alternating(const Graph& g, const std::vector<int>& delta);

}  // namespace sqv
