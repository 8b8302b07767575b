#include "sqv/forms.hpp"

#include <stdexcept>

namespace sqv {

Form::Form(QMatrix gram, std::optional<int> delta) : gram_(std::move(gram)), delta_(delta) {
  if (!gram_.square()) throw std::invalid_argument("Gram matrix must be square");
  auto inv = inverse(gram_);
  if (!inv) throw std::invalid_argument("Gram matrix is singular");
  inv_ = *inv;
  if (delta_) {
    if (*delta_ != 1 && *delta_ != -1) throw std::invalid_argument("form sign must be +1 or -1");
    if (gram_.transpose() != Q(*delta_) * gram_) throw std::invalid_argument("Gram matrix does not match declared sign");
  }
}

Form Form::standard(std::size_t dim, int delta) {
  if (delta == 1) return Form(QMatrix::identity(dim), 1);
  if (delta != -1) throw std::invalid_argument("form sign must be +1 or -1");
  if (dim % 2 != 0) throw std::invalid_argument("skew form needs even dimension");
  std::size_t h = dim / 2;
  QMatrix g(dim, dim);
  for (std::size_t k = 0; k < h; ++k) {
    g(k, h + k) = 1;
    g(h + k, k) = -1;
  }
  return Form(g, -1);
}

Q Form::pair(const QMatrix& e, const QMatrix& f) const { return (e.transpose() * gram_ * f)(0, 0); }

FormedGrading standard_grading(const IntVec& dims, const std::vector<int>& delta) {
  if (dims.size() != delta.size()) throw std::invalid_argument("sign vector length mismatch");
  FormedGrading f;
  for (std::size_t i = 0; i < dims.size(); ++i) f.push_back(Form::standard(static_cast<std::size_t>(dims[i]), delta[i]));
  return f;
}

FormedGrading random_equivalent_grading(const FormedGrading& f, Rng& rng) {
  FormedGrading out;
  for (const auto& form : f) {
    for (;;) {
      QMatrix g = random_matrix(rng, form.dim(), form.dim());
      if (!inverse(g)) continue;
      out.emplace_back(g.transpose() * form.gram() * g, form.delta());
      break;
    }
  }
  return out;
}

QMatrix right_adjoint(const QMatrix& t, const Form& src, const Form& dst) {
  if (t.cols() != src.dim() || t.rows() != dst.dim()) throw std::invalid_argument("adjoint: shape mismatch");
  return src.gram_inverse() * t.transpose() * dst.gram();
}

QMatrix left_adjoint(const QMatrix& t, const Form& src, const Form& dst) {
  if (t.cols() != src.dim() || t.rows() != dst.dim()) throw std::invalid_argument("adjoint: shape mismatch");
  return src.gram_inverse().transpose() * t.transpose() * dst.gram().transpose();
}

bool is_nilpotent(const QMatrix& n) {
  if (!n.square()) return false;
  return power(n, n.rows()).is_zero();
}

Partition jordan_type(const QMatrix& n) {
  if (!is_nilpotent(n)) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
  // rank N^{k-1} - rank N^k is the number of blocks of size >= k.
  std::vector<long> conj;
  QMatrix pw = QMatrix::identity(n.rows());
  long prev = static_cast<long>(n.rows());
  while (prev > 0) {
    pw = pw * n;
    long r = static_cast<long>(rank(pw));
    conj.push_back(prev - r);
    prev = r;
  }
  return transpose(Partition(conj));
}

QMatrix orthogonal_complement(const QMatrix& s, const Form& form) {
  if (s.rows() != form.dim()) throw std::invalid_argument("subspace lives in a different space");
  if (s.cols() == 0) return QMatrix::identity(form.dim());
  return canonical_basis(nullspace(s.transpose() * form.gram()));
}

QMatrix sample_isometry(const Form& form, Rng& rng, int max_tries) {
  if (!form.delta()) throw std::invalid_argument("sample_isometry needs a symmetric or skew form");
  const std::size_t n = form.dim();
  QMatrix id = QMatrix::identity(n);
  for (int t = 0; t < max_tries; ++t) {
    QMatrix a = random_matrix(rng, n, n, 2, 2);
    QMatrix x = a - right_adjoint(a, form, form);
    auto inv = inverse(id - x);
    if (!inv) continue;
    return (id + x) * *inv;
  }
  throw std::runtime_error("sample_isometry: Cayley transform kept hitting singular matrices");
}

bool is_isometry(const QMatrix& g, const Form& form) { return (g * right_adjoint(g, form, form)).is_identity(); }

Membership classify_membership(const QMatrix& x, const Form& form) {
  QMatrix xs = right_adjoint(x, form, form);
  bool lie = x == -xs;
  bool sym = x == xs;
  if (lie && sym) return Membership::both;
  if (lie) return Membership::lie_isometry;
  if (sym) return Membership::symmetric_space;
  return Membership::neither;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::lie_isometry: return "lie_isometry";
    case Membership::symmetric_space: return "symmetric_space";
    case Membership::both: return "lie_isometry+symmetric_space";
    case Membership::neither: return "neither";
  }
  return "neither";
}

bool is_gamma_alternating(const Graph& g, const std::vector<int>& delta) {
  if (delta.size() != g.num_vertices()) throw std::invalid_argument("sign vector length mismatch");
  for (const auto& a : g.arrows())
    if (delta[a.src] * delta[a.dst] != -1) return false;
  return true;
}

}  // namespace sqv
