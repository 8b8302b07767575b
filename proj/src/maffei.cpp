#include "sqv/maffei.hpp"

#include "sqv/involutions.hpp"
#include "sqv/linsys.hpp"

#include <algorithm>
#include <sstream>

namespace sqv {

namespace {

void check_type_a_data(const IntVec& v, const IntVec& w) {
  if (v.size() != w.size() || v.empty()) throw std::invalid_argument("v and w must have the same positive length");
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] < 0 || w[k] < 0) throw std::invalid_argument("dimensions must be nonnegative");
}

std::string comp_str(const Comp& c) {
  if (c.is_v) return "V";
  return "W_" + std::to_string(c.j) + "^(" + std::to_string(c.h) + ")";
}

}  // namespace

MaffeiDims tilde_dims(const IntVec& v, const IntVec& w) {
  check_type_a_data(v, w);
  const std::size_t n = v.size();
  MaffeiDims d;
  d.n = n;
  d.v = v;
  d.w = w;
  d.tilde_v.assign(n, 0);
  d.tilde_w.assign(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    long s = v[i - 1];
    for (std::size_t j = i + 1; j <= n; ++j) s += static_cast<long>(j - i) * w[j - 1];
    d.tilde_v[i - 1] = s;
  }
  for (std::size_t j = 1; j <= n; ++j) d.tilde_w[0] += static_cast<long>(j) * w[j - 1];
  return d;
}

MaffeiDims hat_dims(const IntVec& v, const IntVec& w) {
  check_type_a_data(v, w);
  IntVec rv(v.rbegin(), v.rend()), rw(w.rbegin(), w.rend());
  MaffeiDims d = tilde_dims(rv, rw);
  d.v = v;
  d.w = w;
  return d;
}

// ---------------------------------------------------------------------------
// Layout

MaffeiLayout::MaffeiLayout(IntVec v, IntVec w) : v_(std::move(v)), w_(std::move(w)) { check_type_a_data(v_, w_); }

std::size_t MaffeiLayout::v_dim(std::size_t level) const {
  if (level > n()) throw std::out_of_range("level out of range");
  return level == 0 ? 0 : static_cast<std::size_t>(v_[level - 1]);
}

std::vector<Comp> MaffeiLayout::copies(std::size_t level) const {
  if (level > n()) throw std::out_of_range("level out of range");
  std::vector<Comp> out;
  for (std::size_t j = level + 1; j <= n(); ++j) {
    if (w_[j - 1] == 0) continue;
    for (std::size_t h = 1; h <= j - level; ++h) out.push_back(Comp::copy(j, h));
  }
  return out;
}

std::vector<Comp> MaffeiLayout::comps(std::size_t level) const {
  std::vector<Comp> out{Comp::vpart()};
  for (const auto& c : copies(level)) out.push_back(c);
  return out;
}

std::size_t MaffeiLayout::dim(std::size_t level) const {
  std::size_t d = v_dim(level);
  for (const auto& c : copies(level)) d += w_dim(c.j);
  return d;
}

bool MaffeiLayout::has(std::size_t level, const Comp& c) const {
  if (level > n()) return false;
  if (c.is_v) return true;
  return c.j > level && c.j <= n() && c.h >= 1 && c.h <= c.j - level && w_[c.j - 1] > 0;
}

std::size_t MaffeiLayout::offset(std::size_t level, const Comp& c) const {
  if (!has(level, c)) throw std::out_of_range("component " + comp_str(c) + " not in level " + std::to_string(level));
  if (c.is_v) return 0;
  std::size_t off = v_dim(level);
  for (const auto& d : copies(level)) {
    if (d == c) return off;
    off += w_dim(d.j);
  }
  throw std::logic_error("unreachable");
}

QMatrix MaffeiLayout::inject(std::size_t level, const Comp& c) const {
  const std::size_t d = comp_dim(c, level);
  QMatrix m(dim(level), d);
  m.set_block(offset(level, c), 0, QMatrix::identity(d));
  return m;
}

QMatrix MaffeiLayout::project(std::size_t level, const Comp& c) const { return inject(level, c).transpose(); }

QMatrix MaffeiLayout::inject_w(std::size_t level) const {
  QMatrix m(dim(level), w_prime_dim(level));
  m.set_block(v_dim(level), 0, QMatrix::identity(w_prime_dim(level)));
  return m;
}

QMatrix MaffeiLayout::project_w(std::size_t level) const { return inject_w(level).transpose(); }

// ---------------------------------------------------------------------------

long grad(std::size_t i, std::size_t j, std::size_t h, std::size_t jp, std::size_t hp, GradKind kind) {
  // Source and target levels of the block.
  const std::size_t src = kind == GradKind::T ? i : i + 1;
  const std::size_t dst = kind == GradKind::T ? i + 1 : i;
  auto valid = [](std::size_t level, std::size_t jj, std::size_t hh) { return jj > level && hh >= 1 && hh <= jj - level; };
  if (!valid(src, jp, hp) || !valid(dst, j, h)) throw std::out_of_range("grad: indices out of range");
  const long dh = static_cast<long>(h) - static_cast<long>(hp);
  const long dj = static_cast<long>(jp) - static_cast<long>(j);
  if (kind == GradKind::T) return std::min(dh + 1, dh + 1 + dj);
  return std::min(dh, dh + dj);
}

Sl2Pair maffei_sl2(const IntVec& w, std::size_t level) {
  MaffeiLayout lay(IntVec(w.size(), 0), w);
  const std::size_t d = lay.w_prime_dim(level);
  Sl2Pair s{QMatrix(d, d), QMatrix(d, d)};
  for (const auto& c : lay.copies(level)) {
    const std::size_t wj = lay.w_dim(c.j);
    const std::size_t top = c.j - level;
    const std::size_t src = lay.offset(level, c);
    if (c.h >= 2) s.e.set_block(lay.offset(level, Comp::copy(c.j, c.h - 1)), src, QMatrix::identity(wj));
    if (c.h + 1 <= top) {
      const long coeff = static_cast<long>(c.h) * static_cast<long>(top - c.h);
      s.f.set_block(lay.offset(level, Comp::copy(c.j, c.h + 1)), src, QMatrix::scalar(wj, Q(coeff)));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// BigPoint

const QMatrix& BigPoint::xt(std::size_t i) const {
  return i == 0 ? point.p[0] : point.x[arrow_x(point.graph, i - 1)];
}
const QMatrix& BigPoint::yt(std::size_t i) const {
  return i == 0 ? point.q[0] : point.x[arrow_y(point.graph, i - 1)];
}
QMatrix& BigPoint::xt(std::size_t i) { return i == 0 ? point.p[0] : point.x[arrow_x(point.graph, i - 1)]; }
QMatrix& BigPoint::yt(std::size_t i) { return i == 0 ? point.q[0] : point.x[arrow_y(point.graph, i - 1)]; }

QMatrix BigPoint::x_block(std::size_t i, const Comp& src, const Comp& dst) const {
  return xt(i).block(layout.offset(i + 1, dst), layout.offset(i, src), layout.comp_dim(dst, i + 1),
                     layout.comp_dim(src, i));
}

QMatrix BigPoint::y_block(std::size_t i, const Comp& src, const Comp& dst) const {
  return yt(i).block(layout.offset(i, dst), layout.offset(i + 1, src), layout.comp_dim(dst, i),
                     layout.comp_dim(src, i + 1));
}

void BigPoint::set_x_block(std::size_t i, const Comp& src, const Comp& dst, const QMatrix& m) {
  xt(i).set_block(layout.offset(i + 1, dst), layout.offset(i, src), m);
}

void BigPoint::set_y_block(std::size_t i, const Comp& src, const Comp& dst, const QMatrix& m) {
  yt(i).set_block(layout.offset(i, dst), layout.offset(i + 1, src), m);
}

BigPoint zero_big_point(const IntVec& v, const IntVec& w) {
  MaffeiDims d = tilde_dims(v, w);
  return BigPoint{MaffeiLayout(v, w), RepPoint::zero(Graph::type_a(v.size()), d.tilde_v, d.tilde_w)};
}

// ---------------------------------------------------------------------------
// Transversality

bool TransversalityReport::cites(const std::string& tag) const {
  return std::any_of(violations.begin(), violations.end(), [&](const std::string& s) { return s.rfind(tag, 0) == 0; });
}

std::string TransversalityReport::str() const {
  if (ok()) return "transversal";
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) os << (k ? "; " : "") << violations[k];
  return os.str();
}

TransversalityReport is_transversal(const BigPoint& bp) {
  const MaffeiLayout& lay = bp.layout;
  const std::size_t n = lay.n();
  TransversalityReport rep;
  auto fail = [&](const char* tag, std::size_t i, const Comp& s, const Comp& d) {
    rep.violations.push_back(std::string(tag) + " level " + std::to_string(i) + " " + comp_str(s) + " -> " +
                             comp_str(d));
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto src_x = lay.copies(i), dst_x = lay.copies(i + 1);
    for (const auto& d : dst_x)
      if (!bp.x_block(i, Comp::vpart(), d).is_zero()) fail("(t1)", i, Comp::vpart(), d);
    for (const auto& s : src_x)
      if (s.h != 1 && !bp.x_block(i, s, Comp::vpart()).is_zero()) fail("(t2)", i, s, Comp::vpart());
    for (const auto& s : src_x)
      for (const auto& d : dst_x) {
        const long g = grad(i, d.j, d.h, s.j, s.h, GradKind::T);
        QMatrix b = bp.x_block(i, s, d);
        if (g < 0 && !b.is_zero()) fail("(t3)", i, s, d);
        if (g == 0) {
          const bool ident = s.j == d.j && s.h == d.h + 1;
          if (ident && !b.is_identity()) fail("(t5)", i, s, d);
          if (!ident && !b.is_zero()) fail("(t4)", i, s, d);
        }
      }
    // y~_i : V~_{i+1} -> V~_i
    for (const auto& s : dst_x)
      if (!bp.y_block(i, s, Comp::vpart()).is_zero()) fail("(s1)", i, s, Comp::vpart());
    for (const auto& d : src_x)
      if (d.h != d.j - i && !bp.y_block(i, Comp::vpart(), d).is_zero()) fail("(s2)", i, Comp::vpart(), d);
    for (const auto& s : dst_x)
      for (const auto& d : src_x) {
        const long g = grad(i, d.j, d.h, s.j, s.h, GradKind::S);
        QMatrix b = bp.y_block(i, s, d);
        if (g < 0 && !b.is_zero()) fail("(s3)", i, s, d);
        if (g == 0) {
          const bool ident = s.j == d.j && s.h == d.h;
          if (ident && !b.is_identity()) fail("(s5)", i, s, d);
          if (!ident && !b.is_zero()) fail("(s4)", i, s, d);
        }
      }
    if (lay.w_prime_dim(i) > 0) {
      Sl2Pair sl = maffei_sl2(lay.w(), i);
      QMatrix m = lay.project_w(i) * bp.yt(i) * bp.xt(i) * lay.inject_w(i);
      if (!commutator(m - sl.e, sl.f).is_zero())
        rep.violations.push_back("(r1) level " + std::to_string(i));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Phi

namespace {

struct Unknown {
  bool is_t;
  std::size_t level;
  Comp src, dst;
};

QMatrix original_x(const RepPoint& pt, std::size_t k) { return pt.x[arrow_x(pt.graph, k - 1)]; }
QMatrix original_y(const RepPoint& pt, std::size_t k) { return pt.x[arrow_y(pt.graph, k - 1)]; }

void set_seeds(BigPoint& bp, const RepPoint& pt) {
  const MaffeiLayout& lay = bp.layout;
  const std::size_t n = lay.n();
  for (std::size_t i = 1; i < n; ++i) {
    bp.set_x_block(i, Comp::vpart(), Comp::vpart(), original_x(pt, i));
    bp.set_y_block(i, Comp::vpart(), Comp::vpart(), original_y(pt, i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (lay.w_dim(j) == 0) continue;
      // T^{j,1}_{i,V} = y_{i+1} ... y_{j-1} p_j
      QMatrix t = pt.p[j - 1];
      for (std::size_t k = j - 1; k >= i + 1; --k) t = original_y(pt, k) * t;
      bp.set_x_block(i, Comp::copy(j, 1), Comp::vpart(), t);
      // S^V_{i,j,j-i} = q_j x_{j-1} ... x_{i+1}
      QMatrix s = QMatrix::identity(lay.v_dim(i + 1));
      for (std::size_t k = i + 1; k <= j - 1; ++k) s = original_x(pt, k) * s;
      bp.set_y_block(i, Comp::vpart(), Comp::copy(j, j - i), pt.q[j - 1] * s);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& d : lay.copies(i + 1)) {
      const QMatrix id = QMatrix::identity(lay.w_dim(d.j));
      bp.set_x_block(i, Comp::copy(d.j, d.h + 1), d, id);
      bp.set_y_block(i, d, d, id);
    }
}

std::vector<Unknown> positive_grad_blocks(const MaffeiLayout& lay) {
  std::vector<Unknown> out;
  for (std::size_t i = 0; i < lay.n(); ++i) {
    for (const auto& s : lay.copies(i))
      for (const auto& d : lay.copies(i + 1))
        if (grad(i, d.j, d.h, s.j, s.h, GradKind::T) > 0) out.push_back({true, i, s, d});
    for (const auto& s : lay.copies(i + 1))
      for (const auto& d : lay.copies(i))
        if (grad(i, d.j, d.h, s.j, s.h, GradKind::S) > 0) out.push_back({false, i, s, d});
  }
  return out;
}

// Residuals of mu~ = 0 (levels 1..n) and (r1) (levels 0..n-1).
struct Residual {
  std::vector<QMatrix> mu, r1;
  bool zero() const {
    for (const auto& m : mu)
      if (!m.is_zero()) return false;
    for (const auto& m : r1)
      if (!m.is_zero()) return false;
    return true;
  }
};

Residual residual(const BigPoint& bp, const std::vector<Sl2Pair>& sl) {
  const MaffeiLayout& lay = bp.layout;
  Residual r;
  r.mu = moment_map(bp.point);
  for (std::size_t i = 0; i < lay.n(); ++i) {
    QMatrix m = lay.project_w(i) * bp.yt(i) * bp.xt(i) * lay.inject_w(i);
    r.r1.push_back(commutator(m - sl[i].e, sl[i].f));
  }
  return r;
}

// One Newton step on the bilinear system; throws when the step is not unique.
void newton_step(BigPoint& bp, const std::vector<Unknown>& unknowns, const std::vector<Sl2Pair>& sl,
                 const Residual& res) {
  const MaffeiLayout& lay = bp.layout;
  const std::size_t n = lay.n();
  LinearSystem sys;
  std::vector<std::size_t> block;
  for (const auto& u : unknowns) block.push_back(sys.add_block(lay.w_dim(u.dst.j), lay.w_dim(u.src.j)));

  // mu~ at level k = y~_k x~_k - x~_{k-1} y~_{k-1}
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<LinearSystem::Term> terms;
    for (std::size_t b = 0; b < unknowns.size(); ++b) {
      const Unknown& u = unknowns[b];
      if (u.level == k) {
        if (u.is_t)
          terms.push_back({bp.yt(k) * lay.inject(k + 1, u.dst), block[b], lay.project(k, u.src)});
        else
          terms.push_back({lay.inject(k, u.dst), block[b], lay.project(k + 1, u.src) * bp.xt(k)});
      } else if (u.level + 1 == k) {
        if (u.is_t)
          terms.push_back({-lay.inject(k, u.dst), block[b], lay.project(k - 1, u.src) * bp.yt(k - 1)});
        else
          terms.push_back({-(bp.xt(k - 1) * lay.inject(k - 1, u.dst)), block[b], lay.project(k, u.src)});
      }
    }
    sys.add_equation(terms, -res.mu[k - 1]);
  }
  // [pi y~_i x~_i iota - e_i, f_i] = 0
  for (std::size_t i = 0; i < n; ++i) {
    const QMatrix& f = sl[i].f;
    std::vector<LinearSystem::Term> terms;
    for (std::size_t b = 0; b < unknowns.size(); ++b) {
      const Unknown& u = unknowns[b];
      if (u.level != i) continue;
      QMatrix a, c;
      if (u.is_t) {
        a = lay.project_w(i) * bp.yt(i) * lay.inject(i + 1, u.dst);
        c = lay.project(i, u.src) * lay.inject_w(i);
      } else {
        a = lay.project_w(i) * lay.inject(i, u.dst);
        c = lay.project(i + 1, u.src) * bp.xt(i) * lay.inject_w(i);
      }
      terms.push_back({a, block[b], c * f});
      terms.push_back({-(f * a), block[b], c});
    }
    sys.add_equation(terms, -res.r1[i]);
  }
  auto sol = sys.solve();
  if (!sol) throw MaffeiError("phi_embed: linear system is inconsistent (is the input in Lambda_0?)");
  if (sol->kernel.cols() != 0) throw MaffeiError("phi_embed: transversal element is not unique");
  auto delta = sys.unpack(sol->particular);
  for (std::size_t b = 0; b < unknowns.size(); ++b) {
    const Unknown& u = unknowns[b];
    if (u.is_t)
      bp.set_x_block(u.level, u.src, u.dst, bp.x_block(u.level, u.src, u.dst) + delta[block[b]]);
    else
      bp.set_y_block(u.level, u.src, u.dst, bp.y_block(u.level, u.src, u.dst) + delta[block[b]]);
  }
}

}  // namespace

BigPoint phi_embed(const RepPoint& pt) {
  const std::size_t n = pt.graph.num_vertices();
  if (n == 0 || !(pt.graph == Graph::type_a(n))) throw std::invalid_argument("phi_embed needs the default A_n graph");
  if (!in_lambda(pt, QVec(n, 0))) throw MaffeiError("phi_embed: input is not in Lambda_0");
  BigPoint bp = zero_big_point(pt.v, pt.w);
  set_seeds(bp, pt);
  std::vector<Sl2Pair> sl;
  for (std::size_t i = 0; i < n; ++i) sl.push_back(maffei_sl2(pt.w, i));
  const auto unknowns = positive_grad_blocks(bp.layout);
  Residual res = residual(bp, sl);
  // Products of positive-grad blocks raise the grad, so the iteration terminates.
  const std::size_t max_steps = 2 * static_cast<std::size_t>(bp.layout.dim(0)) + 4;
  for (std::size_t step = 0; !res.zero(); ++step) {
    if (step == max_steps || unknowns.empty()) throw MaffeiError("phi_embed: no transversal element found");
    newton_step(bp, unknowns, sl, res);
    res = residual(bp, sl);
  }
  auto rep = is_transversal(bp);
  if (!rep.ok()) throw MaffeiError("phi_embed: certificate failed: " + rep.str());
  if (!in_lambda(bp.point, QVec(n, 0))) throw MaffeiError("phi_embed: certificate failed: not in Lambda_0");
  return bp;
}

// ---------------------------------------------------------------------------
// Labels and slices

IntVec slice_composition(const MaffeiDims& d) {
  IntVec mu;
  long prev = d.tilde_v0();
  for (long x : d.tilde_v) {
    mu.push_back(prev - x);
    prev = x;
  }
  mu.push_back(prev);
  return mu;
}

SliceLabel slice_labels(const IntVec& v, const IntVec& w) {
  MaffeiDims d = tilde_dims(v, w);
  IntVec mu = slice_composition(d);
  for (long x : mu)
    if (x < 0) throw std::invalid_argument("invalid flag data: negative entry in mu");
  SliceLabel s;
  s.mu_prime = transpose(Partition(mu));
  s.lambda = Partition::from_exponents(w);
  s.ambient_dim = d.tilde_v0();
  return s;
}

bool slice_membership(const QMatrix& x, const QMatrix& e0, const QMatrix& f0) {
  if (!x.square() || x.rows() != e0.rows() || e0.rows() != f0.rows() || !e0.square() || !f0.square())
    throw std::invalid_argument("slice_membership: shape mismatch");
  return is_nilpotent(x) && commutator(x - e0, f0).is_zero();
}

// ---------------------------------------------------------------------------
// Forms

FormedGrading tilde_form(const IntVec& v, const IntVec& w, const FormedGrading& fv, const FormedGrading& fw,
                         TildeFormVariant variant) {
  MaffeiLayout lay(v, w);
  const std::size_t n = lay.n();
  if (fv.size() != n || fw.size() != n) throw std::invalid_argument("one form per vertex is required");
  for (std::size_t k = 0; k < n; ++k)
    if (fv[k].dim() != lay.v_dim(k + 1) || fw[k].dim() != lay.w_dim(k + 1))
      throw std::invalid_argument("form dimension mismatch");
  FormedGrading out;
  for (std::size_t level = 0; level <= n; ++level) {
    QMatrix g(lay.dim(level), lay.dim(level));
    if (level > 0) g.set_block(0, 0, fv[level - 1].gram());
    for (const auto& c : lay.copies(level)) {
      Comp partner = Comp::copy(c.j, c.j - level + 1 - c.h);
      Q sign = 1;
      if (variant == TildeFormVariant::angle && (c.j - level + c.h) % 2 == 1) sign = -1;
      g.set_block(lay.offset(level, c), lay.offset(level, partner), sign * fw[c.j - 1].gram());
    }
    std::optional<int> delta;
    if (g.transpose() == g)
      delta = 1;
    else if (g.transpose() == -g)
      delta = -1;
    out.push_back(Form(g, delta));
  }
  return out;
}

BigPoint big_transpose(const BigPoint& bp, const FormedGrading& forms, bool signs) {
  const std::size_t n = bp.layout.n();
  if (forms.size() != n + 1) throw std::invalid_argument("big_transpose needs forms on levels 0..n");
  FormedGrading fv(forms.begin() + 1, forms.end());
  FormedGrading fw{forms[0]};
  for (std::size_t k = 1; k < n; ++k) fw.push_back(Form::standard(0, 1));
  BigPoint r = bp;
  r.point = signs ? tau(bp.point, fv, fw) : tau_hat(bp.point, fv, fw);
  return r;
}

std::vector<std::string> x_natural_defects(const BigPoint& bp, const FormedGrading& fv, const FormedGrading& fw) {
  const MaffeiLayout& lay = bp.layout;
  const std::size_t n = lay.n();
  FormedGrading forms = tilde_form(lay.v(), lay.w(), fv, fw, TildeFormVariant::angle);
  std::vector<std::string> bad;
  auto sub = [&](const QMatrix& m, std::size_t dst_level, const Comp& dst, std::size_t src_level, const Comp& src) {
    return m.block(lay.offset(dst_level, dst), lay.offset(src_level, src), lay.comp_dim(dst, dst_level),
                   lay.comp_dim(src, src_level));
  };
  auto note = [&](const std::string& what, std::size_t i) { bad.push_back(what + " at level " + std::to_string(i)); };
  for (std::size_t i = 0; i < n; ++i) {
    QMatrix xad = right_adjoint(bp.xt(i), forms[i], forms[i + 1]);
    QMatrix yad = right_adjoint(bp.yt(i), forms[i + 1], forms[i]);
    const Comp V = Comp::vpart();
    if (i >= 1) {
      if (sub(xad, i, V, i + 1, V) != right_adjoint(bp.x_block(i, V, V), fv[i - 1], fv[i])) note("X", i);
      if (sub(yad, i + 1, V, i, V) != right_adjoint(bp.y_block(i, V, V), fv[i], fv[i - 1])) note("Y", i);
    }
    const Comp first = Comp::copy(i + 1, 1);
    if (lay.has(i, first)) {
      if (sub(xad, i, first, i + 1, V) != right_adjoint(bp.x_block(i, first, V), fw[i], fv[i])) note("T_V", i);
      if (sub(yad, i + 1, V, i, first) != right_adjoint(bp.y_block(i, V, first), fv[i], fw[i])) note("S^V", i);
    }
    for (const auto& s : lay.copies(i))
      for (const auto& d : lay.copies(i + 1)) {
        const long e = static_cast<long>(d.j) - static_cast<long>(s.j) + static_cast<long>(d.h) -
                       static_cast<long>(s.h) - 1;
        const Q sign = (e % 2 == 0) ? 1 : -1;
        Comp pd = Comp::copy(d.j, d.j - i - d.h), ps = Comp::copy(s.j, s.j - i + 1 - s.h);
        if (sub(xad, i, ps, i + 1, pd) != sign * right_adjoint(bp.x_block(i, s, d), fw[s.j - 1], fw[d.j - 1]))
          note("T " + comp_str(s) + " -> " + comp_str(d), i);
      }
    for (const auto& s : lay.copies(i + 1))
      for (const auto& d : lay.copies(i)) {
        const long e = static_cast<long>(d.j) - static_cast<long>(s.j) + static_cast<long>(d.h) -
                       static_cast<long>(s.h) + 1;
        const Q sign = (e % 2 == 0) ? 1 : -1;
        Comp pd = Comp::copy(d.j, d.j - i + 1 - d.h), ps = Comp::copy(s.j, s.j - i - s.h);
        if (sub(yad, i + 1, ps, i, pd) != sign * right_adjoint(bp.y_block(i, s, d), fw[s.j - 1], fw[d.j - 1]))
          note("S " + comp_str(s) + " -> " + comp_str(d), i);
      }
  }
  return bad;
}

}  // namespace sqv
