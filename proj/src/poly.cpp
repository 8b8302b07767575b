#include "sqv/poly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sqv {

namespace {

struct Registry {
  std::mutex mu;
  std::vector<std::string> names;
};

Registry& registry() {
  static Registry r;
  return r;
}

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial m(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) m[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) m[k] += b[k];
  return m;
}

}  // namespace

std::size_t symbol(const std::string& name) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = std::find(r.names.begin(), r.names.end(), name);
  if (it != r.names.end()) return static_cast<std::size_t>(it - r.names.begin());
  r.names.push_back(name);
  return r.names.size() - 1;
}

const std::string& symbol_name(std::size_t index) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.at(index);
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(long c) : Poly(Q(c)) {}

Poly::Poly(const Q& c) {
  if (c != 0) terms_[{}] = c;
}

Poly Poly::var(std::size_t index) {
  Poly p;
  Monomial m(index + 1, 0);
  m[index] = 1;
  p.terms_[m] = 1;
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

std::size_t Poly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<std::size_t>(d, std::accumulate(m.begin(), m.end(), 0u));
  return d;
}

void Poly::add_term(const Monomial& m, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(mul(ma, mb), ca * cb);
  return p;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator-(Poly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Q Poly::eval(const std::vector<Q>& values) const {
  Q s = 0;
  for (const auto& [m, c] : terms_) {
    Q t = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (k >= values.size()) throw std::out_of_range("Poly::eval: no value for " + symbol_name(k));
      for (unsigned e = 0; e < m[k]; ++e) t *= values[k];
    }
    s += t;
  }
  return s;
}

Poly Poly::substitute(std::size_t index, const Poly& by) const {
  Poly out;
  std::vector<Poly> powers{Poly(1)};
  for (const auto& [m, c] : terms_) {
    unsigned e = index < m.size() ? m[index] : 0;
    while (powers.size() <= e) powers.push_back(powers.back() * by);
    Monomial rest = m;
    if (index < rest.size()) rest[index] = 0;
    trim(rest);
    Poly t;
    t.terms_[rest] = c;
    out += t * powers[e];
  }
  return out;
}

Q Poly::content() const {
  if (terms_.empty()) return 1;
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Q q(g, l);
  q.canonicalize();
  if (terms_.rbegin()->second < 0) q = -q;
  return q;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Q a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = a == 1 && !m.empty();
    if (!unit) os << to_string(a);
    bool need_star = !unit;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      os << (need_star ? "*" : "") << symbol_name(k);
      if (m[k] > 1) os << "^" << m[k];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  Q c = den_.content();
  if (c != 1) {
    Poly inv(1 / c);
    num_ *= inv;
    den_ *= inv;
  }
  if (num_.is_zero()) den_ = Poly(1);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

Q RatFunc::eval(const std::vector<Q>& values) const {
  Q d = den_.eval(values);
  if (d == 0) throw std::domain_error("RatFunc::eval: pole");
  return num_.eval(values) / d;
}

RatFunc RatFunc::substitute(std::size_t index, const Poly& by) const {
  return RatFunc(num_.substitute(index, by), den_.substitute(index, by));
}

std::string RatFunc::str() const {
  if (den_ == Poly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// RFMatrix

namespace {

std::size_t product(const std::vector<std::size_t>& legs) {
  return std::accumulate(legs.begin(), legs.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

RFMatrix::RFMatrix(std::vector<std::size_t> legs, std::vector<Poly> num, Poly den)
    : legs_(std::move(legs)), dim_(product(legs_)), num_(std::move(num)), den_(std::move(den)) {
  if (num_.size() != dim_ * dim_) throw std::invalid_argument("RFMatrix: size does not match legs");
  if (den_.is_zero()) throw std::domain_error("RFMatrix: zero denominator");
}

RFMatrix RFMatrix::identity(std::vector<std::size_t> legs) {
  std::size_t d = product(legs);
  std::vector<Poly> num(d * d);
  for (std::size_t k = 0; k < d; ++k) num[k * d + k] = Poly(1);
  return RFMatrix(std::move(legs), std::move(num), Poly(1));
}

RFMatrix RFMatrix::constant(std::vector<std::size_t> legs, const QMatrix& m) {
  std::size_t d = product(legs);
  if (m.rows() != d || m.cols() != d) throw std::invalid_argument("RFMatrix::constant: size mismatch");
  std::vector<Poly> num(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) num[r * d + c] = Poly(m(r, c));
  return RFMatrix(std::move(legs), std::move(num), Poly(1));
}

RFMatrix operator*(const RFMatrix& a, const RFMatrix& b) {
  if (a.legs_ != b.legs_) throw std::invalid_argument("RFMatrix: leg structures differ");
  const std::size_t d = a.dim_;
  std::vector<Poly> num(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      const Poly& x = a.num_[r * d + k];
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c) {
        const Poly& y = b.num_[k * d + c];
        if (!y.is_zero()) num[r * d + c] += x * y;
      }
    }
  return RFMatrix(a.legs_, std::move(num), a.den_ * b.den_);
}

RFMatrix operator+(const RFMatrix& a, const RFMatrix& b) {
  if (a.legs_ != b.legs_) throw std::invalid_argument("RFMatrix: leg structures differ");
  std::vector<Poly> num(a.num_.size());
  if (a.den_ == b.den_) {
    for (std::size_t k = 0; k < num.size(); ++k) num[k] = a.num_[k] + b.num_[k];
    return RFMatrix(a.legs_, std::move(num), a.den_);
  }
  for (std::size_t k = 0; k < num.size(); ++k) num[k] = a.num_[k] * b.den_ + b.num_[k] * a.den_;
  return RFMatrix(a.legs_, std::move(num), a.den_ * b.den_);
}

bool operator==(const RFMatrix& a, const RFMatrix& b) {
  if (a.legs_ != b.legs_) return false;
  for (std::size_t k = 0; k < a.num_.size(); ++k)
    if (a.num_[k] * b.den_ != b.num_[k] * a.den_) return false;
  return true;
}

QMatrix RFMatrix::eval(const std::vector<Q>& values) const {
  Q d = den_.eval(values);
  if (d == 0) throw std::domain_error("RFMatrix::eval: pole");
  QMatrix m(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(r, c) = num(r, c).eval(values) / d;
  return m;
}

RFMatrix RFMatrix::substitute(std::size_t index, const Poly& by) const {
  std::vector<Poly> num(num_.size());
  for (std::size_t k = 0; k < num.size(); ++k) num[k] = num_[k].substitute(index, by);
  return RFMatrix(legs_, std::move(num), den_.substitute(index, by));
}

bool RFMatrix::is_identity() const { return *this == identity(legs_); }

std::string RFMatrix::str() const {
  std::ostringstream os;
  os << "1/(" << den_.str() << ") * [";
  for (std::size_t r = 0; r < dim_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < dim_; ++c) os << (c ? ", " : "") << num(r, c).str();
  }
  os << "]";
  return os.str();
}

RFMatrix embed(const RFMatrix& m, const std::vector<std::size_t>& at, const std::vector<std::size_t>& all_legs) {
  if (at.size() != m.legs().size()) throw std::invalid_argument("embed: leg count mismatch");
  for (std::size_t k = 0; k < at.size(); ++k)
    if (at[k] >= all_legs.size() || all_legs[at[k]] != m.legs()[k])
      throw std::invalid_argument("embed: leg dimension mismatch");
  const std::size_t D = product(all_legs);
  const std::size_t L = all_legs.size();
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(L);
    for (std::size_t k = L; k-- > 0;) {
      d[k] = idx % all_legs[k];
      idx /= all_legs[k];
    }
    return d;
  };
  auto sub_index = [&](const std::vector<std::size_t>& d) {
    std::size_t s = 0;
    for (std::size_t k = 0; k < at.size(); ++k) s = s * m.legs()[k] + d[at[k]];
    return s;
  };
  std::vector<bool> on(L, false);
  for (std::size_t k : at) on[k] = true;
  std::vector<Poly> num(D * D);
  for (std::size_t r = 0; r < D; ++r) {
    auto dr = digits(r);
    for (std::size_t c = 0; c < D; ++c) {
      auto dc = digits(c);
      bool spectators_match = true;
      for (std::size_t k = 0; k < L; ++k)
        if (!on[k] && dr[k] != dc[k]) spectators_match = false;
      if (spectators_match) num[r * D + c] = m.num(sub_index(dr), sub_index(dc));
    }
  }
  return RFMatrix(all_legs, std::move(num), m.den());
}

bool agree_at_random_points(const RFMatrix& a, const RFMatrix& b, Rng& rng, int points) {
  std::size_t nsym = 0;
  {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    nsym = r.names.size();
  }
  for (int t = 0; t < points; ++t) {
    std::vector<Q> vals(nsym);
    for (int attempt = 0; attempt < 32; ++attempt) {
      for (auto& x : vals) x = random_rational(rng, 97, 13);
      if (a.den().eval(vals) != 0 && b.den().eval(vals) != 0) break;
    }
    if (a.den().eval(vals) == 0 || b.den().eval(vals) == 0) continue;
    if (a.eval(vals) != b.eval(vals)) return false;
  }
  return true;
}

}  // namespace sqv
