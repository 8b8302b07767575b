#pragma once

#include "sqv/matrix.hpp"
#include "sqv/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace sqv {

// Process-wide symbol registry: symbol("hbar") always returns the same index.
std::size_t symbol(const std::string& name);
const std::string& symbol_name(std::size_t index);

// Exponent vector indexed by symbol, trailing zeros trimmed.
using Monomial = std::vector<unsigned>;

// Sparse multivariate polynomial over Q.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT: constants convert implicitly
  Poly(const Q& c);  // NOLINT

  static Poly var(std::size_t index);
  static Poly var(const std::string& name) { return var(symbol(name)); }

  const std::map<Monomial, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // values[k] is the value of symbol k; missing symbols throw.
  Q eval(const std::vector<Q>& values) const;
  Poly substitute(std::size_t index, const Poly& by) const;
  // gcd of numerators over lcm of denominators, signed like the leading term.
  Q content() const;
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Q& c);
  std::map<Monomial, Q> terms_;
};

// num / den with den != 0; equality by cross-multiplication.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(Poly num, Poly den = Poly(1));  // NOLINT

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  Q eval(const std::vector<Q>& values) const;
  RatFunc substitute(std::size_t index, const Poly& by) const;
  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

// Square matrix num / den over the tensor product of legs, with one common denominator.
class RFMatrix {
 public:
  RFMatrix() = default;
  RFMatrix(std::vector<std::size_t> legs, std::vector<Poly> num, Poly den);

  static RFMatrix identity(std::vector<std::size_t> legs);
  // Constant matrix over Q.
  static RFMatrix constant(std::vector<std::size_t> legs, const QMatrix& m);

  const std::vector<std::size_t>& legs() const { return legs_; }
  std::size_t dim() const { return dim_; }
  const Poly& num(std::size_t r, std::size_t c) const { return num_[r * dim_ + c]; }
  const Poly& den() const { return den_; }
  RatFunc entry(std::size_t r, std::size_t c) const { return RatFunc(num(r, c), den_); }

  friend RFMatrix operator*(const RFMatrix& a, const RFMatrix& b);
  friend RFMatrix operator+(const RFMatrix& a, const RFMatrix& b);
  friend bool operator==(const RFMatrix& a, const RFMatrix& b);
  friend bool operator!=(const RFMatrix& a, const RFMatrix& b) { return !(a == b); }

  QMatrix eval(const std::vector<Q>& values) const;
  RFMatrix substitute(std::size_t index, const Poly& by) const;
  bool is_identity() const;
  std::string str() const;

 private:
  std::vector<std::size_t> legs_;
  std::size_t dim_ = 0;
  std::vector<Poly> num_;
  Poly den_{1};
};

// m acts on the listed legs (in its own leg order) of the tensor product with the given leg dims.
RFMatrix embed(const RFMatrix& m, const std::vector<std::size_t>& at, const std::vector<std::size_t>& all_legs);

// Fast pre-check: compares both sides at a few random rational points where the denominators do not vanish.
bool agree_at_random_points(const RFMatrix& a, const RFMatrix& b, Rng& rng, int points = 3);

}  // namespace sqv
