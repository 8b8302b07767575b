#include "sqv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sqv {

namespace {

bool valid_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Q parse_rational(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) throw std::invalid_argument("bad rational: " + s);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Q q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Q random_rational(Rng& rng, int range, int den) {
  std::uniform_int_distribution<int> num_dist(-range, range);
  std::uniform_int_distribution<int> den_dist(1, den < 1 ? 1 : den);
  Q q(num_dist(rng), den_dist(rng));
  q.canonicalize();
  return q;
}

Q random_nonzero_rational(Rng& rng, int range, int den) {
  for (;;) {
    Q q = random_rational(rng, range < 1 ? 1 : range, den);
    if (sgn(q) != 0) return q;
  }
}

}  // namespace sqv
