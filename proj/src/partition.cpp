#include "sqv/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sqv {

Partition::Partition(std::vector<long> parts) {
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_exponents(const std::vector<long>& exps) {
  std::vector<long> parts;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] < 0) throw std::invalid_argument("negative exponent");
    for (long m = 0; m < exps[k]; ++m) parts.push_back(static_cast<long>(k + 1));
  }
  return Partition(parts);
}

long Partition::weight() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

std::vector<long> Partition::exponents() const {
  std::vector<long> e(static_cast<std::size_t>(largest()), 0);
  for (long p : parts_) ++e[static_cast<std::size_t>(p - 1)];
  return e;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
  os << ")";
  return os.str();
}

Partition transpose(const Partition& p) {
  std::vector<long> t(static_cast<std::size_t>(p.largest()), 0);
  for (long part : p.parts())
    for (long c = 0; c < part; ++c) ++t[static_cast<std::size_t>(c)];
  return Partition(t);
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return false;
  long sa = 0, sb = 0;
  std::size_t n = std::max(a.length(), b.length());
  for (std::size_t k = 0; k < n; ++k) {
    sa += k < a.length() ? a.parts()[k] : 0;
    sb += k < b.length() ? b.parts()[k] : 0;
    if (sa < sb) return false;
  }
  return true;
}

Partition remove_first_column(const Partition& p) {
  std::vector<long> r;
  for (long part : p.parts()) r.push_back(part - 1);
  return Partition(r);
}

Partition remove_first_rows(const Partition& p, std::size_t k) {
  if (k > p.length()) throw std::invalid_argument("cannot remove more rows than the partition has");
  return Partition(std::vector<long>(p.parts().begin() + static_cast<long>(k), p.parts().end()));
}

std::vector<Partition> partitions_of(long n) {
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long rest, long maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

// Shapes nu inside lam with lam/nu a horizontal strip of size k.
void horizontal_strips(const std::vector<long>& lam, long k, std::size_t row, std::vector<long>& nu,
                       std::vector<std::vector<long>>& out) {
  if (row == lam.size()) {
    if (k == 0) out.push_back(nu);
    return;
  }
  long lower = row + 1 < lam.size() ? lam[row + 1] : 0;
  for (long take = 0; take <= k && lam[row] - take >= lower; ++take) {
    nu[row] = lam[row] - take;
    horizontal_strips(lam, k - take, row + 1, nu, out);
  }
  nu[row] = lam[row];
}

unsigned long long strip_count(const std::vector<long>& lam, const std::vector<long>& mu, std::size_t upto,
                               std::map<std::pair<std::vector<long>, std::size_t>, unsigned long long>& memo) {
  if (upto == 0) {
    for (long p : lam)
      if (p != 0) return 0;
    return 1;
  }
  auto key = std::make_pair(lam, upto);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<long>> nus;
  std::vector<long> nu = lam;
  horizontal_strips(lam, mu[upto - 1], 0, nu, nus);
  unsigned long long total = 0;
  for (const auto& n : nus) total += strip_count(n, mu, upto - 1, memo);
  memo[key] = total;
  return total;
}

}  // namespace

unsigned long long kostka(const Partition& lambda, const std::vector<long>& mu, long cap) {
  if (lambda.weight() > cap) throw std::length_error("Kostka size cap exceeded");
  long s = 0;
  for (long m : mu) {
    if (m < 0) throw std::invalid_argument("content entries must be nonnegative");
    s += m;
  }
  if (s != lambda.weight()) return 0;
  // K_{lambda,mu} is symmetric in the order of mu and vanishes unless lambda dominates sort(mu).
  std::vector<long> content;
  for (long m : mu)
    if (m > 0) content.push_back(m);
  std::sort(content.begin(), content.end(), std::greater<long>());
  if (!dominates(lambda, Partition(content))) return 0;
  std::reverse(content.begin(), content.end());
  std::map<std::pair<std::vector<long>, std::size_t>, unsigned long long> memo;
  return strip_count(lambda.parts(), content, content.size(), memo);
}

unsigned long long kostka(const Partition& lambda, const Partition& mu, long cap) {
  return kostka(lambda, mu.parts(), cap);
}

unsigned long long kostka_bruteforce(const Partition& lambda, const std::vector<long>& mu) {
  long s = 0;
  for (long m : mu) s += m;
  if (s != lambda.weight()) return 0;
  const auto& rows = lambda.parts();
  std::vector<std::vector<long>> t(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) t[r].assign(static_cast<std::size_t>(rows[r]), 0);
  std::vector<long> left = mu;
  unsigned long long count = 0;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == rows.size()) {
      ++count;
      return;
    }
    if (c == t[r].size()) {
      fill(r + 1, 0);
      return;
    }
    for (long val = 1; val <= static_cast<long>(mu.size()); ++val) {
      if (left[static_cast<std::size_t>(val - 1)] == 0) continue;
      if (c > 0 && t[r][c - 1] > val) continue;
      if (r > 0 && t[r - 1][c] >= val) continue;
      t[r][c] = val;
      --left[static_cast<std::size_t>(val - 1)];
      fill(r, c + 1);
      ++left[static_cast<std::size_t>(val - 1)];
    }
    t[r][c] = 0;
  };
  fill(0, 0);
  return count;
}

}  // namespace sqv
