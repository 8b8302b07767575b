#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sqv {

// Weakly decreasing positive integers. Zero parts are dropped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  // exps[k] is the multiplicity of the part k+1, i.e. 1^{exps[0]} 2^{exps[1]} ...
  static Partition from_exponents(const std::vector<long>& exps);

  const std::vector<long>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  long weight() const;
  long largest() const { return parts_.empty() ? 0 : parts_.front(); }
  // Multiplicity of each part size 1..largest().
  std::vector<long> exponents() const;
  bool empty() const { return parts_.empty(); }

  std::string str() const;
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<long> parts_;
};

Partition transpose(const Partition& p);
// Dominance order: a >= b.
bool dominates(const Partition& a, const Partition& b);
// Removes the first column (every part minus one).
Partition remove_first_column(const Partition& p);
// Removes the first k rows (the k largest parts).
Partition remove_first_rows(const Partition& p, std::size_t k);
std::vector<Partition> partitions_of(long n);

// Number of semistandard tableaux of shape lambda and content mu.
// Throws std::length_error when |lambda| exceeds cap.
unsigned long long kostka(const Partition& lambda, const std::vector<long>& mu, long cap = 20);
unsigned long long kostka(const Partition& lambda, const Partition& mu, long cap = 20);
// Reference count by cell-by-cell filling; slow, used as an oracle.
unsigned long long kostka_bruteforce(const Partition& lambda, const std::vector<long>& mu);

}  // namespace sqv
