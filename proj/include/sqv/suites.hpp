#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sqv {

// Size caps for the property batteries.
struct Caps {
  std::size_t max_rank = 4;        // Weyl sweep: ranks 1..max_rank
  long max_dim = 4;                // Weyl sweep: entries 0..max_dim
  std::size_t partition_rank = 5;  // partition grid: n <= partition_rank
  long max_weight = 80;            // Kostka enumeration cap
  std::size_t samples = 100;       // isometries per invariance fixture
  std::size_t adjoint_instances = 500;

  static Caps full() { return Caps{}; }
  static Caps small();
  // "full", "small", or a comma list such as "rank=3,dim=2,prank=4,weight=12,samples=20,adjoint=50".
  // Throws std::invalid_argument on unknown keys or non-positive values.
  static Caps parse(const std::string& spec);
  std::string str() const;
};

struct CheckResult {
  std::string name;
  std::size_t passed = 0, total = 0;
  bool informational = false;  // reported, not part of the verdict
  std::string first_failure;
  bool ok() const { return total > 0 && passed == total; }
};

struct SuiteReport {
  std::string name;
  int criterion = 0;
  unsigned long long seed = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;
  double time_limit = 0;
  bool checks_ok() const;
  bool in_time() const { return seconds < time_limit; }
  bool passed() const { return checks_ok() && in_time(); }
};

// Suite names in criterion order: weyl, adjoint, tau, reflection, zw, maffei, partitions, models, kmatrix,
// invariance.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

SuiteReport run_weyl(unsigned long long seed, const Caps& caps);
SuiteReport run_adjoint(unsigned long long seed, const Caps& caps);
SuiteReport run_tau(unsigned long long seed, const Caps& caps);
SuiteReport run_reflection(unsigned long long seed, const Caps& caps);
SuiteReport run_zw(unsigned long long seed, const Caps& caps);
SuiteReport run_maffei(unsigned long long seed, const Caps& caps);
SuiteReport run_partitions(unsigned long long seed, const Caps& caps);
SuiteReport run_models(unsigned long long seed, const Caps& caps);
SuiteReport run_kmatrix(unsigned long long seed, const Caps& caps);
SuiteReport run_invariance(unsigned long long seed, const Caps& caps);

// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, unsigned long long seed, const Caps& caps);

// Runs the named suites, concurrently when more than one thread is available; the result is in input order.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, unsigned long long seed, const Caps& caps);

// Wall-clock figures are left out unless timings is set, so reports repeat exactly.
std::string format_text(const SuiteReport& r, bool timings = true);

}  // namespace sqv
