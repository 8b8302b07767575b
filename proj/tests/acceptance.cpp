#include "sqv/suites.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

// One PASS/FAIL line per acceptance criterion, full caps.
int main(int argc, char** argv) {
  unsigned long long seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  sqv::Caps caps = sqv::Caps::full();
  std::cout << "# acceptance seed=" << seed << " caps=" << caps.str() << "\n";
  std::vector<sqv::SuiteReport> reports;
  bool all = true;
  for (const auto& name : sqv::suite_names()) {
    sqv::SuiteReport r = sqv::run_suite(name, seed, caps);
    std::cout << std::fixed << std::setprecision(2) << "criterion " << std::setw(2) << r.criterion << " "
              << std::left << std::setw(11) << r.name << std::right << (r.passed() ? "PASS" : "FAIL") << "  ("
              << r.seconds << " s, limit " << r.time_limit << " s)" << std::endl;
    all = all && r.passed();
    reports.push_back(std::move(r));
  }
  for (const auto& r : reports) {
    if (r.passed()) continue;
    std::cout << "\n" << sqv::format_text(r);
  }
  return all ? 0 : 1;
}
