// Runs the full reproduction suite and prints one line per criterion.
// Exit status is nonzero when any criterion fails or is skipped.

#include <iostream>

#include "ddf/reproduce.hpp"

int main() {
  ddf::ReproduceConfig cfg;
  const auto report = ddf::reproduce(cfg, [](const ddf::CheckResult& r) { std::cout << ddf::format_line(r) << std::endl; });
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.status == ddf::CheckStatus::Pass;
  std::cout << passed << "/" << report.checks.size() << " criteria passed" << std::endl;
  return report.exit_code();
}
