#include "flatcycle/report.hpp"

#include <cinttypes>
#include <cstdio>

namespace flatcycle {

void RunReport::add(const std::string& name, bool pass, double lhs,
                    double rhs) {
  checks.push_back(ReportCheck{name, pass, lhs, rhs, lhs - rhs});
}

bool RunReport::all_pass() const {
  for (const ReportCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

size_t RunReport::failures() const {
  size_t n = 0;
  for (const ReportCheck& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::string digest(const std::string& payload) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

}  // namespace flatcycle
