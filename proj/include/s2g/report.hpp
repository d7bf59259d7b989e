#pragma once

#include <algorithm>
#include <vector>

namespace s2g {

inline const char* kVersion = "1.0.0";
inline const char* kReportSchema = "string2g-report/1";

// Residual population summary used by every CLI check.
struct Stats {
  double max = 0.0, mean = 0.0, p99 = 0.0;
  int n = 0;
};

inline Stats make_stats(std::vector<double> v) {
  Stats s;
  s.n = static_cast<int>(v.size());
  if (v.empty()) return s;
  std::sort(v.begin(), v.end());
  s.max = v.back();
  double acc = 0.0;
  for (double x : v) acc += x;
  s.mean = acc / static_cast<double>(v.size());
  std::size_t idx = static_cast<std::size_t>(0.99 * static_cast<double>(v.size() - 1) + 0.5);
  s.p99 = v[std::min(idx, v.size() - 1)];
  return s;
}

}  // namespace s2g
