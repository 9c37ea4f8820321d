#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace facering {

// Exact binomial coefficient for the small arguments used throughout
// (n stays well under 70 at desk scale, so long long never overflows).
inline long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace facering
