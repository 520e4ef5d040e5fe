#pragma once

#include <vector>

namespace commlab::testing {

/// Does x^2 = d (mod p^k) have a solution? Roots modulo p^i are lifted one
/// digit at a time by trying every x + j p^i.
inline bool has_root_mod_prime_power(long d, long p, int k) {
  std::vector<long long> roots;
  for (long x = 0; x < p; ++x)
    if (((x * x - d) % p + p) % p == 0) roots.push_back(x);
  long long mod = p;
  for (int i = 1; i < k && !roots.empty(); ++i) {
    const long long next = mod * p;
    std::vector<long long> lifted;
    for (auto r : roots)
      for (long j = 0; j < p; ++j) {
        const long long x = r + j * mod;
        const __int128 sq = static_cast<__int128>(x) * x - d;
        if (((sq % next) + next) % next == 0) lifted.push_back(x);
      }
    roots = std::move(lifted);
    mod = next;
  }
  return !roots.empty();
}

}  // namespace commlab::testing
