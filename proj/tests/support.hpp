#pragma once

// Generators and brute-force oracles shared by the unit and acceptance tests.
// Oracles here deliberately avoid the library's algorithms (no gauss_sqrt,
// no isqrt) so they can check them.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gsq/gauss.hpp"

namespace gsq::testing {

inline GaussInt random_gauss(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return {d(rng), d(rng)};
}

inline GaussInt random_nonzero_gauss(std::mt19937_64& rng, long bound) {
  for (;;) {
    GaussInt z = random_gauss(rng, bound);
    if (!z.is_zero()) return z;
  }
}

/// All Gaussian integers with 0 < norm <= max_norm, one per {z, -z} pair
/// (re > 0, or re == 0 and im > 0).
inline std::vector<GaussInt> half_plane_points(long max_norm) {
  std::vector<GaussInt> out;
  for (long a = 0; a * a <= max_norm; ++a) {
    for (long b = -max_norm; b <= max_norm; ++b) {
      if (a * a + b * b == 0 || a * a + b * b > max_norm) continue;
      if (a == 0 && b < 0) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

/// Scan every g with |g|^2 <= |z| for g*g == z; the result is sign-normalized.
inline std::optional<GaussInt> brute_force_sqrt(const GaussInt& z) {
  // |g|^2 = |z|, so |g|^2 <= ceil(sqrt(norm(z))) and |re|, |im| <= that root.
  long bound = static_cast<long>(std::ceil(std::sqrt(norm(z).get_d()))) + 1;
  long side = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(bound))));
  for (long a = 0; a <= side; ++a) {
    for (long b = -side; b <= side; ++b) {
      if (a * a + b * b > bound) continue;
      if (a == 0 && b < 0) continue;
      GaussInt g(a, b);
      if (g * g == z) return g;
    }
  }
  return std::nullopt;
}

}  // namespace gsq::testing
