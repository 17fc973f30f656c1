#pragma once

// Deliberately naive reference computations, written independently of the
// library kernels.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rado/coloring.hpp"
#include "rado/counting.hpp"
#include "rado/density.hpp"
#include "rado/rational.hpp"

namespace oracle {

struct Counts {
  std::int64_t mono = 0;
  std::int64_t total = 0;
};

/// Triple-nested loop over (x, y, z) in [1, n]^3.
inline Counts naive_counts(const rado::Coloring& c, int a) {
  const int n = c.n();
  Counts out;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      if (a == 1 && x > y) continue;
      for (int z = 1; z <= n; ++z) {
        if (x + a * y != z) continue;
        ++out.total;
        if (c.at(x) == c.at(y) && c.at(y) == c.at(z)) ++out.mono;
      }
    }
  return out;
}

struct Categories {
  std::int64_t divisible = 0, lower = 0, upper = 0;
};

/// Pair categories straight from their definitions over all ordered pairs.
inline Categories naive_categories(const rado::Coloring& c, int a) {
  const int n = c.n();
  Categories out;
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      if (c.at(p) == c.at(q)) continue;
      if (p < q && (q - p) % a == 0) ++out.divisible;
      if (q - a * p >= 1) ++out.lower;
      if (q + a * p <= n) ++out.upper;
    }
  return out;
}

/// Each non-monochromatic triple contributes its two bichromatic pairs.
inline std::int64_t bichromatic_role_pairs(const rado::Coloring& c, int a) {
  std::int64_t pairs = 0;
  for (int y = 1; y <= c.n(); ++y)
    for (int x = 1; x + a * y <= c.n(); ++x) {
      const int z = x + a * y;
      pairs += (c.at(x) != c.at(z)) + (c.at(y) != c.at(z)) + (c.at(x) != c.at(y));
    }
  return pairs;
}

inline rado::Coloring random_coloring(std::mt19937_64& rng, int n, int r) {
  std::uniform_int_distribution<int> pick(0, r - 1);
  std::vector<rado::Color> colors(static_cast<std::size_t>(n));
  for (auto& col : colors) col = static_cast<rado::Color>(pick(rng));
  return rado::Coloring(std::move(colors), r);
}

/// Coloring of [1, m * sum(units)] whose k-th block has m * units[k] points.
inline rado::Coloring scaled_blocks(const std::vector<rado::Color>& colors, const std::vector<std::int64_t>& units,
                                    std::int64_t m, int r) {
  std::vector<rado::Color> out;
  for (std::size_t k = 0; k < units.size(); ++k) out.insert(out.end(), static_cast<std::size_t>(m * units[k]), colors[k]);
  return rado::Coloring(std::move(out), r);
}

/// Leading coefficient of the monochromatic count of a block pattern, from
/// exact counts alone. With integer block sizes `units` scaled by m = P*k,
/// the count is a lattice-point count of polygons whose vertices become
/// integral once P clears their denominators, hence a polynomial in k of
/// degree 2. Three samples fix it; `consistent` reports whether a fourth
/// agrees. Returns the n^2 coefficient.
inline rado::BigRational density_by_interpolation(const std::vector<rado::Color>& colors,
                                                  const std::vector<std::int64_t>& units, int r, int a,
                                                  std::int64_t period, bool& consistent) {
  const std::int64_t total = std::accumulate(units.begin(), units.end(), std::int64_t{0});
  rado::BigRational f[4];
  for (int k = 1; k <= 4; ++k)
    f[k - 1] = rado::BigRational(rado::count_triples(scaled_blocks(colors, units, period * k, r), a).mono);
  // second difference of a quadratic is 2*c2
  const rado::BigRational d2 = f[2] - rado::BigRational(2) * f[1] + f[0];
  const rado::BigRational d2b = f[3] - rado::BigRational(2) * f[2] + f[1];
  consistent = d2 == d2b;
  const rado::BigRational n_per_k(period * total);
  return d2 / rado::BigRational(2) / (n_per_k * n_per_k);
}

}  // namespace oracle
