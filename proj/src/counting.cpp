#include "rado/counting.hpp"

#include <algorithm>

#include "rado/errors.hpp"
#include "rado/parallel.hpp"

namespace rado {

void require_step(int a) {
  if (a < 1) throw InvalidArgument("step a must be >= 1, got " + std::to_string(a));
}

std::int64_t total_triples(int n, int a) {
  require_step(a);
  std::int64_t total = 0;
  if (a == 1) {
    for (std::int64_t x = 1; 2 * x <= n; ++x) total += n - 2 * x + 1;  // y in [x, n-x]
  } else {
    for (std::int64_t y = 1; 1 + a * y <= n; ++y) total += n - a * y;
  }
  return total;
}

namespace {

// Monochromatic solutions whose middle element is y.
inline std::int64_t mono_for_y(const Color* c, int n, int a, int y) {
  std::int64_t m = 0;
  const Color cy = c[y];
  if (a == 1) {
    for (int x = 1; x <= y && x + y <= n; ++x) m += (c[x] == cy) & (c[x + y] == cy);
  } else {
    const int shift = a * y;
    for (int x = 1; x + shift <= n; ++x) m += (c[x] == cy) & (c[x + shift] == cy);
  }
  return m;
}

std::vector<Color> one_based(const Coloring& coloring) {
  std::vector<Color> c(static_cast<std::size_t>(coloring.n()) + 1, 0);
  std::copy(coloring.colors().begin(), coloring.colors().end(), c.begin() + 1);
  return c;
}

}  // namespace

TripleCounts count_triples(const Coloring& coloring, int a, int threads) {
  require_step(a);
  const int n = coloring.n();
  const std::vector<Color> c = one_based(coloring);
  const Color* cp = c.data();
  std::int64_t mono = 0;
#pragma omp parallel for reduction(+ : mono) schedule(dynamic, 8) num_threads(resolve_threads(threads))
  for (int y = 1; y <= n; ++y) mono += mono_for_y(cp, n, a, y);
  const std::int64_t total = total_triples(n, a);
  return {mono, total - mono, total};
}

TripleCounts count_triples_serial(const Coloring& coloring, int a) {
  require_step(a);
  const int n = coloring.n();
  const std::vector<Color> c = one_based(coloring);
  std::int64_t mono = 0;
  for (int y = 1; y <= n; ++y) mono += mono_for_y(c.data(), n, a, y);
  const std::int64_t total = total_triples(n, a);
  return {mono, total - mono, total};
}

namespace {

void require_two_colors(const Coloring& coloring, int a) {
  if (coloring.r() != 2)
    throw InvalidArgument("pair categories are defined for 2-colorings only (r=" +
                          std::to_string(coloring.r()) + ")");
  if (a < 2) throw InvalidArgument("pair categories need a >= 2, got " + std::to_string(a));
}

}  // namespace

PairCategoryCounts count_pair_categories(const Coloring& coloring, int a, int threads) {
  require_two_colors(coloring, a);
  const int n = coloring.n();
  const std::vector<Color> c = one_based(coloring);
  const Color* cp = c.data();
  std::int64_t divisible = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
#pragma omp parallel for reduction(+ : divisible, lower, upper) schedule(dynamic, 8) \
    num_threads(resolve_threads(threads))
  for (int p = 1; p <= n; ++p) {
    const Color cp0 = cp[p];
    for (int q = p + a; q <= n; q += a) divisible += cp[q] != cp0;
    for (long q = static_cast<long>(a) * p + 1; q <= n; ++q) lower += cp[q] != cp0;
    for (long q = 1; q + static_cast<long>(a) * p <= n; ++q) upper += cp[q] != cp0;
  }
  PairCategoryCounts out;
  out.divisible = divisible;
  out.lower_cat = lower;
  out.upper_cat = upper;
  out.residue_red.assign(static_cast<std::size_t>(a), 0);
  out.residue_blue.assign(static_cast<std::size_t>(a), 0);
  for (int m = 1; m <= n; ++m) {
    const auto idx = static_cast<std::size_t>((m - 1) % a);  // residue (idx + 1) mod a
    (c[static_cast<std::size_t>(m)] == 0 ? out.residue_red : out.residue_blue)[idx] += 1;
  }
  return out;
}

BigRational residue_bound_slack(const Coloring& coloring, int a) {
  require_two_colors(coloring, a);
  const std::int64_t red = coloring.count_of(0);
  const std::int64_t blue = coloring.count_of(1);
  // divisible = sum over residue classes of r_i * b_i
  const PairCategoryCounts cats = count_pair_categories(coloring, a, 1);
  return BigRational(red * blue, a) - BigRational(cats.divisible);
}

BigRational residue_slack_floor(const Coloring& coloring, int a) {
  require_two_colors(coloring, a);
  const int n = coloring.n();
  const std::int64_t smaller = std::min(coloring.count_of(0), coloring.count_of(1));
  const BigRational excess = BigRational((n + a - 1) / a) - BigRational(n, a);
  return -(BigRational(smaller) * excess);
}

IncrementalCounter::IncrementalCounter(Coloring coloring, int a)
    : n_(coloring.n()), a_(a), r_(coloring.r()), colors_(one_based(coloring)) {
  require_step(a);
  mono_ = count_triples_serial(coloring, a).mono;
}

std::int64_t IncrementalCounter::delta(int x, Color c) const {
  const Color old = colors_[static_cast<std::size_t>(x)];
  if (c == old) return 0;
  const Color* k = colors_.data();
  const int n = n_;
  const int a = a_;
  std::int64_t with_old = 0;
  std::int64_t with_new = 0;
  const auto tally = [&](Color u, Color v) {
    with_old += (u == old) & (v == old);
    with_new += (u == c) & (v == c);
  };
  const auto tally1 = [&](Color u) {
    with_old += u == old;
    with_new += u == c;
  };
  if (a == 1) {
    // x as the smaller summand: (x, y), y >= x
    if (2 * x <= n) tally1(k[2 * x]);
    for (int y = x + 1; x + y <= n; ++y) tally(k[y], k[x + y]);
    // x as the larger summand: (u, x), u < x
    for (int u = 1; u < x && u + x <= n; ++u) tally(k[u], k[u + x]);
    // x as the sum: (u, x - u), u <= x - u
    for (int u = 1; 2 * u <= x; ++u) {
      if (2 * u == x)
        tally1(k[u]);
      else
        tally(k[u], k[x - u]);
    }
  } else {
    const long ax = static_cast<long>(a) * x;
    // x in the first slot: (x, y), z = x + a*y
    for (int y = 1; x + static_cast<long>(a) * y <= n; ++y) {
      if (y == x)
        tally1(k[x + a * y]);
      else
        tally(k[y], k[x + a * y]);
    }
    // x in the second slot: (u, x), u != x
    for (long u = 1; u + ax <= n; ++u) {
      if (u == x) continue;
      tally(k[u], k[u + ax]);
    }
    // x as z: (x - a*y, y)
    for (int y = 1; x - static_cast<long>(a) * y >= 1; ++y) tally(k[x - a * y], k[y]);
  }
  return with_new - with_old;
}

Coloring IncrementalCounter::coloring() const {
  return Coloring(std::vector<Color>(colors_.begin() + 1, colors_.end()), r_);
}

std::int64_t IncrementalCounter::recolor(int x, Color c) {
  const std::int64_t d = delta(x, c);
  colors_[static_cast<std::size_t>(x)] = c;
  mono_ += d;
  return d;
}

}  // namespace rado
