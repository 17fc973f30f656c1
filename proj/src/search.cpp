#include "rado/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rado/counting.hpp"
#include "rado/errors.hpp"
#include "rado/parallel.hpp"

namespace rado {

namespace {

void check_search_args(int n, int a, int r) {
  if (n < 1) throw InvalidArgument("n must be positive, got " + std::to_string(n));
  require_step(a);
  if (r < 1 || r > 10) throw InvalidArgument("color count must be in 1..10, got " + std::to_string(r));
}

int prefix_length(int n, int r) { return std::min(n, r == 2 ? 11 : 7); }

// Restricted growth strings: c[0] = 0, c[i] <= max(c[0..i-1]) + 1, all < r.
void canonical_prefixes(int len, int r, std::vector<Color>& cur, int used, std::vector<std::vector<Color>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const int limit = cur.empty() ? 1 : std::min(r, used + 1);
  for (int c = 0; c < limit; ++c) {
    cur.push_back(static_cast<Color>(c));
    canonical_prefixes(len, r, cur, std::max(used, c + 1), out);
    cur.pop_back();
  }
}

std::vector<std::vector<Color>> canonical_prefixes(int len, int r) {
  std::vector<std::vector<Color>> out;
  std::vector<Color> cur;
  canonical_prefixes(len, r, cur, 0, out);
  return out;
}

// Strict order on (count, coloring).
bool better(std::int64_t count, std::span<const Color> colors, std::int64_t best_count,
            const std::vector<Color>& best_colors) {
  if (count != best_count) return count < best_count;
  return std::lexicographical_compare(colors.begin(), colors.end(), best_colors.begin(), best_colors.end());
}

struct Best {
  std::int64_t count = 0;
  std::vector<Color> colors;
  std::uint64_t examined = 0;
};

Best enumerate_suffix(const std::vector<Color>& prefix, int n, int a, int r) {
  std::vector<Color> start(static_cast<std::size_t>(n), 0);
  std::copy(prefix.begin(), prefix.end(), start.begin());
  IncrementalCounter counter(Coloring(start, r), a);
  Best best{counter.mono(), start, 0};
  const int m = n - static_cast<int>(prefix.size());
  std::vector<int> digits(static_cast<std::size_t>(m), 0);
  while (true) {
    // modular r-ary Gray code: the digit that changes is the count of
    // trailing (r-1) digits of the underlying counter
    int j = 0;
    while (j < m && digits[static_cast<std::size_t>(j)] == r - 1) {
      digits[static_cast<std::size_t>(j)] = 0;
      ++j;
    }
    if (j == m) break;
    ++digits[static_cast<std::size_t>(j)];
    const int x = n - j;  // digit 0 drives the last point
    counter.recolor(x, static_cast<Color>((counter.color_at(x) + 1) % r));
    if (counter.mono() <= best.count && better(counter.mono(), counter.view(), best.count, best.colors)) {
      best.count = counter.mono();
      best.colors.assign(counter.view().begin(), counter.view().end());
    }
  }
  return best;
}

double ipow(double base, int e) { return std::pow(base, e); }

}  // namespace

double exact_min_cost(int n, int r) {
  const int p = prefix_length(n, r);
  double prefixes = 0;
  // number of canonical prefixes: sum of Stirling numbers of the second kind
  std::vector<double> row{1.0};  // S(0, 0)
  for (int i = 1; i <= p; ++i) {
    std::vector<double> next(static_cast<std::size_t>(i) + 1, 0.0);
    for (int k = 1; k <= i; ++k) {
      const double stay = k < static_cast<int>(row.size()) ? k * row[static_cast<std::size_t>(k)] : 0.0;
      next[static_cast<std::size_t>(k)] = stay + row[static_cast<std::size_t>(k - 1)];
    }
    row = std::move(next);
  }
  for (int k = 1; k <= std::min(r, p); ++k) prefixes += row[static_cast<std::size_t>(k)];
  return prefixes * ipow(r, n - p) * n;
}

SearchResult exact_min(int n, int a, int r, const SearchOptions& options) {
  check_search_args(n, a, r);
  const double cost = exact_min_cost(n, r);
  if (cost > options.budget) throw BudgetExceeded(cost, options.budget);

  const int p = prefix_length(n, r);
  const std::vector<std::vector<Color>> prefixes = canonical_prefixes(p, r);
  std::vector<Best> results(prefixes.size());
  const auto tasks = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(options.threads))
  for (long t = 0; t < tasks; ++t)
    results[static_cast<std::size_t>(t)] = enumerate_suffix(prefixes[static_cast<std::size_t>(t)], n, a, r);

  const Best* best = &results.front();
  for (const Best& b : results)
    if (better(b.count, b.colors, best->count, best->colors)) best = &b;

  SearchResult out;
  out.n = n;
  out.a = a;
  out.r = r;
  out.min_count = best->count;
  out.witness = Coloring(best->colors, r);
  out.exhaustive = true;
  out.explored = static_cast<std::uint64_t>(prefixes.size()) *
                 static_cast<std::uint64_t>(std::llround(ipow(r, n - p)));
  return out;
}

SearchResult exact_min_reference(int n, int a, int r) {
  check_search_args(n, a, r);
  if (ipow(r, n) > 5e7) throw InvalidArgument("reference enumeration is limited to r^n <= 5e7");
  std::vector<Color> cur(static_cast<std::size_t>(n), 0);
  Best best{count_triples_serial(Coloring(cur, r), a).mono, cur, 0};
  std::uint64_t explored = 1;
  while (true) {
    // lexicographic successor
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == r - 1) cur[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    ++explored;
    const std::int64_t m = count_triples_serial(Coloring(cur, r), a).mono;
    if (m < best.count) best = {m, cur, 0};  // lexicographic order: first hit is the smallest
  }
  SearchResult out;
  out.n = n;
  out.a = a;
  out.r = r;
  out.min_count = best.count;
  out.witness = Coloring(best.colors, r);
  out.exhaustive = true;
  out.explored = explored;
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Best descend(int n, int a, int r, int run, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(run))));
  std::vector<Color> start(static_cast<std::size_t>(n), 0);
  if (run > 0) {
    std::uniform_int_distribution<int> pick(0, r - 1);
    for (Color& c : start) c = static_cast<Color>(pick(rng));
  }
  IncrementalCounter counter(Coloring(start, r), a);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  int plateau_left = 2 * n;
  std::uint64_t examined = 1;
  while (true) {
    std::shuffle(order.begin(), order.end(), rng);
    bool improved = false;
    bool drifted = false;
    for (int x : order) {
      const Color cur = counter.color_at(x);
      for (int k = 1; k < r; ++k) {
        const auto c = static_cast<Color>((cur + k) % r);
        const std::int64_t d = counter.delta(x, c);
        ++examined;
        if (d < 0) {
          counter.recolor(x, c);
          improved = true;
          break;
        }
        if (d == 0 && plateau_left > 0) {
          counter.recolor(x, c);
          --plateau_left;
          drifted = true;
          break;
        }
      }
    }
    if (!improved && !(drifted && plateau_left > 0)) break;
  }
  return {counter.mono(), std::vector<Color>(counter.view().begin(), counter.view().end()), examined};
}

}  // namespace

SearchResult local_search_min(int n, int a, int r, int restarts, std::uint64_t seed, int threads) {
  check_search_args(n, a, r);
  if (restarts < 0) throw InvalidArgument("restarts must be non-negative");
  std::vector<Best> results(static_cast<std::size_t>(restarts) + 1);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(threads))
  for (int run = 0; run <= restarts; ++run) results[static_cast<std::size_t>(run)] = descend(n, a, r, run, seed);

  const Best* best = &results.front();
  for (const Best& b : results)
    if (better(b.count, b.colors, best->count, best->colors)) best = &b;
  SearchResult out;
  out.n = n;
  out.a = a;
  out.r = r;
  out.min_count = best->count;
  out.witness = Coloring(best->colors, r);
  out.exhaustive = false;
  for (const Best& b : results) out.explored += b.examined;
  return out;
}

std::vector<ScanRow> scan_minima(int a, int r, int n_max, const SearchOptions& options) {
  check_search_args(n_max, a, r);
  double cost = 0;
  for (int n = 1; n <= n_max; ++n) cost += exact_min_cost(n, r);
  if (cost > options.budget) throw BudgetExceeded(cost, options.budget);
  SearchOptions per_n = options;
  per_n.budget = cost;
  std::vector<ScanRow> rows;
  for (int n = 1; n <= n_max; ++n) rows.push_back({n, exact_min(n, a, r, per_n).min_count});
  return rows;
}

}  // namespace rado
